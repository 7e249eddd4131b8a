#include "motiondual/io.hpp"

#include <cctype>
#include <charconv>
#include <iomanip>
#include <sstream>

#include "motiondual/errors.hpp"

namespace motiondual::io {

namespace {

int parse_int(std::string_view text, std::string_view what) {
  int v = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last) {
    throw ParseError("bad integer '" + std::string(text) + "' in " + std::string(what));
  }
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

json entries_json(const Signature& s) { return json(std::vector<int>(s.entries().begin(), s.entries().end())); }

Signature entries_from(const json& j, int n) { return Signature::validate(j.get<std::vector<int>>(), n); }

json signature_list(const std::vector<Signature>& sigs) {
  json out = json::array();
  for (const auto& s : sigs) out.push_back(entries_json(s));
  return out;
}

std::vector<Signature> signature_list_from(const json& j, int n) {
  std::vector<Signature> out;
  for (const auto& e : j) out.push_back(entries_from(e, n));
  return out;
}

json point_set_json(const PointSet& s) { return json(members(s)); }

PointSet point_set_from(const json& j, std::size_t universe) {
  PointSet s(universe);
  for (const auto& id : j) {
    const auto p = id.get<std::size_t>();
    if (p >= universe) throw ParseError("point id " + std::to_string(p) + " out of range");
    s.set(p);
  }
  return s;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

Signature parse_signature(std::string_view text, int n) {
  text = trim(text);
  std::vector<int> entries;
  if (!text.empty()) {
    std::size_t start = 0;
    while (true) {
      const auto comma = text.find(',', start);
      entries.push_back(parse_int(trim(text.substr(start, comma - start)), "signature"));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }
  return Signature::validate(entries, n);
}

GroupContext parse_group(std::string_view text) {
  text = trim(text);
  if (text.size() < 3 || (text.substr(0, 2) != "so" && text.substr(0, 2) != "SO")) {
    throw ParseError("expected a group name like so5, got '" + std::string(text) + "'");
  }
  const int n = parse_int(text.substr(2), "group name");
  if (n < 1) throw ParseError("group index must be >= 1");
  return GroupContext(n);
}

std::string rational_to_string(const Rational& r) {
  std::string out = std::to_string(r.numerator());
  if (r.denominator() != 1) out += "/" + std::to_string(r.denominator());
  return out;
}

Rational parse_rational(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, "rational"));
  const int den = parse_int(text.substr(slash + 1), "rational");
  if (den == 0) throw ParseError("zero denominator");
  return Rational(parse_int(text.substr(0, slash), "rational"), den);
}

json signature_to_json(const Signature& s) { return {{"n", s.n()}, {"entries", entries_json(s)}}; }

Signature signature_from_json(const json& j) {
  return guarded("signature", [&] { return entries_from(j.at("entries"), j.at("n").get<int>()); });
}

json walk_to_json(const Walk& w) {
  const int n = w.steps.empty() ? 0 : w.steps.front().n();
  return {{"n", n}, {"length", w.length()}, {"steps", signature_list(w.steps)},
          {"witnesses", signature_list(w.witnesses)}};
}

Walk walk_from_json(const json& j) {
  return guarded("walk", [&] {
    const int n = j.at("n").get<int>();
    Walk w;
    if (n == 0) return w;
    w.steps = signature_list_from(j.at("steps"), n);
    w.witnesses = signature_list_from(j.at("witnesses"), n - 1);
    return w;
  });
}

json chain_to_json(const Chain& c) {
  json sets = json::array();
  for (const auto& s : c.sets) sets.push_back(point_set_json(s));
  return {{"length", c.length()}, {"sets", sets}};
}

Chain chain_from_json(const json& j, std::size_t universe) {
  return guarded("chain", [&] {
    Chain c;
    for (const auto& s : j.at("sets")) c.sets.push_back(point_set_from(s, universe));
    return c;
  });
}

json chain_certificate_to_json(const ChainCertificate& c) {
  json out = chain_to_json(c.chain);
  out["n"] = c.n;
  out["bound"] = c.bound;
  out["from"] = entries_json(c.from);
  out["to"] = entries_json(c.to);
  return out;
}

ChainCertificate chain_certificate_from_json(const json& j) {
  return guarded("chain certificate", [&] {
    const int n = j.at("n").get<int>();
    const int bound = j.at("bound").get<int>();
    if (n < 3 || bound < 0) throw ParseError("chain certificate: bad n or bound");
    const auto universe = enumerate(n, bound).size() + enumerate(n - 1, bound).size();
    return ChainCertificate{n, bound, entries_from(j.at("from"), n), entries_from(j.at("to"), n),
                            chain_from_json(j, universe)};
  });
}

json certificate_to_json(const MergeCertificate& c) {
  json walks = json::array();
  for (const auto& w : c.walks) walks.push_back(signature_list(w.steps));
  json witnesses = json::array();
  for (const auto& w : c.walks) witnesses.push_back(signature_list(w.witnesses));
  return {{"n", c.n},
          {"case", c.case_id},
          {"inputs", signature_list(c.inputs)},
          {"containers", signature_list(c.containers)},
          {"walks", walks},
          {"walk_witnesses", witnesses},
          {"targets", signature_list(c.targets)},
          {"witness", c.primal_witness ? entries_json(*c.primal_witness) : json(nullptr)},
          {"claimed_n", c.claimed_n}};
}

MergeCertificate certificate_from_json(const json& j) {
  return guarded("certificate", [&] {
    MergeCertificate c;
    c.n = j.at("n").get<int>();
    if (c.n < 3) throw ParseError("certificate: n must be >= 3");
    c.case_id = j.at("case").get<int>();
    c.inputs = signature_list_from(j.at("inputs"), c.n - 1);
    c.containers = signature_list_from(j.at("containers"), c.n);
    const auto& walks = j.at("walks");
    const json witnesses = j.value("walk_witnesses", json::array());
    for (std::size_t i = 0; i < walks.size(); ++i) {
      Walk w;
      w.steps = signature_list_from(walks[i], c.n);
      if (i < witnesses.size()) w.witnesses = signature_list_from(witnesses[i], c.n - 1);
      c.walks.push_back(std::move(w));
    }
    c.targets = signature_list_from(j.at("targets"), c.n);
    if (!j.at("witness").is_null()) c.primal_witness = entries_from(j.at("witness"), c.n - 1);
    c.claimed_n = j.at("claimed_n").get<std::size_t>();
    return c;
  });
}

json certificate_report_to_json(const CertificateReport& r) {
  return {{"valid", r.valid},
          {"violations", r.violations},
          {"implied_K", rational_to_string(r.implied_k)},
          {"matches_formula", r.matches_formula}};
}

json report_to_json(const ConstantsReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"holds", c.holds}, {"detail", c.detail}});
  return {{"n", r.n},
          {"bound", r.bound ? json(*r.bound) : json(nullptr)},
          {"orc_A", r.orc_A},
          {"D_A", r.D_A},
          {"orc_MA", r.orc_MA},
          {"Ks_MA", rational_to_string(r.Ks_MA)},
          {"K_MA", rational_to_string(r.K_MA)},
          {"K_A", rational_to_string(r.K_A)},
          {"formula_exception", r.formula_exception},
          {"checks", checks},
          {"certificate_refs", r.certificate_refs},
          {"passed", r.passed()}};
}

ConstantsReport report_from_json(const json& j) {
  return guarded("report", [&] {
    ConstantsReport r;
    r.n = j.at("n").get<int>();
    if (!j.at("bound").is_null()) r.bound = j.at("bound").get<int>();
    r.orc_A = j.at("orc_A").get<std::size_t>();
    r.D_A = j.at("D_A").get<std::size_t>();
    r.orc_MA = j.at("orc_MA").get<std::size_t>();
    r.Ks_MA = parse_rational(j.at("Ks_MA").get<std::string>());
    r.K_MA = parse_rational(j.at("K_MA").get<std::string>());
    r.K_A = parse_rational(j.at("K_A").get<std::string>());
    r.formula_exception = j.at("formula_exception").get<bool>();
    for (const auto& c : j.at("checks")) {
      r.checks.push_back({c.at("name").get<std::string>(), c.at("holds").get<bool>(),
                          c.value("detail", std::string())});
    }
    r.certificate_refs = j.at("certificate_refs").get<std::vector<std::string>>();
    return r;
  });
}

json model_to_json(const DualModel& m) {
  const auto& space = m.space();
  json points = json::array();
  for (PointId p = 0; p < space.size(); ++p) {
    points.push_back({{"id", p},
                      {"label", space.label(p)},
                      {"kind", m.is_class(p) ? "class" : "germ"},
                      {"signature", entries_json(m.signature_of(p))},
                      {"closure", point_set_json(space.closure(p))}});
  }
  json edges = json::array();
  for (PointId p = 0; p < space.size(); ++p) {
    for (PointId q : space.neighbors(p)) {
      if (p < q) edges.push_back({p, q});
    }
  }
  return {{"n", m.n()}, {"bound", m.bound()}, {"points", points}, {"inseparable", edges}};
}

FiniteT0Space space_from_json(const json& j) {
  return guarded("model", [&] {
    const auto& points = j.at("points");
    std::vector<std::string> labels;
    std::vector<PointSet> closures;
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (points[i].at("id").get<std::size_t>() != i) throw ParseError("model: point ids must be 0..n-1 in order");
      labels.push_back(points[i].at("label").get<std::string>());
      closures.push_back(point_set_from(points[i].at("closure"), points.size()));
    }
    try {
      return FiniteT0Space(std::move(labels), std::move(closures));
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("model: ") + e.what());
    }
  });
}

json star_graph_to_json(const StarGraph& g) {
  json nodes = json::array();
  for (std::size_t i = 0; i < g.vertices().size(); ++i) {
    const auto& v = g.vertices()[i];
    nodes.push_back({{"id", i},
                     {"kind", v.kind == SubIdeal::Kind::germ ? "germ_ideal" : "line_kernel"},
                     {"sigma", entries_json(v.sigma)}});
  }
  json edges = json::array();
  for (std::size_t a = 0; a < g.adjacency().size(); ++a) {
    for (auto b : g.adjacency()[a]) {
      if (a < b) edges.push_back({a, b});
    }
  }
  return {{"n", g.n()}, {"bound", g.bound()}, {"nodes", nodes}, {"star", edges}, {"D", g.diameter()}};
}

std::string model_to_dot(const DualModel& m) {
  const auto& space = m.space();
  std::ostringstream os;
  os << "graph " << GroupContext(m.n()).name() << "_dual {\n";
  for (PointId p = 0; p < space.size(); ++p) {
    os << "  p" << p << " [label=\"" << dot_escape(space.label(p)) << "\", shape="
       << (m.is_class(p) ? "ellipse" : "box") << "];\n";
  }
  for (PointId p = 0; p < space.size(); ++p) {
    for (PointId q : space.neighbors(p)) {
      if (p < q) os << "  p" << p << " -- p" << q << ";\n";
    }
  }
  for (PointId g : members(m.germ_points())) {
    for (PointId c : members(space.closure(g))) {
      if (c != g) os << "  p" << g << " -- p" << c << " [style=dashed, dir=forward];\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string star_graph_to_dot(const StarGraph& g) {
  std::ostringstream os;
  os << "graph " << GroupContext(g.n()).name() << "_sub {\n";
  for (std::size_t i = 0; i < g.vertices().size(); ++i) {
    const auto& v = g.vertices()[i];
    os << "  i" << i << " [label=\"" << dot_escape(v.to_string()) << "\", shape="
       << (v.kind == SubIdeal::Kind::germ ? "ellipse" : "box") << "];\n";
  }
  for (std::size_t a = 0; a < g.adjacency().size(); ++a) {
    for (auto b : g.adjacency()[a]) {
      if (a < b) os << "  i" << a << " -- i" << b << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string render_table(const std::vector<ConstantsReport>& reports) {
  std::ostringstream os;
  os << std::left << std::setw(5) << "N" << std::setw(6) << "Orc" << std::setw(5) << "D" << std::setw(8)
     << "Orc(M)" << std::setw(8) << "K_s(M)" << std::setw(7) << "K(M)" << "status\n";
  for (const auto& r : reports) {
    std::string status = r.checks.empty() ? "predicted" : (r.passed() ? "ok" : "FAILED");
    if (r.formula_exception) status += " (K(M) quoted; ceil(N/2)/2 does not apply)";
    os << std::setw(5) << r.n << std::setw(6) << r.orc_A << std::setw(5) << r.D_A << std::setw(8) << r.orc_MA
       << std::setw(8) << rational_to_string(r.Ks_MA) << std::setw(7) << rational_to_string(r.K_MA) << status
       << "\n";
    for (const auto& f : r.failures()) os << "     failed: " << f << "\n";
  }
  return os.str();
}

}  // namespace motiondual::io
