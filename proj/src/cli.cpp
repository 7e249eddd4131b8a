#include "motiondual/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "motiondual/chains.hpp"
#include "motiondual/constants.hpp"
#include "motiondual/errors.hpp"
#include "motiondual/io.hpp"
#include "motiondual/primal.hpp"
#include "motiondual/verify.hpp"

namespace motiondual::cli {

namespace {

struct Config {
  int n = 0;
  std::optional<int> bound;
  std::string format = "table";
  std::string output;
  std::string input;
  std::string kind = "dual";
  std::vector<std::string> sigs;
  std::optional<int> n_min;
  std::optional<int> n_max;
  std::uint64_t seed = 1;
  std::optional<unsigned> jobs;
  std::optional<std::size_t> k;
  bool with_chain = false;
};

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

void emit(const Config& c, const std::string& text, std::ostream& out) {
  if (c.output.empty()) {
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
    return;
  }
  std::ofstream f(c.output);
  if (!f) throw UsageError("cannot write " + c.output);
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
  out << "wrote " << c.output << "\n";
}

io::json read_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read " + path);
  try {
    return io::json::parse(f);
  } catch (const io::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void require_n(const Config& c, int min) {
  if (c.n < min) throw UsageError("--n must be >= " + std::to_string(min));
}

int bound_for(const Config& c, std::initializer_list<const Signature*> sigs = {}) {
  int b = c.bound.value_or(default_bound(c.n));
  if (b < 0) throw UsageError("--bound must be >= 0");
  for (const auto* s : sigs) {
    for (int v : s->entries()) b = std::max(b, std::abs(v));
  }
  return b;
}

std::vector<Signature> class_sigs(const Config& c, std::size_t count) {
  if (c.sigs.size() != count) {
    throw UsageError("expected " + std::to_string(count) + " signatures, got " + std::to_string(c.sigs.size()));
  }
  std::vector<Signature> out;
  for (const auto& s : c.sigs) out.push_back(io::parse_signature(s, c.n));
  return out;
}

int cmd_report(const Config& c, std::ostream& out) {
  std::vector<int> ns;
  if (c.n_min || c.n_max) {
    const int lo = c.n_min.value_or(c.n > 0 ? c.n : 2);
    const int hi = c.n_max.value_or(lo);
    if (lo < 2 || hi < lo) throw UsageError("need 2 <= --n-min <= --n-max");
    for (int n = lo; n <= hi; ++n) ns.push_back(n);
  } else {
    require_n(c, 2);
    ns.push_back(c.n);
  }
  if (c.format == "dot") throw UsageError("report supports table or json");
  std::vector<ConstantsReport> reports;
  for (int n : ns) {
    if (n == 2) {
      reports.push_back(predict(2));
    } else {
      Config per = c;
      per.n = n;
      reports.push_back(cross_check(n, std::max(1, bound_for(per))));
    }
  }
  if (c.format == "json") {
    io::json j = io::json::array();
    for (const auto& r : reports) j.push_back(io::report_to_json(r));
    emit(c, (reports.size() == 1 ? j[0] : j).dump(2), out);
  } else {
    emit(c, io::render_table(reports), out);
  }
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const ConstantsReport& r) { return r.passed(); });
  return ok ? exit_ok : exit_failed;
}

int cmd_graph(const Config& c, std::ostream& out) {
  require_n(c, 3);
  const int bound = bound_for(c);
  const bool json = c.format == "json";
  if (!json && c.format != "dot" && c.format != "table") throw UsageError("graph supports dot or json");
  if (c.kind == "dual") {
    const auto model = DualModel::build(c.n, bound);
    emit(c, json ? io::model_to_json(model).dump(2) : io::model_to_dot(model), out);
  } else {
    const StarGraph g(c.n, bound);
    emit(c, json ? io::star_graph_to_json(g).dump(2) : io::star_graph_to_dot(g), out);
  }
  return exit_ok;
}

int cmd_distance(const Config& c, std::ostream& out) {
  require_n(c, 3);
  const auto sigs = class_sigs(c, 2);
  const int bound = bound_for(c, {&sigs[0], &sigs[1]});
  const auto model = DualModel::build(c.n, bound);
  const PointId x = model.class_point(sigs[0]);
  const PointId y = model.class_point(sigs[1]);
  const Distance d = distance(model, x, y, true);
  const Walk w = walk(sigs[0], sigs[1]);
  if (first_invalid_step(w)) throw CertificationFailure("walk certificate failed to validate");
  std::optional<std::size_t> lower;
  if (c.with_chain && d && *d > 0) {
    const auto chain = find_admissible_chain(model, model.space().singleton(x), model.space().singleton(y), *d, true);
    lower = chain_lower_bound(model.space(), chain, x, y, model.class_points());
  }
  if (c.format == "json") {
    io::json j{{"n", c.n}, {"bound", bound}, {"from", sigs[0].to_string()}, {"to", sigs[1].to_string()},
               {"distance", d ? io::json(*d) : io::json(nullptr)}, {"walk_upper_bound", w.length()}};
    if (c.with_chain) j["chain_lower_bound"] = lower ? io::json(*lower) : io::json(d ? 0 : -1);
    emit(c, j.dump(2), out);
  } else {
    std::ostringstream os;
    os << (d ? std::to_string(*d) : std::string("inf")) << "\n";
    os << "walk upper bound: " << w.length() << "\n";
    if (c.with_chain) os << "chain lower bound: " << (lower ? std::to_string(*lower) : std::string("0")) << "\n";
    emit(c, os.str(), out);
  }
  if (d && (*d > w.length() || (lower && *lower > *d))) return exit_failed;
  return exit_ok;
}

int cmd_walk(const Config& c, std::ostream& out) {
  require_n(c, 3);
  const auto sigs = class_sigs(c, 2);
  const Walk w = walk(sigs[0], sigs[1]);
  const auto bad = first_invalid_step(w);
  if (c.format == "table") {
    std::ostringstream os;
    for (std::size_t i = 0; i < w.steps.size(); ++i) {
      os << w.steps[i].to_string();
      if (i < w.witnesses.size()) os << "  ~ via " << w.witnesses[i].to_string();
      os << "\n";
    }
    os << "length " << w.length() << "\n";
    emit(c, os.str(), out);
  } else {
    emit(c, io::walk_to_json(w).dump(2), out);
  }
  return bad ? exit_failed : exit_ok;
}

int verify_chain_file(const Config& c, std::ostream& out) {
  const auto cert = io::chain_certificate_from_json(read_json(c.input));
  const auto model = DualModel::build(cert.n, cert.bound);
  const PointId x = model.class_point(cert.from);
  const PointId y = model.class_point(cert.to);
  const auto report = validate_chain(model.space(), cert.chain);
  if (!report.valid) {
    out << "invalid chain: " << report.violations.front() << "\n";
    return exit_failed;
  }
  try {
    out << "chain certifies d >= " << chain_lower_bound(model.space(), cert.chain, x, y, model.class_points())
        << "\n";
  } catch (const CertificationFailure& e) {
    out << "chain bound violated: " << e.what() << "\n";
    return exit_failed;
  }
  return exit_ok;
}

int cmd_chain(const Config& c, std::ostream& out) {
  if (!c.input.empty()) return verify_chain_file(c, out);
  require_n(c, 3);
  const auto sigs = class_sigs(c, 2);
  const int bound = bound_for(c, {&sigs[0], &sigs[1]});
  const auto model = DualModel::build(c.n, bound);
  const PointId x = model.class_point(sigs[0]);
  const PointId y = model.class_point(sigs[1]);
  const Distance d = distance(model, x, y, true);
  if (!d || *d == 0) throw UsageError("chain needs two distinct points");
  const std::size_t k = c.k.value_or(*d);
  const auto chain = find_admissible_chain(model, model.space().singleton(x), model.space().singleton(y), k, true);
  chain_lower_bound(model.space(), chain, x, y, model.class_points());
  const io::ChainCertificate cert{c.n, bound, sigs[0], sigs[1], chain};
  emit(c, io::chain_certificate_to_json(cert).dump(2), out);
  return exit_ok;
}

int cmd_certify(const Config& c, std::ostream& out) {
  MergeCertificate cert;
  if (!c.input.empty()) {
    cert = io::certificate_from_json(read_json(c.input));
  } else {
    require_n(c, 3);
    if (c.sigs.size() != 3) throw UsageError("certify needs three so(n-1) signatures");
    std::vector<Signature> in;
    for (const auto& s : c.sigs) in.push_back(io::parse_signature(s, c.n - 1));
    cert = merge_certificate(c.n, in[0], in[1], in[2]);
  }
  const auto report = validate_certificate(cert);
  if (c.format == "json" || !c.output.empty()) {
    io::json j = io::certificate_to_json(cert);
    j["report"] = io::certificate_report_to_json(report);
    emit(c, j.dump(2), out);
  }
  if (c.format != "json") {
    out << "case N mod 4 = " << cert.case_id << ", walk length " << cert.claimed_n << ", "
        << (cert.triple_target() ? "primal triple" : "single target") << "\n";
    out << "implied K(M) bound " << io::rational_to_string(report.implied_k) << "\n";
    out << (report.valid ? "valid" : "INVALID") << "\n";
    for (const auto& v : report.violations) out << "  " << v << "\n";
  }
  return report.valid ? exit_ok : exit_failed;
}

int cmd_verify(const Config& c, std::ostream& out) {
  VerifyOptions o;
  o.n_min = c.n_min.value_or(3);
  o.n_max = c.n_max.value_or(12);
  o.bound = c.bound;
  o.seed = c.seed;
  if (c.jobs) {
    o.jobs = *c.jobs;
  } else if (const char* env = std::getenv("MOTIONDUAL_JOBS")) {
    try {
      o.jobs = static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      throw UsageError("MOTIONDUAL_JOBS must be a positive integer");
    }
  }
  if (o.jobs == 0) throw UsageError("jobs must be >= 1");
  const auto summary = run_verify(o);
  emit(c, format_summary(summary), out);
  return summary.passed() ? exit_ok : exit_failed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of the dual of the motion groups R^n x| SO(n)", "motiondual"};
  app.require_subcommand(1);
  Config c;
  const auto formats = CLI::IsMember({"table", "json", "dot"});

  auto add_common = [&](CLI::App* sub, bool needs_n) {
    auto* opt = sub->add_option("--n", c.n, "group index N");
    if (needs_n) opt->required();
    sub->add_option("--bound", c.bound, "largest first entry in the truncation");
    sub->add_option("--format", c.format, "table, json or dot")->check(formats);
    sub->add_option("--output", c.output, "write the result to this file");
  };

  auto* report = app.add_subcommand("report", "constants table for N (or --n-min..--n-max)");
  add_common(report, false);
  report->add_option("--n-min", c.n_min);
  report->add_option("--n-max", c.n_max);

  auto* graph = app.add_subcommand("graph", "export the ~ graph (dual) or the * graph (sub)");
  add_common(graph, true);
  graph->add_option("--kind", c.kind)->check(CLI::IsMember({"dual", "sub"}));

  auto* dist = app.add_subcommand("distance", "class-restricted distance between two signatures");
  add_common(dist, true);
  dist->add_option("signatures", c.sigs, "two so(N) signatures such as 1,0");
  dist->add_flag("--chain", c.with_chain, "also build a chain lower bound");

  auto* wk = app.add_subcommand("walk", "explicit max-merge walk between two signatures");
  add_common(wk, true);
  wk->add_option("signatures", c.sigs);

  auto* ch = app.add_subcommand("chain", "admissible chain between two signatures, or re-check --input");
  add_common(ch, false);
  ch->add_option("signatures", c.sigs);
  ch->add_option("--k", c.k, "chain length (default: the distance)");
  ch->add_option("--input", c.input, "chain certificate to re-verify");

  auto* cert = app.add_subcommand("certify", "merge certificate for three so(N-1) signatures, or re-check --input");
  add_common(cert, false);
  cert->add_option("signatures", c.sigs);
  cert->add_option("--input", c.input, "certificate to re-validate");

  auto* ver = app.add_subcommand("verify", "run the full verification sweep");
  ver->add_option("--n-min", c.n_min);
  ver->add_option("--n-max", c.n_max);
  ver->add_option("--bound", c.bound);
  ver->add_option("--seed", c.seed);
  ver->add_option("--jobs", c.jobs, "worker threads (default MOTIONDUAL_JOBS or 1)");
  ver->add_option("--output", c.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (report->parsed()) return cmd_report(c, out);
    if (graph->parsed()) return cmd_graph(c, out);
    if (dist->parsed()) return cmd_distance(c, out);
    if (wk->parsed()) return cmd_walk(c, out);
    if (ch->parsed()) return cmd_chain(c, out);
    if (cert->parsed()) return cmd_certify(c, out);
    if (ver->parsed()) return cmd_verify(c, out);
  } catch (const CertificationFailure& e) {
    err << "verification failed: " << e.what() << "\n";
    return exit_failed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace motiondual::cli
