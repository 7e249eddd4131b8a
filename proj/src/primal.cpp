#include "motiondual/primal.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <deque>

#include "motiondual/errors.hpp"

namespace motiondual {

std::string SubIdeal::to_string() const {
  return (kind == Kind::germ ? "germ:" : "line:") + sigma.to_string();
}

std::vector<SubIdeal> sub_ideals(int n, int bound) {
  if (n < 3) throw PreconditionViolated("sub_ideals: n must be >= 3");
  const auto sigmas = enumerate(n - 1, bound);
  std::vector<SubIdeal> out;
  for (const auto& s : sigmas) out.push_back({SubIdeal::Kind::germ, s});
  for (const auto& s : sigmas) out.push_back({SubIdeal::Kind::line, s});
  return out;
}

std::vector<Signature> hull(const SubIdeal& ideal, int bound) {
  std::vector<Signature> out;
  if (ideal.kind == SubIdeal::Kind::line) return out;
  for (auto& pi : enumerate(ideal.n(), bound)) {
    if (restricts_to(pi, ideal.sigma)) out.push_back(std::move(pi));
  }
  return out;
}

namespace {

bool hull_subset(const SubIdeal& small, const SubIdeal& big, int bound) {
  const auto a = hull(small, bound);
  const auto b = hull(big, bound);
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

void require_germ(const SubIdeal& i, const char* op) {
  if (i.kind != SubIdeal::Kind::germ) {
    throw PreconditionViolated(std::string(op) + ": " + i.to_string() + " is not a germ ideal");
  }
}

}  // namespace

Containment contains_ideal(const SubIdeal& i, const SubIdeal& j, int bound) {
  require_germ(i, "contains_ideal");
  require_germ(j, "contains_ideal");
  if (i.sigma.context() != j.sigma.context()) throw ContextMismatch("contains_ideal: context mismatch");
  Containment c;
  c.contains = hull_subset(j, i, bound);
  c.stable = c.contains == hull_subset(j, i, bound + 1);
  return c;
}

bool star_adjacent(const SubIdeal& i, const SubIdeal& j) {
  if (i.sigma.context() != j.sigma.context()) throw ContextMismatch("star_adjacent: context mismatch");
  if (i.kind == SubIdeal::Kind::line || j.kind == SubIdeal::Kind::line) return i == j;
  const std::array<Signature, 2> pair{i.sigma, j.sigma};
  return common_extension(pair).has_value();
}

StarGraph::StarGraph(int n, int bound)
    : n_(n), bound_(bound), vertices_(sub_ideals(n, bound)), adjacency_(vertices_.size()) {
  for (std::size_t a = 0; a < vertices_.size(); ++a) {
    for (std::size_t b = a + 1; b < vertices_.size(); ++b) {
      if (star_adjacent(vertices_[a], vertices_[b])) {
        adjacency_[a].push_back(b);
        adjacency_[b].push_back(a);
      }
    }
  }
}

std::size_t StarGraph::index_of(const SubIdeal& ideal) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), ideal);
  if (it == vertices_.end()) {
    throw UnknownPoint("no sub-ideal " + ideal.to_string() + " with bound " + std::to_string(bound_));
  }
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::vector<Distance> StarGraph::bfs(std::size_t source) const {
  std::vector<Distance> dist(vertices_.size());
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const auto u = queue.front();
    queue.pop_front();
    for (auto v : adjacency_[u]) {
      if (dist[v]) continue;
      dist[v] = *dist[u] + 1;
      queue.push_back(v);
    }
  }
  return dist;
}

Distance StarGraph::distance(std::size_t a, std::size_t b) const {
  if (a >= vertices_.size() || b >= vertices_.size()) throw UnknownPoint("star graph index out of range");
  return bfs(a)[b];
}

std::vector<std::vector<std::size_t>> StarGraph::components() const {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(vertices_.size(), false);
  for (std::size_t s = 0; s < vertices_.size(); ++s) {
    if (seen[s]) continue;
    const auto dist = bfs(s);
    std::vector<std::size_t> comp;
    for (std::size_t v = 0; v < dist.size(); ++v) {
      if (dist[v]) {
        comp.push_back(v);
        seen[v] = true;
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

std::size_t StarGraph::diameter() const {
  std::size_t best = 0;
  for (const auto& comp : components()) {
    if (comp.size() < 2) continue;
    for (auto s : comp) {
      const auto dist = bfs(s);
      for (auto t : comp) best = std::max(best, *dist[t]);
    }
  }
  return best;
}

Distance d_star(const SubIdeal& i, const SubIdeal& j, int bound) {
  if (i == j) return 0;
  const StarGraph g(i.n(), bound);
  return g.distance(g.index_of(i), g.index_of(j));
}

std::size_t big_D(int n, int bound) {
  if (n < 2) throw PreconditionViolated("big_D: n must be >= 2");
  if (n == 2) return 0;
  return StarGraph(n, bound).diameter();
}

namespace {

std::vector<SubIdeal> min_primal_at(int n, int bound) {
  const auto all = sub_ideals(n, bound);
  std::vector<std::vector<Signature>> hulls;
  for (const auto& i : all) hulls.push_back(hull(i, bound));
  std::vector<SubIdeal> out;
  for (std::size_t a = 0; a < all.size(); ++a) {
    bool minimal = true;
    if (all[a].kind == SubIdeal::Kind::germ) {
      // a is not minimal if some germ ideal sits strictly inside it, i.e.
      // has a strictly larger hull.
      for (std::size_t b = 0; b < all.size() && minimal; ++b) {
        if (b == a || all[b].kind != SubIdeal::Kind::germ) continue;
        const auto& ha = hulls[a];
        const auto& hb = hulls[b];
        if (hb.size() > ha.size() && std::includes(hb.begin(), hb.end(), ha.begin(), ha.end())) {
          minimal = false;
        }
      }
    }
    if (minimal) out.push_back(all[a]);
  }
  return out;
}

}  // namespace

MinPrimal min_primal(int n, int bound) {
  MinPrimal out;
  out.ideals = min_primal_at(n, bound);
  // Compare on the ideals that exist at both bounds.
  auto wider = min_primal_at(n, bound + 1);
  std::vector<SubIdeal> restricted;
  const auto here = sub_ideals(n, bound);
  for (auto& i : wider) {
    if (std::find(here.begin(), here.end(), i) != here.end()) restricted.push_back(std::move(i));
  }
  out.stable = restricted == out.ideals;
  return out;
}

bool has_strict_germ_containment(int n, int bound) {
  const auto mp = min_primal(n, bound);
  return static_cast<std::size_t>(std::count_if(mp.ideals.begin(), mp.ideals.end(), [](const SubIdeal& i) {
           return i.kind == SubIdeal::Kind::germ;
         })) < enumerate(n - 1, bound).size();
}

PrimalFamily is_primal_family(std::span<const Signature> pis) {
  PrimalFamily out;
  out.witness = common_restriction(pis);
  out.primal = out.witness.has_value();
  return out;
}

bool zero_tail_star_step(const Signature& sigma, const Signature& sigma_prime) {
  if (sigma.context() != sigma_prime.context()) throw ContextMismatch("zero_tail_star_step: context mismatch");
  if (!sigma.context().is_even() || sigma.n() < 2) {
    throw PreconditionViolated("zero_tail_star_step: needs odd n >= 3");
  }
  const SubIdeal a{SubIdeal::Kind::germ, sigma};
  const SubIdeal b{SubIdeal::Kind::germ, sigma_prime};
  if (!star_adjacent(a, b)) {
    throw PreconditionViolated("zero_tail_star_step: " + sigma.to_string() + " and " +
                               sigma_prime.to_string() + " are not * adjacent");
  }
  const std::size_t k = sigma.size();
  const std::size_t i = support_length(sigma);
  if (k < 2 || i + 2 > k) return true;
  return support_length(sigma_prime) <= i + 1;
}

std::size_t merge_walk_length(int n) {
  if (n < 3) throw PreconditionViolated("merge certificates need n >= 3");
  switch (n % 4) {
    case 0: return static_cast<std::size_t>(n / 4 - 1);
    case 2: return static_cast<std::size_t>((n - 2) / 4 - 1);
    case 3: return static_cast<std::size_t>((n - 3) / 4);
    default: return static_cast<std::size_t>((n - 1) / 4 - 1);
  }
}

Rational k_formula(int n) { return Rational((n + 1) / 2, 2); }

namespace {

bool triple_case(int n) { return n % 4 == 1 || n % 4 == 2; }

// Even n: (Q_1..Q_j, q_j..q_{k-1-j}, 0^j); odd n: (P_1..P_j, p_j..p_{k-j}, 0^{j-1}).
// Indices above are 1-based; j >= 1.
Signature merge_stage(int n, const Signature& sigma, const std::vector<int>& top, std::size_t j) {
  const GroupContext ctx(n);
  const std::size_t k = ctx.rank();
  std::vector<int> e(k, 0);
  const std::size_t last = ctx.is_even() ? k - 1 - j : k - j;  // 1-based end of the copied block
  for (std::size_t pos = 1; pos <= k; ++pos) {
    if (pos <= j) {
      e[pos - 1] = top[pos - 1];
    } else if (pos <= last + 1) {
      // position pos holds sigma entry pos-1
      e[pos - 1] = sigma[pos - 2];
    }
  }
  return Signature::validate(e, n);
}

}  // namespace

MergeCertificate merge_certificate(int n, const Signature& s1, const Signature& s2,
                                   const Signature& s3) {
  if (n < 3) throw PreconditionViolated("merge_certificate: n must be >= 3");
  const std::array<Signature, 3> inputs{s1, s2, s3};
  for (const auto& s : inputs) {
    if (s.n() != n - 1) {
      throw ContextMismatch("merge_certificate: " + s.to_string() + " is not an so" +
                            std::to_string(n - 1) + " signature");
    }
  }
  std::vector<int> top = merge_max(inputs);
  if (n == 3) {
    // SO(2) entries may be negative; the container (Q) needs Q >= |q|.
    top[0] = 0;
    for (const auto& s : inputs) top[0] = std::max(top[0], std::abs(s[0]));
  }

  MergeCertificate cert;
  cert.n = n;
  cert.case_id = n % 4;
  cert.inputs.assign(inputs.begin(), inputs.end());
  cert.claimed_n = merge_walk_length(n);
  const std::size_t final_stage = cert.claimed_n + 1;

  for (const auto& sigma : inputs) {
    Walk w;
    for (std::size_t j = 1; j <= final_stage; ++j) w.steps.push_back(merge_stage(n, sigma, top, j));
    for (std::size_t i = 0; i + 1 < w.steps.size(); ++i) {
      const std::array<Signature, 2> pair{w.steps[i], w.steps[i + 1]};
      auto witness = common_restriction(pair);
      if (!witness) {
        throw CertificationFailure("merge_certificate: stage " + std::to_string(i + 1) +
                                   " is not adjacent to the next one");
      }
      w.witnesses.push_back(*witness);
    }
    cert.containers.push_back(w.steps.front());
    if (triple_case(n)) cert.targets.push_back(w.steps.back());
    cert.walks.push_back(std::move(w));
  }
  if (triple_case(n)) {
    // Shared constituent (top_1..top_m, 0, ...) of the three targets.
    std::vector<int> mu(GroupContext(n - 1).rank(), 0);
    for (std::size_t i = 0; i < final_stage; ++i) mu[i] = top[i];
    cert.primal_witness = Signature::validate(mu, n - 1);
  } else {
    cert.targets.push_back(cert.walks.front().steps.back());
  }
  return cert;
}

CertificateReport validate_certificate(const MergeCertificate& cert) {
  CertificateReport r;
  auto fail = [&](std::string msg) {
    r.valid = false;
    r.violations.push_back(std::move(msg));
  };
  const int n = cert.n;
  if (n < 3) {
    fail("n must be >= 3");
    return r;
  }
  if (cert.case_id != n % 4) fail("case does not match n mod 4");
  const bool triple = triple_case(n);
  if (cert.inputs.size() != 3 || cert.containers.size() != 3 || cert.walks.size() != 3) {
    fail("expected three inputs, containers and walks");
    return r;
  }
  if (cert.targets.size() != (triple ? 3u : 1u)) {
    fail(triple ? "expected three targets" : "expected one target");
    return r;
  }
  const std::size_t expected = merge_walk_length(n);
  if (cert.claimed_n != expected) {
    fail("claimed walk length " + std::to_string(cert.claimed_n) + " but the construction uses " +
         std::to_string(expected));
  }
  for (std::size_t i = 0; i < 3; ++i) {
    const auto tag = "walk " + std::to_string(i + 1);
    const auto& sigma = cert.inputs[i];
    const auto& box = cert.containers[i];
    if (sigma.n() != n - 1 || box.n() != n) {
      fail(tag + ": wrong group");
      continue;
    }
    if (!restricts_to(box, sigma)) fail("container " + std::to_string(i + 1) + " does not contain its input");
    const auto& w = cert.walks[i];
    if (w.steps.empty()) {
      fail(tag + ": empty");
      continue;
    }
    bool same_group = std::all_of(w.steps.begin(), w.steps.end(), [&](const Signature& s) { return s.n() == n; });
    if (!same_group) {
      fail(tag + ": step outside so" + std::to_string(n));
      continue;
    }
    if (w.steps.front() != box) fail(tag + ": does not start at its container");
    const auto& target = cert.targets[triple ? i : 0];
    if (w.steps.back() != target) fail(tag + ": does not end at its target");
    if (w.length() > cert.claimed_n) {
      fail(tag + ": length " + std::to_string(w.length()) + " exceeds " + std::to_string(cert.claimed_n));
    }
    if (auto bad = first_invalid_step(w)) fail(tag + ": step " + std::to_string(*bad + 1) + " is not a ~ edge");
  }
  if (triple) {
    const auto family = is_primal_family(cert.targets);
    if (!family.primal) fail("targets share no constituent");
    if (!cert.primal_witness) {
      fail("missing primal witness");
    } else {
      const auto& mu = *cert.primal_witness;
      bool ok = mu.n() == n - 1;
      for (const auto& t : cert.targets) ok = ok && restricts_to(t, mu);
      if (!ok) fail("primal witness " + mu.to_string() + " is not in every target");
    }
  } else if (cert.primal_witness) {
    fail("single-target certificate carries a primal witness");
  }
  r.implied_k = Rational(static_cast<long long>(cert.claimed_n)) + (triple ? Rational(3, 2) : Rational(1));
  r.matches_formula = r.implied_k == k_formula(n);
  if (!r.matches_formula) fail("implied bound differs from ceil(n/2)/2");
  return r;
}

}  // namespace motiondual
