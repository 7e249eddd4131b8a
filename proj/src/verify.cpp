#include "motiondual/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>
#include <thread>

#include "motiondual/chains.hpp"
#include "motiondual/constants.hpp"
#include "motiondual/errors.hpp"
#include "motiondual/oracles.hpp"
#include "motiondual/primal.hpp"

namespace motiondual {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

struct PerN {
  int n = 0;
  bool ok = true;
  std::size_t count = 0;
  std::vector<std::string> failures;

  void fail(std::string msg) {
    ok = false;
    if (failures.size() < 3) failures.push_back("N=" + std::to_string(n) + ": " + std::move(msg));
  }
};

std::vector<int> range(int lo, int hi, const VerifyOptions& o) {
  std::vector<int> out;
  for (int n = std::max(lo, o.n_min); n <= std::min(hi, o.n_max); ++n) out.push_back(n);
  return out;
}

// Runs fn for every N on up to `jobs` threads; results come back in the
// order of ns.
std::vector<PerN> fan_out(const std::vector<int>& ns, unsigned jobs, const std::function<void(PerN&)>& fn) {
  std::vector<PerN> out(ns.size());
  for (std::size_t i = 0; i < ns.size(); ++i) out[i].n = ns[i];
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < ns.size(); i = next++) {
      try {
        fn(out[i]);
      } catch (const std::exception& e) {
        out[i].fail(std::string("exception: ") + e.what());
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(ns.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

std::string span_text(const std::vector<int>& ns) {
  if (ns.empty()) return "no N in range";
  return "N=" + std::to_string(ns.front()) + ".." + std::to_string(ns.back());
}

CriterionResult collect(int id, std::string name, const std::vector<int>& ns, const std::vector<PerN>& parts,
                        std::string extra, Clock::time_point start) {
  CriterionResult r{id, std::move(name), true, span_text(ns), 0};
  std::size_t count = 0;
  std::vector<std::string> failures;
  for (const auto& p : parts) {
    r.passed = r.passed && p.ok;
    count += p.count;
    for (const auto& f : p.failures) {
      if (failures.size() < 5) failures.push_back(f);
    }
  }
  if (count > 0) r.detail += ", " + std::to_string(count) + " checks";
  if (!extra.empty()) r.detail += ", " + extra;
  for (const auto& f : failures) r.detail += "; " + f;
  r.seconds = seconds_since(start);
  return r;
}

int model_bound(int n, const VerifyOptions& o) { return o.bound.value_or(default_bound(n)); }

CriterionResult orc_criterion(const VerifyOptions& o) {
  const auto start = Clock::now();
  const auto ns = range(3, 12, o);
  auto parts = fan_out(ns, o.jobs, [&](PerN& p) {
    const auto model = DualModel::build(p.n, model_bound(p.n, o));
    const auto orc = components_and_orc(model).orc;
    ++p.count;
    if (orc != static_cast<std::size_t>(p.n / 2)) p.fail("Orc " + std::to_string(orc));
  });
  auto r = collect(1, "Orc(A) = floor(N/2)", ns, parts, {}, start);
  if (r.seconds >= limits::orc_seconds) {
    r.passed = false;
    r.detail += "; exceeded time limit";
  }
  return r;
}

CriterionResult extremal_criterion(const VerifyOptions& o) {
  const auto start = Clock::now();
  const auto ns = range(3, 12, o);
  auto parts = fan_out(ns, o.jobs, [&](PerN& p) {
    const std::size_t k = static_cast<std::size_t>(p.n / 2);
    const auto model = DualModel::build(p.n, model_bound(p.n, o));
    const auto zero = Signature::zero(p.n);
    const auto ones = Signature::ones(p.n);
    const PointId x = model.class_point(zero);
    const PointId y = model.class_point(ones);
    const Distance d = distance(model, x, y, true);
    if (!d || *d != k) p.fail("BFS distance " + (d ? std::to_string(*d) : std::string("inf")));
    const Walk w = walk(zero, ones);
    if (first_invalid_step(w) || w.length() != k) p.fail("walk length " + std::to_string(w.length()));
    const auto chain = find_admissible_chain(model, model.space().singleton(x), model.space().singleton(y), k, true);
    if (chain_lower_bound(model.space(), chain, x, y, model.class_points()) != k) p.fail("chain length");
    p.count += 3;
  });
  return collect(2, "extremal distance d(0,1) = floor(N/2) with walk and chain certificates", ns, parts, {},
                 start);
}

CriterionResult oracle_criterion(const VerifyOptions& o) {
  const auto start = Clock::now();
  const auto ns = range(3, 9, o);
  const int b = limits::oracle_entry_bound;
  auto parts = fan_out(ns, o.jobs, [&](PerN& p) {
    const auto cls = enumerate(p.n, b);
    for (const auto& a : cls) {
      for (const auto& c : cls) {
        ++p.count;
        const bool fast = inseparable(a, c);
        if (fast != oracles::inseparable_by_sets(a, c)) p.fail("inseparable " + a.to_string() + " / " + c.to_string());
        if (fast != inseparable(c, a)) p.fail("inseparable not symmetric");
      }
    }
    const auto kids = enumerate(p.n - 1, b);
    for (const auto& a : kids) {
      for (const auto& c : kids) {
        ++p.count;
        const std::array<Signature, 2> pair{a, c};
        const std::array<Signature, 2> swapped{c, a};
        const auto fast = common_extension(pair);
        if (fast.has_value() != oracles::common_extension_by_search(pair).has_value()) {
          p.fail("common_extension " + a.to_string() + " / " + c.to_string());
        }
        if (fast != common_extension(swapped)) p.fail("common_extension not symmetric");
        if (fast && (!restricts_to(*fast, a) || !restricts_to(*fast, c))) p.fail("common_extension witness wrong");
      }
    }
    // Triples against an explicit parent table (every parent with entries up
    // to b + 1 and its branching set).
    const auto parents = enumerate(p.n, b + 1);
    std::vector<std::vector<Signature>> branches;
    for (const auto& par : parents) branches.push_back(branch(par));
    auto brute = [&](const std::array<Signature, 3>& t) {
      for (const auto& br : branches) {
        if (std::all_of(t.begin(), t.end(), [&](const Signature& s) { return std::binary_search(br.begin(), br.end(), s); })) {
          return true;
        }
      }
      return false;
    };
    for (std::size_t i = 0; i < kids.size(); ++i) {
      for (std::size_t j = i; j < kids.size(); ++j) {
        for (std::size_t l = j; l < kids.size(); ++l) {
          ++p.count;
          const std::array<Signature, 3> t{kids[i], kids[j], kids[l]};
          const auto fast = common_extension(t);
          if (fast.has_value() != brute(t)) {
            p.fail("common_extension triple " + t[0].to_string() + " / " + t[1].to_string() + " / " + t[2].to_string());
          }
        }
      }
    }
  });
  auto r = collect(3, "closed-form adjacency matches brute-force branching", ns, parts, "entries <= 3", start);
  std::size_t total = 0;
  for (const auto& p : parts) total += p.count;
  if (o.n_min <= 3 && o.n_max >= 9 && total < limits::oracle_comparisons) {
    r.passed = false;
    r.detail += "; too few comparisons";
  }
  return r;
}

CriterionResult big_d_criterion(const VerifyOptions& o) {
  const auto start = Clock::now();
  auto ns = range(3, 12, o);
  if (o.n_min <= 3 && o.n_max >= 2) ns.insert(ns.begin(), 2);
  auto parts = fan_out(ns, o.jobs, [&](PerN& p) {
    const std::size_t want = p.n == 2 ? 0 : static_cast<std::size_t>((p.n + 1) / 2 - 1);
    for (int bound : {1, 2}) {
      ++p.count;
      const auto got = big_D(p.n, bound);
      if (got != want) p.fail("D = " + std::to_string(got) + " at bound " + std::to_string(bound));
    }
  });
  return collect(4, "D(A) = ceil(N/2) - 1 (0 for N = 2), stable from bound 1 to 2", ns, parts, {}, start);
}

CriterionResult parity_criterion(const VerifyOptions& o) {
  const auto start = Clock::now();
  const auto ns = range(3, 12, o);
  auto parts = fan_out(ns, o.jobs, [&](PerN& p) {
    const int bound = std::min(3, model_bound(p.n, o));
    const auto mp = min_primal(p.n, bound);
    const bool strict = has_strict_germ_containment(p.n, bound);
    ++p.count;
    if (strict != (p.n % 2 == 1)) p.fail(strict ? "strict containment for even N" : "no strict containment for odd N");
    if (!mp.stable) p.fail("minimal primal selection changes at bound + 1");
  });
  return collect(5, "strict germ-ideal containment exists iff N is odd", ns, parts, {}, start);
}

CriterionResult constants_criterion(const VerifyOptions& o) {
  const auto start = Clock::now();
  const auto ns = range(3, 12, o);
  auto parts = fan_out(ns, o.jobs, [&](PerN& p) {
    const auto report = cross_check(p.n, std::max(1, model_bound(p.n, o)));
    p.count += report.checks.size();
    for (const auto& f : report.failures()) p.fail(f);
  });
  return collect(6, "constants table: K(M) = K_s(M) = ceil(N/2)/2, Orc(M) = D + 1, sandwich bounds", ns, parts,
                 {}, start);
}

CriterionResult certificate_criterion(const VerifyOptions& o) {
  const auto start = Clock::now();
  const auto ns = range(3, 12, o);
  auto parts = fan_out(ns, o.jobs, [&](PerN& p) {
    const auto pool = enumerate(p.n - 1, 3);
    std::mt19937_64 rng(o.seed * 1000003u + static_cast<std::uint64_t>(p.n));
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    const std::size_t want_len = merge_walk_length(p.n);
    for (int t = 0; t < limits::certificate_triples; ++t) {
      const auto& a = pool[pick(rng)];
      const auto& b = pool[pick(rng)];
      const auto& c = pool[pick(rng)];
      const auto cert = merge_certificate(p.n, a, b, c);
      const auto rep = validate_certificate(cert);
      ++p.count;
      if (!rep.valid) p.fail(a.to_string() + " | " + b.to_string() + " | " + c.to_string() + ": " + rep.violations.front());
      for (const auto& w : cert.walks) {
        if (w.length() != want_len) p.fail("walk length " + std::to_string(w.length()));
      }
      if (rep.implied_k != k_formula(p.n)) p.fail("implied K bound");
    }
  });
  return collect(7, "merge certificates validate with the case-table walk lengths", ns, parts,
                 "seed " + std::to_string(o.seed), start);
}

CriterionResult chain_criterion(const VerifyOptions& o) {
  const auto start = Clock::now();
  const auto ns = range(3, limits::chain_n_max, o);
  auto parts = fan_out(ns, o.jobs, [&](PerN& p) {
    const auto model = DualModel::build(p.n, model_bound(p.n, o));
    const auto& space = model.space();
    const PointSet& cls = model.class_points();
    const auto class_ids = members(cls);

    auto check_chain = [&](const PointSet& x, const PointSet& y, std::size_t k) {
      const auto chain = find_admissible_chain(model, x, y, k, true);
      if (chain.length() != k) p.fail("chain length " + std::to_string(chain.length()));
      if (!is_admissible(space, chain, cls).admissible) p.fail("chain not admissible");
      const PointSet head = (chain.length() > 1 ? chain.sets[0] - chain.sets[1] : chain.sets[0]) & cls;
      const PointSet tail =
          (chain.length() > 1 ? chain.sets[k - 1] - chain.sets[k - 2] : chain.sets[0]) & cls;
      for (PointId a : members(head)) {
        for (PointId b : members(tail)) {
          ++p.count;
          try {
            chain_lower_bound(space, chain, a, b, cls);
          } catch (const CertificationFailure& e) {
            p.fail(e.what());
          }
        }
      }
    };

    const PointId x = model.class_point(Signature::zero(p.n));
    const PointId y = model.class_point(Signature::ones(p.n));
    for (std::size_t k = 1; k <= static_cast<std::size_t>(p.n / 2); ++k) {
      check_chain(space.singleton(x), space.singleton(y), k);
    }

    std::mt19937_64 rng(o.seed * 7919u + static_cast<std::uint64_t>(p.n));
    std::uniform_int_distribution<std::size_t> pick(0, class_ids.size() - 1);
    std::uniform_int_distribution<int> size(1, 2);
    int made = 0;
    for (int attempt = 0; made < limits::chain_random_pairs && attempt < 100 * limits::chain_random_pairs; ++attempt) {
      PointSet xs = space.empty_set();
      PointSet ys = space.empty_set();
      for (int i = size(rng); i > 0; --i) xs.set(class_ids[pick(rng)]);
      for (int i = size(rng); i > 0; --i) ys.set(class_ids[pick(rng)]);
      const Distance d = set_distance(space, xs, ys, space.all_points());
      if (!d || *d == 0) continue;
      std::uniform_int_distribution<std::size_t> kpick(1, *d);
      check_chain(xs, ys, kpick(rng));
      ++made;
    }
    if (made < limits::chain_random_pairs) p.fail("only " + std::to_string(made) + " random pairs drawn");
  });
  return collect(8, "chain bound: BFS distance >= chain length", ns, parts, "seed " + std::to_string(o.seed),
                 start);
}

CriterionResult zero_tail_criterion(const VerifyOptions& o) {
  const auto start = Clock::now();
  const auto ns = range(4, 11, o);
  auto parts = fan_out(ns, o.jobs, [&](PerN& p) {
    const auto cls = enumerate(p.n, 1);
    for (const auto& a : cls) {
      for (const auto& b : cls) {
        ++p.count;
        if (!zero_tail_step_holds(a, b)) p.fail("dual step " + a.to_string() + " ~ " + b.to_string());
      }
    }
    if (p.n % 2 == 1) {
      const auto kids = enumerate(p.n - 1, 1);
      for (const auto& a : kids) {
        for (const auto& b : kids) {
          if (!star_adjacent({SubIdeal::Kind::germ, a}, {SubIdeal::Kind::germ, b})) continue;
          ++p.count;
          if (!zero_tail_star_step(a, b)) p.fail("star step " + a.to_string() + " * " + b.to_string());
        }
      }
    }
  });
  return collect(9, "zero-tail steps for ~ and * hold", ns, parts, "bound 1", start);
}

CriterionResult stability_criterion(const VerifyOptions& o) {
  const auto start = Clock::now();
  const auto ns = range(3, limits::stability_n_max, o);
  auto parts = fan_out(ns, o.jobs, [&](PerN& p) {
    const auto small = DualModel::build(p.n, 3);
    const auto large = DualModel::build(p.n, 4);
    const auto sigs = enumerate(p.n, limits::stability_entry_bound);
    for (std::size_t i = 0; i < sigs.size(); ++i) {
      const auto ds = bfs_distances(small.space(), small.space().singleton(small.class_point(sigs[i])),
                                    small.class_points());
      const auto dl = bfs_distances(large.space(), large.space().singleton(large.class_point(sigs[i])),
                                    large.class_points());
      for (std::size_t j = i + 1; j < sigs.size(); ++j) {
        ++p.count;
        if (ds[small.class_point(sigs[j])] != dl[large.class_point(sigs[j])]) {
          p.fail("d(" + sigs[i].to_string() + ", " + sigs[j].to_string() + ") changes");
        }
      }
    }
  });
  return collect(10, "class distances stable from bound 3 to 4, sweep under 60 s", ns, parts,
                 "entries <= 2", start);
}

}  // namespace

bool VerifySummary::passed() const {
  return std::all_of(criteria.begin(), criteria.end(), [](const CriterionResult& c) { return c.passed; });
}

VerifySummary run_verify(const VerifyOptions& options) {
  if (options.n_min < 2 || options.n_max < options.n_min) {
    throw PreconditionViolated("verify: need 2 <= n-min <= n-max");
  }
  if (options.bound && *options.bound < 1) throw PreconditionViolated("verify: bound must be >= 1");
  VerifyOptions o = options;
  o.jobs = std::max(1u, o.jobs);

  const auto start = Clock::now();
  VerifySummary s;
  s.criteria.push_back(orc_criterion(o));
  s.criteria.push_back(extremal_criterion(o));
  s.criteria.push_back(oracle_criterion(o));
  s.criteria.push_back(big_d_criterion(o));
  s.criteria.push_back(parity_criterion(o));
  s.criteria.push_back(constants_criterion(o));
  s.criteria.push_back(certificate_criterion(o));
  s.criteria.push_back(chain_criterion(o));
  s.criteria.push_back(zero_tail_criterion(o));
  s.criteria.push_back(stability_criterion(o));
  s.seconds = seconds_since(start);
  auto& last = s.criteria.back();
  if (s.seconds >= limits::sweep_seconds) {
    last.passed = false;
    last.detail += "; sweep took too long";
  }
  std::ostringstream t;
  t << std::fixed << std::setprecision(2) << s.seconds;
  last.detail += ", sweep " + t.str() + " s";
  return s;
}

std::string format_summary(const VerifySummary& summary) {
  std::ostringstream os;
  for (const auto& c : summary.criteria) {
    os << (c.passed ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << ": " << c.detail << " ("
       << std::fixed << std::setprecision(2) << c.seconds << " s)\n";
  }
  const auto failed = std::count_if(summary.criteria.begin(), summary.criteria.end(),
                                    [](const CriterionResult& c) { return !c.passed; });
  os << (failed == 0 ? "all " + std::to_string(summary.criteria.size()) + " criteria passed"
                     : std::to_string(failed) + " criteria failed")
     << "\n";
  return os.str();
}

}  // namespace motiondual
