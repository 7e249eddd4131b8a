#include "motiondual/chains.hpp"

#include <random>

#include "motiondual/errors.hpp"

namespace motiondual {

PointSet n_neighborhood(const FiniteT0Space& space, const PointSet& y, std::size_t n,
                        const PointSet& within) {
  const auto dist = bfs_distances(space, y, within);
  PointSet out = space.empty_set();
  for (PointId p = 0; p < space.size(); ++p) {
    if (dist[p] && *dist[p] <= n) out.set(p);
  }
  return out;
}

PointSet n_neighborhood(const DualModel& model, const PointSet& y, std::size_t n,
                        bool restrict_to_class) {
  const auto& space = model.space();
  return n_neighborhood(space, y, n, restrict_to_class ? model.class_points() : space.all_points());
}

ChainReport validate_chain(const FiniteT0Space& space, const Chain& chain) {
  ChainReport report;
  auto fail = [&](std::string msg) {
    report.valid = false;
    report.violations.push_back(std::move(msg));
  };
  const std::size_t n = chain.length();
  if (n == 0) {
    fail("empty chain");
    return report;
  }
  PointSet cover = space.empty_set();
  for (std::size_t i = 0; i < n; ++i) {
    if (chain.sets[i].size() != space.size()) {
      fail("X_" + std::to_string(i + 1) + " has wrong universe size");
      return report;
    }
    if (!space.is_closed(chain.sets[i])) fail("X_" + std::to_string(i + 1) + " is not closed");
    cover |= chain.sets[i];
  }
  if (!cover.all()) fail("sets do not cover the space");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 2; j < n; ++j) {
      if (chain.sets[i].intersects(chain.sets[j])) {
        fail("X_" + std::to_string(i + 1) + " meets X_" + std::to_string(j + 1));
      }
    }
  }
  if (n > 1) {
    if ((chain.sets[0] - chain.sets[1]).none()) fail("X_1 \\ X_2 is empty");
    if ((chain.sets[n - 1] - chain.sets[n - 2]).none()) {
      fail("X_" + std::to_string(n) + " \\ X_" + std::to_string(n - 1) + " is empty");
    }
  }
  return report;
}

namespace {

PointSet head_difference(const Chain& chain) {
  return chain.length() > 1 ? chain.sets[0] - chain.sets[1] : chain.sets[0];
}

PointSet tail_difference(const Chain& chain) {
  const std::size_t n = chain.length();
  return n > 1 ? chain.sets[n - 1] - chain.sets[n - 2] : chain.sets[0];
}

}  // namespace

AdmissibleWitness is_admissible(const FiniteT0Space& space, const Chain& chain,
                                const PointSet& within) {
  AdmissibleWitness out;
  if (!validate_chain(space, chain).valid) return out;
  const PointSet head = head_difference(chain) & within;
  const PointSet tail = tail_difference(chain) & within;
  for (PointId x : members(head)) {
    const auto dist = bfs_distances(space, space.singleton(x), within);
    for (PointId y : members(tail)) {
      if (dist[y]) {
        out.admissible = true;
        out.x = x;
        out.y = y;
        return out;
      }
    }
  }
  return out;
}

std::size_t chain_lower_bound(const FiniteT0Space& space, const Chain& chain, PointId x,
                              PointId y, const PointSet& within) {
  const std::size_t n = chain.length();
  if (n == 0) throw PreconditionViolated("chain_lower_bound: empty chain");
  if (!head_difference(chain).test(x)) {
    throw PreconditionViolated("chain_lower_bound: " + space.label(x) + " not in X_1 \\ X_2");
  }
  if (!tail_difference(chain).test(y)) {
    throw PreconditionViolated("chain_lower_bound: " + space.label(y) + " not in X_n \\ X_{n-1}");
  }
  if (n > 1) {
    const Distance d = distance(space, x, y, within);
    if (d && *d < n) {
      throw CertificationFailure("chain of length " + std::to_string(n) + " but d(" +
                                 space.label(x) + ", " + space.label(y) + ") = " +
                                 std::to_string(*d));
    }
  }
  return n;
}

bool separation_criterion(const FiniteT0Space& space, const PointSet& y, const PointSet& z) {
  const PointSet all = space.all_points();
  const PointSet y1 = space.closure_of(n_neighborhood(space, y, 1, all));
  const PointSet z1 = space.closure_of(n_neighborhood(space, z, 1, all));
  return !y1.intersects(z) && !z1.intersects(y);
}

std::optional<Separation> separate(const FiniteT0Space& space, const PointSet& y,
                                   const PointSet& z) {
  Separation sep{space.open_hull(y), space.open_hull(z)};
  const bool disjoint = !sep.u.intersects(sep.v);
  if (disjoint != separation_criterion(space, y, z)) {
    throw CertificationFailure("open-set separation and closure criterion disagree");
  }
  if (!disjoint) return std::nullopt;
  return sep;
}

Chain find_admissible_chain(const FiniteT0Space& space, const PointSet& x, const PointSet& y,
                            std::size_t k, const PointSet& within) {
  if (k < 1) throw PreconditionViolated("find_admissible_chain: k must be >= 1");
  if (x.none() || y.none()) throw PreconditionViolated("find_admissible_chain: empty end set");
  const PointSet all = space.all_points();
  if (!x.is_subset_of(within) || !y.is_subset_of(within)) {
    throw PreconditionViolated("find_admissible_chain: end sets leave the distance domain");
  }
  const auto reach = bfs_distances(space, space.singleton(x.find_first()), within);
  for (PointId p : members(x | y)) {
    if (!reach[p]) throw PreconditionViolated("find_admissible_chain: X and Y lie in different components");
  }
  const Distance dxy = set_distance(space, x, y, all);
  if (!dxy || *dxy < k) {
    throw PreconditionViolated("find_admissible_chain: d(X, Y) = " +
                               (dxy ? std::to_string(*dxy) : std::string("inf")) + " < " +
                               std::to_string(k));
  }

  if (k == 1) return Chain{{all}};

  auto split = [&](const PointSet& near, const PointSet& far) {
    auto sep = separate(space, near, far);
    if (!sep) throw CertificationFailure("find_admissible_chain: separation step failed");
    return *sep;
  };

  Chain chain;
  Separation sep = split(x, n_neighborhood(space, y, k - 2, all));
  chain.sets.push_back(~sep.v);
  PointSet rest = ~sep.u;  // Y_2
  PointSet prefix = chain.sets.back();
  for (std::size_t i = 2; i < k; ++i) {
    sep = split(prefix, n_neighborhood(space, y, k - (i + 1), all));
    chain.sets.push_back(~sep.v & rest);
    rest = ~sep.u;
    prefix |= chain.sets.back();
  }
  chain.sets.push_back(rest);

  const auto report = validate_chain(space, chain);
  if (!report.valid) {
    throw CertificationFailure("find_admissible_chain: produced invalid chain: " + report.violations.front());
  }
  if (!x.is_subset_of(head_difference(chain)) || !y.is_subset_of(tail_difference(chain))) {
    throw CertificationFailure("find_admissible_chain: end sets not in end differences");
  }
  if (!is_admissible(space, chain, within).admissible) {
    throw CertificationFailure("find_admissible_chain: chain not admissible");
  }
  return chain;
}

Chain find_admissible_chain(const DualModel& model, const PointSet& x, const PointSet& y,
                            std::size_t k, bool restrict_to_class) {
  const auto& space = model.space();
  return find_admissible_chain(space, x, y, k,
                               restrict_to_class ? model.class_points() : space.all_points());
}

Property1Report verify_property1(const DualModel& model, std::uint64_t seed, std::size_t samples) {
  const auto& space = model.space();
  const PointSet all = space.all_points();
  const PointSet& cls = model.class_points();
  Property1Report report;

  report.class_points_closed = space.is_closed(cls);
  report.relatively_discrete = true;
  for (PointId x : members(cls)) {
    if ((space.closure(x) & cls) != space.singleton(x)) report.relatively_discrete = false;
  }

  // Germs stand for half-lines of separated points, so the faithful ~ graph
  // is the class-restricted one plus isolated germs.
  report.covers_nonsingleton_components = true;
  for (const auto& comp : components_and_orc(space, cls).components) {
    if (comp.size() > 1) {
      for (PointId p : comp) {
        if (!cls.test(p)) report.covers_nonsingleton_components = false;
      }
    }
  }
  std::size_t mixed = 0;
  for (const auto& comp : components_and_orc(space, all).components) {
    for (PointId p : comp) {
      if (!cls.test(p)) {
        ++mixed;
        break;
      }
    }
  }
  if (mixed > 0) {
    report.notes.push_back("model artifact: " + std::to_string(mixed) +
                           " full-model component(s) join germs to class points; germs are "
                           "treated as separated");
  }

  std::vector<PointSet> closed_sets{space.empty_set(), all, cls};
  for (PointId p = 0; p < space.size(); ++p) closed_sets.push_back(space.closure(p));
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution pick(0.15);
  for (std::size_t s = 0; s < samples; ++s) {
    PointSet raw = space.empty_set();
    for (PointId p = 0; p < space.size(); ++p) {
      if (pick(rng)) raw.set(p);
    }
    closed_sets.push_back(space.closure_of(raw));
  }
  for (const auto& xs : closed_sets) {
    ++report.sampled_closed_sets;
    if (!space.is_closed(n_neighborhood(space, xs, 1, all))) ++report.x1_not_closed;
  }
  return report;
}

}  // namespace motiondual
