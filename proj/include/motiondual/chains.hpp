#pragma once

// Neighbourhoods Y^n, separation by open sets, and chains of closed sets on
// finite T0 spaces. A chain X_1..X_n covers the space, only consecutive
// members meet, and (for n > 1) both end differences are non-empty. Any x in
// X_1 \ X_2 and y in X_n \ X_{n-1} then satisfy d(x, y) >= n.
//
// Topological operations always use the full space; distances can be taken
// in the subgraph induced on a subset (`within`).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "motiondual/dual_space.hpp"

namespace motiondual {

struct Chain {
  std::vector<PointSet> sets;

  std::size_t length() const noexcept { return sets.size(); }
};

/// Y^n = {x : d({x}, Y) <= n}; Y^0 = Y (intersected with `within`).
PointSet n_neighborhood(const FiniteT0Space& space, const PointSet& y, std::size_t n,
                        const PointSet& within);
PointSet n_neighborhood(const DualModel& model, const PointSet& y, std::size_t n,
                        bool restrict_to_class);

struct ChainReport {
  bool valid = true;
  std::vector<std::string> violations;
};

ChainReport validate_chain(const FiniteT0Space& space, const Chain& chain);

struct AdmissibleWitness {
  bool admissible = false;
  std::optional<PointId> x;
  std::optional<PointId> y;
};

/// Looks for x in X_1 \ X_2 and y in X_n \ X_{n-1} at finite distance;
/// returns the least such pair.
AdmissibleWitness is_admissible(const FiniteT0Space& space, const Chain& chain,
                                const PointSet& within);

/// Returns the chain length after checking it against an independent BFS.
/// Throws PreconditionViolated if x or y is not in its end difference and
/// CertificationFailure if BFS finds d(x, y) below the length.
std::size_t chain_lower_bound(const FiniteT0Space& space, const Chain& chain, PointId x,
                              PointId y, const PointSet& within);

struct Separation {
  PointSet u;
  PointSet v;
};

/// Disjoint open sets around Y and Z, if any exist. Also evaluates the
/// closure criterion (closure(Y^1) misses Z and closure(Z^1) misses Y) and
/// throws CertificationFailure if the two answers disagree.
std::optional<Separation> separate(const FiniteT0Space& space, const PointSet& y,
                                   const PointSet& z);

/// Closure criterion on its own.
bool separation_criterion(const FiniteT0Space& space, const PointSet& y, const PointSet& z);

/// Builds an admissible chain X_1..X_k with X inside X_1 \ X_2 and Y inside
/// X_k \ X_{k-1} by repeatedly separating the growing prefix from Y^{k-i-1}.
/// Requires d(X, Y) >= k >= 1 and X u Y in one component of `within`; for
/// k = 1 the chain is the whole space.
Chain find_admissible_chain(const FiniteT0Space& space, const PointSet& x, const PointSet& y,
                            std::size_t k, const PointSet& within);
Chain find_admissible_chain(const DualModel& model, const PointSet& x, const PointSet& y,
                            std::size_t k, bool restrict_to_class);

struct Property1Report {
  bool class_points_closed = false;
  bool relatively_discrete = false;
  /// Every non-singleton ~-component (germs separated) lies in class points.
  bool covers_nonsingleton_components = false;
  std::size_t sampled_closed_sets = 0;
  std::size_t x1_not_closed = 0;
  std::vector<std::string> notes;

  bool passed() const noexcept {
    return class_points_closed && relatively_discrete && covers_nonsingleton_components &&
           x1_not_closed == 0;
  }
};

/// Witness that X^1 is closed for closed X: the class points form a closed,
/// relatively discrete set holding every non-singleton component. X^1
/// closedness is also checked directly on point closures, a few fixed sets
/// and `samples` random closed sets.
Property1Report verify_property1(const DualModel& model, std::uint64_t seed = 1,
                                 std::size_t samples = 32);

}  // namespace motiondual
