#pragma once

// Finite T0 spaces given by explicit point closures (Alexandrov topology),
// and the finite model of the dual of R^n x| SO(n):
//   class points  = SO(n)^ signatures (closed, relatively discrete),
//   germ points   = SO(n-1)^ signatures, one per half-line {pi_{t,sigma}},
//                   whose closure adds every class point restricting to sigma.
//
// In an Alexandrov space x ~ y iff the minimal open sets U(x), U(y) meet,
// where U(x) = {q : x in closure(q)}.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "motiondual/signature.hpp"

namespace motiondual {

using PointId = std::size_t;
using PointSet = boost::dynamic_bitset<>;

/// Graph distance; nullopt means no walk exists.
using Distance = std::optional<std::size_t>;

class FiniteT0Space {
public:
  /// closures[i] is the closure of point i. Throws std::invalid_argument
  /// unless the closure map is reflexive, transitive and T0.
  FiniteT0Space(std::vector<std::string> labels, std::vector<PointSet> closures);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(PointId x) const;
  const PointSet& closure(PointId x) const;
  const PointSet& minimal_open(PointId x) const;

  PointSet empty_set() const { return PointSet(size()); }
  PointSet all_points() const { return ~PointSet(size()); }
  PointSet singleton(PointId x) const;

  PointSet closure_of(const PointSet& s) const;
  bool is_closed(const PointSet& s) const { return closure_of(s) == s; }
  bool is_open(const PointSet& s) const { return open_hull(s) == s; }
  /// Smallest open set containing s: the union of minimal opens.
  PointSet open_hull(const PointSet& s) const;

  bool inseparable(PointId x, PointId y) const;
  /// ~-neighbours of x, excluding x itself, in increasing order.
  const std::vector<PointId>& neighbors(PointId x) const;

private:
  void check(PointId x) const;
  void check(const PointSet& s) const;

  std::vector<std::string> labels_;
  std::vector<PointSet> closures_;
  std::vector<PointSet> opens_;
  std::vector<std::vector<PointId>> adjacency_;
};

/// Multi-source BFS on the ~ graph induced on `within`. Sources outside
/// `within` are ignored.
std::vector<Distance> bfs_distances(const FiniteT0Space& space, const PointSet& sources,
                                    const PointSet& within);

/// d(x, y) in the subgraph induced on `within` (0 when x == y).
Distance distance(const FiniteT0Space& space, PointId x, PointId y, const PointSet& within);

/// d(Y, Z) = min over pairs.
Distance set_distance(const FiniteT0Space& space, const PointSet& y, const PointSet& z,
                      const PointSet& within);

struct ComponentsAndOrc {
  std::vector<std::vector<PointId>> components;
  /// Largest component diameter; singleton components count 1.
  std::size_t orc = 1;
};

ComponentsAndOrc components_and_orc(const FiniteT0Space& space, const PointSet& within);

class DualModel {
public:
  /// Class points are enumerate(n, bound), germ points enumerate(n-1, bound).
  static DualModel build(int n, int bound);

  const FiniteT0Space& space() const noexcept { return space_; }
  int n() const noexcept { return n_; }
  int bound() const noexcept { return bound_; }

  const PointSet& class_points() const noexcept { return class_points_; }
  const PointSet& germ_points() const noexcept { return germ_points_; }
  std::span<const Signature> class_signatures() const noexcept { return class_sigs_; }
  std::span<const Signature> germ_signatures() const noexcept { return germ_sigs_; }

  bool is_class(PointId x) const { return x < class_sigs_.size(); }
  const Signature& signature_of(PointId x) const;
  PointId class_point(const Signature& pi) const;
  PointId germ_point(const Signature& sigma) const;
  PointSet class_set(std::span<const Signature> pis) const;

private:
  DualModel(int n, int bound, std::vector<Signature> cls, std::vector<Signature> germs,
            FiniteT0Space space);

  int n_;
  int bound_;
  std::vector<Signature> class_sigs_;
  std::vector<Signature> germ_sigs_;
  FiniteT0Space space_;
  PointSet class_points_;
  PointSet germ_points_;
};

bool inseparable_points(const DualModel& model, PointId x, PointId y);

/// Points inseparable from nothing but themselves in the full model.
PointSet separated_points(const DualModel& model);

/// With restrict_to_class the walk may only pass through class points; this
/// is the distance on SO(n)^ inside the true dual.
Distance distance(const DualModel& model, PointId x, PointId y, bool restrict_to_class);

/// Components and Orc of the class-restricted ~ graph.
ComponentsAndOrc components_and_orc(const DualModel& model);

struct GlimmPartition {
  std::vector<std::vector<PointId>> classes;
  /// All class points fall in one class.
  bool class_points_form_one_class = false;
};

/// Germs are singleton classes; class points are grouped by the transitive
/// closure of ~ among class points.
GlimmPartition glimm_partition(const DualModel& model);

/// Members of a point set, increasing.
std::vector<PointId> members(const PointSet& s);

}  // namespace motiondual
