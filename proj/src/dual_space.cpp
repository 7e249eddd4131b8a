#include "motiondual/dual_space.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "motiondual/errors.hpp"

namespace motiondual {

std::vector<PointId> members(const PointSet& s) {
  std::vector<PointId> out;
  for (auto i = s.find_first(); i != PointSet::npos; i = s.find_next(i)) out.push_back(i);
  return out;
}

FiniteT0Space::FiniteT0Space(std::vector<std::string> labels, std::vector<PointSet> closures)
    : labels_(std::move(labels)), closures_(std::move(closures)) {
  const std::size_t n = labels_.size();
  if (closures_.size() != n) throw std::invalid_argument("closure map size mismatch");
  for (PointId x = 0; x < n; ++x) {
    if (closures_[x].size() != n) throw std::invalid_argument("closure of " + labels_[x] + " has wrong universe");
    if (!closures_[x].test(x)) throw std::invalid_argument("closure of " + labels_[x] + " misses the point");
  }
  for (PointId x = 0; x < n; ++x) {
    for (PointId y : members(closures_[x])) {
      if (!closures_[y].is_subset_of(closures_[x])) {
        throw std::invalid_argument("closure map not transitive at " + labels_[x]);
      }
      if (y != x && closures_[y] == closures_[x]) {
        throw std::invalid_argument("not T0: " + labels_[x] + " and " + labels_[y]);
      }
    }
  }
  opens_.assign(n, PointSet(n));
  for (PointId q = 0; q < n; ++q) {
    for (PointId x : members(closures_[q])) opens_[x].set(q);
  }
  adjacency_.resize(n);
  for (PointId x = 0; x < n; ++x) {
    for (PointId y = x + 1; y < n; ++y) {
      if (opens_[x].intersects(opens_[y])) {
        adjacency_[x].push_back(y);
        adjacency_[y].push_back(x);
      }
    }
  }
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
}

void FiniteT0Space::check(PointId x) const {
  if (x >= size()) throw UnknownPoint("point id " + std::to_string(x) + " out of range");
}

void FiniteT0Space::check(const PointSet& s) const {
  if (s.size() != size()) throw UnknownPoint("point set has wrong universe size");
}

const std::string& FiniteT0Space::label(PointId x) const {
  check(x);
  return labels_[x];
}

const PointSet& FiniteT0Space::closure(PointId x) const {
  check(x);
  return closures_[x];
}

const PointSet& FiniteT0Space::minimal_open(PointId x) const {
  check(x);
  return opens_[x];
}

PointSet FiniteT0Space::singleton(PointId x) const {
  check(x);
  PointSet s(size());
  s.set(x);
  return s;
}

PointSet FiniteT0Space::closure_of(const PointSet& s) const {
  check(s);
  PointSet out(size());
  for (PointId x : members(s)) out |= closures_[x];
  return out;
}

PointSet FiniteT0Space::open_hull(const PointSet& s) const {
  check(s);
  PointSet out(size());
  for (PointId x : members(s)) out |= opens_[x];
  return out;
}

bool FiniteT0Space::inseparable(PointId x, PointId y) const {
  check(x);
  check(y);
  return opens_[x].intersects(opens_[y]);
}

const std::vector<PointId>& FiniteT0Space::neighbors(PointId x) const {
  check(x);
  return adjacency_[x];
}

std::vector<Distance> bfs_distances(const FiniteT0Space& space, const PointSet& sources,
                                    const PointSet& within) {
  std::vector<Distance> dist(space.size());
  std::deque<PointId> queue;
  for (PointId s : members(sources & within)) {
    dist[s] = 0;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    const PointId u = queue.front();
    queue.pop_front();
    for (PointId v : space.neighbors(u)) {
      if (!within.test(v) || dist[v]) continue;
      dist[v] = *dist[u] + 1;
      queue.push_back(v);
    }
  }
  return dist;
}

Distance distance(const FiniteT0Space& space, PointId x, PointId y, const PointSet& within) {
  space.label(y);
  if (x == y) return 0;
  return bfs_distances(space, space.singleton(x), within)[y];
}

Distance set_distance(const FiniteT0Space& space, const PointSet& y, const PointSet& z,
                      const PointSet& within) {
  const auto dist = bfs_distances(space, y, within);
  Distance best;
  for (PointId p : members(z & within)) {
    if (dist[p] && (!best || *dist[p] < *best)) best = dist[p];
  }
  return best;
}

ComponentsAndOrc components_and_orc(const FiniteT0Space& space, const PointSet& within) {
  ComponentsAndOrc out;
  PointSet seen(space.size());
  for (PointId start : members(within)) {
    if (seen.test(start)) continue;
    const auto dist = bfs_distances(space, space.singleton(start), within);
    std::vector<PointId> comp;
    for (PointId p = 0; p < space.size(); ++p) {
      if (dist[p]) {
        comp.push_back(p);
        seen.set(p);
      }
    }
    std::size_t diameter = 1;  // singleton convention
    if (comp.size() > 1) {
      diameter = 0;
      for (PointId p : comp) {
        const auto dp = bfs_distances(space, space.singleton(p), within);
        for (PointId q : comp) diameter = std::max(diameter, *dp[q]);
      }
    }
    out.orc = std::max(out.orc, diameter);
    out.components.push_back(std::move(comp));
  }
  return out;
}

DualModel::DualModel(int n, int bound, std::vector<Signature> cls, std::vector<Signature> germs,
                     FiniteT0Space space)
    : n_(n),
      bound_(bound),
      class_sigs_(std::move(cls)),
      germ_sigs_(std::move(germs)),
      space_(std::move(space)),
      class_points_(space_.size()),
      germ_points_(space_.size()) {
  for (PointId x = 0; x < space_.size(); ++x) {
    (x < class_sigs_.size() ? class_points_ : germ_points_).set(x);
  }
}

DualModel DualModel::build(int n, int bound) {
  if (n < 3) throw PreconditionViolated("build_dual_model: n must be >= 3 (got " + std::to_string(n) + ")");
  if (bound < 0) throw PreconditionViolated("build_dual_model: bound must be >= 0");
  auto cls = enumerate(n, bound);
  auto germs = enumerate(n - 1, bound);
  const std::size_t total = cls.size() + germs.size();
  std::vector<std::string> labels;
  std::vector<PointSet> closures(total, PointSet(total));
  for (std::size_t i = 0; i < cls.size(); ++i) {
    labels.push_back("class:" + cls[i].to_string());
    closures[i].set(i);
  }
  for (std::size_t j = 0; j < germs.size(); ++j) {
    const std::size_t id = cls.size() + j;
    labels.push_back("germ:" + germs[j].to_string());
    closures[id].set(id);
    for (std::size_t i = 0; i < cls.size(); ++i) {
      if (restricts_to(cls[i], germs[j])) closures[id].set(i);
    }
  }
  FiniteT0Space space(std::move(labels), std::move(closures));
  return DualModel(n, bound, std::move(cls), std::move(germs), std::move(space));
}

const Signature& DualModel::signature_of(PointId x) const {
  space_.label(x);
  return is_class(x) ? class_sigs_[x] : germ_sigs_[x - class_sigs_.size()];
}

PointId DualModel::class_point(const Signature& pi) const {
  auto it = std::lower_bound(class_sigs_.begin(), class_sigs_.end(), pi);
  if (it == class_sigs_.end() || *it != pi) {
    throw UnknownPoint("no class point " + pi.to_string() + " in " + GroupContext(n_).name() +
                       " model with bound " + std::to_string(bound_));
  }
  return static_cast<PointId>(it - class_sigs_.begin());
}

PointId DualModel::germ_point(const Signature& sigma) const {
  auto it = std::lower_bound(germ_sigs_.begin(), germ_sigs_.end(), sigma);
  if (it == germ_sigs_.end() || *it != sigma) {
    throw UnknownPoint("no germ point " + sigma.to_string() + " in model with bound " +
                       std::to_string(bound_));
  }
  return class_sigs_.size() + static_cast<PointId>(it - germ_sigs_.begin());
}

PointSet DualModel::class_set(std::span<const Signature> pis) const {
  PointSet s = space_.empty_set();
  for (const auto& pi : pis) s.set(class_point(pi));
  return s;
}

bool inseparable_points(const DualModel& model, PointId x, PointId y) {
  return model.space().inseparable(x, y);
}

PointSet separated_points(const DualModel& model) {
  PointSet out = model.space().empty_set();
  for (PointId x = 0; x < model.space().size(); ++x) {
    if (model.space().neighbors(x).empty()) out.set(x);
  }
  return out;
}

Distance distance(const DualModel& model, PointId x, PointId y, bool restrict_to_class) {
  const auto& space = model.space();
  return distance(space, x, y, restrict_to_class ? model.class_points() : space.all_points());
}

ComponentsAndOrc components_and_orc(const DualModel& model) {
  return components_and_orc(model.space(), model.class_points());
}

GlimmPartition glimm_partition(const DualModel& model) {
  GlimmPartition out;
  auto comps = components_and_orc(model).components;
  out.class_points_form_one_class = comps.size() == 1;
  out.classes = std::move(comps);
  for (PointId g : members(model.germ_points())) out.classes.push_back({g});
  return out;
}

}  // namespace motiondual
