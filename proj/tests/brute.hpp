#pragma once

// Test-only references built from explicit branching sets and explicit
// parent enumeration.

#include <algorithm>
#include <deque>
#include <optional>
#include <vector>

#include "motiondual/oracles.hpp"
#include "motiondual/signature.hpp"

namespace brute {

using motiondual::Signature;

// BFS on the graph whose edges are shared branch constituents.
inline std::vector<std::optional<std::size_t>> distances(const std::vector<Signature>& pts, std::size_t from) {
  std::vector<std::optional<std::size_t>> d(pts.size());
  std::deque<std::size_t> q{from};
  d[from] = 0;
  while (!q.empty()) {
    auto u = q.front();
    q.pop_front();
    for (std::size_t v = 0; v < pts.size(); ++v) {
      if (!d[v] && motiondual::oracles::inseparable_by_sets(pts[u], pts[v])) {
        d[v] = *d[u] + 1;
        q.push_back(v);
      }
    }
  }
  return d;
}

// Edge test for germ ideals: some explicit parent contains both.
inline bool star(const Signature& a, const Signature& b) {
  const std::vector<Signature> pair{a, b};
  return motiondual::oracles::common_extension_by_search(pair).has_value();
}

// Diameter of the * graph on germ ideals; line kernels are isolated and add 0.
inline std::size_t big_d(int n, int bound) {
  const auto g = motiondual::enumerate(n - 1, bound);
  std::size_t best = 0;
  for (std::size_t s = 0; s < g.size(); ++s) {
    std::vector<std::optional<std::size_t>> d(g.size());
    std::deque<std::size_t> q{s};
    d[s] = 0;
    while (!q.empty()) {
      auto u = q.front();
      q.pop_front();
      for (std::size_t v = 0; v < g.size(); ++v) {
        if (!d[v] && star(g[u], g[v])) {
          d[v] = *d[u] + 1;
          q.push_back(v);
        }
      }
    }
    for (const auto& x : d) {
      if (x) best = std::max(best, *x);
    }
  }
  return best;
}

// Hull of a germ ideal from explicit branching sets.
inline std::vector<Signature> hull(const Signature& sigma, int bound) {
  std::vector<Signature> out;
  for (const auto& pi : motiondual::enumerate(sigma.n() + 1, bound)) {
    const auto br = motiondual::branch(pi);
    if (std::find(br.begin(), br.end(), sigma) != br.end()) out.push_back(pi);
  }
  return out;
}

}  // namespace brute
