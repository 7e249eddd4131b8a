#include "motiondual/oracles.hpp"

#include <algorithm>
#include <cstdlib>
#include <iterator>
#include <vector>

namespace motiondual::oracles {

bool inseparable_by_sets(const Signature& a, const Signature& b) {
  const auto ba = branch(a);
  const auto bb = branch(b);
  std::vector<Signature> common;
  std::set_intersection(ba.begin(), ba.end(), bb.begin(), bb.end(), std::back_inserter(common));
  return !common.empty();
}

std::optional<Signature> common_extension_by_search(std::span<const Signature> sigmas) {
  int bound = 0;
  for (const auto& s : sigmas) {
    for (int v : s.entries()) bound = std::max(bound, std::abs(v));
  }
  const int parent_n = sigmas.front().n() + 1;
  for (const auto& pi : enumerate(parent_n, bound + 1)) {
    const auto kids = branch(pi);
    const bool all = std::all_of(sigmas.begin(), sigmas.end(), [&](const Signature& s) {
      return std::binary_search(kids.begin(), kids.end(), s);
    });
    if (all) return pi;
  }
  return std::nullopt;
}

}  // namespace motiondual::oracles
