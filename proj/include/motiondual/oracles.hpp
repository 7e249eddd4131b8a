#pragma once

// Brute-force references for the closed-form adjacency tests. These only
// use explicit branching sets and explicit parent enumeration; nothing here
// calls the interval-overlap shortcuts they are meant to check.

#include <optional>
#include <span>

#include "motiondual/signature.hpp"

namespace motiondual::oracles {

/// branch(a) and branch(b) intersect, by explicit set intersection.
bool inseparable_by_sets(const Signature& a, const Signature& b);

/// Searches SO(n+1) signatures with m_1 <= max|entries| + 1 for a parent
/// whose explicit branching set contains every sigma.
std::optional<Signature> common_extension_by_search(std::span<const Signature> sigmas);

}  // namespace motiondual::oracles
