#pragma once

// Sub-ideals of C*(R^n x| SO(n)) and the * graph on them.
//
// A germ ideal I_sigma is the intersection of the kernels of all SO(n)
// irreducibles whose restriction contains sigma; its hull is exactly those
// signatures. A line kernel stands for the kernel of one separated point on
// the half-line through sigma (the parameter t is dropped: every t behaves
// the same). I * J means I + J is proper, which for germ ideals means their
// hulls meet and for line kernels means I == J.
//
// The second half builds the max-merge walks that bound K(M(A)): three
// SO(n-1) signatures are wrapped in containers, then walked to a common
// target (or to three targets sharing a constituent).

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "motiondual/dual_space.hpp"
#include "motiondual/signature.hpp"

namespace motiondual {

using Rational = boost::rational<long long>;

struct SubIdeal {
  enum class Kind { germ, line };

  Kind kind;
  /// SO(n-1) signature.
  Signature sigma;

  int n() const noexcept { return sigma.n() + 1; }
  std::string to_string() const;

  friend bool operator==(const SubIdeal&, const SubIdeal&) = default;
  friend auto operator<=>(const SubIdeal&, const SubIdeal&) = default;
};

/// Germ ideals for every sigma in enumerate(n-1, bound), then line kernels in
/// the same order.
std::vector<SubIdeal> sub_ideals(int n, int bound);

/// Class signatures with m_1 <= bound in the hull; empty for line kernels.
std::vector<Signature> hull(const SubIdeal& ideal, int bound);

struct Containment {
  bool contains = false;
  /// Same answer at bound + 1.
  bool stable = true;
};

/// I is contained in J iff hull(J) is inside hull(I). Both must be germ
/// ideals.
Containment contains_ideal(const SubIdeal& i, const SubIdeal& j, int bound);

bool star_adjacent(const SubIdeal& i, const SubIdeal& j);

/// The * graph on sub_ideals(n, bound).
class StarGraph {
public:
  StarGraph(int n, int bound);

  int n() const noexcept { return n_; }
  int bound() const noexcept { return bound_; }
  const std::vector<SubIdeal>& vertices() const noexcept { return vertices_; }
  const std::vector<std::vector<std::size_t>>& adjacency() const noexcept { return adjacency_; }
  std::size_t index_of(const SubIdeal& ideal) const;

  Distance distance(std::size_t a, std::size_t b) const;
  std::vector<std::vector<std::size_t>> components() const;
  /// Largest component diameter; singletons count 0.
  std::size_t diameter() const;

private:
  std::vector<Distance> bfs(std::size_t source) const;

  int n_;
  int bound_;
  std::vector<SubIdeal> vertices_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

/// BFS distance in the * graph truncated at `bound`.
Distance d_star(const SubIdeal& i, const SubIdeal& j, int bound);

/// D(A) on the truncation; 0 for n = 2 without building anything.
std::size_t big_D(int n, int bound);

struct MinPrimal {
  std::vector<SubIdeal> ideals;
  /// The selection does not change at bound + 1.
  bool stable = true;
};

/// Line kernels plus the germ ideals that strictly contain no other germ
/// ideal.
MinPrimal min_primal(int n, int bound);

/// Whether any germ ideal strictly contains another on the truncation.
bool has_strict_germ_containment(int n, int bound);

struct PrimalFamily {
  bool primal = false;
  std::optional<Signature> witness;
};

/// The kernels of pis form a primal family iff they share a constituent.
PrimalFamily is_primal_family(std::span<const Signature> pis);

/// For odd n (sigma in SO(n-1)): if sigma vanishes beyond position i with
/// i <= k-2 and I_sigma * I_sigma', then sigma' vanishes beyond i+1. Throws
/// PreconditionViolated when the two germ ideals are not * adjacent.
bool zero_tail_star_step(const Signature& sigma, const Signature& sigma_prime);

struct MergeCertificate {
  int n = 0;
  /// n mod 4.
  int case_id = 0;
  std::vector<Signature> inputs;
  std::vector<Signature> containers;
  std::vector<Walk> walks;
  /// One shared target or one target per input.
  std::vector<Signature> targets;
  std::optional<Signature> primal_witness;
  std::size_t claimed_n = 0;

  bool triple_target() const noexcept { return targets.size() == 3; }
};

/// Walk length the construction uses for this n.
std::size_t merge_walk_length(int n);
/// ceil(n/2) / 2.
Rational k_formula(int n);

MergeCertificate merge_certificate(int n, const Signature& s1, const Signature& s2,
                                   const Signature& s3);

struct CertificateReport {
  bool valid = true;
  std::vector<std::string> violations;
  /// claimed_n + 1 or claimed_n + 3/2.
  Rational implied_k{0};
  bool matches_formula = false;
};

CertificateReport validate_certificate(const MergeCertificate& cert);

}  // namespace motiondual
