#pragma once

// Predicted and computed constants for A = C*(R^n x| SO(n)):
//   Orc(A) = floor(n/2), D(A) = ceil(n/2) - 1 (0 for n = 2),
//   Orc(M(A)) = D(A) + 1, K_s(M(A)) = Orc(M(A)) / 2 = K(M(A)) = ceil(n/2) / 2,
//   K(A) = 1.
// For n = 2 the K(M(A)) formula does not apply; the value 1 is an external
// input and the report says so.

#include <optional>
#include <string>
#include <vector>

#include "motiondual/chains.hpp"
#include "motiondual/primal.hpp"
#include "motiondual/signature.hpp"

namespace motiondual {

struct NamedCheck {
  std::string name;
  bool holds = false;
  std::string detail;

  friend bool operator==(const NamedCheck&, const NamedCheck&) = default;
};

struct ConstantsReport {
  int n = 0;
  /// Model bound used by cross_check; nullopt for a prediction.
  std::optional<int> bound;
  std::size_t orc_A = 0;
  std::size_t D_A = 0;
  std::size_t orc_MA = 0;
  Rational Ks_MA{0};
  Rational K_MA{0};
  Rational K_A{1};
  /// n = 2: K(M(A)) is quoted, not derived from ceil(n/2)/2.
  bool formula_exception = false;
  std::vector<NamedCheck> checks;
  std::vector<std::string> certificate_refs;

  bool passed() const;
  std::vector<std::string> failures() const;

  friend bool operator==(const ConstantsReport&, const ConstantsReport&) = default;
};

/// Formula values only; throws PreconditionViolated for n < 2.
ConstantsReport predict(int n);

/// Certificates attached by cross_check.
struct CrossCheckArtifacts {
  Walk extremal_walk;
  Chain extremal_chain;
  std::vector<MergeCertificate> merges;
};

/// Computes Orc(A) and D(A) on the truncation and checks every stated
/// relation between the constants. Requires n >= 3 and bound >= 1.
ConstantsReport cross_check(int n, int bound, CrossCheckArtifacts* artifacts = nullptr);

/// Default truncation: 3 for n <= 9, 1 above.
int default_bound(int n);

}  // namespace motiondual
