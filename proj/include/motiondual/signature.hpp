#pragma once

// Signatures of SO(n) irreducibles and the SO(n) -> SO(n-1) branching rule.
//
// A signature of SO(n) is an integer tuple of length k = floor(n/2):
//   n = 2k   : m_1 >= m_2 >= ... >= m_{k-1} >= |m_k|
//   n = 2k+1 : m_1 >= m_2 >= ... >= m_k >= 0
// SO(2) signatures are single unconstrained integers and SO(1) has only the
// empty signature. Restriction to SO(n-1) is multiplicity free and its
// constituents are exactly the child signatures inside an integer box
// (see branch_box), which turns most questions below into interval overlap.

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace motiondual {

enum class Parity { even, odd };

class GroupContext {
public:
  explicit GroupContext(int n);

  int n() const noexcept { return n_; }
  /// Length of a signature, floor(n/2).
  std::size_t rank() const noexcept { return static_cast<std::size_t>(n_ / 2); }
  Parity parity() const noexcept { return n_ % 2 == 0 ? Parity::even : Parity::odd; }
  bool is_even() const noexcept { return parity() == Parity::even; }

  GroupContext child() const;
  GroupContext parent() const { return GroupContext(n_ + 1); }

  std::string name() const { return "so" + std::to_string(n_); }

  friend bool operator==(const GroupContext&, const GroupContext&) = default;
  friend auto operator<=>(const GroupContext&, const GroupContext&) = default;

private:
  int n_;
};

class Signature {
public:
  /// Checks the parity-specific monotonicity rule; throws SignatureError
  /// naming the first violated inequality.
  static Signature validate(std::span<const int> entries, int n);
  static Signature validate(std::initializer_list<int> entries, int n) {
    return validate(std::span<const int>(entries.begin(), entries.size()), n);
  }
  static bool is_valid(std::span<const int> entries, int n);

  /// The trivial representation (all zeros).
  static Signature zero(int n);
  /// (1, ..., 1) in SO(n), n >= 3.
  static Signature ones(int n);

  const GroupContext& context() const noexcept { return ctx_; }
  int n() const noexcept { return ctx_.n(); }
  std::span<const int> entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  bool is_zero() const noexcept;

  /// Comma separated entries, e.g. "2,1,0". Empty string for SO(1).
  std::string to_string() const;

  friend bool operator==(const Signature&, const Signature&) = default;
  friend std::strong_ordering operator<=>(const Signature& a, const Signature& b);

private:
  Signature(GroupContext ctx, std::vector<int> entries)
      : ctx_(ctx), entries_(std::move(entries)) {}

  GroupContext ctx_;
  std::vector<int> entries_;
};

struct Interval {
  int lo;
  int hi;

  bool empty() const noexcept { return lo > hi; }
  bool contains(int v) const noexcept { return lo <= v && v <= hi; }
  long long width() const noexcept { return empty() ? 0 : static_cast<long long>(hi) - lo + 1; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Box of candidate SO(n-1) signatures; together with child validity it is
/// the branching set of a parent signature.
struct BranchBox {
  GroupContext child;
  std::vector<Interval> intervals;

  bool contains(std::span<const int> entries) const noexcept;
  long long volume() const noexcept;
};

/// A ~-walk in SO(n)^ together with one common SO(n-1) constituent per edge.
struct Walk {
  std::vector<Signature> steps;
  std::vector<Signature> witnesses;

  std::size_t length() const noexcept { return steps.empty() ? 0 : steps.size() - 1; }
};

/// All SO(n) signatures with m_1 <= bound (and m_k >= -bound for even n),
/// in lexicographic order of their entries.
std::vector<Signature> enumerate(int n, int bound);

BranchBox branch_box(const Signature& pi);

/// Explicit branching set: every child-valid signature inside branch_box.
std::vector<Signature> branch(const Signature& pi);

/// sigma occurs in the restriction of pi to SO(n-1).
bool restricts_to(const Signature& pi, const Signature& sigma);

/// The restrictions of a and b to SO(n-1) share a constituent.
bool inseparable(const Signature& a, const Signature& b);

/// Lower corner of the intersection of all branching boxes, if non-empty.
std::optional<Signature> common_restriction(std::span<const Signature> pis);

/// Lower-corner SO(n+1) signature whose restriction contains every sigma.
std::optional<Signature> common_extension(std::span<const Signature> sigmas);

/// Coordinate-wise maximum; the last coordinate of an even-n signature
/// enters through its absolute value.
std::vector<int> merge_max(std::span<const Signature> sigs);

/// Walk of length <= rank from a to b built by successive max-merging of
/// prefixes and zero padding of suffixes, meeting in the middle.
Walk walk(const Signature& a, const Signature& b);

/// Index of the first edge whose witness fails, or nullopt for a valid walk.
std::optional<std::size_t> first_invalid_step(const Walk& w);

/// One step of the extremal lower bound: if pi vanishes beyond position i
/// (i <= k-2) and pi ~ other, then other vanishes beyond position i+1.
/// Returns true when the implication holds (vacuously if pi ~ other fails).
bool zero_tail_step_holds(const Signature& pi, const Signature& other);

/// Number of leading positions before an all-zero tail.
std::size_t support_length(const Signature& s) noexcept;

}  // namespace motiondual
