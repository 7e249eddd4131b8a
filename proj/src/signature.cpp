#include "motiondual/signature.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <sstream>

#include "motiondual/errors.hpp"

namespace motiondual {

namespace {

void require_same_context(std::span<const Signature> sigs, const char* op) {
  for (const auto& s : sigs) {
    if (s.context() != sigs.front().context()) {
      throw ContextMismatch(std::string(op) + ": " + s.context().name() + " vs " +
                            sigs.front().context().name());
    }
  }
}

void enumerate_rec(const GroupContext& ctx, int bound, std::vector<int>& prefix,
                   std::vector<Signature>& out) {
  const std::size_t k = ctx.rank();
  if (prefix.size() == k) {
    out.push_back(Signature::validate(prefix, ctx.n()));
    return;
  }
  const std::size_t i = prefix.size();
  int hi = i == 0 ? bound : prefix.back();
  int lo = 0;
  if (ctx.n() == 2) {
    lo = -bound;
  } else if (ctx.is_even() && i + 1 == k) {
    lo = -(i == 0 ? bound : prefix.back());
  }
  for (int v = lo; v <= hi; ++v) {
    prefix.push_back(v);
    enumerate_rec(ctx, bound, prefix, out);
    prefix.pop_back();
  }
}

// Box intersection over several parents; lower bounds and upper bounds per
// coordinate of the child.
std::vector<Interval> intersect_boxes(std::span<const Signature> pis) {
  auto box = branch_box(pis.front()).intervals;
  for (std::size_t j = 1; j < pis.size(); ++j) {
    auto other = branch_box(pis[j]).intervals;
    for (std::size_t i = 0; i < box.size(); ++i) {
      box[i].lo = std::max(box[i].lo, other[i].lo);
      box[i].hi = std::min(box[i].hi, other[i].hi);
    }
  }
  return box;
}

}  // namespace

GroupContext::GroupContext(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("SO(n) requires n >= 1, got " + std::to_string(n));
}

GroupContext GroupContext::child() const {
  if (n_ < 2) throw std::invalid_argument("SO(1) has no subgroup SO(0)");
  return GroupContext(n_ - 1);
}

Signature Signature::validate(std::span<const int> entries, int n) {
  GroupContext ctx(n);
  const std::size_t k = ctx.rank();
  if (entries.size() != k) {
    std::ostringstream msg;
    msg << ctx.name() << " signatures have " << k << " entries, got " << entries.size();
    throw SignatureError(SignatureError::Kind::WrongLength, 0, msg.str());
  }
  auto fail_mono = [&](std::size_t i) {
    std::ostringstream msg;
    msg << ctx.name() << ": entry " << i << " must dominate entry " << i + 1;
    return SignatureError(SignatureError::Kind::MonotonicityViolated, i, msg.str());
  };
  if (n >= 3) {
    if (ctx.is_even()) {
      for (std::size_t i = 0; i + 2 < k; ++i) {
        if (entries[i] < entries[i + 1]) throw fail_mono(i + 1);
      }
      if (entries[k - 2] < std::abs(entries[k - 1])) throw fail_mono(k - 1);
    } else {
      for (std::size_t i = 0; i + 1 < k; ++i) {
        if (entries[i] < entries[i + 1]) throw fail_mono(i + 1);
      }
      if (entries[k - 1] < 0) {
        throw SignatureError(SignatureError::Kind::NegativeEntry, k,
                             ctx.name() + ": last entry must be non-negative");
      }
    }
  }
  return Signature(ctx, std::vector<int>(entries.begin(), entries.end()));
}

bool Signature::is_valid(std::span<const int> entries, int n) {
  try {
    validate(entries, n);
    return true;
  } catch (const SignatureError&) {
    return false;
  }
}

Signature Signature::zero(int n) {
  GroupContext ctx(n);
  return Signature(ctx, std::vector<int>(ctx.rank(), 0));
}

Signature Signature::ones(int n) {
  if (n < 3) throw std::invalid_argument("ones() needs n >= 3");
  GroupContext ctx(n);
  return Signature(ctx, std::vector<int>(ctx.rank(), 1));
}

bool Signature::is_zero() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](int v) { return v == 0; });
}

std::string Signature::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries_[i]);
  }
  return out;
}

std::strong_ordering operator<=>(const Signature& a, const Signature& b) {
  if (auto c = a.ctx_ <=> b.ctx_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.entries_.begin(), a.entries_.end(),
                                                b.entries_.begin(), b.entries_.end());
}

bool BranchBox::contains(std::span<const int> entries) const noexcept {
  if (entries.size() != intervals.size()) return false;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!intervals[i].contains(entries[i])) return false;
  }
  return true;
}

long long BranchBox::volume() const noexcept {
  long long v = 1;
  for (const auto& iv : intervals) v *= iv.width();
  return v;
}

std::vector<Signature> enumerate(int n, int bound) {
  if (bound < 0) throw std::invalid_argument("enumerate: bound must be >= 0");
  GroupContext ctx(n);
  std::vector<Signature> out;
  std::vector<int> prefix;
  enumerate_rec(ctx, bound, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

BranchBox branch_box(const Signature& pi) {
  const GroupContext child = pi.context().child();
  BranchBox box{child, {}};
  const std::size_t k = pi.size();
  if (pi.n() == 2) return box;
  if (pi.context().is_even()) {
    for (std::size_t i = 0; i + 1 < k; ++i) {
      box.intervals.push_back({std::abs(pi[i + 1]), pi[i]});
    }
  } else {
    for (std::size_t i = 0; i + 1 < k; ++i) {
      box.intervals.push_back({pi[i + 1], pi[i]});
    }
    box.intervals.push_back({-pi[k - 1], pi[k - 1]});
  }
  return box;
}

std::vector<Signature> branch(const Signature& pi) {
  const BranchBox box = branch_box(pi);
  std::vector<Signature> out;
  if (box.volume() == 0) return out;
  std::vector<int> point;
  for (const auto& iv : box.intervals) point.push_back(iv.lo);
  // odometer over the box, last coordinate fastest
  bool done = false;
  while (!done) {
    if (Signature::is_valid(point, box.child.n())) {
      out.push_back(Signature::validate(point, box.child.n()));
    }
    done = true;
    for (std::size_t i = point.size(); i-- > 0;) {
      if (point[i] < box.intervals[i].hi) {
        ++point[i];
        done = false;
        break;
      }
      point[i] = box.intervals[i].lo;
    }
  }
  return out;
}

bool restricts_to(const Signature& pi, const Signature& sigma) {
  if (pi.n() < 2 || sigma.n() != pi.n() - 1) {
    throw ContextMismatch("restricts_to: " + sigma.context().name() + " is not the child of " +
                          pi.context().name());
  }
  return branch_box(pi).contains(sigma.entries());
}

bool inseparable(const Signature& a, const Signature& b) {
  if (a.context() != b.context()) {
    throw ContextMismatch("inseparable: " + a.context().name() + " vs " + b.context().name());
  }
  if (a.n() < 2) throw std::invalid_argument("inseparable: needs n >= 2");
  // The lower corner of the intersected box is always child-valid, so a
  // non-empty box is equivalent to a shared constituent.
  const std::size_t k = a.size();
  if (a.n() == 2) return true;
  if (a.context().is_even()) {
    for (std::size_t i = 0; i + 1 < k; ++i) {
      if (std::abs(a[i + 1]) > b[i] || std::abs(b[i + 1]) > a[i]) return false;
    }
  } else {
    for (std::size_t i = 0; i + 1 < k; ++i) {
      if (a[i + 1] > b[i] || b[i + 1] > a[i]) return false;
    }
  }
  return true;
}

std::optional<Signature> common_restriction(std::span<const Signature> pis) {
  if (pis.empty()) throw std::invalid_argument("common_restriction: empty list");
  require_same_context(pis, "common_restriction");
  const auto box = intersect_boxes(pis);
  std::vector<int> corner;
  corner.reserve(box.size());
  for (const auto& iv : box) {
    if (iv.empty()) return std::nullopt;
    corner.push_back(iv.lo);
  }
  return Signature::validate(corner, pis.front().n() - 1);
}

std::optional<Signature> common_extension(std::span<const Signature> sigmas) {
  if (sigmas.empty()) throw std::invalid_argument("common_extension: empty list");
  require_same_context(sigmas, "common_extension");
  const GroupContext parent = sigmas.front().context().parent();
  if (parent.n() < 3) throw std::invalid_argument("common_extension: needs parent n >= 3");
  const std::size_t k = parent.rank();

  auto col_max = [&](std::size_t i, bool absolute) {
    int m = absolute ? std::abs(sigmas.front()[i]) : sigmas.front()[i];
    for (const auto& s : sigmas) m = std::max(m, absolute ? std::abs(s[i]) : s[i]);
    return m;
  };
  auto col_min = [&](std::size_t i) {
    int m = sigmas.front()[i];
    for (const auto& s : sigmas) m = std::min(m, s[i]);
    return m;
  };

  std::vector<int> parent_entries(k, 0);
  if (parent.is_even()) {
    // m_i in [max q_i, min q_{i-1}] for 2 <= i <= k-1; m_k = 0 always fits.
    for (std::size_t i = 0; i + 1 < k; ++i) {
      parent_entries[i] = col_max(i, false);
      if (i > 0 && parent_entries[i] > col_min(i - 1)) return std::nullopt;
    }
  } else if (k == 1) {
    parent_entries[0] = col_max(0, true);
  } else {
    // m_i in [max p_i, min p_{i-1}] for 2 <= i <= k-1, m_k in [max |p_k|, min p_{k-1}].
    for (std::size_t i = 0; i + 1 < k; ++i) {
      parent_entries[i] = col_max(i, false);
      if (i > 0 && parent_entries[i] > col_min(i - 1)) return std::nullopt;
    }
    parent_entries[k - 1] = col_max(k - 1, true);
    if (parent_entries[k - 1] > col_min(k - 2)) return std::nullopt;
  }
  return Signature::validate(parent_entries, parent.n());
}

std::vector<int> merge_max(std::span<const Signature> sigs) {
  if (sigs.empty()) throw std::invalid_argument("merge_max: empty list");
  require_same_context(sigs, "merge_max");
  const auto& ctx = sigs.front().context();
  const std::size_t k = ctx.rank();
  const bool abs_last = ctx.is_even() && ctx.n() >= 4;
  std::vector<int> out(k);
  for (std::size_t i = 0; i < k; ++i) {
    const bool a = abs_last && i + 1 == k;
    out[i] = a ? std::abs(sigs.front()[i]) : sigs.front()[i];
    for (const auto& s : sigs) out[i] = std::max(out[i], a ? std::abs(s[i]) : s[i]);
  }
  return out;
}

namespace {

// (s_1..s_j, x_{j+1}..x_{k-j}, 0^j)
Signature merge_state(const Signature& x, const std::vector<int>& s, std::size_t j) {
  const std::size_t k = x.size();
  std::vector<int> e(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    if (i < j) {
      e[i] = s[i];
    } else if (i < k - j) {
      e[i] = x[i];
    }
  }
  return Signature::validate(e, x.n());
}

}  // namespace

Walk walk(const Signature& a, const Signature& b) {
  if (a.context() != b.context()) {
    throw ContextMismatch("walk: " + a.context().name() + " vs " + b.context().name());
  }
  if (a.n() < 3) throw std::invalid_argument("walk: needs n >= 3");
  Walk w;
  if (a == b) {
    w.steps.push_back(a);
    return w;
  }
  const std::array<Signature, 2> ends{a, b};
  const std::vector<int> s = merge_max(ends);
  const std::size_t k = a.size();
  const std::size_t r = k / 2;

  std::vector<Signature> forward, backward;
  for (std::size_t j = 0; j <= r; ++j) {
    forward.push_back(merge_state(a, s, j));
    backward.push_back(merge_state(b, s, j));
  }
  // For even rank both halves end at (s_1..s_r, 0..0); for odd rank the
  // middle coordinates differ and one extra edge joins them.
  std::vector<Signature> path = forward;
  for (std::size_t j = backward.size(); j-- > 0;) path.push_back(backward[j]);

  // Drop repeated vertices; any shortcut keeps every remaining edge intact.
  std::vector<Signature> simple;
  for (const auto& v : path) {
    auto it = std::find(simple.begin(), simple.end(), v);
    if (it != simple.end()) {
      simple.erase(it + 1, simple.end());
    } else {
      simple.push_back(v);
    }
  }
  w.steps = std::move(simple);
  for (std::size_t i = 0; i + 1 < w.steps.size(); ++i) {
    const std::array<Signature, 2> pair{w.steps[i], w.steps[i + 1]};
    auto witness = common_restriction(pair);
    if (!witness) {
      throw CertificationFailure("walk: construction produced non-adjacent step " +
                                 pair[0].to_string() + " -> " + pair[1].to_string());
    }
    w.witnesses.push_back(*witness);
  }
  return w;
}

std::optional<std::size_t> first_invalid_step(const Walk& w) {
  if (w.witnesses.size() + 1 != w.steps.size() && !(w.steps.empty() && w.witnesses.empty())) {
    return w.witnesses.size();
  }
  for (std::size_t i = 0; i < w.witnesses.size(); ++i) {
    const auto& x = w.steps[i];
    const auto& y = w.steps[i + 1];
    const auto& sigma = w.witnesses[i];
    if (x.context() != y.context() || sigma.n() != x.n() - 1) return i;
    if (!restricts_to(x, sigma) || !restricts_to(y, sigma)) return i;
  }
  return std::nullopt;
}

std::size_t support_length(const Signature& s) noexcept {
  std::size_t len = s.size();
  while (len > 0 && s[len - 1] == 0) --len;
  return len;
}

bool zero_tail_step_holds(const Signature& pi, const Signature& other) {
  if (pi.context() != other.context()) {
    throw ContextMismatch("zero_tail_step_holds: context mismatch");
  }
  const std::size_t k = pi.size();
  const std::size_t i = support_length(pi);
  if (k < 2 || i + 2 > k) return true;  // needs i <= k-2
  if (!inseparable(pi, other)) return true;
  return support_length(other) <= i + 1;
}

}  // namespace motiondual
