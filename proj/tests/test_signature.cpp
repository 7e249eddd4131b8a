#include "doctest.h"

#include <array>
#include <random>

#include "motiondual/errors.hpp"
#include "motiondual/oracles.hpp"
#include "motiondual/signature.hpp"

using namespace motiondual;

namespace {

Signature sig(std::initializer_list<int> e, int n) { return Signature::validate(e, n); }

std::vector<std::vector<int>> entries_of(const std::vector<Signature>& v) {
  std::vector<std::vector<int>> out;
  for (const auto& s : v) out.emplace_back(s.entries().begin(), s.entries().end());
  return out;
}

}  // namespace

TEST_CASE("group context") {
  GroupContext g(7);
  CHECK(g.rank() == 3);
  CHECK(g.parity() == Parity::odd);
  CHECK(g.name() == "so7");
  CHECK(g.child().n() == 6);
  CHECK(GroupContext(1).rank() == 0);
  CHECK_THROWS_AS(GroupContext(0), std::invalid_argument);
  CHECK_THROWS(GroupContext(1).child());
}

TEST_CASE("validate") {
  CHECK_NOTHROW(sig({1, 1}, 4));
  CHECK_NOTHROW(sig({1, -1}, 4));
  CHECK_NOTHROW(sig({-5}, 2));
  CHECK(Signature::validate(std::span<const int>{}, 1).size() == 0);

  auto kind_and_index = [](std::initializer_list<int> e, int n) {
    try {
      Signature::validate(e, n);
    } catch (const SignatureError& err) {
      return std::pair{err.kind(), err.index()};
    }
    FAIL("expected SignatureError");
    return std::pair{SignatureError::Kind::WrongLength, std::size_t{99}};
  };
  CHECK(kind_and_index({1, 2}, 5) == std::pair{SignatureError::Kind::MonotonicityViolated, std::size_t{1}});
  CHECK(kind_and_index({2, 1, -1}, 7) == std::pair{SignatureError::Kind::NegativeEntry, std::size_t{3}});
  CHECK(kind_and_index({1, 2}, 4) == std::pair{SignatureError::Kind::MonotonicityViolated, std::size_t{1}});
  CHECK(kind_and_index({3, 1, 2}, 6) == std::pair{SignatureError::Kind::MonotonicityViolated, std::size_t{2}});
  CHECK(kind_and_index({1}, 4).first == SignatureError::Kind::WrongLength);
  CHECK(kind_and_index({2, 3, 1}, 7) == std::pair{SignatureError::Kind::MonotonicityViolated, std::size_t{1}});
}

TEST_CASE("enumerate") {
  CHECK(entries_of(enumerate(3, 1)) == std::vector<std::vector<int>>{{0}, {1}});
  CHECK(entries_of(enumerate(4, 1)) == std::vector<std::vector<int>>{{0, 0}, {1, -1}, {1, 0}, {1, 1}});
  CHECK(enumerate(5, 2).size() == 6);
  CHECK(entries_of(enumerate(2, 1)) == std::vector<std::vector<int>>{{-1}, {0}, {1}});
  CHECK(enumerate(1, 4).size() == 1);
  CHECK(enumerate(9, 0).size() == 1);
  CHECK_THROWS(enumerate(5, -1));

  // Count check against a filter over the whole integer box.
  for (int n = 3; n <= 8; ++n) {
    const int k = n / 2;
    std::size_t brute = 0;
    std::vector<int> e(k, -3);
    while (true) {
      if (e[0] <= 3 && Signature::is_valid(e, n)) ++brute;
      int i = k - 1;
      while (i >= 0 && e[i] == 3) e[i--] = -3;
      if (i < 0) break;
      ++e[i];
    }
    CHECK(enumerate(n, 3).size() == brute);
    auto all = enumerate(n, 3);
    CHECK(std::is_sorted(all.begin(), all.end()));
  }
}

TEST_CASE("branch box and branch") {
  auto b = branch_box(sig({1, 0}, 4));
  REQUIRE(b.intervals.size() == 1);
  CHECK(b.intervals[0] == Interval{0, 1});
  b = branch_box(sig({2, 1}, 5));
  CHECK(b.intervals == std::vector<Interval>{{1, 2}, {-1, 1}});
  CHECK(branch_box(Signature::zero(8)).intervals == std::vector<Interval>(3, Interval{0, 0}));
  CHECK(branch_box(sig({3}, 2)).intervals.empty());

  CHECK(entries_of(branch(sig({1, 0}, 4))) == std::vector<std::vector<int>>{{0}, {1}});
  CHECK(entries_of(branch(sig({1}, 3))) == std::vector<std::vector<int>>{{-1}, {0}, {1}});
  CHECK(entries_of(branch(sig({1, 1}, 5))) == std::vector<std::vector<int>>{{1, -1}, {1, 0}, {1, 1}});
  CHECK(branch(sig({4}, 2)).size() == 1);
}

TEST_CASE("branch consistency") {
  for (int n = 3; n <= 8; ++n) {
    const auto kids = enumerate(n - 1, 4);
    for (const auto& pi : enumerate(n, 3)) {
      const auto br = branch(pi);
      CHECK(std::is_sorted(br.begin(), br.end()));
      for (const auto& s : kids) {
        CHECK(restricts_to(pi, s) == std::binary_search(br.begin(), br.end(), s));
      }
      // box volume filtered by child validity
      const auto box = branch_box(pi);
      std::size_t filtered = 0;
      for (const auto& s : kids) filtered += box.contains(s.entries()) ? 1 : 0;
      CHECK(filtered == br.size());
    }
  }
}

TEST_CASE("restricts_to") {
  CHECK(restricts_to(sig({1, 0}, 4), sig({1}, 3)));
  CHECK_FALSE(restricts_to(sig({1, 1}, 4), sig({0}, 3)));
  CHECK(restricts_to(Signature::zero(9), Signature::zero(8)));
  CHECK_THROWS_AS(restricts_to(sig({1, 0}, 4), sig({1, 0}, 4)), ContextMismatch);
}

TEST_CASE("inseparable") {
  CHECK(inseparable(sig({1, 1}, 4), sig({1, -1}, 4)));
  CHECK_FALSE(inseparable(sig({1, 1}, 4), sig({2, 2}, 4)));
  for (const auto& a : enumerate(3, 4)) {
    for (const auto& b : enumerate(3, 4)) CHECK(inseparable(a, b));
  }
  CHECK_THROWS_AS(inseparable(sig({1, 1}, 4), sig({1, 1}, 5)), ContextMismatch);
  // reflexive
  for (const auto& a : enumerate(8, 2)) CHECK(inseparable(a, a));
}

TEST_CASE("inseparable matches explicit branching sets") {
  for (int n = 3; n <= 8; ++n) {
    const auto all = enumerate(n, 2);
    for (const auto& a : all) {
      for (const auto& b : all) CHECK(inseparable(a, b) == oracles::inseparable_by_sets(a, b));
    }
  }
}

TEST_CASE("common restriction") {
  const std::array<Signature, 3> six{sig({2, 1, 0}, 6), sig({2, 2, 0}, 6), sig({2, 1, 0}, 6)};
  auto w = common_restriction(six);
  REQUIRE(w);
  CHECK((*w)[0] == 2);
  for (const auto& s : six) CHECK(restricts_to(s, *w));

  const std::array<Signature, 2> apart{sig({1, 1}, 4), sig({2, 2}, 4)};
  CHECK_FALSE(common_restriction(apart));

  const auto pi = sig({3, 1, 0}, 7);
  const std::array<Signature, 1> one{pi};
  const auto corner = common_restriction(one);
  REQUIRE(corner);
  std::vector<int> lower;
  for (const auto& iv : branch_box(pi).intervals) lower.push_back(iv.lo);
  CHECK(std::vector<int>(corner->entries().begin(), corner->entries().end()) == lower);
  CHECK(restricts_to(pi, *corner));
}

TEST_CASE("common extension") {
  const std::array<Signature, 2> a{sig({1, 0}, 4), sig({0, 0}, 4)};
  auto pi = common_extension(a);
  REQUIRE(pi);
  CHECK(pi->n() == 5);
  CHECK(restricts_to(*pi, a[0]));
  CHECK(restricts_to(*pi, a[1]));

  const std::array<Signature, 2> b{sig({1, 1}, 4), sig({0, 0}, 4)};
  CHECK_FALSE(common_extension(b));
  CHECK_FALSE(oracles::common_extension_by_search(b));

  for (int q = 0; q <= 3; ++q) {
    for (int r = 0; r <= 3; ++r) {
      const std::array<Signature, 2> c{sig({q}, 3), sig({r}, 3)};
      auto parent = common_extension(c);
      REQUIRE(parent);
      CHECK((*parent)[0] == std::max(q, r));
      CHECK((*parent)[1] == 0);
    }
  }
}

TEST_CASE("common extension matches parent search on random lists") {
  std::mt19937_64 rng(11);
  for (int n = 3; n <= 8; ++n) {
    const auto pool = enumerate(n - 1, 3);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<int> len(1, 4);
    for (int t = 0; t < 200; ++t) {
      std::vector<Signature> list;
      for (int i = len(rng); i > 0; --i) list.push_back(pool[pick(rng)]);
      const auto fast = common_extension(list);
      CHECK(fast.has_value() == oracles::common_extension_by_search(list).has_value());
      if (fast) {
        for (const auto& s : list) CHECK(restricts_to(*fast, s));
      }
      std::reverse(list.begin(), list.end());
      CHECK(common_extension(list) == fast);
    }
  }
}

TEST_CASE("merge max") {
  const std::array<Signature, 2> a{sig({2, 1}, 5), sig({1, 1}, 5)};
  CHECK(merge_max(a) == std::vector<int>{2, 1});
  const std::array<Signature, 2> b{sig({1, -1}, 4), sig({0, 0}, 4)};
  CHECK(merge_max(b) == std::vector<int>{1, 1});
  const std::array<Signature, 1> c{sig({3, 2, -2}, 6)};
  CHECK(merge_max(c) == std::vector<int>{3, 2, 2});
}

TEST_CASE("walk examples") {
  auto w = walk(Signature::zero(7), Signature::ones(7));
  CHECK(w.length() == 3);
  CHECK_FALSE(first_invalid_step(w));
  CHECK(w.steps.front() == Signature::zero(7));
  CHECK(w.steps.back() == Signature::ones(7));

  const auto p = sig({2, 1, 0}, 7);
  w = walk(p, p);
  CHECK(w.length() == 0);
  CHECK(w.witnesses.empty());

  w = walk(sig({1, 1}, 4), sig({2, 2}, 4));
  CHECK(w.length() <= 2);
  CHECK_FALSE(first_invalid_step(w));
  CHECK_THROWS_AS(walk(sig({1, 1}, 4), sig({1, 1}, 5)), ContextMismatch);
}

TEST_CASE("walks are valid and short") {
  for (int n = 3; n <= 10; ++n) {
    const auto all = enumerate(n, n <= 8 ? 2 : 1);
    for (const auto& a : all) {
      for (const auto& b : all) {
        const auto w = walk(a, b);
        CHECK_FALSE(first_invalid_step(w));
        CHECK(w.length() <= a.size());
        CHECK(w.steps.front() == a);
        CHECK(w.steps.back() == b);
      }
    }
  }
}

TEST_CASE("tampered walk is rejected at the named step") {
  auto w = walk(Signature::zero(9), Signature::ones(9));
  REQUIRE(w.length() == 4);
  w.steps[2] = sig({3, 3, 3, 3}, 9);
  auto bad = first_invalid_step(w);
  REQUIRE(bad);
  CHECK(*bad == 1);
}

TEST_CASE("zero tail step for the dual") {
  for (int n = 4; n <= 11; ++n) {
    const auto all = enumerate(n, n <= 8 ? 2 : 1);
    for (const auto& a : all) {
      for (const auto& b : all) CHECK(zero_tail_step_holds(a, b));
    }
  }
  CHECK(support_length(sig({2, 1, 0, 0}, 9)) == 2);
  CHECK(support_length(Signature::zero(9)) == 0);
}
