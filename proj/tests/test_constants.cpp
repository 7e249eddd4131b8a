#include "doctest.h"

#include "motiondual/constants.hpp"
#include "motiondual/errors.hpp"

using namespace motiondual;

TEST_CASE("predict") {
  auto r = predict(8);
  CHECK(r.K_MA == Rational(2));
  CHECK(r.orc_MA == 4);
  r = predict(7);
  CHECK(r.K_MA == Rational(2));
  CHECK(r.orc_MA == 4);
  r = predict(2);
  CHECK(r.formula_exception);
  CHECK(r.orc_A == 1);
  CHECK(r.D_A == 0);
  CHECK(r.K_MA == Rational(1));
  CHECK_THROWS_AS(predict(1), PreconditionViolated);

  for (int n = 3; n <= 40; ++n) {
    r = predict(n);
    CHECK_FALSE(r.formula_exception);
    CHECK(r.K_A == Rational(1));
    CHECK(r.Ks_MA == r.K_MA);
    CHECK(r.Ks_MA * 2 == Rational(static_cast<long long>(r.orc_MA)));
    CHECK(r.orc_A <= r.orc_MA);
    CHECK(r.orc_MA <= r.orc_A + 2);
    if (n % 2 == 0) {
      CHECK(r.K_MA == Rational(n, 4));
      CHECK(r.orc_MA == static_cast<std::size_t>(n / 2));
    } else {
      CHECK(r.K_MA == Rational(n + 1, 4));
      CHECK(r.orc_MA == static_cast<std::size_t>((n + 1) / 2));
    }
  }
}

TEST_CASE("cross check examples") {
  auto r = cross_check(5, 1);
  CHECK(r.passed());
  CHECK(r.orc_A == 2);
  CHECK(r.D_A == 2);
  CHECK(r.orc_MA == 3);
  CHECK(r.K_MA == Rational(3, 2));

  r = cross_check(6, 1);
  CHECK(r.orc_A == 3);
  CHECK(r.D_A == 2);
  CHECK(r.orc_MA == 3);
  CHECK(r.K_MA == Rational(3, 2));

  r = cross_check(12, 1);
  CHECK(r.orc_A == 6);
  CHECK(r.D_A == 5);
  CHECK(r.orc_MA == 6);
  CHECK(r.K_MA == Rational(3));

  CHECK_THROWS_AS(cross_check(2, 1), PreconditionViolated);
  CHECK_THROWS_AS(cross_check(5, 0), PreconditionViolated);
}

TEST_CASE("cross check passes and is deterministic") {
  for (int n = 3; n <= 12; ++n) {
    for (int bound = 1; bound <= 3; ++bound) {
      if (n >= 11 && bound == 3) continue;
      CrossCheckArtifacts art;
      const auto r = cross_check(n, bound, &art);
      INFO("n=" << n << " bound=" << bound);
      CHECK(r.passed());
      CHECK(r.failures().empty());
      CHECK(art.extremal_walk.length() == static_cast<std::size_t>(n / 2));
      CHECK(art.extremal_chain.length() == static_cast<std::size_t>(n / 2));
      CHECK_FALSE(art.merges.empty());
      CHECK(r == cross_check(n, bound));
    }
  }
}
