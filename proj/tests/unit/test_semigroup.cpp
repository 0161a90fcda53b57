#include <doctest.h>

#include <numeric>

#include "brute.hpp"
#include "hilbzeta/errors.hpp"
#include "hilbzeta/semigroup.hpp"

using namespace hz;

TEST_CASE("make_semigroup basic invariants") {
  auto S = make_semigroup({3, 4});
  CHECK(S->gaps() == std::vector<int>{1, 2, 5});
  CHECK(S->conductor() == 6);
  CHECK(S->delta() == 3);

  auto N = make_semigroup({1});
  CHECK(N->gaps().empty());
  CHECK(N->conductor() == 0);
  CHECK(N->delta() == 0);

  auto Z = make_semigroup({4, 6, 7});
  CHECK(Z->gaps() == std::vector<int>{1, 2, 3, 5, 9});
  CHECK(Z->conductor() == 10);
  CHECK(Z->delta() == 5);
}

TEST_CASE("make_semigroup canonicalizes and validates") {
  CHECK(make_semigroup({7, 3, 4, 8})->generators() == std::vector<int>{3, 4});
  CHECK(make_semigroup({3, 4}, 5)->window() >= 6 + 4 + 5);
  CHECK_THROWS_AS(make_semigroup({}), Error);
  CHECK_THROWS_AS(make_semigroup({6, 10}), Error);
  CHECK_THROWS_AS(make_semigroup({0, 3}), Error);
  try {
    make_semigroup({6, 10});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonCoprime);
  }
}

TEST_CASE("pq_normal_form") {
  auto S37 = make_semigroup({3, 7});
  CHECK(pq_normal_form(*S37, 13) == PQCoordinates{1, 2, 13});
  CHECK(pq_normal_form(*S37, 0) == PQCoordinates{0, 0, 0});
  CHECK(pq_normal_form(*make_semigroup({3, 4}), 8) == PQCoordinates{2, 0, 8});
  CHECK_THROWS_AS(pq_normal_form(*S37, 4), Error);
  CHECK_THROWS_AS(pq_normal_form(*make_semigroup({4, 5, 6}), 8), Error);
}

TEST_CASE("pq_normal_form round trip") {
  for (auto g : std::vector<std::vector<int>>{{3, 4}, {3, 7}, {4, 7}, {5, 8}}) {
    auto S = make_semigroup(g);
    for (int m = 0; m < S->window(); ++m) {
      if (!S->contains(m)) continue;
      auto c = pq_normal_form(*S, m);
      CHECK(c.a * g[1] + c.b * g[0] == m);
      CHECK(c.a >= 0);
      CHECK(c.a < g[0]);
      CHECK(c.b >= 0);
    }
  }
}

TEST_CASE("gap_conductor") {
  CHECK(gap_conductor(*make_semigroup({4, 5, 6}), 7) == 4);
  CHECK(gap_conductor(*make_semigroup({3, 7}), 4) == 9);
  CHECK(gap_conductor(*make_semigroup({2, 3}), 1) == 0);
  CHECK_THROWS_AS(gap_conductor(*make_semigroup({3, 7}), 6), Error);
}

TEST_CASE("classify_monomial examples") {
  auto r = classify_monomial(*make_semigroup({4, 5, 6}));
  CHECK(r.variant == MonomialForm::Variant::GammaMR);
  CHECK(r.m == 4);
  CHECK(r.r == 3);
  auto z = classify_monomial(*make_semigroup({4, 6, 7}));
  CHECK(z.variant == MonomialForm::Variant::GammaM);
  CHECK(z.m == 4);
  CHECK_FALSE(classify_monomial(*make_semigroup({3, 7})).is_monomial());
  auto t = classify_monomial(*make_semigroup({2, 3}));
  CHECK(t.variant == MonomialForm::Variant::GammaMSB);
  CHECK(t.m == 2);
  CHECK(t.s == 1);
  CHECK(t.b == 1);
  CHECK(classify_monomial(*make_semigroup({1})).variant == MonomialForm::Variant::Smooth);
}

TEST_CASE("gap condition predicate") {
  CHECK(is_monomial_by_gap_condition(*make_semigroup({2, 3})));
  CHECK_FALSE(is_monomial_by_gap_condition(*make_semigroup({3, 7})));
  CHECK(is_monomial_by_gap_condition(*make_semigroup({1})));
}

TEST_CASE("conductor bounds and symmetry") {
  for (int a = 2; a <= 7; ++a)
    for (int b = a + 1; b <= 12; ++b) {
      if (std::gcd(a, b) != 1) continue;
      auto S = make_semigroup({a, b});
      CHECK(S->conductor() == 2 * S->delta());
      CHECK(S->conductor() == bf::conductor({a, b}));
      for (int x : S->gaps()) CHECK(S->contains(S->conductor() - 1 - x) == true);
    }
  for (auto g : std::vector<std::vector<int>>{{4, 5, 6}, {4, 6, 7}, {5, 6, 7, 8, 9}, {3, 5, 7}}) {
    auto S = make_semigroup(g);
    CHECK(S->delta() + 1 <= S->conductor());
    CHECK(S->conductor() <= 2 * S->delta());
    for (int x = 0; x < S->window(); ++x)
      for (int y = 0; x + y < S->window(); ++y)
        if (S->contains(x) && S->contains(y)) CHECK(S->contains(x + y));
  }
}
