#include <doctest.h>

#include "hilbzeta/errors.hpp"
#include "hilbzeta/motivic.hpp"
#include "hilbzeta/tree.hpp"

using namespace hz;
using V = std::vector<int>;

namespace {
LPoly P(std::vector<std::int64_t> c) { return LPoly::from_coeffs(std::move(c)); }
}  // namespace

TEST_CASE("mode selection") {
  CHECK(select_mode(*make_semigroup({2, 3})) == Mode::PQ);
  CHECK(select_mode(*make_semigroup({4, 5, 6})) == Mode::Monomial);
  CHECK(select_mode(*make_semigroup({1})) == Mode::Monomial);
  CHECK_THROWS_AS(select_mode(*make_semigroup({4, 6, 9})), Error);
  try {
    select_mode(*make_semigroup({4, 6, 9}));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnsupportedSemigroup);
  }
}

TEST_CASE("n_delta worked examples") {
  auto d = n_delta(from_generators(make_semigroup({4, 7}), {8, 11}), Mode::PQ);
  CHECK(d.N == 3);
  CHECK(d.gen_gap_counts == V{2, 2});
  CHECK(d.syz_gap_counts == V{1, 0});
  CHECK(n_delta(from_generators(make_semigroup({4, 13}), {12, 21, 30, 39})).N == 3);
  CHECK(n_delta(from_gaps(make_semigroup({5, 8}), {0})).N == 0);
  CHECK_THROWS_AS(n_delta(from_gaps(make_semigroup({4, 5, 6}), {0}), Mode::PQ), Error);
}

TEST_CASE("b_delta and recursion") {
  CHECK(b_delta(from_generators(make_semigroup({4, 7}), {8, 11})) == 2);
  CHECK(b_delta(from_gaps(make_semigroup({3, 4}), {0})) == 0);
  CHECK(b_delta(from_generators(make_semigroup({4, 13}), {12, 21, 30, 39})) == 2);
  CHECK_THROWS_AS(b_delta(from_gaps(make_semigroup({3, 4}), {})), Error);
  CHECK(n_delta_recursive(from_generators(make_semigroup({4, 7}), {8, 11})) == 3);
  CHECK(n_delta_recursive(from_gaps(make_semigroup({3, 4}), {0})) == 0);
  CHECK(n_delta_recursive(from_generators(make_semigroup({3, 4}), {3, 8})) == 1);
}

TEST_CASE("hilbert classes from the reference lists") {
  CHECK(hilbert_class(make_semigroup({3, 4}), 4) == P({1, 1, 2}));
  CHECK(hilbert_class(make_semigroup({3, 5}), 8) == P({1, 1, 2, 2, 1}));
  CHECK(hilbert_class(make_semigroup({4, 6, 7}), 10) == P({1, 1, 2, 3, 4, 2}));
}

TEST_CASE("zeta_series") {
  auto z23 = zeta_series(make_semigroup({2, 3}), 8);
  REQUIRE(z23.stabilization_level.has_value());
  CHECK(qseries_str(z23.numerator) == "1 + Lq^2");
  auto z34 = zeta_series(make_semigroup({3, 4}), 12);
  CHECK(qseries_str(z34.numerator) == "1 + Lq^2 + L^2q^3 + L^2q^4 + L^3q^6");
  CHECK(*z34.stabilization_level == 6);
  auto short_run = zeta_series(make_semigroup({3, 4}), 7);
  CHECK_FALSE(short_run.stabilization_level.has_value());
  CHECK(short_run.coefficients.size() == 8);
}

TEST_CASE("zeta_from_coefficients buffer rule") {
  std::vector<LPoly> c{1, 1, 2, 2, 2, 2};
  auto z = zeta_from_coefficients(c, 3);
  REQUIRE(z.stabilization_level.has_value());
  CHECK(*z.stabilization_level == 2);
  CHECK(z.numerator == std::vector<LPoly>{1, 0, 1});
  CHECK_FALSE(zeta_from_coefficients(c, 4).stabilization_level.has_value());
}

TEST_CASE("A_2d closed form") {
  CHECK(a2d_closed_form(1, 4).coefficients[2] == P({1, 1}));
  CHECK(a2d_closed_form(3, 6).coefficients[5] == hilbert_class(make_semigroup({2, 7}), 5));
  CHECK(a2d_closed_form(3, 6).coefficients[5] == P({1, 1, 1}));
  CHECK(a2d_closed_form(4, 0).coefficients[0] == LPoly(1));
  for (int d = 1; d <= 5; ++d) {
    auto S = make_semigroup({2, 2 * d + 1});
    for (int k = 1; k <= d; ++k) {
      std::vector<std::int64_t> ones(static_cast<std::size_t>(k + 1), 1);
      CHECK(hilbert_class(S, 2 * k) == P(ones));
      CHECK(hilbert_class(S, 2 * k + 1) == P(ones));
    }
  }
}

TEST_CASE("N(Delta) = 0 exactly when no gaps lie above any generator") {
  for (auto g : std::vector<V>{{3, 4}, {3, 7}, {4, 7}}) {
    auto S = make_semigroup(g);
    for (int l = 1; l <= 2 * S->delta(); ++l)
      for (const auto& D : enumerate_level(S, l)) {
        auto d = n_delta(D);
        CHECK(d.N >= 0);
        int above = 0;
        for (int c : d.gen_gap_counts) above += c;
        CHECK((d.N == 0) == (above == 0));
      }
  }
}

TEST_CASE("level classes at L=1 count modules and stabilize") {
  for (auto g : std::vector<V>{{3, 4}, {3, 5}, {4, 5, 6}, {4, 6, 7}, {2, 9}}) {
    auto S = make_semigroup(g);
    const int lmax = 2 * S->delta() + S->max_generator();
    auto z = zeta_series(S, lmax);
    REQUIRE(z.stabilization_level.has_value());
    CHECK(*z.stabilization_level <= S->conductor());
    for (int l = 0; l <= lmax; ++l) {
      CHECK(z.coefficients[static_cast<std::size_t>(l)].eval(1) == static_cast<std::int64_t>(enumerate_level(S, l).size()));
      if (l >= S->conductor()) CHECK(z.coefficients[static_cast<std::size_t>(l)] == z.coefficients[static_cast<std::size_t>(S->conductor())]);
      CHECK(z.coefficients[static_cast<std::size_t>(l)].degree() <= S->delta());
    }
  }
}
