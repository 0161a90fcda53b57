#include <doctest.h>

#include <random>

#include "hilbzeta/errors.hpp"
#include "hilbzeta/semimodule.hpp"

using namespace hz;
using V = std::vector<int>;

TEST_CASE("from_gaps") {
  auto S34 = make_semigroup({3, 4});
  auto S37 = make_semigroup({3, 7});
  CHECK(from_gaps(S34, {0}).generators() == V{3, 4});
  CHECK(from_gaps(S37, {0, 3, 7}).generators() == V{6, 10, 14});
  CHECK_THROWS_AS(from_gaps(S34, {0, 3, 9}), Error);
  CHECK_THROWS_AS(from_gaps(S34, {0, 1}), Error);
  CHECK(from_gaps(S34, {}).generators() == V{0});
}

TEST_CASE("from_generators") {
  auto S34 = make_semigroup({3, 4});
  CHECK(from_generators(S34, {4, 6}).gaps() == V{0, 3});
  CHECK(from_generators(make_semigroup({3, 7}), {6, 10}).gaps() == V{0, 3, 7, 14});
  CHECK(from_generators(S34, {3, 4, 7}).generators() == V{3, 4});
  CHECK_THROWS_AS(from_generators(S34, {}), Error);
  CHECK_THROWS_AS(from_generators(S34, {5}), Error);
}

TEST_CASE("minimal generators, frobenius, conductor") {
  auto S34 = make_semigroup({3, 4});
  auto D = from_gaps(S34, {0, 3, 4});
  CHECK(minimal_generators(D) == V{6, 7, 8});
  CHECK(D.frobenius() == 4);
  CHECK(D.conductor() == 6);
  CHECK(D.str() == "(6,7,8)");
  CHECK_THROWS_AS(from_gaps(S34, {}).frobenius(), Error);
  CHECK(from_gaps(S34, {0, 4, 8}).conductor() == 9);
}

TEST_CASE("delete_generator and merge") {
  auto S = make_semigroup({3, 4});
  auto root = from_gaps(S, {0});
  CHECK(delete_generator(root, 1) == from_generators(S, {4, 6}));
  CHECK(delete_generator(root, 2) == from_generators(S, {3, 8}));
  CHECK(delete_generator(from_generators(S, {4, 6}), 1) == from_generators(S, {6, 7, 8}));
  CHECK_THROWS_AS(delete_generator(root, 3), Error);
  CHECK_THROWS_AS(delete_generator(root, 0), Error);
  CHECK(merge(from_generators(S, {4, 6})) == root);
  CHECK(merge(from_generators(S, {6, 7, 8})) == from_generators(S, {4, 6}));
  CHECK(merge(from_gaps(S, {0, 4, 8})) == from_generators(S, {3, 8}));
  CHECK_THROWS_AS(merge(from_gaps(S, {})), Error);
}

TEST_CASE("random deletions keep invariants") {
  std::mt19937 rng(7);
  for (auto g : std::vector<V>{{3, 4}, {3, 7}, {4, 5, 6}, {5, 7}}) {
    auto S = make_semigroup(g);
    for (int trial = 0; trial < 50; ++trial) {
      auto D = from_gaps(S, {0});
      for (int step = 0; step < 12; ++step) {
        const int i = static_cast<int>(rng() % static_cast<unsigned>(D.n())) + 1;
        auto E = delete_generator(D, i);
        CHECK(E.colength() == D.colength() + 1);
        CHECK(merge(E).colength() == D.colength());
        CHECK_NOTHROW(from_gaps(S, E.gaps()));
        if (D.generators()[static_cast<std::size_t>(i - 1)] > D.frobenius()) CHECK(merge(E) == D);
        CHECK(merge(E).conductor() <= E.conductor());
        D = E;
      }
    }
  }
}
