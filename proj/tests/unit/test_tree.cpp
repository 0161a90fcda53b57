#include <doctest.h>

#include <random>

#include "brute.hpp"
#include "hilbzeta/errors.hpp"
#include "hilbzeta/tree.hpp"

using namespace hz;
using V = std::vector<int>;

namespace {

std::vector<V> gap_sets(const std::vector<Semimodule>& level) {
  std::vector<V> out;
  for (const auto& D : level) out.push_back(D.gaps());
  return out;
}

std::vector<V> gens(const std::vector<Semimodule>& level) {
  std::vector<V> out;
  for (const auto& D : level) out.push_back(D.generators());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("enumerate_level examples") {
  auto S34 = make_semigroup({3, 4});
  CHECK(gens(enumerate_level(S34, 2)) == std::vector<V>{{3, 8}, {4, 6}});
  CHECK(gens(enumerate_level(make_semigroup({2, 3}), 3)) == std::vector<V>{{3}, {4, 5}});
  CHECK(enumerate_level(S34, 6).size() == 5);
  CHECK(enumerate_level(S34, 0).size() == 1);
  CHECK_THROWS_AS(enumerate_level(make_semigroup({3, 4}, 4), 5), Error);
}

TEST_CASE("E6 levels agree with the reference listing") {
  auto S = make_semigroup({3, 4});
  CHECK(gens(enumerate_level(S, 3)) == std::vector<V>{{3}, {4, 9}, {6, 7, 8}});
  CHECK(gens(enumerate_level(S, 4)) == std::vector<V>{{4}, {6, 7}, {6, 8}, {7, 8, 9}});
  // The reference listing has (8,9,10) twice at level 5; there are four modules.
  CHECK(gens(enumerate_level(S, 5)) == std::vector<V>{{6, 11}, {7, 8}, {7, 9}, {8, 9, 10}});
  CHECK(gens(enumerate_level(S, 6)) == std::vector<V>{{6}, {7, 12}, {8, 9}, {8, 10}, {9, 10, 11}});
}

TEST_CASE("levels agree with co-ideal enumeration") {
  for (auto g : std::vector<V>{{2, 3}, {3, 4}, {3, 5}, {3, 7}, {4, 5, 6}, {4, 6, 7}, {5, 6, 7, 8, 9}}) {
    auto S = make_semigroup(g);
    for (int l = 0; l <= S->conductor() + 2; ++l) {
      CAPTURE(S->str());
      CAPTURE(l);
      auto ours = gap_sets(enumerate_level(S, l));
      CHECK(ours == bf::level_gap_sets(g, l));
      for (const auto& D : enumerate_level(S, l)) CHECK(D.generators() == bf::module_generators(g, D.gaps()));
    }
  }
}

TEST_CASE("build_tree matches the E6 figure") {
  auto S = make_semigroup({3, 4});
  auto t = build_tree(S, 6);
  CHECK(t.max_level() == 6);
  CHECK(t.level(1).front().str() == "(3,4)");
  const auto& l2 = t.level(2);
  REQUIRE(l2.size() == 2);
  // lexicographic by gap set: {0,2}... for <3,4> the order is (4,6) = {0,3} then (3,8) = {0,4}
  CHECK(l2[0].str() == "(4,6)");
  CHECK(l2[1].str() == "(3,8)");
  CHECK(t.edge_labels[1][0] == 1);
  CHECK(t.edge_labels[1][1] == 2);
  CHECK(build_tree(S, 1).vertex_count() == 1);
  auto t23 = build_tree(make_semigroup({2, 3}), 2);
  CHECK(gens(t23.level(2)) == std::vector<V>{{2}, {3, 4}});
}

TEST_CASE("tree structure: parents are merges, children are deletions above frobenius") {
  for (auto g : std::vector<V>{{3, 4}, {3, 7}, {4, 5, 6}, {2, 7}}) {
    auto S = make_semigroup(g);
    auto t = build_tree(S, 10);
    std::size_t edges = 0;
    for (int l = 2; l <= t.max_level(); ++l) {
      const auto& lv = t.level(l);
      for (std::size_t i = 0; i < lv.size(); ++i) {
        const int p = t.parents[static_cast<std::size_t>(l - 1)][i];
        REQUIRE(p >= 0);
        const auto& P = t.level(l - 1)[static_cast<std::size_t>(p)];
        CHECK(merge(lv[i]) == P);
        CHECK(delete_generator(P, t.edge_labels[static_cast<std::size_t>(l - 1)][i]) == lv[i]);
        ++edges;
      }
      std::size_t kids = 0;
      for (const auto& P : t.level(l - 1)) kids += tree_children(P).size();
      CHECK(kids == lv.size());
    }
    CHECK(edges + 1 == t.vertex_count());
  }
}

TEST_CASE("level roots") {
  auto S = make_semigroup({3, 4});
  CHECK(level_root(S, 3).str() == "(6,7,8)");
  CHECK(level_root(S, 1).gaps() == V{0});
  CHECK(level_root(make_semigroup({2, 5}), 4).gaps() == V{0, 2, 4, 5});
  for (int l = 1; l < 12; ++l) {
    auto R = level_root(make_semigroup({3, 7}), l);
    CHECK(R.frobenius() < R.generators().front());
  }
}

TEST_CASE("phi sequences") {
  auto S = make_semigroup({3, 4});
  auto four = phi_sequences(S, 4);
  std::vector<V> seqs;
  for (const auto& e : four) seqs.push_back(e.phi.phi);
  std::sort(seqs.begin(), seqs.end());
  CHECK(seqs == std::vector<V>{{2, 1, 1}, {2, 2, 0}, {3, 1, 0}, {4, 0, 0}});
  auto one = phi_sequences(S, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].module.str() == "(3,4)");
  for (const auto& e : phi_sequences(S, 3))
    if (e.phi.phi == V{2, 1, 0}) {
      CHECK(e.module.str() == "(6,7,8)");
      CHECK(e.strict_inequalities == 3);
    }
  CHECK_THROWS_AS(phi_sequences(make_semigroup({4, 5, 6}), 2), Error);
}

TEST_CASE("A_2d level shapes") {
  for (int d = 1; d <= 5; ++d) {
    auto S = make_semigroup({2, 2 * d + 1});
    for (int l = 1; l <= 2 * d; ++l) {
      auto lv = enumerate_level(S, l);
      int expected = 0;
      for (int i = 0; i <= l; ++i)
        if (2 * i >= l) ++expected;
      CHECK(static_cast<int>(lv.size()) == expected);
      auto R = level_root(S, l);
      CHECK(R.n() == 2);
      if (l >= d) {
        CHECK(R.generators()[0] == l + d);
        CHECK(R.generators()[1] == l + d + 1);
      } else {
        CHECK(R.generators()[0] == 2 * l);
        CHECK(R.generators()[1] == 2 * d + 1);
      }
    }
  }
}
