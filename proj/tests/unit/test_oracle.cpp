#include <doctest.h>

#include "hilbzeta/errors.hpp"
#include "hilbzeta/motivic.hpp"
#include "hilbzeta/oracle.hpp"
#include "hilbzeta/tree.hpp"

using namespace hz;
using V = std::vector<int>;

namespace {

Vec mono(const TruncatedRing& R, std::vector<std::pair<int, std::uint32_t>> terms) {
  Vec v(static_cast<std::size_t>(R.T), 0);
  for (auto [e, c] : terms) v[static_cast<std::size_t>(e)] = c;
  return v;
}

}  // namespace

TEST_CASE("ideal_from_params") {
  auto S37 = make_semigroup({3, 7});
  auto D = from_generators(S37, {6, 10});
  auto R = make_truncated_ring_for(S37, 5, 6);
  auto params = normalized_parameters(D);
  CHECK(std::find(params.begin(), params.end(), ParamKey{0, 7}) != params.end());
  auto I = ideal_from_params(R, D, {{ParamKey{0, 7}, 1}});
  CHECK(I.contains(mono(R, {{14, 1}})));
  auto J = ideal_from_params(R, D, {});
  CHECK(value_set(R, J) == D);
  CHECK_FALSE(value_set(R, I) == D);
  CHECK(value_set(R, I).contains(14));

  auto S34 = make_semigroup({3, 4});
  auto E = from_generators(S34, {3, 8});
  auto R2 = make_truncated_ring_for(S34, 2, 4);
  CHECK(value_set(R2, ideal_from_params(R2, E, {{ParamKey{0, 4}, 1}})) == E);
  CHECK_THROWS_AS(ideal_from_params(make_truncated_ring(S34, 2, 5), E, {}), Error);
}

TEST_CASE("value_set") {
  auto S37 = make_semigroup({3, 7});
  auto R = make_truncated_ring_for(S37, 3, 4);
  auto I = ideal_generated_by(R, {mono(R, {{6, 1}}), mono(R, {{10, 1}}), mono(R, {{14, 1}})});
  CHECK(value_set(R, I).gaps() == V{0, 3, 7});
  auto J = ideal_generated_by(R, {mono(R, {{6, 1}, {7, 1}}), mono(R, {{10, 1}})});
  CHECK(value_set(R, J).contains(14));
  CHECK(value_set(R, ideal_generated_by(R, {mono(R, {{0, 1}})})).colength() == 0);
  CHECK_THROWS_AS(value_set(R, Subspace(3, R.T)), Error);
}

TEST_CASE("min_generators_count") {
  auto S37 = make_semigroup({3, 7});
  auto R = make_truncated_ring_for(S37, 3, 6);
  CHECK(min_generators_count(R, ideal_generated_by(R, {mono(R, {{7, 1}}), mono(R, {{9, 1}})})) == 2);
  CHECK(min_generators_count(R, ideal_generated_by(R, {mono(R, {{6, 1}}), mono(R, {{10, 1}}), mono(R, {{14, 1}})})) == 3);
  CHECK(min_generators_count(R, ideal_generated_by(R, {mono(R, {{3, 1}})})) == 1);
  Subspace notideal(3, R.T);
  notideal.insert(mono(R, {{3, 1}}));
  CHECK_THROWS_AS(min_generators_count(R, notideal), Error);
}

TEST_CASE("count_points examples") {
  auto S34 = make_semigroup({3, 4});
  auto c = count_points(from_generators(S34, {3, 8}), 2);
  std::uint64_t total = 0;
  for (auto& kv : c) total += kv.second;
  CHECK(total == 2);
  auto d = count_points(from_gaps(make_semigroup({3, 7}), {0, 3, 7}), 3);
  CHECK(d == std::map<int, std::uint64_t>{{2, 2}, {3, 1}});
  auto e = count_points(from_generators(make_semigroup({3, 7}), {7, 9}), 5);
  CHECK(e == std::map<int, std::uint64_t>{{2, 1}});
  CHECK_THROWS_AS(count_points(from_gaps(S34, {0}), 4), Error);
  CountOptions tiny;
  tiny.node_budget = 3;
  CHECK_THROWS_AS(count_points(from_generators(make_semigroup({3, 7}), {6}), 3, tiny), Error);
}

TEST_CASE("count_points invariants with uniqueness hashing") {
  CountOptions opt;
  opt.check_uniqueness = true;
  for (auto g : std::vector<V>{{3, 4}, {3, 7}, {2, 5}}) {
    auto S = make_semigroup(g);
    for (int l = 1; l <= 6; ++l)
      for (const auto& D : enumerate_level(S, l)) {
        const int N = n_delta(D).N;
        for (int q : {2, 3}) {
          auto a = count_points(D, q, opt);
          auto b = count_points(D, q, opt);
          CHECK(a == b);
          std::uint64_t total = 0;
          for (auto& kv : a) total += kv.second;
          std::uint64_t qn = 1;
          for (int i = 0; i < N; ++i) qn *= static_cast<std::uint64_t>(q);
          CHECK(total == qn);
        }
        auto R = make_truncated_ring_for(S, 2, l);
        CHECK(value_set(R, ideal_from_params(R, D, {})) == D);
      }
  }
}

TEST_CASE("verify_classes") {
  auto rep = verify_classes(make_semigroup({2, 3}), 4, {2});
  CHECK(rep.mismatches() == 0);
  for (const auto& r : rep.rows)
    if (r.kind == "level" && r.ell >= 2) CHECK(r.count == 3);
  CHECK(verify_classes(make_semigroup({3, 4}), 6, {2, 3}).mismatches() == 0);
  CHECK_THROWS_AS(verify_classes(make_semigroup({3, 4}), 2, {4}), Error);
  auto mono = verify_classes(make_semigroup({4, 5, 6}), 4, {2});
  CHECK(mono.mismatches() == 0);
  for (const auto& r : mono.rows) CHECK(r.kind != "generators");
  CHECK(is_prime(2));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(9));
}
