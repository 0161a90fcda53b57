#include "hilbzeta/syzygy.hpp"

#include <algorithm>

#include "hilbzeta/errors.hpp"

namespace hz {

SyzygyModule syzygy_module(const Semimodule& D) {
  SyzygyModule out;
  if (D.n() < 2) return out;
  const auto& S = D.semigroup();
  const auto& T = D.generators();
  const int bound = T[1] + S.conductor() + 1;
  std::vector<int> gaps;
  for (int x = 0; x < bound; ++x) {
    if (!S.contains(x)) continue;
    int hits = 0;
    for (int g : T)
      if (S.contains(x - g) && ++hits == 2) break;
    if (hits < 2) gaps.push_back(x);
  }
  out.syz = make_semimodule_unchecked(D.semigroup_ptr(), std::move(gaps));
  out.t_syz = out.syz->generators();
  return out;
}

std::vector<AugmentedSyzygy> augmented_syzygy_pq(const Semimodule& D) {
  const auto& S = D.semigroup();
  if (!S.is_two_generator())
    throw Error(ErrorKind::NotTwoGenerator, S.str() + " does not have two generators");
  if (D.n() < 2) throw Error(ErrorKind::SingleGenerator, "Δ = " + D.str() + " is principal");
  const int p = S.generators()[0], q = S.generators()[1];
  std::vector<PQCoordinates> c;
  for (int g : D.generators()) c.push_back(pq_normal_form(S, g));
  std::sort(c.begin(), c.end(), [](const PQCoordinates& x, const PQCoordinates& y) {
    return x.a != y.a ? x.a < y.a : x.b > y.b;
  });
  std::vector<AugmentedSyzygy> out;
  const std::size_t n = c.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    out.push_back({c[i].value, c[i + 1].value, c[i + 1].a * q + c[i].b * p});
  out.push_back({c[n - 1].value, c[0].value, (c[0].a + p) * q + c[n - 1].b * p});
  return out;
}

int shared_syzygies_below(const Semimodule& D) {
  if (D.colength() == 0) throw Error(ErrorKind::FullModule, "shared syzygies of Γ");
  if (!D.semigroup().is_two_generator())
    throw Error(ErrorKind::NotTwoGenerator, D.semigroup().str() + " does not have two generators");
  const auto a = syzygy_module(D).t_syz;
  const auto b = syzygy_module(merge(D)).t_syz;
  const int f = D.frobenius();
  int count = 0;
  for (int s : a)
    if (s < f && std::binary_search(b.begin(), b.end(), s)) ++count;
  return count;
}

}  // namespace hz
