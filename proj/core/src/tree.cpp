#include "hilbzeta/tree.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "hilbzeta/errors.hpp"

namespace hz {

namespace {

void check_budget(const NumericalSemigroup& S, int ell) {
  if (ell < 0) throw Error(ErrorKind::InvalidArgument, "negative colength");
  if (ell > S.colength_budget())
    throw Error(ErrorKind::BudgetExceeded, "colength " + std::to_string(ell) + " exceeds budget " +
                                               std::to_string(S.colength_budget()));
}

std::vector<Semimodule> next_level(const std::vector<Semimodule>& level) {
  std::set<std::vector<int>> seen;
  std::vector<Semimodule> out;
  for (const auto& D : level) {
    for (int i = 1; i <= D.n(); ++i) {
      std::vector<int> gaps = D.gaps();
      const int g = D.generators()[static_cast<std::size_t>(i - 1)];
      gaps.insert(std::upper_bound(gaps.begin(), gaps.end(), g), g);
      if (seen.insert(gaps).second) out.push_back(make_semimodule_unchecked(D.semigroup_ptr(), gaps));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Semimodule> enumerate_level(const SemigroupPtr& S, int ell) {
  check_budget(*S, ell);
  std::vector<Semimodule> level{make_semimodule_unchecked(S, {})};
  for (int l = 1; l <= ell; ++l) level = next_level(level);
  return level;
}

std::size_t SemimoduleTree::vertex_count() const {
  std::size_t n = 0;
  for (const auto& l : levels) n += l.size();
  return n;
}

SemimoduleTree build_tree(const SemigroupPtr& S, int ell_max) {
  if (ell_max < 1) throw Error(ErrorKind::InvalidArgument, "tree needs ell_max >= 1");
  check_budget(*S, ell_max);
  SemimoduleTree t;
  t.semigroup = S;
  t.levels.push_back({make_semimodule_unchecked(S, {0})});
  t.parents.push_back({-1});
  t.edge_labels.push_back({0});
  for (int l = 2; l <= ell_max; ++l) {
    const auto& prev = t.levels.back();
    auto cur = next_level(prev);
    std::vector<int> par, lab;
    par.reserve(cur.size());
    for (const auto& D : cur) {
      Semimodule P = merge(D);
      auto it = std::lower_bound(prev.begin(), prev.end(), P);
      par.push_back(static_cast<int>(it - prev.begin()));
      const auto& gs = it->generators();
      lab.push_back(static_cast<int>(std::find(gs.begin(), gs.end(), D.frobenius()) - gs.begin()) + 1);
    }
    t.levels.push_back(std::move(cur));
    t.parents.push_back(std::move(par));
    t.edge_labels.push_back(std::move(lab));
  }
  return t;
}

std::vector<Semimodule> tree_children(const Semimodule& D) {
  const int f = D.colength() == 0 ? -1 : D.frobenius();
  std::vector<Semimodule> out;
  for (int i = 1; i <= D.n(); ++i)
    if (D.generators()[static_cast<std::size_t>(i - 1)] > f) out.push_back(delete_generator(D, i));
  return out;
}

Semimodule level_root(const SemigroupPtr& S, int ell) {
  if (ell < 1) throw Error(ErrorKind::InvalidArgument, "level_root needs ell >= 1");
  check_budget(*S, ell);
  Semimodule D = make_semimodule_unchecked(S, {0});
  for (int l = 1; l < ell; ++l) D = delete_generator(D, 1);
  return D;
}

Semimodule phi_to_module(const SemigroupPtr& S, const PhiSequence& phi) {
  const int k = S->generators()[0], n = S->generators()[1];
  std::vector<int> gens;
  for (std::size_t j = 0; j < phi.phi.size(); ++j)
    gens.push_back(phi.phi[j] * k + static_cast<int>(j) * n);
  return from_generators(S, gens);
}

std::vector<PhiEntry> phi_sequences(const SemigroupPtr& S, int ell) {
  if (!S->is_two_generator())
    throw Error(ErrorKind::NotTwoGenerator, S->str() + " does not have two generators");
  if (ell < 0) throw Error(ErrorKind::InvalidArgument, "negative colength");
  const int k = S->generators()[0], n = S->generators()[1];
  std::vector<PhiEntry> out;
  std::vector<int> phi(static_cast<std::size_t>(k), 0);
  // Non-increasing φ_0 >= ... >= φ_{k-1}, Σφ = ℓ, φ_0 <= φ_{k-1} + n.
  std::function<void(int, int, int)> rec = [&](int j, int remaining, int cap) {
    if (j == k) {
      if (remaining != 0 || phi[0] > phi[static_cast<std::size_t>(k - 1)] + n) return;
      PhiEntry e;
      e.phi.phi = phi;
      for (int i = 0; i + 1 < k; ++i) e.strict_inequalities += phi[i] > phi[i + 1];
      e.strict_inequalities += phi[static_cast<std::size_t>(k - 1)] + n > phi[0];
      e.module = phi_to_module(S, e.phi);
      out.push_back(std::move(e));
      return;
    }
    const int slots = k - j;
    for (int v = std::min(cap, remaining); v >= 0; --v) {
      if (v * slots < remaining) break;
      phi[static_cast<std::size_t>(j)] = v;
      rec(j + 1, remaining - v, v);
    }
  };
  rec(0, ell, ell);
  return out;
}

}  // namespace hz
