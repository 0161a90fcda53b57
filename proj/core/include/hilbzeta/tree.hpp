#pragma once

// Levels D_ℓ and the tree G_Γ with edges Δ -> m(Δ).

#include <vector>

#include "hilbzeta/semimodule.hpp"

namespace hz {

// D_ℓ in lexicographic order of gap sets. D_0 = {Γ}.
std::vector<Semimodule> enumerate_level(const SemigroupPtr& S, int ell);

struct SemimoduleTree {
  SemigroupPtr semigroup;
  // levels[0] is D_1.
  std::vector<std::vector<Semimodule>> levels;
  // parents[k][v] indexes levels[k-1]; parents[0] is empty-valued (-1).
  std::vector<std::vector<int>> parents;
  // 1-based index of the deleted generator of the parent (edge label d_i).
  std::vector<std::vector<int>> edge_labels;

  int max_level() const { return static_cast<int>(levels.size()); }
  const std::vector<Semimodule>& level(int ell) const { return levels.at(ell - 1); }
  std::size_t vertex_count() const;
};

SemimoduleTree build_tree(const SemigroupPtr& S, int ell_max);

// Children of Δ' in the tree: deletions of generators above γ_{Δ'}.
std::vector<Semimodule> tree_children(const Semimodule& D);

Semimodule level_root(const SemigroupPtr& S, int ell);

struct PhiSequence {
  std::vector<int> phi;
  bool operator==(const PhiSequence&) const = default;
  auto operator<=>(const PhiSequence&) const = default;
};

struct PhiEntry {
  PhiSequence phi;
  Semimodule module;
  int strict_inequalities = 0;
};

std::vector<PhiEntry> phi_sequences(const SemigroupPtr& S, int ell);
Semimodule phi_to_module(const SemigroupPtr& S, const PhiSequence& phi);

}  // namespace hz
