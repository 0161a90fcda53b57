#pragma once

// Γ-subsemimodules Δ ⊆ Γ, stored by their finite gap set Γ∖Δ.

#include <string>
#include <vector>

#include "hilbzeta/semigroup.hpp"

namespace hz {

class Semimodule {
 public:
  Semimodule() = default;

  const NumericalSemigroup& semigroup() const { return *S_; }
  const SemigroupPtr& semigroup_ptr() const { return S_; }
  const std::vector<int>& gaps() const { return gaps_; }
  int colength() const { return static_cast<int>(gaps_.size()); }
  const std::vector<int>& generators() const { return gens_; }
  int n() const { return static_cast<int>(gens_.size()); }
  // γ_Δ; throws FullModule when ℓ = 0.
  int frobenius() const;
  int conductor() const { return conductor_; }

  bool contains(int x) const;
  bool is_gap(int x) const;  // x ∈ Γ∖Δ

  // "(6,10,14)"
  std::string str() const;

  bool operator==(const Semimodule& o) const { return gaps_ == o.gaps_ && *S_ == *o.S_; }
  bool operator<(const Semimodule& o) const { return gaps_ < o.gaps_; }

 private:
  friend Semimodule make_semimodule_unchecked(SemigroupPtr, std::vector<int>);
  SemigroupPtr S_;
  std::vector<int> gaps_;
  std::vector<int> gens_;
  int conductor_ = 0;
};

Semimodule from_gaps(SemigroupPtr S, std::vector<int> gaps);
Semimodule from_generators(SemigroupPtr S, std::vector<int> gens);
// Gap set must already be closed; used internally by the tree.
Semimodule make_semimodule_unchecked(SemigroupPtr S, std::vector<int> gaps);

const std::vector<int>& minimal_generators(const Semimodule& D);
// i is 1-based into T_Δ.
Semimodule delete_generator(const Semimodule& D, int i);
Semimodule merge(const Semimodule& D);

struct SemimoduleHash {
  std::size_t operator()(const Semimodule& D) const;
};

}  // namespace hz
