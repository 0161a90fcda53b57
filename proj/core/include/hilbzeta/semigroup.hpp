#pragma once

// Numerical semigroups: invariants, (a,b) normal form for <p,q>, and the
// classification of monomial semigroups.

#include <memory>
#include <string>
#include <vector>

namespace hz {

class NumericalSemigroup {
 public:
  const std::vector<int>& generators() const { return gens_; }
  const std::vector<int>& gaps() const { return gaps_; }
  int conductor() const { return conductor_; }
  int delta() const { return static_cast<int>(gaps_.size()); }
  int multiplicity() const { return gens_.front(); }
  int max_generator() const { return gens_.back(); }
  int window() const { return window_; }
  int colength_budget() const { return budget_; }
  bool is_two_generator() const { return gens_.size() == 2; }

  // Exact for every integer, not just inside the window.
  bool contains(int x) const {
    if (x < 0) return false;
    if (x >= conductor_) return true;
    return member_[static_cast<std::size_t>(x)] != 0;
  }

  std::string str() const;  // "<3,4>"
  bool operator==(const NumericalSemigroup& o) const { return gens_ == o.gens_; }

 private:
  friend std::shared_ptr<const NumericalSemigroup> make_semigroup(std::vector<int>, int);
  std::vector<int> gens_;
  std::vector<char> member_;
  std::vector<int> gaps_;
  int conductor_ = 0;
  int window_ = 0;
  int budget_ = 0;
};

using SemigroupPtr = std::shared_ptr<const NumericalSemigroup>;

inline constexpr int kDefaultColengthBudget = 32;

// Canonicalizes to the minimal generating set.
SemigroupPtr make_semigroup(std::vector<int> generators,
                            int colength_budget = kDefaultColengthBudget);

struct PQCoordinates {
  int a = 0;
  int b = 0;
  int value = 0;
  bool operator==(const PQCoordinates&) const = default;
};

// m = a*q + b*p with 0 <= a < p.
PQCoordinates pq_normal_form(const NumericalSemigroup& S, int m);

// min{n : [n, inf) ⊆ Γ ∪ (x + Γ)} for a gap x.
int gap_conductor(const NumericalSemigroup& S, int x);

struct MonomialForm {
  enum class Variant { GammaMSB, GammaMR, GammaM, Smooth, NotMonomial };
  Variant variant = Variant::NotMonomial;
  int m = 0;
  int s = 0;
  int b = 0;
  int r = 0;
  bool is_monomial() const { return variant != Variant::NotMonomial; }
  std::string str() const;
  bool operator==(const MonomialForm&) const = default;
};

MonomialForm classify_monomial(const NumericalSemigroup& S);
bool is_monomial_by_gap_condition(const NumericalSemigroup& S);

// Same classification from a bare gap set (used by the exhaustive check).
MonomialForm classify_gap_set(const std::vector<int>& gaps);

}  // namespace hz
