#pragma once

// Finite-field point counting of normalized ideals in k[[t^Γ]] / t^T.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hilbzeta/semimodule.hpp"

namespace hz {

struct TruncatedRing {
  SemigroupPtr semigroup;
  int q = 2;
  int T = 0;
  std::vector<int> basis;  // Γ ∩ [0, T)
  // t^a * t^b within the truncation, or -1.
  int mul(int a, int b) const { return a + b < T ? a + b : -1; }
};

TruncatedRing make_truncated_ring(const SemigroupPtr& S, int q, int T);
// T = c(Γ) + ℓ_max + max(generators).
TruncatedRing make_truncated_ring_for(const SemigroupPtr& S, int q, int ell_max);

using Vec = std::vector<std::uint32_t>;  // coefficients of t^0 .. t^{T-1}

// Row-echelon subspace of F_q[t]/t^T; pivots are leading (lowest) exponents.
class Subspace {
 public:
  Subspace(int q, int T) : q_(q), T_(T) {}
  void insert(Vec v);
  const std::map<int, Vec>& rows() const { return rows_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  std::vector<int> leading_exponents() const;
  bool contains(const Vec& v) const;
  int q() const { return q_; }
  int T() const { return T_; }

 private:
  Vec reduce(Vec v) const;
  int q_, T_;
  std::map<int, Vec> rows_;
};

struct ParamKey {
  int j = 0;  // generator index into T_Δ
  int k = 0;  // exponent, k ∈ Γ_{>γ_j}∖Δ
  auto operator<=>(const ParamKey&) const = default;
};

std::vector<ParamKey> normalized_parameters(const Semimodule& D);

// Normalized generators f_j = t^{γ_j} + Σ λ_j^k t^k as vectors.
std::vector<Vec> deformed_generators(const TruncatedRing& R, const Semimodule& D,
                                     const std::map<ParamKey, std::uint32_t>& lambda);

Subspace ideal_from_params(const TruncatedRing& R, const Semimodule& D,
                           const std::map<ParamKey, std::uint32_t>& lambda);
Subspace ideal_generated_by(const TruncatedRing& R, const std::vector<Vec>& gens);
// Leading exponents completed to a Γ-module; throws TruncationTooSmall if
// the exponents below T are not Γ-closed.
Semimodule value_set(const TruncatedRing& R, const Subspace& I);
int min_generators_count(const TruncatedRing& R, const Subspace& I);

struct CountOptions {
  std::uint64_t node_budget = 200'000'000;
  bool check_uniqueness = false;  // hash reduced echelon forms of accepted ideals
};

// m -> number of λ with value set Δ and m(I) = m.
std::map<int, std::uint64_t> count_points(const Semimodule& D, int q,
                                          const CountOptions& opt = {});

struct ReportRow {
  std::string kind;  // "level", "stratum" or "generators"
  std::string semigroup;
  int ell = 0;
  std::vector<int> gaps;
  int m = 0;  // 0 on level and whole-stratum rows
  int q = 0;
  std::string symbolic;
  std::int64_t expected = 0;
  std::int64_t count = 0;
  bool match = false;
};

struct VerifyReport {
  std::vector<ReportRow> rows;
  std::size_t mismatches() const;
};

VerifyReport verify_classes(const SemigroupPtr& S, int ell_max, const std::vector<int>& fields,
                            const CountOptions& opt = {});

bool is_prime(int q);

}  // namespace hz
