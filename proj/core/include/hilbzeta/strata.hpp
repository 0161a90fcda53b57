#pragma once

// Generator-count strata C^{[Δ],m}, the refined zeta series Zm, and the
// torus-knot HOMFLY polynomial.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hilbzeta/lpoly.hpp"
#include "hilbzeta/semimodule.hpp"

namespace hz {

// classes[m] = [C^{[Δ],m}], m = 0..n(Δ); classes[0] is always zero.
struct GenClassTable {
  std::vector<LPoly> classes;
  LPoly at(int m) const;
  LPoly total() const;
  bool operator==(const GenClassTable&) const = default;
};

std::map<int, std::int64_t> euler_strata(const Semimodule& D);

// One row per ℓ; row[k] is the coefficient of s^k with s = (1 - a^2).
struct GenSeries {
  std::vector<std::vector<LPoly>> rows;
  int exponent_offset = 1;
};

GenSeries euler_gen_zeta(const SemigroupPtr& S, int ell_max, int exponent_offset = 1);

enum class StrataMethod { Structural, Interpolation };

struct InterpolationOptions {
  std::vector<int> primes;        // empty: 2,3,5,... as needed
  std::uint64_t node_budget = 50'000'000;
};

GenClassTable motivic_gen_classes_pq(const Semimodule& D, StrataMethod method,
                                     const InterpolationOptions& opt = {});
// Runs both methods and throws MethodDisagreement on any difference.
GenClassTable motivic_gen_classes_checked(const Semimodule& D,
                                          const InterpolationOptions& opt = {});

GenSeries motivic_gen_zeta(const SemigroupPtr& S, int ell_max, int exponent_offset = 1);

// Row specializations used by the consistency checks.
LPoly row_at_s_equal_one(const std::vector<LPoly>& row);   // a^2 = 0
std::vector<LPoly> row_at_L_equal_one(const std::vector<LPoly>& row);

std::string gen_row_str(const std::vector<LPoly>& row, int exponent_offset = 1);
std::string gen_row_latex(const std::vector<LPoly>& row, int exponent_offset = 1);

// Integer Laurent polynomial in a and q.
class Laurent2 {
 public:
  using Key = std::pair<int, int>;  // (a-exponent, q-exponent)
  Laurent2() = default;
  static Laurent2 term(int a_exp, int q_exp, std::int64_t c = 1);

  const std::map<Key, std::int64_t>& terms() const { return t_; }
  Laurent2& operator+=(const Laurent2& o);
  Laurent2& operator-=(const Laurent2& o);
  Laurent2 operator*(const Laurent2& o) const;
  friend Laurent2 operator+(Laurent2 x, const Laurent2& y) { return x += y; }
  friend Laurent2 operator-(Laurent2 x, const Laurent2& y) { return x -= y; }
  bool operator==(const Laurent2&) const = default;
  bool is_zero() const { return t_.empty(); }
  std::string str() const;  // "a^2q^-2 + a^2q^2 - a^4"

 private:
  void add(Key k, std::int64_t c);
  std::map<Key, std::int64_t> t_;
};

Laurent2 homfly_pq(int p, int q, int tail_bound = 0);

}  // namespace hz
