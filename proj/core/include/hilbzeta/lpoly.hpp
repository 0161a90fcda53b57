#pragma once

// Integer polynomials in the Lefschetz class L.

#include <cstdint>
#include <string>
#include <vector>

namespace hz {

class LPoly {
 public:
  LPoly() = default;
  LPoly(std::int64_t c);  // NOLINT: constants convert implicitly
  static LPoly monomial(int deg, std::int64_t c = 1);
  static LPoly from_coeffs(std::vector<std::int64_t> c);
  // (L-1)^a L^b
  static LPoly torus_cell(int a, int b);

  const std::vector<std::int64_t>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  std::int64_t coeff(int d) const;
  std::int64_t eval(std::int64_t x) const;

  LPoly& operator+=(const LPoly& o);
  LPoly& operator-=(const LPoly& o);
  LPoly operator*(const LPoly& o) const;
  friend LPoly operator+(LPoly a, const LPoly& b) { return a += b; }
  friend LPoly operator-(LPoly a, const LPoly& b) { return a -= b; }
  LPoly operator-() const;
  bool operator==(const LPoly& o) const = default;
  auto operator<=>(const LPoly& o) const = default;

  // "1 + L + 2L^2"; variable name configurable.
  std::string str(const std::string& var = "L") const;
  std::string latex() const;

 private:
  void trim();
  std::vector<std::int64_t> c_;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace hz
