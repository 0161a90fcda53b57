#pragma once

// N(Δ), B(Δ), level classes [C^{[ℓ]}] and the motivic Hilbert zeta series.

#include <optional>
#include <string>
#include <vector>

#include "hilbzeta/lpoly.hpp"
#include "hilbzeta/semimodule.hpp"

namespace hz {

enum class Mode { PQ, Monomial };

// Two minimal generators -> PQ, else monomial -> Monomial, else throws.
Mode select_mode(const NumericalSemigroup& S);

struct DimensionData {
  int N = 0;
  int B = 0;
  std::vector<int> gen_gap_counts;
  std::vector<int> syz_gap_counts;
};

DimensionData n_delta(const Semimodule& D, Mode mode);
DimensionData n_delta(const Semimodule& D);
int b_delta(const Semimodule& D);
int n_delta_recursive(const Semimodule& D);

LPoly hilbert_class(const SemigroupPtr& S, int ell);

// Polynomial in q with LPoly coefficients, indexed by q-degree.
using QSeries = std::vector<LPoly>;

struct ZetaSeries {
  std::vector<LPoly> coefficients;  // index ℓ
  std::optional<int> stabilization_level;
  QSeries numerator;  // Z(q)(1-q); empty unless stabilized
};

// Stabilized means constant for at least `buffer` levels at the end.
ZetaSeries zeta_from_coefficients(std::vector<LPoly> coeffs, int buffer);
ZetaSeries zeta_series(const SemigroupPtr& S, int ell_max);
ZetaSeries a2d_closed_form(int d, int ell_max);

std::string qseries_str(const QSeries& s, const std::string& qvar = "q");

}  // namespace hz
