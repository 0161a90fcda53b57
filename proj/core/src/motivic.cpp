#include "hilbzeta/motivic.hpp"

#include <algorithm>
#include <sstream>

#include "hilbzeta/errors.hpp"
#include "hilbzeta/syzygy.hpp"
#include "hilbzeta/tree.hpp"

namespace hz {

Mode select_mode(const NumericalSemigroup& S) {
  if (S.is_two_generator()) return Mode::PQ;
  if (classify_monomial(S).is_monomial()) return Mode::Monomial;
  throw Error(ErrorKind::UnsupportedSemigroup,
              S.str() + " is neither two-generated nor monomial");
}

static int gaps_above(const Semimodule& D, int x) {
  const auto& g = D.gaps();
  return static_cast<int>(g.end() - std::upper_bound(g.begin(), g.end(), x));
}

DimensionData n_delta(const Semimodule& D, Mode mode) {
  const auto& S = D.semigroup();
  if (mode == Mode::PQ && !S.is_two_generator())
    throw Error(ErrorKind::UnsupportedSemigroup, "PQ mode on " + S.str());
  if (mode == Mode::Monomial && !classify_monomial(S).is_monomial())
    throw Error(ErrorKind::UnsupportedSemigroup, "monomial mode on " + S.str());
  DimensionData d;
  for (int g : D.generators()) {
    d.gen_gap_counts.push_back(gaps_above(D, g));
    d.N += d.gen_gap_counts.back();
  }
  for (int s : syzygy_module(D).t_syz) {
    d.syz_gap_counts.push_back(mode == Mode::PQ ? gaps_above(D, s) : 0);
    d.N -= d.syz_gap_counts.back();
  }
  d.B = D.colength() == 0 ? 0 : b_delta(D);
  return d;
}

DimensionData n_delta(const Semimodule& D) { return n_delta(D, select_mode(D.semigroup())); }

int b_delta(const Semimodule& D) {
  const int f = D.frobenius();
  const auto& T = D.generators();
  return static_cast<int>(std::lower_bound(T.begin(), T.end(), f) - T.begin());
}

int n_delta_recursive(const Semimodule& D) {
  const Mode mode = select_mode(D.semigroup());
  int N = 0;
  Semimodule cur = D;
  while (cur.colength() > 1) {
    N += b_delta(cur);
    if (mode == Mode::PQ) N -= shared_syzygies_below(cur);
    cur = merge(cur);
  }
  return N;
}

LPoly hilbert_class(const SemigroupPtr& S, int ell) {
  const Mode mode = select_mode(*S);
  LPoly r;
  for (const auto& D : enumerate_level(S, ell)) r += LPoly::monomial(n_delta(D, mode).N);
  return r;
}

ZetaSeries zeta_from_coefficients(std::vector<LPoly> coeffs, int buffer) {
  ZetaSeries z;
  z.coefficients = std::move(coeffs);
  const auto& c = z.coefficients;
  if (c.empty()) return z;
  const int last = static_cast<int>(c.size()) - 1;
  int ls = last;
  while (ls > 0 && c[static_cast<std::size_t>(ls - 1)] == c.back()) --ls;
  if (last - ls < buffer) return z;
  z.stabilization_level = ls;
  for (int l = 0; l <= ls; ++l) {
    LPoly d = c[static_cast<std::size_t>(l)];
    if (l > 0) d -= c[static_cast<std::size_t>(l - 1)];
    z.numerator.push_back(d);
  }
  while (!z.numerator.empty() && z.numerator.back().is_zero()) z.numerator.pop_back();
  return z;
}

ZetaSeries zeta_series(const SemigroupPtr& S, int ell_max) {
  const Mode mode = select_mode(*S);
  if (ell_max < 0) throw Error(ErrorKind::InvalidArgument, "negative ell_max");
  if (ell_max > S->colength_budget())
    throw Error(ErrorKind::BudgetExceeded, "ell_max exceeds colength budget");
  std::vector<LPoly> coeffs;
  std::vector<Semimodule> level{make_semimodule_unchecked(S, {})};
  for (int l = 0; l <= ell_max; ++l) {
    if (l > 0) level = enumerate_level(S, l);
    LPoly r;
    for (const auto& D : level) r += LPoly::monomial(n_delta(D, mode).N);
    coeffs.push_back(r);
  }
  return zeta_from_coefficients(std::move(coeffs), S->max_generator());
}

ZetaSeries a2d_closed_form(int d, int ell_max) {
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "d must be >= 1");
  std::vector<LPoly> coeffs;
  for (int l = 0; l <= ell_max; ++l) {
    LPoly r;
    for (int k = 0; k <= std::min(d, l / 2); ++k) r += LPoly::monomial(k);
    coeffs.push_back(r);
  }
  return zeta_from_coefficients(std::move(coeffs), 2 * d + 1);
}

std::string qseries_str(const QSeries& s, const std::string& qvar) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t d = 0; d < s.size(); ++d) {
    const LPoly& c = s[d];
    if (c.is_zero()) continue;
    std::string body = c.str();
    const int terms = static_cast<int>(std::count_if(c.coeffs().begin(), c.coeffs().end(),
                                                     [](std::int64_t x) { return x != 0; }));
    bool neg = false;
    if (terms == 1 && body[0] == '-') {
      neg = true;
      body = body.substr(1);
    }
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    first = false;
    if (d == 0) {
      os << body;
      continue;
    }
    if (terms > 1) os << "(" << body << ")";
    else if (body != "1") os << body;
    os << qvar;
    if (d > 1) os << "^" << d;
  }
  return first ? "0" : os.str();
}

}  // namespace hz
