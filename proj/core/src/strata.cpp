#include "hilbzeta/strata.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>

#include "hilbzeta/cellular.hpp"
#include "hilbzeta/errors.hpp"
#include "hilbzeta/motivic.hpp"
#include "hilbzeta/oracle.hpp"
#include "hilbzeta/tree.hpp"

namespace hz {

LPoly GenClassTable::at(int m) const {
  if (m < 0 || m >= static_cast<int>(classes.size())) return {};
  return classes[static_cast<std::size_t>(m)];
}

LPoly GenClassTable::total() const {
  LPoly r;
  for (const auto& c : classes) r += c;
  return r;
}

static void require_pq(const NumericalSemigroup& S) {
  if (!S.is_two_generator())
    throw Error(ErrorKind::NotTwoGenerator, S.str() + " does not have two generators");
}

std::map<int, std::int64_t> euler_strata(const Semimodule& D) {
  require_pq(D.semigroup());
  return {{D.n(), 1}};
}

static void check_offset(int off) {
  if (off != 0 && off != 1) throw Error(ErrorKind::InvalidArgument, "exponent offset must be 0 or 1");
}

GenSeries euler_gen_zeta(const SemigroupPtr& S, int ell_max, int exponent_offset) {
  require_pq(*S);
  check_offset(exponent_offset);
  GenSeries g;
  g.exponent_offset = exponent_offset;
  for (int l = 0; l <= ell_max; ++l) {
    std::vector<LPoly> row;
    for (const auto& D : enumerate_level(S, l)) {
      const std::size_t k = static_cast<std::size_t>(D.n() - exponent_offset);
      if (row.size() <= k) row.resize(k + 1);
      row[k] += LPoly(1);
    }
    g.rows.push_back(std::move(row));
  }
  return g;
}

namespace {

__extension__ using i128 = __int128;

// Exact rational arithmetic for Newton interpolation.
struct Frac {
  i128 n = 0, d = 1;
  static i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) { i128 t = a % b; a = b; b = t; }
    return a;
  }
  Frac(i128 num = 0, i128 den = 1) : n(num), d(den) {
    if (d < 0) { n = -n; d = -d; }
    i128 g = gcd128(n, d);
    if (g > 1) { n /= g; d /= g; }
  }
  Frac operator-(const Frac& o) const { return Frac(n * o.d - o.n * d, d * o.d); }
  Frac operator+(const Frac& o) const { return Frac(n * o.d + o.n * d, d * o.d); }
  Frac operator*(const Frac& o) const { return Frac(n * o.n, d * o.d); }
  Frac operator/(const Frac& o) const { return Frac(n * o.d, d * o.n); }
};

// Polynomial of degree <= xs.size()-1 through (xs, ys); nullopt if not integral.
std::optional<LPoly> fit_integer_poly(const std::vector<std::int64_t>& xs, const std::vector<std::int64_t>& ys) {
  const std::size_t n = xs.size();
  std::vector<Frac> coef(ys.begin(), ys.end());
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      coef[i] = (coef[i] - coef[i - 1]) / Frac(xs[i] - xs[i - j]);
      if (i == j) break;
    }
  // Expand Newton form into monomial basis.
  std::vector<Frac> poly{coef[n - 1]};
  for (std::size_t i = n - 1; i-- > 0;) {
    std::vector<Frac> next(poly.size() + 1);
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k + 1] = next[k + 1] + poly[k];
      next[k] = next[k] - poly[k] * Frac(xs[i]);
    }
    next[0] = next[0] + coef[i];
    poly = std::move(next);
  }
  std::vector<std::int64_t> out;
  for (const auto& f : poly) {
    if (f.d != 1) return std::nullopt;
    out.push_back(static_cast<std::int64_t>(f.n));
  }
  return LPoly::from_coeffs(std::move(out));
}

std::string table_str(const GenClassTable& t) {
  std::ostringstream os;
  os << "{";
  for (std::size_t m = 1; m < t.classes.size(); ++m) os << (m > 1 ? ", " : "") << m << ": " << t.classes[m].str();
  os << "}";
  return os.str();
}

}  // namespace

GenClassTable motivic_gen_classes_pq(const Semimodule& D, StrataMethod method,
                                     const InterpolationOptions& opt) {
  require_pq(D.semigroup());
  if (method == StrataMethod::Structural) return decompose_strata(D).table(D.n());

  const int N = n_delta(D, Mode::PQ).N;
  std::vector<int> primes = opt.primes;
  for (int p = 2; static_cast<int>(primes.size()) < N + 2; ++p)
    if (is_prime(p) && std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
  primes.resize(static_cast<std::size_t>(N + 2));

  CountOptions co;
  co.node_budget = opt.node_budget;
  std::vector<std::map<int, std::uint64_t>> counts;
  for (int p : primes) {
    try {
      counts.push_back(count_points(D, p, co));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::BudgetExceeded)
        throw Error(ErrorKind::InterpolationBudgetExceeded, std::string(e.what()) + " while interpolating " + D.str());
      throw;
    }
  }
  GenClassTable t;
  t.classes.assign(static_cast<std::size_t>(D.n()) + 1, LPoly());
  for (int m = 1; m <= D.n(); ++m) {
    std::vector<std::int64_t> xs, ys;
    for (std::size_t i = 0; i + 1 < primes.size(); ++i) {
      xs.push_back(primes[i]);
      auto it = counts[i].find(m);
      ys.push_back(it == counts[i].end() ? 0 : static_cast<std::int64_t>(it->second));
    }
    auto fit = fit_integer_poly(xs, ys);
    auto last = counts.back().find(m);
    const std::int64_t check = last == counts.back().end() ? 0 : static_cast<std::int64_t>(last->second);
    if (!fit || fit->eval(primes.back()) != check)
      throw Error(ErrorKind::InterpolationBudgetExceeded,
                  "point counts for " + D.str() + ", m = " + std::to_string(m) +
                      " are not a polynomial of degree <= N(Δ) over the chosen primes");
    t.classes[static_cast<std::size_t>(m)] = *fit;
  }
  return t;
}

GenClassTable motivic_gen_classes_checked(const Semimodule& D, const InterpolationOptions& opt) {
  auto a = motivic_gen_classes_pq(D, StrataMethod::Structural, opt);
  auto b = motivic_gen_classes_pq(D, StrataMethod::Interpolation, opt);
  if (!(a == b))
    throw Error(ErrorKind::MethodDisagreement,
                D.str() + ": structural " + table_str(a) + " vs interpolation " + table_str(b));
  return a;
}

GenSeries motivic_gen_zeta(const SemigroupPtr& S, int ell_max, int exponent_offset) {
  require_pq(*S);
  check_offset(exponent_offset);
  GenSeries g;
  g.exponent_offset = exponent_offset;
  for (int l = 0; l <= ell_max; ++l) {
    std::vector<LPoly> row;
    for (const auto& D : enumerate_level(S, l)) {
      const auto t = motivic_gen_classes_pq(D, StrataMethod::Structural);
      for (int m = 1; m <= D.n(); ++m) {
        if (t.at(m).is_zero()) continue;
        const std::size_t k = static_cast<std::size_t>(m - exponent_offset);
        if (row.size() <= k) row.resize(k + 1);
        row[k] += t.at(m);
      }
    }
    g.rows.push_back(std::move(row));
  }
  return g;
}

LPoly row_at_s_equal_one(const std::vector<LPoly>& row) {
  LPoly r;
  for (const auto& c : row) r += c;
  return r;
}

std::vector<LPoly> row_at_L_equal_one(const std::vector<LPoly>& row) {
  std::vector<LPoly> r;
  for (const auto& c : row) r.push_back(LPoly(c.eval(1)));
  while (!r.empty() && r.back().is_zero()) r.pop_back();
  return r;
}

static std::string gen_row_render(const std::vector<LPoly>& row, int off, bool tex) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < row.size(); ++k) {
    const LPoly& c = row[k];
    if (c.is_zero()) continue;
    const int terms = static_cast<int>(std::count_if(c.coeffs().begin(), c.coeffs().end(),
                                                     [](std::int64_t x) { return x != 0; }));
    std::string body = tex ? c.latex() : c.str();
    bool neg = false;
    if (terms == 1 && body[0] == '-') {
      neg = true;
      body = body.substr(1);
    }
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    first = false;
    const std::string s = tex ? "(1-a^{2})" : "(1-a^2)";
    if (k == 0) {
      os << body;
      continue;
    }
    if (terms > 1) os << "(" << body << ")";
    else if (body != "1") os << body;
    os << s;
    if (k > 1) os << (tex ? "^{" + std::to_string(k) + "}" : "^" + std::to_string(k));
  }
  (void)off;
  return first ? "0" : os.str();
}

std::string gen_row_str(const std::vector<LPoly>& row, int off) { return gen_row_render(row, off, false); }
std::string gen_row_latex(const std::vector<LPoly>& row, int off) { return gen_row_render(row, off, true); }

// ---- HOMFLY ----

Laurent2 Laurent2::term(int a_exp, int q_exp, std::int64_t c) {
  Laurent2 r;
  r.add({a_exp, q_exp}, c);
  return r;
}

void Laurent2::add(Key k, std::int64_t c) {
  if (c == 0) return;
  auto it = t_.find(k);
  if (it == t_.end()) {
    t_.emplace(k, c);
    return;
  }
  it->second = checked_add(it->second, c);
  if (it->second == 0) t_.erase(it);
}

Laurent2& Laurent2::operator+=(const Laurent2& o) {
  for (const auto& [k, c] : o.t_) add(k, c);
  return *this;
}

Laurent2& Laurent2::operator-=(const Laurent2& o) {
  for (const auto& [k, c] : o.t_) add(k, -c);
  return *this;
}

Laurent2 Laurent2::operator*(const Laurent2& o) const {
  Laurent2 r;
  for (const auto& [k1, c1] : t_)
    for (const auto& [k2, c2] : o.t_) r.add({k1.first + k2.first, k1.second + k2.second}, checked_mul(c1, c2));
  return r;
}

std::string Laurent2::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : t_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const std::int64_t a = c < 0 ? -c : c;
    const bool bare = k.first == 0 && k.second == 0;
    if (a != 1 || bare) os << a;
    if (k.first != 0) {
      os << "a";
      if (k.first != 1) os << "^" << k.first;
    }
    if (k.second != 0) {
      os << "q";
      if (k.second != 1) os << "^" << k.second;
    }
  }
  return os.str();
}

Laurent2 homfly_pq(int p, int q, int tail_bound) {
  if (p < 2 || q < 2) throw Error(ErrorKind::InvalidArgument, "torus knot needs p, q >= 2");
  if (std::gcd(p, q) != 1) throw Error(ErrorKind::NonCoprime, "p and q must be coprime");
  const int delta = (p - 1) * (q - 1) / 2;
  const int buffer = std::max(p, q);
  if (tail_bound <= 0) tail_bound = 2 * delta + 2 * buffer;
  auto S = make_semigroup({p, q}, tail_bound);
  const auto series = euler_gen_zeta(S, tail_bound, 1);

  auto row_poly = [](const std::vector<LPoly>& row) {
    // Σ_k c_k (1 - a^2)^k
    Laurent2 r, s = Laurent2::term(0, 0) - Laurent2::term(2, 0), pw = Laurent2::term(0, 0);
    for (const auto& c : row) {
      r += pw * Laurent2::term(0, 0, c.eval(1));
      pw = pw * s;
    }
    return r;
  };
  const auto& rows = series.rows;
  int ls = static_cast<int>(rows.size()) - 1;
  while (ls > 0 && rows[static_cast<std::size_t>(ls - 1)] == rows.back()) --ls;
  if (static_cast<int>(rows.size()) - 1 - ls < buffer)
    throw Error(ErrorKind::NoStabilization, "Euler rows not stable by level " + std::to_string(tail_bound));

  Laurent2 sum;
  const Laurent2 one_minus_q2 = Laurent2::term(0, 0) - Laurent2::term(0, 2);
  for (int l = 0; l < ls; ++l) sum += one_minus_q2 * Laurent2::term(0, 2 * l) * row_poly(rows[static_cast<std::size_t>(l)]);
  sum += Laurent2::term(0, 2 * ls) * row_poly(rows[static_cast<std::size_t>(ls)]);
  const int mu = 2 * delta;
  return Laurent2::term(mu, -mu) * sum;
}

}  // namespace hz
