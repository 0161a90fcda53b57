#include "hilbzeta/cellular.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <utility>

#include "hilbzeta/errors.hpp"
#include "hilbzeta/motivic.hpp"

namespace hz {

namespace {

struct Rat {
  std::int64_t n = 0, d = 1;
  Rat() = default;
  Rat(std::int64_t num, std::int64_t den = 1) : n(num), d(den) { norm(); }
  void norm() {
    if (d < 0) { n = -n; d = -d; }
    std::int64_t g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    if (n == 0) d = 1;
  }
  bool zero() const { return n == 0; }
  Rat operator+(const Rat& o) const {
    return Rat(checked_add(checked_mul(n, o.d), checked_mul(o.n, d)), checked_mul(d, o.d));
  }
  Rat operator*(const Rat& o) const { return Rat(checked_mul(n, o.n), checked_mul(d, o.d)); }
  Rat operator-() const { return Rat(-n, d); }
  Rat inv() const {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "division by zero");
    return Rat(d, n);
  }
};

using Mono = std::vector<std::pair<int, int>>;  // (variable, exponent), sorted, exponent != 0
using Poly = std::map<Mono, Rat>;

Mono mono_mul(const Mono& a, const Mono& b) {
  Mono r;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) r.push_back(a[i++]);
    else if (i == a.size() || b[j].first < a[i].first) r.push_back(b[j++]);
    else {
      int e = a[i].second + b[j].second;
      if (e != 0) r.emplace_back(a[i].first, e);
      ++i;
      ++j;
    }
  }
  return r;
}

void add_term(Poly& p, const Mono& m, const Rat& c) {
  if (c.zero()) return;
  auto it = p.find(m);
  if (it == p.end()) {
    p.emplace(m, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.zero()) p.erase(it);
}

// a += c * b
void axpy(Poly& a, const Poly& c, const Poly& b) {
  for (const auto& [mc, kc] : c)
    for (const auto& [mb, kb] : b) add_term(a, mono_mul(mc, mb), kc * kb);
}

Poly mul(const Poly& a, const Poly& b) {
  Poly r;
  axpy(r, a, b);
  return r;
}

Poly constant(const Rat& c) {
  Poly p;
  add_term(p, {}, c);
  return p;
}

Poly variable(int v) {
  Poly p;
  add_term(p, {{v, 1}}, Rat(1));
  return p;
}

Poly neg(const Poly& p) {
  Poly r;
  for (const auto& [m, c] : p) r.emplace(m, -c);
  return r;
}

int exponent_of(const Mono& m, int v) {
  for (const auto& [x, e] : m)
    if (x == v) return e;
  return 0;
}

Poly substitute(const Poly& p, int v, const Poly& val) {
  bool touches = false;
  for (const auto& t : p)
    if (exponent_of(t.first, v) != 0) { touches = true; break; }
  if (!touches) return p;
  std::vector<Poly> powers{constant(Rat(1))};
  Poly r;
  for (const auto& [m, c] : p) {
    const int e = exponent_of(m, v);
    if (e < 0) throw Error(ErrorKind::NonTriangular, "negative power of an affine coordinate");
    while (static_cast<int>(powers.size()) <= e) powers.push_back(mul(powers.back(), val));
    Mono rest;
    for (const auto& xe : m)
      if (xe.first != v) rest.push_back(xe);
    Poly term;
    add_term(term, rest, c);
    axpy(r, term, powers[static_cast<std::size_t>(e)]);
  }
  return r;
}

struct Linear {
  Mono unit;
  Rat unit_coeff;
  Poly rest;
};

struct State {
  std::vector<std::vector<Poly>> rows;
  std::vector<char> is_pivot;
  std::vector<int> pivot_at;
  std::vector<char> affine;  // by variable id
  std::vector<char> torus;
  std::vector<int> redundant;
};

class Engine {
 public:
  explicit Engine(const Semimodule& D) : D_(D), S_(D.semigroup()) {
    T_ = D.conductor() + S_.multiplicity();
    const auto& gens = D.generators();
    for (std::size_t j = 0; j < gens.size(); ++j)
      for (int k : D.gaps())
        if (k > gens[j]) params_.push_back({static_cast<int>(j), k});
    for (int j = 0; j < static_cast<int>(gens.size()); ++j)
      for (int g = 0; g + gens[static_cast<std::size_t>(j)] < T_; ++g)
        if (S_.contains(g)) origin_.push_back({j, g});
  }

  CellDecomposition run() {
    CellDecomposition out;
    solve_value_set();
    out.free_parameters = 0;
    for (std::size_t v = 0; v < params_.size(); ++v) out.free_parameters += !subst_.count(static_cast<int>(v));
    State st;
    for (std::size_t o = 0; o < origin_.size(); ++o)
      if (origin_[o].second > 0) st.rows.push_back(substituted_row(o));
    st.is_pivot.assign(st.rows.size(), 0);
    st.pivot_at.assign(static_cast<std::size_t>(T_), -1);
    st.affine.assign(params_.size(), 0);
    for (std::size_t v = 0; v < params_.size(); ++v) st.affine[v] = !subst_.count(static_cast<int>(v));
    st.torus.assign(params_.size(), 0);
    // Monic pivots of m·I at Δ∖T_Δ.
    std::size_t r = 0;
    for (std::size_t o = 0; o < origin_.size(); ++o) {
      if (origin_[o].second == 0) continue;
      const int lead = lead_of(o);
      if (st.pivot_at[static_cast<std::size_t>(lead)] < 0) {
        st.pivot_at[static_cast<std::size_t>(lead)] = static_cast<int>(r);
        st.is_pivot[r] = 1;
      }
      ++r;
    }
    branch(std::move(st), 0, out.cells);
    return out;
  }

 private:
  int lead_of(std::size_t o) const {
    return D_.generators()[static_cast<std::size_t>(origin_[o].first)] + origin_[o].second;
  }

  std::vector<Poly> raw_row(std::size_t o) const {
    const auto [j, g] = origin_[o];
    std::vector<Poly> row(static_cast<std::size_t>(T_));
    row[static_cast<std::size_t>(lead_of(o))] = constant(Rat(1));
    for (std::size_t v = 0; v < params_.size(); ++v)
      if (params_[v].first == j && params_[v].second + g < T_)
        row[static_cast<std::size_t>(params_[v].second + g)] = variable(static_cast<int>(v));
    return row;
  }

  std::vector<Poly> substituted_row(std::size_t o) const {
    auto row = raw_row(o);
    for (auto& e : row) {
      if (e.size() != 1 || e.begin()->first.empty()) continue;
      const int v = e.begin()->first.front().first;
      auto it = subst_.find(v);
      if (it != subst_.end()) e = it->second;
    }
    return row;
  }

  bool is_unit(const Poly& p, const std::vector<char>& torus) const {
    if (p.size() != 1) return false;
    for (const auto& [v, e] : p.begin()->first) {
      (void)e;
      if (v >= static_cast<int>(torus.size()) || !torus[static_cast<std::size_t>(v)]) return false;
    }
    return true;
  }

  // P = u x + rest with u a unit and x absent from rest.
  std::optional<std::pair<int, Linear>> linear_form(const Poly& p, const std::vector<char>& affine,
                                                    const std::vector<char>& torus) const {
    std::vector<int> cands;
    for (const auto& t : p)
      for (const auto& [v, e] : t.first)
        if (e == 1 && v < static_cast<int>(affine.size()) && affine[static_cast<std::size_t>(v)])
          cands.push_back(v);
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    for (int x : cands) {
      Linear lin;
      int with_x = 0;
      bool ok = true;
      for (const auto& [m, c] : p) {
        const int e = exponent_of(m, x);
        if (e == 0) {
          add_term(lin.rest, m, c);
          continue;
        }
        if (e != 1 || ++with_x > 1) { ok = false; break; }
        Mono u;
        for (const auto& ve : m)
          if (ve.first != x) u.push_back(ve);
        for (const auto& ve : u)
          if (ve.first >= static_cast<int>(torus.size()) || !torus[static_cast<std::size_t>(ve.first)]) ok = false;
        lin.unit = u;
        lin.unit_coeff = c;
      }
      if (ok && with_x == 1) return std::make_pair(x, lin);
    }
    return std::nullopt;
  }

  static Poly unit_inverse(const Mono& u, const Rat& c) {
    Mono inv;
    for (const auto& [v, e] : u) inv.emplace_back(v, -e);
    Poly p;
    add_term(p, inv, c.inv());
    return p;
  }

  // First phase: value-set equations on the normalized parameters.
  void solve_value_set() {
    const std::size_t nrows = origin_.size();
    std::vector<std::vector<Poly>> rows(nrows);
    std::vector<int> pivot(static_cast<std::size_t>(T_), -1);
    std::vector<char> is_pivot(nrows, 0);
    for (std::size_t o = 0; o < nrows; ++o) {
      rows[o] = raw_row(o);
      const int lead = lead_of(o);
      if (pivot[static_cast<std::size_t>(lead)] < 0) {
        pivot[static_cast<std::size_t>(lead)] = static_cast<int>(o);
        is_pivot[o] = 1;
      }
    }
    std::vector<char> affine(params_.size(), 1), torus(params_.size(), 0);
    for (int p = 0; p < T_; ++p) {
      if (!S_.contains(p)) continue;
      const std::size_t P = static_cast<std::size_t>(p);
      if (D_.contains(p)) {
        const auto& prow = rows[static_cast<std::size_t>(pivot[P])];
        for (std::size_t r = 0; r < nrows; ++r) {
          if (is_pivot[r] || rows[r][P].empty()) continue;
          const Poly c = neg(rows[r][P]);
          for (int k = p; k < T_; ++k)
            if (!prow[static_cast<std::size_t>(k)].empty()) axpy(rows[r][static_cast<std::size_t>(k)], c, prow[static_cast<std::size_t>(k)]);
        }
        continue;
      }
      for (std::size_t r = 0; r < nrows; ++r) {
        if (is_pivot[r]) continue;
        while (!rows[r][P].empty()) {
          auto lf = linear_form(rows[r][P], affine, torus);
          if (!lf) throw Error(ErrorKind::NonTriangular, "value-set equation is not triangular for " + D_.str());
          const auto& [x, lin] = *lf;
          Poly val = mul(neg(lin.rest), unit_inverse(lin.unit, lin.unit_coeff));
          affine[static_cast<std::size_t>(x)] = 0;
          for (auto& [y, v] : subst_) v = substitute(v, x, val);
          subst_[x] = val;
          for (auto& row : rows)
            for (int k = p; k < T_; ++k) row[static_cast<std::size_t>(k)] = substitute(row[static_cast<std::size_t>(k)], x, val);
        }
      }
    }
  }

  static void substitute_state(State& st, int x, const Poly& val, int from) {
    for (auto& row : st.rows)
      for (std::size_t k = static_cast<std::size_t>(from); k < row.size(); ++k)
        if (!row[k].empty()) row[k] = substitute(row[k], x, val);
  }

  // Second phase: columns of m·I, splitting on generator columns.
  void branch(State st, int p, std::vector<Cell>& cells) {
    const std::size_t nrows = st.rows.size();
    for (; p < T_; ++p) {
      if (!S_.contains(p)) continue;
      const std::size_t P = static_cast<std::size_t>(p);
      const bool gen = std::binary_search(D_.generators().begin(), D_.generators().end(), p);
      if (!D_.contains(p)) {
        for (std::size_t r = 0; r < nrows; ++r)
          if (!st.is_pivot[r] && !st.rows[r][P].empty())
            throw Error(ErrorKind::MethodDisagreement, "m·I has value " + std::to_string(p) + " outside " + D_.str());
        continue;
      }
      for (std::size_t r = 0; r < nrows; ++r) {
        if (st.is_pivot[r] || st.rows[r][P].empty()) continue;
        const int pv = st.pivot_at[P];
        if (pv >= 0) {
          const auto& prow = st.rows[static_cast<std::size_t>(pv)];
          const auto& lead = *prow[P].begin();
          Poly c = mul(neg(st.rows[r][P]), unit_inverse(lead.first, lead.second));
          for (int k = p; k < T_; ++k)
            if (!prow[static_cast<std::size_t>(k)].empty()) axpy(st.rows[r][static_cast<std::size_t>(k)], c, prow[static_cast<std::size_t>(k)]);
          continue;
        }
        if (!gen) throw Error(ErrorKind::MethodDisagreement, "missing monic pivot in m·I");
        const Poly& e = st.rows[r][P];
        if (is_unit(e, st.torus)) {
          st.pivot_at[P] = static_cast<int>(r);
          st.is_pivot[r] = 1;
          st.redundant.push_back(p);
          continue;
        }
        auto lf = linear_form(e, st.affine, st.torus);
        if (!lf) throw Error(ErrorKind::NonTriangular, "generator condition at " + std::to_string(p) + " is not triangular for " + D_.str());
        const auto [x, lin] = *lf;
        const Poly uinv = unit_inverse(lin.unit, lin.unit_coeff);
        {
          State a = st;
          a.affine[static_cast<std::size_t>(x)] = 0;
          substitute_state(a, x, mul(neg(lin.rest), uinv), p);
          branch(std::move(a), p, cells);
        }
        {
          State b = std::move(st);
          const int y = static_cast<int>(b.affine.size());
          b.affine.push_back(0);
          b.torus.push_back(1);
          b.affine[static_cast<std::size_t>(x)] = 0;
          Poly val = variable(y);
          for (const auto& [m, c] : lin.rest) add_term(val, m, -c);
          substitute_state(b, x, mul(val, uinv), p);
          branch(std::move(b), p, cells);
        }
        return;
      }
    }
    Cell c;
    c.m = D_.n() - static_cast<int>(st.redundant.size());
    c.torus = static_cast<int>(std::count(st.torus.begin(), st.torus.end(), 1));
    c.affine = static_cast<int>(std::count(st.affine.begin(), st.affine.end(), 1));
    c.redundant = st.redundant;
    std::sort(c.redundant.begin(), c.redundant.end());
    cells.push_back(std::move(c));
  }

  const Semimodule& D_;
  const NumericalSemigroup& S_;
  int T_ = 0;
  std::vector<std::pair<int, int>> params_;  // (generator index, exponent)
  std::vector<std::pair<int, int>> origin_;  // (generator index, shift g)
  std::map<int, Poly> subst_;
};

}  // namespace

GenClassTable CellDecomposition::table(int n) const {
  GenClassTable t;
  t.classes.assign(static_cast<std::size_t>(n) + 1, LPoly());
  for (const auto& c : cells) t.classes[static_cast<std::size_t>(c.m)] += LPoly::torus_cell(c.torus, c.affine);
  return t;
}

CellDecomposition decompose_strata(const Semimodule& D) {
  Engine e(D);
  CellDecomposition out = e.run();
  const int N = n_delta(D).N;
  if (out.free_parameters != N)
    throw Error(ErrorKind::MethodDisagreement, "elimination found dimension " + std::to_string(out.free_parameters) +
                                                   " for " + D.str() + " but N(Δ) = " + std::to_string(N));
  return out;
}

}  // namespace hz
