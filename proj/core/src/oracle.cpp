#include "hilbzeta/oracle.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>

#include "hilbzeta/errors.hpp"
#include "hilbzeta/motivic.hpp"
#include "hilbzeta/strata.hpp"
#include "hilbzeta/tree.hpp"

namespace hz {

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

static std::uint32_t inv_mod(std::uint32_t a, std::uint32_t q) {
  std::uint32_t r = 1, e = q - 2;
  std::uint64_t b = a % q;
  while (e) {
    if (e & 1) r = static_cast<std::uint32_t>(r * b % q);
    b = b * b % q;
    e >>= 1;
  }
  return r;
}

TruncatedRing make_truncated_ring(const SemigroupPtr& S, int q, int T) {
  if (!is_prime(q)) throw Error(ErrorKind::InvalidArgument, std::to_string(q) + " is not prime");
  if (T < 1) throw Error(ErrorKind::TruncationTooSmall, "truncation must be positive");
  TruncatedRing R;
  R.semigroup = S;
  R.q = q;
  R.T = T;
  for (int x = 0; x < T; ++x)
    if (S->contains(x)) R.basis.push_back(x);
  return R;
}

TruncatedRing make_truncated_ring_for(const SemigroupPtr& S, int q, int ell_max) {
  return make_truncated_ring(S, q, S->conductor() + ell_max + S->max_generator());
}

// ---- Subspace ----

Vec Subspace::reduce(Vec v) const {
  for (const auto& [lead, row] : rows_) {
    const std::uint32_t c = v[static_cast<std::size_t>(lead)];
    if (c == 0) continue;
    const std::uint32_t f = static_cast<std::uint32_t>(q_) - c;
    for (int k = lead; k < T_; ++k)
      v[static_cast<std::size_t>(k)] = (v[static_cast<std::size_t>(k)] + f * row[static_cast<std::size_t>(k)]) % static_cast<std::uint32_t>(q_);
  }
  return v;
}

void Subspace::insert(Vec v) {
  v.resize(static_cast<std::size_t>(T_), 0);
  for (auto& x : v) x %= static_cast<std::uint32_t>(q_);
  v = reduce(std::move(v));
  int lead = 0;
  while (lead < T_ && v[static_cast<std::size_t>(lead)] == 0) ++lead;
  if (lead == T_) return;
  const std::uint32_t inv = inv_mod(v[static_cast<std::size_t>(lead)], static_cast<std::uint32_t>(q_));
  for (auto& x : v) x = static_cast<std::uint32_t>(static_cast<std::uint64_t>(x) * inv % static_cast<std::uint32_t>(q_));
  for (auto& [l, row] : rows_) {
    const std::uint32_t c = row[static_cast<std::size_t>(lead)];
    if (c == 0) continue;
    const std::uint32_t f = static_cast<std::uint32_t>(q_) - c;
    for (int k = lead; k < T_; ++k)
      row[static_cast<std::size_t>(k)] = (row[static_cast<std::size_t>(k)] + f * v[static_cast<std::size_t>(k)]) % static_cast<std::uint32_t>(q_);
  }
  rows_.emplace(lead, std::move(v));
}

std::vector<int> Subspace::leading_exponents() const {
  std::vector<int> r;
  for (const auto& kv : rows_) r.push_back(kv.first);
  return r;
}

bool Subspace::contains(const Vec& v) const {
  Vec w = v;
  w.resize(static_cast<std::size_t>(T_), 0);
  for (auto& x : w) x %= static_cast<std::uint32_t>(q_);
  w = reduce(std::move(w));
  return std::all_of(w.begin(), w.end(), [](std::uint32_t x) { return x == 0; });
}

// ---- ideals from parameters ----

std::vector<ParamKey> normalized_parameters(const Semimodule& D) {
  std::vector<ParamKey> out;
  const auto& T = D.generators();
  for (std::size_t j = 0; j < T.size(); ++j)
    for (int k : D.gaps())
      if (k > T[j]) out.push_back({static_cast<int>(j), k});
  return out;
}

std::vector<Vec> deformed_generators(const TruncatedRing& R, const Semimodule& D,
                                     const std::map<ParamKey, std::uint32_t>& lambda) {
  if (R.T < D.conductor() + R.semigroup->max_generator())
    throw Error(ErrorKind::TruncationTooSmall, "T = " + std::to_string(R.T) + " below c(Δ) + max generator");
  std::vector<Vec> out;
  const auto& T = D.generators();
  for (std::size_t j = 0; j < T.size(); ++j) {
    Vec f(static_cast<std::size_t>(R.T), 0);
    f[static_cast<std::size_t>(T[j])] = 1;
    for (const auto& [key, val] : lambda) {
      if (key.j != static_cast<int>(j)) continue;
      if (key.k <= T[j] || !D.is_gap(key.k))
        throw Error(ErrorKind::InvalidArgument, "parameter exponent " + std::to_string(key.k) + " not in Γ_{>γ}∖Δ");
      f[static_cast<std::size_t>(key.k)] = val % static_cast<std::uint32_t>(R.q);
    }
    out.push_back(std::move(f));
  }
  return out;
}

static Vec shift(const Vec& v, int a, int T) {
  Vec r(static_cast<std::size_t>(T), 0);
  for (int k = 0; k + a < T; ++k) r[static_cast<std::size_t>(k + a)] = v[static_cast<std::size_t>(k)];
  return r;
}

Subspace ideal_generated_by(const TruncatedRing& R, const std::vector<Vec>& gens) {
  Subspace I(R.q, R.T);
  for (const auto& f : gens)
    for (int a : R.basis) I.insert(shift(f, a, R.T));
  return I;
}

Subspace ideal_from_params(const TruncatedRing& R, const Semimodule& D,
                           const std::map<ParamKey, std::uint32_t>& lambda) {
  return ideal_generated_by(R, deformed_generators(R, D, lambda));
}

Semimodule value_set(const TruncatedRing& R, const Subspace& I) {
  if (I.dim() == 0) throw Error(ErrorKind::InvalidArgument, "value set of the zero ideal");
  const auto leads = I.leading_exponents();
  std::set<int> L(leads.begin(), leads.end());
  for (int e : leads)
    for (int a : R.semigroup->generators())
      if (e + a < R.T && !L.count(e + a))
        throw Error(ErrorKind::TruncationTooSmall, "leading exponents not Γ-closed below T");
  std::vector<int> gaps;
  for (int x : R.basis)
    if (!L.count(x)) gaps.push_back(x);
  if (!gaps.empty() && gaps.back() >= R.T - R.semigroup->max_generator())
    throw Error(ErrorKind::TruncationTooSmall, "value set reaches the truncation");
  return from_gaps(R.semigroup, gaps);
}

int min_generators_count(const TruncatedRing& R, const Subspace& I) {
  Subspace mI(R.q, R.T);
  for (const auto& [lead, row] : I.rows()) {
    for (int a : R.basis) {
      if (a == 0) continue;
      Vec v = shift(row, a, R.T);
      if (!I.contains(v)) throw Error(ErrorKind::NotAnIdeal, "subspace not closed under t^" + std::to_string(a));
      mI.insert(std::move(v));
    }
  }
  return I.dim() - mI.dim();
}

// ---- point counting ----

namespace {

using Mask = std::array<std::uint64_t, 2>;

inline void set_bit(Mask& m, int i) { m[static_cast<std::size_t>(i >> 6)] |= 1ull << (i & 63); }

template <class F>
inline void for_bits(const Mask& m, F&& f) {
  for (int w = 0; w < 2; ++w) {
    std::uint64_t x = m[static_cast<std::size_t>(w)];
    while (x) {
      const int b = __builtin_ctzll(x);
      f(w * 64 + b);
      x &= x - 1;
    }
  }
}

class Counter {
 public:
  Counter(const Semimodule& D, int q, const CountOptions& opt) : D_(D), S_(D.semigroup()), q_(static_cast<std::uint32_t>(q)), opt_(opt) {
    T_ = D.conductor() + S_.max_generator();
    if (T_ > 128) throw Error(ErrorKind::BudgetExceeded, "truncation above 128 not supported by the counter");
    const auto& G = D.generators();
    n_ = static_cast<int>(G.size());
    param_.assign(static_cast<std::size_t>(n_), std::vector<int>(static_cast<std::size_t>(T_), -1));
    vars_at_.assign(static_cast<std::size_t>(T_), {});
    for (int j = 0; j < n_; ++j)
      for (int k : D.gaps())
        if (k > G[static_cast<std::size_t>(j)]) {
          param_[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] = M_;
          vars_at_[static_cast<std::size_t>(k)].push_back(M_);
          keys_.push_back({j, k});
          ++M_;
        }
    for (int j = 0; j < n_; ++j)
      for (int g = 0; g + G[static_cast<std::size_t>(j)] < T_; ++g)
        if (S_.contains(g)) orig_.push_back({j, g});
    piv_i_.assign(static_cast<std::size_t>(T_), -1);
    for (std::size_t o = 0; o < orig_.size(); ++o) {
      const int l = lead(o);
      if (piv_i_[static_cast<std::size_t>(l)] < 0) piv_i_[static_cast<std::size_t>(l)] = static_cast<int>(o);
      else rows_i_.push_back(static_cast<int>(o));
    }
    desig_m_.assign(static_cast<std::size_t>(T_), -1);
    for (std::size_t o = 0; o < orig_.size(); ++o) {
      if (orig_[o].second == 0) continue;
      const int r = static_cast<int>(rows_m_.size());
      rows_m_.push_back(static_cast<int>(o));
      const int l = lead(o);
      if (desig_m_[static_cast<std::size_t>(l)] < 0) desig_m_[static_cast<std::size_t>(l)] = r;
    }
    in_delta_.assign(static_cast<std::size_t>(T_), 0);
    is_gen_.assign(static_cast<std::size_t>(T_), 0);
    for (int x = 0; x < T_; ++x) in_delta_[static_cast<std::size_t>(x)] = D.contains(x);
    for (int g : G) if (g < T_) is_gen_[static_cast<std::size_t>(g)] = 1;
    inv_.assign(q_, 0);
    for (std::uint32_t a = 1; a < q_; ++a) inv_[a] = inv_mod(a, q_);
  }

  std::map<int, std::uint64_t> run() {
    State st;
    st.lam.assign(static_cast<std::size_t>(M_), 0);
    st.ci.assign(rows_i_.size() * static_cast<std::size_t>(T_), 0);
    st.mi.assign(rows_i_.size(), Mask{0, 0});
    st.cm.assign(rows_m_.size() * static_cast<std::size_t>(T_), 0);
    st.mm.assign(rows_m_.size(), Mask{0, 0});
    st.piv_m.assign(static_cast<std::size_t>(T_), -1);
    st.lead_m.assign(static_cast<std::size_t>(T_), 0);
    st.is_piv_m.assign(rows_m_.size(), 0);
    for (int e = 0; e < T_; ++e)
      if (in_delta_[static_cast<std::size_t>(e)] && !is_gen_[static_cast<std::size_t>(e)] && desig_m_[static_cast<std::size_t>(e)] >= 0) {
        st.piv_m[static_cast<std::size_t>(e)] = desig_m_[static_cast<std::size_t>(e)];
        st.lead_m[static_cast<std::size_t>(e)] = 1;
        st.is_piv_m[static_cast<std::size_t>(desig_m_[static_cast<std::size_t>(e)])] = 1;
      }
    dfs(st, 0);
    return tally_;
  }

 private:
  struct State {
    std::vector<std::uint32_t> lam;
    std::vector<std::uint32_t> ci;
    std::vector<Mask> mi;
    std::vector<std::uint32_t> cm;
    std::vector<Mask> mm;
    std::vector<int> piv_m;
    std::vector<std::uint32_t> lead_m;
    std::vector<char> is_piv_m;
    int redundant = 0;
  };

  int lead(std::size_t o) const {
    return D_.generators()[static_cast<std::size_t>(orig_[o].first)] + orig_[o].second;
  }

  std::uint32_t orig_entry(const State& st, int o, int k) const {
    const auto [j, g] = orig_[static_cast<std::size_t>(o)];
    const int kk = k - g;
    if (kk < 0) return 0;
    if (kk == D_.generators()[static_cast<std::size_t>(j)]) return 1;
    const int v = param_[static_cast<std::size_t>(j)][static_cast<std::size_t>(kk)];
    return v < 0 ? 0 : st.lam[static_cast<std::size_t>(v)];
  }

  bool process(State& st, int k) {
    if (!S_.contains(k)) return true;
    const std::size_t K = static_cast<std::size_t>(k);
    const std::size_t TT = static_cast<std::size_t>(T_);
    // Ideal rows.
    std::vector<std::uint32_t> pv(TT, 0);
    for (int e = 0; e < k; ++e)
      if (in_delta_[static_cast<std::size_t>(e)]) pv[static_cast<std::size_t>(e)] = orig_entry(st, piv_i_[static_cast<std::size_t>(e)], k);
    for (std::size_t r = 0; r < rows_i_.size(); ++r) {
      std::uint64_t acc = orig_entry(st, rows_i_[r], k);
      const std::uint32_t* c = &st.ci[r * TT];
      for_bits(st.mi[r], [&](int e) { acc += static_cast<std::uint64_t>(q_ - c[e]) * pv[static_cast<std::size_t>(e)]; });
      const std::uint32_t val = static_cast<std::uint32_t>(acc % q_);
      if (val == 0) continue;
      if (!in_delta_[K]) return false;
      st.ci[r * TT + K] = val;
      set_bit(st.mi[r], k);
    }
    // m·I rows: pivot entries first, in column order.
    std::vector<std::uint32_t> pe(TT, 0);
    for (int e = 0; e < k; ++e) {
      const int pr = st.piv_m[static_cast<std::size_t>(e)];
      if (pr < 0) continue;
      std::uint64_t acc = orig_entry(st, rows_m_[static_cast<std::size_t>(pr)], k);
      const std::uint32_t* c = &st.cm[static_cast<std::size_t>(pr) * TT];
      for_bits(st.mm[static_cast<std::size_t>(pr)], [&](int e2) { acc += static_cast<std::uint64_t>(q_ - c[e2]) * pe[static_cast<std::size_t>(e2)]; });
      pe[static_cast<std::size_t>(e)] = static_cast<std::uint32_t>(acc % q_);
    }
    for (std::size_t r = 0; r < rows_m_.size(); ++r) {
      if (st.is_piv_m[r]) continue;
      std::uint64_t acc = orig_entry(st, rows_m_[r], k);
      const std::uint32_t* c = &st.cm[r * TT];
      for_bits(st.mm[r], [&](int e) { acc += static_cast<std::uint64_t>(q_ - c[e]) * pe[static_cast<std::size_t>(e)]; });
      const std::uint32_t val = static_cast<std::uint32_t>(acc % q_);
      if (val == 0) continue;
      if (!in_delta_[K]) throw Error(ErrorKind::NotAnIdeal, "m·I leaves the value set");
      if (st.piv_m[K] < 0) {
        st.piv_m[K] = static_cast<int>(r);
        st.lead_m[K] = val;
        st.is_piv_m[r] = 1;
        ++st.redundant;
        continue;
      }
      st.cm[r * TT + K] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(val) * inv_[st.lead_m[K]] % q_);
      set_bit(st.mm[r], k);
    }
    return true;
  }

  void leaf(const State& st) {
    ++tally_[n_ - st.redundant];
    if (!opt_.check_uniqueness) return;
    auto R = make_truncated_ring(D_.semigroup_ptr(), static_cast<int>(q_), T_);
    std::map<ParamKey, std::uint32_t> lam;
    for (int v = 0; v < M_; ++v) lam[keys_[static_cast<std::size_t>(v)]] = st.lam[static_cast<std::size_t>(v)];
    auto I = ideal_from_params(R, D_, lam);
    std::vector<std::uint32_t> flat;
    for (const auto& [l, row] : I.rows()) flat.insert(flat.end(), row.begin(), row.end());
    if (!seen_.insert(flat).second) throw Error(ErrorKind::InvalidArgument, "two parameter tuples give the same ideal");
  }

  void dfs(State& st, int k) {
    if (++nodes_ > opt_.node_budget)
      throw Error(ErrorKind::BudgetExceeded, "point counting exceeded " + std::to_string(opt_.node_budget) + " nodes");
    while (k < T_ && vars_at_[static_cast<std::size_t>(k)].empty()) {
      if (!process(st, k)) return;
      ++k;
    }
    if (k == T_) {
      leaf(st);
      return;
    }
    const auto& vars = vars_at_[static_cast<std::size_t>(k)];
    std::vector<std::uint32_t> digits(vars.size(), 0);
    while (true) {
      State child = st;
      for (std::size_t i = 0; i < vars.size(); ++i) child.lam[static_cast<std::size_t>(vars[i])] = digits[i];
      if (process(child, k)) dfs(child, k + 1);
      std::size_t i = 0;
      while (i < digits.size() && ++digits[i] == q_) digits[i++] = 0;
      if (i == digits.size()) break;
    }
  }

  const Semimodule& D_;
  const NumericalSemigroup& S_;
  std::uint32_t q_;
  CountOptions opt_;
  int T_ = 0, n_ = 0, M_ = 0;
  std::vector<std::vector<int>> param_;
  std::vector<std::vector<int>> vars_at_;
  std::vector<ParamKey> keys_;
  std::vector<std::pair<int, int>> orig_;
  std::vector<int> piv_i_, rows_i_;
  std::vector<int> desig_m_, rows_m_;
  std::vector<char> in_delta_, is_gen_;
  std::vector<std::uint32_t> inv_;
  std::map<int, std::uint64_t> tally_;
  std::set<std::vector<std::uint32_t>> seen_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::map<int, std::uint64_t> count_points(const Semimodule& D, int q, const CountOptions& opt) {
  if (!is_prime(q)) throw Error(ErrorKind::InvalidArgument, std::to_string(q) + " is not prime");
  if (D.colength() == 0) return {{1, 1}};
  Counter c(D, q, opt);
  return c.run();
}

std::size_t VerifyReport::mismatches() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const ReportRow& r) { return !r.match; }));
}

static std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r = checked_mul(r, b);
  return r;
}

VerifyReport verify_classes(const SemigroupPtr& S, int ell_max, const std::vector<int>& fields,
                            const CountOptions& opt) {
  const Mode mode = select_mode(*S);
  for (int q : fields)
    if (!is_prime(q)) throw Error(ErrorKind::InvalidArgument, std::to_string(q) + " is not prime");
  VerifyReport rep;
  for (int l = 1; l <= ell_max; ++l) {
    const auto level = enumerate_level(S, l);
    const LPoly hc = hilbert_class(S, l);
    std::vector<std::int64_t> level_counts(fields.size(), 0);
    for (const auto& D : level) {
      const int N = n_delta(D, mode).N;
      GenClassTable table;
      if (mode == Mode::PQ) table = motivic_gen_classes_pq(D, StrataMethod::Structural);
      for (std::size_t fi = 0; fi < fields.size(); ++fi) {
        const int q = fields[fi];
        const auto counts = count_points(D, q, opt);
        std::int64_t total = 0;
        for (const auto& kv : counts) total += static_cast<std::int64_t>(kv.second);
        level_counts[fi] += total;
        ReportRow row{"stratum", S->str(), l, D.gaps(), 0, q, LPoly::monomial(N).str(), ipow(q, N), total, false};
        row.match = row.expected == row.count;
        rep.rows.push_back(row);
        if (mode != Mode::PQ) continue;
        for (int m = 1; m <= D.n(); ++m) {
          auto it = counts.find(m);
          const std::int64_t c = it == counts.end() ? 0 : static_cast<std::int64_t>(it->second);
          ReportRow r{"generators", S->str(), l, D.gaps(), m, q, table.at(m).str(), table.at(m).eval(q), c, false};
          r.match = r.expected == r.count;
          rep.rows.push_back(r);
        }
      }
    }
    for (std::size_t fi = 0; fi < fields.size(); ++fi) {
      ReportRow r{"level", S->str(), l, {}, 0, fields[fi], hc.str(), hc.eval(fields[fi]), level_counts[fi], false};
      r.match = r.expected == r.count;
      rep.rows.push_back(r);
    }
  }
  return rep;
}

}  // namespace hz
