#include "hilbzeta/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hilbzeta/errors.hpp"

namespace hz {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::EmptyGenerators: return "EmptyGenerators";
    case ErrorKind::NonCoprime: return "NonCoprime";
    case ErrorKind::NotTwoGenerator: return "NotTwoGenerator";
    case ErrorKind::NotMember: return "NotMember";
    case ErrorKind::NotAGap: return "NotAGap";
    case ErrorKind::InvalidGapSet: return "InvalidGapSet";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::FullModule: return "FullModule";
    case ErrorKind::SingleGenerator: return "SingleGenerator";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::UnsupportedSemigroup: return "UnsupportedSemigroup";
    case ErrorKind::NoStabilization: return "NoStabilization";
    case ErrorKind::InterpolationBudgetExceeded: return "InterpolationBudgetExceeded";
    case ErrorKind::MethodDisagreement: return "MethodDisagreement";
    case ErrorKind::TruncationTooSmall: return "TruncationTooSmall";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::NonTriangular: return "NonTriangular";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

SemigroupPtr make_semigroup(std::vector<int> generators, int colength_budget) {
  if (generators.empty()) throw Error(ErrorKind::EmptyGenerators, "no generators given");
  if (colength_budget < 0) throw Error(ErrorKind::InvalidArgument, "negative colength budget");
  int g = 0;
  for (int a : generators) {
    if (a <= 0) throw Error(ErrorKind::InvalidArgument, "generators must be positive");
    g = std::gcd(g, a);
  }
  if (g != 1) throw Error(ErrorKind::NonCoprime, "gcd of generators is " + std::to_string(g));
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

  const int m = generators.front();
  // Grow the membership table until m consecutive members appear.
  std::vector<char> mem{1};
  int run = 1, x = 0;
  while (run < m) {
    ++x;
    char in = 0;
    for (int a : generators)
      if (a <= x && mem[static_cast<std::size_t>(x - a)]) { in = 1; break; }
    mem.push_back(in);
    run = in ? run + 1 : 0;
  }
  const int conductor = m == 1 ? 0 : x - m + 1;

  auto S = std::make_shared<NumericalSemigroup>();
  auto& s = *S;
  for (int y = 0; y < conductor; ++y)
    if (!mem[static_cast<std::size_t>(y)]) s.gaps_.push_back(y);
  s.conductor_ = conductor;

  auto in_gamma = [&](int y) { return y >= 0 && (y >= conductor || mem[static_cast<std::size_t>(y)]); };
  for (int a : generators) {
    bool redundant = false;
    for (int b : s.gens_)
      if (in_gamma(a - b)) { redundant = true; break; }
    if (!redundant) s.gens_.push_back(a);
  }
  s.budget_ = colength_budget;
  s.window_ = conductor + s.gens_.back() + colength_budget;
  s.member_.assign(static_cast<std::size_t>(s.window_), 0);
  for (int y = 0; y < s.window_; ++y) s.member_[static_cast<std::size_t>(y)] = in_gamma(y);
  return S;
}

std::string NumericalSemigroup::str() const {
  std::ostringstream os;
  os << "<";
  for (std::size_t i = 0; i < gens_.size(); ++i) os << (i ? "," : "") << gens_[i];
  os << ">";
  return os.str();
}

PQCoordinates pq_normal_form(const NumericalSemigroup& S, int m) {
  if (!S.is_two_generator())
    throw Error(ErrorKind::NotTwoGenerator, S.str() + " does not have two generators");
  if (!S.contains(m)) throw Error(ErrorKind::NotMember, std::to_string(m) + " not in " + S.str());
  const int p = S.generators()[0], q = S.generators()[1];
  for (int a = 0; a < p; ++a) {
    int rest = m - a * q;
    if (rest >= 0 && rest % p == 0) return {a, rest / p, m};
  }
  throw Error(ErrorKind::NotMember, std::to_string(m) + " has no (a,b) form");
}

int gap_conductor(const NumericalSemigroup& S, int x) {
  if (x < 0 || S.contains(x)) throw Error(ErrorKind::NotAGap, std::to_string(x) + " is not a gap");
  int last = -1;
  for (int y = 0; y < S.conductor(); ++y)
    if (!S.contains(y) && !S.contains(y - x)) last = y;
  return last + 1;
}

bool is_monomial_by_gap_condition(const NumericalSemigroup& S) {
  for (int x : S.gaps()) {
    const int cx = gap_conductor(S, x);
    for (int y = 0; y < cx; ++y)
      if (S.contains(y) && S.contains(y - x)) return false;
  }
  return true;
}

static std::vector<int> gaps_of(int c, const std::vector<int>& members_below_c) {
  std::vector<int> g;
  for (int y = 0; y < c; ++y)
    if (!std::binary_search(members_below_c.begin(), members_below_c.end(), y)) g.push_back(y);
  return g;
}

MonomialForm classify_gap_set(const std::vector<int>& gaps) {
  using V = MonomialForm::Variant;
  MonomialForm f;
  if (gaps.empty()) {
    f.variant = V::Smooth;
    f.m = 1;
    return f;
  }
  const int c = gaps.back() + 1;
  int m = 1;
  while (std::binary_search(gaps.begin(), gaps.end(), m)) ++m;

  // (i) {i m : 0 <= i <= s} ∪ [s m + b, ∞); when m divides c the tail starts at s m + 1.
  {
    const int s = c / m, b = c % m == 0 ? 1 : c % m;
    if (s >= 1 && m >= 2) {
      std::vector<int> mem;
      for (int i = 0; i <= s; ++i) mem.push_back(i * m);
      if (gaps_of(c, mem) == gaps) {
        f.variant = V::GammaMSB;
        f.m = m;
        f.s = s;
        f.b = b;
        return f;
      }
    }
  }
  // (ii) {0} ∪ [m, m+r-1] ∪ [m+r+1, ∞)
  {
    const int r = gaps.back() - m;
    if (r >= 2 && r <= m - 1) {
      std::vector<int> mem{0};
      for (int y = m; y <= m + r - 1; ++y) mem.push_back(y);
      if (gaps_of(c, mem) == gaps) {
        f.variant = V::GammaMR;
        f.m = m;
        f.r = r;
        return f;
      }
    }
  }
  // (iii) {0, m} ∪ [m+2, 2m] ∪ [2m+2, ∞)
  if (m >= 3 && gaps.back() == 2 * m + 1) {
    std::vector<int> mem{0, m};
    for (int y = m + 2; y <= 2 * m; ++y) mem.push_back(y);
    if (gaps_of(c, mem) == gaps) {
      f.variant = V::GammaM;
      f.m = m;
      return f;
    }
  }
  return f;
}

MonomialForm classify_monomial(const NumericalSemigroup& S) { return classify_gap_set(S.gaps()); }

std::string MonomialForm::str() const {
  std::ostringstream os;
  switch (variant) {
    case Variant::GammaMSB: os << "Gamma_{" << m << "," << s << "," << b << "}"; break;
    case Variant::GammaMR: os << "Gamma_{" << m << "," << r << "}"; break;
    case Variant::GammaM: os << "Gamma_{" << m << "}"; break;
    case Variant::Smooth: os << "N"; break;
    case Variant::NotMonomial: os << "not monomial"; break;
  }
  return os.str();
}

}  // namespace hz
