#include "hilbzeta/semimodule.hpp"

#include <algorithm>
#include <sstream>

#include "hilbzeta/errors.hpp"

namespace hz {

bool Semimodule::contains(int x) const {
  return S_->contains(x) && !std::binary_search(gaps_.begin(), gaps_.end(), x);
}

bool Semimodule::is_gap(int x) const { return std::binary_search(gaps_.begin(), gaps_.end(), x); }

int Semimodule::frobenius() const {
  if (gaps_.empty()) throw Error(ErrorKind::FullModule, "frobenius element of Γ itself");
  return gaps_.back();
}

std::string Semimodule::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) os << (i ? "," : "") << gens_[i];
  os << ")";
  return os.str();
}

Semimodule make_semimodule_unchecked(SemigroupPtr S, std::vector<int> gaps) {
  Semimodule D;
  D.S_ = std::move(S);
  D.gaps_ = std::move(gaps);
  const auto& G = *D.S_;
  const int top = std::max(G.conductor(), D.gaps_.empty() ? 0 : D.gaps_.back() + 1);
  D.conductor_ = top;
  const int scan = top + G.max_generator();
  for (int x = 0; x < scan; ++x) {
    if (!D.contains(x)) continue;
    bool minimal = true;
    for (int a : G.generators())
      if (D.contains(x - a)) { minimal = false; break; }
    if (minimal) D.gens_.push_back(x);
  }
  return D;
}

Semimodule from_gaps(SemigroupPtr S, std::vector<int> gaps) {
  std::sort(gaps.begin(), gaps.end());
  gaps.erase(std::unique(gaps.begin(), gaps.end()), gaps.end());
  for (int g : gaps)
    if (!S->contains(g))
      throw Error(ErrorKind::InvalidGapSet, std::to_string(g) + " is not an element of " + S->str());
  for (int g : gaps)
    for (int a : S->generators())
      if (S->contains(g - a) && !std::binary_search(gaps.begin(), gaps.end(), g - a))
        throw Error(ErrorKind::InvalidGapSet,
                    std::to_string(g - a) + " in Δ but " + std::to_string(g - a) + "+" +
                        std::to_string(a) + " = " + std::to_string(g) + " is a gap");
  return make_semimodule_unchecked(std::move(S), std::move(gaps));
}

Semimodule from_generators(SemigroupPtr S, std::vector<int> gens) {
  if (gens.empty()) throw Error(ErrorKind::EmptyGenerators, "no module generators");
  for (int g : gens)
    if (!S->contains(g)) throw Error(ErrorKind::NotMember, std::to_string(g) + " not in " + S->str());
  const int lo = *std::min_element(gens.begin(), gens.end());
  const int top = lo + S->conductor() + 1;
  std::vector<int> gaps;
  for (int x = 0; x < top; ++x) {
    if (!S->contains(x)) continue;
    bool covered = false;
    for (int g : gens)
      if (S->contains(x - g)) { covered = true; break; }
    if (!covered) gaps.push_back(x);
  }
  return make_semimodule_unchecked(std::move(S), std::move(gaps));
}

const std::vector<int>& minimal_generators(const Semimodule& D) { return D.generators(); }

Semimodule delete_generator(const Semimodule& D, int i) {
  if (i < 1 || i > D.n())
    throw Error(ErrorKind::IndexOutOfRange,
                "generator index " + std::to_string(i) + " outside 1.." + std::to_string(D.n()));
  std::vector<int> gaps = D.gaps();
  const int g = D.generators()[static_cast<std::size_t>(i - 1)];
  gaps.insert(std::upper_bound(gaps.begin(), gaps.end(), g), g);
  return make_semimodule_unchecked(D.semigroup_ptr(), std::move(gaps));
}

Semimodule merge(const Semimodule& D) {
  if (D.colength() == 0) throw Error(ErrorKind::FullModule, "merge on Γ");
  std::vector<int> gaps = D.gaps();
  gaps.pop_back();
  return make_semimodule_unchecked(D.semigroup_ptr(), std::move(gaps));
}

std::size_t SemimoduleHash::operator()(const Semimodule& D) const {
  std::size_t h = 1469598103934665603ull;
  for (int g : D.gaps()) {
    h ^= static_cast<std::size_t>(g) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace hz
