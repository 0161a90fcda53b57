#include "hilbzeta/lpoly.hpp"

#include <sstream>

#include "hilbzeta/errors.hpp"

namespace hz {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::InvalidArgument, "integer overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::InvalidArgument, "integer overflow");
  return r;
}

LPoly::LPoly(std::int64_t c) {
  if (c != 0) c_.push_back(c);
}

LPoly LPoly::monomial(int deg, std::int64_t c) {
  LPoly p;
  if (c == 0) return p;
  p.c_.assign(static_cast<std::size_t>(deg) + 1, 0);
  p.c_.back() = c;
  return p;
}

LPoly LPoly::from_coeffs(std::vector<std::int64_t> c) {
  LPoly p;
  p.c_ = std::move(c);
  p.trim();
  return p;
}

LPoly LPoly::torus_cell(int a, int b) {
  LPoly r = monomial(b);
  const LPoly lm1 = monomial(1) - LPoly(1);
  for (int i = 0; i < a; ++i) r = r * lm1;
  return r;
}

std::int64_t LPoly::coeff(int d) const {
  if (d < 0 || d >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(d)];
}

std::int64_t LPoly::eval(std::int64_t x) const {
  std::int64_t r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = checked_add(checked_mul(r, x), *it);
  return r;
}

void LPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

LPoly& LPoly::operator+=(const LPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = checked_add(c_[i], o.c_[i]);
  trim();
  return *this;
}

LPoly& LPoly::operator-=(const LPoly& o) { return *this += -o; }

LPoly LPoly::operator-() const {
  LPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

LPoly LPoly::operator*(const LPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<std::int64_t> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      r[i + j] = checked_add(r[i + j], checked_mul(c_[i], o.c_[j]));
  return from_coeffs(std::move(r));
}

static std::string render(const std::vector<std::int64_t>& c, const std::string& var,
                          bool tex) {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t d = 0; d < c.size(); ++d) {
    std::int64_t k = c[d];
    if (k == 0) continue;
    if (first) {
      if (k < 0) os << "-";
    } else {
      os << (k < 0 ? " - " : " + ");
    }
    std::int64_t a = k < 0 ? -k : k;
    if (d == 0) {
      os << a;
    } else {
      if (a != 1) os << a;
      os << var;
      if (d > 1) {
        if (tex)
          os << "^{" << d << "}";
        else
          os << "^" << d;
      }
    }
    first = false;
  }
  return os.str();
}

std::string LPoly::str(const std::string& var) const { return render(c_, var, false); }
std::string LPoly::latex() const { return render(c_, "\\mathbb{L}", true); }

}  // namespace hz
