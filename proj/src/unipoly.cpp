#include "berndet/unipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace berndet {

namespace {
const Rational kZero(0);
}

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const Rational& c) {
  UniPoly p;
  if (!c.is_zero()) p.c_.push_back(c);
  return p;
}

UniPoly UniPoly::monomial(std::size_t degree, const Rational& c) {
  UniPoly p;
  if (!c.is_zero()) {
    p.c_.assign(degree + 1, Rational(0));
    p.c_[degree] = c;
  }
  return p;
}

const Rational& UniPoly::coeff(std::size_t k) const {
  return k < c_.size() ? c_[k] : kZero;
}

Rational UniPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

UniPoly UniPoly::operator-() const {
  UniPoly p = *this;
  for (auto& c : p.c_) c = -c;
  return p;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(c));
}

UniPoly operator*(const UniPoly& a, const Rational& s) {
  if (s.is_zero()) return UniPoly();
  UniPoly p = a;
  for (auto& c : p.c_) c *= s;
  return p;
}

UniPoly operator/(const UniPoly& a, const Rational& s) {
  if (s.is_zero()) throw std::domain_error("UniPoly: division by zero scalar");
  UniPoly p = a;
  for (auto& c : p.c_) c /= s;
  return p;
}

std::string UniPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    Rational c = c_[i];
    if (first) {
      if (c.sign() < 0) {
        os << "-";
        c = -c;
      }
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
      c = c.abs();
    }
    if (i == 0) {
      os << c.to_string();
    } else {
      if (c != Rational(1)) os << c.to_string() << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

}  // namespace berndet
