// Dense univariate polynomial over Rational; degree = coefficient index.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "berndet/rational.hpp"

namespace berndet {

class UniPoly {
 public:
  UniPoly() = default;  // zero polynomial
  explicit UniPoly(std::vector<Rational> coeffs);

  static UniPoly constant(const Rational& c);
  static UniPoly monomial(std::size_t degree, const Rational& c);

  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Rational& coeff(std::size_t k) const;
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational eval(const Rational& x) const;  // Horner

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const Rational& s);
  friend UniPoly operator/(const UniPoly& a, const Rational& s);

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

}  // namespace berndet
