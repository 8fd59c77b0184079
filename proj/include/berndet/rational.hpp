// Exact rational scalar on top of GMP, plus the small integer combinatorics
// (factorials, binomials, lcm) used everywhere else.
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace berndet {

using Integer = mpz_class;

Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);
// (i_1 + ... + i_k)! / (i_1! ... i_k!)
Integer multinomial(const std::vector<unsigned long>& parts);
unsigned long lcm_of(const std::vector<unsigned long>& values);

// Arbitrary-precision rational, eagerly normalized on every construction:
// gcd(|num|, den) = 1, den >= 1, zero is 0/1. Value type, exact arithmetic;
// division by zero throws.
class Rational {
 public:
  Rational() : q_() {}
  Rational(long n) : q_(n) {}  // implicit: scalars mix freely with integers
  Rational(int n) : q_(static_cast<long>(n)) {}
  Rational(const Integer& n) : q_(n) {}
  Rational(long num, long den);
  Rational(const Integer& num, const Integer& den);

  // Parses "p/q" or "p" (q != 0), normalizes.
  static Rational from_string(const std::string& s);

  Integer numerator() const { return q_.get_num(); }
  Integer denominator() const { return q_.get_den(); }

  bool is_zero() const { return mpq_sgn(q_.get_mpq_t()) == 0; }
  bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_.get_mpq_t()), 1) == 0; }
  int sign() const { return mpq_sgn(q_.get_mpq_t()); }
  Rational abs() const;

  // x^e; e < 0 requires a nonzero base.
  Rational pow(long e) const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o) {
    q_ += o.q_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    q_ -= o.q_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    q_ *= o.q_;
    return *this;
  }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t()) < 0;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  // "p/q" with q > 0, "p" alone when q = 1. The wire format of every emitter.
  std::string to_string() const;

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class q_;
};

}  // namespace berndet
