#include "berndet/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace berndet {

Integer factorial(unsigned long n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

Integer binomial(unsigned long n, unsigned long k) {
  if (k > n) return Integer(0);
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

Integer multinomial(const std::vector<unsigned long>& parts) {
  unsigned long sum = 0;
  for (unsigned long p : parts) sum += p;
  Integer m = factorial(sum);
  for (unsigned long p : parts) m /= factorial(p);
  return m;
}

unsigned long lcm_of(const std::vector<unsigned long>& values) {
  if (values.empty()) throw std::invalid_argument("lcm_of: empty input");
  Integer l(1);
  for (unsigned long v : values) {
    if (v == 0) throw std::invalid_argument("lcm_of: zero entry");
    mpz_lcm_ui(l.get_mpz_t(), l.get_mpz_t(), v);
  }
  if (!l.fits_ulong_p()) throw std::overflow_error("lcm_of: lcm exceeds machine word");
  return l.get_ui();
}

Rational::Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  q_ = mpq_class(num);
  mpq_class d(den);
  q_ /= d;  // mpq division canonicalizes
}

Rational Rational::from_string(const std::string& s) {
  mpq_class q;
  if (s.empty() || mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("Rational: cannot parse '" + s + "'");
  if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
    throw std::domain_error("Rational: zero denominator in '" + s + "'");
  q.canonicalize();
  Rational r;
  r.q_ = q;
  return r;
}

Rational Rational::abs() const {
  Rational r;
  mpq_abs(r.q_.get_mpq_t(), q_.get_mpq_t());
  return r;
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  if (is_zero()) {
    if (e < 0) throw std::domain_error("Rational: 0 raised to a negative power");
    return Rational(0);
  }
  Integer n = numerator();
  Integer d = denominator();
  if (e < 0) {
    std::swap(n, d);
    if (n < 0) {
      n = -n;
      d = -d;
    }
    e = -e;
  }
  Integer np, dp;
  mpz_pow_ui(np.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(dp.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(e));
  // inputs are coprime, so the powers are too; no reduction needed
  Rational r;
  mpq_set_num(r.q_.get_mpq_t(), np.get_mpz_t());
  mpq_set_den(r.q_.get_mpq_t(), dp.get_mpz_t());
  return r;
}

Rational Rational::operator-() const {
  Rational r;
  mpq_neg(r.q_.get_mpq_t(), q_.get_mpq_t());
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  q_ /= o.q_;
  return *this;
}

std::string Rational::to_string() const {
  std::string s = numerator().get_str();
  if (!is_integer()) s += "/" + denominator().get_str();
  return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace berndet
