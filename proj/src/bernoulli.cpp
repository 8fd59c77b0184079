#include "berndet/bernoulli.hpp"

#include <mutex>
#include <stdexcept>

namespace berndet {

Rational bernoulli_number(unsigned long n) {
  static std::vector<Rational> cache{Rational(1)};
  static std::mutex mu;
  std::scoped_lock lock(mu);
  while (cache.size() <= n) {
    unsigned long m = cache.size();
    Rational s(0);
    for (unsigned long k = 0; k < m; ++k) {
      if (cache[k].is_zero()) continue;
      s += Rational(binomial(m + 1, k)) * cache[k];
    }
    cache.push_back(-s / Rational(Integer(m + 1)));
  }
  return cache[n];
}

UniPoly bernoulli_poly(unsigned long n) {
  std::vector<Rational> c(n + 1);
  for (unsigned long k = 0; k <= n; ++k)
    c[k] = Rational(binomial(n, k)) * bernoulli_number(n - k);
  return UniPoly(std::move(c));
}

Rational bernoulli_poly_eval(unsigned long n, const Rational& x) {
  return bernoulli_poly(n).eval(x);
}

namespace {

void compositions_rec(unsigned long remaining, std::size_t slot, std::vector<unsigned long>& comp,
                      const std::vector<unsigned long>& a, Rational& acc) {
  if (slot + 1 == comp.size()) {
    comp[slot] = remaining;
    Rational term(1);
    for (unsigned long i : comp) {
      const Rational b = bernoulli_number(i);
      if (b.is_zero()) return;
      term *= b;
    }
    term *= Rational(multinomial(comp));
    for (std::size_t k = 0; k < comp.size(); ++k)
      term *= Rational(Integer(a[k])).pow(static_cast<long>(comp[k]) - 1);
    acc += term;
    return;
  }
  for (unsigned long i = 0; i <= remaining; ++i) {
    comp[slot] = i;
    compositions_rec(remaining - i, slot + 1, comp, a, acc);
  }
}

}  // namespace

Rational bernoulli_barnes_number(unsigned long j, const std::vector<unsigned long>& a) {
  if (a.empty()) throw std::invalid_argument("bernoulli_barnes_number: empty part vector");
  for (unsigned long ai : a)
    if (ai == 0) throw std::invalid_argument("bernoulli_barnes_number: parts must be positive");
  Rational acc(0);
  std::vector<unsigned long> comp(a.size(), 0);
  compositions_rec(j, 0, comp, a, acc);
  return acc;
}

Rational bernoulli_barnes_number_series(unsigned long j, const std::vector<unsigned long>& a) {
  if (a.empty()) throw std::invalid_argument("bernoulli_barnes_number_series: empty part vector");
  // z/(e^{a z} - 1) = sum_t B_t a^{t-1} z^t / t!
  std::vector<Rational> prod(j + 1, Rational(0));
  prod[0] = Rational(1);
  for (unsigned long ai : a) {
    if (ai == 0) throw std::invalid_argument("bernoulli_barnes_number_series: parts must be positive");
    std::vector<Rational> factor(j + 1);
    for (unsigned long t = 0; t <= j; ++t)
      factor[t] = bernoulli_number(t) * Rational(Integer(ai)).pow(static_cast<long>(t) - 1) /
                  Rational(factorial(t));
    std::vector<Rational> next(j + 1, Rational(0));
    for (unsigned long s = 0; s <= j; ++s) {
      if (prod[s].is_zero()) continue;
      for (unsigned long t = 0; s + t <= j; ++t) next[s + t] += prod[s] * factor[t];
    }
    prod = std::move(next);
  }
  return prod[j] * Rational(factorial(j));
}

}  // namespace berndet
