// Bernoulli numbers, Bernoulli polynomials and Bernoulli-Barnes numbers.
//
// Convention lock: B_1 = -1/2 (the generating function z/(e^z - 1)). The
// +1/2 convention exists in the wild; nothing here uses it.
#pragma once

#include <vector>

#include "berndet/rational.hpp"
#include "berndet/unipoly.hpp"

namespace berndet {

// B_n via the recurrence sum_{k=0}^{n} C(n+1,k) B_k = 0; memoized.
Rational bernoulli_number(unsigned long n);

// B_n(x) = sum_{k=0}^{n} C(n,k) B_{n-k} x^k; degree n, monic.
UniPoly bernoulli_poly(unsigned long n);

Rational bernoulli_poly_eval(unsigned long n, const Rational& x);

// Bernoulli-Barnes number B_j(a), computed as the multinomial sum over
// compositions i_1 + ... + i_r = j of C(j; i) B_{i_1}...B_{i_r} a_1^{i_1-1}...a_r^{i_r-1}.
Rational bernoulli_barnes_number(unsigned long j, const std::vector<unsigned long>& a);

// Same value through the truncated power-series product of the factors
// z/(e^{a_i z} - 1); independent code path, cross-checked in tests.
Rational bernoulli_barnes_number_series(unsigned long j, const std::vector<unsigned long>& a);

}  // namespace berndet
