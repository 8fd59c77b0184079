// Sparse multivariate polynomial over Rational, keyed by exponent vectors in
// graded-lex order (descending iteration: leading term first). The variable
// count is fixed at construction; mixing arities is an error, embeddings are
// explicit (embedded / rename_vars).
#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "berndet/errors.hpp"
#include "berndet/rational.hpp"
#include "berndet/unipoly.hpp"

namespace berndet {

using ExpVec = std::vector<std::uint32_t>;

// true iff a comes before b, i.e. a > b in graded lex.
struct GrlexDesc {
  bool operator()(const ExpVec& a, const ExpVec& b) const;
};

class MultiPoly {
 public:
  using TermMap = std::map<ExpVec, Rational, GrlexDesc>;

  explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}

  static MultiPoly constant(std::size_t nvars, const Rational& c);
  static MultiPoly variable(std::size_t nvars, std::size_t index);
  // p(x_var) placed into an nvars-variable ring.
  static MultiPoly from_unipoly(const UniPoly& p, std::size_t nvars, std::size_t var);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  // Total degree; -1 for the zero polynomial.
  long total_degree() const;
  Rational coeff(const ExpVec& e) const;
  Rational constant_term() const { return coeff(ExpVec(nvars_, 0)); }
  const std::pair<const ExpVec, Rational>& leading_term() const;
  bool is_constant() const;

  void add_term(const ExpVec& e, const Rational& c);

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const Rational& s);
  MultiPoly pow(unsigned long e) const;

  Rational eval(const std::vector<Rational>& point) const;
  MultiPoly substitute_var(std::size_t var, const Rational& value) const;
  MultiPoly swap_vars(std::size_t i, std::size_t j) const;
  // Pads exponent vectors with zeros up to new_nvars (new_nvars >= nvars).
  MultiPoly embedded(std::size_t new_nvars) const;
  // Moves variable i to slot target[i]; target must be injective.
  MultiPoly rename_vars(const std::vector<std::size_t>& target, std::size_t new_nvars) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  std::string to_string() const;

 private:
  std::size_t nvars_;
  TermMap terms_;
};

// Elementary symmetric polynomial E_{n,k} in n variables.
MultiPoly elem_sym(std::size_t n, std::size_t k);

// Complete homogeneous polynomial L_j: sum of all degree-j monomials in n variables.
MultiPoly complete_hom(std::size_t n, unsigned long j);

// Iterated divided difference of the Bernoulli polynomial B_ell taken at
// x_1,...,x_j: closed form sum_{t=0}^{ell-j+1} C(ell, t+j-1) B_{ell-j+1-t} L_t.
// Zero polynomial when ell <= j-2; the constant 1 when j = ell+1.
MultiPoly divided_diff_bernoulli(unsigned long ell, std::size_t j);

// Same object through the defining recursion (successive difference
// quotients via exact_div); must agree with the closed form.
MultiPoly divided_diff_bernoulli_recursive(unsigned long ell, std::size_t j);

// Exact quotient p/q; throws NotDivisibleError on any nonzero remainder.
MultiPoly exact_div(const MultiPoly& p, const MultiPoly& q);

// prod_{1 <= i < j <= n} (x_j - x_i)^power.
MultiPoly vandermonde(std::size_t n, unsigned long power);

// Invariance under the adjacent transpositions (generators of S_n).
bool is_symmetric(const MultiPoly& p);

Rational mp_eval(const MultiPoly& p, const std::vector<Rational>& point);

}  // namespace berndet
