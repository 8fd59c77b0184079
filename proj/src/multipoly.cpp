#include "berndet/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "berndet/bernoulli.hpp"

namespace berndet {

namespace {

unsigned long exp_total(const ExpVec& e) {
  unsigned long t = 0;
  for (std::uint32_t x : e) t += x;
  return t;
}

// a < b in graded lex (degree first, then lex with x_1 heaviest).
bool grlex_less(const ExpVec& a, const ExpVec& b) {
  unsigned long da = exp_total(a), db = exp_total(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

bool GrlexDesc::operator()(const ExpVec& a, const ExpVec& b) const { return grlex_less(b, a); }

MultiPoly MultiPoly::constant(std::size_t nvars, const Rational& c) {
  MultiPoly p(nvars);
  p.add_term(ExpVec(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw std::invalid_argument("MultiPoly::variable: index out of range");
  MultiPoly p(nvars);
  ExpVec e(nvars, 0);
  e[index] = 1;
  p.add_term(e, Rational(1));
  return p;
}

MultiPoly MultiPoly::from_unipoly(const UniPoly& p, std::size_t nvars, std::size_t var) {
  if (var >= nvars) throw std::invalid_argument("MultiPoly::from_unipoly: variable out of range");
  MultiPoly r(nvars);
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    if (p.coeffs()[k].is_zero()) continue;
    ExpVec e(nvars, 0);
    e[var] = static_cast<std::uint32_t>(k);
    r.terms_.emplace(std::move(e), p.coeffs()[k]);
  }
  return r;
}

long MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  // leading term has maximal degree under graded lex
  return static_cast<long>(exp_total(terms_.begin()->first));
}

Rational MultiPoly::coeff(const ExpVec& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

const std::pair<const ExpVec, Rational>& MultiPoly::leading_term() const {
  if (terms_.empty()) throw std::logic_error("MultiPoly::leading_term: zero polynomial");
  return *terms_.begin();
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && exp_total(terms_.begin()->first) == 0);
}

void MultiPoly::add_term(const ExpVec& e, const Rational& c) {
  if (e.size() != nvars_) throw std::invalid_argument("MultiPoly::add_term: arity mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (nvars_ != o.nvars_) throw std::invalid_argument("MultiPoly: arity mismatch in +");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (nvars_ != o.nvars_) throw std::invalid_argument("MultiPoly: arity mismatch in -");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("MultiPoly: arity mismatch in *");
  MultiPoly r(a.nvars_);
  if (a.is_zero() || b.is_zero()) return r;
  ExpVec e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MultiPoly operator*(const MultiPoly& a, const Rational& s) {
  MultiPoly r(a.nvars_);
  if (s.is_zero()) return r;
  for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, c * s);
  return r;
}

MultiPoly MultiPoly::pow(unsigned long e) const {
  MultiPoly acc = constant(nvars_, Rational(1));
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return acc;
}

Rational MultiPoly::eval(const std::vector<Rational>& point) const {
  if (point.size() != nvars_) throw std::invalid_argument("MultiPoly::eval: point length mismatch");
  // power tables per variable
  std::vector<std::uint32_t> maxe(nvars_, 0);
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < nvars_; ++i) maxe[i] = std::max(maxe[i], e[i]);
  std::vector<std::vector<Rational>> pw(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) {
    pw[i].reserve(maxe[i] + 1);
    pw[i].push_back(Rational(1));
    for (std::uint32_t k = 1; k <= maxe[i]; ++k) pw[i].push_back(pw[i].back() * point[i]);
  }
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (e[i] > 0) t *= pw[i][e[i]];
    acc += t;
  }
  return acc;
}

MultiPoly MultiPoly::substitute_var(std::size_t var, const Rational& value) const {
  if (var >= nvars_) throw std::invalid_argument("substitute_var: index out of range");
  MultiPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    ExpVec ne = e;
    ne[var] = 0;
    r.add_term(ne, c * value.pow(e[var]));
  }
  return r;
}

MultiPoly MultiPoly::swap_vars(std::size_t i, std::size_t j) const {
  if (i >= nvars_ || j >= nvars_) throw std::invalid_argument("swap_vars: index out of range");
  MultiPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    ExpVec ne = e;
    std::swap(ne[i], ne[j]);
    r.terms_.emplace(std::move(ne), c);
  }
  return r;
}

MultiPoly MultiPoly::embedded(std::size_t new_nvars) const {
  if (new_nvars < nvars_) throw std::invalid_argument("embedded: cannot drop variables");
  MultiPoly r(new_nvars);
  for (const auto& [e, c] : terms_) {
    ExpVec ne(new_nvars, 0);
    std::copy(e.begin(), e.end(), ne.begin());
    r.terms_.emplace(std::move(ne), c);
  }
  return r;
}

MultiPoly MultiPoly::rename_vars(const std::vector<std::size_t>& target,
                                 std::size_t new_nvars) const {
  if (target.size() != nvars_) throw std::invalid_argument("rename_vars: map length mismatch");
  MultiPoly r(new_nvars);
  for (const auto& [e, c] : terms_) {
    ExpVec ne(new_nvars, 0);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (target[i] >= new_nvars) throw std::invalid_argument("rename_vars: slot out of range");
      ne[target[i]] += e[i];
    }
    r.add_term(ne, c);
  }
  return r;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational v = c;
    if (first) {
      if (v.sign() < 0) {
        os << "-";
        v = -v;
      }
      first = false;
    } else {
      os << (v.sign() < 0 ? " - " : " + ");
      v = v.abs();
    }
    bool has_vars = exp_total(e) > 0;
    if (!has_vars || v != Rational(1)) {
      os << v.to_string();
      if (has_vars) os << "*";
    }
    bool first_var = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << "x" << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

MultiPoly elem_sym(std::size_t n, std::size_t k) {
  if (k > n) throw std::invalid_argument("elem_sym: k > n");
  MultiPoly p(n);
  if (k == 0) return MultiPoly::constant(n, Rational(1));
  // enumerate k-subsets of {0..n-1}
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    ExpVec e(n, 0);
    for (std::size_t i : idx) e[i] = 1;
    p.add_term(e, Rational(1));
    std::size_t j = k;
    while (j-- > 0) {
      if (idx[j] != j + n - k) break;
      if (j == 0) return p;
    }
    if (idx[j] == j + n - k) return p;
    ++idx[j];
    for (std::size_t t = j + 1; t < k; ++t) idx[t] = idx[t - 1] + 1;
  }
}

namespace {

void monomials_rec(std::size_t slot, unsigned long remaining, ExpVec& e, MultiPoly& p) {
  if (slot + 1 == e.size()) {
    e[slot] = static_cast<std::uint32_t>(remaining);
    p.add_term(e, Rational(1));
    return;
  }
  for (unsigned long d = 0; d <= remaining; ++d) {
    e[slot] = static_cast<std::uint32_t>(d);
    monomials_rec(slot + 1, remaining - d, e, p);
  }
}

}  // namespace

MultiPoly complete_hom(std::size_t n, unsigned long j) {
  if (n == 0) throw std::invalid_argument("complete_hom: need at least one variable");
  MultiPoly p(n);
  ExpVec e(n, 0);
  monomials_rec(0, j, e, p);
  return p;
}

MultiPoly divided_diff_bernoulli(unsigned long ell, std::size_t j) {
  if (ell < 1 || j < 1) throw std::invalid_argument("divided_diff_bernoulli: ell, j >= 1");
  MultiPoly acc(j);
  if (ell + 1 < j) return acc;  // ell <= j - 2
  for (unsigned long t = 0; t + j <= ell + 1; ++t)
    acc += complete_hom(j, t) *
           (Rational(binomial(ell, t + j - 1)) * bernoulli_number(ell - j + 1 - t));
  return acc;
}

MultiPoly divided_diff_bernoulli_recursive(unsigned long ell, std::size_t j) {
  if (ell < 1 || j < 1) throw std::invalid_argument("divided_diff_bernoulli_recursive: ell, j >= 1");
  if (j == 1) return MultiPoly::from_unipoly(bernoulli_poly(ell), 1, 0);
  MultiPoly prev = divided_diff_bernoulli_recursive(ell, j - 1);  // in vars x_1..x_{j-1}
  // numerator: B(x_1,..,x_{j-2},x_j) - B(x_1,..,x_{j-1}), inside the j-variable ring
  std::vector<std::size_t> target(j - 1);
  std::iota(target.begin(), target.end(), 0);
  target[j - 2] = j - 1;  // last variable moves to slot j
  MultiPoly num = prev.rename_vars(target, j) - prev.embedded(j);
  MultiPoly den = MultiPoly::variable(j, j - 1) - MultiPoly::variable(j, j - 2);
  return exact_div(num, den);
}

MultiPoly exact_div(const MultiPoly& p, const MultiPoly& q) {
  if (p.nvars() != q.nvars()) throw std::invalid_argument("exact_div: arity mismatch");
  if (q.is_zero()) throw std::invalid_argument("exact_div: division by zero polynomial");
  const std::size_t n = p.nvars();
  MultiPoly rem = p;
  MultiPoly quot(n);
  const auto& [qe, qc] = q.leading_term();
  ExpVec d(n);
  while (!rem.is_zero()) {
    const auto& [re, rc] = rem.leading_term();
    for (std::size_t i = 0; i < n; ++i) {
      if (re[i] < qe[i])
        throw NotDivisibleError("exact_div: not divisible (leading term obstruction)");
      d[i] = re[i] - qe[i];
    }
    Rational c = rc / qc;
    quot.add_term(d, c);
    // rem -= c * x^d * q
    ExpVec shifted(n);
    for (const auto& [te, tc] : q.terms()) {
      for (std::size_t i = 0; i < n; ++i) shifted[i] = te[i] + d[i];
      rem.add_term(shifted, -(tc * c));
    }
  }
  return quot;
}

MultiPoly vandermonde(std::size_t n, unsigned long power) {
  if (n == 0) throw std::invalid_argument("vandermonde: need at least one variable");
  MultiPoly v = MultiPoly::constant(n, Rational(1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      v = v * (MultiPoly::variable(n, j) - MultiPoly::variable(n, i));
  return v.pow(power);
}

bool is_symmetric(const MultiPoly& p) {
  for (std::size_t i = 0; i + 1 < p.nvars(); ++i)
    if (p.swap_vars(i, i + 1) != p) return false;
  return true;
}

Rational mp_eval(const MultiPoly& p, const std::vector<Rational>& point) { return p.eval(point); }

}  // namespace berndet
