#pragma once

// Sparse multivariate polynomials over cyclotomic fields, resultants, exact
// univariate root finding and a small elimination solver.

#include <map>
#include <string>
#include <vector>

#include "delpezzo/cyclotomic.hpp"

namespace delpezzo::poly {

using cyclo::CyclotomicNumber;
using cyclo::Rational;
using Monomial = std::vector<int>;

class Poly {
 public:
  explicit Poly(int nvars = 0) : nvars_(nvars) {}
  static Poly constant(int nvars, const CyclotomicNumber& c);
  static Poly variable(int nvars, int i);
  static Poly monomial(int nvars, Monomial exps, const CyclotomicNumber& c);

  int nvars() const { return nvars_; }
  /// Nonzero terms keyed by exponent vector (lex order, so rbegin() leads).
  const std::map<Monomial, CyclotomicNumber>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  CyclotomicNumber constant_term() const;
  int degree(int var) const;
  int total_degree() const;
  bool involves(int var) const { return degree(var) > 0; }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const CyclotomicNumber& c) const;
  Poly pow(int e) const;

  Poly derivative(int var) const;
  /// Sets x_var = v; the variable stays in the ring but no longer occurs.
  Poly substitute(int var, const CyclotomicNumber& v) const;
  /// Replaces every x_i by images[i]; images live in a ring of any arity.
  Poly compose(const std::vector<Poly>& images) const;
  CyclotomicNumber evaluate(const std::vector<CyclotomicNumber>& x) const;
  /// Coefficients with respect to x_var: result[k] multiplies x_var^k.
  std::vector<Poly> coefficients(int var) const;
  /// Divides out the largest monomial in the given variables that divides every term.
  Poly without_monomial_factor(const std::vector<int>& vars) const;

  std::string to_string(const std::vector<std::string>& names) const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }

 private:
  void add_term(const Monomial& m, const CyclotomicNumber& c);

  int nvars_;
  std::map<Monomial, CyclotomicNumber> terms_;
};

/// a / b when b divides a exactly; throws delpezzo::Error otherwise.
Poly exact_quotient(const Poly& a, const Poly& b);

/// Sylvester resultant with respect to x_var, by fraction-free elimination.
Poly resultant(const Poly& f, const Poly& g, int var);

/// Univariate polynomial, coefficient of x^k at index k, no trailing zeros.
using UPoly = std::vector<CyclotomicNumber>;

UPoly to_univariate(const Poly& p, int var);
CyclotomicNumber evaluate(const UPoly& p, const CyclotomicNumber& x);
/// Monic gcd; the gcd of two zero polynomials is zero.
UPoly gcd(UPoly a, UPoly b);
std::string to_string(const UPoly& p, const std::string& var = "x");

struct RootSearch {
  std::vector<CyclotomicNumber> roots;  // distinct
  UPoly residual;                       // monic factor with no recognized roots; {1} when none
  bool complete() const { return residual.size() <= 1; }
};

/// Exact roots in cyclotomic fields: rational roots, roots of unity (cyclotomic
/// factors of the norm), and roots of a binomial residual. Anything else is
/// returned as the residual factor.
RootSearch find_roots(const UPoly& p);

struct SolveResult {
  std::vector<std::vector<CyclotomicNumber>> solutions;  // full-length vectors; non-unknowns are 0
  bool complete = true;
  std::vector<std::string> residuals;  // why the answer may be partial
};

/// Common zeros of `eqs` with every listed unknown nonzero. Variables not
/// listed must not occur. Eliminates by resultants, back-substitutes and
/// verifies; sound, and complete whenever `complete` is set.
SolveResult solve_nonzero(std::vector<Poly> eqs, const std::vector<int>& unknowns);

}  // namespace delpezzo::poly
