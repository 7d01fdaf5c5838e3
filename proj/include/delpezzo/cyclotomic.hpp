#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_m).
//
// A CyclotomicNumber stores its conductor m and the coordinates of the value
// in the power basis 1, zeta_m, ..., zeta_m^{phi(m)-1}, i.e. a polynomial in
// zeta_m reduced modulo the m-th cyclotomic polynomial. Binary operations lift
// both operands to the lcm of their conductors. Results are never minimized,
// so two equal numbers may carry different conductors; equality and the
// zero-test account for that.

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace delpezzo::cyclo {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Integer polynomial, coefficient of x^i at index i.
using IntPoly = std::vector<long long>;

/// Phi_m, built by dividing x^m - 1 by Phi_d for the proper divisors d of m.
/// Results are cached; the function is safe to call concurrently.
const IntPoly& cyclotomic_polynomial(int m);

int euler_phi(int m);

/// Largest conductor arithmetic may create; defaults to 360.
int conductor_cap();
void set_conductor_cap(int cap);

/// e^{2 pi i k/m} with the fraction k/m reduced into [0, 1).
class RootOfUnity {
 public:
  RootOfUnity() = default;
  RootOfUnity(long long k, long long m);

  /// Parses "k/m". The bare string "0" denotes the number zero, which is not a
  /// root of unity, and is rejected here.
  static RootOfUnity parse(std::string_view text);

  long long numerator() const { return k_; }
  /// Multiplicative order; equals the reduced denominator.
  long long order() const { return m_; }

  RootOfUnity operator*(const RootOfUnity& other) const;
  RootOfUnity inverse() const { return RootOfUnity(m_ - k_, m_); }
  RootOfUnity pow(long long e) const;
  bool is_one() const { return k_ == 0; }

  std::string to_string() const;

  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
  friend auto operator<=>(const RootOfUnity&, const RootOfUnity&) = default;

 private:
  long long k_ = 0;
  long long m_ = 1;
};

class CyclotomicNumber {
 public:
  /// Zero.
  CyclotomicNumber() : conductor_(1), coeffs_(1) {}
  CyclotomicNumber(const Rational& q);
  CyclotomicNumber(long v) : CyclotomicNumber(Rational(v)) {}
  explicit CyclotomicNumber(const RootOfUnity& r);

  /// zeta_m^k as an element of Q(zeta_m).
  static CyclotomicNumber zeta(int m, long long k = 1);
  /// Root of unity embedded at a chosen conductor; order(r) must divide n.
  static CyclotomicNumber embed(const RootOfUnity& r, int n);
  /// Builds sum coeffs[i] zeta_m^i for any length, reducing modulo Phi_m.
  static CyclotomicNumber from_power_series(int m, std::vector<Rational> coeffs);

  int conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  /// Same value expressed over Q(zeta_n); conductor() must divide n.
  CyclotomicNumber lifted(int n) const;

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Value as a rational; requires is_rational().
  Rational rational_value() const;

  CyclotomicNumber operator-() const;
  CyclotomicNumber& operator+=(const CyclotomicNumber& o);
  CyclotomicNumber& operator-=(const CyclotomicNumber& o);
  CyclotomicNumber& operator*=(const CyclotomicNumber& o);
  CyclotomicNumber& operator/=(const CyclotomicNumber& o);
  friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
  friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
  friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }
  friend CyclotomicNumber operator/(CyclotomicNumber a, const CyclotomicNumber& b) { return a /= b; }

  /// Multiplicative inverse; throws delpezzo::Error on zero.
  CyclotomicNumber inverse() const;
  std::optional<CyclotomicNumber> try_inverse() const;
  CyclotomicNumber pow(long long e) const;

  /// Image under the Galois automorphism zeta_m -> zeta_m^k, gcd(k, m) = 1.
  CyclotomicNumber galois(int k) const;

  /// k/m when the value equals e^{2 pi i k/m} exactly, nullopt otherwise.
  std::optional<RootOfUnity> as_root_of_unity() const;

  /// Human-readable form: "0", "-3/2", "e(1/3)", "1/2 + 2*e(1/12)".
  std::string to_string() const;

  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);

 private:
  CyclotomicNumber(int m, std::vector<Rational> reduced) : conductor_(m), coeffs_(std::move(reduced)) {}

  int conductor_;
  std::vector<Rational> coeffs_;
};

/// Total order on numbers of one fixed conductor (lexicographic on
/// coordinates after lifting both to the lcm). Only consistent when every
/// compared value is expressed at the same conductor, which is how callers
/// that need canonical sorting use it.
bool coordinate_less(const CyclotomicNumber& a, const CyclotomicNumber& b);

/// Parses sums such as "1", "-1/2", "e(1/3)", "i", "2*e(1/4) - 1/3".
CyclotomicNumber parse_cyclotomic(std::string_view text);

}  // namespace delpezzo::cyclo
