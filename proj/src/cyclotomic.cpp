#include "delpezzo/cyclotomic.hpp"

#include <atomic>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "delpezzo/error.hpp"

namespace delpezzo::cyclo {

namespace {

std::atomic<int> g_conductor_cap{360};

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Quotient and remainder of a by b over Q; b must be nonzero after trimming.
std::pair<QPoly, QPoly> divmod(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  if (a.size() < b.size()) return {QPoly{}, a};
  QPoly q(a.size() - b.size() + 1);
  const Rational lead = b.back();
  for (std::size_t i = a.size(); i-- >= b.size();) {
    if (a[i] == 0) continue;
    Rational c = a[i] / lead;
    std::size_t shift = i - (b.size() - 1);
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
  }
  trim(a);
  trim(q);
  return {q, a};
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

QPoly sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Folds exponents modulo m and reduces modulo Phi_m; result has length phi(m).
std::vector<Rational> reduce(int m, const std::vector<Rational>& series) {
  std::vector<Rational> a(m);
  for (std::size_t i = 0; i < series.size(); ++i) {
    if (series[i] != 0) a[i % m] += series[i];
  }
  const IntPoly& phi = cyclotomic_polynomial(m);
  const int deg = static_cast<int>(phi.size()) - 1;
  for (int i = m - 1; i >= deg; --i) {
    if (a[i] == 0) continue;
    Rational c = a[i];
    for (int j = 0; j <= deg; ++j) a[i - deg + j] -= c * static_cast<long>(phi[j]);
  }
  a.resize(deg);
  return a;
}

int checked_lcm(int a, int b) {
  long long l = std::lcm<long long>(a, b);
  if (l > conductor_cap()) {
    throw CapExceeded("cyclotomic conductor " + std::to_string(l) + " exceeds cap " +
                      std::to_string(conductor_cap()));
  }
  return static_cast<int>(l);
}

std::string rational_string(const Rational& q) { return q.get_str(); }

}  // namespace

const IntPoly& cyclotomic_polynomial(int m) {
  if (m < 1) throw PreconditionError("cyclotomic_polynomial: m must be positive");
  static std::mutex mu;
  static std::map<int, IntPoly> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
  }
  // x^m - 1 divided by Phi_d for every proper divisor d.
  IntPoly num(m + 1, 0);
  num[0] = -1;
  num[m] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    const IntPoly& den = cyclotomic_polynomial(d);
    const std::size_t dd = den.size() - 1;
    IntPoly q(num.size() - dd, 0);
    for (std::size_t i = num.size(); i-- > dd;) {
      long long c = num[i];  // den is monic
      q[i - dd] = c;
      if (c == 0) continue;
      for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    num = std::move(q);
  }
  std::lock_guard lock(mu);
  return cache.emplace(m, std::move(num)).first->second;
}

int euler_phi(int m) {
  int result = m;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

int conductor_cap() { return g_conductor_cap.load(); }

void set_conductor_cap(int cap) {
  if (cap < 1) throw PreconditionError("conductor cap must be positive");
  g_conductor_cap.store(cap);
}

// ---------------------------------------------------------------- RootOfUnity

RootOfUnity::RootOfUnity(long long k, long long m) {
  if (m <= 0) throw PreconditionError("root of unity denominator must be positive");
  k %= m;
  if (k < 0) k += m;
  long long g = std::gcd(k, m);
  k_ = k / g;
  m_ = m / g;
  if (k_ == 0) m_ = 1;
}

RootOfUnity RootOfUnity::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    throw ParseError("root of unity must be written k/m, got \"" + std::string(text) + "\"");
  }
  auto parse_int = [&](std::string_view s) -> long long {
    std::string str(s);
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(str, &used);
    } catch (const std::exception&) {
      used = std::string::npos;
    }
    if (str.empty() || used != str.size()) {
      throw ParseError("bad integer \"" + str + "\" in root of unity \"" + std::string(text) + "\"");
    }
    return v;
  };
  long long k = parse_int(text.substr(0, slash));
  long long m = parse_int(text.substr(slash + 1));
  if (m <= 0) throw ParseError("root of unity denominator must be positive in \"" + std::string(text) + "\"");
  return RootOfUnity(k, m);
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity& o) const {
  long long m = std::lcm(m_, o.m_);
  return RootOfUnity(k_ * (m / m_) + o.k_ * (m / o.m_), m);
}

RootOfUnity RootOfUnity::pow(long long e) const {
  long long k = (k_ * (e % m_)) % m_;
  return RootOfUnity(k, m_);
}

std::string RootOfUnity::to_string() const { return std::to_string(k_) + "/" + std::to_string(m_); }

// ----------------------------------------------------------- CyclotomicNumber

CyclotomicNumber::CyclotomicNumber(const Rational& q) : conductor_(1), coeffs_{q} {
  // Callers may hand over an unreduced fraction; equality relies on canonical form.
  coeffs_[0].canonicalize();
}

CyclotomicNumber::CyclotomicNumber(const RootOfUnity& r) : CyclotomicNumber(zeta(static_cast<int>(r.order()), r.numerator())) {}

CyclotomicNumber CyclotomicNumber::zeta(int m, long long k) {
  if (m > conductor_cap()) {
    throw CapExceeded("cyclotomic conductor " + std::to_string(m) + " exceeds cap " + std::to_string(conductor_cap()));
  }
  k %= m;
  if (k < 0) k += m;
  std::vector<Rational> s(static_cast<std::size_t>(k) + 1);
  s[k] = 1;
  return CyclotomicNumber(m, reduce(m, s));
}

CyclotomicNumber CyclotomicNumber::embed(const RootOfUnity& r, int n) {
  if (n % r.order() != 0) {
    throw PreconditionError("root " + r.to_string() + " does not live in conductor " + std::to_string(n));
  }
  return zeta(n, r.numerator() * (n / r.order()));
}

CyclotomicNumber CyclotomicNumber::from_power_series(int m, std::vector<Rational> coeffs) {
  if (m < 1) throw PreconditionError("conductor must be positive");
  return CyclotomicNumber(m, reduce(m, coeffs));
}

CyclotomicNumber CyclotomicNumber::lifted(int n) const {
  if (n == conductor_) return *this;
  if (n % conductor_ != 0) {
    throw PreconditionError("cannot lift conductor " + std::to_string(conductor_) + " to " + std::to_string(n));
  }
  const int step = n / conductor_;
  std::vector<Rational> s(coeffs_.size() * step);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) s[i * step] = coeffs_[i];
  return CyclotomicNumber(n, reduce(n, s));
}

bool CyclotomicNumber::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool CyclotomicNumber::is_one() const { return is_rational() && coeffs_[0] == 1; }

bool CyclotomicNumber::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

Rational CyclotomicNumber::rational_value() const {
  if (!is_rational()) throw PreconditionError("cyclotomic number " + to_string() + " is not rational");
  return coeffs_.empty() ? Rational(0) : coeffs_[0];
}

CyclotomicNumber CyclotomicNumber::operator-() const {
  CyclotomicNumber r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& o) {
  int m = checked_lcm(conductor_, o.conductor_);
  if (m != conductor_) *this = lifted(m);
  if (o.conductor_ == m) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  } else {
    CyclotomicNumber b = o.lifted(m);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
  }
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& o) { return *this += -o; }

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& o) {
  int m = checked_lcm(conductor_, o.conductor_);
  // Rational factors only scale coordinates.
  if (o.is_rational()) {
    if (m != conductor_) *this = lifted(m);
    const Rational& q = o.coeffs_[0];
    if (q != 1) {
      for (auto& c : coeffs_) c *= q;
    }
    return *this;
  }
  if (is_rational()) {
    Rational q = coeffs_[0];
    *this = o.lifted(m);
    if (q != 1) {
      for (auto& c : coeffs_) c *= q;
    }
    return *this;
  }
  CyclotomicNumber a = lifted(m);
  CyclotomicNumber b = o.lifted(m);
  std::vector<Rational> prod(a.coeffs_.size() + b.coeffs_.size());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] != 0) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  conductor_ = m;
  coeffs_ = reduce(m, prod);
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator/=(const CyclotomicNumber& o) { return *this *= o.inverse(); }

std::optional<CyclotomicNumber> CyclotomicNumber::try_inverse() const {
  if (is_zero()) return std::nullopt;
  if (is_rational()) return CyclotomicNumber(Rational(1) / coeffs_[0]);
  const IntPoly& phi = cyclotomic_polynomial(conductor_);
  QPoly r0;
  for (long long c : phi) r0.emplace_back(static_cast<long>(c));
  QPoly r1(coeffs_.begin(), coeffs_.end());
  trim(r1);
  QPoly s0{}, s1{Rational(1)};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    QPoly s2 = sub(s0, mul(q, s1));
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant since Phi_m is irreducible.
  Rational c = r0[0];
  for (auto& x : s0) x /= c;
  return CyclotomicNumber(conductor_, reduce(conductor_, s0));
}

CyclotomicNumber CyclotomicNumber::inverse() const {
  auto inv = try_inverse();
  if (!inv) throw Error("inverse of zero in Q(zeta_" + std::to_string(conductor_) + ")");
  return *inv;
}

CyclotomicNumber CyclotomicNumber::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  CyclotomicNumber result(Rational(1));
  CyclotomicNumber base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

CyclotomicNumber CyclotomicNumber::galois(int k) const {
  if (std::gcd(k, conductor_) != 1) throw PreconditionError("Galois exponent must be coprime to the conductor");
  const int m = conductor_;
  long long kk = ((k % m) + m) % m;
  std::vector<Rational> s(m);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) s[(i * kk) % m] += coeffs_[i];
  return CyclotomicNumber(m, reduce(m, s));
}

std::optional<RootOfUnity> CyclotomicNumber::as_root_of_unity() const {
  if (is_zero()) return std::nullopt;
  // Roots of unity in Q(zeta_m) are exactly +-zeta_m^k.
  const int m = conductor_;
  const CyclotomicNumber neg = -*this;
  CyclotomicNumber power = CyclotomicNumber(Rational(1)).lifted(m);
  const CyclotomicNumber z = zeta(m, 1);
  for (int k = 0; k < m; ++k) {
    if (power.coeffs_ == coeffs_) return RootOfUnity(k, m);
    if (power.coeffs_ == neg.coeffs_) return RootOfUnity(2LL * k + m, 2LL * m);
    power *= z;
  }
  return std::nullopt;
}

std::string CyclotomicNumber::to_string() const {
  if (is_rational()) return rational_string(coeffs_[0]);
  if (auto r = as_root_of_unity()) return "e(" + r->to_string() + ")";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << rational_string(mag);
      continue;
    }
    if (mag != 1) os << rational_string(mag) << "*";
    os << "e(" << RootOfUnity(static_cast<long long>(i), conductor_).to_string() << ")";
  }
  return os.str();
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
  int m = static_cast<int>(std::lcm(a.conductor_, b.conductor_));
  return a.lifted(m).coeffs_ == b.lifted(m).coeffs_;
}

bool coordinate_less(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.conductor() == b.conductor()) {
    return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(), b.coeffs().end());
  }
  int m = static_cast<int>(std::lcm(a.conductor(), b.conductor()));
  auto la = a.lifted(m), lb = b.lifted(m);
  return std::lexicographical_compare(la.coeffs().begin(), la.coeffs().end(), lb.coeffs().begin(), lb.coeffs().end());
}

// -------------------------------------------------------------------- parsing

namespace {

class CycParser {
 public:
  explicit CycParser(std::string_view s) : s_(s) {}

  CyclotomicNumber parse() {
    CyclotomicNumber v = sum();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cyclotomic literal \"" + std::string(s_) + "\": " + what + " at offset " + std::to_string(pos_));
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  CyclotomicNumber sum() {
    skip_ws();
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    CyclotomicNumber acc = product();
    if (neg) acc = -acc;
    for (;;) {
      if (eat('+')) acc += product();
      else if (eat('-')) acc -= product();
      else return acc;
    }
  }

  CyclotomicNumber product() {
    CyclotomicNumber acc = power();
    while (eat('*')) acc *= power();
    return acc;
  }

  CyclotomicNumber power() {
    CyclotomicNumber base = atom();
    if (eat('^')) {
      skip_ws();
      bool neg = eat('-');
      long long e = integer();
      base = base.pow(neg ? -e : e);
    }
    return base;
  }

  long long integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stoll(std::string(s_.substr(start, pos_ - start)));
  }

  CyclotomicNumber atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      CyclotomicNumber v = sum();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (c == 'i' && (pos_ + 1 == s_.size() || !std::isalnum(static_cast<unsigned char>(s_[pos_ + 1])))) {
      ++pos_;
      return CyclotomicNumber(RootOfUnity(1, 4));
    }
    if (c == 'e' && pos_ + 1 < s_.size() && s_[pos_ + 1] == '(') {
      pos_ += 2;
      skip_ws();
      bool neg = eat('-');
      long long k = integer();
      if (!eat('/')) fail("expected '/' in e(k/m)");
      long long m = integer();
      if (!eat(')')) fail("expected ')'");
      if (m <= 0) fail("denominator must be positive");
      return CyclotomicNumber(RootOfUnity(neg ? -k : k, m));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long long num = integer();
      // A following "/digits" makes a rational literal.
      std::size_t save = pos_;
      if (eat('/')) {
        skip_ws();
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
          long long den = integer();
          if (den == 0) fail("zero denominator");
          Rational q(BigInt(std::to_string(num)), BigInt(std::to_string(den)));
          q.canonicalize();
          return CyclotomicNumber(q);
        }
        pos_ = save;
      }
      return CyclotomicNumber(Rational(BigInt(std::to_string(num))));
    }
    fail("unexpected character");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

CyclotomicNumber parse_cyclotomic(std::string_view text) { return CycParser(text).parse(); }

}  // namespace delpezzo::cyclo
