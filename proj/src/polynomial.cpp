#include "delpezzo/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "delpezzo/error.hpp"

namespace delpezzo::poly {

using cyclo::BigInt;
using cyclo::RootOfUnity;

// ---------------------------------------------------------------- Poly

Poly Poly::constant(int nvars, const CyclotomicNumber& c) {
  Poly p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

Poly Poly::variable(int nvars, int i) {
  if (i < 0 || i >= nvars) throw PreconditionError("variable index out of range");
  Monomial m(nvars, 0);
  m[i] = 1;
  return monomial(nvars, std::move(m), CyclotomicNumber(1L));
}

Poly Poly::monomial(int nvars, Monomial exps, const CyclotomicNumber& c) {
  if (static_cast<int>(exps.size()) != nvars) throw PreconditionError("monomial arity mismatch");
  for (int e : exps) {
    if (e < 0) throw PreconditionError("negative exponent");
  }
  Poly p(nvars);
  p.add_term(exps, c);
  return p;
}

void Poly::add_term(const Monomial& m, const CyclotomicNumber& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const Monomial& m = terms_.begin()->first;
  return std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
}

CyclotomicNumber Poly::constant_term() const {
  auto it = terms_.find(Monomial(nvars_, 0));
  return it == terms_.end() ? CyclotomicNumber() : it->second;
}

int Poly::degree(int var) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
  return d;
}

int Poly::total_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, std::accumulate(m.begin(), m.end(), 0));
  return d;
}

Poly Poly::operator-() const {
  Poly r(nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (nvars_ != o.nvars_) throw PreconditionError("polynomial arity mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (nvars_ != o.nvars_) throw PreconditionError("polynomial arity mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.nvars_ != b.nvars_) throw PreconditionError("polynomial arity mismatch");
  Poly r(a.nvars_);
  Monomial m(a.nvars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (int i = 0; i < a.nvars_; ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly Poly::scaled(const CyclotomicNumber& c) const {
  Poly r(nvars_);
  if (c.is_zero()) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
  return r;
}

Poly Poly::pow(int e) const {
  if (e < 0) throw PreconditionError("negative polynomial power");
  Poly result = constant(nvars_, CyclotomicNumber(1L));
  Poly base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

Poly Poly::derivative(int var) const {
  Poly r(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial d = m;
    --d[var];
    r.add_term(d, c * CyclotomicNumber(static_cast<long>(m[var])));
  }
  return r;
}

Poly Poly::substitute(int var, const CyclotomicNumber& v) const {
  Poly r(nvars_);
  for (const auto& [m, c] : terms_) {
    Monomial d = m;
    d[var] = 0;
    r.add_term(d, m[var] == 0 ? c : c * v.pow(m[var]));
  }
  return r;
}

Poly Poly::compose(const std::vector<Poly>& images) const {
  if (static_cast<int>(images.size()) != nvars_) throw PreconditionError("compose needs one image per variable");
  const int n = images.empty() ? 0 : images.front().nvars();
  // Powers are cached per variable since terms share them heavily.
  std::vector<std::vector<Poly>> powers(nvars_);
  auto power = [&](int i, int e) -> const Poly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(constant(n, CyclotomicNumber(1L)));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  Poly r(n);
  for (const auto& [m, c] : terms_) {
    Poly t = constant(n, c);
    for (int i = 0; i < nvars_; ++i) {
      if (m[i] > 0) t *= power(i, m[i]);
    }
    r += t;
  }
  return r;
}

CyclotomicNumber Poly::evaluate(const std::vector<CyclotomicNumber>& x) const {
  if (static_cast<int>(x.size()) != nvars_) throw PreconditionError("evaluation point has wrong arity");
  CyclotomicNumber sum;
  for (const auto& [m, c] : terms_) {
    CyclotomicNumber t = c;
    for (int i = 0; i < nvars_ && !t.is_zero(); ++i) {
      if (m[i] > 0) t *= x[i].pow(m[i]);
    }
    sum += t;
  }
  return sum;
}

std::vector<Poly> Poly::coefficients(int var) const {
  std::vector<Poly> out(degree(var) + 1, Poly(nvars_));
  for (const auto& [m, c] : terms_) {
    Monomial d = m;
    d[var] = 0;
    out[m[var]].add_term(d, c);
  }
  return out;
}

Poly Poly::without_monomial_factor(const std::vector<int>& vars) const {
  if (terms_.empty()) return *this;
  Monomial low(nvars_, 0);
  for (int v : vars) {
    int e = terms_.begin()->first[v];
    for (const auto& [m, c] : terms_) e = std::min(e, m[v]);
    low[v] = e;
  }
  if (std::all_of(low.begin(), low.end(), [](int e) { return e == 0; })) return *this;
  Poly r(nvars_);
  for (const auto& [m, c] : terms_) {
    Monomial d = m;
    for (int i = 0; i < nvars_; ++i) d[i] -= low[i];
    r.terms_.emplace(d, c);
  }
  return r;
}

namespace {

std::string coefficient_text(const CyclotomicNumber& c, bool& negative) {
  negative = false;
  if (c.is_rational() && c.rational_value() < 0) {
    negative = true;
    return Rational(-c.rational_value()).get_str();
  }
  std::string s = c.to_string();
  if (s.find(' ') != std::string::npos) return "(" + s + ")";
  return s;
}

}  // namespace

std::string Poly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  // Display order: higher total degree first, ties by lex order.
  std::vector<const std::pair<const Monomial, CyclotomicNumber>*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
    int da = std::accumulate(a->first.begin(), a->first.end(), 0);
    int db = std::accumulate(b->first.begin(), b->first.end(), 0);
    if (da != db) return da > db;
    return a->first > b->first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto* entry : order) {
    const auto& [m, c] = *entry;
    bool negative = false;
    std::string coef = coefficient_text(c, negative);
    std::string mono;
    for (int i = 0; i < nvars_; ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += i < static_cast<int>(names.size()) ? names[i] : "x" + std::to_string(i);
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (mono.empty()) {
      os << coef;
    } else if (coef == "1") {
      os << mono;
    } else {
      os << coef << "*" << mono;
    }
  }
  return os.str();
}

Poly exact_quotient(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error("division by the zero polynomial");
  const int n = a.nvars();
  const auto& [lb, cb] = *b.terms().rbegin();
  const CyclotomicNumber inv = cb.inverse();
  Poly q(n);
  Poly r = a;
  while (!r.is_zero()) {
    const auto& [lr, cr] = *r.terms().rbegin();
    Monomial d(n);
    for (int i = 0; i < n; ++i) {
      d[i] = lr[i] - lb[i];
      if (d[i] < 0) throw Error("polynomial division is not exact");
    }
    Poly t = Poly::monomial(n, d, cr * inv);
    q += t;
    r -= t * b;
  }
  return q;
}

Poly resultant(const Poly& f, const Poly& g, int var) {
  const int n = f.nvars();
  if (f.is_zero() || g.is_zero()) return Poly(n);
  std::vector<Poly> a = f.coefficients(var);
  std::vector<Poly> b = g.coefficients(var);
  const int m = static_cast<int>(a.size()) - 1;
  const int k = static_cast<int>(b.size()) - 1;
  if (m == 0 && k == 0) return Poly::constant(n, CyclotomicNumber(1L));
  if (m == 0) return a[0].pow(k);
  if (k == 0) return b[0].pow(m);
  const int size = m + k;
  std::vector<std::vector<Poly>> s(size, std::vector<Poly>(size, Poly(n)));
  // Rows hold descending coefficients shifted right.
  for (int r = 0; r < k; ++r) {
    for (int j = 0; j <= m; ++j) s[r][r + j] = a[m - j];
  }
  for (int r = 0; r < m; ++r) {
    for (int j = 0; j <= k; ++j) s[k + r][r + j] = b[k - j];
  }
  bool negate = false;
  Poly prev = Poly::constant(n, CyclotomicNumber(1L));
  for (int c = 0; c < size - 1; ++c) {
    int pivot = c;
    while (pivot < size && s[pivot][c].is_zero()) ++pivot;
    if (pivot == size) return Poly(n);
    if (pivot != c) {
      std::swap(s[pivot], s[c]);
      negate = !negate;
    }
    for (int r = c + 1; r < size; ++r) {
      for (int j = c + 1; j < size; ++j) {
        s[r][j] = exact_quotient(s[c][c] * s[r][j] - s[r][c] * s[c][j], prev);
      }
      s[r][c] = Poly(n);
    }
    prev = s[c][c];
  }
  Poly det = s[size - 1][size - 1];
  return negate ? -det : det;
}

// ---------------------------------------------------------------- univariate

namespace {

void trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UPoly make_monic(UPoly p) {
  trim(p);
  if (p.empty()) return p;
  const CyclotomicNumber inv = p.back().inverse();
  for (auto& c : p) c *= inv;
  return p;
}

std::pair<UPoly, UPoly> divmod(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  if (b.empty()) throw Error("division by the zero polynomial");
  if (a.size() < b.size()) return {UPoly{}, a};
  UPoly q(a.size() - b.size() + 1);
  const CyclotomicNumber inv = b.back().inverse();
  for (std::size_t i = a.size(); i-- >= b.size();) {
    if (a[i].is_zero()) continue;
    CyclotomicNumber c = a[i] * inv;
    std::size_t shift = i - (b.size() - 1);
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
  }
  trim(a);
  trim(q);
  return {q, a};
}

UPoly mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

UPoly derivative(const UPoly& p) {
  UPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * CyclotomicNumber(static_cast<long>(i)));
  trim(d);
  return d;
}

// Divides out (x - r), which must be a factor.
UPoly deflate(const UPoly& p, const CyclotomicNumber& r) {
  UPoly q(p.size() - 1);
  CyclotomicNumber carry;
  for (std::size_t i = p.size(); i-- > 1;) {
    carry = p[i] + carry * r;
    q[i - 1] = carry;
  }
  return q;
}

int lcm_conductor(const UPoly& p) {
  long long m = 1;
  for (const auto& c : p) m = std::lcm<long long>(m, c.conductor());
  return static_cast<int>(m);
}

// Norm down to Q: product of the Galois conjugates of p.
std::vector<Rational> rational_norm(const UPoly& p) {
  const int m = lcm_conductor(p);
  UPoly acc{CyclotomicNumber(1L)};
  for (int k = 1; k <= m; ++k) {
    if (std::gcd(k, m) != 1) continue;
    UPoly conj;
    for (const auto& c : p) conj.push_back(c.lifted(m).galois(k));
    acc = mul(acc, conj);
  }
  std::vector<Rational> out;
  for (const auto& c : acc) {
    if (!c.is_rational()) throw Error("norm polynomial is not rational");
    out.push_back(c.rational_value());
  }
  return out;
}

// Primitive integer multiple.
std::vector<BigInt> to_integer(const std::vector<Rational>& p) {
  BigInt den = 1;
  for (const auto& c : p) den = lcm(den, BigInt(c.get_den()));
  std::vector<BigInt> out;
  BigInt content = 0;
  for (const auto& c : p) {
    BigInt v = BigInt(c.get_num()) * (den / c.get_den());
    out.push_back(v);
    content = gcd(content, v);
  }
  if (content != 0) {
    for (auto& v : out) v /= content;
  }
  return out;
}

// Prime factorization by trial division; nullopt when a composite cofactor
// too large to split remains.
std::optional<std::vector<std::pair<BigInt, int>>> factor(BigInt n) {
  n = abs(n);
  std::vector<std::pair<BigInt, int>> out;
  for (unsigned long p = 2; p <= 1000000 && BigInt(p) * p <= n; p += (p == 2 ? 1 : 2)) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(BigInt(p), e);
  }
  if (n > 1) {
    if (n > BigInt(1000000) * 1000000 && mpz_probab_prime_p(n.get_mpz_t(), 30) == 0) return std::nullopt;
    out.emplace_back(n, 1);
  }
  return out;
}

std::optional<std::vector<BigInt>> divisors(const BigInt& n) {
  auto f = factor(n);
  if (!f) return std::nullopt;
  std::vector<BigInt> out{1};
  for (const auto& [p, e] : *f) {
    const std::size_t base = out.size();
    BigInt pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
    if (out.size() > 20000) return std::nullopt;
  }
  return out;
}

Rational evaluate_rational(const std::vector<BigInt>& p, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + Rational(p[i]);
  return acc;
}

bool divisible_by_cyclotomic(std::vector<BigInt> p, int m) {
  const auto& phi = cyclo::cyclotomic_polynomial(m);
  const std::size_t d = phi.size() - 1;
  if (p.size() < phi.size()) return false;
  for (std::size_t i = p.size(); i-- > d;) {
    if (p[i] == 0) continue;
    BigInt c = p[i];
    for (std::size_t j = 0; j <= d; ++j) p[i - d + j] -= c * BigInt(std::to_string(phi[j]));
  }
  for (std::size_t i = 0; i < d; ++i) {
    if (p[i] != 0) return false;
  }
  return true;
}

// Rational roots and roots of unity of an integer polynomial with p(0) != 0.
std::vector<CyclotomicNumber> integer_candidates(const std::vector<BigInt>& p) {
  std::vector<CyclotomicNumber> out;
  const int deg = static_cast<int>(p.size()) - 1;
  auto num = divisors(p.front());
  auto den = divisors(p.back());
  if (num && den && num->size() * den->size() <= 200000) {
    std::set<Rational> seen;
    for (const auto& a : *num) {
      for (const auto& b : *den) {
        Rational q(a, b);
        q.canonicalize();
        for (const Rational& cand : {q, Rational(-q)}) {
          if (seen.insert(cand).second && evaluate_rational(p, cand) == 0) out.emplace_back(cand);
        }
      }
    }
  }
  for (int m = 3; m <= cyclo::conductor_cap(); ++m) {
    if (cyclo::euler_phi(m) > deg) continue;
    if (!divisible_by_cyclotomic(p, m)) continue;
    for (int k = 1; k < m; ++k) {
      if (std::gcd(k, m) == 1) out.push_back(CyclotomicNumber::zeta(m, k));
    }
  }
  return out;
}

// All k-th roots of c when c = t^k * (root of unity) with t rational.
std::optional<std::vector<CyclotomicNumber>> pure_roots(const CyclotomicNumber& c, int k) {
  if (c.is_zero()) return std::nullopt;
  const int m = c.conductor();
  for (int j = 0; j < m; ++j) {
    CyclotomicNumber u = c * CyclotomicNumber::zeta(m, (m - j) % m);
    if (!u.is_rational()) continue;
    Rational s = u.rational_value();
    const bool neg = s < 0;
    if (neg) s = -s;
    BigInt rn, rd;
    if (mpz_root(rn.get_mpz_t(), s.get_num_mpz_t(), static_cast<unsigned long>(k)) == 0) return std::nullopt;
    if (mpz_root(rd.get_mpz_t(), s.get_den_mpz_t(), static_cast<unsigned long>(k)) == 0) return std::nullopt;
    Rational t(rn, rd);
    std::vector<CyclotomicNumber> roots;
    try {
      // c = t^k e(alpha) with alpha = j/m (+1/2 when neg); roots t e((alpha + l)/k).
      for (int l = 0; l < k; ++l) {
        long long numer = 2LL * j + (neg ? m : 0) + 2LL * m * l;
        roots.push_back(CyclotomicNumber(RootOfUnity(numer, 2LL * m * k)) * CyclotomicNumber(t));
      }
    } catch (const CapExceeded&) {
      return std::nullopt;
    }
    return roots;
  }
  return std::nullopt;
}

}  // namespace

UPoly to_univariate(const Poly& p, int var) {
  UPoly out(p.degree(var) + 1);
  for (const auto& [m, c] : p.terms()) {
    for (int i = 0; i < p.nvars(); ++i) {
      if (i != var && m[i] != 0) throw PreconditionError("polynomial is not univariate");
    }
    out[m[var]] = c;
  }
  trim(out);
  return out;
}

CyclotomicNumber evaluate(const UPoly& p, const CyclotomicNumber& x) {
  CyclotomicNumber acc;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

UPoly gcd(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

std::string to_string(const UPoly& p, const std::string& var) {
  Poly q(1);
  for (std::size_t i = 0; i < p.size(); ++i) q += Poly::monomial(1, {static_cast<int>(i)}, p[i]);
  return q.to_string({var});
}

RootSearch find_roots(const UPoly& input) {
  UPoly p = make_monic(input);
  if (p.empty()) throw PreconditionError("the zero polynomial has no finite root set");
  RootSearch out;
  UPoly dp = derivative(p);
  UPoly q = dp.empty() ? p : make_monic(divmod(p, gcd(p, dp)).first);

  auto accept = [&](const CyclotomicNumber& r) {
    for (const auto& known : out.roots) {
      if (known == r) return;
    }
    if (q.size() >= 2 && evaluate(q, r).is_zero()) {
      out.roots.push_back(r);
      q = deflate(q, r);
    }
  };

  if (q.size() >= 2 && q.front().is_zero()) accept(CyclotomicNumber());
  if (q.size() >= 3) {
    std::vector<Rational> norm;
    bool have_norm = true;
    try {
      norm = rational_norm(q);
    } catch (const CapExceeded&) {
      have_norm = false;
    }
    if (have_norm) {
      auto ip = to_integer(norm);
      std::size_t zeros = 0;
      while (zeros < ip.size() && ip[zeros] == 0) ++zeros;
      ip.erase(ip.begin(), ip.begin() + static_cast<long>(zeros));
      if (ip.size() >= 2) {
        for (const auto& r : integer_candidates(ip)) accept(r);
      }
    }
  }
  if (q.size() == 2) {
    accept(-q[0] / q[1]);
  } else if (q.size() > 2) {
    const int d = static_cast<int>(q.size()) - 1;
    bool binomial = true;
    for (int i = 1; i < d; ++i) binomial = binomial && q[i].is_zero();
    if (binomial) {
      if (auto rs = pure_roots(-q[0] / q[d], d)) {
        for (const auto& r : *rs) accept(r);
      }
    } else if (d == 2) {
      CyclotomicNumber disc = q[1] * q[1] - CyclotomicNumber(4L) * q[0] * q[2];
      if (auto rs = pure_roots(disc, 2)) {
        CyclotomicNumber den = CyclotomicNumber(2L) * q[2];
        std::vector<CyclotomicNumber> cands{(-q[1] + (*rs)[0]) / den, (-q[1] + (*rs)[1]) / den};
        for (const auto& r : cands) accept(r);
      }
    }
  }
  out.residual = make_monic(q);
  return out;
}

// ---------------------------------------------------------------- solver

namespace {

std::string var_name(int v) { return "x" + std::to_string(v); }

// Drops zero equations and scalar or monomial factors; false when some
// equation has no zero with the unknowns nonzero.
bool clean(std::vector<Poly>& eqs, const std::vector<int>& unknowns) {
  std::vector<Poly> out;
  for (const auto& e : eqs) {
    if (e.is_zero()) continue;
    Poly s = e.without_monomial_factor(unknowns);
    if (s.is_constant()) return false;
    s = s.scaled(s.terms().rbegin()->second.inverse());
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(std::move(s));
  }
  eqs = std::move(out);
  return true;
}

void merge_flags(SolveResult& into, const SolveResult& from) {
  into.complete = into.complete && from.complete;
  for (const auto& r : from.residuals) {
    if (std::find(into.residuals.begin(), into.residuals.end(), r) == into.residuals.end()) into.residuals.push_back(r);
  }
}

void mark(SolveResult& r, const std::string& why) {
  r.complete = false;
  if (std::find(r.residuals.begin(), r.residuals.end(), why) == r.residuals.end()) r.residuals.push_back(why);
}

SolveResult solve_rec(std::vector<Poly> eqs, const std::vector<int>& unknowns, int nvars) {
  SolveResult out;
  if (!clean(eqs, unknowns)) return out;
  if (unknowns.empty()) {
    out.solutions.push_back(std::vector<CyclotomicNumber>(nvars));
    return out;
  }
  if (eqs.empty()) {
    mark(out, "positive-dimensional solution set");
    return out;
  }
  std::vector<int> bound;
  for (int v : unknowns) {
    bool used = std::any_of(eqs.begin(), eqs.end(), [&](const Poly& e) { return e.involves(v); });
    if (used) bound.push_back(v);
  }
  if (bound.size() < unknowns.size()) {
    SolveResult rest = solve_rec(eqs, bound, nvars);
    if (!rest.solutions.empty() || !rest.complete) mark(out, "positive-dimensional solution set");
    return out;
  }

  if (unknowns.size() == 1) {
    const int v = unknowns[0];
    UPoly g;
    for (const auto& e : eqs) g = gcd(g, to_univariate(e, v));
    RootSearch rs = find_roots(g);
    for (const auto& r : rs.roots) {
      if (r.is_zero()) continue;
      std::vector<CyclotomicNumber> s(nvars);
      s[v] = r;
      out.solutions.push_back(std::move(s));
    }
    if (!rs.complete()) mark(out, "unresolved factor " + to_string(rs.residual, var_name(v)));
    return out;
  }

  // Eliminate the unknown of smallest maximal degree.
  int v = unknowns[0];
  int best = -1;
  for (int u : unknowns) {
    int d = 0;
    for (const auto& e : eqs) d = std::max(d, e.degree(u));
    if (best < 0 || d < best) {
      best = d;
      v = u;
    }
  }
  std::vector<Poly> with_v, elim;
  for (const auto& e : eqs) (e.involves(v) ? with_v : elim).push_back(e);
  std::sort(with_v.begin(), with_v.end(), [&](const Poly& a, const Poly& b) {
    if (a.degree(v) != b.degree(v)) return a.degree(v) < b.degree(v);
    return a.terms().size() < b.terms().size();
  });
  std::size_t wanted = with_v.empty() ? 0 : with_v.size() - 1;
  std::size_t found = 0;
  for (std::size_t i = 0; i < with_v.size() && found < wanted; ++i) {
    for (std::size_t j = i + 1; j < with_v.size() && found < wanted; ++j) {
      Poly r = resultant(with_v[i], with_v[j], v);
      if (r.is_zero()) continue;
      elim.push_back(std::move(r));
      ++found;
    }
  }
  std::vector<int> rest;
  for (int u : unknowns) {
    if (u != v) rest.push_back(u);
  }
  SolveResult partial = solve_rec(elim, rest, nvars);
  merge_flags(out, partial);
  for (const auto& s : partial.solutions) {
    UPoly g;
    for (const auto& e : eqs) {
      Poly sub = e;
      for (int u : rest) sub = sub.substitute(u, s[u]);
      g = gcd(g, to_univariate(sub, v));
    }
    if (g.empty()) {
      mark(out, "positive-dimensional solution set");
      continue;
    }
    RootSearch rs = find_roots(g);
    if (!rs.complete()) mark(out, "unresolved factor " + to_string(rs.residual, var_name(v)));
    for (const auto& r : rs.roots) {
      if (r.is_zero()) continue;
      std::vector<CyclotomicNumber> full = s;
      full[v] = r;
      bool ok = std::all_of(eqs.begin(), eqs.end(), [&](const Poly& e) { return e.evaluate(full).is_zero(); });
      if (ok) out.solutions.push_back(std::move(full));
    }
  }
  return out;
}

}  // namespace

SolveResult solve_nonzero(std::vector<Poly> eqs, const std::vector<int>& unknowns) {
  if (eqs.empty()) throw PreconditionError("empty system");
  const int nvars = eqs.front().nvars();
  for (const auto& e : eqs) {
    if (e.nvars() != nvars) throw PreconditionError("equations have different arities");
    for (int i = 0; i < nvars; ++i) {
      if (e.involves(i) && std::find(unknowns.begin(), unknowns.end(), i) == unknowns.end()) {
        throw PreconditionError("equation involves a variable that is not an unknown");
      }
    }
  }
  return solve_rec(std::move(eqs), unknowns, nvars);
}

}  // namespace delpezzo::poly
