#include "delpezzo/surfaces.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "delpezzo/error.hpp"

namespace delpezzo::surfaces {

using poly::Monomial;

// ---------------------------------------------------------------- WeightedPoly

int WeightedPoly::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return static_cast<int>(i);
  }
  throw PreconditionError("unknown variable '" + std::string(name) + "'");
}

WeightedPoly WeightedPoly::restrict(int var, const CyclotomicNumber& value) const {
  if (var < 0 || var >= nvars()) throw PreconditionError("variable index out of range");
  const int n = nvars();
  std::vector<Poly> images;
  for (int i = 0; i < n; ++i) {
    if (i == var) {
      images.push_back(Poly::constant(n - 1, value));
    } else {
      images.push_back(Poly::variable(n - 1, i < var ? i : i - 1));
    }
  }
  WeightedPoly out;
  out.names = names;
  out.names.erase(out.names.begin() + var);
  out.weights = weights;
  out.weights.erase(out.weights.begin() + var);
  out.poly = poly.compose(images);
  return out;
}

std::string WeightedPoly::to_string() const {
  std::ostringstream os;
  os << "vars";
  for (int i = 0; i < nvars(); ++i) os << " " << names[i] << ":" << weights[i];
  os << "; " << body_string();
  return os.str();
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const std::map<std::string, Rational>& params, std::vector<std::string>& names,
             bool declared)
      : text_(text), params_(params), names_(names), declared_(declared) {}

  // Parses the whole body into a polynomial over the final variable list.
  // Undeclared variables may still be discovered, so terms are first built as
  // exponent maps keyed by name.
  using Sparse = std::map<std::map<std::string, int>, CyclotomicNumber>;

  Sparse parse() {
    Sparse s = expr();
    skip();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return s;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("polynomial: " + msg + " at offset " + std::to_string(pos_));
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static void add(Sparse& s, const std::map<std::string, int>& m, const CyclotomicNumber& c) {
    if (c.is_zero()) return;
    auto it = s.find(m);
    if (it == s.end()) {
      s.emplace(m, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) s.erase(it);
  }

  static Sparse mul(const Sparse& a, const Sparse& b) {
    Sparse r;
    for (const auto& [ma, ca] : a) {
      for (const auto& [mb, cb] : b) {
        auto m = ma;
        for (const auto& [v, e] : mb) m[v] += e;
        add(r, m, ca * cb);
      }
    }
    return r;
  }

  Sparse expr() {
    Sparse acc;
    bool negate = false;
    skip();
    if (eat('-')) {
      negate = true;
    } else {
      eat('+');
    }
    for (;;) {
      Sparse t = term();
      for (const auto& [m, c] : t) add(acc, m, negate ? -c : c);
      if (eat('+')) {
        negate = false;
      } else if (eat('-')) {
        negate = true;
      } else {
        return acc;
      }
    }
  }

  Sparse term() {
    Sparse acc = power();
    for (;;) {
      if (eat('*')) {
        acc = mul(acc, power());
      } else if (eat('/')) {
        Sparse d = power();
        if (d.size() != 1 || !d.begin()->first.empty()) fail("division by a non-constant");
        CyclotomicNumber inv = d.begin()->second.inverse();
        for (auto& [m, c] : acc) c *= inv;
      } else {
        return acc;
      }
    }
  }

  Sparse power() {
    Sparse base = atom();
    if (!eat('^')) return base;
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a nonnegative integer exponent");
    int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
    Sparse r;
    r.emplace(std::map<std::string, int>{}, CyclotomicNumber(1L));
    for (int i = 0; i < e; ++i) r = mul(r, base);
    return r;
  }

  Sparse atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Sparse s = expr();
      if (!eat(')')) fail("expected ')'");
      return s;
    }
    if (c == '-') {
      ++pos_;
      Sparse s = power();
      for (auto& [m, v] : s) v = -v;
      return s;
    }
    Sparse s;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      s.emplace(std::map<std::string, int>{}, CyclotomicNumber(Rational(std::string(text_.substr(start, pos_ - start)))));
      return s;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      std::string id(text_.substr(start, pos_ - start));
      if (std::find(names_.begin(), names_.end(), id) != names_.end()) {
        s.emplace(std::map<std::string, int>{{id, 1}}, CyclotomicNumber(1L));
        return s;
      }
      if (auto it = params_.find(id); it != params_.end()) {
        s.emplace(std::map<std::string, int>{}, CyclotomicNumber(it->second));
        return s;
      }
      if (declared_) {
        pos_ = start;
        fail("unknown identifier '" + id + "'");
      }
      names_.push_back(id);
      s.emplace(std::map<std::string, int>{{id, 1}}, CyclotomicNumber(1L));
      return s;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const std::map<std::string, Rational>& params_;
  std::vector<std::string>& names_;
  bool declared_;
  std::size_t pos_ = 0;
};

std::string trimmed(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

}  // namespace

WeightedPoly parse_weighted(std::string_view text, const std::map<std::string, Rational>& params) {
  WeightedPoly out;
  std::string_view body = text;
  bool declared = false;
  std::string head = trimmed(text);
  if (head.rfind("vars", 0) == 0 && (head.size() == 4 || std::isspace(static_cast<unsigned char>(head[4])))) {
    auto semi = text.find(';');
    if (semi == std::string_view::npos) throw ParseError("polynomial: vars clause must end with ';'");
    std::istringstream is(trimmed(text.substr(0, semi)).substr(4));
    std::string item;
    while (is >> item) {
      auto colon = item.find(':');
      std::string name = item.substr(0, colon);
      if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) {
        throw ParseError("polynomial: bad variable name '" + name + "'");
      }
      if (std::find(out.names.begin(), out.names.end(), name) != out.names.end()) {
        throw ParseError("polynomial: duplicate variable '" + name + "'");
      }
      int w = 1;
      if (colon != std::string::npos) {
        std::string ws = item.substr(colon + 1);
        if (ws.empty() || !std::all_of(ws.begin(), ws.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
          throw ParseError("polynomial: bad weight for '" + name + "'");
        }
        w = std::stoi(ws);
        if (w < 1) throw ParseError("polynomial: weights must be positive");
      }
      out.names.push_back(name);
      out.weights.push_back(w);
    }
    if (out.names.empty()) throw ParseError("polynomial: empty vars clause");
    body = text.substr(semi + 1);
    declared = true;
  }
  PolyParser parser(body, params, out.names, declared);
  auto sparse = parser.parse();
  if (!declared) out.weights.assign(out.names.size(), 1);
  const int n = out.nvars();
  out.poly = Poly(n);
  for (const auto& [m, c] : sparse) {
    Monomial e(n, 0);
    for (const auto& [v, k] : m) e[out.index_of(v)] = k;
    out.poly += Poly::monomial(n, e, c);
  }
  return out;
}

Poly euler_operator(const WeightedPoly& f) {
  Poly r(f.nvars());
  for (int i = 0; i < f.nvars(); ++i) {
    r += (Poly::variable(f.nvars(), i) * f.poly.derivative(i)).scaled(CyclotomicNumber(static_cast<long>(f.weights[i])));
  }
  return r;
}

QuasiHomogeneity is_quasi_homogeneous(const WeightedPoly& f) {
  QuasiHomogeneity q;
  if (f.poly.is_zero()) return q;
  for (const auto& [m, c] : f.poly.terms()) {
    int d = 0;
    for (int i = 0; i < f.nvars(); ++i) d += f.weights[i] * m[i];
    if (!q.degree) {
      q.degree = d;
    } else if (*q.degree != d) {
      q.degree.reset();
      return q;
    }
  }
  q.euler_identity = euler_operator(f) == f.poly.scaled(CyclotomicNumber(static_cast<long>(*q.degree)));
  q.holds = q.euler_identity;
  return q;
}

WeightedPoly za_surface(const Rational& a) {
  WeightedPoly f;
  f.names = {"X", "Y", "Z", "W"};
  f.weights = {1, 1, 2, 3};
  f.poly = Poly::monomial(4, {0, 0, 0, 2}, CyclotomicNumber(1L)) + Poly::monomial(4, {0, 0, 3, 0}, CyclotomicNumber(1L)) +
           Poly::monomial(4, {5, 1, 0, 0}, CyclotomicNumber(1L)) + Poly::monomial(4, {4, 0, 1, 0}, CyclotomicNumber(a));
  return f;
}

// ---------------------------------------------------------------- singular points

std::string point_to_string(const WeightedPoint& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ", ";
    s += p[i].to_string();
  }
  return s + "]";
}

namespace {

int common_conductor(const WeightedPoint& p, int extra = 1) {
  long long m = extra;
  for (const auto& c : p) m = std::lcm<long long>(m, c.conductor());
  return static_cast<int>(m);
}

bool lifted_less(const WeightedPoint& a, const WeightedPoint& b) {
  const int m = std::lcm(common_conductor(a), common_conductor(b));
  for (std::size_t i = 0; i < a.size(); ++i) {
    CyclotomicNumber x = a[i].lifted(m), y = b[i].lifted(m);
    if (coordinate_less(x, y)) return true;
    if (coordinate_less(y, x)) return false;
  }
  return false;
}

// Representative of p under x_i -> zeta^{w_i} x_i, zeta a w_lead-th root of unity.
WeightedPoint canonical(const WeightedPoint& p, const std::vector<int>& weights, int lead) {
  const int w = weights[lead];
  WeightedPoint best = p;
  for (int t = 1; t < w; ++t) {
    WeightedPoint q = p;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (!q[i].is_zero()) q[i] *= CyclotomicNumber::zeta(w, static_cast<long long>(t) * weights[i] % w);
    }
    if (lifted_less(q, best)) best = q;
  }
  return best;
}

}  // namespace

ConeSingularities cone_singular_points(const WeightedPoly& f) {
  const int n = f.nvars();
  if (n > kMaxConeVariables) {
    throw PreconditionError("cone_singular_points supports at most " + std::to_string(kMaxConeVariables) + " variables");
  }
  if (n == 0) throw PreconditionError("polynomial has no variables");
  if (!is_quasi_homogeneous(f).holds) throw PreconditionError("polynomial is not quasi-homogeneous");
  std::vector<Poly> eqs{f.poly};
  for (int i = 0; i < n; ++i) eqs.push_back(f.poly.derivative(i));

  ConeSingularities out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {  // mask = nonzero coordinates
    std::vector<int> nonzero;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) nonzero.push_back(i);
    }
    const int lead = nonzero.front();
    std::vector<Poly> sub;
    for (const auto& e : eqs) {
      Poly s = e;
      for (int i = 0; i < n; ++i) {
        if (!(mask & (1u << i))) s = s.substitute(i, CyclotomicNumber());
      }
      sub.push_back(s.substitute(lead, CyclotomicNumber(1L)));
    }
    std::vector<int> unknowns(nonzero.begin() + 1, nonzero.end());
    poly::SolveResult r = poly::solve_nonzero(sub, unknowns);
    if (!r.complete) {
      out.indeterminate = true;
      std::string stratum;
      for (int i : nonzero) stratum += (stratum.empty() ? "" : ",") + f.names[i];
      for (const auto& why : r.residuals) out.residuals.push_back(stratum + " nonzero: " + why);
    }
    for (auto& s : r.solutions) {
      s[lead] = CyclotomicNumber(1L);
      WeightedPoint c = canonical(s, f.weights, lead);
      bool dup = std::any_of(out.points.begin(), out.points.end(), [&](const WeightedPoint& q) { return q == c; });
      if (!dup) out.points.push_back(std::move(c));
    }
  }
  std::sort(out.points.begin(), out.points.end(), lifted_less);
  return out;
}

// ---------------------------------------------------------------- germs

std::string germ_name(GermClass g) {
  switch (g) {
    case GermClass::Smooth: return "Smooth";
    case GermClass::Node: return "Node";
    case GermClass::Cusp: return "Cusp";
    case GermClass::Other: return "Other";
  }
  return "Other";
}

GermClass germ_classify(const Poly& f, const std::vector<CyclotomicNumber>& p) {
  if (f.nvars() != 2 || p.size() != 2) throw PreconditionError("germ_classify needs a two-variable polynomial and point");
  if (!f.evaluate(p).is_zero()) throw PreconditionError("the point does not lie on the curve");
  const CyclotomicNumber one(1L);
  Poly g = f.compose({Poly::variable(2, 0) + Poly::constant(2, p[0]), Poly::variable(2, 1) + Poly::constant(2, p[1])});
  auto coef = [&](int i, int j) {
    auto it = g.terms().find(Monomial{i, j});
    return it == g.terms().end() ? CyclotomicNumber() : it->second;
  };
  if (!coef(1, 0).is_zero() || !coef(0, 1).is_zero()) return GermClass::Smooth;
  const CyclotomicNumber a = coef(2, 0), b = coef(1, 1), c = coef(0, 2);
  const CyclotomicNumber disc = b * b - CyclotomicNumber(4L) * a * c;
  if (!disc.is_zero()) return GermClass::Node;
  if (a.is_zero() && b.is_zero() && c.is_zero()) return GermClass::Other;
  // The quadratic part is a square; its zero direction is the Hessian kernel.
  CyclotomicNumber dx, dy;
  if (!a.is_zero()) {
    dx = -b;
    dy = CyclotomicNumber(2L) * a;
  } else {
    dx = one;
    dy = CyclotomicNumber();
  }
  CyclotomicNumber cubic;
  for (int i = 0; i <= 3; ++i) cubic += coef(i, 3 - i) * dx.pow(i) * dy.pow(3 - i);
  return cubic.is_zero() ? GermClass::Other : GermClass::Cusp;
}

// ---------------------------------------------------------------- Kodaira

KodairaFiberType KodairaFiberType::parse(std::string_view text) {
  using K = Kind;
  static const std::pair<const char*, K> fixed[] = {{"II*", K::IIStar}, {"III*", K::IIIStar}, {"IV*", K::IVStar},
                                                    {"II", K::II},      {"III", K::III},      {"IV", K::IV}};
  for (const auto& [name, kind] : fixed) {
    if (text == name) return {kind, 0};
  }
  if (text.size() >= 2 && text[0] == 'I') {
    std::string_view rest = text.substr(1);
    bool star = !rest.empty() && rest.back() == '*';
    if (star) rest.remove_suffix(1);
    if (!rest.empty() && rest.size() <= 6 &&
        std::all_of(rest.begin(), rest.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      return {star ? K::IStar : K::I, std::stoi(std::string(rest))};
    }
  }
  throw ParseError("unknown Kodaira fibre type '" + std::string(text) + "'");
}

std::string KodairaFiberType::name() const {
  switch (kind) {
    case Kind::I: return "I" + std::to_string(n);
    case Kind::II: return "II";
    case Kind::III: return "III";
    case Kind::IV: return "IV";
    case Kind::IStar: return "I" + std::to_string(n) + "*";
    case Kind::IVStar: return "IV*";
    case Kind::IIIStar: return "III*";
    case Kind::IIStar: return "II*";
  }
  return "?";
}

int kodaira_euler(const KodairaFiberType& t) {
  using K = KodairaFiberType::Kind;
  switch (t.kind) {
    case K::I: return t.n;
    case K::II: return 2;
    case K::III: return 3;
    case K::IV: return 4;
    case K::IStar: return t.n + 6;
    case K::IVStar: return 8;
    case K::IIIStar: return 9;
    case K::IIStar: return 10;
  }
  return 0;
}

bool kodaira_reducible(const KodairaFiberType& t) {
  using K = KodairaFiberType::Kind;
  if (t.kind == K::II) return false;
  if (t.kind == K::I) return t.n >= 2;
  return true;
}

std::vector<FiberConfig> fiber_configurations(KodairaFiberType must_contain, int total_euler, bool others_irreducible) {
  using K = KodairaFiberType::Kind;
  const int rest = total_euler - kodaira_euler(must_contain);
  std::vector<FiberConfig> out;
  if (rest < 0) return out;
  // Candidate singular fibres, by decreasing Euler number.
  std::vector<KodairaFiberType> pool;
  for (int n = 1; n <= rest; ++n) pool.push_back({K::I, n});
  for (K k : {K::II, K::III, K::IV, K::IVStar, K::IIIStar, K::IIStar}) pool.push_back({k, 0});
  for (int n = 0; n + 6 <= rest; ++n) pool.push_back({K::IStar, n});
  std::erase_if(pool, [&](const KodairaFiberType& t) {
    return kodaira_euler(t) > rest || (others_irreducible && kodaira_reducible(t));
  });
  std::sort(pool.begin(), pool.end(), [](const KodairaFiberType& a, const KodairaFiberType& b) {
    if (kodaira_euler(a) != kodaira_euler(b)) return kodaira_euler(a) > kodaira_euler(b);
    return a.name() < b.name();
  });
  FiberConfig current{must_contain};
  auto rec = [&](auto&& self, std::size_t from, int left) -> void {
    if (left == 0) {
      out.push_back(current);
      return;
    }
    for (std::size_t i = from; i < pool.size(); ++i) {
      if (kodaira_euler(pool[i]) > left) continue;
      current.push_back(pool[i]);
      self(self, i, left - kodaira_euler(pool[i]));
      current.pop_back();
    }
  };
  rec(rec, 0, rest);
  std::sort(out.begin(), out.end(), [](const FiberConfig& a, const FiberConfig& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].name() != b[i].name()) return a[i].name() < b[i].name();
    }
    return false;
  });
  return out;
}

NoetherReport noether_check(int d, const lattice::SingularityConfig& config) {
  if (d < 1 || d > 9) throw PreconditionError("K^2 must lie in 1..9");
  NoetherReport r;
  r.d = d;
  r.b2 = 10 - d;
  r.expected_rank = 9 - d;
  r.rank = lattice::config_rank(config);
  r.chi = 12 - d - r.rank;
  r.pass = r.rank == r.expected_rank && r.chi == 3;
  return r;
}

// ---------------------------------------------------------------- curves

bool CurveAnalysis::avoids_orbifold_vertices() const {
  return std::all_of(vertex_values.begin(), vertex_values.end(), [](const auto& v) { return !v.second.is_zero(); });
}

namespace {

CurveGerm germ_at(const WeightedPoly& curve, const WeightedPoint& p) {
  int chart = 0;
  while (p[chart].is_zero()) ++chart;
  // Prefer a weight-one chart, which is an honest affine plane.
  for (int i = 0; i < curve.nvars(); ++i) {
    if (!p[i].is_zero() && curve.weights[i] == 1) {
      chart = i;
      break;
    }
  }
  CurveGerm g;
  g.point = p;
  g.chart = curve.names[chart] + "=1";
  g.orbifold_chart = curve.weights[chart] > 1;
  // Rescale so that the chart coordinate is 1; the weights only matter for
  // the residual root-of-unity ambiguity, which 1 removes on weight-one charts.
  WeightedPoint q = p;
  if (!q[chart].is_one()) {
    if (curve.weights[chart] != 1) throw Error("chart coordinate is not normalized");
    CyclotomicNumber inv = q[chart].inverse();
    for (int i = 0; i < curve.nvars(); ++i) q[i] *= inv.pow(curve.weights[i]);
  }
  WeightedPoly local = curve.restrict(chart, CyclotomicNumber(1L));
  g.polynomial = local.body_string();
  std::vector<CyclotomicNumber> at;
  for (int i = 0; i < curve.nvars(); ++i) {
    if (i != chart) at.push_back(q[i]);
  }
  g.germ = germ_classify(local.poly, at);
  return g;
}

}  // namespace

CurveAnalysis analyze_curve(const WeightedPoly& curve) {
  if (curve.nvars() != 3) throw PreconditionError("a weighted plane curve has three variables");
  CurveAnalysis a;
  a.curve = curve;
  ConeSingularities s = cone_singular_points(curve);
  a.indeterminate = s.indeterminate;
  a.residuals = s.residuals;
  for (const auto& p : s.points) a.singular.push_back(germ_at(curve, p));
  for (int i = 0; i < 3; ++i) {
    if (curve.weights[i] == 1) continue;
    std::vector<CyclotomicNumber> v(3);
    v[i] = CyclotomicNumber(1L);
    a.vertex_values.emplace_back(curve.names[i], curve.poly.evaluate(v));
  }
  return a;
}

std::vector<CurveGerm> sample_germs(const WeightedPoly& curve, int chart_var, int zero_var) {
  if (curve.nvars() != 3 || chart_var == zero_var) throw PreconditionError("bad sample chart");
  if (curve.weights[chart_var] != 1) throw PreconditionError("sample chart variable must have weight 1");
  int free_var = 3 - chart_var - zero_var;
  Poly line = curve.poly.substitute(chart_var, CyclotomicNumber(1L)).substitute(zero_var, CyclotomicNumber());
  std::vector<CurveGerm> out;
  if (line.is_zero()) return out;
  poly::RootSearch rs = poly::find_roots(poly::to_univariate(line, free_var));
  for (const auto& r : rs.roots) {
    WeightedPoint p(3);
    p[chart_var] = CyclotomicNumber(1L);
    p[free_var] = r;
    out.push_back(germ_at(curve, p));
  }
  return out;
}

ZaReport za_verify(const Rational& a) {
  ZaReport r;
  r.a = a;
  WeightedPoly f = za_surface(a);
  r.degree = is_quasi_homogeneous(f).degree.value_or(0);
  r.singular = cone_singular_points(f);
  for (int i : {2, 3}) {
    std::vector<CyclotomicNumber> v(4);
    v[i] = CyclotomicNumber(1L);
    r.ambient_values.emplace_back(point_to_string(v), f.poly.evaluate(v));
  }
  r.boundary = analyze_curve(f.restrict(0, CyclotomicNumber()));
  r.y_curve = analyze_curve(f.restrict(1, CyclotomicNumber()));
  r.y_samples = sample_germs(r.y_curve.curve, 0, 2);
  r.e8_chart = f.restrict(1, CyclotomicNumber(1L)).body_string();
  r.e8_note =
      "E8 point [0,1,0,0]; the analytic normal forms w^2+z^3+x^5 and w^2+z^3+x^4z+x^5 are "
      "distinguished by a cited classification of local rings, not computed here";
  return r;
}

}  // namespace delpezzo::surfaces
