#include "delpezzo/plane_action.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <set>

#include "delpezzo/error.hpp"

namespace delpezzo::plane {

namespace {

const RootOfUnity kOne{0, 1};

// Cycles of a permutation of {0,1,2}, each listed from its smallest index.
std::vector<std::vector<int>> cycles(const std::array<int, 3>& perm) {
  std::vector<std::vector<int>> out;
  std::array<bool, 3> seen{};
  for (int j = 0; j < 3; ++j) {
    if (seen[j]) continue;
    std::vector<int> c;
    for (int k = j; !seen[k]; k = perm[k]) {
      seen[k] = true;
      c.push_back(k);
    }
    out.push_back(std::move(c));
  }
  return out;
}

RootOfUnity cycle_product(const MonomialMatrix& m, const std::vector<int>& cycle) {
  RootOfUnity rho = kOne;
  for (int j : cycle) rho = rho * m.scalars[j];
  return rho;
}

// Smallest conductor holding the eigen data of m.
long long eigen_conductor(const MonomialMatrix& m) {
  long long n = m.scalar_lcm();
  for (const auto& c : cycles(m.perm)) {
    n = std::lcm(n, static_cast<long long>(c.size()) * cycle_product(m, c).order());
  }
  return n;
}

int point_conductor(const ProjectivePoint& p) {
  int n = 1;
  for (const auto& c : p.coords()) n = std::lcm(n, c.conductor());
  return n;
}

}  // namespace

// ----------------------------------------------------------- MonomialMatrix

MonomialMatrix MonomialMatrix::diagonal(RootOfUnity a, RootOfUnity b, RootOfUnity c) {
  MonomialMatrix m;
  m.scalars = {a, b, c};
  return m;
}

MonomialMatrix MonomialMatrix::operator*(const MonomialMatrix& o) const {
  MonomialMatrix r;
  for (int j = 0; j < 3; ++j) {
    r.perm[j] = perm[o.perm[j]];
    r.scalars[j] = scalars[o.perm[j]] * o.scalars[j];
  }
  return r;
}

MonomialMatrix MonomialMatrix::inverse() const {
  MonomialMatrix r;
  for (int j = 0; j < 3; ++j) {
    r.perm[perm[j]] = j;
    r.scalars[perm[j]] = scalars[j].inverse();
  }
  return r;
}

MonomialMatrix MonomialMatrix::normalized() const {
  MonomialMatrix r = *this;
  RootOfUnity s = scalars[0].inverse();
  for (auto& x : r.scalars) x = x * s;
  return r;
}

bool MonomialMatrix::is_projective_identity() const {
  return perm == std::array<int, 3>{0, 1, 2} && scalars[0] == scalars[1] && scalars[1] == scalars[2];
}

long long MonomialMatrix::projective_order() const {
  MonomialMatrix g = normalized();
  MonomialMatrix x = g;
  long long k = 1;
  while (!x.is_projective_identity()) {
    x = (x * g).normalized();
    ++k;
  }
  return k;
}

long long MonomialMatrix::scalar_lcm() const {
  long long n = 1;
  for (const auto& s : scalars) n = std::lcm(n, s.order());
  return n;
}

std::string MonomialMatrix::to_string() const {
  std::array<std::string, 3> image;
  for (int j = 0; j < 3; ++j) {
    std::string var = "x" + std::to_string(j);
    const RootOfUnity& s = scalars[j];
    if (s.is_one()) image[perm[j]] = var;
    else if (s.order() == 2) image[perm[j]] = "-" + var;
    else image[perm[j]] = "e(" + s.to_string() + ")*" + var;
  }
  return "[" + image[0] + ", " + image[1] + ", " + image[2] + "]";
}

// ---------------------------------------------------------- points and lines

ProjectivePoint::ProjectivePoint(std::array<CyclotomicNumber, 3> coords) : coords_(std::move(coords)) {
  std::size_t lead = 0;
  while (lead < 3 && coords_[lead].is_zero()) ++lead;
  if (lead == 3) throw PreconditionError("projective point with all coordinates zero");
  if (!coords_[lead].is_one()) {
    CyclotomicNumber inv = coords_[lead].inverse();
    for (auto& c : coords_) c *= inv;
  }
}

ProjectivePoint::ProjectivePoint(long a, long b, long c)
    : ProjectivePoint(std::array<CyclotomicNumber, 3>{CyclotomicNumber(a), CyclotomicNumber(b), CyclotomicNumber(c)}) {}

ProjectivePoint ProjectivePoint::lifted(int n) const {
  return ProjectivePoint({coords_[0].lifted(n), coords_[1].lifted(n), coords_[2].lifted(n)});
}

std::vector<std::string> ProjectivePoint::coordinate_strings() const {
  return {coords_[0].to_string(), coords_[1].to_string(), coords_[2].to_string()};
}

std::string ProjectivePoint::to_string() const {
  auto s = coordinate_strings();
  return "[" + s[0] + ", " + s[1] + ", " + s[2] + "]";
}

bool point_less(const ProjectivePoint& a, const ProjectivePoint& b) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (cyclo::coordinate_less(a[i], b[i])) return true;
    if (cyclo::coordinate_less(b[i], a[i])) return false;
  }
  return false;
}

bool Line::contains(const ProjectivePoint& p) const {
  return (normal[0] * p[0] + normal[1] * p[1] + normal[2] * p[2]).is_zero();
}

ProjectivePoint cross(const ProjectivePoint& a, const ProjectivePoint& b) {
  return ProjectivePoint({a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]});
}

ProjectivePoint apply(const MonomialMatrix& g, const ProjectivePoint& p) {
  std::array<CyclotomicNumber, 3> out;
  for (int j = 0; j < 3; ++j) out[g.perm[j]] = CyclotomicNumber(g.scalars[j]) * p[j];
  return ProjectivePoint(out);
}

Line apply(const MonomialMatrix& g, const Line& l) {
  // The image line has normal n * g^-1.
  MonomialMatrix inv = g.inverse();
  std::array<CyclotomicNumber, 3> normal;
  for (int k = 0; k < 3; ++k) normal[k] = l.normal[inv.perm[k]] * CyclotomicNumber(inv.scalars[k]);
  return Line{ProjectivePoint(normal)};
}

// ----------------------------------------------------------------- eigen data

std::array<EigenPair, 3> eigen_data(const MonomialMatrix& m, int conductor) {
  const long long need = eigen_conductor(m);
  int n = conductor == 0 ? static_cast<int>(need) : conductor;
  if (n % need != 0) {
    throw PreconditionError("conductor " + std::to_string(n) + " cannot hold eigen data of " + m.to_string());
  }
  std::vector<EigenPair> pairs;
  for (const auto& cyc : cycles(m.perm)) {
    const long long c = static_cast<long long>(cyc.size());
    const RootOfUnity rho = cycle_product(m, cyc);
    for (long long t = 0; t < c; ++t) {
      RootOfUnity lambda(rho.numerator() + t * rho.order(), c * rho.order());
      std::array<CyclotomicNumber, 3> v{CyclotomicNumber(0L), CyclotomicNumber(0L), CyclotomicNumber(0L)};
      RootOfUnity coord = kOne;
      for (int j : cyc) {
        v[j] = CyclotomicNumber::embed(coord, n);
        coord = coord * m.scalars[j] * lambda.inverse();
      }
      pairs.push_back({lambda, ProjectivePoint(v)});
    }
  }
  return {pairs[0], pairs[1], pairs[2]};
}

FixedLocus fixed_locus(const MonomialMatrix& g, int conductor) {
  if (g.is_projective_identity()) throw PreconditionError("fixed locus of the identity is all of P^2");
  auto eig = eigen_data(g, conductor);
  FixedLocus locus;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (eig[i].value == eig[j].value) {
        locus.line = Line{cross(eig[i].vector, eig[j].vector)};
        locus.points.push_back(eig[3 - i - j].vector);
        return locus;
      }
    }
  }
  for (const auto& e : eig) locus.points.push_back(e.vector);
  std::sort(locus.points.begin(), locus.points.end(), point_less);
  return locus;
}

std::array<RootOfUnity, 2> tangent_eigenvalues(const MonomialMatrix& g, const ProjectivePoint& p) {
  std::array<CyclotomicNumber, 3> image;
  for (int j = 0; j < 3; ++j) image[g.perm[j]] = CyclotomicNumber(g.scalars[j]) * p[j];
  std::size_t k = 0;
  while (p[k].is_zero()) ++k;
  CyclotomicNumber lambda = image[k] / p[k];
  for (std::size_t i = 0; i < 3; ++i) {
    if (!(image[i] == lambda * p[i])) {
      throw PreconditionError("point " + p.to_string() + " is not fixed by " + g.to_string());
    }
  }
  auto root = lambda.as_root_of_unity();
  if (!root) throw Error("eigenvalue at " + p.to_string() + " is not a root of unity");
  std::vector<RootOfUnity> rest;
  bool removed = false;
  for (const auto& e : eigen_data(g)) {
    if (!removed && e.value == *root) {
      removed = true;
      continue;
    }
    rest.push_back(e.value * root->inverse());
  }
  if (!removed || rest.size() != 2) throw Error("eigenvalue bookkeeping failed at " + p.to_string());
  return {rest[0], rest[1]};
}

CyclicType hj_normalize(long long r, long long a, long long b) {
  if (r < 1) throw PreconditionError("cyclic type needs r >= 1");
  a = ((a % r) + r) % r;
  b = ((b % r) + r) % r;
  if (std::gcd(std::gcd(r, a), b) != 1) {
    throw PreconditionError("1/" + std::to_string(r) + "(" + std::to_string(a) + "," + std::to_string(b) +
                            ") is not a faithful action");
  }
  for (long long g; (g = std::gcd(r, a)) > 1;) {
    r /= g;
    a /= g;
  }
  for (long long g; (g = std::gcd(r, b)) > 1;) {
    r /= g;
    b /= g;
  }
  if (r == 1) return {1, 0, 0};
  return {r, a % r, b % r};
}

// ------------------------------------------------------------------ groups

FiniteActionGroup close_group(const std::vector<MonomialMatrix>& gens, std::size_t cap) {
  FiniteActionGroup g;
  g.generators_ = gens;
  std::set<MonomialMatrix> seen{MonomialMatrix{}};
  std::vector<MonomialMatrix> frontier{MonomialMatrix{}};
  std::vector<MonomialMatrix> normalized;
  for (const auto& x : gens) normalized.push_back(x.normalized());
  while (!frontier.empty()) {
    std::vector<MonomialMatrix> next;
    for (const auto& x : frontier) {
      for (const auto& s : normalized) {
        MonomialMatrix y = (x * s).normalized();
        if (seen.insert(y).second) {
          if (seen.size() > cap) throw CapExceeded("group closure exceeds cap " + std::to_string(cap));
          next.push_back(y);
        }
      }
    }
    frontier = std::move(next);
  }
  g.elements_.assign(seen.begin(), seen.end());
  long long n = 1;
  for (const auto& x : g.elements_) n = std::lcm(n, eigen_conductor(x));
  if (n > cyclo::conductor_cap()) {
    throw CapExceeded("group needs conductor " + std::to_string(n) + " above cap " + std::to_string(cyclo::conductor_cap()));
  }
  g.conductor_ = static_cast<int>(n);
  return g;
}

bool FiniteActionGroup::contains(const MonomialMatrix& g) const {
  return std::binary_search(elements_.begin(), elements_.end(), g.normalized());
}

namespace {

// g p is proportional to p, tested without normalizing the image.
bool fixes(const MonomialMatrix& g, const ProjectivePoint& p) {
  for (int j = 0; j < 3; ++j) {
    if (p[j].is_zero() != p[g.perm[j]].is_zero()) return false;
  }
  int lead = 0;
  while (p[lead].is_zero()) ++lead;
  int from = 0;
  while (g.perm[from] != lead) ++from;
  // p[lead] = 1, so the proportionality factor is the image's lead entry.
  const CyclotomicNumber lambda = CyclotomicNumber(g.scalars[from]) * p[from];
  for (int j = 0; j < 3; ++j) {
    if (j == from || p[j].is_zero()) continue;
    if (!(CyclotomicNumber(g.scalars[j]) * p[j] == lambda * p[g.perm[j]])) return false;
  }
  return true;
}

}  // namespace

std::vector<MonomialMatrix> FiniteActionGroup::stabilizer(const ProjectivePoint& p) const {
  std::vector<MonomialMatrix> out;
  for (const auto& g : elements_) {
    if (fixes(g, p)) out.push_back(g);
  }
  return out;
}

std::vector<ProjectivePoint> FiniteActionGroup::orbit(const ProjectivePoint& p) const {
  const int n = std::lcm(conductor_, point_conductor(p));
  std::vector<ProjectivePoint> out;
  for (const auto& g : elements_) out.push_back(apply(g, p).lifted(n));
  std::sort(out.begin(), out.end(), point_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

FiniteActionGroup FiniteActionGroup::reflection_subgroup() const {
  std::vector<MonomialMatrix> reflections;
  for (const auto& g : elements_) {
    if (g.is_projective_identity()) continue;
    if (fixed_locus(g, conductor_).line) reflections.push_back(g);
  }
  return close_group(reflections, elements_.size());
}

// ----------------------------------------------------------- classification

std::string StabilizerClass::label() const {
  switch (kind) {
    case Kind::Smooth:
      return "smooth";
    case Kind::ADE:
      return type->name();
    case Kind::NonGorensteinCyclic:
      return "1/" + std::to_string(cyclic.r) + "(" + std::to_string(cyclic.a) + "," + std::to_string(cyclic.b) + ")";
    case Kind::Unsupported:
      return "unsupported";
  }
  return "unsupported";
}

namespace {

StabilizerClass classify_cyclic(const MonomialMatrix& h, long long r, const ProjectivePoint& p) {
  auto t = tangent_eigenvalues(h, p);
  if (r % t[0].order() != 0 || r % t[1].order() != 0) {
    throw Error("tangent action at " + p.to_string() + " is not faithful");
  }
  long long a = t[0].numerator() * (r / t[0].order());
  long long b = t[1].numerator() * (r / t[1].order());
  StabilizerClass c;
  c.cyclic = hj_normalize(r, a, b);
  if (c.cyclic.r == 1) {
    c.kind = StabilizerClass::Kind::Smooth;
  } else if ((c.cyclic.a + c.cyclic.b) % c.cyclic.r == 0) {
    c.kind = StabilizerClass::Kind::ADE;
    c.type = lattice::A(static_cast<int>(c.cyclic.r - 1));
  } else {
    c.kind = StabilizerClass::Kind::NonGorensteinCyclic;
  }
  return c;
}

StabilizerClass unsupported(std::string detail) {
  StabilizerClass c;
  c.kind = StabilizerClass::Kind::Unsupported;
  c.detail = std::move(detail);
  return c;
}

}  // namespace

StabilizerClass classify_stabilizer(const FiniteActionGroup& g, const ProjectivePoint& p) {
  const auto stab = g.stabilizer(p);
  const long long order = static_cast<long long>(stab.size());
  if (order <= 1) throw PreconditionError("point " + p.to_string() + " has trivial stabilizer");
  for (const auto& h : stab) {
    if (h.projective_order() == order) return classify_cyclic(h, order, p);
  }
  for (const auto& h : stab) {
    auto t = tangent_eigenvalues(h, p);
    if (!(t[0] * t[1]).is_one()) {
      return unsupported("non-cyclic stabilizer of order " + std::to_string(order) + " not in SL(2)");
    }
  }
  // Binary polyhedral: identify by order and abelianization.
  std::vector<MonomialMatrix> commutators;
  for (const auto& x : stab) {
    for (const auto& y : stab) commutators.push_back((x * y * x.inverse() * y.inverse()).normalized());
  }
  const long long ab = order / static_cast<long long>(close_group(commutators, stab.size()).order());
  StabilizerClass c;
  c.kind = StabilizerClass::Kind::ADE;
  if (ab == 4 && order % 4 == 0 && order >= 8) c.type = lattice::D(static_cast<int>(order / 4 + 2));
  else if (order == 24 && ab == 3) c.type = lattice::E(6);
  else if (order == 48 && ab == 2) c.type = lattice::E(7);
  else if (order == 120 && ab == 1) c.type = lattice::E(8);
  else return unsupported("SL(2) stabilizer of order " + std::to_string(order) + " with abelianization of order " + std::to_string(ab));
  return c;
}

std::vector<ProjectivePoint> candidate_points(const FiniteActionGroup& g) {
  const int n = g.conductor();
  auto sort_unique = [](std::vector<ProjectivePoint>& v) {
    std::sort(v.begin(), v.end(), point_less);
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  std::vector<ProjectivePoint> pts, normals;
  for (const auto& x : g.elements()) {
    if (x.is_projective_identity()) continue;
    auto locus = fixed_locus(x, n);
    for (const auto& p : locus.points) pts.push_back(p.lifted(n));
    if (locus.line) normals.push_back(locus.line->normal.lifted(n));
  }
  // Isolated fixed points on a line are already present; what a line adds is
  // its meeting points with the other fixed lines.
  sort_unique(normals);
  for (std::size_t i = 0; i < normals.size(); ++i) {
    for (std::size_t j = i + 1; j < normals.size(); ++j) pts.push_back(cross(normals[i], normals[j]).lifted(n));
  }
  sort_unique(pts);
  return pts;
}

QuotientProfile quotient_profile(const FiniteActionGroup& g) {
  const int n = g.conductor();
  QuotientProfile prof;
  prof.group_order = g.order();
  const auto cands = candidate_points(g);

  std::vector<bool> done(cands.size(), false);
  for (std::size_t i = 0; i < cands.size(); ++i) {
    if (done[i]) continue;
    auto orb = g.orbit(cands[i]);
    for (const auto& q : orb) {
      auto it = std::lower_bound(cands.begin(), cands.end(), q, point_less);
      if (it == cands.end() || !(*it == q)) throw Error("candidate set is not closed under the group");
      done[it - cands.begin()] = true;
    }
    OrbitInfo info{orb.front(), orb.size(), g.order() / orb.size(), classify_stabilizer(g, orb.front())};
    if (info.classification.kind == StabilizerClass::Kind::Unsupported) {
      throw Error("unsupported stabilizer at " + info.representative.to_string() + ": " + info.classification.detail);
    }
    prof.orbits.push_back(std::move(info));
  }
  std::sort(prof.orbits.begin(), prof.orbits.end(),
            [](const OrbitInfo& a, const OrbitInfo& b) { return point_less(a.representative, b.representative); });
  for (const auto& o : prof.orbits) {
    if (o.classification.kind == StabilizerClass::Kind::ADE) prof.config.add(*o.classification.type);
    if (o.classification.kind == StabilizerClass::Kind::NonGorensteinCyclic) prof.non_gorenstein.push_back(o.classification.cyclic);
  }

  // Pointwise-fixed lines with the number of elements fixing each.
  std::vector<std::pair<ProjectivePoint, long long>> lines;
  for (const auto& x : g.elements()) {
    if (x.is_projective_identity()) continue;
    auto locus = fixed_locus(x, n);
    if (!locus.line) continue;
    ProjectivePoint nrm = locus.line->normal.lifted(n);
    auto it = std::find_if(lines.begin(), lines.end(), [&](const auto& l) { return l.first == nrm; });
    if (it == lines.end()) lines.push_back({nrm, 2});
    else ++it->second;
  }
  std::vector<bool> used(lines.size(), false);
  long long weighted = 3;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (used[i]) continue;
    std::vector<ProjectivePoint> orb;
    for (const auto& x : g.elements()) orb.push_back(apply(x, Line{lines[i].first}).normal.lifted(n));
    std::sort(orb.begin(), orb.end(), point_less);
    orb.erase(std::unique(orb.begin(), orb.end()), orb.end());
    for (std::size_t j = 0; j < lines.size(); ++j) {
      if (std::find(orb.begin(), orb.end(), lines[j].first) != orb.end()) used[j] = true;
    }
    Line rep{orb.front()};
    std::size_t special = static_cast<std::size_t>(std::count_if(cands.begin(), cands.end(), [&](const auto& p) { return rep.contains(p); }));
    prof.branch_lines.push_back({rep, lines[i].second, orb.size(), special});
    weighted += (lines[i].second - 1) * static_cast<long long>(orb.size());
  }
  std::sort(prof.branch_lines.begin(), prof.branch_lines.end(),
            [](const BranchLine& a, const BranchLine& b) { return point_less(a.line.normal, b.line.normal); });
  prof.k2 = Rational(cyclo::BigInt(std::to_string(weighted * weighted)), cyclo::BigInt(std::to_string(g.order())));
  prof.k2.canonicalize();
  return prof;
}

EulerBalance euler_balance(const QuotientProfile& p) {
  EulerBalance e;
  e.group_order = static_cast<long long>(p.group_order);
  for (const auto& o : p.orbits) {
    if (o.classification.kind == StabilizerClass::Kind::Smooth) {
      e.ramification += e.group_order - static_cast<long long>(o.size);
    } else {
      e.preimages += static_cast<long long>(o.size);
      ++e.singular_points;
    }
  }
  for (const auto& b : p.branch_lines) {
    e.ramification += (b.e - 1) * (2 - static_cast<long long>(b.special_points)) * static_cast<long long>(b.orbit_size);
  }
  return e;
}

// --------------------------------------------------------------- built-ins

namespace {

MonomialMatrix make(std::array<int, 3> perm, std::array<RootOfUnity, 3> scalars) {
  MonomialMatrix m;
  m.perm = perm;
  m.scalars = scalars;
  return m;
}

}  // namespace

const std::vector<NamedAction>& builtin_actions() {
  static const std::vector<NamedAction> actions = [] {
    const std::array<int, 3> id{0, 1, 2};
    const MonomialMatrix z4 = make(id, {RootOfUnity(0, 1), RootOfUnity(1, 4), RootOfUnity(3, 4)});
    return std::vector<NamedAction>{
        {"z2_cone", "[-x, -y, z]; quotient is the quadric cone",
         {make(id, {RootOfUnity(1, 2), RootOfUnity(1, 2), RootOfUnity(0, 1)})}},
        {"z6", "[x0, w x1, -x2] with w a primitive cube root of unity",
         {make(id, {RootOfUnity(0, 1), RootOfUnity(1, 3), RootOfUnity(1, 2)})}},
        {"z3", "[X, wY, w^2 Z]", {make(id, {RootOfUnity(0, 1), RootOfUnity(1, 3), RootOfUnity(2, 3)})}},
        {"z3xz3", "[X, wY, w^2 Z] and [Z, X, Y]",
         {make(id, {RootOfUnity(0, 1), RootOfUnity(1, 3), RootOfUnity(2, 3)}),
          make({1, 2, 0}, {RootOfUnity(0, 1), RootOfUnity(0, 1), RootOfUnity(0, 1)})}},
        {"z4", "[X, iY, -iZ]", {z4}},
        {"quaternion8", "[X, iY, -iZ] and [X, iZ, iY]",
         {z4, make({0, 2, 1}, {RootOfUnity(0, 1), RootOfUnity(1, 4), RootOfUnity(1, 4)})}},
    };
  }();
  return actions;
}

const NamedAction& builtin_action(std::string_view name) {
  for (const auto& a : builtin_actions()) {
    if (a.name == name) return a;
  }
  throw PreconditionError("unknown built-in action \"" + std::string(name) + "\"");
}

namespace {

using nlohmann::json;

MonomialMatrix parse_generator(const json& j, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object with perm and scalars");
  if (!j.contains("perm") || !j.contains("scalars")) throw ParseError(where + ": needs both \"perm\" and \"scalars\"");
  const json& perm = j.at("perm");
  const json& scalars = j.at("scalars");
  if (!perm.is_array() || perm.size() != 3) throw ParseError(where + ".perm: expected 3 entries");
  if (!scalars.is_array() || scalars.size() != 3) throw ParseError(where + ".scalars: expected 3 entries");
  MonomialMatrix m;
  std::array<bool, 3> hit{};
  for (std::size_t i = 0; i < 3; ++i) {
    if (!perm[i].is_number_integer()) throw ParseError(where + ".perm[" + std::to_string(i) + "]: expected an integer");
    long long v = perm[i].get<long long>();
    if (v < 0 || v > 2 || hit[v]) throw ParseError(where + ".perm: not a permutation of 0, 1, 2");
    hit[v] = true;
    m.perm[i] = static_cast<int>(v);
  }
  for (std::size_t i = 0; i < 3; ++i) {
    const std::string at = where + ".scalars[" + std::to_string(i) + "]";
    if (!scalars[i].is_string()) throw ParseError(at + ": expected a \"k/m\" string");
    const std::string text = scalars[i].get<std::string>();
    if (text == "0") throw ParseError(at + ": zero scalar makes the matrix singular");
    try {
      m.scalars[i] = RootOfUnity::parse(text);
    } catch (const Error& e) {
      throw ParseError(at + ": " + e.what());
    }
  }
  return m;
}

}  // namespace

NamedAction parse_action(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("action JSON: ") + e.what());
  }
  NamedAction action;
  const json* gens = &doc;
  if (doc.is_object() && doc.contains("generators")) {
    if (doc.contains("name")) {
      if (!doc["name"].is_string()) throw ParseError("name: expected a string");
      action.name = doc["name"].get<std::string>();
    }
    gens = &doc["generators"];
  }
  if (gens->is_object()) {
    action.generators.push_back(parse_generator(*gens, "generators[0]"));
  } else if (gens->is_array()) {
    for (std::size_t i = 0; i < gens->size(); ++i) {
      action.generators.push_back(parse_generator((*gens)[i], "generators[" + std::to_string(i) + "]"));
    }
  } else {
    throw ParseError("generators: expected an array");
  }
  return action;
}

}  // namespace delpezzo::plane
