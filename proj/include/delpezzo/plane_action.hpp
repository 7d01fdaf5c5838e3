#pragma once

// Finite monomial group actions on P^2 and the singularities of their quotients.
//
// A MonomialMatrix has a single nonzero entry per column: column j carries
// scalars[j] in row perm[j], so the image of (x0, x1, x2) has coordinate
// perm[j] equal to scalars[j] * x_j. Group elements are taken modulo global
// scalars and stored normalized so that scalars[0] = 1.

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "delpezzo/cyclotomic.hpp"
#include "delpezzo/lattice.hpp"

namespace delpezzo::plane {

using cyclo::CyclotomicNumber;
using cyclo::Rational;
using cyclo::RootOfUnity;
using lattice::DynkinType;
using lattice::SingularityConfig;

struct MonomialMatrix {
  std::array<int, 3> perm{0, 1, 2};
  std::array<RootOfUnity, 3> scalars{};

  static MonomialMatrix diagonal(RootOfUnity a, RootOfUnity b, RootOfUnity c);

  /// Matrix product: (A * B) x = A (B x).
  MonomialMatrix operator*(const MonomialMatrix& o) const;
  MonomialMatrix inverse() const;
  /// Representative with scalars[0] = 1.
  MonomialMatrix normalized() const;
  bool is_projective_identity() const;
  /// Order in PGL(3).
  long long projective_order() const;
  /// lcm of the scalar orders.
  long long scalar_lcm() const;
  /// Substitution form, e.g. "[x0, e(1/4)*x2, e(1/4)*x1]".
  std::string to_string() const;

  friend bool operator==(const MonomialMatrix&, const MonomialMatrix&) = default;
  friend auto operator<=>(const MonomialMatrix&, const MonomialMatrix&) = default;
};

/// Point of P^2 with the first nonzero coordinate scaled to 1.
class ProjectivePoint {
 public:
  /// Throws PreconditionError when all coordinates vanish.
  explicit ProjectivePoint(std::array<CyclotomicNumber, 3> coords);
  ProjectivePoint(long a, long b, long c);

  const std::array<CyclotomicNumber, 3>& coords() const { return coords_; }
  const CyclotomicNumber& operator[](std::size_t i) const { return coords_[i]; }
  /// Same point with every coordinate expressed over Q(zeta_n).
  ProjectivePoint lifted(int n) const;
  std::string to_string() const;
  std::vector<std::string> coordinate_strings() const;

  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) { return a.coords_ == b.coords_; }

 private:
  std::array<CyclotomicNumber, 3> coords_;
};

/// Lexicographic coordinate order; consistent for points of one conductor.
bool point_less(const ProjectivePoint& a, const ProjectivePoint& b);

/// The line {x : normal . x = 0}.
struct Line {
  ProjectivePoint normal;
  bool contains(const ProjectivePoint& p) const;
  friend bool operator==(const Line&, const Line&) = default;
};

ProjectivePoint cross(const ProjectivePoint& a, const ProjectivePoint& b);
ProjectivePoint apply(const MonomialMatrix& g, const ProjectivePoint& p);
Line apply(const MonomialMatrix& g, const Line& l);

struct EigenPair {
  RootOfUnity value;
  ProjectivePoint vector;
};

/// Cycle-wise eigen decomposition: a perm cycle of length c whose scalars
/// multiply to rho contributes the c-th roots of rho. Coordinates are
/// expressed over Q(zeta_conductor); conductor 0 picks the smallest field.
std::array<EigenPair, 3> eigen_data(const MonomialMatrix& m, int conductor = 0);

struct FixedLocus {
  std::vector<ProjectivePoint> points;  // isolated fixed points
  std::optional<Line> line;             // pointwise-fixed line, if any
};

/// Throws PreconditionError for the projective identity.
FixedLocus fixed_locus(const MonomialMatrix& g, int conductor = 0);

/// Eigenvalues of g on the tangent plane at the fixed point p. Throws
/// PreconditionError when g does not fix p.
std::array<RootOfUnity, 2> tangent_eigenvalues(const MonomialMatrix& g, const ProjectivePoint& p);

/// Cyclic quotient type 1/r(a, b).
struct CyclicType {
  long long r = 1, a = 0, b = 0;
  friend bool operator==(const CyclicType&, const CyclicType&) = default;
};

/// Divides out the pseudo-reflections of a cyclic action: while
/// g = gcd(r, a) > 1 replace (r, a, b) by (r/g, a/g, b), symmetrically for b,
/// then reduce a and b modulo r. Requires gcd(r, a, b) = 1.
CyclicType hj_normalize(long long r, long long a, long long b);

class FiniteActionGroup {
 public:
  const std::vector<MonomialMatrix>& generators() const { return generators_; }
  /// Normalized elements in ascending order; the identity comes first.
  const std::vector<MonomialMatrix>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  /// Field Q(zeta_N) holding every eigenvector and fixed point.
  int conductor() const { return conductor_; }

  bool contains(const MonomialMatrix& g) const;
  std::vector<MonomialMatrix> stabilizer(const ProjectivePoint& p) const;
  /// Distinct images of p, ascending.
  std::vector<ProjectivePoint> orbit(const ProjectivePoint& p) const;
  /// Subgroup generated by the pseudo-reflections (elements fixing a line).
  FiniteActionGroup reflection_subgroup() const;

  friend FiniteActionGroup close_group(const std::vector<MonomialMatrix>& gens, std::size_t cap);

 private:
  std::vector<MonomialMatrix> generators_;
  std::vector<MonomialMatrix> elements_;
  int conductor_ = 1;
};

inline constexpr std::size_t kDefaultGroupCap = 720;

/// Closure of the generators in PGL(3). Throws CapExceeded past `cap` elements.
FiniteActionGroup close_group(const std::vector<MonomialMatrix>& gens, std::size_t cap = kDefaultGroupCap);

struct StabilizerClass {
  enum class Kind { Smooth, ADE, NonGorensteinCyclic, Unsupported };
  Kind kind = Kind::Smooth;
  std::optional<DynkinType> type;  // set for ADE
  CyclicType cyclic;               // reduced type for cyclic stabilizers
  std::string detail;              // reason for Unsupported

  /// "smooth", "A2", "1/5(1,2)" or "unsupported".
  std::string label() const;
};

/// Requires a nontrivial stabilizer. Cyclic stabilizers go through
/// hj_normalize; non-cyclic ones whose tangent action lies in SL(2) are
/// matched by order and abelianization to D or E types.
StabilizerClass classify_stabilizer(const FiniteActionGroup& g, const ProjectivePoint& p);

struct OrbitInfo {
  ProjectivePoint representative;
  std::size_t size;
  std::size_t stabilizer_order;
  StabilizerClass classification;
};

struct BranchLine {
  Line line;               // canonical member of the orbit
  long long e;             // order of the pointwise stabilizer
  std::size_t orbit_size;
  std::size_t special_points;  // candidate points lying on the line
};

struct QuotientProfile {
  std::size_t group_order = 1;
  Rational k2;
  SingularityConfig config;  // du Val points of the quotient
  std::vector<CyclicType> non_gorenstein;
  std::vector<OrbitInfo> orbits;  // all orbits of candidate points, ascending
  std::vector<BranchLine> branch_lines;

  bool k2_is_integer() const { return k2.get_den() == 1; }
};

/// Isolated fixed points of non-identity elements plus intersections of each
/// pointwise-fixed line with the fixed loci of the other elements; ascending.
std::vector<ProjectivePoint> candidate_points(const FiniteActionGroup& g);

/// Throws Error naming the point when a stabilizer is Unsupported.
QuotientProfile quotient_profile(const FiniteActionGroup& g);

/// Euler characteristic bookkeeping for P^2 -> P^2/G. `preimages` counts the
/// points over singular images. The unramified form 3 - preimages =
/// |G| (3 - singular) holds only when no element fixes a line and every
/// isolated fixed point lies over a singular point. The corrected form
/// subtracts the ramification over the smooth locus: branch curves contribute
/// (e - 1)(2 - special points on the line) per line, and smooth special orbits
/// contribute |G| - orbit size.
struct EulerBalance {
  long long preimages = 0;
  long long singular_points = 0;
  long long group_order = 1;
  long long ramification = 0;

  long long lhs() const { return 3 - preimages; }
  long long unramified_rhs() const { return group_order * (3 - singular_points); }
  long long corrected_rhs() const { return unramified_rhs() - ramification; }
  bool unramified_holds() const { return lhs() == unramified_rhs(); }
  bool corrected_holds() const { return lhs() == corrected_rhs(); }
};

EulerBalance euler_balance(const QuotientProfile& p);

struct NamedAction {
  std::string name;
  std::string description;
  std::vector<MonomialMatrix> generators;
};

/// z2_cone, z6, z3, z3xz3, z4, quaternion8.
const std::vector<NamedAction>& builtin_actions();
/// Throws PreconditionError for an unknown name.
const NamedAction& builtin_action(std::string_view name);

/// Parses {"name": "...", "generators": [{"perm":[p0,p1,p2], "scalars":["k/m",...]}]}.
/// A bare generator object or an array of them is accepted too.
NamedAction parse_action(std::string_view json_text);

}  // namespace delpezzo::plane
