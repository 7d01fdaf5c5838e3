#pragma once

// Weighted projective hypersurfaces, plane-curve germs, Kodaira fibre
// bookkeeping and the Noether relation for rank-one Gorenstein del Pezzo
// surfaces.

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "delpezzo/cyclotomic.hpp"
#include "delpezzo/lattice.hpp"
#include "delpezzo/polynomial.hpp"

namespace delpezzo::surfaces {

using cyclo::CyclotomicNumber;
using cyclo::Rational;
using poly::Poly;

struct WeightedPoly {
  std::vector<std::string> names;
  std::vector<int> weights;
  Poly poly;

  int nvars() const { return static_cast<int>(weights.size()); }
  /// Throws PreconditionError for an unknown name.
  int index_of(std::string_view name) const;
  /// Fixes one variable and removes it from the ring.
  WeightedPoly restrict(int var, const CyclotomicNumber& value) const;
  /// "vars X:1 Y:1 Z:2 W:3; W^2 + Z^3 + X^5*Y".
  std::string to_string() const;
  std::string body_string() const { return poly.to_string(names); }
};

/// Parses "vars X:1 Y:1 Z:2 W:3; W^2 + Z^3 + X^5*Y + a*X^4*Z". Without a vars
/// clause every identifier that is not a parameter becomes a weight-1
/// variable, in order of first appearance. Throws ParseError.
WeightedPoly parse_weighted(std::string_view text, const std::map<std::string, Rational>& params = {});

struct QuasiHomogeneity {
  bool holds = false;
  std::optional<int> degree;  // weighted degree when every term agrees
  bool euler_identity = false;
};

/// Sum of w_i x_i df/dx_i.
Poly euler_operator(const WeightedPoly& f);
QuasiHomogeneity is_quasi_homogeneous(const WeightedPoly& f);

/// W^2 + Z^3 + X^5 Y + a X^4 Z in P(1,1,2,3).
WeightedPoly za_surface(const Rational& a);

/// A point of weighted projective space: first nonzero coordinate 1, then the
/// lexicographically smallest representative under the residual roots of unity.
using WeightedPoint = std::vector<CyclotomicNumber>;
std::string point_to_string(const WeightedPoint& p);

struct ConeSingularities {
  std::vector<WeightedPoint> points;
  bool indeterminate = false;
  std::vector<std::string> residuals;  // unresolved factors when indeterminate
};

inline constexpr int kMaxConeVariables = 4;

/// Common zeros of f and its partials on the cone minus the origin, one
/// coordinate-vanishing stratum at a time. Throws PreconditionError for more
/// than four variables or a polynomial that is not quasi-homogeneous.
ConeSingularities cone_singular_points(const WeightedPoly& f);

enum class GermClass { Smooth, Node, Cusp, Other };
std::string germ_name(GermClass g);

/// 3-jet classification of the plane curve germ {f = 0} at p. Throws
/// PreconditionError unless f has two variables and f(p) = 0.
GermClass germ_classify(const Poly& f, const std::vector<CyclotomicNumber>& p);

struct KodairaFiberType {
  enum class Kind { I, II, III, IV, IStar, IVStar, IIIStar, IIStar };
  Kind kind = Kind::I;
  int n = 0;  // used by I_n and I_n*

  /// "I0", "I3", "II", "III", "IV", "I2*", "IV*", "III*", "II*".
  static KodairaFiberType parse(std::string_view text);
  std::string name() const;

  friend bool operator==(const KodairaFiberType&, const KodairaFiberType&) = default;
  friend auto operator<=>(const KodairaFiberType&, const KodairaFiberType&) = default;
};

int kodaira_euler(const KodairaFiberType& t);
bool kodaira_reducible(const KodairaFiberType& t);

using FiberConfig = std::vector<KodairaFiberType>;

/// Multisets of singular fibres containing `must_contain` whose Euler numbers
/// sum to `total_euler`. The required fibre comes first, the others follow by
/// decreasing Euler number; configurations are ordered by size, then names.
std::vector<FiberConfig> fiber_configurations(KodairaFiberType must_contain = {KodairaFiberType::Kind::IIStar, 0},
                                              int total_euler = 12, bool others_irreducible = true);

struct NoetherReport {
  int d = 0;
  int b2 = 0;             // second Betti number of the minimal resolution, 10 - d
  int expected_rank = 0;  // 9 - d
  int rank = 0;
  int chi = 0;            // 12 - d - rank
  bool pass = false;
};

/// Requires 1 <= d <= 9.
NoetherReport noether_check(int d, const lattice::SingularityConfig& config);

/// Germ of a curve at one of its points, in the affine chart where one
/// coordinate is set to 1.
struct CurveGerm {
  WeightedPoint point;
  std::string chart;       // e.g. "X=1"
  bool orbifold_chart = false;  // chart variable has weight > 1
  std::string polynomial;  // chart polynomial
  GermClass germ = GermClass::Other;
};

struct CurveAnalysis {
  WeightedPoly curve;
  std::vector<CurveGerm> singular;  // singular points of the cone, with germs
  bool indeterminate = false;
  std::vector<std::string> residuals;
  /// Value of the curve equation at each coordinate vertex of weight > 1.
  std::vector<std::pair<std::string, CyclotomicNumber>> vertex_values;

  bool avoids_orbifold_vertices() const;
  bool smooth() const { return singular.empty() && !indeterminate && avoids_orbifold_vertices(); }
};

/// Curve in a weighted projective plane (three variables).
CurveAnalysis analyze_curve(const WeightedPoly& curve);

/// Germs at the points of the chart `var`=1 where `other` also vanishes.
std::vector<CurveGerm> sample_germs(const WeightedPoly& curve, int chart_var, int zero_var);

struct ZaReport {
  Rational a;
  int degree = 0;
  ConeSingularities singular;
  std::vector<std::pair<std::string, CyclotomicNumber>> ambient_values;  // f at the orbifold vertices
  CurveAnalysis boundary;  // {X = 0}
  CurveAnalysis y_curve;   // {Y = 0}
  std::vector<CurveGerm> y_samples;  // chart X=1, points with W=0
  std::string e8_chart;    // f in the chart Y=1
  std::string e8_note;
};

ZaReport za_verify(const Rational& a);

}  // namespace delpezzo::surfaces
