#include "delpezzo/json_io.hpp"

#include <limits>

#include "delpezzo/error.hpp"

namespace delpezzo::json_io {

Json bigint(const fpgroups::BigInt& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Json rational(const cyclo::Rational& q) {
  if (q.get_den() == 1) return bigint(q.get_num());
  return q.get_str();
}

Json config(const lattice::SingularityConfig& c) { return c.names(); }

namespace {

Json point(const plane::ProjectivePoint& p) { return p.coordinate_strings(); }

Json weighted_point(const surfaces::WeightedPoint& p) {
  Json out = Json::array();
  for (const auto& x : p) out.push_back(x.to_string());
  return out;
}

Json points(const std::vector<classifier::BottomPoint>& pts) {
  Json out = Json::array();
  for (const auto& p : pts) {
    Json parts = Json::array();
    for (const auto& part : p.parts) parts.push_back({{"n", part.n}, {"m", part.m}});
    out.push_back({{"type", p.type.name()}, {"parts", parts}});
  }
  return out;
}

Json values(const std::vector<std::pair<std::string, cyclo::CyclotomicNumber>>& v) {
  Json out = Json::object();
  for (const auto& [k, x] : v) out[k] = x.to_string();
  return out;
}

}  // namespace

Json quotient_profile(const plane::QuotientProfile& p, const plane::EulerBalance& euler) {
  Json orbits = Json::array();
  for (const auto& o : p.orbits) {
    orbits.push_back({{"representative", point(o.representative)},
                      {"size", o.size},
                      {"stabilizer_order", o.stabilizer_order},
                      {"type", o.classification.label()}});
  }
  Json lines = Json::array();
  for (const auto& b : p.branch_lines) {
    lines.push_back({{"normal", point(b.line.normal)},
                     {"e", b.e},
                     {"orbit_size", b.orbit_size},
                     {"special_points", b.special_points}});
  }
  Json non_gor = Json::array();
  for (const auto& c : p.non_gorenstein) {
    non_gor.push_back("1/" + std::to_string(c.r) + "(" + std::to_string(c.a) + "," + std::to_string(c.b) + ")");
  }
  return {{"group_order", p.group_order},
          {"k2", rational(p.k2)},
          {"config", config(p.config)},
          {"non_gorenstein", non_gor},
          {"orbits", orbits},
          {"branch_lines", lines},
          {"euler",
           {{"preimages", euler.preimages},
            {"singular_points", euler.singular_points},
            {"ramification", euler.ramification},
            {"unramified_holds", euler.unramified_holds()},
            {"corrected_holds", euler.corrected_holds()}}}};
}

Json enumeration(const classifier::SurfaceProfile& top, const classifier::Enumeration& e) {
  Json survivors = Json::array();
  for (const auto& s : e.survivors) {
    cyclo::Rational k2(top.d, s.degree);
    k2.canonicalize();
    survivors.push_back(
        {{"n", s.degree}, {"k2", rational(k2)}, {"config", s.config.to_string()}, {"points", points(s.points)}});
  }
  Json exclusions = Json::array();
  for (const auto& x : e.exclusions) {
    Json row = {{"n", x.degree}, {"config", x.config}, {"reason", classifier::reason_name(x.reason)}, {"detail", x.detail}};
    row["paper_case"] = x.case_label.empty() ? Json(nullptr) : Json(x.case_label);
    exclusions.push_back(row);
  }
  return {{"top", top.name},
          {"degree", top.d},
          {"top_config", top.config.to_string()},
          {"survivors", survivors},
          {"exclusions", exclusions}};
}

Json lemma1(const classifier::Lemma1Table& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows) {
    classifier::ConsistencyReport c = classifier::consistency(r);
    rows.push_back({{"name", r.name},
                    {"d", r.d},
                    {"config", r.config.to_string()},
                    {"rank", c.rank},
                    {"chi", c.chi},
                    {"consistent", c.pass},
                    {"failures", c.failures}});
  }
  return {{"rows", rows}, {"impossible_degrees", t.impossible_degrees}, {"note", t.note}};
}

Json ramification(const classifier::RamificationReport& r) {
  Json feasible = Json::array();
  for (const auto& set : r.feasible) {
    Json s = Json::array();
    for (const auto& b : set) s.push_back({{"e", b.e}, {"delta", b.delta}});
    feasible.push_back(s);
  }
  return {{"d", r.d}, {"e_bound", r.e_bound}, {"feasible", feasible}, {"conclusion", r.conclusion}};
}

Json theorem1(const classifier::Theorem1Report& r) {
  Json tops = Json::array();
  for (const auto& t : r.tops) tops.push_back({{"top", t.top}, {"n", t.degree}, {"outcome", t.outcome}});
  Json actions = Json::array();
  for (const auto& a : r.actions) {
    actions.push_back({{"action", a.action},
                       {"top", a.top},
                       {"group_order", a.group_order},
                       {"n", a.degree},
                       {"k2", rational(a.k2)},
                       {"config", a.config.to_string()},
                       {"matched", a.matched},
                       {"detail", a.detail}});
  }
  Json statuses = Json::array();
  for (const auto& s : r.statuses) {
    statuses.push_back({{"surface", s.surface}, {"status", s.status}, {"actions", s.actions}, {"basis", s.basis}});
  }
  return {{"candidates", r.candidates},
          {"tops", tops},
          {"actions", actions},
          {"statuses", statuses},
          {"ramification", ramification(r.ramification)},
          {"assumptions", r.assumptions}};
}

Json abelianization(const fpgroups::Abelianization& a) {
  Json torsion = Json::array();
  for (const auto& t : a.torsion) torsion.push_back(bigint(t));
  Json out = {{"torsion", torsion}, {"free_rank", a.free_rank}, {"cyclic", a.is_cyclic()}, {"text", a.to_string()}};
  out["order"] = a.free_rank ? Json(nullptr) : bigint(a.order());
  return out;
}

Json curve_config(const lattice::CurveConfig& c) {
  Json out = {{"labels", c.labels}, {"matrix", c.matrix}};
  if (!c.multiplicities.empty()) out["multiplicities"] = c.multiplicities;
  return out;
}

lattice::CurveConfig parse_curve_config(const Json& j) {
  lattice::CurveConfig c;
  try {
    if (!j.is_object()) throw ParseError("curve configuration must be a JSON object");
    c.labels = j.at("labels").get<std::vector<std::string>>();
    c.matrix = j.at("matrix").get<lattice::IntMatrix>();
    if (j.contains("multiplicities")) c.multiplicities = j.at("multiplicities").get<std::vector<int>>();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("curve configuration: ") + e.what());
  }
  try {
    c.validate();
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
  return c;
}

Json cone_singularities(const surfaces::ConeSingularities& s) {
  Json pts = Json::array();
  for (const auto& p : s.points) pts.push_back(weighted_point(p));
  return {{"points", pts}, {"indeterminate", s.indeterminate}, {"residuals", s.residuals}};
}

Json curve_germ(const surfaces::CurveGerm& g) {
  return {{"point", weighted_point(g.point)},
          {"chart", g.chart},
          {"orbifold_chart", g.orbifold_chart},
          {"polynomial", g.polynomial},
          {"germ", surfaces::germ_name(g.germ)}};
}

Json curve_analysis(const surfaces::CurveAnalysis& c) {
  Json singular = Json::array();
  for (const auto& g : c.singular) singular.push_back(curve_germ(g));
  return {{"curve", c.curve.to_string()},
          {"singular", singular},
          {"indeterminate", c.indeterminate},
          {"residuals", c.residuals},
          {"vertex_values", values(c.vertex_values)},
          {"smooth", c.smooth()}};
}

Json za_report(const surfaces::ZaReport& r) {
  Json samples = Json::array();
  for (const auto& g : r.y_samples) samples.push_back(curve_germ(g));
  return {{"a", rational(r.a)},
          {"degree", r.degree},
          {"singular", cone_singularities(r.singular)},
          {"ambient_values", values(r.ambient_values)},
          {"boundary", curve_analysis(r.boundary)},
          {"y_curve", curve_analysis(r.y_curve)},
          {"y_samples", samples},
          {"e8_chart", r.e8_chart},
          {"e8_note", r.e8_note}};
}

}  // namespace delpezzo::json_io
