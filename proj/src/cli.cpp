#include "delpezzo/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "delpezzo/error.hpp"
#include "delpezzo/json_io.hpp"

namespace delpezzo::cli {

namespace {

using json_io::Json;

// Inline JSON when the text opens like JSON, otherwise a file path.
std::string read_input(const std::string& text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) return text;
  std::ifstream in(text);
  if (!in) throw ParseError("cannot read '" + text + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(read_input(text));
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

std::pair<std::string, std::string> split_param(const std::string& p) {
  auto eq = p.find('=');
  if (eq == std::string::npos || eq == 0) throw ParseError("parameter '" + p + "' is not name=value");
  return {p.substr(0, eq), p.substr(eq + 1)};
}

std::map<std::string, cyclo::Rational> rational_params(const std::vector<std::string>& raw) {
  std::map<std::string, cyclo::Rational> out;
  for (const auto& p : raw) {
    auto [name, value] = split_param(p);
    cyclo::CyclotomicNumber x = cyclo::parse_cyclotomic(value);
    if (!x.is_rational()) throw ParseError("parameter '" + name + "' must be rational");
    out[name] = x.rational_value();
  }
  return out;
}

std::map<std::string, long long> integer_params(const std::vector<std::string>& raw) {
  std::map<std::string, long long> out;
  for (const auto& p : raw) {
    auto [name, value] = split_param(p);
    try {
      std::size_t used = 0;
      out[name] = std::stoll(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::logic_error&) {
      throw ParseError("parameter '" + name + "' must be an integer");
    }
  }
  return out;
}

// "[1, 2/3]" or "1,2/3".
std::vector<cyclo::CyclotomicNumber> parse_point(std::string text) {
  std::erase_if(text, [](char c) { return c == '[' || c == ']'; });
  std::vector<cyclo::CyclotomicNumber> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(cyclo::parse_cyclotomic(item));
  if (out.empty()) throw ParseError("empty point");
  return out;
}

std::size_t coset_bound(std::optional<std::size_t> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("DELPEZZO_COSET_BOUND")) {
    std::string s(env);
    if (s.empty() || !std::all_of(s.begin(), s.end(), ::isdigit) || s.size() > 12 || std::stoull(s) == 0) {
      throw ParseError("DELPEZZO_COSET_BOUND must be a positive integer");
    }
    return static_cast<std::size_t>(std::stoull(s));
  }
  return fpgroups::kDefaultCosetBound;
}

lattice::CurveConfig load_curves(const std::string& config, const std::string& builtin) {
  if (!builtin.empty()) {
    if (builtin == "ii_star") return lattice::ii_star_fibre();
    if (builtin == "ii_star_section") return lattice::ii_star_with_section();
    try {
      return lattice::dual_graph(lattice::DynkinType::parse(builtin));
    } catch (const Error&) {
      throw ParseError("unknown curve configuration '" + builtin + "'");
    }
  }
  return json_io::parse_curve_config(parse_json(config));
}

Json recognition(const lattice::Recognition& r) {
  if (const auto* t = std::get_if<lattice::DynkinType>(&r)) return {{"ade", true}, {"type", t->name()}};
  const auto& n = std::get<lattice::NotADE>(r);
  return {{"ade", false}, {"reason", lattice::reason_name(n.reason)}, {"detail", n.detail}};
}

Json group_json(const fpgroups::Presentation& p, std::size_t bound, bool& complete) {
  fpgroups::EnumerationResult e = fpgroups::coset_enumerate(p, bound);
  complete = !e.exceeded();
  Json out = {{"presentation", p.to_string()}, {"bound", bound}, {"cosets_defined", e.cosets_defined}};
  out["order"] = complete ? Json(*e.order) : Json(nullptr);
  return out;
}

struct Options {
  bool pretty = false;
  // quotient
  std::string action, builtin;
  std::size_t cap = plane::kDefaultGroupCap;
  // classify
  std::string top;
  std::optional<int> n;
  // group, mumford
  std::string presentation;
  std::optional<std::size_t> bound;
  bool abelianization = false;
  std::optional<long> hom;
  int i = 0;
  // recognize, blowdown
  std::string config, curves_builtin;
  std::vector<std::string> curves;
  // wps, germ
  std::string poly, at;
  std::vector<std::string> params;
  bool singular = false, za = false;
  // fibers
  std::string must = "II*";
  int total = 12;
  bool any_reducible = false;
  // report
  long long e_bound = 12;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact computations for Gorenstein del Pezzo surfaces dominated by the plane", "delpezzo"};
  app.require_subcommand(1);
  app.fallthrough();  // lets --pretty follow the subcommand
  app.add_flag("--pretty", o.pretty, "Indent the JSON output");

  auto* quotient = app.add_subcommand("quotient", "Singularity profile of P2/G for a monomial group G");
  auto* qsrc = quotient->add_option_group("source");
  qsrc->add_option("--action", o.action, "Action JSON file or inline JSON");
  qsrc->add_option("--builtin", o.builtin, "Built-in action name");
  qsrc->require_option(1);
  quotient->add_option("--cap", o.cap, "Largest group order accepted")->check(CLI::PositiveNumber);

  auto* classify = app.add_subcommand("classify", "Enumerate quotients of a table surface by arithmetic filters");
  classify->add_option("--top", o.top, "P2, Q, a row name or lemma1:<row>")->required();
  classify->add_option("--n", o.n, "Restrict to one cover degree")->check(CLI::Range(2, 9));

  auto* lemma1 = app.add_subcommand("lemma1", "Table of rank-one Gorenstein del Pezzo surfaces");

  auto* group = app.add_subcommand("group", "Coset enumeration of a finitely presented group");
  group->add_option("--presentation", o.presentation, "e.g. 'gens=2; rel=(1 2)^2 * 1^-3; rel=1^3 * 2^-5'")->required();
  group->add_option("--param", o.params, "Exponent parameter name=value");
  group->add_option("--bound", o.bound, "Coset bound")->check(CLI::PositiveNumber);
  group->add_flag("--abelianization", o.abelianization, "Also report the abelianization");
  group->add_option("--hom", o.hom, "Count homomorphisms to Z/d")->check(CLI::PositiveNumber);

  auto* mumford = app.add_subcommand("mumford", "Boundary group of the E_i configuration, 4 <= i <= 8");
  mumford->add_option("--i", o.i, "Index i")->required();
  mumford->add_option("--bound", o.bound, "Coset bound")->check(CLI::PositiveNumber);

  auto* recognize = app.add_subcommand("recognize", "ADE type of a configuration of (-2)-curves");
  auto* rsrc = recognize->add_option_group("source");
  rsrc->add_option("--config", o.config, "Curve configuration JSON file or inline JSON");
  rsrc->add_option("--builtin", o.curves_builtin, "ii_star, ii_star_section or an ADE name");
  rsrc->require_option(1);

  auto* blowdown = app.add_subcommand("blowdown", "Contract (-1)-curves in order");
  auto* bsrc = blowdown->add_option_group("source");
  bsrc->add_option("--config", o.config, "Curve configuration JSON file or inline JSON");
  bsrc->add_option("--builtin", o.curves_builtin, "ii_star, ii_star_section or an ADE name");
  bsrc->require_option(1);
  blowdown->add_option("--curve", o.curves, "Label of the curve to contract; repeatable")->required();

  auto* wps = app.add_subcommand("wps", "Weighted projective hypersurface checks");
  wps->add_option("--poly", o.poly, "e.g. 'vars X:1 Y:1 Z:2 W:3; W^2 + Z^3 + X^5*Y + a*X^4*Z'");
  wps->add_option("--param", o.params, "Rational parameter name=value");
  wps->add_flag("--singular", o.singular, "Compute the singular points of the cone");
  wps->add_flag("--za", o.za, "Run the full verification of Z_a, taking a from --param");

  auto* germ = app.add_subcommand("germ", "Classify a plane curve germ");
  germ->add_option("--poly", o.poly, "Polynomial in two variables")->required();
  germ->add_option("--at", o.at, "Point, e.g. '0,0'")->required();
  germ->add_option("--param", o.params, "Rational parameter name=value");

  auto* fibers = app.add_subcommand("fibers", "Singular fibre configurations of a rational elliptic surface");
  fibers->add_option("--must", o.must, "Fibre that must occur");
  fibers->add_option("--total", o.total, "Euler number of the surface")->check(CLI::PositiveNumber);
  fibers->add_flag("--any-reducible", o.any_reducible, "Allow reducible fibres besides the required one");

  auto* report = app.add_subcommand("report", "Aggregate classification report");
  report->add_option("--e-bound", o.e_bound, "Ramification index bound")->check(CLI::Range(2, 60));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  Json body;
  int status = kOk;
  try {
    if (*quotient) {
      plane::NamedAction a = o.builtin.empty() ? plane::parse_action(read_input(o.action)) : plane::builtin_action(o.builtin);
      plane::FiniteActionGroup g = plane::close_group(a.generators, o.cap);
      plane::QuotientProfile p = plane::quotient_profile(g);
      body = json_io::quotient_profile(p, plane::euler_balance(p));
      body["name"] = a.name;
    } else if (*classify) {
      std::string key = o.top.rfind("lemma1:", 0) == 0 ? o.top.substr(7) : o.top;
      const classifier::SurfaceProfile& top = classifier::lemma1_row(key);
      classifier::Enumeration e = classifier::enumerate_quotients(top);
      if (o.n) {
        std::erase_if(e.survivors, [&](const auto& s) { return s.degree != *o.n; });
        std::erase_if(e.exclusions, [&](const auto& x) { return x.degree != *o.n; });
      }
      body = json_io::enumeration(top, e);
    } else if (*lemma1) {
      body = json_io::lemma1(classifier::lemma1_table());
    } else if (*group) {
      fpgroups::Presentation p = fpgroups::parse_presentation(o.presentation, integer_params(o.params));
      bool complete = false;
      body = group_json(p, coset_bound(o.bound), complete);
      if (o.abelianization) body["abelianization"] = json_io::abelianization(fpgroups::abelianization(p));
      if (o.hom) body["hom"] = {{"d", *o.hom}, {"count", json_io::bigint(fpgroups::hom_count_cyclic(p, *o.hom))}};
      if (!complete) status = kNegative;
    } else if (*mumford) {
      fpgroups::Presentation p = fpgroups::mumford_presentation(o.i);
      bool complete = false;
      body = group_json(p, coset_bound(o.bound), complete);
      fpgroups::Abelianization ab = fpgroups::abelianization(p);
      body["i"] = o.i;
      body["d"] = 9 - o.i;
      body["abelianization"] = json_io::abelianization(ab);
      body["hom"] = {{"d", 9 - o.i}, {"count", json_io::bigint(fpgroups::hom_count_cyclic(p, 9 - o.i))}};
      if (!complete) status = kNegative;
    } else if (*recognize) {
      lattice::CurveConfig c = load_curves(o.config, o.curves_builtin);
      body = recognition(lattice::recognize_dynkin(c));
      if (!body["ade"].get<bool>()) status = kNegative;
    } else if (*blowdown) {
      lattice::CurveConfig c = load_curves(o.config, o.curves_builtin);
      Json steps = Json::array();
      for (const auto& label : o.curves) {
        std::size_t idx;
        try {
          idx = c.index_of(label);
        } catch (const PreconditionError&) {
          throw ParseError("no curve labelled '" + label + "'");
        }
        c = lattice::blow_down(c, idx);
        steps.push_back(label);
      }
      body = {{"contracted", steps}, {"config", json_io::curve_config(c)}};
    } else if (*wps) {
      auto params = rational_params(o.params);
      if (o.za) {
        cyclo::Rational a = params.count("a") ? params.at("a") : cyclo::Rational(0);
        surfaces::ZaReport r = surfaces::za_verify(a);
        body = json_io::za_report(r);
        if (r.singular.indeterminate || r.boundary.indeterminate || r.y_curve.indeterminate) status = kNegative;
      } else {
        if (o.poly.empty()) throw ParseError("wps needs --poly or --za");
        surfaces::WeightedPoly f = surfaces::parse_weighted(o.poly, params);
        surfaces::QuasiHomogeneity qh = surfaces::is_quasi_homogeneous(f);
        body = {{"polynomial", f.to_string()},
                {"weights", f.weights},
                {"quasi_homogeneous", qh.holds},
                {"euler_identity", qh.euler_identity}};
        body["degree"] = qh.degree ? Json(*qh.degree) : Json(nullptr);
        if (o.singular) {
          if (!qh.holds) {
            body["singular"] = nullptr;
            body["error"] = "not quasi-homogeneous";
            status = kNegative;
          } else if (f.nvars() > surfaces::kMaxConeVariables) {
            throw PreconditionError("at most four variables are supported");
          } else {
            surfaces::ConeSingularities s = surfaces::cone_singular_points(f);
            body["singular"] = json_io::cone_singularities(s);
            if (s.indeterminate) status = kNegative;
          }
        }
      }
    } else if (*germ) {
      surfaces::WeightedPoly f = surfaces::parse_weighted(o.poly, rational_params(o.params));
      std::vector<cyclo::CyclotomicNumber> p = parse_point(o.at);
      Json pt = Json::array();
      for (const auto& x : p) pt.push_back(x.to_string());
      body = {{"polynomial", f.body_string()},
              {"point", pt},
              {"germ", surfaces::germ_name(surfaces::germ_classify(f.poly, p))}};
    } else if (*fibers) {
      auto configs = surfaces::fiber_configurations(surfaces::KodairaFiberType::parse(o.must), o.total, !o.any_reducible);
      Json list = Json::array();
      for (const auto& c : configs) {
        Json names = Json::array();
        for (const auto& f : c) names.push_back(f.name());
        list.push_back(names);
      }
      body = {{"configs", list}};
    } else if (*report) {
      classifier::Theorem1Report r = classifier::theorem1_report();
      r.ramification = classifier::ramification_constraints(1, o.e_bound);
      body = json_io::theorem1(r);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    // Operation-level failure (cap exceeded, unsupported stabilizer): still a JSON body.
    body = {{"error", e.what()}};
    status = kNegative;
  }
  out << (o.pretty ? body.dump(2) : body.dump()) << "\n";
  return status;
}

}  // namespace delpezzo::cli
