#pragma once

// Rank-one Gorenstein del Pezzo surfaces: the table of admissible singularity
// types, arithmetic filters for unramified covers, and the quotient search.

#include <optional>
#include <string>
#include <vector>

#include "delpezzo/lattice.hpp"
#include "delpezzo/plane_action.hpp"

namespace delpezzo::classifier {

using lattice::DynkinType;
using lattice::SearchBounds;
using lattice::SingularityConfig;

struct SurfaceProfile {
  std::string name;
  int d = 9;  // K^2
  SingularityConfig config;
  int chi = 3;  // topological Euler number
  bool smooth_locus_simply_connected = true;
};

struct ConsistencyReport {
  bool pass = false;
  int rank = 0;
  int chi = 0;
  std::vector<std::string> failures;  // "DegreeOutOfRange", "RankMismatch", "ChiMismatch"
};

/// 1 <= d <= 9, rank = 9 - d and chi = 12 - d - rank = 3.
ConsistencyReport consistency(const SurfaceProfile& p);

struct Lemma1Table {
  std::vector<SurfaceProfile> rows;  // P2 then rows by decreasing K^2; two surfaces at K^2 = 1
  std::vector<int> impossible_degrees;
  std::string note;
};

const Lemma1Table& lemma1_table();
/// Row by surface name ("P2", "Q", "V3", ..., "V8", "V8'") or by config ("A1+A2").
const SurfaceProfile& lemma1_row(const std::string& key);

/// One preimage of a bottom point: local degree n and local order m of the
/// preimage (m = 1 for a smooth preimage).
struct Part {
  long long n = 1;
  long long m = 1;
  friend bool operator==(const Part&, const Part&) = default;
};

struct BottomPoint {
  DynkinType type;
  std::vector<Part> parts;
};

struct CoverHypothesis {
  SurfaceProfile top;
  int degree = 2;
  std::vector<BottomPoint> bottom;

  SingularityConfig bottom_config() const;
};

enum class Reason { K2NotInteger, RankMismatch, LocalOrderUnrealizable, EulerMismatch, NonGorensteinForced };
std::string reason_name(Reason r);

struct FilterVerdict {
  std::optional<Reason> contradiction;
  std::string detail;
  bool ok() const { return !contradiction.has_value(); }
};

/// Filters in order: (F1) K^2 of the bottom is the positive integer
/// K^2_top / n; (F2) bottom rank = 9 - K^2; (F3) every local order n_j m_j is
/// the order of the point's type and the local degrees sum to n; (F4)
/// chi(top) - #preimages = n (3 - #bottom points). Throws PreconditionError
/// unless each top singular point is used by exactly one part.
FilterVerdict cover_filter(const CoverHypothesis& h);

struct Survivor {
  int degree = 0;
  SingularityConfig config;
  std::vector<BottomPoint> points;
};

struct Exclusion {
  int degree = 0;
  std::string config;  // possibly partial, e.g. the forced points only
  Reason reason = Reason::RankMismatch;
  std::string detail;
  std::string case_label;  // empty when the case has no label
};

struct Enumeration {
  std::string top;
  std::vector<Survivor> survivors;    // ascending (degree, config)
  std::vector<Exclusion> exclusions;  // ascending (degree, config, reason)
};

/// Every degree 2..9, every placement of the top singular points and every
/// completion of the bottom configuration, run through cover_filter.
Enumeration enumerate_quotients(const SurfaceProfile& top, const SearchBounds& bounds = {});

struct BranchDatum {
  long long e = 2;      // ramification index
  long long delta = 1;  // multiplicity in -K_V
  friend bool operator==(const BranchDatum&, const BranchDatum&) = default;
};

/// sum (e - 1)/e * delta < 1.
bool ramification_feasible(const std::vector<BranchDatum>& branches);

struct RamificationReport {
  int d = 1;
  long long e_bound = 0;
  std::vector<std::vector<BranchDatum>> feasible;  // within the bound, canonical order
  std::string conclusion;
};

/// Searches multisets with e <= e_bound, delta <= e_bound, at most three members.
RamificationReport ramification_constraints(int d, long long e_bound = 12);

/// How a built-in action's quotient sits in the classification.
struct ActionMatch {
  std::string action;
  std::string top;  // "P2", "Q" or a table row name when the quotient is its own cover
  std::size_t group_order = 1;
  long long degree = 1;
  cyclo::Rational k2;
  SingularityConfig config;
  bool matched = false;
  std::string detail;
};

ActionMatch match_action(const plane::NamedAction& action);

struct TopSummary {
  std::string top;
  int degree = 0;
  std::string outcome;  // "survivors: ..." or the first exclusion reason
};

struct SurfaceStatus {
  std::string surface;
  std::string status;
  std::vector<std::string> actions;
  std::string basis;
};

struct Theorem1Report {
  std::vector<std::string> candidates;
  std::vector<TopSummary> tops;
  std::vector<ActionMatch> actions;
  std::vector<SurfaceStatus> statuses;
  RamificationReport ramification;
  std::vector<std::string> assumptions;
};

Theorem1Report theorem1_report();

}  // namespace delpezzo::classifier
