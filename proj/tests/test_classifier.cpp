#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "delpezzo/classifier.hpp"
#include "delpezzo/error.hpp"

using namespace delpezzo;
using namespace delpezzo::classifier;
using lattice::A;
using lattice::D;
using lattice::E;

namespace {

// Local group orders written out by hand: cyclic n+1, binary dihedral 4(n-2),
// binary tetrahedral/octahedral/icosahedral 24/48/120.
long long order_oracle(const DynkinType& t) {
  switch (t.family()) {
    case lattice::Family::A: return t.rank() + 1;
    case lattice::Family::D: return 4LL * (t.rank() - 2);
    case lattice::Family::E: return t.rank() == 6 ? 24 : t.rank() == 7 ? 48 : 120;
  }
  return 0;
}

// Independent verdict: recomputes each filter from the raw data.
std::optional<Reason> verdict_oracle(const CoverHypothesis& h) {
  const int n = h.degree;
  if (h.top.d % n) return Reason::K2NotInteger;
  int rank = 0;
  for (const auto& p : h.bottom) rank += p.type.rank();
  if (rank + h.top.d / n != 9) return Reason::RankMismatch;
  for (const auto& p : h.bottom) {
    long long sum = 0;
    for (const auto& part : p.parts) {
      if (part.n * part.m != order_oracle(p.type)) return Reason::LocalOrderUnrealizable;
      sum += part.n;
    }
    if (sum != n) return Reason::LocalOrderUnrealizable;
  }
  long long pre = 0;
  for (const auto& p : h.bottom) pre += static_cast<long long>(p.parts.size());
  if (3 - pre != n * (3 - static_cast<long long>(h.bottom.size()))) return Reason::EulerMismatch;
  return std::nullopt;
}

std::set<std::pair<int, std::string>> survivor_set(const Enumeration& e) {
  std::set<std::pair<int, std::string>> s;
  for (const auto& x : e.survivors) s.insert({x.degree, x.config.to_string()});
  return s;
}

const Exclusion* find_exclusion(const Enumeration& e, int degree, const std::string& config) {
  for (const auto& x : e.exclusions) {
    if (x.degree == degree && x.config == config) return &x;
  }
  return nullptr;
}

std::vector<DynkinType> all_types() {
  std::vector<DynkinType> out;
  for (int k = 1; k <= 24; ++k) out.push_back(A(k));
  for (int k = 4; k <= 12; ++k) out.push_back(D(k));
  for (int k = 6; k <= 8; ++k) out.push_back(E(k));
  return out;
}

}  // namespace

TEST_CASE("table rows") {
  const auto& t = lemma1_table();
  std::map<SingularityConfig, int> want;
  for (auto [cfg, d] : std::vector<std::pair<const char*, int>>{
           {"", 9}, {"A1", 8}, {"A1+A2", 6}, {"A4", 5}, {"D5", 4}, {"E6", 3}, {"E7", 2}})
    want[SingularityConfig::parse(cfg)] = d;
  REQUIRE(t.rows.size() == 9);
  int e8_rows = 0;
  for (const auto& r : t.rows) {
    CHECK(consistency(r).pass);
    if (r.config == SingularityConfig{E(8)}) {
      ++e8_rows;
      CHECK(r.d == 1);
    } else {
      CHECK(want.at(r.config) == r.d);
    }
  }
  CHECK(e8_rows == 2);
  CHECK(t.impossible_degrees == std::vector<int>{7});
  CHECK(lemma1_row("A1+A2").name == "V3");
  CHECK(lemma1_row("Q").d == 8);
  CHECK_THROWS_AS(lemma1_row("A7"), PreconditionError);
  CHECK_THROWS_AS(lemma1_row("nonsense+"), PreconditionError);
}

TEST_CASE("consistency examples") {
  CHECK(consistency({"x", 6, SingularityConfig::parse("A1+A2")}).pass);
  CHECK(consistency({"x", 5, SingularityConfig::parse("A4")}).pass);
  auto bad = consistency({"x", 6, SingularityConfig::parse("2A1")});
  CHECK_FALSE(bad.pass);
  CHECK(std::find(bad.failures.begin(), bad.failures.end(), "RankMismatch") != bad.failures.end());
  auto out = consistency({"x", 10, {}});
  CHECK(std::find(out.failures.begin(), out.failures.end(), "DegreeOutOfRange") != out.failures.end());
}

TEST_CASE("cover_filter examples") {
  const auto& v3 = lemma1_row("V3");
  // Over the A1 point a local degree 2 gives order 4, over the A2 point order 6.
  CoverHypothesis c1{v3, 2, {{A(3), {{2, 2}}}, {A(5), {{2, 3}}}}};
  FilterVerdict v = cover_filter(c1);
  REQUIRE(v.contradiction);
  CHECK(*v.contradiction == Reason::RankMismatch);

  CoverHypothesis a8{lemma1_row("P2"), 9, {{A(8), {{9, 1}}}}};
  CHECK(*cover_filter(a8).contradiction == Reason::EulerMismatch);

  std::vector<Part> four_smooth(4, Part{2, 1});
  CoverHypothesis d6{lemma1_row("Q"), 8, {{D(6), {{8, 2}}}, {A(1), four_smooth}, {A(1), four_smooth}}};
  CHECK(*cover_filter(d6).contradiction == Reason::EulerMismatch);

  CoverHypothesis ok{lemma1_row("Q"), 4, {{D(4), {{4, 2}}}, {A(1), {{2, 1}, {2, 1}}}, {A(1), {{2, 1}, {2, 1}}},
                                          {A(1), {{2, 1}, {2, 1}}}}};
  CHECK(cover_filter(ok).ok());

  CoverHypothesis k2{lemma1_row("P2"), 2, {}};
  CHECK(*cover_filter(k2).contradiction == Reason::K2NotInteger);

  // The top A1 point must be used.
  CoverHypothesis missing{lemma1_row("Q"), 2, {{A(1), {{2, 1}}}}};
  CHECK_THROWS_AS(cover_filter(missing), PreconditionError);
}

TEST_CASE("property: cover_filter against a recomputed verdict") {
  std::mt19937 rng(23);
  const auto types = all_types();
  const std::vector<std::string> tops{"P2", "Q", "V3", "V4", "V8"};
  for (int trial = 0; trial < 1500; ++trial) {
    const SurfaceProfile& top = lemma1_row(tops[rng() % tops.size()]);
    CoverHypothesis h{top, 2 + static_cast<int>(rng() % 8), {}};
    std::vector<long long> ms;
    for (const auto& t : top.config.types()) ms.push_back(order_oracle(t));
    int points = static_cast<int>(rng() % 5);
    if (points == 0 && !ms.empty()) points = 1;
    for (int i = 0; i < points; ++i) h.bottom.push_back({types[rng() % (trial % 3 ? 8 : types.size())], {}});
    // Top singular points go to random bottom points; smooth parts fill in.
    for (long long m : ms) h.bottom[rng() % h.bottom.size()].parts.push_back({1 + static_cast<long long>(rng() % 6), m});
    for (auto& p : h.bottom) {
      const long long order = order_oracle(p.type);
      const int extra = static_cast<int>(rng() % 4);
      for (int k = 0; k < extra || p.parts.empty(); ++k) {
        // Mostly well-matched parts so every filter gets exercised.
        long long local = rng() % 3 ? order : 1 + static_cast<long long>(rng() % 9);
        p.parts.push_back({local, 1});
      }
    }
    FilterVerdict got = cover_filter(h);
    CHECK(got.contradiction == verdict_oracle(h));
    // Reordering the bottom points changes nothing.
    std::shuffle(h.bottom.begin(), h.bottom.end(), rng);
    CHECK(cover_filter(h).contradiction == got.contradiction);
  }
}

TEST_CASE("quotients of the plane") {
  Enumeration e = enumerate_quotients(lemma1_row("P2"));
  CHECK(survivor_set(e) == std::set<std::pair<int, std::string>>{{3, "3A2"}, {9, "4A2"}});
  const Exclusion* a8 = find_exclusion(e, 9, "A8");
  REQUIRE(a8);
  CHECK(a8->reason == Reason::EulerMismatch);
  CHECK(a8->case_label == "1.2");
  CHECK(find_exclusion(e, 2, "")->reason == Reason::K2NotInteger);
}

TEST_CASE("plane survivors against a direct search") {
  // With a smooth top every bottom point of order T has n/T smooth
  // preimages, so a config survives iff T | n for all points and
  // 3 - sum n/T = n (3 - #points).
  const auto types = all_types();
  std::set<std::pair<int, std::string>> oracle;
  for (int n : {3, 9}) {
    const int rank = 9 - 9 / n;
    std::vector<DynkinType> cur;
    auto rec = [&](auto&& self, std::size_t from, int left) -> void {
      if (left == 0) {
        long long pre = 0;
        for (const auto& t : cur) {
          if (n % order_oracle(t)) return;
          pre += n / order_oracle(t);
        }
        if (3 - pre == n * (3 - static_cast<long long>(cur.size()))) oracle.insert({n, SingularityConfig(cur).to_string()});
        return;
      }
      for (std::size_t i = from; i < types.size(); ++i) {
        if (types[i].rank() > left) continue;
        cur.push_back(types[i]);
        self(self, i, left - types[i].rank());
        cur.pop_back();
      }
    };
    rec(rec, 0, rank);
  }
  CHECK(survivor_set(enumerate_quotients(lemma1_row("P2"))) == oracle);
}

TEST_CASE("quotients of the quadric cone") {
  Enumeration e = enumerate_quotients(lemma1_row("Q"));
  CHECK(survivor_set(e) == std::set<std::pair<int, std::string>>{{2, "A3+2A1"}, {4, "D4+3A1"}});
  const Exclusion* d6 = find_exclusion(e, 8, "D6+2A1");
  REQUIRE(d6);
  CHECK(d6->reason == Reason::EulerMismatch);
  CHECK(d6->case_label == "2.3");
  const Exclusion* a15 = find_exclusion(e, 8, "A15");
  REQUIRE(a15);
  CHECK(a15->reason == Reason::RankMismatch);
  bool any8 = false;
  for (const auto& x : e.exclusions) any8 |= x.degree == 8;
  CHECK(any8);
}

TEST_CASE("the A1+A2 surface covers nothing") {
  Enumeration e = enumerate_quotients(lemma1_row("V3"));
  CHECK(e.survivors.empty());
  const Exclusion* c1 = find_exclusion(e, 2, "A5+A3");
  REQUIRE(c1);
  CHECK(c1->reason == Reason::RankMismatch);
  CHECK(c1->case_label == "case1");
  for (int n : {3, 6}) {
    bool rank = false;
    for (const auto& x : e.exclusions) {
      if (x.degree == n) {
        CHECK(x.reason == Reason::RankMismatch);
        CHECK(x.case_label == (n == 3 ? "case2" : "case3"));
        rank = true;
      }
    }
    CHECK(rank);
  }
  // The order-18 point is forced onto A17 whatever happens at the A1 point.
  bool a17 = false;
  for (const auto& x : e.exclusions) a17 |= x.degree == 6 && x.config.find("A17") != std::string::npos;
  CHECK(a17);
}

TEST_CASE("degree-one surfaces cover nothing") {
  for (const char* name : {"V8", "V8'"}) {
    Enumeration e = enumerate_quotients(lemma1_row(name));
    CHECK(e.survivors.empty());
    CHECK(e.exclusions.size() == 8);
    for (const auto& x : e.exclusions) CHECK(x.reason == Reason::K2NotInteger);
  }
}

TEST_CASE("survivors are consistent and exact") {
  for (const char* name : {"P2", "Q"}) {
    const SurfaceProfile& top = lemma1_row(name);
    Enumeration e = enumerate_quotients(top);
    for (const auto& s : e.survivors) {
      SurfaceProfile bottom{"bottom", top.d / s.degree, s.config};
      CHECK(consistency(bottom).pass);
      // One more point of any type breaks the rank filter.
      for (const auto& t : all_types()) {
        CoverHypothesis h{top, s.degree, s.points};
        h.bottom.push_back({t, {{s.degree, 1}}});
        FilterVerdict v = cover_filter(h);
        REQUIRE(v.contradiction);
        CHECK(*v.contradiction == Reason::RankMismatch);
      }
    }
  }
}

TEST_CASE("enumeration is deterministic and sorted") {
  for (const auto& row : lemma1_table().rows) {
    Enumeration a = enumerate_quotients(row), b = enumerate_quotients(row);
    REQUIRE(a.exclusions.size() == b.exclusions.size());
    for (std::size_t i = 0; i < a.exclusions.size(); ++i) {
      CHECK(a.exclusions[i].config == b.exclusions[i].config);
      CHECK(a.exclusions[i].reason == b.exclusions[i].reason);
    }
    for (std::size_t i = 1; i < a.survivors.size(); ++i) {
      CHECK(std::tie(a.survivors[i - 1].degree, a.survivors[i - 1].config) <
            std::tie(a.survivors[i].degree, a.survivors[i].config));
    }
    for (std::size_t i = 1; i < a.exclusions.size(); ++i) {
      const auto& p = a.exclusions[i - 1];
      const auto& q = a.exclusions[i];
      CHECK(std::tie(p.degree, p.config, p.reason) < std::tie(q.degree, q.config, q.reason));
    }
  }
}

TEST_CASE("ramification") {
  CHECK(ramification_feasible({}));
  CHECK(ramification_feasible({{5, 1}}));
  CHECK_FALSE(ramification_feasible({{2, 1}, {2, 1}}));
  CHECK_FALSE(ramification_feasible({{3, 2}}));
  CHECK_THROWS_AS(ramification_feasible({{1, 1}}), PreconditionError);
  for (int d : {1, 2, 5}) {
    RamificationReport r = ramification_constraints(d, 12);
    REQUIRE(r.feasible.size() == 12);
    CHECK(r.feasible[0].empty());
    for (long long e = 2; e <= 12; ++e) {
      REQUIRE(r.feasible[e - 1].size() == 1);
      CHECK(r.feasible[e - 1][0] == BranchDatum{e, 1});
    }
    CHECK(r.conclusion.find("irreducible") != std::string::npos);
  }
  CHECK_THROWS_AS(ramification_constraints(0), PreconditionError);
}

TEST_CASE("property: ramification inequality by cross-multiplication") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<BranchDatum> b;
    const int k = static_cast<int>(rng() % 4);
    for (int i = 0; i < k; ++i) b.push_back({2 + static_cast<long long>(rng() % 10), 1 + static_cast<long long>(rng() % 3)});
    // sum (e-1) delta / e < 1 with a common denominator prod e.
    long long den = 1;
    for (const auto& x : b) den *= x.e;
    long long num = 0;
    for (const auto& x : b) num += (x.e - 1) * x.delta * (den / x.e);
    CHECK(ramification_feasible(b) == (num < den));
  }
}

TEST_CASE("built-in actions land on survivors") {
  std::map<std::string, std::tuple<std::string, long long, std::string>> want = {
      {"z2_cone", {"Q", 1, "A1"}},     {"z6", {"V3", 1, "A2+A1"}},      {"z3", {"P2", 3, "3A2"}},
      {"z3xz3", {"P2", 9, "4A2"}},     {"z4", {"Q", 2, "A3+2A1"}},      {"quaternion8", {"Q", 4, "D4+3A1"}},
  };
  for (const auto& a : plane::builtin_actions()) {
    ActionMatch m = match_action(a);
    INFO(a.name);
    CHECK(m.matched);
    const auto& [top, degree, cfg] = want.at(a.name);
    CHECK(m.top == top);
    CHECK(m.degree == degree);
    CHECK(m.config.to_string() == cfg);
    CHECK(m.k2 * static_cast<long>(m.degree) == lemma1_row(top).d);
  }
}

TEST_CASE("theorem report") {
  Theorem1Report r = theorem1_report();
  CHECK(r.candidates == std::vector<std::string>{"P2", "Q", "V3", "V8", "V8'"});
  std::map<std::string, std::string> status;
  for (const auto& s : r.statuses) status[s.surface] = s.status;
  CHECK(status.at("P2") == "quotient realized");
  CHECK(status.at("Q") == "quotient realized");
  CHECK(status.at("V3") == "quotient realized");
  CHECK(status.at("V8") == "not dominated");
  CHECK(status.at("V8'") == "not a quotient, domination open");
  for (const auto& s : r.statuses) {
    if (s.status == "quotient realized") CHECK_FALSE(s.actions.empty());
  }
  for (const auto& t : r.tops) {
    if (t.top == "V3" && (t.degree == 2 || t.degree == 3 || t.degree == 6)) CHECK(t.outcome == "excluded: RankMismatch");
    if (t.top == "V8") CHECK(t.outcome == "excluded: K2NotInteger");
    if (t.top == "P2" && t.degree == 9) CHECK(t.outcome == "survivors: 4A2");
  }
  CHECK(r.tops.size() == 9 * 8);
  CHECK(r.assumptions.size() >= 2);
}
