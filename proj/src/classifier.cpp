#include "delpezzo/classifier.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "delpezzo/error.hpp"

namespace delpezzo::classifier {

using lattice::config_rank;
using lattice::local_pi1_order;

ConsistencyReport consistency(const SurfaceProfile& p) {
  ConsistencyReport r;
  r.rank = config_rank(p.config);
  r.chi = 12 - p.d - r.rank;
  if (p.d < 1 || p.d > 9) r.failures.push_back("DegreeOutOfRange");
  if (r.rank != 9 - p.d) r.failures.push_back("RankMismatch");
  if (r.chi != 3 || p.chi != 3) r.failures.push_back("ChiMismatch");
  r.pass = r.failures.empty();
  return r;
}

const Lemma1Table& lemma1_table() {
  static const Lemma1Table table = [] {
    Lemma1Table t;
    auto row = [&](std::string name, int d, const char* cfg) {
      t.rows.push_back({std::move(name), d, SingularityConfig::parse(cfg), 3, true});
    };
    row("P2", 9, "");
    row("Q", 8, "A1");
    row("V3", 6, "A1+A2");
    row("V4", 5, "A4");
    row("V5", 4, "D5");
    row("V6", 3, "E6");
    row("V7", 2, "E7");
    row("V8", 1, "E8");
    row("V8'", 1, "E8");
    t.impossible_degrees = {7};
    t.note = "K^2 = 7 does not occur for a rank-one Gorenstein log del Pezzo surface";
    return t;
  }();
  return table;
}

const SurfaceProfile& lemma1_row(const std::string& key) {
  for (const auto& r : lemma1_table().rows) {
    if (r.name == key) return r;
  }
  SingularityConfig want;
  try {
    want = SingularityConfig::parse(key);
  } catch (const Error&) {
    throw PreconditionError("unknown surface '" + key + "'");
  }
  for (const auto& r : lemma1_table().rows) {
    if (r.config == want) return r;
  }
  throw PreconditionError("unknown surface '" + key + "'");
}

SingularityConfig CoverHypothesis::bottom_config() const {
  std::vector<DynkinType> types;
  for (const auto& p : bottom) types.push_back(p.type);
  return SingularityConfig(types);
}

std::string reason_name(Reason r) {
  switch (r) {
    case Reason::K2NotInteger: return "K2NotInteger";
    case Reason::RankMismatch: return "RankMismatch";
    case Reason::LocalOrderUnrealizable: return "LocalOrderUnrealizable";
    case Reason::EulerMismatch: return "EulerMismatch";
    case Reason::NonGorensteinForced: return "NonGorensteinForced";
  }
  return "?";
}

namespace {

FilterVerdict contradiction(Reason r, std::string detail) { return {r, std::move(detail)}; }

std::vector<long long> top_orders(const SurfaceProfile& top) {
  std::vector<long long> out;
  for (const auto& t : top.config.types()) out.push_back(local_pi1_order(t));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

FilterVerdict cover_filter(const CoverHypothesis& h) {
  if (h.degree < 2) throw PreconditionError("cover degree must be at least 2");
  std::vector<long long> used;
  for (const auto& p : h.bottom) {
    if (p.parts.empty()) throw PreconditionError("bottom point without preimages");
    for (const auto& part : p.parts) {
      if (part.n < 1 || part.m < 1) throw PreconditionError("local degrees and orders must be positive");
      if (part.m > 1) used.push_back(part.m);
    }
  }
  std::sort(used.begin(), used.end());
  if (used != top_orders(h.top)) throw PreconditionError("every top singular point must be assigned exactly once");

  const int n = h.degree;
  if (h.top.d % n != 0) {
    return contradiction(Reason::K2NotInteger, "K^2 = " + std::to_string(h.top.d) + "/" + std::to_string(n) + " is not an integer");
  }
  const int d = h.top.d / n;
  const int rank = config_rank(h.bottom_config());
  if (rank != 9 - d) {
    return contradiction(Reason::RankMismatch,
                         "rank " + std::to_string(rank) + " but K^2 = " + std::to_string(d) + " needs " + std::to_string(9 - d));
  }
  for (const auto& p : h.bottom) {
    const long long order = local_pi1_order(p.type);
    long long total = 0;
    for (const auto& part : p.parts) {
      total += part.n;
      if (part.n * part.m != order) {
        return contradiction(Reason::LocalOrderUnrealizable, p.type.name() + " has local order " + std::to_string(order) +
                                                                 ", a preimage needs " + std::to_string(part.n * part.m));
      }
    }
    if (total != n) {
      return contradiction(Reason::LocalOrderUnrealizable, p.type.name() + ": local degrees sum to " + std::to_string(total) +
                                                               ", not " + std::to_string(n));
    }
  }
  long long preimages = 0;
  for (const auto& p : h.bottom) preimages += static_cast<long long>(p.parts.size());
  const long long lhs = h.top.chi - preimages;
  const long long rhs = static_cast<long long>(n) * (3 - static_cast<long long>(h.bottom.size()));
  if (lhs != rhs) {
    return contradiction(Reason::EulerMismatch,
                         "chi: " + std::to_string(lhs) + " upstairs against " + std::to_string(rhs) + " downstairs");
  }
  return {};
}

namespace {

std::string case_label(const std::string& top, int n) {
  static const std::map<std::pair<std::string, int>, std::string> labels = {
      {{"P2", 3}, "1.1"},   {{"P2", 9}, "1.2"},   {{"Q", 2}, "2.1"},   {{"Q", 4}, "2.2"},
      {{"Q", 8}, "2.3"},    {{"V3", 2}, "case1"}, {{"V3", 3}, "case2"}, {{"V3", 6}, "case3"},
  };
  auto it = labels.find({top, n});
  return it == labels.end() ? "" : it->second;
}

// All set partitions of {0..k-1}.
void set_partitions(int k, std::vector<std::vector<std::vector<int>>>& out) {
  std::vector<std::vector<int>> blocks;
  auto rec = [&](auto&& self, int i) -> void {
    if (i == k) {
      out.push_back(blocks);
      return;
    }
    for (auto& b : blocks) {
      b.push_back(i);
      self(self, i + 1);
      b.pop_back();
    }
    blocks.push_back({i});
    self(self, i + 1);
    blocks.pop_back();
  };
  rec(rec, 0);
}

// Ways a group of top singular points (orders ms) can lie over one bottom
// point of a degree-n cover: local order T and the preimage parts.
std::vector<std::pair<long long, std::vector<Part>>> group_options(const std::vector<long long>& ms, int n) {
  std::vector<std::pair<long long, std::vector<Part>>> out;
  long long step = 1;
  for (long long m : ms) step = std::lcm(step, m);
  for (long long t = step;; t += step) {
    long long base = 0;
    for (long long m : ms) base += t / m;
    if (base > n) break;
    if ((n - base) % t != 0) continue;
    std::vector<Part> parts;
    for (long long m : ms) parts.push_back({t / m, m});
    for (long long c = 0; c < (n - base) / t; ++c) parts.push_back({t, 1});
    out.emplace_back(t, parts);
  }
  return out;
}

std::string points_text(const std::vector<BottomPoint>& pts) {
  std::vector<DynkinType> types;
  for (const auto& p : pts) types.push_back(p.type);
  return SingularityConfig(types).to_string();
}

}  // namespace

Enumeration enumerate_quotients(const SurfaceProfile& top, const SearchBounds& bounds) {
  Enumeration out;
  out.top = top.name;
  std::vector<long long> ms;
  for (const auto& t : top.config.types()) ms.push_back(local_pi1_order(t));
  std::vector<std::vector<std::vector<int>>> partitions;
  set_partitions(static_cast<int>(ms.size()), partitions);

  std::set<std::pair<int, SingularityConfig>> seen_survivors;
  std::set<std::tuple<int, std::string, int>> seen_exclusions;
  auto exclude = [&](int n, const std::string& cfg, Reason r, const std::string& detail) {
    if (seen_exclusions.insert({n, cfg, static_cast<int>(r)}).second) {
      out.exclusions.push_back({n, cfg, r, detail, case_label(top.name, n)});
    }
  };

  for (int n = 2; n <= 9; ++n) {
    if (top.d % n != 0) {
      exclude(n, "", Reason::K2NotInteger, "K^2 = " + std::to_string(top.d) + "/" + std::to_string(n) + " is not an integer");
      continue;
    }
    const int target = 9 - top.d / n;
    // Types that can sit over smooth preimages only: local order at most n.
    std::vector<DynkinType> fill_pool;
    for (int k = 1; k <= bounds.max_a; ++k) fill_pool.push_back(lattice::A(k));
    for (int k = 4; k <= bounds.max_d; ++k) fill_pool.push_back(lattice::D(k));
    for (int k = 6; k <= 8; ++k) fill_pool.push_back(lattice::E(k));
    std::erase_if(fill_pool, [&](const DynkinType& t) { return local_pi1_order(t) > n || t.rank() > target; });

    for (const auto& partition : partitions) {
      // Options per block, then their product.
      std::vector<std::vector<std::pair<long long, std::vector<Part>>>> options;
      bool feasible = true;
      for (const auto& block : partition) {
        std::vector<long long> bm;
        for (int i : block) bm.push_back(ms[i]);
        options.push_back(group_options(bm, n));
        if (options.back().empty()) feasible = false;
      }
      if (!feasible) continue;
      std::vector<std::size_t> pick(options.size(), 0);
      for (;;) {
        // Expand each picked option over its possible types.
        std::vector<std::vector<BottomPoint>> forced_sets{{}};
        std::string missing;
        for (std::size_t b = 0; b < options.size(); ++b) {
          const auto& [t, parts] = options[b][pick[b]];
          auto types = lattice::types_with_order(t, bounds);
          if (types.empty()) missing = "order " + std::to_string(t);
          std::vector<std::vector<BottomPoint>> next;
          for (const auto& fs : forced_sets) {
            for (const auto& ty : types) {
              auto grown = fs;
              grown.push_back({ty, parts});
              next.push_back(std::move(grown));
            }
          }
          forced_sets = std::move(next);
        }
        if (!missing.empty()) {
          exclude(n, missing, Reason::LocalOrderUnrealizable, "no ADE type within the search bounds has " + missing);
        }
        for (const auto& forced : forced_sets) {
          int forced_rank = 0;
          for (const auto& p : forced) forced_rank += p.type.rank();
          if (forced_rank > target) {
            exclude(n, points_text(forced), Reason::RankMismatch,
                    "forced points have rank " + std::to_string(forced_rank) + " > " + std::to_string(target));
            continue;
          }
          // Completions by smooth-preimage points, as multisets over fill_pool.
          std::vector<BottomPoint> current = forced;
          auto rec = [&](auto&& self, std::size_t from, int left) -> void {
            if (left == 0) {
              CoverHypothesis h{top, n, current};
              FilterVerdict v = cover_filter(h);
              SingularityConfig cfg = h.bottom_config();
              if (v.ok()) {
                if (seen_survivors.insert({n, cfg}).second) out.survivors.push_back({n, cfg, current});
              } else {
                exclude(n, cfg.to_string(), *v.contradiction, v.detail);
              }
              return;
            }
            for (std::size_t i = from; i < fill_pool.size(); ++i) {
              const DynkinType& t = fill_pool[i];
              if (t.rank() > left) continue;
              const long long order = local_pi1_order(t);
              // Equal local degrees; when order does not divide n the sum falls short.
              std::vector<Part> parts(static_cast<std::size_t>(std::max<long long>(1, n / order)), Part{order, 1});
              current.push_back({t, parts});
              self(self, i, left - t.rank());
              current.pop_back();
            }
          };
          rec(rec, 0, target - forced_rank);
        }
        std::size_t b = 0;
        while (b < pick.size() && ++pick[b] == options[b].size()) pick[b++] = 0;
        if (b == pick.size()) break;
      }
    }
  }
  std::sort(out.survivors.begin(), out.survivors.end(), [](const Survivor& a, const Survivor& b) {
    return std::tie(a.degree, a.config) < std::tie(b.degree, b.config);
  });
  std::sort(out.exclusions.begin(), out.exclusions.end(), [](const Exclusion& a, const Exclusion& b) {
    return std::tie(a.degree, a.config, a.reason) < std::tie(b.degree, b.config, b.reason);
  });
  return out;
}

bool ramification_feasible(const std::vector<BranchDatum>& branches) {
  cyclo::Rational sum = 0;
  for (const auto& b : branches) {
    if (b.e < 2 || b.delta < 1) throw PreconditionError("branch data need e >= 2 and delta >= 1");
    sum += cyclo::Rational(static_cast<long>(b.e - 1), static_cast<unsigned long>(b.e)) * static_cast<long>(b.delta);
  }
  return sum < 1;
}

RamificationReport ramification_constraints(int d, long long e_bound) {
  if (d < 1) throw PreconditionError("K^2 must be positive");
  if (e_bound < 2) throw PreconditionError("the ramification bound must be at least 2");
  RamificationReport r;
  r.d = d;
  r.e_bound = e_bound;
  std::vector<BranchDatum> pool;
  for (long long e = 2; e <= e_bound; ++e) {
    for (long long delta = 1; delta <= e_bound; ++delta) pool.push_back({e, delta});
  }
  std::vector<BranchDatum> current;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (ramification_feasible(current)) r.feasible.push_back(current);
    if (current.size() == 3) return;
    for (std::size_t i = from; i < pool.size(); ++i) {
      current.push_back(pool[i]);
      // Adding branches only increases the sum, so infeasible prefixes end the search.
      if (ramification_feasible(current)) self(self, i);
      current.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(r.feasible.begin(), r.feasible.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].e != b[i].e) return a[i].e < b[i].e;
      if (a[i].delta != b[i].delta) return a[i].delta < b[i].delta;
    }
    return false;
  });
  r.conclusion = "any branch curve is irreducible with delta = 1, hence a member of |-K_V|";
  return r;
}

ActionMatch match_action(const plane::NamedAction& action) {
  ActionMatch m;
  m.action = action.name;
  plane::FiniteActionGroup g = plane::close_group(action.generators);
  plane::QuotientProfile p = plane::quotient_profile(g);
  m.group_order = g.order();
  m.k2 = p.k2;
  m.config = p.config;
  plane::FiniteActionGroup refl = g.reflection_subgroup();
  if (refl.order() == g.order()) {
    m.degree = 1;
    for (const auto& row : lemma1_table().rows) {
      if (row.config == p.config && cyclo::Rational(row.d) == p.k2) {
        m.top = row.name;
        m.matched = true;
        m.detail = "generated by pseudo-reflections; the quotient is the table row itself";
        return m;
      }
    }
    m.detail = "generated by pseudo-reflections but matches no table row";
    return m;
  }
  if (refl.order() == 1) {
    m.top = "P2";
    m.degree = static_cast<long long>(g.order());
  } else {
    plane::QuotientProfile rp = plane::quotient_profile(refl);
    if (rp.config != SingularityConfig{lattice::A(1)} || rp.k2 != 8) {
      m.detail = "reflection quotient is not the quadric cone";
      return m;
    }
    m.top = "Q";
    m.degree = static_cast<long long>(g.order() / refl.order());
  }
  const SurfaceProfile& top = lemma1_row(m.top);
  Enumeration e = enumerate_quotients(top);
  for (const auto& s : e.survivors) {
    cyclo::Rational k2(top.d, s.degree);
    k2.canonicalize();
    if (s.degree == m.degree && s.config == p.config && k2 == p.k2) {
      m.matched = true;
      m.detail = "survivor of degree " + std::to_string(s.degree) + " over " + top.name;
      return m;
    }
  }
  m.detail = "no survivor of degree " + std::to_string(m.degree) + " over " + top.name + " has this profile";
  return m;
}

Theorem1Report theorem1_report() {
  Theorem1Report r;
  r.candidates = {"P2", "Q", "V3", "V8", "V8'"};
  for (const auto& row : lemma1_table().rows) {
    Enumeration e = enumerate_quotients(row);
    for (int n = 2; n <= 9; ++n) {
      std::vector<std::string> found;
      for (const auto& s : e.survivors) {
        if (s.degree == n) found.push_back(s.config.to_string());
      }
      std::string outcome;
      if (!found.empty()) {
        outcome = "survivors:";
        for (const auto& f : found) outcome += " " + f;
      } else {
        std::set<std::string> reasons;
        for (const auto& x : e.exclusions) {
          if (x.degree == n) reasons.insert(reason_name(x.reason));
        }
        outcome = "excluded:";
        for (const auto& reason : reasons) outcome += " " + reason;
      }
      r.tops.push_back({row.name, n, outcome});
    }
  }
  for (const auto& a : plane::builtin_actions()) r.actions.push_back(match_action(a));
  auto actions_for = [&](const std::string& top, long long degree) {
    std::vector<std::string> names;
    for (const auto& m : r.actions) {
      if (m.matched && m.top == top && m.degree == degree) names.push_back(m.action);
    }
    return names;
  };
  r.statuses.push_back({"P2", "quotient realized", {"trivial"}, "the plane itself"});
  r.statuses.push_back({"Q", "quotient realized", actions_for("Q", 1), "quotient by a pseudo-reflection group"});
  r.statuses.push_back({"V3", "quotient realized", actions_for("V3", 1), "quotient by a pseudo-reflection group"});
  r.statuses.push_back({"P2/Z3 (3A2)", "quotient realized", actions_for("P2", 3), "cover P2 of degree 3"});
  r.statuses.push_back({"P2/(Z3+Z3) (4A2)", "quotient realized", actions_for("P2", 9), "cover P2 of degree 9"});
  r.statuses.push_back({"Q/Z2 (A3+2A1)", "quotient realized", actions_for("Q", 2), "cover Q of degree 2"});
  r.statuses.push_back({"Q/H4 (D4+3A1)", "quotient realized", actions_for("Q", 4), "cover Q of degree 4"});
  r.statuses.push_back({"V8", "not dominated", {},
                        "no cover of degree >= 2 since n K^2 = 1 has no solution; no non-constant map from P2 (cited)"});
  r.statuses.push_back({"V8'", "not a quotient, domination open", {},
                        "no cover of degree >= 2; a quotient map would need a branch curve in |-K_V| with simply "
                        "connected complement (cited); whether P2 dominates it is open"});
  r.ramification = ramification_constraints(1);
  r.assumptions = {
      "every surface considered has a quasi-universal cover, unramified over the smooth locus (cited)",
      "the complement of the branch curve in V is simply connected (cited, not computed)",
      "there is no non-constant morphism from P2 to V8 (cited, not computed)",
  };
  return r;
}

}  // namespace delpezzo::classifier
