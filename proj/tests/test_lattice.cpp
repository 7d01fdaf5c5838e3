#include <numeric>
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gmpxx.h>

#include <random>

#include "delpezzo/error.hpp"
#include "delpezzo/lattice.hpp"

using namespace delpezzo::lattice;

namespace {

// Oracle: Laplace expansion along the first row.
long long laplace_det(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  long long total = 0;
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col] == 0) continue;
    IntMatrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<long long> row;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != col) row.push_back(m[r][c]);
      }
      minor.push_back(row);
    }
    total += ((col % 2) ? -1 : 1) * m[0][col] * laplace_det(minor);
  }
  return total;
}

std::vector<DynkinType> all_types_up_to(int rank) {
  std::vector<DynkinType> out;
  for (int n = 1; n <= rank; ++n) out.push_back(A(n));
  for (int n = 4; n <= rank; ++n) out.push_back(D(n));
  for (int n = 6; n <= 8 && n <= rank; ++n) out.push_back(E(n));
  return out;
}

long long closed_form_det(const DynkinType& t) {
  switch (t.family()) {
    case Family::A: return t.rank() + 1;
    case Family::D: return 4;
    case Family::E: return 9 - t.rank();
  }
  return 0;
}

}  // namespace

TEST_CASE("Dynkin type construction and names") {
  CHECK(A(2).name() == "A2");
  CHECK(DynkinType::parse("E8") == E(8));
  CHECK(DynkinType::parse("d6") == D(6));
  CHECK_THROWS_AS(D(3), delpezzo::PreconditionError);
  CHECK_THROWS_AS(E(9), delpezzo::PreconditionError);
  CHECK_THROWS_AS(A(0), delpezzo::PreconditionError);
  CHECK_THROWS_AS(DynkinType::parse("B2"), delpezzo::ParseError);
  CHECK_THROWS_AS(DynkinType::parse("D3"), delpezzo::ParseError);
}

TEST_CASE("singularity configurations") {
  auto s = SingularityConfig::parse("D4+3A1");
  CHECK(s.size() == 4);
  CHECK(s.to_string() == "D4+3A1");
  CHECK(s.names() == std::vector<std::string>{"A1", "A1", "A1", "D4"});
  CHECK(SingularityConfig::parse("A1+A2") == SingularityConfig{A(2), A(1)});
  CHECK(SingularityConfig::parse("smooth").empty());
  CHECK(config_rank({A(1), A(2)}) == 3);
  CHECK(config_rank({D(4), A(1), A(1), A(1)}) == 7);
  CHECK(config_rank({}) == 0);
  CHECK(config_orders({D(4), A(1)}) == std::vector<long long>{2, 8});
  CHECK_THROWS_AS(SingularityConfig::parse("A1++A2"), delpezzo::ParseError);
}

TEST_CASE("Cartan determinants") {
  CHECK(cartan_determinant(A(2)) == 3);
  CHECK(cartan_determinant(E(8)) == 1);
  CHECK(cartan_determinant(D(4)) == 4);
  for (const auto& t : all_types_up_to(12)) {
    CAPTURE(t.name());
    CHECK(cartan_determinant(t) == closed_form_det(t));
    if (t.rank() <= 9) CHECK(cartan_determinant(t) == laplace_det(cartan_matrix(t)));
  }
}

TEST_CASE("local fundamental group orders") {
  CHECK(local_pi1_order(E(8)) == 120);
  CHECK(local_pi1_order(D(4)) == 8);
  CHECK(local_pi1_order(A(3)) == 4);
  CHECK(types_with_order(12) == std::vector<DynkinType>{A(11), D(5)});
  CHECK(types_with_order(18) == std::vector<DynkinType>{A(17)});
  CHECK(types_with_order(16) == std::vector<DynkinType>{A(15), D(6)});
  CHECK(types_with_order(1).empty());
  CHECK(types_with_order(24) == std::vector<DynkinType>{A(23), D(8), E(6)});
  // The abelianization of the binary polyhedral group is the discriminant group.
  for (const auto& t : all_types_up_to(12)) {
    CHECK(local_pi1_order(t) % cartan_determinant(t) == 0);
  }
}

TEST_CASE("recognize_dynkin") {
  CurveConfig chain{{"a", "b", "c"}, {{-2, 1, 0}, {1, -2, 1}, {0, 1, -2}}, {}};
  CHECK(std::get<DynkinType>(recognize_dynkin(chain)) == A(3));

  // The E8 divisor of the II* fibre is every component except the one the
  // section meets.
  auto e8 = remove_curves(ii_star_fibre(), {"C1"});
  CHECK(std::get<DynkinType>(recognize_dynkin(e8)) == E(8));
  // Dropping the multiplicity-3 component instead leaves the linear chain.
  auto chain8 = remove_curves(ii_star_fibre(), {"C3'"});
  CHECK(std::get<DynkinType>(recognize_dynkin(chain8)) == A(8));
  // The whole fibre is affine E8.
  auto whole = recognize_dynkin(ii_star_fibre());
  REQUIRE(std::holds_alternative<NotADE>(whole));
  CHECK(std::get<NotADE>(whole).reason == NotADE::Reason::NotDynkinShape);

  CurveConfig minus_one{{"E"}, {{-1}}, {}};
  CHECK(std::get<NotADE>(recognize_dynkin(minus_one)).reason == NotADE::Reason::WrongSelfIntersection);

  CurveConfig triangle{{"a", "b", "c"}, {{-2, 1, 1}, {1, -2, 1}, {1, 1, -2}}, {}};
  CHECK(std::get<NotADE>(recognize_dynkin(triangle)).reason == NotADE::Reason::Cycle);
  CurveConfig pair{{"a", "b"}, {{-2, 0}, {0, -2}}, {}};
  CHECK(std::get<NotADE>(recognize_dynkin(pair)).reason == NotADE::Reason::Disconnected);
  CurveConfig star{{"c", "a", "b", "d", "e"},
                   {{-2, 1, 1, 1, 1}, {1, -2, 0, 0, 0}, {1, 0, -2, 0, 0}, {1, 0, 0, -2, 0}, {1, 0, 0, 0, -2}},
                   {}};
  CHECK(std::get<NotADE>(recognize_dynkin(star)).reason == NotADE::Reason::BranchDegree);

  // D4 and A4 share a rank but not a shape.
  CHECK(std::get<DynkinType>(recognize_dynkin(dual_graph(D(4)))) == D(4));
  CHECK(std::get<DynkinType>(recognize_dynkin(dual_graph(A(4)))) == A(4));
}

TEST_CASE("property: recognize_dynkin inverts dual_graph, including relabelled orderings") {
  std::mt19937 rng(99);
  for (const auto& t : all_types_up_to(12)) {
    auto g = dual_graph(t);
    CHECK(std::get<DynkinType>(recognize_dynkin(g)) == t);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<std::size_t> perm(g.size());
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      CurveConfig h = g;
      for (std::size_t i = 0; i < g.size(); ++i) {
        h.labels[i] = g.labels[perm[i]];
        for (std::size_t j = 0; j < g.size(); ++j) h.matrix[i][j] = g.matrix[perm[i]][perm[j]];
      }
      CHECK(std::get<DynkinType>(recognize_dynkin(h)) == t);
    }
  }
}

TEST_CASE("blow_down") {
  CurveConfig one{{"E", "C"}, {{-1, 1}, {1, -2}}, {}};
  auto r = blow_down(one, 0);
  CHECK(r.labels == std::vector<std::string>{"C"});
  CHECK(r.matrix == IntMatrix{{-1}});

  CurveConfig two{{"E", "C", "D"}, {{-1, 1, 1}, {1, -2, 0}, {1, 0, -2}}, {}};
  auto s = blow_down(two, 0);
  CHECK(s.matrix == IntMatrix{{-1, 1}, {1, -1}});

  CHECK_THROWS_AS(blow_down(two, 1), delpezzo::PreconditionError);

  // E, C1, ..., C6 are successively (-1)-curves.
  auto cur = ii_star_with_section();
  const std::vector<std::string> order{"E", "C1", "C2", "C3", "C4", "C5", "C6"};
  for (const auto& label : order) {
    auto idx = cur.index_of(label);
    CAPTURE(label);
    REQUIRE(cur.matrix[idx][idx] == -1);
    std::size_t before = cur.size();
    cur = blow_down(cur, idx);
    CHECK(cur.size() == before - 1);
  }
  // What is left: C4', C2', C3' with C4' and C3' now (-1)-curves meeting once.
  CHECK(cur.labels == std::vector<std::string>{"C4'", "C2'", "C3'"});
  CHECK(cur.matrix[cur.index_of("C4'")][cur.index_of("C4'")] == -1);
  CHECK(cur.matrix[cur.index_of("C3'")][cur.index_of("C3'")] == -1);
  CHECK(cur.matrix[cur.index_of("C4'")][cur.index_of("C3'")] == 1);
}

TEST_CASE("property: blow_down rank bookkeeping on random configurations") {
  std::mt19937 rng(1234);
  std::uniform_int_distribution<int> size_dist(1, 8), self(-4, -1), meet(0, 2);
  int done = 0;
  while (done < 1000) {
    int n = size_dist(rng);
    CurveConfig c;
    c.matrix.assign(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) {
      c.labels.push_back("L" + std::to_string(i));
      c.matrix[i][i] = self(rng);
      for (int j = 0; j < i; ++j) c.matrix[i][j] = c.matrix[j][i] = meet(rng);
    }
    int e = std::uniform_int_distribution<int>(0, n - 1)(rng);
    c.matrix[e][e] = -1;
    auto r = blow_down(c, e);
    CHECK(r.size() == c.size() - 1);
    r.validate();
    // Intersection numbers only grow, by the product of meetings with E.
    for (std::size_t a = 0, ra = 0; a < c.size(); ++a) {
      if (static_cast<int>(a) == e) continue;
      for (std::size_t b = 0, rb = 0; b < c.size(); ++b) {
        if (static_cast<int>(b) == e) continue;
        CHECK(r.matrix[ra][rb] - c.matrix[a][b] == c.matrix[a][e] * c.matrix[b][e]);
        ++rb;
      }
      ++ra;
    }
    ++done;
  }
}
