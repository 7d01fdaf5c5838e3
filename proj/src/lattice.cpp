#include "delpezzo/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <queue>

#include "delpezzo/error.hpp"

namespace delpezzo::lattice {

DynkinType::DynkinType(Family family, int n) : family_(family), n_(n) {
  bool ok = false;
  switch (family) {
    case Family::A: ok = n >= 1; break;
    case Family::D: ok = n >= 4; break;
    case Family::E: ok = n >= 6 && n <= 8; break;
  }
  if (!ok) throw PreconditionError("no Dynkin type " + name());
}

DynkinType DynkinType::parse(std::string_view text) {
  if (text.size() < 2) throw ParseError("bad Dynkin type \"" + std::string(text) + "\"");
  Family f;
  switch (std::toupper(static_cast<unsigned char>(text[0]))) {
    case 'A': f = Family::A; break;
    case 'D': f = Family::D; break;
    case 'E': f = Family::E; break;
    default: throw ParseError("bad Dynkin family in \"" + std::string(text) + "\"");
  }
  int n = 0;
  for (char c : text.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(c)) || n > 1000) {
      throw ParseError("bad Dynkin rank in \"" + std::string(text) + "\"");
    }
    n = n * 10 + (c - '0');
  }
  try {
    return DynkinType(f, n);
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

std::string DynkinType::name() const {
  const char* letter = family_ == Family::A ? "A" : family_ == Family::D ? "D" : "E";
  return letter + std::to_string(n_);
}

SingularityConfig::SingularityConfig(std::vector<DynkinType> types) : types_(std::move(types)) {
  std::sort(types_.begin(), types_.end());
}

void SingularityConfig::add(DynkinType t) {
  types_.insert(std::upper_bound(types_.begin(), types_.end(), t), t);
}

SingularityConfig SingularityConfig::parse(std::string_view text) {
  std::vector<DynkinType> out;
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty() || s == "smooth") return {};
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t plus = s.find('+', start);
    std::string part = s.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
    if (part.empty()) throw ParseError("empty term in configuration \"" + std::string(text) + "\"");
    std::size_t k = 0;
    while (k < part.size() && std::isdigit(static_cast<unsigned char>(part[k]))) ++k;
    int count = k == 0 ? 1 : std::stoi(part.substr(0, k));
    DynkinType t = DynkinType::parse(part.substr(k));
    for (int i = 0; i < count; ++i) out.push_back(t);
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  return SingularityConfig(std::move(out));
}

std::string SingularityConfig::to_string() const {
  if (types_.empty()) return "smooth";
  std::string out;
  for (auto it = types_.rbegin(); it != types_.rend();) {
    auto next = std::find_if(it, types_.rend(), [&](const DynkinType& t) { return t != *it; });
    long count = std::distance(it, next);
    if (!out.empty()) out += "+";
    if (count > 1) out += std::to_string(count);
    out += it->name();
    it = next;
  }
  return out;
}

std::vector<std::string> SingularityConfig::names() const {
  std::vector<std::string> out;
  for (const auto& t : types_) out.push_back(t.name());
  return out;
}

namespace {

// Edges of the Dynkin diagram on vertices 0..n-1.
std::vector<std::pair<int, int>> dynkin_edges(const DynkinType& t) {
  const int n = t.rank();
  std::vector<std::pair<int, int>> edges;
  if (t.family() == Family::A) {
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  } else if (t.family() == Family::D) {
    for (int i = 0; i + 2 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(n - 3, n - 1);
  } else {
    for (int i = 0; i + 2 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(2, n - 1);
  }
  return edges;
}

}  // namespace

IntMatrix cartan_matrix(const DynkinType& t) {
  const int n = t.rank();
  IntMatrix m(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 2;
  for (auto [a, b] : dynkin_edges(t)) m[a][b] = m[b][a] = -1;
  return m;
}

long long determinant(const IntMatrix& input) {
  const std::size_t n = input.size();
  if (n == 0) return 1;
  IntMatrix m = input;
  long long sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

long long cartan_determinant(const DynkinType& t) { return determinant(cartan_matrix(t)); }

long long local_pi1_order(const DynkinType& t) {
  switch (t.family()) {
    case Family::A: return t.rank() + 1;
    case Family::D: return 4LL * (t.rank() - 2);
    case Family::E: return t.rank() == 6 ? 24 : t.rank() == 7 ? 48 : 120;
  }
  return 0;
}

std::vector<DynkinType> types_with_order(long long n, const SearchBounds& bounds) {
  std::vector<DynkinType> out;
  for (int k = 1; k <= bounds.max_a; ++k) {
    if (k + 1 == n) out.push_back(A(k));
  }
  for (int k = 4; k <= bounds.max_d; ++k) {
    if (4LL * (k - 2) == n) out.push_back(D(k));
  }
  for (int k = 6; k <= 8; ++k) {
    if (local_pi1_order(E(k)) == n) out.push_back(E(k));
  }
  return out;
}

int config_rank(const SingularityConfig& s) {
  int r = 0;
  for (const auto& t : s.types()) r += t.rank();
  return r;
}

std::vector<long long> config_orders(const SingularityConfig& s) {
  std::vector<long long> out;
  for (const auto& t : s.types()) out.push_back(local_pi1_order(t));
  return out;
}

// ---------------------------------------------------------------- curves

void CurveConfig::validate() const {
  const std::size_t n = labels.size();
  if (matrix.size() != n) throw PreconditionError("intersection matrix size does not match label count");
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix[i].size() != n) throw PreconditionError("intersection matrix is not square");
    for (std::size_t j = 0; j < n; ++j) {
      if (matrix[i][j] != matrix[j][i]) {
        throw PreconditionError("intersection matrix not symmetric at " + labels[i] + "," + labels[j]);
      }
      if (i != j && matrix[i][j] < 0) {
        throw PreconditionError("negative intersection between distinct curves " + labels[i] + "," + labels[j]);
      }
    }
  }
  if (!multiplicities.empty() && multiplicities.size() != n) {
    throw PreconditionError("multiplicity count does not match label count");
  }
}

std::size_t CurveConfig::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == label) return i;
  }
  throw PreconditionError("no curve labelled \"" + std::string(label) + "\"");
}

CurveConfig dual_graph(const DynkinType& t) {
  CurveConfig c;
  IntMatrix m = cartan_matrix(t);
  for (auto& row : m) {
    for (auto& x : row) x = -x;
  }
  c.matrix = std::move(m);
  for (int i = 0; i < t.rank(); ++i) c.labels.push_back("C" + std::to_string(i + 1));
  return c;
}

CurveConfig ii_star_fibre() {
  CurveConfig c;
  c.labels = {"C1", "C2", "C3", "C4", "C5", "C6", "C4'", "C2'", "C3'"};
  c.multiplicities = {1, 2, 3, 4, 5, 6, 4, 2, 3};
  const std::size_t n = c.labels.size();
  c.matrix.assign(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) c.matrix[i][i] = -2;
  auto link = [&](std::size_t a, std::size_t b) { c.matrix[a][b] = c.matrix[b][a] = 1; };
  for (std::size_t i = 0; i + 1 < 8; ++i) link(i, i + 1);  // C1 - ... - C6 - C4' - C2'
  link(5, 8);                                               // C3' meets C6
  return c;
}

CurveConfig ii_star_with_section() {
  CurveConfig f = ii_star_fibre();
  CurveConfig c;
  c.labels.push_back("E");
  c.labels.insert(c.labels.end(), f.labels.begin(), f.labels.end());
  c.multiplicities.push_back(0);
  c.multiplicities.insert(c.multiplicities.end(), f.multiplicities.begin(), f.multiplicities.end());
  const std::size_t n = c.labels.size();
  c.matrix.assign(n, std::vector<long long>(n, 0));
  c.matrix[0][0] = -1;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = 0; j + 1 < n; ++j) c.matrix[i + 1][j + 1] = f.matrix[i][j];
  }
  c.matrix[0][1] = c.matrix[1][0] = 1;  // E.C1 = 1
  return c;
}

CurveConfig remove_curves(const CurveConfig& c, const std::vector<std::string>& labels) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (std::find(labels.begin(), labels.end(), c.labels[i]) == labels.end()) keep.push_back(i);
  }
  for (const auto& l : labels) (void)c.index_of(l);
  CurveConfig out;
  for (std::size_t i : keep) {
    out.labels.push_back(c.labels[i]);
    if (!c.multiplicities.empty()) out.multiplicities.push_back(c.multiplicities[i]);
    std::vector<long long> row;
    for (std::size_t j : keep) row.push_back(c.matrix[i][j]);
    out.matrix.push_back(std::move(row));
  }
  return out;
}

std::string reason_name(NotADE::Reason r) {
  switch (r) {
    case NotADE::Reason::Empty: return "empty";
    case NotADE::Reason::WrongSelfIntersection: return "wrong_self_intersection";
    case NotADE::Reason::Cycle: return "cycle";
    case NotADE::Reason::BranchDegree: return "branch_degree";
    case NotADE::Reason::Disconnected: return "disconnected";
    case NotADE::Reason::NotDynkinShape: return "not_dynkin_shape";
  }
  return "unknown";
}

Recognition recognize_dynkin(const CurveConfig& c) {
  c.validate();
  const std::size_t n = c.size();
  using R = NotADE::Reason;
  if (n == 0) return NotADE{R::Empty, "no curves"};
  for (std::size_t i = 0; i < n; ++i) {
    if (c.matrix[i][i] != -2) {
      return NotADE{R::WrongSelfIntersection, c.labels[i] + " has self-intersection " + std::to_string(c.matrix[i][i])};
    }
  }
  std::vector<std::vector<std::size_t>> adj(n);
  std::size_t edges = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (c.matrix[i][j] == 0) continue;
      if (c.matrix[i][j] > 1) {
        return NotADE{R::Cycle, c.labels[i] + " and " + c.labels[j] + " meet " + std::to_string(c.matrix[i][j]) + " times"};
      }
      adj[i].push_back(j);
      adj[j].push_back(i);
      ++edges;
    }
  }
  std::vector<bool> seen(n, false);
  std::queue<std::size_t> q;
  q.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!q.empty()) {
    auto v = q.front();
    q.pop();
    for (auto w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        q.push(w);
      }
    }
  }
  if (reached != n) return NotADE{R::Disconnected, "dual graph has more than one component"};
  if (edges != n - 1) return NotADE{R::Cycle, "dual graph contains a cycle"};
  std::vector<std::size_t> branches;
  for (std::size_t i = 0; i < n; ++i) {
    if (adj[i].size() > 3) {
      return NotADE{R::BranchDegree, c.labels[i] + " meets " + std::to_string(adj[i].size()) + " curves"};
    }
    if (adj[i].size() == 3) branches.push_back(i);
  }
  const int rank = static_cast<int>(n);
  if (branches.empty()) return A(rank);
  if (branches.size() > 1) return NotADE{R::NotDynkinShape, "more than one branch curve"};
  const std::size_t centre = branches[0];
  std::vector<int> arms;
  for (auto start : adj[centre]) {
    int len = 1;
    std::size_t prev = centre, cur = start;
    while (adj[cur].size() == 2) {
      std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return D(rank);
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return E(rank);
  return NotADE{R::NotDynkinShape, "arms " + std::to_string(arms[0]) + "," + std::to_string(arms[1]) + "," +
                                       std::to_string(arms[2]) + " form an affine or hyperbolic diagram"};
}

CurveConfig blow_down(const CurveConfig& c, std::size_t i) {
  c.validate();
  if (i >= c.size()) throw PreconditionError("curve index out of range");
  if (c.matrix[i][i] != -1) {
    throw PreconditionError("cannot contract " + c.labels[i] + ": self-intersection " + std::to_string(c.matrix[i][i]) +
                            " is not -1");
  }
  CurveConfig out;
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k != i) keep.push_back(k);
  }
  for (std::size_t a : keep) {
    out.labels.push_back(c.labels[a]);
    if (!c.multiplicities.empty()) out.multiplicities.push_back(c.multiplicities[a]);
    std::vector<long long> row;
    for (std::size_t b : keep) row.push_back(c.matrix[a][b] + c.matrix[a][i] * c.matrix[b][i]);
    out.matrix.push_back(std::move(row));
  }
  return out;
}

}  // namespace delpezzo::lattice
