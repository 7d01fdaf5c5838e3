#pragma once

// ADE Dynkin types, curve configurations and the contraction calculus for
// (-1)-curves.

#include <compare>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace delpezzo::lattice {

enum class Family { A, D, E };

/// A_n (n >= 1), D_n (n >= 4) or E_n (n in 6, 7, 8).
class DynkinType {
 public:
  DynkinType(Family family, int n);
  static DynkinType parse(std::string_view name);

  Family family() const { return family_; }
  int rank() const { return n_; }
  std::string name() const;

  friend bool operator==(const DynkinType&, const DynkinType&) = default;
  friend auto operator<=>(const DynkinType&, const DynkinType&) = default;

 private:
  Family family_;
  int n_;
};

inline DynkinType A(int n) { return {Family::A, n}; }
inline DynkinType D(int n) { return {Family::D, n}; }
inline DynkinType E(int n) { return {Family::E, n}; }

/// Multiset of singular-point types, kept sorted so equal multisets compare equal.
class SingularityConfig {
 public:
  SingularityConfig() = default;
  SingularityConfig(std::vector<DynkinType> types);
  SingularityConfig(std::initializer_list<DynkinType> types) : SingularityConfig(std::vector<DynkinType>(types)) {}
  /// Parses "D4+3A1", "A1+A2", "4A2"; the empty string or "smooth" is the empty config.
  static SingularityConfig parse(std::string_view text);

  const std::vector<DynkinType>& types() const { return types_; }
  std::size_t size() const { return types_.size(); }
  bool empty() const { return types_.empty(); }
  void add(DynkinType t);

  /// Compact form grouping repeats, largest types first: "D4+3A1".
  std::string to_string() const;
  /// One name per point, in canonical order: ["A1","A1","A1","D4"].
  std::vector<std::string> names() const;

  friend bool operator==(const SingularityConfig&, const SingularityConfig&) = default;
  friend auto operator<=>(const SingularityConfig&, const SingularityConfig&) = default;

 private:
  std::vector<DynkinType> types_;
};

using IntMatrix = std::vector<std::vector<long long>>;

/// Positive-definite Cartan matrix (2 on the diagonal, -1 per edge).
IntMatrix cartan_matrix(const DynkinType& t);
/// Exact determinant by fraction-free elimination.
long long determinant(const IntMatrix& m);
long long cartan_determinant(const DynkinType& t);

/// Order of the binary polyhedral group of the singularity.
long long local_pi1_order(const DynkinType& t);

struct SearchBounds {
  int max_a = 24;
  int max_d = 12;
};

/// Every type in A1..A{max_a}, D4..D{max_d}, E6..E8 whose local group has order n.
std::vector<DynkinType> types_with_order(long long n, const SearchBounds& bounds = {});

int config_rank(const SingularityConfig& s);
std::vector<long long> config_orders(const SingularityConfig& s);

/// Smooth rational curves with their intersection matrix (diagonal entries are
/// self-intersections) and optional fibre multiplicities.
struct CurveConfig {
  std::vector<std::string> labels;
  IntMatrix matrix;
  std::vector<int> multiplicities;  // empty when not tracked

  std::size_t size() const { return labels.size(); }
  /// Throws PreconditionError unless square, symmetric, labelled, with
  /// nonnegative off-diagonal entries.
  void validate() const;
  std::size_t index_of(std::string_view label) const;
};

/// Configuration of (-2)-curves realizing a Dynkin diagram.
CurveConfig dual_graph(const DynkinType& t);

/// Type II* fibre sum_{i=1}^6 i C_i + 4 C4' + 2 C2' + 3 C3', where
/// C1..C6, C4', C2' form a chain and C3' meets C6.
CurveConfig ii_star_fibre();
/// The II* fibre together with a (-1)-section E meeting C1 (placed first).
CurveConfig ii_star_with_section();
/// Removes the named curves.
CurveConfig remove_curves(const CurveConfig& c, const std::vector<std::string>& labels);

struct NotADE {
  enum class Reason { Empty, WrongSelfIntersection, Cycle, BranchDegree, Disconnected, NotDynkinShape };
  Reason reason;
  std::string detail;
};

std::string reason_name(NotADE::Reason r);

using Recognition = std::variant<DynkinType, NotADE>;

/// ADE type of a configuration of (-2)-curves, decided by diagram shape.
Recognition recognize_dynkin(const CurveConfig& c);

/// Contracts curve i, which must be a (-1)-curve:
/// C.D += (C.E)(D.E), C^2 += (C.E)^2.
CurveConfig blow_down(const CurveConfig& c, std::size_t i);

}  // namespace delpezzo::lattice
