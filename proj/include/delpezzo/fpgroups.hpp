#pragma once

// Finitely presented groups: coset enumeration over the trivial subgroup,
// Smith normal form, abelianization and Hom counts into cyclic groups.

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace delpezzo::fpgroups {

using BigInt = mpz_class;

/// Letters are 1-based generator indices; a negative letter is an inverse.
using Word = std::vector<int>;

struct Presentation {
  int generators = 0;
  std::vector<Word> relators;

  /// Throws PreconditionError on empty relators or out-of-range letters.
  void validate() const;
  /// Text form accepted by parse_presentation, e.g. "gens=2; rel=1 2 1 2 1^-3".
  std::string to_string() const;
};

/// <e2, e3 | (e2 e3)^2 = e2^3 = e3^(i-3)> for 4 <= i <= 8, with relators
/// (e2 e3)^2 e2^-3 and e2^3 e3^-(i-3).
Presentation mumford_presentation(int i);

/// Parses "gens=2; rel=(1 2)^2 * 1^-3; rel=1^3 * 2^-(i-3)". Exponents may be
/// integer expressions over the names bound in `params`.
Presentation parse_presentation(std::string_view text, const std::map<std::string, long long>& params = {});

inline constexpr std::size_t kDefaultCosetBound = 10000;

/// Column 2k is generator k+1, column 2k+1 its inverse; -1 marks an empty slot.
struct CosetTable {
  int generators = 0;
  std::vector<std::vector<int>> rows;

  std::size_t size() const { return rows.size(); }
  /// Coset reached from `coset` by reading `w`; -1 if the table is incomplete along w.
  int act(int coset, const Word& w) const;
};

struct EnumerationResult {
  std::optional<std::size_t> order;  // set when the enumeration completed
  CosetTable table;                  // compacted; complete iff order is set
  std::size_t cosets_defined = 0;
  std::size_t bound = 0;

  bool exceeded() const { return !order.has_value(); }
};

/// Hasselgrove-Leech-Trotter enumeration of the cosets of the trivial
/// subgroup, defining cosets in scanning order without lookahead. Exceeds
/// when more than `bound` cosets would have to be defined.
EnumerationResult coset_enumerate(const Presentation& p, std::size_t bound = kDefaultCosetBound);

class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> init);
  static IntegerMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntegerMatrix operator*(const IntegerMatrix& o) const;
  friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<BigInt> data_;
};

/// Exact determinant of a square matrix.
BigInt determinant(const IntegerMatrix& m);

struct SmithForm {
  IntegerMatrix U, D, V;  // U * M * V == D
};

/// D is diagonal with nonnegative entries d1 | d2 | ... (zeros last);
/// U and V are unimodular.
SmithForm smith_normal_form(const IntegerMatrix& m);

/// Relator-by-generator matrix of exponent sums.
IntegerMatrix exponent_matrix(const Presentation& p);

struct Abelianization {
  std::vector<BigInt> torsion;  // invariant factors > 1, in divisibility order
  int free_rank = 0;

  bool is_trivial() const { return torsion.empty() && free_rank == 0; }
  bool is_cyclic() const { return torsion.size() + free_rank <= 1; }
  /// |G^ab|, or 0 when infinite.
  BigInt order() const;
  /// "trivial", "Z/3", "Z/2 + Z/4 + Z^1".
  std::string to_string() const;
};

Abelianization abelianization(const Presentation& p);

/// |Hom(G, Z/d)| = |Hom(G^ab, Z/d)| = d^free_rank * prod gcd(t_i, d).
BigInt hom_count_cyclic(const Presentation& p, long d);

}  // namespace delpezzo::fpgroups
