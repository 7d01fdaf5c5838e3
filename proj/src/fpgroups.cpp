#include "delpezzo/fpgroups.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

#include "delpezzo/error.hpp"

namespace delpezzo::fpgroups {

// ------------------------------------------------------------- presentations

void Presentation::validate() const {
  if (generators < 0) throw PreconditionError("negative generator count");
  for (const auto& w : relators) {
    if (w.empty()) throw PreconditionError("empty relator");
    for (int letter : w) {
      if (letter == 0 || std::abs(letter) > generators) {
        throw PreconditionError("relator letter " + std::to_string(letter) + " outside 1.." + std::to_string(generators));
      }
    }
  }
}

std::string Presentation::to_string() const {
  std::ostringstream os;
  os << "gens=" << generators;
  for (const auto& w : relators) {
    os << "; rel=";
    std::size_t i = 0;
    bool first = true;
    while (i < w.size()) {
      std::size_t j = i;
      while (j < w.size() && w[j] == w[i]) ++j;
      long run = static_cast<long>(j - i);
      if (!first) os << ' ';
      first = false;
      os << std::abs(w[i]);
      long e = w[i] < 0 ? -run : run;
      if (e != 1) os << '^' << e;
      i = j;
    }
  }
  return os.str();
}

Presentation mumford_presentation(int i) {
  if (i < 4 || i > 8) {
    throw PreconditionError("boundary presentation needs 4 <= i <= 8 (finite groups only), got i=" + std::to_string(i));
  }
  Presentation p;
  p.generators = 2;
  p.relators.push_back({1, 2, 1, 2, -1, -1, -1});
  Word w{1, 1, 1};
  for (int k = 0; k < i - 3; ++k) w.push_back(-2);
  p.relators.push_back(w);
  return p;
}

namespace {

class PresentationParser {
 public:
  PresentationParser(std::string_view s, const std::map<std::string, long long>& params) : s_(s), params_(params) {}

  Presentation parse() {
    Presentation p;
    bool have_gens = false;
    std::vector<Word> rels;
    for (;;) {
      skip_ws();
      if (pos_ >= s_.size()) break;
      std::string key = ident();
      expect('=');
      if (key == "gens") {
        p.generators = static_cast<int>(integer());
        have_gens = true;
      } else if (key == "rel") {
        rels.push_back(word());
      } else {
        fail("unknown clause \"" + key + "\"");
      }
      skip_ws();
      if (pos_ < s_.size() && !eat(';')) fail("expected ';'");
    }
    if (!have_gens) fail("missing gens=");
    p.relators = std::move(rels);
    try {
      p.validate();
    } catch (const PreconditionError& e) {
      throw ParseError(std::string("presentation: ") + e.what());
    }
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("presentation \"" + std::string(s_) + "\": " + what + " at offset " + std::to_string(pos_));
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool eat(char c) {
    if (peek(c)) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  std::string ident() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (start == pos_ || std::isdigit(static_cast<unsigned char>(s_[start]))) fail("expected a name");
    return std::string(s_.substr(start, pos_ - start));
  }
  long long integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stoll(std::string(s_.substr(start, pos_ - start)));
  }

  // Sequence of factors, optionally separated by '*'.
  Word word() {
    Word w;
    for (;;) {
      skip_ws();
      if (pos_ >= s_.size() || s_[pos_] == ';' || s_[pos_] == ')') break;
      Word f = factor();
      w.insert(w.end(), f.begin(), f.end());
      eat('*');
    }
    if (w.empty()) fail("empty word");
    return w;
  }

  Word factor() {
    Word base;
    if (eat('(')) {
      base = word();
      expect(')');
    } else {
      bool neg = eat('-');
      long long g = integer();
      if (g == 0) fail("generators are numbered from 1");
      base.push_back(static_cast<int>(neg ? -g : g));
    }
    if (!eat('^')) return base;
    long long e = exponent();
    Word out;
    Word piece = base;
    if (e < 0) {
      std::reverse(piece.begin(), piece.end());
      for (int& l : piece) l = -l;
      e = -e;
    }
    if (e > 100000) fail("exponent too large");
    for (long long k = 0; k < e; ++k) out.insert(out.end(), piece.begin(), piece.end());
    if (out.empty()) fail("zero exponent produces an empty factor");
    return out;
  }

  long long exponent() {
    if (eat('-')) return -exponent();
    if (eat('(')) {
      long long v = expr();
      expect(')');
      return v;
    }
    skip_ws();
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) return integer();
    return lookup(ident());
  }

  long long expr() {
    long long v = term();
    for (;;) {
      if (eat('+')) v += term();
      else if (eat('-')) v -= term();
      else return v;
    }
  }

  long long term() {
    if (eat('-')) return -term();
    if (eat('(')) {
      long long v = expr();
      expect(')');
      return v;
    }
    skip_ws();
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) return integer();
    return lookup(ident());
  }

  long long lookup(const std::string& name) {
    auto it = params_.find(name);
    if (it == params_.end()) fail("unbound parameter \"" + name + "\"");
    return it->second;
  }

  std::string_view s_;
  const std::map<std::string, long long>& params_;
  std::size_t pos_ = 0;
};

}  // namespace

Presentation parse_presentation(std::string_view text, const std::map<std::string, long long>& params) {
  return PresentationParser(text, params).parse();
}

// -------------------------------------------------------- coset enumeration

int CosetTable::act(int coset, const Word& w) const {
  for (int letter : w) {
    if (coset < 0) return -1;
    int col = 2 * (std::abs(letter) - 1) + (letter < 0 ? 1 : 0);
    coset = rows[coset][col];
  }
  return coset;
}

namespace {

struct BoundExceeded {};

class Enumerator {
 public:
  Enumerator(const Presentation& p, std::size_t bound) : cols_(2 * p.generators), bound_(bound) {
    for (const auto& w : p.relators) {
      std::vector<int> r;
      for (int l : w) r.push_back(2 * (std::abs(l) - 1) + (l < 0 ? 1 : 0));
      relators_.push_back(std::move(r));
    }
  }

  EnumerationResult run() {
    EnumerationResult result;
    result.bound = bound_;
    try {
      new_coset();
      for (int alpha = 0; alpha < static_cast<int>(table_.size()); ++alpha) {
        for (const auto& r : relators_) {
          if (!live(alpha)) break;
          scan_and_fill(alpha, r);
        }
        for (int x = 0; x < cols_ && live(alpha); ++x) {
          if (table_[alpha][x] < 0) define(alpha, x);
        }
      }
    } catch (const BoundExceeded&) {
      result.cosets_defined = table_.size();
      result.table = compact();
      return result;
    }
    result.cosets_defined = table_.size();
    result.table = compact();
    result.order = result.table.size();
    return result;
  }

 private:
  static int inv(int x) { return x ^ 1; }
  bool live(int c) const { return parent_[c] == c; }

  int new_coset() {
    if (table_.size() >= bound_) throw BoundExceeded{};
    table_.emplace_back(cols_, -1);
    parent_.push_back(static_cast<int>(parent_.size()));
    return static_cast<int>(table_.size()) - 1;
  }

  void define(int c, int x) {
    int d = new_coset();
    table_[c][x] = d;
    table_[d][inv(x)] = c;
  }

  int rep(int c) {
    int root = c;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[c] != root) {
      int next = parent_[c];
      parent_[c] = root;
      c = next;
    }
    return root;
  }

  void merge(int a, int b, std::vector<int>& queue) {
    int ra = rep(a), rb = rep(b);
    if (ra == rb) return;
    int lo = std::min(ra, rb), hi = std::max(ra, rb);
    parent_[hi] = lo;
    queue.push_back(hi);
  }

  void coincidence(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      int gamma = queue[i];
      for (int x = 0; x < cols_; ++x) {
        int delta = table_[gamma][x];
        if (delta < 0) continue;
        table_[gamma][x] = -1;
        if (table_[delta][inv(x)] == gamma) table_[delta][inv(x)] = -1;
        int mu = rep(gamma), nu = rep(delta);
        if (table_[mu][x] >= 0) {
          merge(nu, table_[mu][x], queue);
        } else if (table_[nu][inv(x)] >= 0) {
          merge(mu, table_[nu][inv(x)], queue);
        } else {
          table_[mu][x] = nu;
          table_[nu][inv(x)] = mu;
        }
      }
    }
  }

  void scan_and_fill(int alpha, const std::vector<int>& w) {
    int f = alpha, b = alpha;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    for (;;) {
      while (i <= j && table_[f][w[i]] >= 0) f = table_[f][w[i++]];
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && table_[b][inv(w[j])] >= 0) b = table_[b][inv(w[j--])];
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        table_[f][w[i]] = b;
        table_[b][inv(w[i])] = f;
        return;
      }
      define(f, w[i]);
    }
  }

  CosetTable compact() {
    CosetTable t;
    t.generators = cols_ / 2;
    std::vector<int> index(table_.size(), -1);
    int next = 0;
    for (std::size_t c = 0; c < table_.size(); ++c) {
      if (live(static_cast<int>(c))) index[c] = next++;
    }
    for (std::size_t c = 0; c < table_.size(); ++c) {
      if (index[c] < 0) continue;
      std::vector<int> row(cols_, -1);
      for (int x = 0; x < cols_; ++x) {
        int d = table_[c][x];
        if (d >= 0) row[x] = index[rep(d)];
      }
      t.rows.push_back(std::move(row));
    }
    return t;
  }

  int cols_;
  std::size_t bound_;
  std::vector<std::vector<int>> relators_;
  std::vector<std::vector<int>> table_;
  std::vector<int> parent_;
};

}  // namespace

EnumerationResult coset_enumerate(const Presentation& p, std::size_t bound) {
  p.validate();
  if (bound < 1) throw PreconditionError("coset bound must be at least 1");
  return Enumerator(p, bound).run();
}

// ---------------------------------------------------------- integer matrices

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> init) {
  rows_ = init.size();
  cols_ = rows_ ? init.begin()->size() : 0;
  for (const auto& row : init) {
    if (row.size() != cols_) throw PreconditionError("ragged matrix literal");
    for (long v : row) data_.emplace_back(v);
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& o) const {
  if (cols_ != o.rows_) throw PreconditionError("matrix shapes do not compose");
  IntegerMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      if (at(i, k) == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
    }
  }
  return r;
}

BigInt determinant(const IntegerMatrix& input) {
  if (input.rows() != input.cols()) throw PreconditionError("determinant of a non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntegerMatrix m = input;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m.at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        mpz_divexact(m.at(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

namespace {

void swap_rows(IntegerMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}
void swap_cols(IntegerMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}
// row[dst] += q * row[src]
void add_row(IntegerMatrix& m, std::size_t dst, std::size_t src, const BigInt& q) {
  for (std::size_t j = 0; j < m.cols(); ++j) m.at(dst, j) += q * m.at(src, j);
}
void add_col(IntegerMatrix& m, std::size_t dst, std::size_t src, const BigInt& q) {
  for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, dst) += q * m.at(i, src);
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  SmithForm s{IntegerMatrix::identity(rows), m, IntegerMatrix::identity(cols)};
  IntegerMatrix& D = s.D;
  const std::size_t steps = std::min(rows, cols);
  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (D.at(i, j) != 0 && (pr == rows || abs(D.at(i, j)) < abs(D.at(pr, pc)))) {
            pr = i;
            pc = j;
          }
        }
      }
      if (pr == rows) break;  // trailing block is zero
      swap_rows(D, t, pr);
      swap_rows(s.U, t, pr);
      swap_cols(D, t, pc);
      swap_cols(s.V, t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (D.at(i, t) == 0) continue;
        BigInt q = -floor_div(D.at(i, t), D.at(t, t));
        add_row(D, i, t, q);
        add_row(s.U, i, t, q);
        if (D.at(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (D.at(t, j) == 0) continue;
        BigInt q = -floor_div(D.at(t, j), D.at(t, t));
        add_col(D, j, t, q);
        add_col(s.V, j, t, q);
        if (D.at(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // The pivot must divide the rest of the block.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (D.at(i, j) % D.at(t, t) != 0) {
            add_row(D, t, i, 1);
            add_row(s.U, t, i, 1);
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    if (D.at(t, t) < 0) {
      for (std::size_t j = 0; j < cols; ++j) D.at(t, j) = -D.at(t, j);
      for (std::size_t j = 0; j < rows; ++j) s.U.at(t, j) = -s.U.at(t, j);
    }
  }
  return s;
}

IntegerMatrix exponent_matrix(const Presentation& p) {
  p.validate();
  IntegerMatrix m(p.relators.size(), p.generators);
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    for (int letter : p.relators[r]) m.at(r, std::abs(letter) - 1) += letter > 0 ? 1 : -1;
  }
  return m;
}

BigInt Abelianization::order() const {
  if (free_rank > 0) return 0;
  BigInt o = 1;
  for (const auto& t : torsion) o *= t;
  return o;
}

std::string Abelianization::to_string() const {
  if (is_trivial()) return "trivial";
  std::string out;
  for (const auto& t : torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + t.get_str();
  }
  if (free_rank > 0) {
    if (!out.empty()) out += " + ";
    out += "Z^" + std::to_string(free_rank);
  }
  return out;
}

Abelianization abelianization(const Presentation& p) {
  IntegerMatrix m = exponent_matrix(p);
  Abelianization ab;
  int rank = 0;
  if (m.rows() > 0 && m.cols() > 0) {
    SmithForm s = smith_normal_form(m);
    for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) {
      const BigInt& d = s.D.at(i, i);
      if (d == 0) continue;
      ++rank;
      if (d > 1) ab.torsion.push_back(d);
    }
  }
  ab.free_rank = p.generators - rank;
  return ab;
}

BigInt hom_count_cyclic(const Presentation& p, long d) {
  if (d < 1) throw PreconditionError("hom_count_cyclic needs d >= 1");
  Abelianization ab = abelianization(p);
  BigInt count = 1;
  BigInt dd = d;
  for (int k = 0; k < ab.free_rank; ++k) count *= dd;
  for (const auto& t : ab.torsion) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), t.get_mpz_t(), dd.get_mpz_t());
    count *= g;
  }
  return count;
}

}  // namespace delpezzo::fpgroups
