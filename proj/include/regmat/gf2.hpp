#pragma once

// Dense linear algebra over GF(2).
//
// Vectors and matrix rows are bit-packed into a single 64-bit word, so every
// dimension is limited to 64. Bit (j-1) of a row word holds column j; bit
// (i-1) of a column word holds row i. All public element accessors take
// 1-based indices.

#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace regmat {

inline constexpr int kMaxDimension = 64;

class Gf2Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PivotOnZero : public Gf2Error {
 public:
  using Gf2Error::Gf2Error;
};

class NotInSpan : public Gf2Error {
 public:
  using Gf2Error::Gf2Error;
};

class SingularMatrix : public Gf2Error {
 public:
  using Gf2Error::Gf2Error;
};

class DimensionMismatch : public Gf2Error {
 public:
  using Gf2Error::Gf2Error;
};

/// Mask with the low `bits` bits set.
constexpr std::uint64_t low_mask(int bits) {
  return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

class Gf2Vector {
 public:
  Gf2Vector() = default;
  explicit Gf2Vector(int length, std::uint64_t bits = 0);

  /// Parses a string of '0'/'1' characters, entry 1 first.
  static Gf2Vector parse(std::string_view digits);

  int length() const { return length_; }
  std::uint64_t bits() const { return bits_; }

  bool at(int i) const;
  void set(int i, bool value = true);

  int weight() const;
  bool is_zero() const { return bits_ == 0; }

  Gf2Vector& operator+=(const Gf2Vector& other);
  friend Gf2Vector operator+(Gf2Vector lhs, const Gf2Vector& rhs) {
    lhs += rhs;
    return lhs;
  }

  /// Scalar product: parity of the AND.
  bool dot(const Gf2Vector& other) const;

  std::string to_string() const;

  friend bool operator==(const Gf2Vector&, const Gf2Vector&) = default;

 private:
  std::uint64_t bits_ = 0;
  int length_ = 0;
};

class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(int rows, int cols);

  static Gf2Matrix identity(int k);
  /// Rows given as '0'/'1' strings of equal length.
  static Gf2Matrix from_rows(std::initializer_list<std::string_view> rows);
  static Gf2Matrix from_row_masks(int cols, std::vector<std::uint64_t> rows);
  /// Columns given as words whose bit (i-1) is the entry in row i.
  static Gf2Matrix from_column_masks(int rows, std::span<const std::uint64_t> columns);

  int rows() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }

  bool at(int row, int col) const;
  void set(int row, int col, bool value = true);

  Gf2Vector row(int i) const { return Gf2Vector(cols_, rows_.at(i - 1)); }
  Gf2Vector column(int j) const { return Gf2Vector(rows(), column_mask(j)); }
  std::uint64_t column_mask(int j) const;
  std::vector<std::uint64_t> column_masks() const;
  std::span<const std::uint64_t> row_masks() const { return rows_; }

  void append_row(const Gf2Vector& v);

  Gf2Matrix transpose() const;
  /// Keeps the listed columns (1-based), in the given order.
  Gf2Matrix select_columns(std::span<const int> columns) const;
  /// Keeps the listed rows (1-based), in the given order.
  Gf2Matrix select_rows(std::span<const int> rows) const;

  Gf2Vector operator*(const Gf2Vector& v) const;

  std::string to_string() const;

  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

 private:
  std::vector<std::uint64_t> rows_;
  int cols_ = 0;
};

/// Reduced row echelon form with pivots chosen in column order 1..n.
struct Echelon {
  Gf2Matrix reduced;              // only the nonzero rows
  std::vector<int> pivot_columns; // 1-based, ascending; pivot of row i is pivot_columns[i-1]
};

Echelon reduced_echelon(const Gf2Matrix& m);

int rank(const Gf2Matrix& m);

/// Basis of the orthogonal complement of the row space, one row per
/// non-pivot column (ascending), each row of length cols().
Gf2Matrix nullspace_basis(const Gf2Matrix& m);

/// Every vector of the row span, zero vector first, no duplicates.
std::vector<Gf2Vector> row_space(const Gf2Matrix& m);

/// Basis exchange on a standard matrix: entries off the pivot row and pivot
/// column become x[g][d] + x[g][beta]*x[alpha][d]; the pivot row and column
/// are kept. Applying it twice at the same position is the identity.
Gf2Matrix pivot(const Gf2Matrix& m, int alpha, int beta);

/// Gauss-Jordan step: adds row alpha to every other row with a 1 in column
/// beta, leaving column beta equal to the alpha-th unit vector. Preserves rank.
Gf2Matrix eliminate(const Gf2Matrix& m, int alpha, int beta);

/// Coefficients c with basis_columns * c = target. Columns must be independent.
Gf2Vector solve_in_basis(const Gf2Matrix& basis_columns, const Gf2Vector& target);

Gf2Matrix inverse(const Gf2Matrix& g);

/// Preprocessed independent column set for repeated coordinate queries.
///
/// Stores an elimination basis whose entries remember which of the original
/// columns they combine, so each query costs one pass over the basis.
class ColumnBasis {
 public:
  explicit ColumnBasis(std::span<const std::uint64_t> columns);

  int size() const { return size_; }
  /// Bit t of the result is the coefficient of the t-th input column.
  /// Throws NotInSpan when the target is not a combination of the columns.
  std::uint64_t coordinates(std::uint64_t target) const;
  bool contains(std::uint64_t target) const;

 private:
  struct Entry {
    std::uint64_t vector;
    std::uint64_t combination;
  };
  std::vector<Entry> entries_;  // each entry has a distinct leading bit
  int size_ = 0;
};

/// Incremental span of column words; insert() reports whether the rank grew.
class XorBasis {
 public:
  bool insert(std::uint64_t v);
  bool contains(std::uint64_t v) const { return reduce(v) == 0; }
  std::uint64_t reduce(std::uint64_t v) const;
  int rank() const { return rank_; }

 private:
  std::uint64_t by_bit_[64] = {};
  int rank_ = 0;
};

/// Rank of a set of column words.
int span_rank(std::span<const std::uint64_t> vectors);

}  // namespace regmat
