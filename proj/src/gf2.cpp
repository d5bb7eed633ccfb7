#include "regmat/gf2.hpp"

#include <bit>
#include <sstream>

namespace regmat {

namespace {

void check_dimension(int d, const char* what) {
  if (d < 0 || d > kMaxDimension) {
    throw DimensionMismatch(std::string(what) + " must lie in [0, 64]");
  }
}

int highest_bit(std::uint64_t v) { return 63 - std::countl_zero(v); }

}  // namespace

Gf2Vector::Gf2Vector(int length, std::uint64_t bits) : bits_(bits), length_(length) {
  check_dimension(length, "vector length");
  if ((bits & ~low_mask(length)) != 0) {
    throw DimensionMismatch("vector bits exceed its length");
  }
}

Gf2Vector Gf2Vector::parse(std::string_view digits) {
  Gf2Vector v(static_cast<int>(digits.size()));
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] == '1') {
      v.set(static_cast<int>(i) + 1);
    } else if (digits[i] != '0') {
      throw Gf2Error("invalid GF(2) digit '" + std::string(1, digits[i]) + "'");
    }
  }
  return v;
}

bool Gf2Vector::at(int i) const {
  if (i < 1 || i > length_) throw std::out_of_range("vector index out of range");
  return (bits_ >> (i - 1)) & 1U;
}

void Gf2Vector::set(int i, bool value) {
  if (i < 1 || i > length_) throw std::out_of_range("vector index out of range");
  const std::uint64_t bit = std::uint64_t{1} << (i - 1);
  bits_ = value ? (bits_ | bit) : (bits_ & ~bit);
}

int Gf2Vector::weight() const { return std::popcount(bits_); }

Gf2Vector& Gf2Vector::operator+=(const Gf2Vector& other) {
  if (other.length_ != length_) throw DimensionMismatch("vector lengths differ");
  bits_ ^= other.bits_;
  return *this;
}

bool Gf2Vector::dot(const Gf2Vector& other) const {
  if (other.length_ != length_) throw DimensionMismatch("vector lengths differ");
  return std::popcount(bits_ & other.bits_) & 1;
}

std::string Gf2Vector::to_string() const {
  std::string s(static_cast<std::size_t>(length_), '0');
  for (int i = 0; i < length_; ++i) {
    if ((bits_ >> i) & 1U) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

Gf2Matrix::Gf2Matrix(int rows, int cols) : rows_(static_cast<std::size_t>(rows), 0), cols_(cols) {
  check_dimension(rows, "row count");
  check_dimension(cols, "column count");
}

Gf2Matrix Gf2Matrix::identity(int k) {
  Gf2Matrix m(k, k);
  for (int i = 0; i < k; ++i) m.rows_[static_cast<std::size_t>(i)] = std::uint64_t{1} << i;
  return m;
}

Gf2Matrix Gf2Matrix::from_rows(std::initializer_list<std::string_view> rows) {
  Gf2Matrix m;
  bool first = true;
  for (auto r : rows) {
    Gf2Vector v = Gf2Vector::parse(r);
    if (first) {
      m.cols_ = v.length();
      first = false;
    }
    m.append_row(v);
  }
  return m;
}

Gf2Matrix Gf2Matrix::from_row_masks(int cols, std::vector<std::uint64_t> rows) {
  Gf2Matrix m(0, cols);
  check_dimension(static_cast<int>(rows.size()), "row count");
  for (auto r : rows) {
    if ((r & ~low_mask(cols)) != 0) throw DimensionMismatch("row exceeds column count");
  }
  m.rows_ = std::move(rows);
  return m;
}

Gf2Matrix Gf2Matrix::from_column_masks(int rows, std::span<const std::uint64_t> columns) {
  Gf2Matrix m(rows, static_cast<int>(columns.size()));
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if ((columns[j] & ~low_mask(rows)) != 0) throw DimensionMismatch("column exceeds row count");
    for (int i = 0; i < rows; ++i) {
      if ((columns[j] >> i) & 1U) m.rows_[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
    }
  }
  return m;
}

bool Gf2Matrix::at(int row, int col) const {
  if (col < 1 || col > cols_) throw std::out_of_range("column index out of range");
  return (rows_.at(static_cast<std::size_t>(row - 1)) >> (col - 1)) & 1U;
}

void Gf2Matrix::set(int row, int col, bool value) {
  if (col < 1 || col > cols_) throw std::out_of_range("column index out of range");
  auto& r = rows_.at(static_cast<std::size_t>(row - 1));
  const std::uint64_t bit = std::uint64_t{1} << (col - 1);
  r = value ? (r | bit) : (r & ~bit);
}

std::uint64_t Gf2Matrix::column_mask(int j) const {
  if (j < 1 || j > cols_) throw std::out_of_range("column index out of range");
  std::uint64_t c = 0;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    c |= ((rows_[i] >> (j - 1)) & 1U) << i;
  }
  return c;
}

std::vector<std::uint64_t> Gf2Matrix::column_masks() const {
  std::vector<std::uint64_t> cols(static_cast<std::size_t>(cols_), 0);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    std::uint64_t r = rows_[i];
    while (r != 0) {
      const int j = std::countr_zero(r);
      cols[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
      r &= r - 1;
    }
  }
  return cols;
}

void Gf2Matrix::append_row(const Gf2Vector& v) {
  if (v.length() != cols_) throw DimensionMismatch("row length differs from column count");
  if (rows_.size() >= static_cast<std::size_t>(kMaxDimension)) {
    throw DimensionMismatch("row count must lie in [0, 64]");
  }
  rows_.push_back(v.bits());
}

Gf2Matrix Gf2Matrix::transpose() const { return from_row_masks(rows(), column_masks()); }

Gf2Matrix Gf2Matrix::select_columns(std::span<const int> columns) const {
  Gf2Matrix out(rows(), static_cast<int>(columns.size()));
  for (std::size_t t = 0; t < columns.size(); ++t) {
    const int j = columns[t];
    if (j < 1 || j > cols_) throw std::out_of_range("column index out of range");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      out.rows_[i] |= ((rows_[i] >> (j - 1)) & 1U) << t;
    }
  }
  return out;
}

Gf2Matrix Gf2Matrix::select_rows(std::span<const int> rows) const {
  Gf2Matrix out(0, cols_);
  for (int i : rows) out.rows_.push_back(rows_.at(static_cast<std::size_t>(i - 1)));
  return out;
}

Gf2Vector Gf2Matrix::operator*(const Gf2Vector& v) const {
  if (v.length() != cols_) throw DimensionMismatch("matrix-vector shapes differ");
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    out |= static_cast<std::uint64_t>(std::popcount(rows_[i] & v.bits()) & 1) << i;
  }
  return Gf2Vector(rows(), out);
}

std::string Gf2Matrix::to_string() const {
  std::ostringstream os;
  for (auto r : rows_) os << Gf2Vector(cols_, r).to_string() << '\n';
  return os.str();
}

Echelon reduced_echelon(const Gf2Matrix& m) {
  std::vector<std::uint64_t> rows(m.row_masks().begin(), m.row_masks().end());
  std::vector<int> pivots;
  std::size_t next = 0;
  for (int c = 0; c < m.cols() && next < rows.size(); ++c) {
    const std::uint64_t bit = std::uint64_t{1} << c;
    std::size_t p = next;
    while (p < rows.size() && !(rows[p] & bit)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[next]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != next && (rows[i] & bit)) rows[i] ^= rows[next];
    }
    pivots.push_back(c + 1);
    ++next;
  }
  rows.resize(next);
  return {Gf2Matrix::from_row_masks(m.cols(), std::move(rows)), std::move(pivots)};
}

int rank(const Gf2Matrix& m) { return span_rank(m.row_masks()); }

Gf2Matrix nullspace_basis(const Gf2Matrix& m) {
  const Echelon e = reduced_echelon(m);
  std::uint64_t pivot_set = 0;
  for (int p : e.pivot_columns) pivot_set |= std::uint64_t{1} << (p - 1);

  Gf2Matrix out(0, m.cols());
  for (int f = 0; f < m.cols(); ++f) {
    if ((pivot_set >> f) & 1U) continue;
    std::uint64_t v = std::uint64_t{1} << f;
    for (std::size_t i = 0; i < e.pivot_columns.size(); ++i) {
      if ((e.reduced.row_masks()[i] >> f) & 1U) v |= std::uint64_t{1} << (e.pivot_columns[i] - 1);
    }
    out.append_row(Gf2Vector(m.cols(), v));
  }
  return out;
}

std::vector<Gf2Vector> row_space(const Gf2Matrix& m) {
  const Echelon e = reduced_echelon(m);
  const auto basis = e.reduced.row_masks();
  const std::size_t count = std::size_t{1} << basis.size();
  std::vector<Gf2Vector> out;
  out.reserve(count);
  // Gray-code walk: each step toggles one basis row.
  std::uint64_t v = 0;
  out.emplace_back(m.cols(), v);
  for (std::size_t step = 1; step < count; ++step) {
    v ^= basis[static_cast<std::size_t>(std::countr_zero(step))];
    out.emplace_back(m.cols(), v);
  }
  return out;
}

Gf2Matrix pivot(const Gf2Matrix& m, int alpha, int beta) {
  if (!m.at(alpha, beta)) throw PivotOnZero("pivot entry is zero");
  const std::uint64_t pivot_row = m.row_masks()[static_cast<std::size_t>(alpha - 1)];
  const std::uint64_t beta_bit = std::uint64_t{1} << (beta - 1);
  std::vector<std::uint64_t> rows(m.row_masks().begin(), m.row_masks().end());
  for (std::size_t g = 0; g < rows.size(); ++g) {
    if (static_cast<int>(g) == alpha - 1 || !(rows[g] & beta_bit)) continue;
    rows[g] ^= pivot_row & ~beta_bit;
  }
  return Gf2Matrix::from_row_masks(m.cols(), std::move(rows));
}

Gf2Matrix eliminate(const Gf2Matrix& m, int alpha, int beta) {
  if (!m.at(alpha, beta)) throw PivotOnZero("pivot entry is zero");
  const std::uint64_t pivot_row = m.row_masks()[static_cast<std::size_t>(alpha - 1)];
  const std::uint64_t beta_bit = std::uint64_t{1} << (beta - 1);
  std::vector<std::uint64_t> rows(m.row_masks().begin(), m.row_masks().end());
  for (std::size_t g = 0; g < rows.size(); ++g) {
    if (static_cast<int>(g) != alpha - 1 && (rows[g] & beta_bit)) rows[g] ^= pivot_row;
  }
  return Gf2Matrix::from_row_masks(m.cols(), std::move(rows));
}

Gf2Vector solve_in_basis(const Gf2Matrix& basis_columns, const Gf2Vector& target) {
  if (target.length() != basis_columns.rows()) {
    throw DimensionMismatch("target length differs from basis column length");
  }
  const auto cols = basis_columns.column_masks();
  ColumnBasis basis(cols);
  if (basis.size() != basis_columns.cols()) throw Gf2Error("basis columns are dependent");
  return Gf2Vector(basis_columns.cols(), basis.coordinates(target.bits()));
}

Gf2Matrix inverse(const Gf2Matrix& g) {
  if (g.rows() != g.cols()) throw SingularMatrix("matrix is not square");
  const auto cols = g.column_masks();
  ColumnBasis basis(cols);
  if (basis.size() != g.cols()) throw SingularMatrix("matrix is singular");
  // Column j of the inverse holds the coordinates of the j-th unit vector.
  std::vector<std::uint64_t> inv_cols;
  for (int j = 0; j < g.rows(); ++j) inv_cols.push_back(basis.coordinates(std::uint64_t{1} << j));
  return Gf2Matrix::from_column_masks(g.rows(), inv_cols);
}

ColumnBasis::ColumnBasis(std::span<const std::uint64_t> columns) {
  for (std::size_t t = 0; t < columns.size(); ++t) {
    Entry e{columns[t], std::uint64_t{1} << t};
    for (const auto& b : entries_) {
      if (e.vector & (std::uint64_t{1} << highest_bit(b.vector))) {
        e.vector ^= b.vector;
        e.combination ^= b.combination;
      }
    }
    if (e.vector == 0) continue;
    // Keep entries fully reduced against each other's leading bits.
    const std::uint64_t lead = std::uint64_t{1} << highest_bit(e.vector);
    for (auto& b : entries_) {
      if (b.vector & lead) {
        b.vector ^= e.vector;
        b.combination ^= e.combination;
      }
    }
    entries_.push_back(e);
    ++size_;
  }
}

std::uint64_t ColumnBasis::coordinates(std::uint64_t target) const {
  std::uint64_t combination = 0;
  for (const auto& b : entries_) {
    if (target & (std::uint64_t{1} << highest_bit(b.vector))) {
      target ^= b.vector;
      combination ^= b.combination;
    }
  }
  if (target != 0) throw NotInSpan("target is not in the span of the basis columns");
  return combination;
}

bool ColumnBasis::contains(std::uint64_t target) const {
  for (const auto& b : entries_) {
    if (target & (std::uint64_t{1} << highest_bit(b.vector))) target ^= b.vector;
  }
  return target == 0;
}

bool XorBasis::insert(std::uint64_t v) {
  v = reduce(v);
  if (v == 0) return false;
  by_bit_[highest_bit(v)] = v;
  ++rank_;
  return true;
}

std::uint64_t XorBasis::reduce(std::uint64_t v) const {
  while (v != 0) {
    const int h = highest_bit(v);
    if (by_bit_[h] == 0) return v;
    v ^= by_bit_[h];
  }
  return 0;
}

int span_rank(std::span<const std::uint64_t> vectors) {
  XorBasis b;
  for (auto v : vectors) b.insert(v);
  return b.rank();
}

}  // namespace regmat
