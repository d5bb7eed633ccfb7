#include "regmat/tutte.hpp"

#include <bit>
#include <ostream>
#include <sstream>

#include "regmat/gf2.hpp"

namespace regmat {

TuttePolynomial::TuttePolynomial(int rank, int size) : rank_(rank), size_(size) {
  if (rank < 0 || size < rank) throw TutteError("need 0 <= rank <= size");
  coeff_.assign(static_cast<std::size_t>(rank + 1) * static_cast<std::size_t>(size - rank + 1), 0);
}

std::uint64_t TuttePolynomial::coefficient(int i, int j) const {
  if (i < 0 || i > rank_ || j < 0 || j > size_ - rank_) return 0;
  return coeff_[static_cast<std::size_t>(i) * static_cast<std::size_t>(size_ - rank_ + 1) + static_cast<std::size_t>(j)];
}

std::uint64_t& TuttePolynomial::coefficient(int i, int j) {
  if (i < 0 || i > rank_ || j < 0 || j > size_ - rank_) throw TutteError("coefficient index out of range");
  return coeff_[static_cast<std::size_t>(i) * static_cast<std::size_t>(size_ - rank_ + 1) + static_cast<std::size_t>(j)];
}

std::uint64_t TuttePolynomial::total() const {
  std::uint64_t sum = 0;
  for (auto c : coeff_) sum += c;
  return sum;
}

TuttePolynomial TuttePolynomial::transpose() const {
  TuttePolynomial t(size_ - rank_, size_);
  for (int i = 0; i <= rank_; ++i) {
    for (int j = 0; j <= size_ - rank_; ++j) t.coefficient(j, i) = coefficient(i, j);
  }
  return t;
}

TuttePolynomial& TuttePolynomial::operator+=(const TuttePolynomial& other) {
  if (other.rank_ != rank_ || other.size_ != size_) throw TutteError("adding polynomials of different shapes");
  for (std::size_t i = 0; i < coeff_.size(); ++i) coeff_[i] += other.coeff_[i];
  return *this;
}

std::string TuttePolynomial::to_text() const {
  std::ostringstream os;
  os << rank_ << ' ' << size_ << '\n';
  for (int i = 0; i <= rank_; ++i) {
    for (int j = 0; j <= size_ - rank_; ++j) os << (j ? " " : "") << coefficient(i, j);
    os << '\n';
  }
  return os.str();
}

TuttePolynomial TuttePolynomial::from_text(const std::string& text) {
  std::istringstream is(text);
  int k = 0;
  int n = 0;
  if (!(is >> k >> n)) throw TutteError("missing 'k n' header");
  TuttePolynomial t(k, n);
  for (int i = 0; i <= k; ++i) {
    for (int j = 0; j <= n - k; ++j) {
      if (!(is >> t.coefficient(i, j))) throw TutteError("truncated coefficient grid");
    }
  }
  std::string rest;
  if (is >> rest) throw TutteError("trailing data after coefficient grid");
  return t;
}

std::string TuttePolynomial::to_inline() const {
  std::ostringstream os;
  for (int i = 0; i <= rank_; ++i) {
    if (i) os << ';';
    for (int j = 0; j <= size_ - rank_; ++j) os << (j ? "," : "") << coefficient(i, j);
  }
  return os.str();
}

std::string TuttePolynomial::to_expression() const {
  std::ostringstream os;
  bool first = true;
  auto power = [&os](char var, int e) {
    if (e == 1) os << var;
    if (e > 1) os << var << '^' << e;
  };
  for (int i = rank_; i >= 0; --i) {
    for (int j = 0; j <= size_ - rank_; ++j) {
      const auto c = coefficient(i, j);
      if (c == 0) continue;
      if (!first) os << " + ";
      first = false;
      if (c != 1 || (i == 0 && j == 0)) os << c;
      if (c != 1 && (i || j)) os << '*';
      power('x', i);
      if (i && j) os << '*';
      power('y', j);
    }
  }
  if (first) os << '0';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const TuttePolynomial& t) { return os << t.to_expression(); }

std::vector<GroundSubset> bases(const BinaryMatroid& m) {
  const int n = m.size();
  const int k = m.rank();
  std::vector<GroundSubset> out;
  GroundSubset chosen;

  auto search = [&](auto&& self, int next, const XorBasis& span) -> void {
    if (span.rank() == k) {
      out.push_back(chosen);
      return;
    }
    if (span.rank() + (n - next + 1) < k) return;
    XorBasis reach = span;
    for (int e = next; e <= n; ++e) reach.insert(m.column(e));
    if (reach.rank() < k) return;
    for (int e = next; e <= n; ++e) {
      XorBasis extended = span;
      if (!extended.insert(m.column(e))) continue;
      chosen.insert(e);
      self(self, e + 1, extended);
      chosen.erase(e);
    }
  };
  search(search, 1, XorBasis{});
  return out;
}

namespace {

std::vector<std::uint64_t> columns_of(const BinaryMatroid& m, GroundSubset s) {
  std::vector<std::uint64_t> cols;
  for (int e : s.elements()) cols.push_back(m.column(e));
  return cols;
}

void check_basis(const BinaryMatroid& m, GroundSubset basis) {
  if (!basis.is_subset_of(m.ground()) || basis.size() != m.rank() || !m.is_independent(basis)) {
    throw TutteError("set " + basis.shorthand() + " is not a basis");
  }
}

// Fundamental circuit of x from the coordinates of column x in the basis.
GroundSubset circuit_from(const ColumnBasis& solver, const std::vector<int>& basis_elements, std::uint64_t column,
                          int x) {
  GroundSubset c{x};
  for (std::uint64_t coords = solver.coordinates(column); coords != 0; coords &= coords - 1) {
    c.insert(basis_elements[static_cast<std::size_t>(std::countr_zero(coords))]);
  }
  return c;
}

int external_activity_unchecked(const BinaryMatroid& m, GroundSubset basis) {
  const auto elems = basis.elements();
  const ColumnBasis solver(columns_of(m, basis));
  int active = 0;
  for (int x : (m.ground() - basis).elements()) {
    GroundSubset rest = circuit_from(solver, elems, m.column(x), x);
    rest.erase(x);
    if (rest.max() < x) ++active;
  }
  return active;
}

}  // namespace

GroundSubset fundamental_circuit(const BinaryMatroid& m, GroundSubset basis, int x) {
  check_basis(m, basis);
  if (x < 1 || x > m.size() || basis.contains(x)) throw TutteError("element must lie outside the basis");
  const ColumnBasis solver(columns_of(m, basis));
  return circuit_from(solver, basis.elements(), m.column(x), x);
}

int external_activity(const BinaryMatroid& m, GroundSubset basis) {
  check_basis(m, basis);
  return external_activity_unchecked(m, basis);
}

int internal_activity(const BinaryMatroid& m, GroundSubset basis) {
  check_basis(m, basis);
  return external_activity_unchecked(dual(m), m.ground() - basis);
}

TuttePolynomial tutte_by_activities(const BinaryMatroid& m) {
  TuttePolynomial t(m.rank(), m.size());
  const BinaryMatroid d = dual(m);
  for (auto b : bases(m)) {
    const int e = external_activity_unchecked(m, b);
    const int i = external_activity_unchecked(d, m.ground() - b);
    ++t.coefficient(i, e);
  }
  return t;
}

TuttePolynomial tutte_by_deletion_contraction(const BinaryMatroid& m) {
  TuttePolynomial t(m.rank(), m.size());
  int loops = 0;
  int coloops = 0;
  int pivot = 0;
  for (int e = 1; e <= m.size(); ++e) {
    if (m.is_loop(e)) {
      ++loops;
    } else if (m.is_coloop(e)) {
      ++coloops;
    } else if (pivot == 0) {
      pivot = e;
    }
  }
  if (pivot == 0) {
    t.coefficient(coloops, loops) = 1;
    return t;
  }
  const TuttePolynomial deleted = tutte_by_deletion_contraction(delete_elements(m, GroundSubset{pivot}));
  const TuttePolynomial contracted = tutte_by_deletion_contraction(contract_element(m, pivot));
  for (int i = 0; i <= m.rank(); ++i) {
    for (int j = 0; j <= m.size() - m.rank(); ++j) {
      t.coefficient(i, j) = deleted.coefficient(i, j) + contracted.coefficient(i, j);
    }
  }
  return t;
}

std::int64_t evaluate(const TuttePolynomial& t, std::int64_t x, std::int64_t y) {
  auto checked_mul = [](std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) throw TutteError("Tutte evaluation overflows 64 bits");
    return r;
  };
  auto checked_add = [](std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) throw TutteError("Tutte evaluation overflows 64 bits");
    return r;
  };
  std::int64_t sum = 0;
  std::int64_t x_power = 1;
  for (int i = 0; i <= t.rank(); ++i) {
    std::int64_t term = x_power;
    for (int j = 0; j <= t.size() - t.rank(); ++j) {
      const auto c = t.coefficient(i, j);
      if (c > static_cast<std::uint64_t>(INT64_MAX)) throw TutteError("coefficient exceeds 64-bit signed range");
      if (c != 0) sum = checked_add(sum, checked_mul(static_cast<std::int64_t>(c), term));
      if (j < t.size() - t.rank()) term = checked_mul(term, y);
    }
    if (i < t.rank()) x_power = checked_mul(x_power, x);
  }
  return sum;
}

}  // namespace regmat
