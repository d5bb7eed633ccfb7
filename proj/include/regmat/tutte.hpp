#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "regmat/matroid.hpp"

namespace regmat {

class TutteError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Coefficient grid of sum t[i][j] x^i y^j with 0 <= i <= k, 0 <= j <= n-k.
class TuttePolynomial {
 public:
  TuttePolynomial() = default;
  TuttePolynomial(int rank, int size);

  int rank() const { return rank_; }
  int size() const { return size_; }

  std::uint64_t coefficient(int i, int j) const;
  std::uint64_t& coefficient(int i, int j);

  /// Sum of all coefficients, i.e. T(1, 1).
  std::uint64_t total() const;
  TuttePolynomial transpose() const;

  TuttePolynomial& operator+=(const TuttePolynomial& other);

  /// Header "k n" followed by k+1 lines of n-k+1 integers.
  std::string to_text() const;
  static TuttePolynomial from_text(const std::string& text);

  /// Rows joined by ';', entries by ',' as in "0,1;1,0".
  std::string to_inline() const;

  /// Human-readable sum, e.g. "x^2 + x + y".
  std::string to_expression() const;

  friend bool operator==(const TuttePolynomial&, const TuttePolynomial&) = default;

 private:
  int rank_ = 0;
  int size_ = 0;
  std::vector<std::uint64_t> coeff_;  // row-major, (rank+1) x (size-rank+1)
};

std::ostream& operator<<(std::ostream& os, const TuttePolynomial& t);

struct ActivityPair {
  int internal = 0;
  int external = 0;
};

/// All bases in lexicographic order of their ascending element lists.
std::vector<GroundSubset> bases(const BinaryMatroid& m);

/// The unique circuit inside basis + {x}, for x outside the basis.
GroundSubset fundamental_circuit(const BinaryMatroid& m, GroundSubset basis, int x);

/// Number of x outside the basis that are the largest element of their
/// fundamental circuit.
int external_activity(const BinaryMatroid& m, GroundSubset basis);

/// Number of basis elements that are the largest element of their
/// fundamental cocircuit, evaluated as the external activity of the
/// complementary basis of the dual.
int internal_activity(const BinaryMatroid& m, GroundSubset basis);

TuttePolynomial tutte_by_activities(const BinaryMatroid& m);

/// Reference evaluator: delete/contract the smallest element that is neither
/// a loop nor a coloop until only loops and coloops remain.
TuttePolynomial tutte_by_deletion_contraction(const BinaryMatroid& m);

/// Exact evaluation; throws TutteError on 64-bit overflow.
std::int64_t evaluate(const TuttePolynomial& t, std::int64_t x, std::int64_t y);

}  // namespace regmat
