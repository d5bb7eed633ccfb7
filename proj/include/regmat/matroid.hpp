#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "regmat/gf2.hpp"

namespace regmat {

class MatroidError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CorankTooLarge : public MatroidError {
 public:
  using MatroidError::MatroidError;
};

class DependentContractionSet : public MatroidError {
 public:
  using MatroidError::MatroidError;
};

class EnumerationTooLarge : public MatroidError {
 public:
  using MatroidError::MatroidError;
};

class OracleTooLarge : public MatroidError {
 public:
  using MatroidError::MatroidError;
};

/// Subset of a ground set {1..n}, n <= 64. Element e is bit (e-1).
class GroundSubset {
 public:
  constexpr GroundSubset() = default;
  explicit constexpr GroundSubset(std::uint64_t mask) : mask_(mask) {}
  GroundSubset(std::initializer_list<int> elements);

  static GroundSubset full(int n) { return GroundSubset(low_mask(n)); }

  constexpr std::uint64_t mask() const { return mask_; }
  bool contains(int e) const { return (mask_ >> (e - 1)) & 1U; }
  void insert(int e) { mask_ |= std::uint64_t{1} << (e - 1); }
  void erase(int e) { mask_ &= ~(std::uint64_t{1} << (e - 1)); }
  int size() const;
  bool empty() const { return mask_ == 0; }
  bool is_subset_of(GroundSubset other) const { return (mask_ & ~other.mask_) == 0; }
  /// Largest element; 0 for the empty set.
  int max() const;
  std::vector<int> elements() const;

  /// Elements concatenated when all are single digits ("126"), otherwise
  /// a braced list ("{1,10}"); the empty set prints as "{}".
  std::string shorthand() const;

  friend constexpr GroundSubset operator&(GroundSubset a, GroundSubset b) { return GroundSubset(a.mask_ & b.mask_); }
  friend constexpr GroundSubset operator|(GroundSubset a, GroundSubset b) { return GroundSubset(a.mask_ | b.mask_); }
  friend constexpr GroundSubset operator-(GroundSubset a, GroundSubset b) { return GroundSubset(a.mask_ & ~b.mask_); }
  friend constexpr bool operator==(GroundSubset, GroundSubset) = default;

 private:
  std::uint64_t mask_ = 0;
};

/// Lexicographic order of the ascending element lists.
bool lex_less(GroundSubset a, GroundSubset b);

using SubsetFamily = std::vector<GroundSubset>;

/// Sorts lexicographically and removes duplicates.
void normalize(SubsetFamily& family);

/// Column matroid of a k x n binary matrix of full row rank k.
class BinaryMatroid {
 public:
  BinaryMatroid() = default;
  /// Throws MatroidError unless the matrix has rank equal to its row count.
  explicit BinaryMatroid(Gf2Matrix matrix);

  /// Column matroid of an arbitrary matrix; rows are replaced by a row-space basis.
  static BinaryMatroid from_any_matrix(const Gf2Matrix& m);
  /// Matroid whose element e is the column with label labels[e-1].
  static BinaryMatroid from_labels(int k, std::span<const unsigned> labels);

  const Gf2Matrix& matrix() const { return matrix_; }
  int rank() const { return matrix_.rows(); }
  int size() const { return matrix_.cols(); }
  GroundSubset ground() const { return GroundSubset::full(size()); }

  /// Column of element e as a word (bit i-1 is row i), i.e. its label.
  std::uint64_t column(int e) const { return columns_[static_cast<std::size_t>(e - 1)]; }
  std::span<const std::uint64_t> columns() const { return columns_; }

  int rank_of(GroundSubset s) const;
  bool is_independent(GroundSubset s) const { return rank_of(s) == s.size(); }
  bool is_loop(int e) const { return column(e) == 0; }
  bool is_coloop(int e) const;

  friend bool operator==(const BinaryMatroid& a, const BinaryMatroid& b) { return a.matrix_ == b.matrix_; }

 private:
  Gf2Matrix matrix_;
  std::vector<std::uint64_t> columns_;
};

/// Upper bound on the dimension of the vector space enumerated by
/// cocircuits() and circuits().
inline constexpr int kMaxEnumerationDimension = 20;

SubsetFamily cocircuits(const BinaryMatroid& m);
SubsetFamily circuits(const BinaryMatroid& m);
SubsetFamily hyperplanes(const BinaryMatroid& m);
/// Flats of rank k - c for 0 <= c <= k.
SubsetFamily flats_of_corank(const BinaryMatroid& m, int c);

GroundSubset closure(const BinaryMatroid& m, GroundSubset s);
/// Independent subset of s spanning it, built greedily by ascending label.
GroundSubset spanning_independent_subset(const BinaryMatroid& m, GroundSubset s);

struct Simplification {
  BinaryMatroid matroid;
  std::vector<int> survivors;         // survivors[e-1]: original label of new element e
  std::vector<GroundSubset> classes;  // classes[e-1]: parallel class of new element e
};

Simplification simplify(const BinaryMatroid& m);
bool is_simple(const BinaryMatroid& m);

/// M/I for an independent set I. Surviving elements keep their relative order.
BinaryMatroid contract_independent(const BinaryMatroid& m, GroundSubset independent);
/// Contraction of a single element; contracting a loop deletes it.
BinaryMatroid contract_element(const BinaryMatroid& m, int e);
/// M \ S; the row space is reduced when the rank drops.
BinaryMatroid delete_elements(const BinaryMatroid& m, GroundSubset s);

BinaryMatroid dual(const BinaryMatroid& m);

bool is_connected(const BinaryMatroid& m);

/// Default bound on |GL_k(2)| for the brute-force isomorphism test.
inline constexpr std::uint64_t kDefaultOracleBound = 20160;

/// Exhaustive test for B = G A P over all G in GL_k(2); column permutations
/// are absorbed by comparing column multisets.
bool is_isomorphic_bruteforce(const BinaryMatroid& a, const BinaryMatroid& b,
                              std::uint64_t max_group_order = kDefaultOracleBound);

/// |GL_k(2)|, saturating at UINT64_MAX.
std::uint64_t general_linear_order(int k);

}  // namespace regmat
