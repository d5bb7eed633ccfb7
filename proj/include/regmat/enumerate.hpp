#pragma once

// Isomorph-free generation of binary matrix matroids.
//
// A rank-k matroid of size n is stored as a multiplicity function f on the
// labels 0..2^k-1, where label r stands for the column vector whose entry in
// row i is bit (i-1) of r. GL_k(2) acts on labels by matrix multiplication;
// a multiplicity function is canonical when it is the lexicographically
// largest member of its orbit. Canonical functions, listed in decreasing
// order, correspond to label vectors listed in increasing order.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "regmat/gf2.hpp"
#include "regmat/matroid.hpp"

namespace regmat {

class EnumerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LabelOutOfRange : public EnumerationError {
 public:
  using EnumerationError::EnumerationError;
};

class InvalidShape : public EnumerationError {
 public:
  using EnumerationError::EnumerationError;
};

/// Largest rank the enumeration routines accept (labels must fit the
/// multiplicity table).
inline constexpr int kMaxEnumerationRank = 16;

unsigned rho(const Gf2Vector& v);
Gf2Vector unrho(unsigned label, int k);

/// Label of G applied to the vector with label j. G must be invertible.
unsigned pi_b(const Gf2Matrix& g, unsigned label);

struct LabelVector {
  int k = 0;
  std::vector<unsigned> labels;  // non-decreasing

  int size() const { return static_cast<int>(labels.size()); }
  std::string to_string() const;  // "(1,2,4,7)"
  friend auto operator<=>(const LabelVector&, const LabelVector&) = default;
};

struct MultiplicityFunction {
  int k = 0;
  std::vector<int> f;  // indexed by label, size 2^k

  int size() const;
  friend auto operator<=>(const MultiplicityFunction&, const MultiplicityFunction&) = default;
};

LabelVector label_vector_of(const MultiplicityFunction& f);
MultiplicityFunction multiplicity_of(const LabelVector& r);
MultiplicityFunction multiplicity_of_columns(int k, std::span<const std::uint64_t> columns);

BinaryMatroid to_matroid(const LabelVector& r);

/// Image of f under G, defined by image(pi_G(j)) = f(j).
MultiplicityFunction act(const Gf2Matrix& g, const MultiplicityFunction& f);

/// Some G in GL_k(2) whose image of f is lexicographically larger than f,
/// or nothing when f is canonical.
std::optional<Gf2Matrix> canonicity_witness(const MultiplicityFunction& f);

bool is_canonical(const MultiplicityFunction& f);

/// Lexicographically largest member of the orbit of f.
MultiplicityFunction canonical_form(const MultiplicityFunction& f);

enum class MatroidClass { kLoopless, kSimple };

struct GenerateOptions {
  int threads = 1;
};

/// One representative per isomorphism class of rank-k, size-n loopless (or
/// simple) binary matroids: the lexicographically smallest label vector of
/// each class, in increasing order.
std::vector<LabelVector> generate(int k, int n, MatroidClass cls, const GenerateOptions& options = {});

}  // namespace regmat
