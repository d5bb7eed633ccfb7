#pragma once

#include <optional>
#include <vector>

#include "regmat/matroid.hpp"

namespace regmat {

enum class Obstruction { kFano, kFanoDual };

const char* to_string(Obstruction kind);

/// A flat whose contraction, after simplification, is the named obstruction.
struct FanoWitness {
  GroundSubset flat;
  Obstruction kind;
  friend bool operator==(const FanoWitness&, const FanoWitness&) = default;
};

/// Rank 3, seven columns forming exactly the nonzero vectors of GF(2)^3.
bool is_fano(const BinaryMatroid& m);

/// Rank 4, seven elements, and the null space columns are the seven nonzero
/// vectors of GF(2)^3.
bool is_fano_dual(const BinaryMatroid& m);

/// simplify(M / F) with F contracted through a greedy independent spanning subset.
BinaryMatroid simplified_contraction(const BinaryMatroid& m, GroundSubset flat);

struct RegularityResult {
  bool regular = true;
  std::optional<FanoWitness> witness;
};

/// Binary matroid regularity: no corank-3 flat contracting to F7 and no
/// corank-4 flat contracting to the dual of F7. The witness is the first
/// obstruction in lexicographic flat order, F7 flats before F7-dual flats.
RegularityResult is_regular(const BinaryMatroid& m);

/// Every obstruction flat, F7 kind first, each kind in lexicographic order.
std::vector<FanoWitness> find_obstructions(const BinaryMatroid& m);

}  // namespace regmat
