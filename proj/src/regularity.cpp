#include "regmat/regularity.hpp"

#include <algorithm>
#include <bit>

namespace regmat {

namespace {

// Bit v set for every nonzero v in GF(2)^3.
constexpr std::uint64_t kAllNonzeroOfRank3 = 0xFE;

std::uint64_t column_set(std::span<const std::uint64_t> cols) {
  std::uint64_t set = 0;
  for (auto c : cols) {
    if (c >= 64) return 0;
    set |= std::uint64_t{1} << c;
  }
  return set;
}

// Distinct nonzero columns of M/F without building the simplification.
int simplified_size_of_contraction(const BinaryMatroid& m, GroundSubset flat) {
  const BinaryMatroid contracted = contract_independent(m, spanning_independent_subset(m, flat));
  std::vector<std::uint64_t> cols(contracted.columns().begin(), contracted.columns().end());
  std::erase(cols, 0);
  std::sort(cols.begin(), cols.end());
  return static_cast<int>(std::unique(cols.begin(), cols.end()) - cols.begin());
}

bool obstructs(const BinaryMatroid& m, GroundSubset flat, Obstruction kind) {
  if (simplified_size_of_contraction(m, flat) != 7) return false;
  const BinaryMatroid minor = simplified_contraction(m, flat);
  return kind == Obstruction::kFano ? is_fano(minor) : is_fano_dual(minor);
}

template <typename Visit>
void for_each_obstruction(const BinaryMatroid& m, Visit&& visit) {
  const int k = m.rank();
  if (k >= 3) {
    for (auto u : flats_of_corank(m, 3)) {
      if (obstructs(m, u, Obstruction::kFano) && !visit(FanoWitness{u, Obstruction::kFano})) return;
    }
  }
  if (k >= 4) {
    for (auto v : flats_of_corank(m, 4)) {
      if (obstructs(m, v, Obstruction::kFanoDual) && !visit(FanoWitness{v, Obstruction::kFanoDual})) return;
    }
  }
}

}  // namespace

const char* to_string(Obstruction kind) { return kind == Obstruction::kFano ? "F7" : "F7*"; }

bool is_fano(const BinaryMatroid& m) {
  return m.size() == 7 && m.rank() == 3 && column_set(m.columns()) == kAllNonzeroOfRank3;
}

bool is_fano_dual(const BinaryMatroid& m) {
  if (m.size() != 7 || m.rank() != 4) return false;
  const Gf2Matrix null = nullspace_basis(m.matrix());
  return column_set(null.column_masks()) == kAllNonzeroOfRank3;
}

BinaryMatroid simplified_contraction(const BinaryMatroid& m, GroundSubset flat) {
  return simplify(contract_independent(m, spanning_independent_subset(m, flat))).matroid;
}

RegularityResult is_regular(const BinaryMatroid& m) {
  RegularityResult result;
  for_each_obstruction(m, [&](const FanoWitness& w) {
    result.regular = false;
    result.witness = w;
    return false;
  });
  return result;
}

std::vector<FanoWitness> find_obstructions(const BinaryMatroid& m) {
  std::vector<FanoWitness> out;
  for_each_obstruction(m, [&](const FanoWitness& w) {
    out.push_back(w);
    return true;
  });
  return out;
}

}  // namespace regmat
