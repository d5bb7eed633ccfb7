#include <doctest.h>

#include <algorithm>
#include <random>

#include "corpus.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "regmat/regularity.hpp"

using namespace regmat;

namespace {

bool recognise(const BinaryMatroid& m, const FanoWitness& w) {
  const auto s = simplified_contraction(m, w.flat);
  return w.kind == Obstruction::kFano ? is_fano(s) : is_fano_dual(s);
}

}  // namespace

TEST_CASE("Fano recognition") {
  CHECK(is_fano(fixtures::fano()));
  CHECK(is_fano(BinaryMatroid(fixtures::fano_matrix_alternative())));
  const unsigned four[] = {1, 2, 3, 4};
  CHECK_FALSE(is_fano(BinaryMatroid::from_labels(3, four)));
  CHECK_FALSE(is_fano(fixtures::k4()));
  CHECK_FALSE(is_fano(fixtures::fano_dual()));
  // Seven elements of rank 3 but with a repeated column.
  const unsigned repeated[] = {1, 1, 2, 3, 4, 5, 6};
  CHECK_FALSE(is_fano(BinaryMatroid::from_labels(3, repeated)));
}

TEST_CASE("Fano dual recognition") {
  CHECK(is_fano_dual(fixtures::fano_dual()));
  CHECK_FALSE(is_fano_dual(fixtures::fano()));
  const unsigned near[] = {1, 2, 4, 8, 3, 5, 6};
  CHECK_FALSE(is_fano_dual(BinaryMatroid::from_labels(4, near)));
  const unsigned other[] = {1, 2, 4, 8, 7, 11, 13};
  CHECK(is_fano_dual(BinaryMatroid::from_labels(4, other)));
}

TEST_CASE("regularity of the small obstructions") {
  const auto f = is_regular(fixtures::fano());
  CHECK_FALSE(f.regular);
  REQUIRE(f.witness);
  CHECK(f.witness->flat == GroundSubset{});
  CHECK(f.witness->kind == Obstruction::kFano);

  const auto d = is_regular(fixtures::fano_dual());
  CHECK_FALSE(d.regular);
  REQUIRE(d.witness);
  CHECK(d.witness->flat == GroundSubset{});
  CHECK(d.witness->kind == Obstruction::kFanoDual);

  const auto k4 = is_regular(fixtures::k4());
  CHECK(k4.regular);
  CHECK_FALSE(k4.witness);
  CHECK(std::string(to_string(Obstruction::kFanoDual)) == "F7*");
}

TEST_CASE("the thirteen-element matroid is not regular") {
  const BinaryMatroid m(fixtures::thirteen_matrix());
  const auto result = is_regular(m);
  CHECK_FALSE(result.regular);
  REQUIRE(result.witness);
  CHECK(recognise(m, *result.witness));
  const auto all = find_obstructions(m);
  const FanoWitness expected{closure(m, GroundSubset{2, 7}), Obstruction::kFano};
  CHECK(std::find(all.begin(), all.end(), expected) != all.end());
  CHECK(all.front() == *result.witness);
}

TEST_CASE("regularity agrees with the minor search") {
  for (const auto& m : corpus::loopless_upto(8)) {
    CHECK(is_regular(m).regular == oracle::is_regular_by_minors(m));
  }
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    const auto m = corpus::random_matroid(rng, 3 + static_cast<int>(rng() % 4), 7 + static_cast<int>(rng() % 3));
    CHECK(is_regular(m).regular == oracle::is_regular_by_minors(m));
  }
}

TEST_CASE("regularity is invariant under duality and witnesses are valid") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 150; ++trial) {
    const auto m = corpus::random_matroid(rng, 1 + static_cast<int>(rng() % 6), 1 + static_cast<int>(rng() % 11));
    const auto r = is_regular(m);
    CHECK(r.regular == is_regular(dual(m)).regular);
    CHECK(r.regular == !r.witness.has_value());
    if (r.witness) CHECK(recognise(m, *r.witness));
    for (const auto& w : find_obstructions(m)) CHECK(recognise(m, w));
    CHECK(find_obstructions(m).empty() == r.regular);
    if (is_simple(m)) CHECK(is_fano(m) == is_fano_dual(dual(m)));
  }
  CHECK(is_fano_dual(dual(fixtures::fano())));
  CHECK(is_fano(dual(fixtures::fano_dual())));
}

TEST_CASE("minors of regular matroids are regular") {
  for (const auto& m : corpus::loopless_upto(7)) {
    if (!is_regular(m).regular) continue;
    for (int e = 1; e <= m.size(); ++e) {
      CHECK(is_regular(delete_elements(m, GroundSubset{e})).regular);
      CHECK(is_regular(contract_element(m, e)).regular);
    }
  }
}
