#include <doctest.h>

#include <sstream>

#include "oracles.hpp"
#include "regmat/catalogue.hpp"
#include "regmat/regularity.hpp"

using namespace regmat;

namespace {

std::vector<std::string> lines(const std::vector<CatalogueEntry>& entries) {
  std::vector<std::string> out;
  for (const auto& e : entries) out.push_back(e.to_line());
  return out;
}

std::vector<CatalogueEntry> gen(int k, int n, CatalogueClass cls, bool regular_only = false, bool tutte = false,
                                int threads = 1) {
  return run_generate(GenerateRequest{k, n, cls, regular_only, tutte, false, threads});
}

}  // namespace

TEST_CASE("class names and flags") {
  CHECK(parse_class("connected-simple") == CatalogueClass::kConnectedSimple);
  CHECK_FALSE(parse_class("graphic"));
  CHECK(std::string(to_string(CatalogueClass::kConnectedLoopless)) == "connected-loopless");
  const Flags f = Flags::parse("LSR");
  CHECK(f.loopless);
  CHECK(f.simple);
  CHECK_FALSE(f.connected);
  CHECK(f.regular);
  CHECK(f.to_string() == "LSR");
  CHECK(Flags::parse("").to_string().empty());
  CHECK_THROWS(Flags::parse("X"));
}

TEST_CASE("rank-3 size-4 listings") {
  CHECK(lines(gen(3, 4, CatalogueClass::kLoopless)) ==
        std::vector<std::string>{"k=3 n=4 r=(1,1,2,4) flags=LR", "k=3 n=4 r=(1,2,3,4) flags=LSR",
                                 "k=3 n=4 r=(1,2,4,7) flags=LSCR"});
  CHECK(lines(gen(3, 4, CatalogueClass::kSimple)) ==
        std::vector<std::string>{"k=3 n=4 r=(1,2,3,4) flags=LSR", "k=3 n=4 r=(1,2,4,7) flags=LSCR"});
  CHECK(lines(gen(3, 4, CatalogueClass::kConnectedSimple)) ==
        std::vector<std::string>{"k=3 n=4 r=(1,2,4,7) flags=LSCR"});
}

TEST_CASE("regular-only listings drop the Fano plane") {
  const auto simple = gen(3, 7, CatalogueClass::kSimple);
  REQUIRE(simple.size() == 1);
  CHECK(simple[0].labels.labels == std::vector<unsigned>{1, 2, 3, 4, 5, 6, 7});
  CHECK_FALSE(simple[0].flags.regular);
  CHECK(gen(3, 7, CatalogueClass::kSimple, true).empty());

  for (int k = 3; k <= 5; ++k) {
    for (int n = 7; n <= 9; ++n) {
      const auto all = gen(k, n, CatalogueClass::kConnectedSimple);
      const auto regular = gen(k, n, CatalogueClass::kConnectedSimple, true);
      std::size_t expected = 0;
      for (const auto& e : all) {
        const bool r = oracle::is_regular_by_minors(e.matroid());
        CHECK(e.flags.regular == r);
        expected += r;
      }
      CHECK(regular.size() == expected);
      for (const auto& e : regular) CHECK(is_regular(e.matroid()).regular);
    }
  }
}

TEST_CASE("flags match recomputation") {
  for (auto cls : {CatalogueClass::kLoopless, CatalogueClass::kConnectedLoopless}) {
    for (const auto& e : gen(4, 7, cls)) {
      CHECK(compute_flags(e.matroid()) == e.flags);
      CHECK(e.flags.loopless);
      if (cls == CatalogueClass::kConnectedLoopless) CHECK(e.flags.connected);
    }
  }
}

TEST_CASE("line format round trip") {
  for (const auto& e : gen(3, 6, CatalogueClass::kLoopless, false, true)) {
    REQUIRE(e.tutte);
    const auto line = e.to_line();
    CHECK(line.find("  ") == std::string::npos);
    CHECK(line.back() != ' ');
    const auto back = CatalogueEntry::parse_line(line);
    CHECK(back.to_line() == line);
    CHECK(back.labels == e.labels);
    CHECK(back.flags == e.flags);
    CHECK(*back.tutte == *e.tutte);
    CHECK(*e.tutte == tutte_by_activities(e.matroid()));
  }
  const auto fano = gen(3, 7, CatalogueClass::kSimple, false, true);
  CHECK(fano[0].to_line() == "k=3 n=7 r=(1,2,3,4,5,6,7) flags=LSC tutte=0,3,6,3,1;3,7,0,0,0;4,0,0,0,0;1,0,0,0,0");
  CHECK(CatalogueEntry::parse_line("k=2 n=3 r=(1,2,3) flags=LSC dualized").dualized);
  CHECK_THROWS(CatalogueEntry::parse_line("k=2 n=3 r=(1,2) flags=LS"));
  CHECK_THROWS(CatalogueEntry::parse_line("k=2 n=3 r=(1,2,3) flags=LSC tutte=1,2;3"));
  CHECK_THROWS(CatalogueEntry::parse_line("n=3 k=2 r=(1,2,3) flags=LSC"));
}

TEST_CASE("guards and shapes") {
  CHECK_THROWS_AS(run_generate(GenerateRequest{5, 4, CatalogueClass::kLoopless}), InvalidShape);
  CHECK_THROWS_AS(run_generate(GenerateRequest{0, 4, CatalogueClass::kLoopless}), InvalidShape);
  CHECK_THROWS_AS(run_generate(GenerateRequest{3, 16, CatalogueClass::kLoopless}), ResourceGuard);
  CHECK_THROWS_AS(run_generate(GenerateRequest{8, 9, CatalogueClass::kLoopless}), ResourceGuard);
  CHECK(run_generate(GenerateRequest{1, 16, CatalogueClass::kLoopless, false, false, true}).size() == 1);
  CHECK_THROWS_AS(run_counts(3, 16, CatalogueClass::kLoopless, false), ResourceGuard);
}

TEST_CASE("output does not depend on the thread count") {
  const auto serial = lines(gen(4, 9, CatalogueClass::kConnectedLoopless, false, true, 1));
  CHECK(lines(gen(4, 9, CatalogueClass::kConnectedLoopless, false, true, 4)) == serial);
  CHECK(lines(gen(4, 9, CatalogueClass::kConnectedLoopless, false, true, 1)) == serial);
}

TEST_CASE("count tables") {
  const auto loopless = run_counts(4, 6, CatalogueClass::kLoopless, false);
  CHECK(loopless.count(3, 4) == 3U);
  CHECK_FALSE(loopless.count(4, 3));
  for (int k = 1; k <= 4; ++k) CHECK(loopless.count(k, k) == 1U);
  for (int k = 1; k <= 4; ++k) {
    for (int n = k; n <= 6; ++n) CHECK(loopless.count(k, n) == gen(k, n, CatalogueClass::kLoopless).size());
  }
  CHECK(run_counts(3, 4, CatalogueClass::kSimple, false).count(3, 4) == 2U);
  const auto text = loopless.to_text();
  CHECK(text.find('-') != std::string::npos);
}

TEST_CASE("connected counts are symmetric under duality") {
  // Both ranks of each pair stay within the default rank limit of 7.
  for (auto [regular, max_size] : {std::pair{false, 12}, std::pair{true, 10}}) {
    const auto t = run_counts(7, max_size, CatalogueClass::kConnectedLoopless, regular);
    for (int n = 2; n <= max_size; ++n) {
      for (int k = std::max(1, n - 7); k <= std::min(7, n - 1); ++k) {
        CAPTURE(n);
        CAPTURE(k);
        CHECK(t.count(k, n) == t.count(n - k, n));
      }
    }
  }
}

TEST_CASE("dual listing of rank n-1 gives the circuit") {
  for (int n = 2; n <= 6; ++n) {
    const auto out = run_dual_listing(DualListingRequest{n - 1, n, CatalogueClass::kConnectedLoopless});
    REQUIRE(out.size() == 1);
    CHECK(out[0].dualized);
    const auto m = out[0].matroid();
    CHECK(m.rank() == n - 1);
    CHECK(circuits(m) == SubsetFamily{m.ground()});
  }
}

TEST_CASE("dual listing is a bijection with the generated classes") {
  for (auto cls : {CatalogueClass::kConnectedLoopless, CatalogueClass::kConnectedSimple}) {
    for (int n = 3; n <= 8; ++n) {
      for (int k = 1; k < n; ++k) {
        CAPTURE(n);
        CAPTURE(k);
        DualListingRequest request{k, n, cls};
        request.canonicalize = true;
        const auto listed = run_dual_listing(request);
        CHECK(lines(listed) == lines(gen(k, n, cls)));
      }
    }
  }
}

TEST_CASE("dual listing at rank 8") {
  DualListingRequest request{8, 10, CatalogueClass::kConnectedLoopless};
  request.with_tutte = true;
  const auto listed = run_dual_listing(request);
  const auto sources = gen(2, 10, CatalogueClass::kConnectedLoopless, false, true);
  CHECK(listed.size() == sources.size());
  std::size_t regular_listed = 0;
  std::size_t regular_sources = 0;
  for (const auto& e : listed) {
    CHECK(e.dualized);
    CHECK(e.flags.connected);
    CHECK(e.flags.regular == is_regular(e.matroid()).regular);
    regular_listed += e.flags.regular;
  }
  for (const auto& e : sources) regular_sources += e.flags.regular;
  CHECK(regular_listed == regular_sources);
  // Tutte polynomials of the duals are the transposes of the sources', as multisets.
  std::vector<std::string> a;
  std::vector<std::string> b;
  for (const auto& e : listed) a.push_back(e.tutte->to_inline());
  for (const auto& e : sources) b.push_back(e.tutte->transpose().to_inline());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  CHECK(a == b);

  request.regular_only = true;
  CHECK(run_dual_listing(request).size() == regular_sources);
}

TEST_CASE("dual listing rejects other classes and shapes") {
  CHECK_THROWS_AS(run_dual_listing(DualListingRequest{3, 3, CatalogueClass::kConnectedLoopless}), InvalidShape);
  CHECK_THROWS_AS(run_dual_listing(DualListingRequest{4, 3, CatalogueClass::kConnectedLoopless}), InvalidShape);
  CHECK_THROWS_AS(run_dual_listing(DualListingRequest{2, 4, CatalogueClass::kLoopless}), std::invalid_argument);
}

TEST_CASE("writer emits one LF-terminated line per entry") {
  std::ostringstream os;
  const auto entries = gen(3, 4, CatalogueClass::kLoopless);
  write_entries(os, entries);
  CHECK(os.str() ==
        "k=3 n=4 r=(1,1,2,4) flags=LR\nk=3 n=4 r=(1,2,3,4) flags=LSR\nk=3 n=4 r=(1,2,4,7) flags=LSCR\n");
}
