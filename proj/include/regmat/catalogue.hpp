#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "regmat/enumerate.hpp"
#include "regmat/matroid.hpp"
#include "regmat/tutte.hpp"

namespace regmat {

class ResourceGuard : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class CatalogueClass { kLoopless, kSimple, kConnectedLoopless, kConnectedSimple };

std::optional<CatalogueClass> parse_class(std::string_view name);
const char* to_string(CatalogueClass cls);

struct Flags {
  bool loopless = false;
  bool simple = false;
  bool connected = false;
  bool regular = false;

  /// Subset of "LSCR" in that order.
  std::string to_string() const;
  static Flags parse(std::string_view letters);
  friend bool operator==(const Flags&, const Flags&) = default;
};

Flags compute_flags(const BinaryMatroid& m);

struct CatalogueEntry {
  int rank = 0;
  int size = 0;
  LabelVector labels;
  Flags flags;
  std::optional<TuttePolynomial> tutte;
  bool dualized = false;

  /// k=<k> n=<n> r=(r1,...,rn) flags=<LSCR subset> [tutte=<grid>] [dualized]
  std::string to_line() const;
  static CatalogueEntry parse_line(std::string_view line);

  BinaryMatroid matroid() const { return BinaryMatroid::from_labels(labels.k, labels.labels); }
};

/// Default limits of the catalogue; larger shapes require `force`.
inline constexpr int kGuardMaxSize = 15;
inline constexpr int kGuardMaxRank = 7;

struct GenerateRequest {
  int rank = 0;
  int size = 0;
  CatalogueClass cls = CatalogueClass::kLoopless;
  bool regular_only = false;
  bool with_tutte = false;
  bool force = false;
  int threads = 1;
};

/// Entries sorted by label vector. Throws InvalidShape or ResourceGuard.
std::vector<CatalogueEntry> run_generate(const GenerateRequest& request);

struct DualListingRequest {
  int rank = 0;
  int size = 0;
  CatalogueClass cls = CatalogueClass::kConnectedLoopless;
  bool regular_only = false;
  bool with_tutte = false;
  bool canonicalize = false;
  bool force = false;
  int threads = 1;
};

/// Rank-k entries obtained as duals of the rank-(n-k) connected loopless
/// matroids. Only the connected classes are accepted.
std::vector<CatalogueEntry> run_dual_listing(const DualListingRequest& request);

struct CountTable {
  int max_rank = 0;
  int max_size = 0;
  std::vector<std::vector<std::optional<std::size_t>>> cells;  // [k-1][n-1], empty when k > n

  std::optional<std::size_t> count(int k, int n) const { return cells.at(k - 1).at(n - 1); }
  std::string to_text() const;
};

CountTable run_counts(int max_rank, int max_size, CatalogueClass cls, bool regular_only, bool force = false,
                      int threads = 1);

void write_entries(std::ostream& os, std::span<const CatalogueEntry> entries);

}  // namespace regmat
