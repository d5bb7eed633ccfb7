#include "regmat/catalogue.hpp"

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "regmat/parallel.hpp"
#include "regmat/regularity.hpp"

namespace regmat {

namespace {

bool is_connected_class(CatalogueClass cls) {
  return cls == CatalogueClass::kConnectedLoopless || cls == CatalogueClass::kConnectedSimple;
}

bool is_simple_class(CatalogueClass cls) {
  return cls == CatalogueClass::kSimple || cls == CatalogueClass::kConnectedSimple;
}

void check_shape(int k, int n) {
  if (k < 1 || k > n) {
    throw InvalidShape("need 1 <= rank <= size, got rank " + std::to_string(k) + " and size " + std::to_string(n));
  }
}

void check_guard(int k, int n, bool force) {
  if (force) return;
  if (n > kGuardMaxSize || k > kGuardMaxRank) {
    throw ResourceGuard("size " + std::to_string(n) + " / rank " + std::to_string(k) +
                        " exceeds the default limits (size <= 15, rank <= 7); pass --force to override");
  }
}

bool passes(const Flags& flags, CatalogueClass cls, bool regular_only) {
  if (!flags.loopless) return false;
  if (is_simple_class(cls) && !flags.simple) return false;
  if (is_connected_class(cls) && !flags.connected) return false;
  return !regular_only || flags.regular;
}

int parse_int(std::string_view s) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("expected an integer, got '" + std::string(s) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

std::string_view value_after(std::string_view token, std::string_view key) {
  if (token.substr(0, key.size()) != key) {
    throw std::invalid_argument("expected '" + std::string(key) + "', got '" + std::string(token) + "'");
  }
  return token.substr(key.size());
}

}  // namespace

std::optional<CatalogueClass> parse_class(std::string_view name) {
  if (name == "loopless") return CatalogueClass::kLoopless;
  if (name == "simple") return CatalogueClass::kSimple;
  if (name == "connected-loopless") return CatalogueClass::kConnectedLoopless;
  if (name == "connected-simple") return CatalogueClass::kConnectedSimple;
  return std::nullopt;
}

const char* to_string(CatalogueClass cls) {
  switch (cls) {
    case CatalogueClass::kLoopless: return "loopless";
    case CatalogueClass::kSimple: return "simple";
    case CatalogueClass::kConnectedLoopless: return "connected-loopless";
    case CatalogueClass::kConnectedSimple: return "connected-simple";
  }
  return "?";
}

std::string Flags::to_string() const {
  std::string s;
  if (loopless) s += 'L';
  if (simple) s += 'S';
  if (connected) s += 'C';
  if (regular) s += 'R';
  return s;
}

Flags Flags::parse(std::string_view letters) {
  Flags f;
  for (char c : letters) {
    switch (c) {
      case 'L': f.loopless = true; break;
      case 'S': f.simple = true; break;
      case 'C': f.connected = true; break;
      case 'R': f.regular = true; break;
      default: throw std::invalid_argument("unknown flag '" + std::string(1, c) + "'");
    }
  }
  return f;
}

Flags compute_flags(const BinaryMatroid& m) {
  Flags f;
  f.loopless = std::none_of(m.columns().begin(), m.columns().end(), [](std::uint64_t c) { return c == 0; });
  f.simple = is_simple(m);
  f.connected = is_connected(m);
  f.regular = is_regular(m).regular;
  return f;
}

std::string CatalogueEntry::to_line() const {
  std::ostringstream os;
  os << "k=" << rank << " n=" << size << " r=" << labels.to_string() << " flags=" << flags.to_string();
  if (tutte) os << " tutte=" << tutte->to_inline();
  if (dualized) os << " dualized";
  return os.str();
}

CatalogueEntry CatalogueEntry::parse_line(std::string_view line) {
  const auto tokens = split(line, ' ');
  if (tokens.size() < 4) throw std::invalid_argument("catalogue line has too few fields");
  CatalogueEntry e;
  e.rank = parse_int(value_after(tokens[0], "k="));
  e.size = parse_int(value_after(tokens[1], "n="));
  std::string_view r = value_after(tokens[2], "r=");
  if (r.size() < 2 || r.front() != '(' || r.back() != ')') throw std::invalid_argument("malformed label vector");
  e.labels.k = e.rank;
  r = r.substr(1, r.size() - 2);
  if (!r.empty()) {
    for (auto part : split(r, ',')) e.labels.labels.push_back(static_cast<unsigned>(parse_int(part)));
  }
  e.flags = Flags::parse(value_after(tokens[3], "flags="));
  for (std::size_t t = 4; t < tokens.size(); ++t) {
    if (tokens[t] == "dualized") {
      e.dualized = true;
      continue;
    }
    const auto rows = split(value_after(tokens[t], "tutte="), ';');
    TuttePolynomial poly(e.rank, e.size);
    if (static_cast<int>(rows.size()) != e.rank + 1) throw std::invalid_argument("Tutte grid has wrong row count");
    for (int i = 0; i <= e.rank; ++i) {
      const auto cells = split(rows[static_cast<std::size_t>(i)], ',');
      if (static_cast<int>(cells.size()) != e.size - e.rank + 1) {
        throw std::invalid_argument("Tutte grid has wrong column count");
      }
      for (int j = 0; j <= e.size - e.rank; ++j) {
        poly.coefficient(i, j) = static_cast<std::uint64_t>(parse_int(cells[static_cast<std::size_t>(j)]));
      }
    }
    e.tutte = std::move(poly);
  }
  if (e.size != static_cast<int>(e.labels.labels.size())) throw std::invalid_argument("label count differs from n");
  return e;
}

std::vector<CatalogueEntry> run_generate(const GenerateRequest& request) {
  check_shape(request.rank, request.size);
  check_guard(request.rank, request.size, request.force);

  const auto cls = is_simple_class(request.cls) ? MatroidClass::kSimple : MatroidClass::kLoopless;
  const auto reps = generate(request.rank, request.size, cls, {request.threads});

  std::vector<std::optional<CatalogueEntry>> slots(reps.size());
  parallel_for(reps.size(), request.threads, [&](std::size_t i) {
    const BinaryMatroid m = to_matroid(reps[i]);
    CatalogueEntry e;
    e.rank = request.rank;
    e.size = request.size;
    e.labels = reps[i];
    e.flags = compute_flags(m);
    if (!passes(e.flags, request.cls, request.regular_only)) return;
    if (request.with_tutte) e.tutte = tutte_by_activities(m);
    slots[i] = std::move(e);
  });

  std::vector<CatalogueEntry> out;
  for (auto& s : slots) {
    if (s) out.push_back(std::move(*s));
  }
  return out;
}

std::vector<CatalogueEntry> run_dual_listing(const DualListingRequest& request) {
  check_shape(request.rank, request.size);
  if (!is_connected_class(request.cls)) {
    throw std::invalid_argument("dual listings are defined for the connected classes only");
  }
  if (request.rank == request.size) {
    throw InvalidShape("dual listing needs rank < size");
  }
  const int source_rank = request.size - request.rank;
  if (!request.force && (request.size > kGuardMaxSize || source_rank > kGuardMaxRank)) {
    throw ResourceGuard("dual listing needs size <= 15 and size - rank <= 7; pass --force to override");
  }

  const auto sources = generate(source_rank, request.size, MatroidClass::kLoopless, {request.threads});
  std::vector<std::optional<CatalogueEntry>> slots(sources.size());
  parallel_for(sources.size(), request.threads, [&](std::size_t i) {
    const BinaryMatroid source = to_matroid(sources[i]);
    if (!is_connected(source)) return;
    const BinaryMatroid d = dual(source);
    CatalogueEntry e;
    e.rank = request.rank;
    e.size = request.size;
    e.flags = compute_flags(d);
    if (!passes(e.flags, request.cls, request.regular_only)) return;
    if (request.canonicalize) {
      e.labels = label_vector_of(canonical_form(multiplicity_of_columns(request.rank, d.columns())));
    } else {
      e.labels.k = request.rank;
      e.labels.labels.assign(d.columns().begin(), d.columns().end());
      std::sort(e.labels.labels.begin(), e.labels.labels.end());
      e.dualized = true;
    }
    if (request.with_tutte) e.tutte = tutte_by_activities(d);
    slots[i] = std::move(e);
  });

  std::vector<CatalogueEntry> out;
  for (auto& s : slots) {
    if (s) out.push_back(std::move(*s));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.labels < b.labels; });
  return out;
}

std::string CountTable::to_text() const {
  std::ostringstream os;
  constexpr int kWidth = 8;
  os << std::setw(4) << "k\\n";
  for (int n = 1; n <= max_size; ++n) os << std::setw(kWidth) << n;
  os << '\n';
  for (int k = 1; k <= max_rank; ++k) {
    os << std::setw(4) << k;
    for (int n = 1; n <= max_size; ++n) {
      const auto c = count(k, n);
      if (c) {
        os << std::setw(kWidth) << *c;
      } else {
        os << std::setw(kWidth) << '-';
      }
    }
    os << '\n';
  }
  return os.str();
}

CountTable run_counts(int max_rank, int max_size, CatalogueClass cls, bool regular_only, bool force, int threads) {
  if (max_rank < 1 || max_size < 1) throw InvalidShape("count table bounds must be positive");
  check_guard(max_rank, max_size, force);
  CountTable table{max_rank, max_size, {}};
  table.cells.assign(static_cast<std::size_t>(max_rank),
                     std::vector<std::optional<std::size_t>>(static_cast<std::size_t>(max_size)));
  for (int k = 1; k <= max_rank; ++k) {
    for (int n = k; n <= max_size; ++n) {
      GenerateRequest request{k, n, cls, regular_only, false, force, threads};
      table.cells[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(n - 1)] = run_generate(request).size();
    }
  }
  return table;
}

void write_entries(std::ostream& os, std::span<const CatalogueEntry> entries) {
  for (const auto& e : entries) os << e.to_line() << '\n';
}

}  // namespace regmat
