#include "regmat/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "regmat/parallel.hpp"

namespace regmat {

namespace {

void check_rank(int k) {
  if (k < 0 || k > kMaxEnumerationRank) {
    throw InvalidShape("rank " + std::to_string(k) + " outside [0, " + std::to_string(kMaxEnumerationRank) + "]");
  }
}

void check_function(const MultiplicityFunction& f) {
  check_rank(f.k);
  if (f.f.size() != (std::size_t{1} << f.k)) throw InvalidShape("multiplicity table must have 2^k entries");
  if (std::any_of(f.f.begin(), f.f.end(), [](int v) { return v < 0; })) {
    throw InvalidShape("multiplicities must be non-negative");
  }
}

unsigned apply_images(std::span<const unsigned> images, unsigned v) {
  unsigned out = 0;
  for (; v != 0; v &= v - 1) out ^= images[static_cast<std::size_t>(std::countr_zero(v))];
  return out;
}

// Depth-first search for H = (h_1..h_k) with f(H m), m = 1, 2, ..., larger
// than f. Choosing h_i fixes the image on labels [2^(i-1), 2^i), so the
// comparison proceeds one block per level and prunes on the first smaller
// entry.
class WitnessSearch {
 public:
  explicit WitnessSearch(const MultiplicityFunction& f)
      : k_(f.k), f_(f.f), image_(f.f.size(), 0), in_span_(f.f.size(), false), suffix_mass_(f.f.size() + 1, 0) {
    for (std::size_t m = f_.size(); m-- > 0;) suffix_mass_[m] = suffix_mass_[m + 1] + f_[m];
    // Labels by decreasing multiplicity, ties ascending; the zero labels
    // are most of the table and need no sorting.
    std::vector<unsigned> zeros;
    for (unsigned m = 1; m < f_.size(); ++m) (f_[m] > 0 ? order_ : zeros).push_back(m);
    std::stable_sort(order_.begin(), order_.end(), [this](unsigned a, unsigned b) { return f_[a] > f_[b]; });
    order_.insert(order_.end(), zeros.begin(), zeros.end());
  }

  std::optional<std::vector<unsigned>> run() {
    in_span_[0] = true;
    if (search(0)) return images_;
    return std::nullopt;
  }

 private:
  bool search(int depth) {
    if (depth == k_) return false;
    const std::size_t block = std::size_t{1} << depth;
    // Equal prefix and no mass beyond it: every completion is an automorphism.
    if (suffix_mass_[block] == 0) return false;
    const int floor = f_[block];
    for (unsigned h : order_) {
      if (f_[h] < floor) break;
      if (in_span_[h]) continue;
      images_.push_back(h);
      std::size_t filled = block;
      const int cmp = assign_block(block, h, filled);
      if (cmp > 0) return true;
      if (cmp == 0 && search(depth + 1)) return true;
      for (std::size_t m = block; m < filled; ++m) in_span_[image_[m]] = false;
      images_.pop_back();
    }
    return false;
  }

  // Fills image_ on [block, 2 block) and compares it with f there, stopping at
  // the first difference. `filled` ends one past the last written position.
  int assign_block(std::size_t block, unsigned h, std::size_t& filled) {
    for (std::size_t m = block; m < 2 * block; ++m) {
      const unsigned v = h ^ image_[m - block];
      image_[m] = v;
      in_span_[v] = true;
      filled = m + 1;
      const int a = f_[v];
      const int b = f_[m];
      if (a != b) return a > b ? 1 : -1;
    }
    return 0;
  }

  int k_;
  std::span<const int> f_;
  std::vector<unsigned> image_;
  std::vector<bool> in_span_;
  std::vector<int> suffix_mass_;
  std::vector<unsigned> order_;
  std::vector<unsigned> images_;
};

Gf2Matrix complete_to_basis(int k, std::vector<unsigned> images) {
  XorBasis span;
  for (unsigned h : images) span.insert(h);
  for (unsigned u = 1; static_cast<int>(images.size()) < k; u <<= 1) {
    if (span.insert(u)) images.push_back(u);
  }
  std::vector<std::uint64_t> cols(images.begin(), images.end());
  return Gf2Matrix::from_column_masks(k, cols);
}

}  // namespace

unsigned rho(const Gf2Vector& v) {
  check_rank(v.length());
  return static_cast<unsigned>(v.bits());
}

Gf2Vector unrho(unsigned label, int k) {
  check_rank(k);
  if (label >= (1U << k)) {
    throw LabelOutOfRange("label " + std::to_string(label) + " outside [0, 2^" + std::to_string(k) + ")");
  }
  return Gf2Vector(k, label);
}

unsigned pi_b(const Gf2Matrix& g, unsigned label) {
  if (g.rows() != g.cols() || rank(g) != g.rows()) throw SingularMatrix("group element must be invertible");
  return rho(g * unrho(label, g.rows()));
}

std::string LabelVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < labels.size(); ++i) os << (i ? "," : "") << labels[i];
  os << ')';
  return os.str();
}

int MultiplicityFunction::size() const { return std::accumulate(f.begin(), f.end(), 0); }

LabelVector label_vector_of(const MultiplicityFunction& f) {
  check_function(f);
  LabelVector r{f.k, {}};
  for (std::size_t label = 0; label < f.f.size(); ++label) {
    r.labels.insert(r.labels.end(), static_cast<std::size_t>(f.f[label]), static_cast<unsigned>(label));
  }
  return r;
}

MultiplicityFunction multiplicity_of(const LabelVector& r) {
  check_rank(r.k);
  if (!std::is_sorted(r.labels.begin(), r.labels.end())) throw InvalidShape("label vector must be non-decreasing");
  if (r.labels.empty()) throw InvalidShape("label vector must be nonempty");
  if (r.labels.front() == 0) throw InvalidShape("label 0 would be a loop");
  std::vector<std::uint64_t> cols(r.labels.begin(), r.labels.end());
  return multiplicity_of_columns(r.k, cols);
}

MultiplicityFunction multiplicity_of_columns(int k, std::span<const std::uint64_t> columns) {
  check_rank(k);
  MultiplicityFunction f{k, std::vector<int>(std::size_t{1} << k, 0)};
  for (auto c : columns) {
    if (c >= f.f.size()) throw LabelOutOfRange("label " + std::to_string(c) + " outside the label range");
    ++f.f[static_cast<std::size_t>(c)];
  }
  return f;
}

BinaryMatroid to_matroid(const LabelVector& r) { return BinaryMatroid::from_labels(r.k, r.labels); }

MultiplicityFunction act(const Gf2Matrix& g, const MultiplicityFunction& f) {
  check_function(f);
  if (g.rows() != f.k || g.cols() != f.k || rank(g) != f.k) throw SingularMatrix("group element must be invertible");
  std::vector<unsigned> images;
  for (int j = 1; j <= f.k; ++j) images.push_back(static_cast<unsigned>(g.column_mask(j)));
  MultiplicityFunction out{f.k, std::vector<int>(f.f.size(), 0)};
  for (std::size_t j = 0; j < f.f.size(); ++j) out.f[apply_images(images, static_cast<unsigned>(j))] = f.f[j];
  return out;
}

std::optional<Gf2Matrix> canonicity_witness(const MultiplicityFunction& f) {
  check_function(f);
  if (f.k == 0) return std::nullopt;
  auto images = WitnessSearch(f).run();
  if (!images) return std::nullopt;
  // The search found H with f(H m) > f(m); the acting element is its inverse.
  return inverse(complete_to_basis(f.k, std::move(*images)));
}

bool is_canonical(const MultiplicityFunction& f) {
  check_function(f);
  // A unit label must dominate every later label: otherwise sending that unit
  // vector to the later one while fixing the earlier units gives a larger image.
  int later_max = 0;
  for (std::size_t r = f.f.size(); r-- > 1;) {
    if (std::has_single_bit(r) && later_max > f.f[r]) return false;
    later_max = std::max(later_max, f.f[r]);
  }
  return !canonicity_witness(f).has_value();
}

MultiplicityFunction canonical_form(const MultiplicityFunction& f) {
  MultiplicityFunction current = f;
  // Each step moves strictly up in lexicographic order within a finite orbit.
  while (auto g = canonicity_witness(current)) current = act(*g, current);
  return current;
}

namespace {

class CandidateWalker {
 public:
  CandidateWalker(int k, int n, MatroidClass cls) : k_(k), n_(n), simple_(cls == MatroidClass::kSimple) {
    last_ = (1U << k) - 1;
  }

  struct Prefix {
    std::vector<int> f;
    unsigned position;  // next label to assign
    int remaining;
    int cap;
    int units_left;
  };

  Prefix root() const {
    return {std::vector<int>(std::size_t{1} << k_, 0), 1, n_, simple_ ? 1 : n_, k_};
  }

  // Expands the prefix to all its descendants that have assigned every label
  // below `stop`, in lexicographically decreasing order.
  void split(const Prefix& p, unsigned stop, std::vector<Prefix>& out) const {
    if (p.position >= stop || p.position > last_ || p.remaining == 0) {
      out.push_back(p);
      return;
    }
    for_each_value(p, [&](const Prefix& child) { split(child, stop, out); });
  }

  void walk(const Prefix& p, std::vector<LabelVector>& out) const {
    if (p.position > last_ || p.remaining == 0) {
      // The last nonzero assignment already passed the canonicity test.
      if (p.remaining != 0 || p.units_left != 0) return;
      out.push_back(label_vector_of(MultiplicityFunction{k_, p.f}));
      return;
    }
    for_each_value(p, [&](const Prefix& child) { walk(child, out); });
  }

 private:
  // Children place a positive multiplicity at the next nonzero label p; the
  // labels skipped on the way stay zero. A unit label can never be skipped.
  template <typename Visit>
  void for_each_value(const Prefix& p, Visit&& visit) const {
    const unsigned limit = std::min(last_, std::bit_ceil(p.position));
    for (unsigned m = p.position; m <= limit; ++m) {
      if (static_cast<long>(p.remaining) > static_cast<long>(last_ - m + 1) * p.cap) break;
      const bool unit = std::has_single_bit(m);
      const int units_after = p.units_left - (unit ? 1 : 0);
      const int hi = std::min(p.cap, p.remaining - units_after);
      const long positions_after = static_cast<long>(last_ - m);
      for (int v = hi; v >= 1; --v) {
        const int rest = p.remaining - v;
        const int cap = unit ? std::min(p.cap, v) : p.cap;
        if (static_cast<long>(rest) > positions_after * cap) break;
        Prefix child = p;
        child.f[m] = v;
        // Dropping one copy of the largest label keeps a function lex-largest
        // in its orbit, so every truncation of a canonical function is
        // canonical and a non-canonical prefix has no canonical completion.
        if (!is_canonical(MultiplicityFunction{k_, child.f})) continue;
        child.position = m + 1;
        child.remaining = rest;
        child.cap = cap;
        child.units_left = units_after;
        visit(child);
      }
    }
  }

  int k_;
  int n_;
  bool simple_;
  unsigned last_;
};

}  // namespace

std::vector<LabelVector> generate(int k, int n, MatroidClass cls, const GenerateOptions& options) {
  if (k < 1 || k > n) {
    throw InvalidShape("need 1 <= rank <= size, got rank " + std::to_string(k) + " and size " + std::to_string(n));
  }
  check_rank(k);
  if (cls == MatroidClass::kSimple && static_cast<long>(n) > (1L << k) - 1) return {};

  CandidateWalker walker(k, n, cls);
  std::vector<CandidateWalker::Prefix> tasks;
  const unsigned stop = options.threads > 1 ? std::min(8U, 1U << k) : 1U;
  walker.split(walker.root(), stop, tasks);

  std::vector<std::vector<LabelVector>> results(tasks.size());
  parallel_for(tasks.size(), options.threads, [&](std::size_t i) { walker.walk(tasks[i], results[i]); });

  std::vector<LabelVector> out;
  for (auto& r : results) out.insert(out.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace regmat
