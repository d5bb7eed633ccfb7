#include "regmat/matroid.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <sstream>

namespace regmat {

GroundSubset::GroundSubset(std::initializer_list<int> elements) {
  for (int e : elements) {
    if (e < 1 || e > kMaxDimension) throw std::out_of_range("ground element out of range");
    insert(e);
  }
}

int GroundSubset::size() const { return std::popcount(mask_); }

int GroundSubset::max() const { return 64 - std::countl_zero(mask_); }

std::vector<int> GroundSubset::elements() const {
  std::vector<int> out;
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

std::string GroundSubset::shorthand() const {
  if (mask_ == 0) return "{}";
  const auto elems = elements();
  std::ostringstream os;
  if (elems.back() <= 9) {
    for (int e : elems) os << e;
    return os.str();
  }
  os << '{';
  for (std::size_t i = 0; i < elems.size(); ++i) os << (i ? "," : "") << elems[i];
  os << '}';
  return os.str();
}

bool lex_less(GroundSubset a, GroundSubset b) {
  const std::uint64_t diff = a.mask() ^ b.mask();
  if (diff == 0) return false;
  const int d = std::countr_zero(diff);
  // Both lists agree below d. The list holding d is smaller unless the other
  // list stops before d, in which case the other one is a proper prefix.
  const GroundSubset& holder = ((a.mask() >> d) & 1U) ? a : b;
  const GroundSubset& other = ((a.mask() >> d) & 1U) ? b : a;
  const bool other_ends = (other.mask() >> d) == 0;
  const bool a_smaller = other_ends ? (&other == &a) : (&holder == &a);
  return a_smaller;
}

void normalize(SubsetFamily& family) {
  std::sort(family.begin(), family.end(), lex_less);
  family.erase(std::unique(family.begin(), family.end()), family.end());
}

BinaryMatroid::BinaryMatroid(Gf2Matrix matrix) : matrix_(std::move(matrix)) {
  if (regmat::rank(matrix_) != matrix_.rows()) {
    throw MatroidError("representing matrix must have full row rank");
  }
  columns_ = matrix_.column_masks();
}

BinaryMatroid BinaryMatroid::from_any_matrix(const Gf2Matrix& m) {
  if (regmat::rank(m) == m.rows()) return BinaryMatroid(m);
  return BinaryMatroid(reduced_echelon(m).reduced);
}

BinaryMatroid BinaryMatroid::from_labels(int k, std::span<const unsigned> labels) {
  std::vector<std::uint64_t> cols(labels.begin(), labels.end());
  return BinaryMatroid(Gf2Matrix::from_column_masks(k, cols));
}

int BinaryMatroid::rank_of(GroundSubset s) const {
  XorBasis basis;
  for (std::uint64_t m = s.mask(); m != 0; m &= m - 1) {
    basis.insert(columns_[static_cast<std::size_t>(std::countr_zero(m))]);
  }
  return basis.rank();
}

bool BinaryMatroid::is_coloop(int e) const {
  GroundSubset rest = ground();
  rest.erase(e);
  return rank_of(rest) < rank();
}

namespace {

// Supports of nonzero row-space vectors whose complement has rank k-1, i.e.
// the minimal supports.
SubsetFamily minimal_row_supports(const BinaryMatroid& m) {
  const int k = m.rank();
  if (k > kMaxEnumerationDimension) {
    throw EnumerationTooLarge("row space of dimension " + std::to_string(k) + " is too large to enumerate");
  }
  const auto rows = m.matrix().row_masks();
  const auto cols = m.columns();
  SubsetFamily out;
  std::uint64_t z = 0;
  const std::uint64_t count = std::uint64_t{1} << k;
  for (std::uint64_t step = 1; step < count; ++step) {
    z ^= rows[static_cast<std::size_t>(std::countr_zero(step))];
    XorBasis basis;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (!((z >> j) & 1U)) basis.insert(cols[j]);
    }
    if (basis.rank() == k - 1) out.emplace_back(z);
  }
  normalize(out);
  return out;
}

}  // namespace

SubsetFamily cocircuits(const BinaryMatroid& m) { return minimal_row_supports(m); }

SubsetFamily circuits(const BinaryMatroid& m) {
  if (m.size() - m.rank() > kMaxEnumerationDimension) {
    throw EnumerationTooLarge("cycle space of dimension " + std::to_string(m.size() - m.rank()) +
                              " is too large to enumerate");
  }
  return minimal_row_supports(dual(m));
}

SubsetFamily hyperplanes(const BinaryMatroid& m) {
  SubsetFamily out;
  const GroundSubset ground = m.ground();
  for (auto d : cocircuits(m)) out.push_back(ground - d);
  normalize(out);
  return out;
}

SubsetFamily flats_of_corank(const BinaryMatroid& m, int c) {
  if (c < 0 || c > m.rank()) {
    throw CorankTooLarge("corank " + std::to_string(c) + " exceeds rank " + std::to_string(m.rank()));
  }
  if (c == 0) return {m.ground()};
  const SubsetFamily hyper = hyperplanes(m);
  SubsetFamily current = hyper;
  for (int level = 2; level <= c; ++level) {
    SubsetFamily candidates;
    for (auto f : current) {
      for (auto h : hyper) {
        const GroundSubset meet = f & h;
        if (meet != f) candidates.push_back(meet);
      }
    }
    normalize(candidates);
    SubsetFamily maximal;
    for (auto a : candidates) {
      const bool dominated = std::any_of(candidates.begin(), candidates.end(), [a](GroundSubset b) {
        return b != a && a.is_subset_of(b);
      });
      if (!dominated) maximal.push_back(a);
    }
    current = std::move(maximal);
  }
  return current;
}

GroundSubset closure(const BinaryMatroid& m, GroundSubset s) {
  XorBasis basis;
  for (int e : s.elements()) basis.insert(m.column(e));
  GroundSubset out;
  for (int e = 1; e <= m.size(); ++e) {
    if (basis.contains(m.column(e))) out.insert(e);
  }
  return out;
}

GroundSubset spanning_independent_subset(const BinaryMatroid& m, GroundSubset s) {
  XorBasis basis;
  GroundSubset out;
  for (int e : s.elements()) {
    if (basis.insert(m.column(e))) out.insert(e);
  }
  return out;
}

Simplification simplify(const BinaryMatroid& m) {
  Simplification out;
  std::vector<std::uint64_t> kept;
  for (int e = 1; e <= m.size(); ++e) {
    const std::uint64_t c = m.column(e);
    if (c == 0) continue;
    auto it = std::find(kept.begin(), kept.end(), c);
    if (it == kept.end()) {
      kept.push_back(c);
      out.survivors.push_back(e);
      out.classes.push_back(GroundSubset{e});
    } else {
      out.classes[static_cast<std::size_t>(it - kept.begin())].insert(e);
    }
  }
  out.matroid = BinaryMatroid(Gf2Matrix::from_column_masks(m.rank(), kept));
  return out;
}

bool is_simple(const BinaryMatroid& m) {
  auto cols = std::vector<std::uint64_t>(m.columns().begin(), m.columns().end());
  if (std::find(cols.begin(), cols.end(), 0) != cols.end()) return false;
  std::sort(cols.begin(), cols.end());
  return std::adjacent_find(cols.begin(), cols.end()) == cols.end();
}

BinaryMatroid contract_independent(const BinaryMatroid& m, GroundSubset independent) {
  if (!independent.is_subset_of(m.ground())) throw MatroidError("contraction set outside the ground set");
  if (!m.is_independent(independent)) throw DependentContractionSet("contraction set is dependent");
  if (independent.empty()) return m;

  std::vector<std::uint64_t> rows(m.matrix().row_masks().begin(), m.matrix().row_masks().end());
  std::uint64_t assigned = 0;  // rows now labelled by an element of the contraction set
  std::vector<int> pending;

  // Elements already in the current basis keep their row.
  for (int e : independent.elements()) {
    const std::uint64_t col = m.column(e);
    if (std::has_single_bit(col) && !(assigned & col)) {
      assigned |= col;
    } else {
      pending.push_back(e);
    }
  }
  // The others are exchanged into the basis at the smallest eligible row.
  for (int e : pending) {
    const std::uint64_t bit = std::uint64_t{1} << (e - 1);
    std::size_t r = 0;
    while (r < rows.size() && (((assigned >> r) & 1U) || !(rows[r] & bit))) ++r;
    if (r == rows.size()) throw DependentContractionSet("contraction set is dependent");
    for (std::size_t g = 0; g < rows.size(); ++g) {
      if (g != r && (rows[g] & bit)) rows[g] ^= rows[r];
    }
    assigned |= std::uint64_t{1} << r;
  }

  std::vector<int> keep_rows;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!((assigned >> r) & 1U)) keep_rows.push_back(static_cast<int>(r) + 1);
  }
  std::vector<int> keep_cols = (m.ground() - independent).elements();
  const Gf2Matrix reduced = Gf2Matrix::from_row_masks(m.size(), std::move(rows));
  return BinaryMatroid(reduced.select_rows(keep_rows).select_columns(keep_cols));
}

BinaryMatroid contract_element(const BinaryMatroid& m, int e) {
  if (m.is_loop(e)) return delete_elements(m, GroundSubset{e});
  return contract_independent(m, GroundSubset{e});
}

BinaryMatroid delete_elements(const BinaryMatroid& m, GroundSubset s) {
  const std::vector<int> keep = (m.ground() - s).elements();
  return BinaryMatroid::from_any_matrix(m.matrix().select_columns(keep));
}

BinaryMatroid dual(const BinaryMatroid& m) { return BinaryMatroid(nullspace_basis(m.matrix())); }

bool is_connected(const BinaryMatroid& m) {
  const int n = m.size();
  if (n == 0) return true;
  if (n == 1) return !m.is_loop(1);

  std::vector<int> parent(static_cast<std::size_t>(n + 1));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  int classes = n;
  for (auto c : circuits(m)) {
    const auto elems = c.elements();
    for (std::size_t i = 1; i < elems.size(); ++i) {
      const int a = find(elems[0]);
      const int b = find(elems[i]);
      if (a != b) {
        parent[static_cast<std::size_t>(b)] = a;
        --classes;
      }
    }
    if (classes == 1) return true;
  }
  return false;
}

std::uint64_t general_linear_order(int k) {
  // prod_{i<k} (2^k - 2^i)
  std::uint64_t order = 1;
  for (int i = 0; i < k; ++i) {
    if (k >= 64) return UINT64_MAX;
    const std::uint64_t factor = (std::uint64_t{1} << k) - (std::uint64_t{1} << i);
    if (__builtin_mul_overflow(order, factor, &order)) return UINT64_MAX;
  }
  return order;
}

namespace {

std::uint64_t apply_images(std::span<const std::uint64_t> images, std::uint64_t v) {
  std::uint64_t out = 0;
  for (; v != 0; v &= v - 1) out ^= images[static_cast<std::size_t>(std::countr_zero(v))];
  return out;
}

}  // namespace

bool is_isomorphic_bruteforce(const BinaryMatroid& a, const BinaryMatroid& b, std::uint64_t max_group_order) {
  if (a.rank() != b.rank() || a.size() != b.size()) return false;
  const int k = a.rank();
  if (general_linear_order(k) > max_group_order) {
    throw OracleTooLarge("GL_" + std::to_string(k) + "(2) exceeds the configured search bound");
  }
  std::vector<std::uint64_t> target(b.columns().begin(), b.columns().end());
  std::sort(target.begin(), target.end());

  std::vector<std::uint64_t> images(static_cast<std::size_t>(k));
  std::vector<std::uint64_t> mapped(static_cast<std::size_t>(a.size()));
  const std::uint64_t space = std::uint64_t{1} << k;

  // Depth-first over ordered bases (images of the unit vectors).
  std::function<bool(int, XorBasis)> search = [&](int depth, XorBasis span) {
    if (depth == k) {
      for (std::size_t j = 0; j < mapped.size(); ++j) mapped[j] = apply_images(images, a.columns()[j]);
      std::sort(mapped.begin(), mapped.end());
      return mapped == target;
    }
    for (std::uint64_t v = 1; v < space; ++v) {
      XorBasis next = span;
      if (!next.insert(v)) continue;
      images[static_cast<std::size_t>(depth)] = v;
      if (search(depth + 1, next)) return true;
    }
    return false;
  };
  return search(0, XorBasis{});
}

}  // namespace regmat
