#pragma once

#include "kappa/intmatrix.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace kappa {

/// U·A·V = D with U, V unimodular and d1 | d2 | ... on the diagonal of D.
struct SnfResult {
  IntMatrix D, U, V;

  std::vector<Integer> diagonal() const {
    std::vector<Integer> d;
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
    return d;
  }
};

namespace detail {

inline void swap_rows(IntMatrix &m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}
inline void swap_cols(IntMatrix &m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}
// row[dst] += k * row[src]
inline void add_row(IntMatrix &m, std::size_t dst, std::size_t src, const Integer &k) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += k * m(src, j);
}
inline void add_col(IntMatrix &m, std::size_t dst, std::size_t src, const Integer &k) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += k * m(i, src);
}
inline void negate_row(IntMatrix &m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

} // namespace detail

/// Smith normal form by row/column reduction, pivoting on the entry of
/// smallest absolute value in the trailing block.
inline SnfResult smith_normal_form(const IntMatrix &A) {
  using namespace detail;
  const std::size_t m = A.rows(), n = A.cols();
  IntMatrix D = A, U = IntMatrix::identity(m), V = IntMatrix::identity(n);

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      std::optional<std::pair<std::size_t, std::size_t>> pivot;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (D(i, j) != 0 &&
              (!pivot || abs(D(i, j)) < abs(D(pivot->first, pivot->second))))
            pivot = {i, j};
      if (!pivot) return SnfResult{D, U, V};

      swap_rows(D, t, pivot->first);
      swap_rows(U, t, pivot->first);
      swap_cols(D, t, pivot->second);
      swap_cols(V, t, pivot->second);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (D(i, t) == 0) continue;
        Integer q = D(i, t) / D(t, t);
        add_row(D, i, t, -q);
        add_row(U, i, t, -q);
        if (D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (D(t, j) == 0) continue;
        Integer q = D(t, j) / D(t, t);
        add_col(D, j, t, -q);
        add_col(V, j, t, -q);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the whole trailing block; otherwise fold an
      // offending row in and reduce again.
      std::optional<std::size_t> bad_row;
      for (std::size_t i = t + 1; i < m && !bad_row; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (D(i, j) % D(t, t) != 0) {
            bad_row = i;
            break;
          }
      if (!bad_row) break;
      add_row(D, t, *bad_row, 1);
      add_row(U, t, *bad_row, 1);
    }
    if (D(t, t) < 0) {
      negate_row(D, t);
      negate_row(U, t);
    }
  }
  return SnfResult{D, U, V};
}

/// Finitely generated abelian group Z^rank ⊕ ⊕ Z/torsion[i].
struct AbelianGroup {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  friend bool operator==(const AbelianGroup &, const AbelianGroup &) = default;

  std::string to_string() const {
    std::string out;
    auto add = [&](const std::string &s) {
      if (!out.empty()) out += " + ";
      out += s;
    };
    if (free_rank == 1) add("Z");
    else if (free_rank > 1) add("Z^" + std::to_string(free_rank));
    for (const auto &d : torsion) add("Z/" + d.get_str());
    return out.empty() ? "0" : out;
  }
};

/// Cokernel of A viewed as a map Z^cols -> Z^rows.
inline AbelianGroup cokernel(const IntMatrix &A) {
  SnfResult s = smith_normal_form(A);
  AbelianGroup g;
  std::size_t nonzero = 0;
  for (const auto &d : s.diagonal()) {
    if (d == 0) continue;
    ++nonzero;
    if (d != 1) g.torsion.push_back(d);
  }
  g.free_rank = A.rows() - nonzero;
  return g;
}

} // namespace kappa
