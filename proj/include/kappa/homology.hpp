#pragma once

#include "kappa/smith.hpp"
#include "kappa/symmetry.hpp"

#include <string>
#include <vector>

namespace kappa {

/// Action of an automorphism of κ on H2 of a smooth fiber in the
/// vanishing-cycle basis: sign · (P(σ) ⊕ 1) with P(σ)[σ(i)][i] = 1, so that
/// composition of maps goes to the matrix product.
inline IntMatrix homology_action(const PolyMap &f) {
  S4Image img = gamma_to_s4(f);
  IntMatrix m(5, 5);
  for (std::size_t i = 0; i < 4; ++i) m(std::size_t(img.perm[i]), i) = img.sign;
  m(4, 4) = img.sign;
  return m;
}

/// Permutation matrix part and sign recovered from a homology matrix of the
/// form ±(P(σ) ⊕ 1); nullopt when the matrix has another shape.
inline std::optional<S4Image> decompose_homology_matrix(const IntMatrix &m) {
  if (m.rows() != 5 || m.cols() != 5) return std::nullopt;
  const Integer &corner = m(4, 4);
  if (corner != 1 && corner != -1) return std::nullopt;
  S4Image img;
  img.sign = corner == 1 ? 1 : -1;
  for (std::size_t i = 0; i < 5; ++i)
    if ((i < 4 && m(4, i) != 0) || (i < 4 && m(i, 4) != 0)) return std::nullopt;
  std::array<bool, 4> hit{};
  for (std::size_t col = 0; col < 4; ++col) {
    int found = -1;
    for (std::size_t row = 0; row < 4; ++row) {
      if (m(row, col) == 0) continue;
      if (m(row, col) != img.sign || found >= 0) return std::nullopt;
      found = int(row);
    }
    if (found < 0 || hit[std::size_t(found)]) return std::nullopt;
    hit[std::size_t(found)] = true;
    img.perm[col] = found;
  }
  return img;
}

/// Sign by which a word acts on H2 of every smooth fiber of κ_{P,Q,R}:
/// (-1)^(number of tau letters) times the Jacobian sign of the tail.
inline int sign_character(const GroupWord &w, const KappaParams &k) {
  int s = 1;
  for (auto l : w.letters) {
    check_alphabet(l, k);
    if (!is_tau(l)) throw DomainError("sign character is defined on tau words");
    s = -s;
  }
  if (w.tail) s *= w.tail->jacobian_sign();
  return s;
}

enum class BasisTag { vanishing_cycle, alpha };

inline const char *basis_name(BasisTag b) {
  return b == BasisTag::vanishing_cycle ? "vc" : "alpha";
}

struct IntersectionForm {
  IntMatrix matrix;
  BasisTag basis;
};

inline IntersectionForm intersection_form(BasisTag basis) {
  if (basis == BasisTag::vanishing_cycle)
    return {IntMatrix{{-2, 0, 0, 0, 1},
                      {0, -2, 0, 0, 1},
                      {0, 0, -2, 0, 1},
                      {0, 0, 0, -2, 1},
                      {1, 1, 1, 1, -2}},
            basis};
  return {IntMatrix{{-4, 2, 0, 0, 0},
                    {2, -2, -1, 0, 0},
                    {0, -1, -2, 1, 0},
                    {0, 0, 1, -2, 2},
                    {0, 0, 0, 2, -4}},
          basis};
}

/// Columns are the vanishing cycles at (2,-2,-2), (-2,2,-2), (-2,-2,2),
/// (2,2,2), (0,0,0) in the alpha basis:
/// -(a4+a5), -a4, a1+a2, a2, -a3.
inline IntMatrix basis_change() {
  return IntMatrix{{0, 0, 1, 0, 0},
                   {0, 0, 1, 1, 0},
                   {0, 0, 0, 0, -1},
                   {-1, -1, 0, 0, 0},
                   {-1, 0, 0, 0, 0}};
}

/// Monodromy of the torus bundle bounding a cyclic chain of rational curves
/// with self-intersections e_i: product of [[0,-1],[1,-e_i]] in list order.
inline IntMatrix link_monodromy(const std::vector<Integer> &euler) {
  IntMatrix a = IntMatrix::identity(2);
  for (const auto &e : euler) {
    IntMatrix f(2, 2);
    f(0, 1) = -1;
    f(1, 0) = 1;
    f(1, 1) = -e;
    a = a * f;
  }
  return a;
}

/// H1 of the link at infinity, i.e. the cokernel of the intersection form.
inline AbelianGroup link_h1(const IntMatrix &form) { return cokernel(form); }

} // namespace kappa
