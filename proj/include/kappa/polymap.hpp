#pragma once

#include "kappa/multipoly.hpp"

#include <array>
#include <span>
#include <string>

namespace kappa {

using Point3 = std::array<Rational, 3>;

/// A polynomial self-map of affine 3-space, (x,y,z) -> (f1, f2, f3).
///
/// Composition follows (f∘g)(p) = f(g(p)).
class PolyMap {
public:
  PolyMap() : PolyMap(identity()) {}
  PolyMap(MultiPoly f1, MultiPoly f2, MultiPoly f3)
      : comps_{std::move(f1), std::move(f2), std::move(f3)} {
    for (const auto &c : comps_)
      if (c.vars() != xyz_vars())
        throw DomainError("map components must be polynomials in x, y, z");
  }

  static PolyMap identity() {
    return PolyMap(x(), y(), z());
  }

  static MultiPoly x() { return MultiPoly::variable(xyz_vars(), "x"); }
  static MultiPoly y() { return MultiPoly::variable(xyz_vars(), "y"); }
  static MultiPoly z() { return MultiPoly::variable(xyz_vars(), "z"); }
  static MultiPoly c(const Rational &v) { return MultiPoly::constant(xyz_vars(), v); }

  const MultiPoly &operator[](std::size_t i) const { return comps_[i]; }
  const std::array<MultiPoly, 3> &components() const { return comps_; }

  int degree() const {
    int d = -1;
    for (const auto &c : comps_) d = std::max(d, c.total_degree());
    return d;
  }

  friend bool operator==(const PolyMap &, const PolyMap &) = default;

  std::string to_string() const {
    return comps_[0].to_string() + "; " + comps_[1].to_string() + "; " +
           comps_[2].to_string();
  }

private:
  std::array<MultiPoly, 3> comps_;
};

/// Pulls a polynomial in x, y, z back along `g`.
inline MultiPoly pullback(const MultiPoly &p, const PolyMap &g) {
  return p.substitute(std::span<const MultiPoly>(g.components()));
}

inline PolyMap compose(const PolyMap &f, const PolyMap &g) {
  return PolyMap(pullback(f[0], g), pullback(f[1], g), pullback(f[2], g));
}

inline Point3 evaluate(const PolyMap &f, const Point3 &p) {
  std::span<const Rational> pt(p);
  return {f[0].evaluate(pt), f[1].evaluate(pt), f[2].evaluate(pt)};
}

/// Determinant of the 3x3 matrix of partial derivatives.
inline MultiPoly jacobian_determinant(const PolyMap &f) {
  MultiPoly d[3][3];
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) d[i][j] = f[i].derivative(j);
  return d[0][0] * (d[1][1] * d[2][2] - d[1][2] * d[2][1]) -
         d[0][1] * (d[1][0] * d[2][2] - d[1][2] * d[2][0]) +
         d[0][2] * (d[1][0] * d[2][1] - d[1][1] * d[2][0]);
}

} // namespace kappa
