#pragma once

#include "kappa/intmatrix.hpp"
#include "kappa/sqrt_algebra.hpp"

#include <array>
#include <string>
#include <vector>

namespace kappa {

using AlgPoint = std::array<SqrtAlgebraElem, 3>;

/// An affine line base + s·direction on the fiber κ = t of κ_{0,0,0}.
///
/// `axis` is the coordinate that is constant along the line (the coordinate
/// projection it is a special fiber of); `index` is 1..8 within that
/// projection, numbered as for the z-projection and carried to the other
/// projections by cyclic permutation of coordinates.
struct Line {
  int axis = 2;
  int index = 1;
  AlgPoint base;
  AlgPoint direction;

  std::string label() const {
    static const char *axes = "xyz";
    return std::string("L") + std::to_string(index) + axes[axis];
  }

  /// Equations of the line, e.g. `x = y + rm, z = 2`.
  std::string equations() const;

  friend bool operator==(const Line &, const Line &) = default;
};

namespace detail {

// Coefficients in s of κ(base + s·dir) - t, low degree first.
inline std::vector<SqrtAlgebraElem> fiber_residual(const Line &l) {
  const Rational &t = l.base[0].t();
  using E = SqrtAlgebraElem;
  using Poly = std::vector<E>;
  auto zero = [&] { return E::constant(t, 0); };
  auto mul = [&](const Poly &a, const Poly &b) {
    Poly r(a.size() + b.size() - 1, zero());
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    return r;
  };
  auto add = [&](Poly a, const Poly &b, int sign) {
    if (a.size() < b.size()) a.resize(b.size(), zero());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = sign > 0 ? a[i] + b[i] : a[i] - b[i];
    return a;
  };
  Poly x{l.base[0], l.direction[0]}, y{l.base[1], l.direction[1]},
      z{l.base[2], l.direction[2]};
  Poly r = add(add(mul(x, x), mul(y, y), 1), mul(z, z), 1);
  r = add(r, mul(mul(x, y), z), -1);
  r = add(r, Poly{E::constant(t, 2 + t)}, -1);
  return r;
}

inline std::string affine_expr(const SqrtAlgebraElem &slope, const char *var,
                               const SqrtAlgebraElem &offset) {
  std::string out;
  if (!slope.is_zero()) {
    std::string s = slope.to_string();
    if (s == "1")
      out = var;
    else if (s == "-1")
      out = std::string("-") + var;
    else if (slope.is_rational())
      out = s + "*" + var;
    else
      out = "(" + s + ")*" + var;
  }
  if (!offset.is_zero()) {
    std::string o = offset.to_string();
    if (out.empty())
      out = o;
    else if (o[0] == '-' && offset.is_rational())
      out += " - " + o.substr(1);
    else
      out += " + " + (offset.is_rational() ? o : "(" + o + ")");
  }
  return out.empty() ? "0" : out;
}

} // namespace detail

inline std::string Line::equations() const {
  // In z-projection terms the line is {u = slope·v + offset, w = level} with
  // (u, v, w) a cyclic relabelling of (x, y, z).
  static const char *names = "xyz";
  const int w = axis, u = (axis + 1) % 3, v = (axis + 2) % 3;
  const auto &du = direction[std::size_t(u)], &dv = direction[std::size_t(v)];
  // direction has dv = 1 for every line we build
  SqrtAlgebraElem slope = du * dv.inverse();
  SqrtAlgebraElem offset = base[std::size_t(u)] - slope * base[std::size_t(v)];
  char uname[2] = {names[u], 0}, vname[2] = {names[v], 0}, wname[2] = {names[w], 0};
  return std::string(uname) + " = " + detail::affine_expr(slope, vname, offset) + ", " +
         wname + " = " + base[std::size_t(w)].to_string();
}

/// True when κ(point) = t holds identically along the line.
inline bool lies_on_fiber(const Line &l) {
  for (const auto &c : detail::fiber_residual(l))
    if (!c.is_zero()) return false;
  return true;
}

/// The 24 affine lines on κ = t (t ≠ ±2): eight per coordinate projection.
/// Output order: x-projection L1..L8, then y, then z.
inline std::vector<Line> lines_on_fiber(const Rational &t) {
  if (t == 2 || t == -2) throw DomainError("fiber is singular for t = ±2");
  using E = SqrtAlgebraElem;
  const E zero = E::constant(t, 0), one = E::constant(t, 1), two = E::constant(t, 2);
  const E rm = E::r_minus(t), rp = E::r_plus(t);
  const E half = E::constant(t, Rational(1, 2));
  const E lam_sum = half * (rp + rm), lam_diff = half * (rp - rm);

  // z-projection lines as (base, direction) in (x, y, z).
  const std::array<std::pair<AlgPoint, AlgPoint>, 8> zlines{{
      {{rm, zero, two}, {one, one, zero}},
      {{-rm, zero, two}, {one, one, zero}},
      {{zero, zero, rp}, {lam_sum, one, zero}},
      {{zero, zero, rp}, {lam_diff, one, zero}},
      {{zero, zero, -rp}, {-lam_sum, one, zero}},
      {{zero, zero, -rp}, {-lam_diff, one, zero}},
      {{rm, zero, -two}, {-one, one, zero}},
      {{-rm, zero, -two}, {-one, one, zero}},
  }};

  // Cyclic relabelling sending the z-coordinate to coordinate `axis`:
  // new[(i + axis + 1) % 3] = old[i].
  auto rotate = [](const AlgPoint &p, int axis) {
    AlgPoint q = p;
    for (int i = 0; i < 3; ++i) q[std::size_t((i + axis + 1) % 3)] = p[std::size_t(i)];
    return q;
  };

  std::vector<Line> out;
  for (int axis = 0; axis < 3; ++axis)
    for (int i = 0; i < 8; ++i) {
      Line l;
      l.axis = axis;
      l.index = i + 1;
      l.base = rotate(zlines[std::size_t(i)].first, axis);
      l.direction = rotate(zlines[std::size_t(i)].second, axis);
      out.push_back(l);
    }
  return out;
}

inline const Line &find_line(const std::vector<Line> &lines, int axis, int index) {
  for (const auto &l : lines)
    if (l.axis == axis && l.index == index) return l;
  throw DomainError("no such line");
}

namespace detail {
inline AlgPoint cross(const AlgPoint &a, const AlgPoint &b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
inline SqrtAlgebraElem dot(const AlgPoint &a, const AlgPoint &b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}
inline bool is_zero(const AlgPoint &a) {
  return a[0].is_zero() && a[1].is_zero() && a[2].is_zero();
}
} // namespace detail

/// 1 when two distinct lines meet in the projective closure: either in
/// affine space or, for parallel lines, at their common point at infinity.
inline int line_incidence(const Line &a, const Line &b) {
  if (a.base[0].t() != b.base[0].t()) throw DomainError("lines lie on different fibers");
  const AlgPoint n = detail::cross(a.direction, b.direction);
  AlgPoint diff{b.base[0] - a.base[0], b.base[1] - a.base[1], b.base[2] - a.base[2]};
  if (detail::is_zero(n)) {
    if (detail::is_zero(detail::cross(diff, a.direction)))
      throw DomainError("incidence of a line with itself");
    return 1;
  }
  return detail::dot(diff, n).is_zero() ? 1 : 0;
}

/// Intersection number on the projective cubic: -1 on the diagonal.
inline int line_intersection(const Line &a, const Line &b) {
  if (a.axis == b.axis && a.index == b.index) return -1;
  return line_incidence(a, b);
}

/// A homology class as an integer combination of lines.
using LineClass = std::vector<std::pair<int, const Line *>>;

inline Integer class_product(const LineClass &u, const LineClass &v) {
  Integer s = 0;
  for (const auto &[cu, lu] : u)
    for (const auto &[cv, lv] : v) s += cu * cv * line_intersection(*lu, *lv);
  return s;
}

/// The vanishing-cycle basis written with z-projection lines:
/// L8-L5, L7-L5, L1-L3, L2-L3, L5-L4.
inline std::array<LineClass, 5> vanishing_cycle_classes(const std::vector<Line> &lines) {
  auto L = [&](int i) { return &find_line(lines, 2, i); };
  return {{{{1, L(8)}, {-1, L(5)}},
           {{1, L(7)}, {-1, L(5)}},
           {{1, L(1)}, {-1, L(3)}},
           {{1, L(2)}, {-1, L(3)}},
           {{1, L(5)}, {-1, L(4)}}}};
}

/// Gram matrix of the vanishing-cycle classes computed from line incidences.
inline IntMatrix class_gram(const Rational &t) {
  auto lines = lines_on_fiber(t);
  auto classes = vanishing_cycle_classes(lines);
  IntMatrix g(5, 5);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) g(i, j) = class_product(classes[i], classes[j]);
  return g;
}

} // namespace kappa
