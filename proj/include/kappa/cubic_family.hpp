#pragma once

#include "kappa/polymap.hpp"
#include "kappa/univariate.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace kappa {

struct KappaParams {
  Rational P{0}, Q{0}, R{0};

  bool is_zero() const { return P == 0 && Q == 0 && R == 0; }
  std::array<Rational, 3> as_array() const { return {P, Q, R}; }
  friend bool operator==(const KappaParams &, const KappaParams &) = default;
  std::string to_string() const {
    return kappa::to_string(P) + "," + kappa::to_string(Q) + "," + kappa::to_string(R);
  }
};

/// x^2 + y^2 + z^2 - xyz - Px - Qy - Rz - 2 over {x, y, z}.
inline MultiPoly build_kappa(const KappaParams &k) {
  const MultiPoly x = PolyMap::x(), y = PolyMap::y(), z = PolyMap::z();
  return x * x + y * y + z * z - x * y * z - k.P * x - k.Q * y - k.R * z - Rational(2);
}

/// The same cubic with P, Q, R as indeterminates, over {x, y, z, P, Q, R}.
inline MultiPoly build_kappa_symbolic() {
  const VarList &v = symbolic_vars();
  auto var = [&](const char *n) { return MultiPoly::variable(v, n); };
  MultiPoly x = var("x"), y = var("y"), z = var("z");
  return x * x + y * y + z * z - x * y * z - var("P") * x - var("Q") * y -
         var("R") * z - Rational(2);
}

inline Rational kappa_value(const KappaParams &k, const Point3 &p) {
  const auto &[x, y, z] = p;
  return x * x + y * y + z * z - x * y * z - k.P * x - k.Q * y - k.R * z - 2;
}

inline Point3 kappa_gradient(const KappaParams &k, const Point3 &p) {
  const auto &[x, y, z] = p;
  return {2 * x - y * z - k.P, 2 * y - x * z - k.Q, 2 * z - x * y - k.R};
}

inline bool is_critical(const KappaParams &k, const Point3 &p) {
  auto g = kappa_gradient(k, p);
  return g[0] == 0 && g[1] == 0 && g[2] == 0;
}

// ---------------------------------------------------------------------------
// Critical locus

/// Univariate eliminant obtained by solving two gradient equations for the
/// other coordinates off the locus `axis = ±2`:
///   axis z: (2z - R)(4 - z^2)^2 - (2P + Qz)(2Q + Pz)
/// and its cyclic analogues for axes x and y.
inline UPoly eliminant(const KappaParams &k, int axis) {
  // Rotate (P, Q, R) so the chosen axis plays the role of z.
  const Rational &own = axis == 0 ? k.P : axis == 1 ? k.Q : k.R;
  const Rational &a = axis == 0 ? k.Q : axis == 1 ? k.R : k.P;
  const Rational &b = axis == 0 ? k.R : axis == 1 ? k.P : k.Q;
  const UPoly four_minus = UPoly({4, 0, -1});
  return (UPoly({-own, 2})) * four_minus * four_minus -
         (UPoly({2 * a, b})) * (UPoly({2 * b, a}));
}

/// Multiplicity of `root` as a zero of `p`.
inline unsigned root_order(UPoly p, const Rational &root) {
  unsigned k = 0;
  const UPoly lin({-root, 1});
  while (!p.is_zero() && p(root) == 0) {
    p = p / lin;
    ++k;
  }
  return k;
}

/// A finite set of critical points that are Galois-conjugate over Q, given by
/// a square-free monic polynomial in one coordinate and the three coordinates
/// as polynomials in that coordinate's root (reduced modulo `minpoly`).
struct AlgebraicLocus {
  int variable = 2; // 0 = x, 1 = y, 2 = z
  UPoly minpoly;
  std::array<UPoly, 3> coordinates;

  std::string coordinate_string(int i) const {
    static const char *names[3] = {"x", "y", "z"};
    return coordinates[std::size_t(i)].to_string(names[variable]);
  }
};

struct CriticalPoint {
  std::optional<Point3> point;         // rational coordinates
  std::optional<AlgebraicLocus> locus; // otherwise
  unsigned multiplicity = 1;           // Milnor number of each point described
  /// Exact critical value when it is rational.
  std::optional<Rational> value;
  /// Otherwise a square-free polynomial whose roots are the critical values.
  UPoly value_poly;

  /// Number of points this entry stands for.
  unsigned count() const { return point ? 1u : unsigned(locus->minpoly.degree()); }
};

namespace detail {

inline UPoly reduce_kappa_on_locus(const KappaParams &k, const AlgebraicLocus &l) {
  const auto &[x, y, z] = l.coordinates;
  const UPoly &m = l.minpoly;
  auto c = [](const Rational &v) { return UPoly::constant(v); };
  UPoly v = x * x + y * y + z * z - ((x * y) % m) * z - c(k.P) * x - c(k.Q) * y -
            c(k.R) * z - c(2);
  return v % m;
}

// Attaches critical values. A locus whose points take several rational
// values is split along gcd(minpoly, value - c) for each such value c.
inline std::vector<CriticalPoint> with_values(const KappaParams &k, CriticalPoint cp) {
  if (cp.point) {
    cp.value = kappa_value(k, *cp.point);
    return {cp};
  }
  const UPoly v = reduce_kappa_on_locus(k, *cp.locus);
  if (v.degree() <= 0) {
    cp.value = v.coeff(0);
    return {cp};
  }
  auto restrict_to = [&](const UPoly &m) {
    CriticalPoint part = cp;
    part.locus->minpoly = m;
    for (auto &c : part.locus->coordinates) c = c % m;
    if (m.degree() == 1) {
      const Rational root = -m.coeff(0) / m.coeff(1);
      const auto &xyz = part.locus->coordinates;
      part.point = Point3{xyz[0](root), xyz[1](root), xyz[2](root)};
      part.locus.reset();
    }
    return part;
  };
  std::vector<CriticalPoint> out;
  UPoly rest = cp.locus->minpoly;
  for (const auto &c : rational_roots(multiplication_charpoly(v, rest))) {
    UPoly g = gcd(rest, v - UPoly::constant(c));
    if (g.degree() <= 0) continue;
    CriticalPoint part = restrict_to(g);
    part.value = c;
    out.push_back(part);
    rest = rest / g;
  }
  if (rest.degree() > 0) {
    CriticalPoint part = restrict_to(rest.monic());
    UPoly chi = multiplication_charpoly(v % rest, rest);
    UPoly sq = UPoly::constant(1);
    for (const auto &[f, e] : squarefree_decomposition(chi)) sq = sq * f;
    part.value_poly = sq.monic();
    out.push_back(part);
  }
  return out;
}

inline bool hessian_nondegenerate_at(const KappaParams &, const Point3 &p) {
  const auto &[x, y, z] = p;
  // det [[2,-z,-y],[-z,2,-x],[-y,-x,2]]
  Rational det = 8 - 2 * x * x - 2 * y * y - 2 * z * z - 2 * x * y * z;
  return det != 0;
}

// Solutions of the gradient system with z = 2·sign, i.e. the second
// coordinate root of y^2 + (sign·P/2)·y - (4 - sign·R)·sign = 0 (see below).
// Returns rational points and at most one irreducible quadratic locus.
inline void special_locus(const KappaParams &k, int sign, std::vector<Point3> &rational,
                          std::vector<AlgebraicLocus> &algebraic) {
  // z = 2:  requires P = -Q; x = y + P/2, xy = 4 - R.
  // z = -2: requires P =  Q; x = P/2 - y, xy = -4 - R.
  const Rational zval = 2 * sign;
  if (sign > 0 ? (k.P != -k.Q) : (k.P != k.Q)) return;
  const Rational half = k.P / 2;
  // x = sign·y + half·... written uniformly as x = s·y + h
  const Rational s = sign > 0 ? Rational(1) : Rational(-1);
  const Rational h = half;
  const Rational xy = sign > 0 ? Rational(4 - k.R) : Rational(-4 - k.R);
  // (s·y + h)·y = xy  ->  s·y^2 + h·y - xy = 0
  const UPoly quad({-xy, h, s});
  const UPoly monic = quad.monic();
  auto roots = rational_roots(monic);
  for (const auto &r : roots) rational.push_back({s * r + h, r, zval});
  if (roots.empty()) {
    AlgebraicLocus l;
    l.variable = 1;
    l.minpoly = monic;
    l.coordinates = {UPoly({h, s}), UPoly({0, 1}), UPoly::constant(zval)};
    algebraic.push_back(l);
  }
}

} // namespace detail

/// All critical points of κ_{P,Q,R} with their Milnor numbers.
///
/// Points off z = ±2 come from the z-eliminant: x and y are rational
/// functions of z there, so the Milnor number equals the root order. Points
/// on z = ±2 are found by direct substitution; their Milnor number is read
/// from the x- or y-eliminant when that coordinate avoids ±2, else from the
/// Hessian, else from the fact that the Milnor numbers always total 5.
inline std::vector<CriticalPoint> critical_points(const KappaParams &k) {
  std::vector<CriticalPoint> out;
  const UPoly ez = eliminant(k, 2);
  const UPoly four_minus({4, 0, -1});

  for (const auto &[factor, mult] : squarefree_decomposition(ez)) {
    // Strip the spurious roots z = ±2.
    UPoly f = factor;
    for (int s : {2, -2})
      if (f(Rational(s)) == 0) f = f / UPoly({Rational(-s), 1});
    if (f.degree() <= 0) continue;
    auto roots = rational_roots(f);
    for (const auto &z : roots) {
      Rational d = 4 - z * z;
      CriticalPoint cp;
      cp.point = Point3{(2 * k.P + k.Q * z) / d, (2 * k.Q + k.P * z) / d, z};
      cp.multiplicity = mult;
      out.push_back(cp);
      f = f / UPoly({-z, 1});
    }
    if (f.degree() <= 0) continue;
    AlgebraicLocus l;
    l.variable = 2;
    l.minpoly = f.monic();
    UPoly inv = inverse_mod(four_minus, l.minpoly);
    l.coordinates = {(UPoly({2 * k.P, k.Q}) * inv) % l.minpoly,
                     (UPoly({2 * k.Q, k.P}) * inv) % l.minpoly, UPoly({0, 1}) % l.minpoly};
    CriticalPoint cp;
    cp.locus = l;
    cp.multiplicity = mult;
    out.push_back(cp);
  }

  // z = ±2.
  std::vector<Point3> rational;
  std::vector<AlgebraicLocus> algebraic;
  for (int s : {1, -1}) detail::special_locus(k, s, rational, algebraic);

  std::vector<std::size_t> undetermined;
  const UPoly ex = eliminant(k, 0), ey = eliminant(k, 1);
  for (const auto &p : rational) {
    CriticalPoint cp;
    cp.point = p;
    auto off = [](const Rational &v) { return v != 2 && v != -2; };
    if (off(p[0]))
      cp.multiplicity = root_order(ex, p[0]);
    else if (off(p[1]))
      cp.multiplicity = root_order(ey, p[1]);
    else if (detail::hessian_nondegenerate_at(k, p))
      cp.multiplicity = 1;
    else
      undetermined.push_back(out.size());
    out.push_back(cp);
  }
  for (const auto &l : algebraic) {
    // y is irrational, hence so is x = ±y + h; read the order from the
    // x-eliminant along the conjugate pair.
    CriticalPoint cp;
    cp.locus = l;
    UPoly x_min = UPoly({0});
    {
      // minpoly of x = s·y + h: substitute y = s·(x - h).
      const Rational s = l.coordinates[0].coeff(1), h = l.coordinates[0].coeff(0);
      const UPoly y_of_x({-s * h, s});
      UPoly acc;
      UPoly pw = UPoly::constant(1);
      for (const auto &c : l.minpoly.coeffs()) {
        acc = acc + UPoly::constant(c) * pw;
        pw = pw * y_of_x;
      }
      x_min = acc.monic();
    }
    unsigned m = 0;
    UPoly rest = ex;
    while (!rest.is_zero() && (rest % x_min).is_zero()) {
      rest = rest / x_min;
      ++m;
    }
    cp.multiplicity = m;
    out.push_back(cp);
  }
  if (!undetermined.empty()) {
    unsigned known = 0;
    for (std::size_t i = 0; i < out.size(); ++i)
      if (std::find(undetermined.begin(), undetermined.end(), i) == undetermined.end())
        known += out[i].multiplicity * out[i].count();
    unsigned share = known < 5 ? (5 - known) / unsigned(undetermined.size()) : 0;
    for (auto i : undetermined) out[i].multiplicity = share;
  }

  std::vector<CriticalPoint> valued;
  for (auto &cp : out)
    for (auto &part : detail::with_values(k, cp)) valued.push_back(std::move(part));
  return valued;
}

/// Critical values grouped with total Milnor number; irrational values are
/// reported by an annihilating square-free polynomial instead.
struct CriticalValues {
  std::map<Rational, unsigned> exact;
  std::vector<std::pair<UPoly, unsigned>> algebraic; // (polynomial, total multiplicity)

  unsigned total() const {
    unsigned t = 0;
    for (const auto &[v, m] : exact) t += m;
    for (const auto &[p, m] : algebraic) t += m;
    return t;
  }
};

inline CriticalValues critical_values(const std::vector<CriticalPoint> &pts) {
  CriticalValues cv;
  for (const auto &cp : pts) {
    unsigned total = cp.multiplicity * cp.count();
    if (cp.value)
      cv.exact[*cp.value] += total;
    else
      cv.algebraic.push_back({cp.value_poly, total});
  }
  return cv;
}

inline CriticalValues critical_values(const KappaParams &k) {
  return critical_values(critical_points(k));
}

inline bool fiber_is_smooth(const KappaParams &k, const Rational &t) {
  CriticalValues cv = critical_values(k);
  if (cv.exact.count(t)) return false;
  for (const auto &[p, m] : cv.algebraic)
    if (p(t) == 0) return false;
  return true;
}

/// Total Milnor number, i.e. the rank of H2 of a smooth fiber.
inline unsigned milnor_total(const std::vector<CriticalPoint> &pts) {
  unsigned t = 0;
  for (const auto &cp : pts) t += cp.multiplicity * cp.count();
  return t;
}

using Matrix3 = std::array<std::array<Rational, 3>, 3>;

struct HessianResult {
  Matrix3 matrix;
  bool nondegenerate = false;
};

inline Rational determinant(const Matrix3 &m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

/// Matrix of second partials of κ_{P,Q,R} at a critical point.
inline HessianResult hessian(const KappaParams &k, const Point3 &p) {
  if (!is_critical(k, p)) throw DomainError("point is not critical");
  const auto &[x, y, z] = p;
  HessianResult h;
  h.matrix = {{{2, -z, -y}, {-z, 2, -x}, {-y, -x, 2}}};
  h.nondegenerate = determinant(h.matrix) != 0;
  return h;
}

/// Hessian in the chart x̂ = e1·x - 2, ŷ = e2·y - 2, ẑ = e1·e2·z - 2 centred
/// at (2e1, 2e2, 2e1e2).
inline HessianResult hessian_local_chart(const KappaParams &k, const Point3 &p) {
  HessianResult h = hessian(k, p);
  std::array<Rational, 3> e;
  for (int i = 0; i < 3; ++i) {
    if (abs(p[std::size_t(i)]) != 2)
      throw DomainError("local chart is defined only at points with coordinates ±2");
    e[std::size_t(i)] = p[std::size_t(i)] / 2;
  }
  if (e[2] != e[0] * e[1]) throw DomainError("point is not of the form (2e1, 2e2, 2e1e2)");
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) h.matrix[i][j] *= e[i] * e[j];
  return h;
}

// ---------------------------------------------------------------------------
// Trace dictionary

/// Parameters and right-hand side of the relative character variety of the
/// four-holed sphere with boundary traces t: κ_{P,Q,R}(x,y,z) = S.
template <class T> struct SphereParams {
  T P, Q, R, S;
};

template <class T> SphereParams<T> traces_to_params(const std::array<T, 4> &t) {
  const T &t1 = t[0], &t2 = t[1], &t3 = t[2], &t4 = t[3];
  SphereParams<T> out{-(t1 * t2 + t3 * t4), -(t1 * t4 + t2 * t3), -(t1 * t3 + t2 * t4),
                      T(Rational(2) - t1 * t1 - t2 * t2 - t3 * t3 - t4 * t4 -
                        t1 * t2 * t3 * t4)};
  return out;
}

inline KappaParams as_kappa_params(const SphereParams<Rational> &s) { return {s.P, s.Q, s.R}; }

/// 2x2 rational matrix of determinant one.
class Sl2Matrix {
public:
  Sl2Matrix() : Sl2Matrix(1, 0, 0, 1) {}
  Sl2Matrix(Rational a, Rational b, Rational c, Rational d)
      : e_{std::move(a), std::move(b), std::move(c), std::move(d)} {
    if (e_[0] * e_[3] - e_[1] * e_[2] != 1) throw DomainError("matrix is not unimodular");
  }

  const Rational &a() const { return e_[0]; }
  const Rational &b() const { return e_[1]; }
  const Rational &c() const { return e_[2]; }
  const Rational &d() const { return e_[3]; }
  Rational trace() const { return e_[0] + e_[3]; }

  friend Sl2Matrix operator*(const Sl2Matrix &m, const Sl2Matrix &n) {
    return Sl2Matrix(m.a() * n.a() + m.b() * n.c(), m.a() * n.b() + m.b() * n.d(),
                     m.c() * n.a() + m.d() * n.c(), m.c() * n.b() + m.d() * n.d());
  }
  Sl2Matrix inverse() const { return Sl2Matrix(d(), -b(), -c(), a()); }
  friend bool operator==(const Sl2Matrix &, const Sl2Matrix &) = default;

private:
  std::array<Rational, 4> e_;
};

struct TorusCharacter {
  Point3 point; // (tr A, tr B, tr AB)
  Rational commutator_trace;
  /// κ(x, y, z) == tr[A, B]
  bool fricke_holds = false;
};

inline TorusCharacter torus_character(const Sl2Matrix &A, const Sl2Matrix &B) {
  TorusCharacter ch;
  ch.point = {A.trace(), B.trace(), (A * B).trace()};
  ch.commutator_trace = (A * B * A.inverse() * B.inverse()).trace();
  ch.fricke_holds = kappa_value(KappaParams{}, ch.point) == ch.commutator_trace;
  return ch;
}

struct SphereCharacter {
  std::array<Rational, 4> traces;
  Point3 point; // (-tr D1D2, -tr D2D3, -tr D3D1)
  KappaParams params;
  Rational S;
  /// κ_{P,Q,R}(point) == S
  bool on_surface = false;
};

inline SphereCharacter sphere_character(const Sl2Matrix &D1, const Sl2Matrix &D2,
                                        const Sl2Matrix &D3) {
  const Sl2Matrix D4 = (D1 * D2 * D3).inverse();
  SphereCharacter ch;
  ch.traces = {D1.trace(), D2.trace(), D3.trace(), D4.trace()};
  ch.point = {-(D1 * D2).trace(), -(D2 * D3).trace(), -(D3 * D1).trace()};
  auto sp = traces_to_params(ch.traces);
  ch.params = as_kappa_params(sp);
  ch.S = sp.S;
  ch.on_surface = kappa_value(ch.params, ch.point) == ch.S;
  return ch;
}

} // namespace kappa
