#include "kappa/cubic_family.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace kappa;
using kappa::testing::rand_params;
using kappa::testing::rand_sl2;

namespace {

// Gradient of κ_{P,Q,R} reduced modulo the locus polynomial; all three
// components must vanish for every root.
bool locus_is_critical(const KappaParams &k, const AlgebraicLocus &l) {
  const auto &[x, y, z] = l.coordinates;
  const UPoly &m = l.minpoly;
  auto c = [](const Rational &v) { return UPoly::constant(v); };
  UPoly gx = (c(2) * x - y * z - c(k.P)) % m;
  UPoly gy = (c(2) * y - x * z - c(k.Q)) % m;
  UPoly gz = (c(2) * z - x * y - c(k.R)) % m;
  return gx.is_zero() && gy.is_zero() && gz.is_zero();
}

// Real roots of a monic quadratic or linear polynomial, numerically.
std::vector<double> real_roots(const UPoly &p) {
  if (p.degree() == 1) return {-p.coeff(0).get_d() / p.coeff(1).get_d()};
  if (p.degree() != 2) return {};
  double b = p.coeff(1).get_d() / p.coeff(2).get_d(), c = p.coeff(0).get_d() / p.coeff(2).get_d();
  double disc = b * b - 4 * c;
  if (disc < 0) return {};
  return {(-b + std::sqrt(disc)) / 2, (-b - std::sqrt(disc)) / 2};
}

double upoly_at(const UPoly &p, double v) {
  double acc = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * v + it->get_d();
  return acc;
}

} // namespace

TEST(BuildKappa, Examples) {
  const MultiPoly X = PolyMap::x(), Y = PolyMap::y(), Z = PolyMap::z();
  EXPECT_EQ(build_kappa({0, 0, 0}), X * X + Y * Y + Z * Z - X * Y * Z - Rational(2));
  EXPECT_EQ(kappa_value({1, 0, 0}, {Rational(1, 2), 0, 0}), Rational(-9, 4));
  MultiPoly s = build_kappa_symbolic();
  EXPECT_EQ(s.specialize("P", 0).specialize("Q", 0).specialize("R", 0),
            build_kappa({0, 0, 0}));
}

TEST(BuildKappa, SymbolicAgreesWithNumeric) {
  for (int it = 0; it < 20; ++it) {
    KappaParams k = rand_params();
    MultiPoly s = build_kappa_symbolic().specialize("P", k.P).specialize("Q", k.Q).specialize("R", k.R);
    EXPECT_EQ(s, build_kappa(k));
  }
}

TEST(CriticalPoints, ParameterFreeCubic) {
  auto pts = critical_points({0, 0, 0});
  std::vector<Point3> got;
  for (const auto &cp : pts) {
    ASSERT_TRUE(cp.point);
    EXPECT_EQ(cp.multiplicity, 1u);
    EXPECT_TRUE(hessian({0, 0, 0}, *cp.point).nondegenerate);
    got.push_back(*cp.point);
  }
  std::vector<Point3> expect{{2, -2, -2}, {-2, 2, -2}, {-2, -2, 2}, {2, 2, 2}, {0, 0, 0}};
  std::sort(got.begin(), got.end());
  std::sort(expect.begin(), expect.end());
  EXPECT_EQ(got, expect);
}

TEST(CriticalPoints, OneZeroZero) {
  const KappaParams k{1, 0, 0};
  auto pts = critical_points(k);
  EXPECT_EQ(milnor_total(pts), 5u);
  int rational = 0;
  std::vector<UPoly> minpolys;
  for (const auto &cp : pts) {
    EXPECT_EQ(cp.multiplicity, 1u);
    if (cp.point) {
      ++rational;
      EXPECT_EQ(*cp.point, (Point3{Rational(1, 2), 0, 0}));
    } else {
      EXPECT_TRUE(locus_is_critical(k, *cp.locus));
      minpolys.push_back(cp.locus->minpoly);
    }
  }
  EXPECT_EQ(rational, 1);
  std::sort(minpolys.begin(), minpolys.end(),
            [](const UPoly &a, const UPoly &b) { return a.coeff(0) > b.coeff(0); });
  ASSERT_EQ(minpolys.size(), 2u);
  EXPECT_EQ(minpolys[0], UPoly({-3, 0, 1}));
  EXPECT_EQ(minpolys[1], UPoly({-5, 0, 1}));
  // oracle: (2, z, z) with z^2 = 3 and (-2, -z, z) with z^2 = 5 solve the gradient system
  for (const auto &[sx, sy, zz] : {std::tuple{2, 1, 3}, std::tuple{-2, -1, 5}}) {
    AlgebraicLocus l;
    l.minpoly = UPoly({-zz, 0, 1});
    l.coordinates = {UPoly::constant(sx), UPoly({0, sy}), UPoly({0, 1})};
    EXPECT_TRUE(locus_is_critical(k, l));
  }
}

TEST(CriticalValues, Examples) {
  auto cv = critical_values(KappaParams{0, 0, 0});
  EXPECT_EQ(cv.exact, (std::map<Rational, unsigned>{{2, 4}, {-2, 1}}));
  EXPECT_TRUE(cv.algebraic.empty());
  auto cv1 = critical_values(KappaParams{1, 0, 0});
  EXPECT_EQ(cv1.exact, (std::map<Rational, unsigned>{{Rational(-9, 4), 1}, {0, 2}, {4, 2}}));
  // oracle: direct evaluation at (2, √3, √3): 4 + 3 + 3 - 2·3 - 2 - 2
  EXPECT_EQ(Rational(4 + 3 + 3 - 6 - 2 - 2), Rational(0));
  EXPECT_TRUE(fiber_is_smooth({0, 0, 0}, Rational(17, 4)));
  EXPECT_FALSE(fiber_is_smooth({0, 0, 0}, Rational(2)));
  EXPECT_FALSE(fiber_is_smooth({1, 0, 0}, Rational(4)));
}

TEST(CriticalValues, IrrationalValuesAnnihilated) {
  const KappaParams k{1, 2, 3};
  auto pts = critical_points(k);
  for (const auto &cp : pts) {
    if (cp.value) continue;
    // oracle: evaluate κ numerically at each real root of a quadratic locus
    for (double r : real_roots(cp.locus->minpoly)) {
      double x = upoly_at(cp.locus->coordinates[0], r), y = upoly_at(cp.locus->coordinates[1], r),
             z = upoly_at(cp.locus->coordinates[2], r);
      double v = x * x + y * y + z * z - x * y * z - x - 2 * y - 3 * z - 2;
      EXPECT_NEAR(upoly_at(cp.value_poly, v), 0.0, 1e-6 * (1 + std::abs(v)));
    }
  }
}

TEST(CriticalPoints, RandomParamsTotalFive) {
  for (int it = 0; it < 100; ++it) {
    KappaParams k = rand_params();
    auto pts = critical_points(k);
    EXPECT_EQ(milnor_total(pts), 5u) << k.to_string();
    for (const auto &cp : pts) {
      if (cp.point)
        EXPECT_TRUE(is_critical(k, *cp.point)) << k.to_string();
      else
        EXPECT_TRUE(locus_is_critical(k, *cp.locus)) << k.to_string();
    }
  }
}

TEST(CriticalPoints, SpecialLocusOnTwoPlanes) {
  // P = Q = 0: points with z = ±2 come from direct substitution
  for (const Rational &R : {Rational(0), Rational(1), Rational(7, 3), Rational(4), Rational(-4)}) {
    const KappaParams k{0, 0, R};
    auto pts = critical_points(k);
    EXPECT_EQ(milnor_total(pts), 5u) << k.to_string();
    for (const auto &cp : pts)
      if (cp.point)
        EXPECT_TRUE(is_critical(k, *cp.point));
      else
        EXPECT_TRUE(locus_is_critical(k, *cp.locus));
  }
}

TEST(CriticalPoints, DegeneratePointDeformationOracle) {
  // κ_{0,0,4} has a degenerate critical point at (0,0,2).
  auto pts = critical_points({0, 0, 4});
  bool found = false;
  for (const auto &cp : pts)
    if (cp.point && *cp.point == Point3{0, 0, 2}) {
      found = true;
      EXPECT_FALSE(hessian({0, 0, 4}, *cp.point).nondegenerate);
      // oracle: for R = 4 - ε the points (0,0,2-ε/2) and (±√ε, ±√ε, 2) merge into it
      const KappaParams near{0, 0, Rational(4) - Rational(1, 10000)};
      unsigned nearby = 0;
      for (const auto &q : critical_points(near)) {
        if (q.point) {
          if (abs((*q.point)[0]) < 1 && abs((*q.point)[1]) < 1 && abs((*q.point)[2] - 2) < 1) ++nearby;
          continue;
        }
        for (double r : real_roots(q.locus->minpoly)) {
          double x = upoly_at(q.locus->coordinates[0], r), y = upoly_at(q.locus->coordinates[1], r),
                 z = upoly_at(q.locus->coordinates[2], r);
          if (std::abs(x) < 1 && std::abs(y) < 1 && std::abs(z - 2) < 1) ++nearby;
        }
      }
      EXPECT_EQ(cp.multiplicity, nearby);
      EXPECT_EQ(cp.multiplicity, 3u);
    }
  EXPECT_TRUE(found);
}

TEST(Hessian, Examples) {
  auto h = hessian({0, 0, 0}, {0, 0, 0});
  EXPECT_TRUE(h.nondegenerate);
  EXPECT_EQ(h.matrix, (Matrix3{{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}}));
  auto hc = hessian_local_chart({0, 0, 0}, {2, 2, 2});
  EXPECT_EQ(hc.matrix, (Matrix3{{{2, -2, -2}, {-2, 2, -2}, {-2, -2, 2}}}));
  for (const Point3 &p : {Point3{2, -2, -2}, Point3{-2, 2, -2}, Point3{-2, -2, 2}})
    EXPECT_EQ(hessian_local_chart({0, 0, 0}, p).matrix, hc.matrix);
  EXPECT_TRUE(hessian({1, 0, 0}, {Rational(1, 2), 0, 0}).nondegenerate);
  EXPECT_THROW(hessian({0, 0, 0}, {1, 0, 0}), DomainError);
}

TEST(Traces, Examples) {
  auto z = traces_to_params(std::array<Rational, 4>{0, 0, 0, 0});
  EXPECT_EQ(z.P, 0);
  EXPECT_EQ(z.S, 2);
  auto two = traces_to_params(std::array<Rational, 4>{2, 2, 2, 2});
  EXPECT_EQ(two.P, -8);
  EXPECT_EQ(two.Q, -8);
  EXPECT_EQ(two.R, -8);
  EXPECT_EQ(two.S, -30);
}

TEST(Traces, Symbolic) {
  const VarList tv{"t"};
  MultiPoly t = MultiPoly::variable(tv, "t");
  auto s = traces_to_params(std::array<MultiPoly, 4>{t, t, t, t});
  EXPECT_EQ(s.P, Rational(-2) * t * t);
  EXPECT_EQ(s.Q, s.P);
  EXPECT_EQ(s.R, s.P);
  EXPECT_EQ(s.S, Rational(2) - Rational(4) * t * t - t.pow(4));
}

TEST(Witness, Torus) {
  Sl2Matrix I;
  auto c = torus_character(I, I);
  EXPECT_EQ(c.point, (Point3{2, 2, 2}));
  EXPECT_EQ(c.commutator_trace, 2);
  EXPECT_TRUE(c.fricke_holds);
  auto d = torus_character(Sl2Matrix(1, 1, 0, 1), Sl2Matrix(1, 0, 1, 1));
  EXPECT_EQ(d.point, (Point3{2, 2, 3}));
  EXPECT_EQ(d.commutator_trace, 3);
  EXPECT_TRUE(d.fricke_holds);
  EXPECT_THROW(Sl2Matrix(1, 1, 1, 1), DomainError);
}

TEST(Witness, Sphere) {
  Sl2Matrix I;
  auto c = sphere_character(I, I, I);
  EXPECT_EQ(c.traces, (std::array<Rational, 4>{2, 2, 2, 2}));
  EXPECT_EQ(c.point, (Point3{-2, -2, -2}));
  EXPECT_EQ(kappa_value(c.params, c.point), -30);
  EXPECT_TRUE(c.on_surface);
  auto d = sphere_character(Sl2Matrix(1, 1, 0, 1), Sl2Matrix(1, 0, 1, 1), I);
  EXPECT_EQ(d.traces, (std::array<Rational, 4>{2, 2, 2, 3}));
  EXPECT_EQ(d.point, (Point3{-3, -2, -2}));
  EXPECT_TRUE(d.on_surface);
}

TEST(Witness, RandomIdentities) {
  for (int it = 0; it < 100; ++it) {
    Sl2Matrix A = rand_sl2(), B = rand_sl2(), C = rand_sl2();
    auto t = torus_character(A, B);
    // oracle: recompute tr[A,B] from entries
    Sl2Matrix ABinv = A * B * A.inverse() * B.inverse();
    EXPECT_EQ(kappa_value({0, 0, 0}, t.point), ABinv.trace());
    EXPECT_TRUE(sphere_character(A, B, C).on_surface);
  }
  // rational entries too
  Sl2Matrix R(Rational(1, 2), 3, Rational(-1, 4), Rational(1, 2));
  EXPECT_TRUE(torus_character(R, Sl2Matrix(2, 1, 1, 1)).fricke_holds);
  EXPECT_TRUE(sphere_character(R, Sl2Matrix(2, 1, 1, 1), Sl2Matrix(1, Rational(1, 3), 0, 1)).on_surface);
}
