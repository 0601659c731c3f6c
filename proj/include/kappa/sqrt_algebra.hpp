#pragma once

#include "kappa/rational.hpp"

#include <array>
#include <optional>
#include <string>

namespace kappa {

/// Element of Q[r-, r+]/(r-^2 = t-2, r+^2 = t+2) in the basis
/// {1, r-, r+, r- r+}.
///
/// Elements are kept reduced against the rational relations that hold for
/// the given t: when t-2 (resp. t+2) is a rational square, r- (resp. r+) is
/// replaced by its principal root; when only (t-2)(t+2) is a square, r+ is
/// rewritten as a rational multiple of r-. After reduction an element is zero
/// exactly when all stored coordinates are zero.
class SqrtAlgebraElem {
public:
  enum Slot { kOne = 0, kMinus = 1, kPlus = 2, kBoth = 3 };

  SqrtAlgebraElem() = default;
  SqrtAlgebraElem(Rational t, std::array<Rational, 4> coords)
      : t_(std::move(t)), c_(std::move(coords)) {
    reduce();
  }

  static SqrtAlgebraElem constant(const Rational &t, const Rational &v) {
    return SqrtAlgebraElem(t, {v, 0, 0, 0});
  }
  static SqrtAlgebraElem r_minus(const Rational &t) { return SqrtAlgebraElem(t, {0, 1, 0, 0}); }
  static SqrtAlgebraElem r_plus(const Rational &t) { return SqrtAlgebraElem(t, {0, 0, 1, 0}); }

  const Rational &t() const { return t_; }
  const std::array<Rational, 4> &coords() const { return c_; }
  const Rational &operator[](Slot s) const { return c_[s]; }

  bool is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
  bool is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

  friend bool operator==(const SqrtAlgebraElem &a, const SqrtAlgebraElem &b) {
    return a.t_ == b.t_ && a.c_ == b.c_;
  }

  friend SqrtAlgebraElem operator+(const SqrtAlgebraElem &a, const SqrtAlgebraElem &b) {
    check_same(a, b);
    std::array<Rational, 4> c;
    for (int i = 0; i < 4; ++i) c[i] = a.c_[i] + b.c_[i];
    return SqrtAlgebraElem(a.t_, c);
  }
  friend SqrtAlgebraElem operator-(const SqrtAlgebraElem &a) {
    std::array<Rational, 4> c;
    for (int i = 0; i < 4; ++i) c[i] = -a.c_[i];
    return SqrtAlgebraElem(a.t_, c);
  }
  friend SqrtAlgebraElem operator-(const SqrtAlgebraElem &a, const SqrtAlgebraElem &b) {
    return a + (-b);
  }

  friend SqrtAlgebraElem operator*(const SqrtAlgebraElem &a, const SqrtAlgebraElem &b) {
    check_same(a, b);
    const Rational m = a.t_ - 2, p = a.t_ + 2;
    const auto &u = a.c_;
    const auto &v = b.c_;
    // Basis products: r-·r- = m, r+·r+ = p, (r-r+)^2 = m·p.
    std::array<Rational, 4> c;
    c[kOne] = u[0] * v[0] + m * u[1] * v[1] + p * u[2] * v[2] + m * p * u[3] * v[3];
    c[kMinus] = u[0] * v[1] + u[1] * v[0] + p * (u[2] * v[3] + u[3] * v[2]);
    c[kPlus] = u[0] * v[2] + u[2] * v[0] + m * (u[1] * v[3] + u[3] * v[1]);
    c[kBoth] = u[0] * v[3] + u[3] * v[0] + u[1] * v[2] + u[2] * v[1];
    return SqrtAlgebraElem(a.t_, c);
  }

  friend SqrtAlgebraElem operator*(const Rational &k, const SqrtAlgebraElem &a) {
    return SqrtAlgebraElem::constant(a.t_, k) * a;
  }

  /// Image under r- -> s_minus·r-, r+ -> s_plus·r+ on the formal basis.
  SqrtAlgebraElem conjugate(int s_minus, int s_plus) const {
    return SqrtAlgebraElem(t_, {c_[0], s_minus * c_[1], s_plus * c_[2],
                                s_minus * s_plus * c_[3]});
  }

  /// Inverse via the product of the four conjugates. Throws on zero divisors.
  SqrtAlgebraElem inverse() const {
    SqrtAlgebraElem co = conjugate(-1, 1) * conjugate(1, -1) * conjugate(-1, -1);
    SqrtAlgebraElem norm = *this * co;
    if (!norm.is_rational() || norm[kOne] == 0)
      throw DomainError("zero divisor in square-root algebra (non-generic t)");
    return (Rational(1) / norm[kOne]) * co;
  }

  /// e.g. `3/2 + 1/2*rm - rp + rm*rp`
  std::string to_string() const {
    static const char *names[4] = {"", "rm", "rp", "rm*rp"};
    std::string out;
    for (int i = 0; i < 4; ++i) {
      const Rational &v = c_[i];
      if (v == 0) continue;
      Rational mag = abs(v);
      if (out.empty())
        out += sgn(v) < 0 ? "-" : "";
      else
        out += sgn(v) < 0 ? " - " : " + ";
      if (i == 0)
        out += kappa::to_string(mag);
      else if (mag == 1)
        out += names[i];
      else
        out += kappa::to_string(mag) + "*" + names[i];
    }
    return out.empty() ? "0" : out;
  }

private:
  static void check_same(const SqrtAlgebraElem &a, const SqrtAlgebraElem &b) {
    if (a.t_ != b.t_) throw DomainError("square-root algebra elements with different t");
  }

  void reduce() {
    const Rational m = t_ - 2, p = t_ + 2;
    if (auto rm = rational_sqrt(m)) {
      // r- = rm: fold r- and r-r+ into 1 and r+.
      c_[0] += *rm * c_[1];
      c_[2] += *rm * c_[3];
      c_[1] = 0;
      c_[3] = 0;
    }
    if (auto rp = rational_sqrt(p)) {
      c_[0] += *rp * c_[2];
      c_[1] += *rp * c_[3];
      c_[2] = 0;
      c_[3] = 0;
    }
    if (m == 0 || p == 0) return;
    if (c_[2] == 0 && c_[3] == 0) return;
    if (rational_sqrt(m) || rational_sqrt(p)) return;
    // Only (t-2)(t+2) may still be a square: r- r+ = eps·q with q >= 0 and
    // eps = +1 for t > 2 (both roots real), -1 for t < -2 (both imaginary).
    if (auto q = rational_sqrt(m * p)) {
      Rational prod = sgn(t_) > 0 ? *q : Rational(-*q);
      // r+ = prod / r- = (prod / m)·r-.
      c_[0] += prod * c_[3];
      c_[1] += prod / m * c_[2];
      c_[2] = 0;
      c_[3] = 0;
    }
  }

  Rational t_;
  std::array<Rational, 4> c_{};
};

} // namespace kappa
