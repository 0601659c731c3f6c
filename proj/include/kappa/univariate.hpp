#pragma once

#include "kappa/multipoly.hpp"

#include <algorithm>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace kappa {

/// Dense univariate polynomial over Q, coefficients stored low degree first.
class UPoly {
public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  static UPoly constant(const Rational &v) { return UPoly({v}); }
  static UPoly monomial(const Rational &v, std::size_t deg) {
    std::vector<Rational> c(deg + 1, Rational(0));
    c[deg] = v;
    return UPoly(std::move(c));
  }

  /// Reads a polynomial in a single named variable.
  static UPoly from_multipoly(const MultiPoly &p, std::size_t var) {
    std::vector<Rational> c;
    for (const auto &[m, v] : p.terms()) {
      for (std::size_t i = 0; i < p.nvars(); ++i)
        if (i != var && m.exp[i]) throw DomainError("polynomial is not univariate");
      std::size_t e = m.exp[var];
      if (c.size() <= e) c.resize(e + 1, Rational(0));
      c[e] += v;
    }
    return UPoly(std::move(c));
  }

  int degree() const { return c_.empty() ? -1 : int(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational> &coeffs() const { return c_; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  friend bool operator==(const UPoly &, const UPoly &) = default;

  Rational operator()(const Rational &x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  friend UPoly operator+(const UPoly &a, const UPoly &b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return UPoly(std::move(c));
  }
  friend UPoly operator-(const UPoly &a) {
    UPoly r = a;
    for (auto &v : r.c_) v = -v;
    return r;
  }
  friend UPoly operator-(const UPoly &a, const UPoly &b) { return a + (-b); }
  friend UPoly operator*(const UPoly &a, const UPoly &b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(c));
  }

  /// Quotient and remainder; divisor must be nonzero.
  friend std::pair<UPoly, UPoly> divmod(const UPoly &a, const UPoly &b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    if (a.degree() < b.degree()) return {UPoly(), a};
    std::vector<Rational> rem = a.c_;
    std::vector<Rational> q(a.c_.size() - b.c_.size() + 1, Rational(0));
    for (std::size_t k = q.size(); k-- > 0;) {
      Rational f = rem[k + b.c_.size() - 1] / b.c_.back();
      q[k] = f;
      if (f == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) rem[k + j] -= f * b.c_[j];
    }
    rem.resize(b.c_.size() - 1);
    return {UPoly(std::move(q)), UPoly(std::move(rem))};
  }
  friend UPoly operator%(const UPoly &a, const UPoly &b) { return divmod(a, b).second; }
  friend UPoly operator/(const UPoly &a, const UPoly &b) { return divmod(a, b).first; }

  UPoly monic() const {
    if (is_zero()) return {};
    UPoly r = *this;
    Rational lc = leading();
    for (auto &v : r.c_) v /= lc;
    return r;
  }

  UPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * unsigned(i);
    return UPoly(std::move(d));
  }

  std::string to_string(const std::string &var = "z") const {
    std::vector<MultiPoly::Term> t;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      Monomial m;
      m.exp[0] = std::uint16_t(i);
      t.push_back({m, c_[i]});
    }
    return MultiPoly::from_terms(VarList{var}, std::move(t)).to_string();
  }

private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

/// Monic greatest common divisor.
inline UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Extended Euclid: returns (g, s, t) with s·a + t·b = g, g monic.
inline std::tuple<UPoly, UPoly, UPoly> extended_gcd(const UPoly &a, const UPoly &b) {
  UPoly r0 = a, r1 = b, s0 = UPoly::constant(1), s1, t0, t1 = UPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  UPoly lc = UPoly::constant(Rational(1) / r0.leading());
  return {r0 * lc, s0 * lc, t0 * lc};
}

/// Inverse of `a` modulo `m`; throws when they share a factor.
inline UPoly inverse_mod(const UPoly &a, const UPoly &m) {
  auto [g, s, t] = extended_gcd(a % m, m);
  if (g.degree() != 0) throw DomainError("polynomial not invertible modulo modulus");
  return s % m;
}

/// Yun's square-free decomposition: p = c · ∏ f_k^k with f_k square-free and
/// pairwise coprime. Returns the (f_k, k) with deg f_k > 0, f_k monic.
inline std::vector<std::pair<UPoly, unsigned>> squarefree_decomposition(const UPoly &p) {
  std::vector<std::pair<UPoly, unsigned>> out;
  if (p.degree() <= 0) return out;
  UPoly f = p.monic();
  UPoly a = gcd(f, f.derivative());
  UPoly b = f / a;
  UPoly c = f.derivative() / a;
  UPoly d = c - b.derivative();
  for (unsigned k = 1; b.degree() > 0; ++k) {
    UPoly g = gcd(b, d);
    if (g.degree() > 0) out.push_back({g, k});
    b = b / g;
    c = d / g;
    d = c - b.derivative();
  }
  return out;
}

namespace detail {

inline std::vector<Integer> positive_divisors(Integer n) {
  n = abs(n);
  std::vector<std::pair<Integer, unsigned>> factors;
  for (Integer p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) factors.push_back({p, e});
  }
  if (n > 1) factors.push_back({n, 1});
  std::vector<Integer> divs{1};
  for (const auto &[p, e] : factors) {
    std::size_t base = divs.size();
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

} // namespace detail

/// All rational roots of a nonzero polynomial, without multiplicity.
inline std::vector<Rational> rational_roots(const UPoly &p) {
  std::vector<Rational> roots;
  if (p.degree() <= 0) return roots;
  // Strip the root at zero, then clear denominators.
  std::size_t low = 0;
  while (p.coeff(low) == 0) ++low;
  if (low) roots.push_back(Rational(0));
  Integer lcm_den = 1;
  for (const auto &c : p.coeffs()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> ints;
  for (std::size_t i = low; i < p.coeffs().size(); ++i) {
    Rational scaled = p.coeff(i) * lcm_den;
    ints.push_back(scaled.get_num());
  }
  if (ints.size() <= 1) return roots;
  UPoly reduced(std::vector<Rational>(p.coeffs().begin() + std::ptrdiff_t(low), p.coeffs().end()));
  for (const auto &num : detail::positive_divisors(ints.front()))
    for (const auto &den : detail::positive_divisors(ints.back()))
      for (int s : {1, -1}) {
        Integer g = gcd(num, den);
        if (g != 1) continue;
        Rational cand = make_rational(Integer(s * num), den);
        if (reduced(cand) == 0) roots.push_back(cand);
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

/// Characteristic polynomial of multiplication by `r` on Q[z]/(m).
inline UPoly multiplication_charpoly(const UPoly &r, const UPoly &m) {
  const std::size_t n = std::size_t(m.degree());
  // Column j holds r·z^j mod m.
  std::vector<std::vector<Rational>> M(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t j = 0; j < n; ++j) {
    UPoly col = (r * UPoly::monomial(1, j)) % m;
    for (std::size_t i = 0; i < n; ++i) M[i][j] = col.coeff(i);
  }
  // Faddeev-LeVerrier.
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  std::vector<std::vector<Rational>> Mk(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t k = 1; k <= n; ++k) {
    // Mk <- M·(Mk_prev + c[n-k+1]·I)
    std::vector<std::vector<Rational>> A = Mk;
    for (std::size_t i = 0; i < n; ++i) A[i][i] += c[n - k + 1];
    std::vector<std::vector<Rational>> P(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) {
        if (M[i][l] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) P[i][j] += M[i][l] * A[l][j];
      }
    Mk = std::move(P);
    Rational tr(0);
    for (std::size_t i = 0; i < n; ++i) tr += Mk[i][i];
    c[n - k] = -tr / unsigned(k);
  }
  return UPoly(std::move(c));
}

} // namespace kappa
