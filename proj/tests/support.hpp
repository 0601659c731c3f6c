#pragma once

#include "kappa/cubic_family.hpp"
#include "kappa/intmatrix.hpp"
#include "kappa/sqrt_algebra.hpp"
#include "kappa/symmetry.hpp"

#include <ostream>
#include <random>

namespace kappa {

// Readable gtest failure messages.
inline void PrintTo(const MultiPoly &p, std::ostream *os) { *os << p.to_string(); }
inline void PrintTo(const PolyMap &f, std::ostream *os) { *os << f.to_string(); }
inline void PrintTo(const UPoly &p, std::ostream *os) { *os << p.to_string(); }
inline void PrintTo(const SqrtAlgebraElem &e, std::ostream *os) { *os << e.to_string(); }
inline void PrintTo(const PglClass &m, std::ostream *os) { *os << m.to_string(); }
inline void PrintTo(const SignedPerm &s, std::ostream *os) { *os << s.to_string(); }
inline void PrintTo(const GroupWord &w, std::ostream *os) { *os << "[" << w.to_string() << "]"; }
inline void PrintTo(const IntMatrix &m, std::ostream *os) {
  for (const auto &row : m.to_strings()) {
    *os << "\n ";
    for (const auto &e : row) *os << " " << e;
  }
}

} // namespace kappa

namespace kappa::testing {

inline std::mt19937_64 &rng() {
  static std::mt19937_64 gen(20240611);
  return gen;
}

inline long rand_int(long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng());
}

/// Small rational with numerator in [-n, n] and denominator in [1, d].
inline Rational rand_rational(long n = 5, long d = 3) {
  return make_rational(rand_int(-n, n), rand_int(1, d));
}

inline KappaParams rand_params(long n = 5, long d = 3) {
  return {rand_rational(n, d), rand_rational(n, d), rand_rational(n, d)};
}

inline MultiPoly rand_poly(int max_deg, int terms, const VarList &vars = xyz_vars()) {
  MultiPoly p = MultiPoly::constant(vars, 0);
  for (int t = 0; t < terms; ++t) {
    MultiPoly m = MultiPoly::constant(vars, rand_rational());
    int deg = int(rand_int(0, max_deg));
    for (int i = 0; i < deg; ++i)
      m *= MultiPoly::variable(vars, vars[std::size_t(rand_int(0, long(vars.size()) - 1))]);
    p += m;
  }
  return p;
}

inline PolyMap rand_map(int max_deg, int terms) {
  return PolyMap(rand_poly(max_deg, terms), rand_poly(max_deg, terms), rand_poly(max_deg, terms));
}

/// Reduced tau word of exactly the given length.
inline std::vector<Letter> rand_tau_word(std::size_t len) {
  std::vector<Letter> w;
  while (w.size() < len) {
    Letter l = kTauLetters[std::size_t(rand_int(0, 2))];
    if (!w.empty() && w.back() == l) continue;
    w.push_back(l);
  }
  return w;
}

/// Word over the Γ alphabet {a, b, g, sx, sy, sz}.
inline GroupWord rand_gamma_word(std::size_t len) {
  static const std::array<Letter, 6> gamma_letters{Letter::alpha,   Letter::beta,
                                                   Letter::gamma,   Letter::sigma_x,
                                                   Letter::sigma_y, Letter::sigma_z};
  GroupWord w;
  for (std::size_t i = 0; i < len; ++i) w.letters.push_back(gamma_letters[std::size_t(rand_int(0, 5))]);
  return w;
}

/// Integer SL(2) matrix built from random elementary moves.
inline Sl2Matrix rand_sl2(int steps = 6, long bound = 3) {
  Sl2Matrix m(1, 0, 0, 1);
  for (int i = 0; i < steps; ++i) {
    long k = rand_int(-bound, bound);
    m = rand_int(0, 1) ? m * Sl2Matrix(1, k, 0, 1) : m * Sl2Matrix(1, 0, k, 1);
  }
  return m;
}

} // namespace kappa::testing
