#pragma once

#include "kappa/cubic_family.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace kappa {

/// Generator letters. The first six act on κ = κ_{0,0,0} only; the tau
/// involutions act on every κ_{P,Q,R}.
enum class Letter { alpha, beta, gamma, sigma_x, sigma_y, sigma_z, tau1, tau2, tau3 };

inline constexpr std::array<Letter, 9> kAllLetters{
    Letter::alpha,   Letter::beta,    Letter::gamma, Letter::sigma_x, Letter::sigma_y,
    Letter::sigma_z, Letter::tau1,    Letter::tau2,  Letter::tau3};
inline constexpr std::array<Letter, 3> kTauLetters{Letter::tau1, Letter::tau2, Letter::tau3};

inline const char *letter_symbol(Letter l) {
  switch (l) {
  case Letter::alpha: return "a";
  case Letter::beta: return "b";
  case Letter::gamma: return "g";
  case Letter::sigma_x: return "sx";
  case Letter::sigma_y: return "sy";
  case Letter::sigma_z: return "sz";
  case Letter::tau1: return "t1";
  case Letter::tau2: return "t2";
  case Letter::tau3: return "t3";
  }
  return "?";
}

inline bool is_tau(Letter l) {
  return l == Letter::tau1 || l == Letter::tau2 || l == Letter::tau3;
}
inline bool is_sigma(Letter l) {
  return l == Letter::sigma_x || l == Letter::sigma_y || l == Letter::sigma_z;
}
inline bool is_involution(Letter l) { return l != Letter::beta; }

// ---------------------------------------------------------------------------
// Signed permutations

/// Linear map whose i-th component is signs[i] · (variable perm[i]).
struct SignedPerm {
  std::array<int, 3> perm{0, 1, 2};
  std::array<int, 3> signs{1, 1, 1};

  static SignedPerm identity() { return {}; }

  PolyMap to_map() const {
    const std::array<MultiPoly, 3> v{PolyMap::x(), PolyMap::y(), PolyMap::z()};
    auto comp = [&](int i) {
      const MultiPoly &m = v[std::size_t(perm[std::size_t(i)])];
      return signs[std::size_t(i)] > 0 ? m : -m;
    };
    return PolyMap(comp(0), comp(1), comp(2));
  }

  /// (this ∘ other) as signed permutations.
  SignedPerm after(const SignedPerm &other) const {
    SignedPerm r;
    for (std::size_t i = 0; i < 3; ++i) {
      std::size_t j = std::size_t(perm[i]);
      r.perm[i] = other.perm[j];
      r.signs[i] = signs[i] * other.signs[j];
    }
    return r;
  }

  int permutation_sign() const {
    int inversions = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (perm[std::size_t(i)] > perm[std::size_t(j)]) ++inversions;
    return inversions % 2 ? -1 : 1;
  }

  int jacobian_sign() const { return permutation_sign() * signs[0] * signs[1] * signs[2]; }

  bool is_identity() const { return *this == SignedPerm{}; }

  /// `perm(yxz)` optionally followed by `flip(<axes>)`.
  std::string to_string() const {
    static const char *names = "xyz";
    std::string s = "perm(";
    for (int p : perm) s += names[p];
    s += ")";
    std::string flips;
    for (std::size_t i = 0; i < 3; ++i)
      if (signs[i] < 0) flips += names[i];
    if (!flips.empty()) s += "flip(" + flips + ")";
    return s;
  }

  friend bool operator==(const SignedPerm &, const SignedPerm &) = default;
};

inline std::vector<SignedPerm> all_signed_perms() {
  std::vector<SignedPerm> out;
  std::array<int, 3> p{0, 1, 2};
  do {
    for (int mask = 0; mask < 8; ++mask) {
      SignedPerm s;
      s.perm = p;
      for (int i = 0; i < 3; ++i) s.signs[std::size_t(i)] = (mask >> i) & 1 ? -1 : 1;
      out.push_back(s);
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// ---------------------------------------------------------------------------
// Words

/// A word w1 w2 ... wk [tail], denoting w1 ∘ w2 ∘ ... ∘ wk ∘ tail.
struct GroupWord {
  std::vector<Letter> letters;
  std::optional<SignedPerm> tail;

  std::size_t length() const { return letters.size(); }

  bool tau_only() const {
    for (auto l : letters)
      if (!is_tau(l)) return false;
    return true;
  }

  /// Cancels adjacent equal involutions and reduces runs of beta mod 3.
  GroupWord reduced() const {
    GroupWord r;
    r.tail = tail;
    std::vector<Letter> &st = r.letters;
    for (Letter l : letters) {
      if (is_involution(l) && !st.empty() && st.back() == l) {
        st.pop_back();
        continue;
      }
      if (l == Letter::beta && st.size() >= 2 && st[st.size() - 1] == Letter::beta &&
          st[st.size() - 2] == Letter::beta) {
        st.resize(st.size() - 2);
        continue;
      }
      st.push_back(l);
    }
    if (r.tail && r.tail->is_identity()) r.tail.reset();
    return r;
  }

  bool is_reduced() const { return reduced().letters == letters; }

  std::string to_string() const {
    std::string s;
    for (auto l : letters) {
      if (!s.empty()) s += " ";
      s += letter_symbol(l);
    }
    if (tail) {
      if (!s.empty()) s += " ";
      s += tail->to_string();
    }
    return s;
  }

  friend bool operator==(const GroupWord &, const GroupWord &) = default;
};

// ---------------------------------------------------------------------------
// Generators as polynomial maps

inline void check_alphabet(Letter l, const KappaParams &k) {
  if (!is_tau(l) && !k.is_zero())
    throw DomainError(std::string("generator ") + letter_symbol(l) +
                      " acts only on the parameter-free cubic (P = Q = R = 0)");
}

/// Composite `generator(l) ∘ f`, computed without general substitution.
inline PolyMap apply_left(Letter l, const KappaParams &k, const PolyMap &f) {
  check_alphabet(l, k);
  const MultiPoly &f1 = f[0], &f2 = f[1], &f3 = f[2];
  switch (l) {
  case Letter::alpha: return PolyMap(f2, f1, f1 * f2 - f3);
  case Letter::beta: return PolyMap(f2, f3, f1);
  case Letter::gamma: return PolyMap(f1, f2, f1 * f2 - f3);
  case Letter::sigma_x: return PolyMap(f1, -f2, -f3);
  case Letter::sigma_y: return PolyMap(-f1, f2, -f3);
  case Letter::sigma_z: return PolyMap(-f1, -f2, f3);
  case Letter::tau1: return PolyMap(f1, f2, f1 * f2 - f3 + k.R);
  case Letter::tau2: return PolyMap(f2 * f3 - f1 + k.P, f2, f3);
  case Letter::tau3: return PolyMap(f1, f1 * f3 - f2 + k.Q, f3);
  }
  throw DomainError("unknown generator");
}

inline PolyMap generator(Letter l, const KappaParams &k) {
  return apply_left(l, k, PolyMap::identity());
}

inline PolyMap word_to_map(const GroupWord &w, const KappaParams &k) {
  PolyMap f = w.tail ? w.tail->to_map() : PolyMap::identity();
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) f = apply_left(*it, k, f);
  return f;
}

/// κ_{P,Q,R} ∘ f == κ_{P,Q,R} as polynomials.
inline bool is_automorphism(const PolyMap &f, const KappaParams &k) {
  const MultiPoly kap = build_kappa(k);
  return pullback(kap, f) == kap;
}

/// Signed permutations preserving κ_{P,Q,R}.
inline std::vector<SignedPerm> affine_stabilizer(const KappaParams &k) {
  std::vector<SignedPerm> out;
  for (const auto &s : all_signed_perms())
    if (is_automorphism(s.to_map(), k)) out.push_back(s);
  return out;
}

/// Order of the affine stabilizer predicted by the case rule: 24 when
/// P = Q = R = 0, 6 when all equal and nonzero, 4 when exactly two vanish, 2
/// when exactly two coincide and are nonzero, 1 otherwise. The rule ignores
/// coincidences up to sign; see affine_stabilizer for the exact group.
inline std::size_t stabilizer_order_by_cases(const KappaParams &k) {
  const Rational &P = k.P, &Q = k.Q, &R = k.R;
  if (k.is_zero()) return 24;
  if (P == Q && Q == R) return 6;
  int zeros = (P == 0) + (Q == 0) + (R == 0);
  if (zeros == 2) return 4;
  if (P == Q || Q == R || P == R) return 2;
  return 1;
}

// ---------------------------------------------------------------------------
// Horowitz degree reduction

struct HorowitzResult {
  std::vector<Letter> word; // f = word_to_map(word) ∘ tail
  SignedPerm tail;
  /// Degree of the map before each reduction step.
  std::vector<int> degrees;

  GroupWord as_word() const {
    GroupWord w{word, tail};
    if (tail.is_identity()) w.tail.reset();
    return w;
  }
};

namespace detail {

// Slot replaced by each tau and the two slots multiplied.
struct TauShape {
  std::size_t target, i, j;
};
inline TauShape tau_shape(Letter l) {
  switch (l) {
  case Letter::tau1: return {2, 0, 1};
  case Letter::tau2: return {0, 1, 2};
  default: return {1, 0, 2};
  }
}
inline const Rational &tau_constant(Letter l, const KappaParams &k) {
  return l == Letter::tau1 ? k.R : l == Letter::tau2 ? k.P : k.Q;
}

} // namespace detail

/// Writes an automorphism f of κ_{P,Q,R} as (τ_{i1} ∘ ... ∘ τ_{ik}) ∘ ℓ with
/// a reduced tau word and ℓ an affine automorphism. At every step exactly one
/// tau must lower the degree; anything else is reported.
inline HorowitzResult horowitz_decompose(PolyMap f, const KappaParams &k) {
  HorowitzResult res;
  // Each tau is an automorphism, so the current map is one iff the input is.
  auto fail = [&](const std::string &what) {
    if (!is_automorphism(f, k)) throw DomainError("map is not an automorphism");
    throw InvariantError(what);
  };

  while (f.degree() > 1) {
    const int deg = f.degree();
    res.degrees.push_back(deg);
    std::optional<Letter> reducer;
    std::optional<MultiPoly> new_component;
    int reducers = 0;
    for (Letter l : kTauLetters) {
      auto [target, i, j] = detail::tau_shape(l);
      const MultiPoly &fi = f[i], &fj = f[j], &fk = f[target];
      int pd = (fi.is_zero() || fj.is_zero()) ? -1 : fi.total_degree() + fj.total_degree();
      int dk = fk.total_degree();
      int new_deg;
      std::optional<MultiPoly> comp;
      if (pd != dk && std::max(pd, dk) > 0) {
        new_deg = std::max(pd, dk);
      } else {
        comp = fi * fj - fk + detail::tau_constant(l, k);
        new_deg = comp->total_degree();
      }
      int others = -1;
      for (std::size_t s = 0; s < 3; ++s)
        if (s != target) others = std::max(others, f[s].total_degree());
      if (std::max(others, new_deg) < deg) {
        ++reducers;
        reducer = l;
        new_component = comp;
      }
    }
    if (reducers != 1)
      fail(reducers == 0 ? "no tau involution lowers the degree"
                         : "more than one tau involution lowers the degree");
    auto [target, i, j] = detail::tau_shape(*reducer);
    std::array<MultiPoly, 3> next = f.components();
    next[target] = new_component ? *new_component
                                 : f[i] * f[j] - f[target] + detail::tau_constant(*reducer, k);
    f = PolyMap(next[0], next[1], next[2]);
    res.word.push_back(*reducer);
  }

  for (const auto &s : all_signed_perms())
    if (s.to_map() == f) {
      if (!is_automorphism(f, k)) throw DomainError("map is not an automorphism");
      res.tail = s;
      return res;
    }
  fail("affine residue is not a signed permutation");
  return res;
}

// ---------------------------------------------------------------------------
// Dehn twists

enum class TwistCurve { X, Y };

inline PolyMap dehn_twist(TwistCurve c, const KappaParams &k) {
  const MultiPoly x = PolyMap::x(), y = PolyMap::y(), z = PolyMap::z();
  if (c == TwistCurve::X)
    return PolyMap(x, x * x * y - x * z + k.R * x - y + k.Q, x * y - z + k.R);
  return PolyMap(y * z - x + k.P, y, y * y * z - x * y + k.P * y - z + k.R);
}

// ---------------------------------------------------------------------------
// PGL(2, Z)

/// Integer 2x2 matrix of determinant ±1 modulo ±1, stored with its first
/// nonzero entry (row-major) positive.
class PglClass {
public:
  PglClass() : PglClass(1, 0, 0, 1) {}
  PglClass(Integer a, Integer b, Integer c, Integer d) : e_{a, b, c, d} {
    Integer det = a * d - b * c;
    if (det != 1 && det != -1) throw DomainError("matrix is not invertible over Z");
    for (const auto &v : e_)
      if (v != 0) {
        if (v < 0)
          for (auto &w : e_) w = -w;
        break;
      }
  }
  const Integer &a() const { return e_[0]; }
  const Integer &b() const { return e_[1]; }
  const Integer &c() const { return e_[2]; }
  const Integer &d() const { return e_[3]; }
  int det() const { return a() * d() - b() * c() == 1 ? 1 : -1; }

  friend PglClass operator*(const PglClass &m, const PglClass &n) {
    return PglClass(m.a() * n.a() + m.b() * n.c(), m.a() * n.b() + m.b() * n.d(),
                    m.c() * n.a() + m.d() * n.c(), m.c() * n.b() + m.d() * n.d());
  }
  friend bool operator==(const PglClass &, const PglClass &) = default;

  std::string to_string() const {
    return "[[" + a().get_str() + "," + b().get_str() + "],[" + c().get_str() + "," +
           d().get_str() + "]]";
  }

private:
  std::array<Integer, 4> e_;
};

inline PglClass letter_matrix(Letter l) {
  switch (l) {
  case Letter::alpha: return PglClass(0, -1, 1, 0);
  case Letter::beta: return PglClass(1, -1, 1, 0);
  case Letter::gamma: return PglClass(-1, 0, 0, 1);
  case Letter::tau1: return PglClass(1, 0, 0, -1);
  case Letter::tau2: return PglClass(1, 0, 2, -1);
  case Letter::tau3: return PglClass(1, 2, 0, -1);
  default: return PglClass(); // Σ is the kernel
  }
}

/// Image of a signed permutation in PGL(2,Z): its permutation part written
/// in the generators (y,x,z) = α∘γ and (y,z,x) = β; sign changes lie in Σ.
inline PglClass signed_perm_matrix(const SignedPerm &s) {
  const std::array<std::vector<Letter>, 6> words{{
      {},
      {Letter::alpha, Letter::gamma},
      {Letter::beta},
      {Letter::beta, Letter::beta},
      {Letter::alpha, Letter::gamma, Letter::beta},
      {Letter::beta, Letter::alpha, Letter::gamma},
  }};
  SignedPerm target;
  target.perm = s.perm;
  for (const auto &w : words) {
    PolyMap m = word_to_map(GroupWord{w, std::nullopt}, KappaParams{});
    if (m == target.to_map()) {
      PglClass r;
      for (auto l : w) r = r * letter_matrix(l);
      return r;
    }
  }
  throw InvariantError("permutation not reached by the S3 generators");
}

/// Product of generator matrices in word order.
inline PglClass word_to_pgl(const GroupWord &w) {
  PglClass r;
  for (auto l : w.letters) r = r * letter_matrix(l);
  if (w.tail) r = r * signed_perm_matrix(*w.tail);
  return r;
}

struct PglCharacters {
  int det = 1;
  /// Action on the nonzero vectors e1, e2, e1+e2 of (Z/2)^2 (indices 0, 1, 2).
  std::array<int, 3> mod2_perm{0, 1, 2};
  /// Off-diagonal entries both even.
  bool congruence_member = true;

  bool mod2_is_identity() const { return mod2_perm == std::array<int, 3>{0, 1, 2}; }
};

inline PglCharacters pgl_characters(const PglClass &m) {
  PglCharacters ch;
  ch.det = m.det();
  auto mod2 = [](const Integer &v) { return int(mpz_odd_p(v.get_mpz_t()) ? 1 : 0); };
  const int a = mod2(m.a()), b = mod2(m.b()), c = mod2(m.c()), d = mod2(m.d());
  auto index = [](int u, int v) { return u && v ? 2 : u ? 0 : 1; };
  const std::array<std::array<int, 2>, 3> vecs{{{1, 0}, {0, 1}, {1, 1}}};
  for (std::size_t i = 0; i < 3; ++i) {
    int u = (a * vecs[i][0] + b * vecs[i][1]) % 2;
    int v = (c * vecs[i][0] + d * vecs[i][1]) % 2;
    ch.mod2_perm[i] = index(u, v);
  }
  ch.congruence_member = b == 0 && c == 0;
  return ch;
}

// ---------------------------------------------------------------------------
// The S4 x C2 quotient at P = Q = R = 0

/// The four singular points of κ on V_2, in basis order.
inline const std::array<Point3, 4> &singular_points_v2() {
  static const std::array<Point3, 4> pts{{{2, -2, -2}, {-2, 2, -2}, {-2, -2, 2}, {2, 2, 2}}};
  return pts;
}

struct S4Image {
  std::array<int, 4> perm{0, 1, 2, 3}; // f(p_i) = p_{perm[i]}
  int sign = 1;                        // constant Jacobian determinant
};

/// Constant value of the Jacobian determinant; throws unless it is ±1.
inline int constant_jacobian_sign(const PolyMap &f) {
  MultiPoly j = jacobian_determinant(f);
  if (!j.is_constant()) throw DomainError("Jacobian determinant is not constant");
  Rational v = j.constant_term();
  if (v != 1 && v != -1) throw DomainError("Jacobian determinant is not ±1");
  return v == 1 ? 1 : -1;
}

inline S4Image gamma_to_s4(const PolyMap &f) {
  S4Image img;
  img.sign = constant_jacobian_sign(f);
  const auto &pts = singular_points_v2();
  for (std::size_t i = 0; i < 4; ++i) {
    Point3 q = evaluate(f, pts[i]);
    auto it = std::find(pts.begin(), pts.end(), q);
    if (it == pts.end()) throw DomainError("map does not permute the singular points of V_2");
    img.perm[i] = int(it - pts.begin());
  }
  return img;
}

} // namespace kappa
