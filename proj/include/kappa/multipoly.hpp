#pragma once

#include "kappa/rational.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace kappa {

/// Exponent vector over at most `kMaxVars` variables; unused slots stay zero.
struct Monomial {
  static constexpr std::size_t kMaxVars = 8;
  std::array<std::uint16_t, kMaxVars> exp{};

  unsigned degree() const {
    unsigned d = 0;
    for (auto e : exp) d += e;
    return d;
  }
  Monomial operator*(const Monomial &o) const {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      unsigned s = unsigned(exp[i]) + o.exp[i];
      if (s > 0xffffu) throw DomainError("monomial exponent overflow");
      m.exp[i] = std::uint16_t(s);
    }
    return m;
  }
  friend bool operator==(const Monomial &, const Monomial &) = default;
};

/// Graded-lex: higher total degree first, ties broken lexicographically with
/// the first variable most significant.
inline bool graded_lex_before(const Monomial &a, const Monomial &b) {
  unsigned da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  return a.exp > b.exp;
}

struct MonomialHash {
  std::size_t operator()(const Monomial &m) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (auto e : m.exp) {
      h ^= e;
      h *= 0x100000001b3ull;
    }
    return std::size_t(h);
  }
};

using VarList = std::vector<std::string>;

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept sorted in graded-lex order with no zero coefficients, so
/// structural equality is polynomial equality. Binary operations require both
/// operands to share the same variable list.
class MultiPoly {
public:
  using Term = std::pair<Monomial, Rational>;

  MultiPoly() = default;
  explicit MultiPoly(VarList vars) : vars_(std::move(vars)) {
    if (vars_.size() > Monomial::kMaxVars)
      throw DomainError("too many polynomial variables");
  }

  static MultiPoly constant(VarList vars, const Rational &c) {
    MultiPoly p(std::move(vars));
    if (c != 0) p.terms_.push_back({Monomial{}, c});
    return p;
  }

  static MultiPoly variable(VarList vars, const std::string &name) {
    MultiPoly p(std::move(vars));
    Monomial m;
    m.exp[p.index_of(name)] = 1;
    p.terms_.push_back({m, Rational(1)});
    return p;
  }

  /// Builds from arbitrary (possibly repeated, zero, or unsorted) terms.
  static MultiPoly from_terms(VarList vars, std::vector<Term> terms) {
    MultiPoly p(std::move(vars));
    std::unordered_map<Monomial, Rational, MonomialHash> acc;
    for (auto &[m, c] : terms) acc[m] += c;
    p.assign_from(acc);
    return p;
  }

  const VarList &vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const std::vector<Term> &terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  std::size_t index_of(const std::string &name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) throw DomainError("unknown variable " + name);
    return std::size_t(it - vars_.begin());
  }

  /// Total degree; -1 for the zero polynomial.
  int total_degree() const {
    return terms_.empty() ? -1 : int(terms_.front().first.degree());
  }

  int degree_in(std::size_t var) const {
    int d = -1;
    for (const auto &[m, c] : terms_) d = std::max(d, int(m.exp[var]));
    return d;
  }

  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.front().first.degree() == 0);
  }

  Rational constant_term() const {
    if (!terms_.empty() && terms_.back().first.degree() == 0)
      return terms_.back().second;
    return Rational(0);
  }

  Rational coefficient(const Monomial &m) const {
    auto it = std::lower_bound(
        terms_.begin(), terms_.end(), m,
        [](const Term &t, const Monomial &k) { return graded_lex_before(t.first, k); });
    if (it != terms_.end() && it->first == m) return it->second;
    return Rational(0);
  }

  friend bool operator==(const MultiPoly &a, const MultiPoly &b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  MultiPoly operator-() const {
    MultiPoly r = *this;
    for (auto &t : r.terms_) t.second = -t.second;
    return r;
  }

  friend MultiPoly operator+(const MultiPoly &a, const MultiPoly &b) {
    return merge(a, b, false);
  }
  friend MultiPoly operator-(const MultiPoly &a, const MultiPoly &b) {
    return merge(a, b, true);
  }

  friend MultiPoly operator*(const MultiPoly &a, const MultiPoly &b) {
    check_same(a, b);
    MultiPoly r(a.vars_);
    if (a.is_zero() || b.is_zero()) return r;
    // Work over Z with one common denominator per operand.
    const auto [na, da] = a.integer_coefficients();
    const auto [nb, db] = b.integer_coefficients();
    const Integer den = da * db;
    const std::size_t ba = max_bits(na), bb = max_bits(nb);
    if (ba <= 62 && bb <= 62 && ba + bb + bit_length(std::min(a.size(), b.size())) <= 125) {
      std::vector<std::int64_t> sa(na.size()), sb(nb.size());
      for (std::size_t i = 0; i < na.size(); ++i) sa[i] = na[i].get_si();
      for (std::size_t j = 0; j < nb.size(); ++j) sb[j] = nb[j].get_si();
      multiply_into<__int128>(r, a, b, sa, sb, [](__int128 &acc, std::int64_t x, std::int64_t y) {
        acc += __int128(x) * y;
      }, [&](const __int128 &c) { return make_rational(int128_to_integer(c), den); });
    } else {
      multiply_into<Integer>(r, a, b, na, nb, [](Integer &acc, const Integer &x, const Integer &y) {
        mpz_addmul(acc.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
      }, [&](const Integer &c) { return make_rational(c, den); });
    }
    r.sort_terms();
    return r;
  }

  friend MultiPoly operator*(const Rational &c, const MultiPoly &p) {
    MultiPoly r(p.vars_);
    if (c == 0) return r;
    r.terms_ = p.terms_;
    for (auto &t : r.terms_) t.second *= c;
    return r;
  }
  friend MultiPoly operator*(const MultiPoly &p, const Rational &c) { return c * p; }
  friend MultiPoly operator+(const MultiPoly &p, const Rational &c) {
    return p + constant(p.vars_, c);
  }
  friend MultiPoly operator+(const Rational &c, const MultiPoly &p) { return p + c; }
  friend MultiPoly operator-(const MultiPoly &p, const Rational &c) {
    return p - constant(p.vars_, c);
  }
  friend MultiPoly operator-(const Rational &c, const MultiPoly &p) {
    return constant(p.vars_, c) - p;
  }

  MultiPoly &operator+=(const MultiPoly &o) { return *this = *this + o; }
  MultiPoly &operator-=(const MultiPoly &o) { return *this = *this - o; }
  MultiPoly &operator*=(const MultiPoly &o) { return *this = *this * o; }

  MultiPoly pow(unsigned n) const {
    MultiPoly result = constant(vars_, Rational(1));
    MultiPoly base = *this;
    while (n) {
      if (n & 1u) result *= base;
      n >>= 1u;
      if (n) base *= base;
    }
    return result;
  }

  Rational evaluate(std::span<const Rational> point) const {
    if (point.size() != vars_.size())
      throw DomainError("evaluation point has wrong dimension");
    Rational sum(0);
    for (const auto &[m, c] : terms_) {
      Rational term = c;
      for (std::size_t i = 0; i < vars_.size(); ++i)
        for (unsigned k = 0; k < m.exp[i]; ++k) term *= point[i];
      sum += term;
    }
    return sum;
  }

  /// Replaces variable i by images[i]; the result lives in the images' ring.
  MultiPoly substitute(std::span<const MultiPoly> images) const {
    if (images.size() != vars_.size())
      throw DomainError("substitution needs one image per variable");
    if (images.empty()) return *this;
    const VarList &target = images.front().vars();
    for (const auto &im : images)
      if (im.vars() != target) throw DomainError("variable-set mismatch");

    std::vector<std::vector<MultiPoly>> powers(vars_.size());
    auto power_of = [&](std::size_t var, unsigned e) -> const MultiPoly & {
      auto &cache = powers[var];
      if (cache.empty()) cache.push_back(constant(target, Rational(1)));
      while (cache.size() <= e) cache.push_back(cache.back() * images[var]);
      return cache[e];
    };

    std::unordered_map<Monomial, Rational, MonomialHash> acc;
    for (const auto &[m, c] : terms_) {
      MultiPoly term = constant(target, c);
      for (std::size_t i = 0; i < vars_.size(); ++i)
        if (m.exp[i]) term = term * power_of(i, m.exp[i]);
      for (const auto &[tm, tc] : term.terms_) acc[tm] += tc;
    }
    MultiPoly r(target);
    r.assign_from(acc);
    return r;
  }

  MultiPoly derivative(std::size_t var) const {
    MultiPoly r(vars_);
    std::vector<Term> out;
    for (const auto &[m, c] : terms_) {
      if (m.exp[var] == 0) continue;
      Monomial d = m;
      d.exp[var] -= 1;
      out.push_back({d, c * m.exp[var]});
    }
    return from_terms(vars_, std::move(out));
  }

  /// Re-expresses this polynomial over a variable list containing all of its
  /// variables.
  MultiPoly embed(const VarList &wider) const {
    std::vector<std::size_t> slot(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      auto it = std::find(wider.begin(), wider.end(), vars_[i]);
      if (it == wider.end()) throw DomainError("variable-set mismatch: " + vars_[i]);
      slot[i] = std::size_t(it - wider.begin());
    }
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto &[m, c] : terms_) {
      Monomial w;
      for (std::size_t i = 0; i < vars_.size(); ++i) w.exp[slot[i]] = m.exp[i];
      out.push_back({w, c});
    }
    return from_terms(wider, std::move(out));
  }

  /// Sets one variable to a value and drops it from the variable list.
  MultiPoly specialize(const std::string &name, const Rational &value) const {
    std::size_t k = index_of(name);
    VarList rest;
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (i != k) rest.push_back(vars_[i]);
    std::vector<Term> out;
    for (const auto &[m, c] : terms_) {
      Rational coeff = c;
      for (unsigned e = 0; e < m.exp[k]; ++e) coeff *= value;
      Monomial r;
      for (std::size_t i = 0, j = 0; i < vars_.size(); ++i)
        if (i != k) r.exp[j++] = m.exp[i];
      out.push_back({r, coeff});
    }
    return from_terms(rest, std::move(out));
  }

  /// Canonical text: graded-lex terms, e.g. `x^2*y - 3/2*z + 1`.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto &[m, c] : terms_) {
      Rational mag = abs(c);
      if (first) {
        if (sgn(c) < 0) out += "-";
      } else {
        out += sgn(c) < 0 ? " - " : " + ";
      }
      first = false;
      std::string mono;
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (!m.exp[i]) continue;
        if (!mono.empty()) mono += "*";
        mono += vars_[i];
        if (m.exp[i] > 1) mono += "^" + std::to_string(m.exp[i]);
      }
      if (mono.empty())
        out += kappa::to_string(mag);
      else if (mag == 1)
        out += mono;
      else
        out += kappa::to_string(mag) + "*" + mono;
    }
    return out;
  }

private:
  static void check_same(const MultiPoly &a, const MultiPoly &b) {
    if (a.vars_ != b.vars_) throw DomainError("variable-set mismatch");
  }

  static MultiPoly merge(const MultiPoly &a, const MultiPoly &b, bool subtract) {
    check_same(a, b);
    MultiPoly r(a.vars_);
    r.terms_.reserve(a.size() + b.size());
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
      if (ib == b.terms_.end() ||
          (ia != a.terms_.end() && graded_lex_before(ia->first, ib->first))) {
        r.terms_.push_back(*ia++);
      } else if (ia == a.terms_.end() || graded_lex_before(ib->first, ia->first)) {
        r.terms_.push_back({ib->first, subtract ? Rational(-ib->second) : ib->second});
        ++ib;
      } else {
        Rational c = subtract ? Rational(ia->second - ib->second)
                              : Rational(ia->second + ib->second);
        if (c != 0) r.terms_.push_back({ia->first, std::move(c)});
        ++ia;
        ++ib;
      }
    }
    return r;
  }

  void assign_from(std::unordered_map<Monomial, Rational, MonomialHash> &acc) {
    terms_.clear();
    terms_.reserve(acc.size());
    for (auto &[m, c] : acc)
      if (c != 0) terms_.push_back({m, std::move(c)});
    sort_terms();
  }

  // Accumulates all pairwise products. Dense over the exponent box when the
  // box is small relative to the work, hashed otherwise.
  template <class Acc, class Coef, class AddMul, class ToRational>
  static void multiply_into(MultiPoly &r, const MultiPoly &a, const MultiPoly &b,
                            const std::vector<Coef> &ca, const std::vector<Coef> &cb,
                            AddMul addmul, ToRational to_rational) {
    const std::size_t n = a.nvars(), pairs = a.size() * b.size();
    std::array<std::size_t, Monomial::kMaxVars> radix{}, stride{};
    std::size_t box = 1;
    for (std::size_t v = 0; v < n && box <= (std::size_t(1) << 24); ++v) {
      radix[v] = std::size_t(std::max(a.degree_in(v), 0) + std::max(b.degree_in(v), 0) + 1);
      stride[v] = box;
      box *= radix[v];
    }
    if (n > 0 && box <= (std::size_t(1) << 24) && box <= 4 * pairs) {
      auto index = [&](const Monomial &m) {
        std::size_t k = 0;
        for (std::size_t v = 0; v < n; ++v) k += m.exp[v] * stride[v];
        return k;
      };
      std::vector<std::size_t> ia(a.size()), ib(b.size());
      for (std::size_t i = 0; i < a.size(); ++i) ia[i] = index(a.terms_[i].first);
      for (std::size_t j = 0; j < b.size(); ++j) ib[j] = index(b.terms_[j].first);
      std::vector<Acc> acc(box);
      std::vector<bool> hit(box);
      for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) {
          addmul(acc[ia[i] + ib[j]], ca[i], cb[j]);
          hit[ia[i] + ib[j]] = true;
        }
      for (std::size_t k = 0; k < box; ++k) {
        if (!hit[k] || acc[k] == 0) continue;
        Monomial m;
        for (std::size_t v = 0, rest = k; v < n; ++v) {
          m.exp[v] = std::uint16_t(rest % radix[v]);
          rest /= radix[v];
        }
        r.terms_.push_back({m, to_rational(acc[k])});
      }
      return;
    }
    std::unordered_map<Monomial, Acc, MonomialHash> acc;
    acc.reserve(std::min<std::size_t>(pairs, std::size_t(1) << 22));
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j)
        addmul(acc[a.terms_[i].first * b.terms_[j].first], ca[i], cb[j]);
    r.terms_.reserve(acc.size());
    for (const auto &[m, c] : acc)
      if (c != 0) r.terms_.push_back({m, to_rational(c)});
  }

  void sort_terms() {
    std::sort(terms_.begin(), terms_.end(), [](const Term &a, const Term &b) {
      return graded_lex_before(a.first, b.first);
    });
  }

  /// Numerators over the lcm of all denominators.
  std::pair<std::vector<Integer>, Integer> integer_coefficients() const {
    Integer den(1);
    for (const auto &t : terms_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.second.get_den_mpz_t());
    std::vector<Integer> nums;
    nums.reserve(terms_.size());
    for (const auto &t : terms_) nums.push_back(Integer(t.second.get_num() * (den / t.second.get_den())));
    return {std::move(nums), den};
  }

  static std::size_t max_bits(const std::vector<Integer> &v) {
    std::size_t b = 0;
    for (const auto &x : v) b = std::max(b, mpz_sizeinbase(x.get_mpz_t(), 2));
    return b;
  }

  static std::size_t bit_length(std::size_t n) {
    std::size_t b = 0;
    while (n) ++b, n >>= 1;
    return b;
  }

  static Integer int128_to_integer(__int128 v) {
    const bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    Integer out = Integer(static_cast<unsigned long>(std::uint64_t(u >> 64))) << 64;
    out += static_cast<unsigned long>(std::uint64_t(u));
    return neg ? Integer(-out) : out;
  }

  VarList vars_;
  std::vector<Term> terms_;
};

inline const VarList &xyz_vars() {
  static const VarList v{"x", "y", "z"};
  return v;
}

inline const VarList &symbolic_vars() {
  static const VarList v{"x", "y", "z", "P", "Q", "R"};
  return v;
}

} // namespace kappa
