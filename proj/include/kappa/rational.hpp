#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kappa {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised for inputs that are well-formed but outside an operation's domain.
class DomainError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raised when an internal invariant that a theorem guarantees fails to hold.
class InvariantError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw DomainError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational make_rational(const Integer &num, const Integer &den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// `n` or `n/d`; denominator dropped when it is 1.
inline std::string to_string(const Rational &r) { return r.get_str(); }

inline std::string to_string(const Integer &z) { return z.get_str(); }

/// Exact square root when `r` is the square of a rational, else nullopt.
/// The non-negative root is returned.
inline std::optional<Rational> rational_sqrt(const Rational &r) {
  if (sgn(r) < 0) return std::nullopt;
  const Integer &n = r.get_num();
  const Integer &d = r.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) ||
      !mpz_perfect_square_p(d.get_mpz_t()))
    return std::nullopt;
  return make_rational(Integer(sqrt(n)), Integer(sqrt(d)));
}

inline bool is_integer(const Rational &r) { return r.get_den() == 1; }

} // namespace kappa
