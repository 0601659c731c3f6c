#pragma once

#include "kappa/intmatrix.hpp"
#include "kappa/polymap.hpp"
#include "kappa/symmetry.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kappa {

/// Malformed textual input; `position` is a byte offset into the input.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string &msg, std::size_t position)
      : std::runtime_error(msg + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

} // namespace detail

/// `n`, `-n`, `+n` or `n/d` with decimal integers.
inline Rational parse_rational(std::string_view text) {
  std::string_view s = detail::trim(text);
  std::string_view body = s;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                         : body.substr(slash + 1);
  if (!detail::all_digits(num) || !detail::all_digits(den))
    throw ParseError("malformed rational literal '" + std::string(text) + "'", 0);
  Integer n(std::string(num), 10), d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", slash + 1);
  if (negative) n = -n;
  return make_rational(n, d);
}

/// Comma-separated rationals, e.g. `1,-2,3/4`.
inline std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  for (;;) {
    auto comma = text.find(',', start);
    out.push_back(parse_rational(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

inline std::vector<Integer> parse_integer_list(std::string_view text) {
  std::vector<Integer> out;
  for (const auto &r : parse_rational_list(text)) {
    if (!is_integer(r)) throw ParseError("expected an integer, got " + to_string(r), 0);
    out.push_back(r.get_num());
  }
  return out;
}

/// Rows separated by `;`, entries by `,`: `1,2;3,4`.
inline IntMatrix parse_int_matrix(std::string_view text) {
  std::vector<std::vector<Integer>> rows;
  std::size_t start = 0;
  for (;;) {
    auto semi = text.find(';', start);
    rows.push_back(parse_integer_list(text.substr(start, semi - start)));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw ParseError("ragged matrix rows", 0);
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

namespace detail {

// Recursive-descent parser over + - * ^ ( ) with rational literals.
class PolyParser {
public:
  PolyParser(std::string_view text, const VarList &vars) : s_(text), vars_(vars) {}

  MultiPoly parse() {
    MultiPoly p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

private:
  [[noreturn]] void fail(const std::string &msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expr() {
    MultiPoly acc = term();
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  MultiPoly term() {
    MultiPoly acc = unary();
    while (accept('*')) acc *= unary();
    return acc;
  }

  MultiPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  MultiPoly power() {
    MultiPoly base = atom();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a non-negative integer exponent");
      std::string digits(s_.substr(start, pos_ - start));
      const unsigned long e = digits.size() > 4 ? 100000 : std::stoul(digits);
      if (std::max(base.total_degree(), 1) * e > 1000) fail("degree too large");
      base = base.pow(unsigned(e));
    }
    return base;
  }

  MultiPoly atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        std::size_t dstart = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (dstart == pos_) fail("expected a denominator");
      }
      std::string_view lit = s_.substr(start, pos_ - start);
      try {
        return MultiPoly::constant(vars_, parse_rational(lit));
      } catch (const ParseError &e) {
        throw ParseError("zero denominator", start);
      }
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      if (std::find(vars_.begin(), vars_.end(), name) == vars_.end())
        throw ParseError("unknown variable " + name, start);
      return MultiPoly::variable(vars_, name);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  const VarList &vars_;
  std::size_t pos_ = 0;
};

} // namespace detail

inline MultiPoly parse_poly(std::string_view text, const VarList &vars = xyz_vars()) {
  return detail::PolyParser(text, vars).parse();
}

/// Three polynomials in x, y, z separated by `;`.
inline PolyMap parse_poly_map(std::string_view text) {
  std::vector<MultiPoly> comps;
  std::size_t start = 0;
  for (;;) {
    auto semi = text.find(';', start);
    std::string_view part = text.substr(start, semi - start);
    try {
      comps.push_back(parse_poly(part));
    } catch (const ParseError &e) {
      throw ParseError(std::string(e.what()).substr(0, std::string(e.what()).rfind(" at position")),
                       start + e.position());
    }
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  if (comps.size() != 3)
    throw ParseError("a map needs exactly three components, got " + std::to_string(comps.size()),
                     0);
  return PolyMap(comps[0], comps[1], comps[2]);
}

/// `perm(<xyz permutation>)` optionally followed by `flip(<axes>)`.
inline SignedPerm parse_signed_perm(std::string_view text, std::size_t offset = 0) {
  auto fail = [&](const std::string &m) { throw ParseError(m, offset); };
  SignedPerm s;
  if (text.substr(0, 5) != "perm(") fail("expected perm(...)");
  auto close = text.find(')');
  if (close == std::string_view::npos) fail("unterminated perm(");
  std::string_view p = text.substr(5, close - 5);
  if (p.size() != 3) fail("perm needs a permutation of xyz");
  std::array<bool, 3> seen{};
  for (std::size_t i = 0; i < 3; ++i) {
    auto idx = std::string_view("xyz").find(p[i]);
    if (idx == std::string_view::npos || seen[idx]) fail("perm needs a permutation of xyz");
    seen[idx] = true;
    s.perm[i] = int(idx);
  }
  std::string_view rest = detail::trim(text.substr(close + 1));
  if (rest.empty()) return s;
  if (rest.substr(0, 5) != "flip(" || rest.back() != ')') fail("expected flip(...)");
  std::string_view axes = rest.substr(5, rest.size() - 6);
  for (char c : axes) {
    auto idx = std::string_view("xyz").find(c);
    if (idx == std::string_view::npos || s.signs[idx] < 0) fail("bad flip axes");
    s.signs[idx] = -1;
  }
  return s;
}

/// Whitespace-separated letters from {a, b, g, sx, sy, sz, t1, t2, t3} with
/// optional `^-1`, and an optional trailing signed-permutation literal.
inline GroupWord parse_word(std::string_view text) {
  GroupWord w;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) break;
    std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    std::string_view tok = text.substr(start, pos - start);
    if (tok.substr(0, 5) == "perm(") {
      std::string_view rest = detail::trim(text.substr(start));
      w.tail = parse_signed_perm(rest, start);
      break;
    }
    bool inverse = false;
    if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1") {
      inverse = true;
      tok.remove_suffix(3);
    }
    std::optional<Letter> letter;
    for (Letter l : kAllLetters)
      if (tok == letter_symbol(l)) letter = l;
    if (!letter) throw ParseError("unknown letter '" + std::string(tok) + "'", start);
    w.letters.push_back(*letter);
    if (inverse && *letter == Letter::beta) w.letters.push_back(Letter::beta);
  }
  return w;
}

} // namespace kappa
