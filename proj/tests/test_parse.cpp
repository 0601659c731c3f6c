#include "kappa/parse.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace kappa;
using kappa::testing::rand_int;

namespace {
const MultiPoly X = PolyMap::x(), Y = PolyMap::y(), Z = PolyMap::z();
}

TEST(ParseRational, Examples) {
  EXPECT_EQ(parse_rational("17/4"), Rational(17, 4));
  EXPECT_EQ(parse_rational("-2"), Rational(-2));
}

TEST(ParseRational, Errors) {
  EXPECT_THROW(parse_rational("3/0"), ParseError);
  for (const char *bad : {"", "-", "1/", "/2", "1.5", "abc", "1/2/3", "--1", "1 2", "0x10"})
    EXPECT_THROW(parse_rational(bad), ParseError) << bad;
}

TEST(ParseRational, Canonicalizes) {
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational("-0")), "0");
  EXPECT_EQ(parse_rational_list("1,-2,3/4"), (std::vector<Rational>{1, -2, Rational(3, 4)}));
}

TEST(ParsePolyMap, Examples) {
  EXPECT_EQ(parse_poly_map("y; x; x*y - z"), PolyMap(Y, X, X * Y - Z));
  EXPECT_EQ(parse_poly_map("x; y; x*y - z + 1/2"), PolyMap(X, Y, X * Y - Z + Rational(1, 2)));
  try {
    parse_poly_map("x; y; w");
    FAIL();
  } catch (const ParseError &e) {
    EXPECT_NE(std::string(e.what()).find("unknown variable w"), std::string::npos);
    EXPECT_EQ(e.position(), 6u);
  }
}

TEST(ParsePolyMap, Errors) {
  for (const char *bad : {"x; y", "x; y; z; x", "x; y; (z", "x; y; z^", "x; y; z +", "x;;z",
                          "x; y; 2z", "x; y; z^-1", "x; y; 1/0*z", "x; y; z)"})
    EXPECT_THROW(parse_poly_map(bad), ParseError) << bad;
}

TEST(ParsePoly, Grammar) {
  EXPECT_EQ(parse_poly("(x+y)^2"), (X + Y) * (X + Y));
  EXPECT_EQ(parse_poly("-x^2"), -(X * X));
  EXPECT_EQ(parse_poly("2*x*y - -z"), Rational(2) * X * Y + Z);
  EXPECT_EQ(parse_poly("3/6"), PolyMap::c(Rational(1, 2)));
}

TEST(ParsePoly, RoundTrip) {
  for (int it = 0; it < 200; ++it) {
    MultiPoly p = kappa::testing::rand_poly(4, 5);
    EXPECT_EQ(parse_poly(p.to_string()), p) << p.to_string();
    EXPECT_EQ(parse_poly(p.to_string()).to_string(), p.to_string());
  }
  for (int it = 0; it < 30; ++it) {
    PolyMap f = kappa::testing::rand_map(3, 4);
    EXPECT_EQ(parse_poly_map(f.to_string()), f);
  }
}

TEST(ParseWord, Examples) {
  using L = Letter;
  GroupWord w = parse_word("t1 t2 t1");
  EXPECT_EQ(w.letters, (std::vector<Letter>{L::tau1, L::tau2, L::tau1}));
  EXPECT_TRUE(w.is_reduced());
  EXPECT_EQ(parse_word("b^-1").letters, (std::vector<Letter>{L::beta, L::beta}));
  EXPECT_EQ(parse_word("g^-1").letters, (std::vector<Letter>{L::gamma}));
  EXPECT_THROW(parse_word("q7"), ParseError);
  EXPECT_TRUE(parse_word("").letters.empty());
}

TEST(ParseWord, Tail) {
  GroupWord w = parse_word("t3 t1 perm(yxz)flip(xy)");
  ASSERT_TRUE(w.tail);
  EXPECT_EQ(w.tail->perm, (std::array<int, 3>{1, 0, 2}));
  EXPECT_EQ(w.tail->signs, (std::array<int, 3>{-1, -1, 1}));
  EXPECT_EQ(w.to_string(), "t3 t1 perm(yxz)flip(xy)");
  EXPECT_EQ(parse_word("perm(xyz) flip(z)").tail->signs, (std::array<int, 3>{1, 1, -1}));
  for (const char *bad : {"perm(xxz)", "perm(xy)", "t1 perm(xyz)flip(w)", "perm(xyz)flip(xx)",
                          "perm(xyz) t1", "perm(xyz", "t1^2", "B"})
    EXPECT_THROW(parse_word(bad), ParseError) << bad;
}

TEST(ParseWord, RoundTrip) {
  for (int it = 0; it < 200; ++it) {
    GroupWord w = kappa::testing::rand_gamma_word(std::size_t(rand_int(0, 10)));
    if (rand_int(0, 1)) {
      auto all = all_signed_perms();
      w.tail = all[std::size_t(rand_int(0, 47))];
    }
    EXPECT_EQ(parse_word(w.to_string()), w) << w.to_string();
  }
}

TEST(ParseMatrix, Examples) {
  EXPECT_EQ(parse_int_matrix("1,2;3,4"), (IntMatrix{{1, 2}, {3, 4}}));
  EXPECT_THROW(parse_int_matrix("1,2;3"), ParseError);
  EXPECT_THROW(parse_int_matrix("1,1/2"), ParseError);
}

TEST(Fuzz, ParsersOnlyThrowParseErrors) {
  const std::string alphabet = "xyzw0123456789+-*/^(); ,abgst";
  for (int it = 0; it < 20000; ++it) {
    std::string s;
    std::size_t n = std::size_t(rand_int(0, 24));
    for (std::size_t i = 0; i < n; ++i) s += alphabet[std::size_t(rand_int(0, long(alphabet.size()) - 1))];
    for (auto fn : {+[](const std::string &t) { (void)parse_poly_map(t); },
                    +[](const std::string &t) { (void)parse_word(t); },
                    +[](const std::string &t) { (void)parse_rational_list(t); },
                    +[](const std::string &t) { (void)parse_int_matrix(t); }}) {
      try {
        fn(s);
      } catch (const ParseError &) {
      } catch (const std::exception &e) {
        ADD_FAILURE() << "input '" << s << "' raised " << e.what();
      }
    }
  }
}
