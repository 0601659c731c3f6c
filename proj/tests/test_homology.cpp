#include "kappa/homology.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace kappa;
using kappa::testing::rand_gamma_word;
using kappa::testing::rand_int;

namespace {

const KappaParams kZero{};

IntMatrix action_of(Letter l) { return homology_action(generator(l, kZero)); }

IntMatrix perm_block(std::array<int, 4> images, long sign = 1) {
  IntMatrix m(5, 5);
  for (std::size_t i = 0; i < 4; ++i) m(std::size_t(images[i]), i) = sign;
  m(4, 4) = sign;
  return m;
}

} // namespace

TEST(HomologyAction, PrintedGeneratorMatrices) {
  // Σ matrices: each swaps the four points in pairs
  EXPECT_EQ(action_of(Letter::sigma_z), perm_block({1, 0, 3, 2}));
  EXPECT_EQ(action_of(Letter::sigma_x), perm_block({3, 2, 1, 0}));
  EXPECT_EQ(action_of(Letter::sigma_y), perm_block({2, 3, 0, 1}));
  EXPECT_EQ(action_of(Letter::alpha), perm_block({1, 0, 2, 3}));
  EXPECT_EQ(action_of(Letter::gamma), -IntMatrix::identity(5));
  // the printed β* matrix sends e1 to e2; ours is its transpose
  IntMatrix printed_beta{{0, 0, 1, 0, 0}, {1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}};
  EXPECT_EQ(action_of(Letter::beta), printed_beta.transpose());
  EXPECT_EQ(homology_action(PolyMap::identity()), IntMatrix::identity(5));
}

TEST(HomologyAction, PointEvaluationOracle) {
  // β*(2,-2,-2) = (-2,-2,2): p1 goes to p3
  const auto &pts = singular_points_v2();
  EXPECT_EQ(evaluate(generator(Letter::beta, kZero), pts[0]), pts[2]);
  EXPECT_EQ(action_of(Letter::beta)(2, 0), 1);
}

TEST(HomologyAction, Multiplicative) {
  for (int it = 0; it < 200; ++it) {
    GroupWord w = rand_gamma_word(std::size_t(rand_int(0, 8)));
    IntMatrix prod = IntMatrix::identity(5);
    for (Letter l : w.letters) prod = prod * action_of(l);
    EXPECT_EQ(homology_action(word_to_map(w, kZero)), prod) << w.to_string();
  }
}

TEST(HomologyAction, PreservesTheForm) {
  const IntMatrix q = intersection_form(BasisTag::vanishing_cycle).matrix;
  for (Letter l : {Letter::alpha, Letter::beta, Letter::gamma, Letter::sigma_x, Letter::sigma_y, Letter::sigma_z}) {
    IntMatrix m = action_of(l);
    EXPECT_EQ(m.transpose() * q * m, q);
  }
  for (int it = 0; it < 50; ++it) {
    IntMatrix m = homology_action(word_to_map(rand_gamma_word(std::size_t(rand_int(1, 10))), kZero));
    EXPECT_TRUE(decompose_homology_matrix(m).has_value());
    EXPECT_EQ(m.transpose() * q * m, q);
  }
}

TEST(HomologyAction, ImageStructure) {
  // PGL(2,Z) words with an even number of gammas: permutations fixing the
  // fourth point (S3); with Σ included: all of S4.
  std::set<std::array<int, 4>> pgl_perms, all_perms;
  std::set<int> signs;
  for (int it = 0; it < 600; ++it) {
    GroupWord w = rand_gamma_word(std::size_t(rand_int(0, 9)));
    auto img = decompose_homology_matrix(homology_action(word_to_map(w, kZero)));
    ASSERT_TRUE(img);
    all_perms.insert(img->perm);
    signs.insert(img->sign);
    bool pgl_only = true;
    for (Letter l : w.letters) pgl_only = pgl_only && !is_sigma(l);
    if (pgl_only) {
      pgl_perms.insert(img->perm);
      EXPECT_EQ(img->perm[3], 3);
    }
  }
  EXPECT_EQ(pgl_perms.size(), 6u);
  EXPECT_EQ(all_perms.size(), 24u);
  EXPECT_EQ(signs, (std::set<int>{-1, 1}));
}

TEST(HomologyAction, TauWordsActByScalars) {
  for (int it = 0; it < 100; ++it) {
    auto letters = kappa::testing::rand_tau_word(std::size_t(rand_int(0, 8)));
    GroupWord w{letters, std::nullopt};
    IntMatrix m = homology_action(word_to_map(w, kZero));
    int s = sign_character(w, kZero);
    EXPECT_EQ(s, letters.size() % 2 ? -1 : 1);
    EXPECT_EQ(m, s > 0 ? IntMatrix::identity(5) : -IntMatrix::identity(5));
  }
}

TEST(SignCharacter, Examples) {
  using L = Letter;
  KappaParams k{1, 2, 3};
  EXPECT_EQ(sign_character(GroupWord{{L::tau1}, std::nullopt}, k), -1);
  EXPECT_EQ(sign_character(GroupWord{{L::tau1, L::tau2}, std::nullopt}, k), 1);
  EXPECT_EQ(sign_character(GroupWord{}, k), 1);
  EXPECT_THROW(sign_character(GroupWord{{L::alpha}, std::nullopt}, k), DomainError);
  for (int it = 0; it < 40; ++it) {
    KappaParams p = kappa::testing::rand_params();
    auto stab = affine_stabilizer(p);
    GroupWord w{kappa::testing::rand_tau_word(std::size_t(rand_int(0, 6))),
                stab[std::size_t(rand_int(0, long(stab.size()) - 1))]};
    EXPECT_EQ(sign_character(w, p), constant_jacobian_sign(word_to_map(w, p)));
  }
}

TEST(IntersectionForm, PrintedMatrices) {
  auto vc = intersection_form(BasisTag::vanishing_cycle);
  auto al = intersection_form(BasisTag::alpha);
  EXPECT_TRUE(vc.matrix.is_symmetric());
  EXPECT_TRUE(al.matrix.is_symmetric());
  EXPECT_EQ(vc.matrix.determinant(), 0);
  EXPECT_EQ(al.matrix.determinant(), 0);
  for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(vc.matrix(i, i), -2);
  EXPECT_EQ(vc.matrix(0, 4), 1);
  EXPECT_EQ(al.matrix(0, 0), -4);
  EXPECT_EQ(al.matrix(3, 4), 2);
}

TEST(IntersectionForm, DeterminantFamily) {
  // Schur complement oracle: det = det(-2·I4)·(-2 + 4a²/2) = 32(a² - 1).
  // It vanishes exactly at a = ±1, where the form is the one we use.
  for (long a : {-3, -1, 0, 1, 2, 5}) {
    IntMatrix m = intersection_form(BasisTag::vanishing_cycle).matrix;
    for (std::size_t i = 0; i < 4; ++i) m(i, 4) = m(4, i) = a;
    EXPECT_EQ(m.determinant(), 32 * (a * a - 1)) << a;
  }
}

TEST(BasisChange, Contract) {
  IntMatrix B = basis_change();
  for (std::size_t r = 0; r < 5; ++r) EXPECT_EQ(B(r, 0), (r >= 3 ? -1 : 0));
  EXPECT_EQ(B.transpose() * intersection_form(BasisTag::alpha).matrix * B,
            intersection_form(BasisTag::vanishing_cycle).matrix);
  Integer d = B.determinant();
  EXPECT_TRUE(d == 1 || d == -1);
}

TEST(Link, Monodromy) {
  EXPECT_EQ(link_monodromy({-1, -1, -1}), -IntMatrix::identity(2));
  EXPECT_EQ(link_monodromy({5}), (IntMatrix{{0, -1}, {1, -5}}));
  EXPECT_EQ(link_monodromy({-1, -1}), (IntMatrix{{-1, -1}, {1, 0}}));
  EXPECT_EQ(link_monodromy({-1, -1, -1}).determinant(), 1);
}

TEST(Link, H1) {
  auto vc = link_h1(intersection_form(BasisTag::vanishing_cycle).matrix);
  EXPECT_EQ(vc.free_rank, 1u);
  EXPECT_EQ(vc.torsion, (std::vector<Integer>{2, 2}));
  EXPECT_EQ(link_h1(intersection_form(BasisTag::alpha).matrix), vc);
  EXPECT_TRUE(link_h1(IntMatrix::identity(5)).is_trivial());
}
