#include <gtest/gtest.h>

#include "gt/linalg.hpp"
#include "gt/lyndon.hpp"
#include "gt/tensor.hpp"

using namespace gt;

namespace {

const Signature kTorus{1, 0};
const Signature kPants{0, 2};
const Signature kOneOne{1, 1};

Word W(std::initializer_list<Letter> ls) { return Word(ls.begin(), ls.end()); }

const Letter X = letter_x(1);
const Letter Y = letter_y(1);
const Letter Z1 = letter_z(1);
const Letter Z2 = letter_z(2);

}  // namespace

TEST(Matrices, RrefAndRank) {
  QMatrix m(3, 3);
  // rows: (1,2,3), (2,4,6), (0,1,1) has rank 2
  m.at(0, 0) = Rational(1); m.at(0, 1) = Rational(2); m.at(0, 2) = Rational(3);
  m.at(1, 0) = Rational(2); m.at(1, 1) = Rational(4); m.at(1, 2) = Rational(6);
  m.at(2, 1) = Rational(1); m.at(2, 2) = Rational(1);
  std::vector<int> pivots;
  EXPECT_EQ(rref(m, &pivots), 2);
  EXPECT_EQ(pivots, (std::vector<int>{0, 1}));
  EXPECT_EQ(m.at(0, 2), Rational(1));  // x + z, y + z rows
  EXPECT_EQ(m.at(1, 2), Rational(1));
}

TEST(Matrices, AffineSolveConsistent) {
  // x + y = 3, x - y = 1  ->  (2, 1), no kernel
  QMatrix A(2, 2);
  A.at(0, 0) = Rational(1); A.at(0, 1) = Rational(1);
  A.at(1, 0) = Rational(1); A.at(1, 1) = Rational(-1);
  auto s = solve_affine(A, {Rational(3), Rational(1)});
  ASSERT_TRUE(s.solvable);
  EXPECT_EQ(s.particular, (std::vector<Rational>{Rational(2), Rational(1)}));
  EXPECT_TRUE(s.kernel.empty());
}

TEST(Matrices, AffineSolveUnderdetermined) {
  // x + y + z = 6 has a 2-dimensional kernel; check A k = 0 for each
  QMatrix A(1, 3);
  A.at(0, 0) = A.at(0, 1) = A.at(0, 2) = Rational(1);
  auto s = solve_affine(A, {Rational(6)});
  ASSERT_TRUE(s.solvable);
  EXPECT_EQ(s.kernel.size(), 2u);
  for (const auto& k : s.kernel)
    EXPECT_TRUE(mat_vec(A, k)[0].is_zero());
  auto p = least_norm_point(s);
  EXPECT_EQ(p, (std::vector<Rational>{Rational(2), Rational(2), Rational(2)}));
}

TEST(Matrices, InfeasibilityCertificate) {
  // x + y = 1, 2x + 2y = 3 is infeasible; lambda must annihilate A but
  // not b
  QMatrix A(2, 2);
  A.at(0, 0) = Rational(1); A.at(0, 1) = Rational(1);
  A.at(1, 0) = Rational(2); A.at(1, 1) = Rational(2);
  std::vector<Rational> b{Rational(1), Rational(3)};
  auto s = solve_affine(A, b);
  ASSERT_FALSE(s.solvable);
  ASSERT_EQ(s.infeasibility.size(), 2u);
  Rational lA0, lA1, lb;
  for (int i = 0; i < 2; ++i) {
    lA0 += s.infeasibility[i] * A.at(i, 0);
    lA1 += s.infeasibility[i] * A.at(i, 1);
    lb += s.infeasibility[i] * b[i];
  }
  EXPECT_TRUE(lA0.is_zero());
  EXPECT_TRUE(lA1.is_zero());
  EXPECT_FALSE(lb.is_zero());
}

TEST(Lyndon, WordsByDegreeTwoLetters) {
  EXPECT_EQ(lyndon_words_of_degree(kTorus, 1), (std::vector<Word>{W({X}), W({Y})}));
  EXPECT_EQ(lyndon_words_of_degree(kTorus, 2), (std::vector<Word>{W({X, Y})}));
  EXPECT_EQ(lyndon_words_of_degree(kTorus, 3),
            (std::vector<Word>{W({X, X, Y}), W({X, Y, Y})}));
  EXPECT_EQ(lyndon_words_of_degree(kTorus, 4),
            (std::vector<Word>{W({X, X, X, Y}), W({X, X, Y, Y}), W({X, Y, Y, Y})}));
  // Witt dimensions for a rank-2 free Lie algebra
  EXPECT_EQ(lyndon_words_of_degree(kTorus, 5).size(), 6u);
  EXPECT_EQ(lyndon_words_of_degree(kTorus, 6).size(), 9u);
}

TEST(Lyndon, WordsByDegreeWeightTwoLetters) {
  EXPECT_EQ(lyndon_words_of_degree(kPants, 2), (std::vector<Word>{W({Z1}), W({Z2})}));
  EXPECT_TRUE(lyndon_words_of_degree(kPants, 3).empty());
  EXPECT_EQ(lyndon_words_of_degree(kPants, 4), (std::vector<Word>{W({Z1, Z2})}));
  EXPECT_EQ(lyndon_words_of_degree(kPants, 6),
            (std::vector<Word>{W({Z1, Z1, Z2}), W({Z1, Z2, Z2})}));
  EXPECT_EQ(lyndon_words_of_degree(kPants, 8).size(), 3u);
}

TEST(Lyndon, WordsByDegreeMixedWeights) {
  // weight 3 over x1 < y1 < z1: two length-2 words with a z, two cubes
  EXPECT_EQ(lyndon_words_of_degree(kOneOne, 3),
            (std::vector<Word>{W({X, Z1}), W({Y, Z1}), W({X, X, Y}), W({X, Y, Y})}));
}

TEST(Lyndon, BracketingFrozenValues) {
  // b(xxy) = [x,[x,y]] = xxy - 2 xyx + yxx
  Series b3 = lyndon_bracketing(kTorus, W({X, X, Y}));
  EXPECT_EQ(b3.coeff(W({X, X, Y})), Rational(1));
  EXPECT_EQ(b3.coeff(W({X, Y, X})), Rational(-2));
  EXPECT_EQ(b3.coeff(W({Y, X, X})), Rational(1));
  EXPECT_EQ(b3.terms.size(), 3u);
  // b(xyy) = [[x,y],y] = xyy - 2 yxy + yyx
  Series c3 = lyndon_bracketing(kTorus, W({X, Y, Y}));
  EXPECT_EQ(c3.coeff(W({X, Y, Y})), Rational(1));
  EXPECT_EQ(c3.coeff(W({Y, X, Y})), Rational(-2));
  EXPECT_EQ(c3.coeff(W({Y, Y, X})), Rational(1));
  for (int d = 1; d <= 5; ++d)
    for (const auto& e : lie_basis(kTorus, d))
      EXPECT_TRUE(is_lie_like(e.value.truncated(d))) << word_str(e.word);
}

TEST(Lyndon, BasisIsIndependent) {
  for (const Signature& sig : {kTorus, kPants, kOneOne})
    for (int d = 1; d <= 5; ++d) {
      auto basis = lie_basis(sig, d);
      if (basis.empty()) continue;
      std::vector<Series> vals;
      for (auto& e : basis) vals.push_back(e.value);
      // the zero vector has a unique (all-zero) representation iff the
      // family is independent
      auto sol = solve_in_span(vals, Series::zero(sig, kExactDegree));
      ASSERT_TRUE(sol.member);
      EXPECT_TRUE(sol.unique) << sig.str() << " degree " << d;
    }
}

TEST(Lyndon, XiDegreeThreeCoordinates) {
  // xi_3 on the one-holed torus is [x,[x,y]]/2 + [y,[x,y]]/2, i.e.
  // b(xxy)/2 - b(xyy)/2
  Series xi3 = xi(kTorus, 3).graded_component(3);
  auto basis = lie_basis(kTorus, 3);
  std::vector<Series> vals;
  for (auto& e : basis) vals.push_back(e.value);
  auto sol = solve_in_span(vals, xi3);
  ASSERT_TRUE(sol.member);
  EXPECT_EQ(sol.coeffs,
            (std::vector<Rational>{Rational(1, 2), Rational(-1, 2)}));
}
