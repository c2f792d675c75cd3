#include "gt/cocycles.hpp"

#include <gtest/gtest.h>

#include <random>

#include "gt/loop_ops.hpp"

namespace gt {
namespace {

const Signature kOneOne{1, 1};
const Signature kPants{0, 2};

Series lie_combo(const Signature& sig, int degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> cd(-2, 2);
  Series r(sig);
  for (const auto& e : lie_basis(sig, degree)) {
    int c = cd(rng);
    if (c != 0) r = r + e.value.scaled(Rational(c));
  }
  return r;
}

TDer random_positive_tder(const Signature& sig, std::mt19937_64& rng,
                          bool with_constants = false) {
  std::uniform_int_distribution<int> cd(-2, 2);
  TDer u(sig);
  for (int i = 0; i < sig.g; ++i) {
    u.ximg[i] = lie_combo(sig, 2, rng) + lie_combo(sig, 3, rng);
    u.yimg[i] = lie_combo(sig, 2, rng) + lie_combo(sig, 3, rng);
  }
  for (int j = 0; j < sig.n; ++j) {
    u.tang[j] = lie_combo(sig, 2, rng) + lie_combo(sig, 3, rng);
    if (with_constants) u.tang[j].add_term(Word(), Rational(cd(rng), 2));
  }
  return u;
}

CyclicSeries random_cyclic(const Signature& sig, int max_degree,
                           std::mt19937_64& rng) {
  std::uniform_int_distribution<int> cd(-1, 1);
  CyclicSeries r(sig);
  for (int d = 2; d <= max_degree; ++d)
    for (const Word& w : words_of_degree(sig, d)) {
      int c = cd(rng);
      if (c != 0) r.add_term(CyclicWord(w), Rational(c));
    }
  return r;
}

TEST(Div, RightFactorExamples) {
  TDer u(kPants);
  u.tang[1] = Series::from_word(kPants, Word{letter_z(1), letter_z(2)});
  CyclicSeries want(kPants);
  want.add_term(CyclicWord(Word{letter_z(2), letter_z(1)}), Rational(1));
  EXPECT_EQ(div_gr(u), want);

  TDer v(kPants);
  v.tang[0] = commutator(Series::generator(kPants, letter_z(1)),
                         Series::generator(kPants, letter_z(2)));
  CyclicSeries wantv(kPants);
  wantv.add_term(CyclicWord(Word{letter_z(1), letter_z(2)}), Rational(-1));
  EXPECT_EQ(div_gr(v), wantv);

  EXPECT_THROW(div_gr(TDer(kOneOne)), GenusNotZero);
}

TEST(Div, SplitsThroughReducedCoproduct) {
  std::mt19937_64 rng(201);
  for (int rep = 0; rep < 5; ++rep) {
    TDer u = random_positive_tder(kPants, rng);
    EXPECT_EQ(delta_tilde(div_gr(u)), tdiv(u));
  }
}

TEST(TDiv, BoundarySlotExample) {
  TDer u(kPants);
  u.tang[0] = Series::generator(kPants, letter_z(1));
  BiCyclicSeries want(kPants);
  want.add_term(CyclicWord(Word{letter_z(1)}), CyclicWord(), Rational(1));
  want.add_term(CyclicWord(), CyclicWord(Word{letter_z(1)}), Rational(-1));
  EXPECT_EQ(tdiv(u), want);
}

TEST(TDiv, LieCocycleLaw) {
  std::mt19937_64 rng(202);
  for (const Signature& sig : {kPants, kOneOne}) {
    for (int rep = 0; rep < 3; ++rep) {
      TDer u = random_positive_tder(sig, rng);
      TDer v = random_positive_tder(sig, rng);
      EXPECT_EQ(tdiv(tder_bracket(u, v)),
                tder_apply(u, tdiv(v)) - tder_apply(v, tdiv(u)));
    }
  }
}

TEST(ChargeCocycle, ReadsScalarParts) {
  Framing fr(kPants, {1, -1}, {}, {});
  ASSERT_EQ(fr.q(1), 2);
  ASSERT_EQ(fr.q(2), 0);
  TDer u(kPants);
  u.tang[0] = Series::generator(kPants, letter_z(1));
  u.tang[0].add_term(Word(), Rational(3));
  u.tang[1] = Series::generator(kPants, letter_z(2));
  CyclicSeries want(kPants);
  want.add_term(CyclicWord(), Rational(6));
  want.add_term(CyclicWord(Word{letter_z(1)}), Rational(2));
  EXPECT_EQ(c_q(u, fr), want);
}

TEST(ChargeCocycle, LieCocycleLaw) {
  std::mt19937_64 rng(203);
  Framing fr(kOneOne, {2}, {1, }, {-1});
  for (int rep = 0; rep < 3; ++rep) {
    TDer u = random_positive_tder(kOneOne, rng);
    TDer v = random_positive_tder(kOneOne, rng);
    EXPECT_EQ(c_q(tder_bracket(u, v), fr),
              tder_apply(u, c_q(v, fr)) - tder_apply(v, c_q(u, fr)));
  }
}

TEST(GDiv, CobracketIsDivergenceOfSigma) {
  std::mt19937_64 rng(204);
  std::vector<Framing> framings = {
      Framing::adapted(kOneOne), Framing(kOneOne, {2}, {1}, {-1}),
      Framing::adapted(kPants), Framing(kPants, {0, -3}, {}, {})};
  for (const Framing& fr : framings) {
    const Signature& sig = fr.sig();
    for (int rep = 0; rep < 4; ++rep) {
      CyclicSeries P = random_cyclic(sig, 5, rng);
      TDer u = sigma_hat(P);
      BiCyclicSeries rhs =
          tdiv(u) - wedge(c_q(u, fr), CyclicSeries::unit(sig));
      EXPECT_EQ(turaev_cobracket(P, fr), rhs);
    }
  }
}

TEST(GDiv, FramedCocycleLaw) {
  std::mt19937_64 rng(205);
  Framing fr(kOneOne, {2}, {1}, {-1});
  const int N = 6;
  for (int rep = 0; rep < 2; ++rep) {
    TDer u = random_positive_tder(kOneOne, rng).truncated(N);
    TDer v = random_positive_tder(kOneOne, rng).truncated(N);
    EXPECT_EQ(gdiv_f(tder_bracket(u, v), fr),
              tder_apply(u, gdiv_f(v, fr)) - tder_apply(v, gdiv_f(u, fr)));
  }
  TDer w = random_positive_tder(kOneOne, rng);
  EXPECT_THROW(gdiv_f(w, fr), DegreeOverflow);
}

TEST(GroupCocycles, CocycleLaw) {
  std::mt19937_64 rng(206);
  const int N = 4;
  for (const Signature& sig : {kPants, kOneOne}) {
    TAut F = taut_exp(random_positive_tder(sig, rng, true), N);
    TAut G = taut_exp(random_positive_tder(sig, rng, true), N);
    TAut FG = taut_compose(F, G);
    EXPECT_EQ(double_jacobian(FG, N),
              double_jacobian(F, N) + taut_apply(F, double_jacobian(G, N)));
    Framing fr = sig.g > 0 ? Framing(sig, {2}, {0}, {1}) : Framing(sig, {1, -1}, {}, {});
    EXPECT_EQ(charge_cocycle(FG, fr, N),
              charge_cocycle(F, fr, N) + taut_apply(F, charge_cocycle(G, fr, N)));
  }
  EXPECT_TRUE(double_jacobian(TAut::identity(kPants, 4), 4).is_zero());
}

TEST(GroupCocycles, DoubleJacobianSplits) {
  std::mt19937_64 rng(207);
  const int N = 4;
  for (const Signature& sig : {kPants, kOneOne}) {
    TAut F = taut_exp(random_positive_tder(sig, rng, true), N);
    EXPECT_EQ(delta_tilde(jacobian(F, N)), double_jacobian(F, N));
    Framing fr = sig.g > 0 ? Framing(sig, {0}, {1}, {0}) : Framing(sig, {2, 0}, {}, {});
    EXPECT_EQ(framed_jacobian(F, fr, N),
              jacobian(F, N) - charge_cocycle(F, fr, N));
  }
}

TEST(GroupCocycles, RightFactorPathAtGenusZero) {
  std::mt19937_64 rng(208);
  const int N = 5;
  TDer u = random_positive_tder(kPants, rng).truncated(N);
  TAut F = taut_exp(u, N);
  CyclicSeries viadiv = integrate_cocycle(u, div_gr(u), N);
  EXPECT_EQ(jacobian(F, N), viadiv);
}

TEST(Pullback, ShiftsByCoboundaryOfJacobian) {
  std::mt19937_64 rng(209);
  const int N = 4;
  for (const Signature& sig : {kPants, kOneOne}) {
    TAut F = taut_exp(random_positive_tder(sig, rng, true), N);
    TDer u = random_positive_tder(sig, rng).truncated(N);
    BiCyclicSeries lhs =
        pullback_cocycle(F, [](const TDer& v) { return tdiv(v); }, u, N);
    BiCyclicSeries rhs =
        tdiv(u) + tder_apply(u, double_jacobian(taut_inverse(F), N));
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(TwistedCobracket, GenusZeroShortcut) {
  std::mt19937_64 rng(210);
  const int N = 5;
  Framing fr = Framing::adapted(kPants);
  TAut F = taut_exp(random_positive_tder(kPants, rng), N);
  for (int rep = 0; rep < 3; ++rep) {
    CyclicSeries P = random_cyclic(kPants, 5, rng);
    BiCyclicSeries lhs = twisted_cobracket(P, fr, F, N);
    BiCyclicSeries rhs =
        turaev_cobracket(P, fr) +
        tder_apply(sigma_hat(P), delta_tilde(jacobian(taut_inverse(F), N)));
    EXPECT_EQ(lhs, rhs);
  }
}

}  // namespace
}  // namespace gt
