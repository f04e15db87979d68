#include <gtest/gtest.h>

#include <random>

#include "gtq/casimir.hpp"
#include "gtq/skew.hpp"
#include "symbols.hpp"

using namespace gtq;

namespace {

// z'_{nj} = q^(k - j + eps) z_{nj}
MultiRat primed(int n, int j) {
  mpq_class off = top_offset(n, j);
  MultiRat f = sym::var(n, j);
  mpz_class tw = 2 * off.get_num() / off.get_den();
  for (long e = 0; e < std::abs(tw.get_si()); ++e) f = tw > 0 ? f * sym::t() : f / sym::t();
  return f;
}

RatScalar qnum_of(const mpq_class &v) { return qnum(v, Mode::quantum); }

}  // namespace

TEST(FactorialSymmetric, IndexArithmetic) {
  std::vector<long> a{5, 7, 11};
  EXPECT_EQ(gen_fact_esym<long>(1, {2}, a, 0), 2 - 5);
  EXPECT_EQ(gen_fact_esym<long>(2, {2, 3}, a, 0), (2 - 5) * (3 - 5));
  EXPECT_EQ(gen_fact_esym<long>(1, {2, 3}, a, 0), (2 - 5) + (3 - 7));
  // three variables, d = 2: pairs (1,2), (1,3), (2,3) use a_1 then a_2
  EXPECT_EQ(gen_fact_esym<long>(2, {2, 3, 4}, a, 0), (2 - 5) * (3 - 5) + (2 - 5) * (4 - 7) + (3 - 7) * (4 - 7));
  EXPECT_THROW(gen_fact_esym<long>(0, {2}, a, 0), std::out_of_range);
  EXPECT_THROW(gen_fact_esym<long>(2, {2}, a, 0), std::out_of_range);
}

TEST(Eigenvalue, LevelTwo) {
  MultiRat m = sym::bracket(sym::var(2, 1));
  EXPECT_TRUE(casimir_eigenvalue_symbolic(2, 1, Mode::quantum).equals(-(m * m)));
  EXPECT_TRUE(casimir_plus_eigenvalue_symbolic(2, Mode::quantum).equals(sym::i() * m));
  EXPECT_TRUE(casimir_eigenvalue_symbolic(2, 1, Mode::classical).equals(-(sym::var(2, 1) * sym::var(2, 1))));
  MultiRat plus = casimir_plus_eigenvalue_symbolic(2, Mode::quantum);
  EXPECT_TRUE((plus * plus).equals(casimir_eigenvalue_symbolic(2, 1, Mode::quantum)));
}

TEST(Eigenvalue, LevelThree) {
  for (int tw : {0, 1, 2, 3, 4, 7}) {
    mpq_class m(tw, 2);
    m.canonicalize();
    RatScalar s = qnum_of(m + mpq_class(1, 2)), e = qnum_of(mpq_class(1, 2));
    EXPECT_EQ(casimir_eigenvalue(3, 1, {m}, Mode::quantum), -(s * s - e * e)) << m;
    mpq_class c = (m + mpq_class(1, 2)) * (m + mpq_class(1, 2)) - mpq_class(1, 4);
    EXPECT_EQ(casimir_eigenvalue(3, 1, {m}, Mode::classical), RatScalar::constant(Mode::classical, -c));
  }
}

TEST(Eigenvalue, RankFourTopThreeOne) {
  // s = (4, 1), a_1 = [0]^2 = 0: e_2 = [4]^2 [1]^2
  RatScalar four = qnum_of(4);
  EXPECT_EQ(casimir_eigenvalue(4, 2, {3, 1}, Mode::quantum), four * four);
  EXPECT_EQ(casimir_eigenvalue(4, 2, {3, 1}, Mode::classical), RatScalar::constant(Mode::classical, 16));
  // e_1 = ([4]^2 - [0]^2) + ([1]^2 - [1]^2); classically 3*5 + 1*1
  EXPECT_EQ(casimir_eigenvalue(4, 1, {3, 1}, Mode::quantum), -(four * four));
  EXPECT_EQ(casimir_eigenvalue(4, 1, {3, 1}, Mode::classical), RatScalar::constant(Mode::classical, -16));
  EXPECT_THROW(casimir_eigenvalue(4, 3, {3, 1}, Mode::quantum), std::out_of_range);
}

TEST(PhiCasimir, LowRankImages) {
  MultiRat z = sym::var(2, 1);
  EXPECT_TRUE(phi_casimir(2, 1, Mode::quantum).equals(-(sym::bracket(z) * sym::bracket(z))));
  EXPECT_TRUE(SkewElement::scalar(3, Mode::quantum, phi_casimir_plus(2, Mode::quantum))
                  .equals(phi_generator(3, 2, Mode::quantum)));
  MultiRat x1 = sym::var(4, 1) + sym::c(1), x2 = sym::var(4, 2);
  EXPECT_TRUE(phi_casimir_plus(4, Mode::classical).equals(-(x1 * x2)));
  // quantum extra element: i^2 [s_1][s_2] in primed variables
  EXPECT_TRUE(phi_casimir_plus(4, Mode::quantum).equals(-(sym::bracket(primed(4, 1)) * sym::bracket(primed(4, 2)))));
}

TEST(PhiCasimir, MatchesSymbolicEigenvalue) {
  for (Mode mode : {Mode::quantum, Mode::classical})
    for (int n = 2; n <= 5; ++n) {
      for (int d = 1; d <= n / 2; ++d)
        EXPECT_TRUE(phi_casimir(n, d, mode).equals(casimir_eigenvalue_symbolic(n, d, mode))) << n << " " << d;
      if (n % 2 == 0) EXPECT_TRUE(phi_casimir_plus(n, mode).equals(casimir_plus_eigenvalue_symbolic(n, mode)));
    }
}

TEST(Weyl, BasicActions) {
  MultiRat b = primed(4, 1) * primed(4, 1) + (primed(4, 1) * primed(4, 1)).inverse();
  EXPECT_TRUE(weyl_act(WeylGroupElement::sigma(4, 1), b, Mode::quantum).equals(b));
  EXPECT_TRUE(weyl_act(WeylGroupElement::tau(4, 1), primed(4, 1), Mode::quantum).equals(-primed(4, 1)));
  EXPECT_TRUE(weyl_act(WeylGroupElement::sigma(4, 1), sym::var(4, 1) + sym::c(1), Mode::classical)
                  .equals(-(sym::var(4, 1) + sym::c(1))));
  MultiRat plus2 = phi_casimir_plus(2, Mode::quantum);
  WeylGroupElement st = WeylGroupElement::sigma(2, 1) * WeylGroupElement::tau(2, 1);
  EXPECT_TRUE(st.in_group(Mode::quantum));
  EXPECT_TRUE(weyl_act(st, plus2, Mode::quantum).equals(plus2));
  EXPECT_TRUE(weyl_act(WeylGroupElement::swap(4, 1), primed(4, 1), Mode::quantum).equals(primed(4, 2)));
}

TEST(Weyl, GroupLawOnRandomPairs) {
  std::mt19937_64 rng(3);
  for (Mode mode : {Mode::quantum, Mode::classical}) {
    auto group = weyl_group(4, mode);
    EXPECT_EQ(group.size(), mode == Mode::quantum ? 16u : 4u);
    std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
    MultiRat f = primed(4, 1) * primed(4, 1) * primed(4, 1) * primed(4, 2).inverse() + sym::var(4, 2);
    if (mode == Mode::classical) f = sym::var(4, 1) * sym::var(4, 1) * sym::var(4, 1) + sym::c(2) * sym::var(4, 2);
    for (int trial = 0; trial < 100; ++trial) {
      const auto &a = group[pick(rng)], &b = group[pick(rng)];
      WeylGroupElement ab = a * b;
      EXPECT_TRUE(ab.in_group(mode));
      EXPECT_TRUE(weyl_act(ab, f, mode).equals(weyl_act(a, weyl_act(b, f, mode), mode)));
    }
  }
  EXPECT_FALSE(WeylGroupElement::tau(4, 1).in_group(Mode::quantum));
  EXPECT_TRUE(WeylGroupElement::tau(3, 1).in_group(Mode::quantum));
}

TEST(Invariance, ImagesAreFixed) {
  EXPECT_TRUE(verify_invariance(3, Mode::quantum).passed());
  SymbolicReport r4 = verify_invariance(4, Mode::quantum);
  EXPECT_TRUE(r4.passed());
  EXPECT_TRUE(std::any_of(r4.results.begin(), r4.results.end(),
                          [](const auto &c) { return c.id.find("negated") != std::string::npos; }));
  EXPECT_TRUE(verify_invariance(5, Mode::classical).passed());
}

TEST(Invariance, SingleFlipNegatesTheExtraImage) {
  MultiRat plus = phi_casimir_plus(4, Mode::quantum);
  EXPECT_TRUE(weyl_act(WeylGroupElement::tau(4, 1), plus, Mode::quantum).equals(-plus));
  EXPECT_TRUE(weyl_act(WeylGroupElement::sigma(4, 2), plus, Mode::quantum).equals(-plus));
  MultiRat cplus = phi_casimir_plus(4, Mode::classical);
  EXPECT_TRUE(weyl_act(WeylGroupElement::sigma(4, 1), cplus, Mode::classical).equals(-cplus));
}

TEST(Decompose, SimpleInvariants) {
  auto b = [](int j) { return primed(4, j) * primed(4, j) + (primed(4, j) * primed(4, j)).inverse(); };
  InvariantWitness w = invariant_decompose(4, b(1) + b(2), Mode::quantum);
  ASSERT_EQ(w.even_part.size(), 1u);
  EXPECT_EQ(w.even_part.begin()->first, (std::vector<int>{1, 0}));
  EXPECT_TRUE(w.even_part.begin()->second.equals(sym::c(1)));
  EXPECT_TRUE(w.odd_part.empty());

  MultiRat g = (primed(4, 1) - primed(4, 1).inverse()) * (primed(4, 2) - primed(4, 2).inverse());
  InvariantWitness wg = invariant_decompose(4, g, Mode::quantum);
  EXPECT_TRUE(wg.even_part.empty());
  ASSERT_EQ(wg.odd_part.size(), 1u);
  EXPECT_EQ(wg.odd_part.begin()->first, (std::vector<int>{0, 0}));
  EXPECT_TRUE(wg.expand().equals(g));
}

TEST(Decompose, RoundTripsAndRejections) {
  std::mt19937_64 rng(9);
  for (Mode mode : {Mode::quantum, Mode::classical})
    for (int n = 2; n <= 5; ++n) {
      for (int d = 1; d <= n / 2; ++d) {
        MultiRat f = phi_casimir(n, d, mode);
        EXPECT_TRUE(invariant_decompose(n, f, mode).expand().equals(f));
      }
      for (int r = 0; r < 5; ++r) {
        MultiRat f = random_invariant(n, mode, rng);
        EXPECT_TRUE(invariant_decompose(n, f, mode).expand().equals(f));
      }
    }
  EXPECT_THROW(invariant_decompose(4, sym::var(4, 1), Mode::quantum), NotInvariant);
  EXPECT_THROW(invariant_decompose(3, sym::var(2, 1), Mode::classical), std::domain_error);
}

TEST(Decompose, LeadingTermOfCasimirImage) {
  // -[s]^2 = -(b - 2)/(q - 1/q)^2 plus a constant
  InvariantWitness w = invariant_decompose(3, phi_casimir(3, 1, Mode::quantum), Mode::quantum);
  ASSERT_TRUE(w.even_part.count({1}));
  EXPECT_TRUE(w.even_part.at({1}).equals(-(sym::qdiff() * sym::qdiff()).inverse()));
}
