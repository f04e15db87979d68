#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <random>

#include "gtq/modules.hpp"
#include "gtq/relations.hpp"
#include "gtq/suites.hpp"

using namespace gtq;
using cd = std::complex<double>;

namespace {

GTPattern P(const char *json) { return pattern_from_json(json); }

double max_residual(const NumericModule &m) {
  double w = 0;
  for (const auto &[id, r] : check_relations_numeric(m)) w = std::max(w, r);
  return w;
}

}  // namespace

TEST(SqrtModule, VectorRepresentationOfSo3) {
  NumericModule m = build_sqrt_module(3, parse_row("1"), 1.5);
  ASSERT_EQ(m.basis.size(), 3u);
  const auto &I21 = m.gens.at(2);
  EXPECT_NEAR(std::abs(I21(0, 0) - cd(0, -1)), 0, 1e-14);
  EXPECT_NEAR(std::abs(I21(1, 1)), 0, 1e-14);
  EXPECT_NEAR(std::abs(I21(2, 2) - cd(0, 1)), 0, 1e-14);
  EXPECT_NEAR(I21.cwiseAbs().sum() - 2.0, 0, 1e-14);
  auto res = check_relations_numeric(m);
  EXPECT_LE(res.at("cubic-high(2)"), 1e-10);
  EXPECT_LE(res.at("cubic-low(2)"), 1e-10);
}

TEST(SqrtModule, SpinorOfSo3) {
  NumericModule m = build_sqrt_module(3, parse_row("1/2"), 2.0);
  ASSERT_EQ(m.basis.size(), 2u);
  double half = 1.0 / (std::sqrt(2.0) + 1.0 / std::sqrt(2.0));
  EXPECT_NEAR(std::abs(m.gens.at(2)(0, 0) - cd(0, -half)), 0, 1e-14);
  EXPECT_NEAR(std::abs(m.gens.at(2)(1, 1) - cd(0, half)), 0, 1e-14);
}

TEST(SqrtModule, So2IsOneDimensional) {
  NumericModule m = build_sqrt_module(2, parse_row("3"), 1.3);
  EXPECT_EQ(m.basis.size(), 1u);
  EXPECT_TRUE(check_relations_numeric(m).empty());
}

TEST(SqrtModule, ZeroGeneratorBreaksCubicHigh) {
  NumericModule m = build_sqrt_module(3, parse_row("1"), 1.5);
  m.gens.at(3).setZero();
  auto res = check_relations_numeric(m);
  // the left side vanishes and -I_21 is left over
  EXPECT_NEAR(res.at("cubic-high(2)"), 1.0, 1e-14);
}

TEST(SqrtModule, Rank5IncludesCommutingPair) {
  NumericModule m = build_sqrt_module(5, parse_row("1,0"), 1.2);
  auto res = check_relations_numeric(m);
  ASSERT_TRUE(res.count("commute(2,4)"));
  EXPECT_LE(res.at("commute(2,4)"), 1e-9);
  EXPECT_LE(max_residual(m), 1e-9);
}

TEST(SqrtModule, LadderTermsAreSkewSymmetric) {
  for (const char *top : {"1,0", "3/2,1/2", "2,1"}) {
    NumericModule m = build_sqrt_module(5, parse_row(top), 1.4);
    EXPECT_EQ(m.basis.size(), enumerate_basis(5, parse_row(top)).size());
    for (const auto &[i, M] : m.gens)
      for (Eigen::Index r = 0; r < M.rows(); ++r)
        for (Eigen::Index c = 0; c < r; ++c) EXPECT_NEAR(std::abs(M(r, c) + M(c, r)), 0, 1e-12);
  }
}

TEST(SqrtModule, NonzeroEntriesConnectNeighbours) {
  NumericModule m = build_sqrt_module(6, parse_row("1,1,0"), 1.3);
  for (const auto &[i, M] : m.gens)
    for (Eigen::Index r = 0; r < M.rows(); ++r)
      for (Eigen::Index c = 0; c < M.cols(); ++c) {
        if (std::abs(M(r, c)) < 1e-14) continue;
        auto a = m.basis[static_cast<std::size_t>(r)].flattened(), b = m.basis[static_cast<std::size_t>(c)].flattened();
        int diff = 0;
        for (std::size_t k = 0; k < a.size(); ++k) diff += static_cast<int>(std::abs((a[k] - b[k]).twice()));
        EXPECT_TRUE(diff == 0 || diff == 2);
      }
}

TEST(SqrtModule, RejectsQEqualToOne) { EXPECT_THROW(build_sqrt_module(3, parse_row("1"), 1.0), std::invalid_argument); }

TEST(RatModule, So3DiagonalIsExact) {
  ExactModule m = build_rat_module(3, parse_row("1"), Mode::quantum);
  const auto &I21 = m.gens.at(2);
  EXPECT_EQ(I21.at({0, 0}), -RatScalar::imaginary_unit(Mode::quantum));
  EXPECT_FALSE(I21.count({1, 1}));
  EXPECT_EQ(I21.at({2, 2}), RatScalar::imaginary_unit(Mode::quantum));
}

TEST(RatModule, RelationsVanishIdentically) {
  for (Mode mode : {Mode::quantum, Mode::classical}) {
    for (auto r : check_relations_exact(build_rat_module(3, parse_row("1"), mode))) EXPECT_TRUE(r.zero) << r.id;
    for (auto r : check_relations_exact(build_rat_module(4, parse_row("1,0"), mode))) EXPECT_TRUE(r.zero) << r.id;
    auto r5 = check_relations_exact(build_rat_module(5, parse_row("1,0"), mode));
    EXPECT_TRUE(std::any_of(r5.begin(), r5.end(), [](const auto &r) { return r.id == "commute(2,4)"; }));
    for (auto r : r5) EXPECT_TRUE(r.zero) << r.id;
  }
}

TEST(RatModule, GaussianPartOnlyOnEvenGenerators) {
  ExactModule m = build_rat_module(3, parse_row("1/2"), Mode::quantum);
  for (const auto &[rc, v] : m.gens.at(3)) EXPECT_TRUE(v.is_real());
  for (const auto &[rc, v] : m.gens.at(2)) {
    EXPECT_EQ(rc.first, rc.second);
    EXPECT_TRUE(v.re().is_zero());
  }
}

TEST(RatModule, BrokenRelationHasWitness) {
  ExactModule m = build_rat_module(3, parse_row("1"), Mode::quantum);
  m.gens.at(3).clear();
  auto res = check_relations_exact(m);
  auto cubic = std::find_if(res.begin(), res.end(), [](const auto &r) { return r.id == "cubic-high(2)"; });
  ASSERT_NE(cubic, res.end());
  EXPECT_FALSE(cubic->zero);
  EXPECT_TRUE(cubic->witness.has_value());
}

TEST(RatCoeffs, DegenerateLadderAtTheEdge) {
  // j = p: the factors with a missing l'' index are dropped, leaving an empty product
  RatCoeffSet c = rat_coeffs(P("[[1],[0]]"), 3, Mode::quantum);
  ASSERT_TRUE(c.down[0].has_value());
  EXPECT_EQ(*c.down[0], RatScalar::constant(Mode::quantum, 1));
  EXPECT_FALSE(rat_coeffs(P("[[1],[1]]"), 3, Mode::quantum).up[0].has_value());

  // a diagonal rescaling keeps products of opposite entries; the lowering term enters with a minus sign
  const double q = 1.5;
  RatScalar up = *rat_coeffs(P("[[1],[-1]]"), 3, Mode::quantum).up[0];
  NumericModule m = build_sqrt_module(3, parse_row("1"), q);
  const auto &I32 = m.gens.at(3);  // basis m21 = -1, 0, 1
  EXPECT_NEAR(std::abs(-up.eval(q) * c.down[0]->eval(q) - I32(1, 0) * I32(0, 1)), 0, 1e-12);
}

TEST(RatCoeffs, DiagonalOfTheFirstGeneratorIsQNumber) {
  for (const char *top : {"2", "3/2"})
    for (const auto &p : enumerate_basis(3, parse_row(top)))
      EXPECT_EQ(*rat_coeffs(p, 2, Mode::quantum).diag, qnum(p.m(2, 1), Mode::quantum)) << p.to_string();
}

TEST(RatCoeffs, ClassicalValuesAreRational) {
  RatCoeffSet c = rat_coeffs(P(R"([["5/2"],["1/2"]])"), 3, Mode::classical);
  ASSERT_TRUE(c.up[0] && c.down[0]);
  EXPECT_TRUE(c.up[0]->is_real());
  EXPECT_EQ(c.up[0]->mode(), Mode::classical);
}

TEST(RatCoeffs, ClassicalIsTheLimitOfQuantum) {
  std::mt19937_64 rng(7);
  std::vector<GTPattern> pool;
  for (const auto &top : top_rows_up_to(5, HalfInt(2)))
    for (const auto &p : enumerate_basis(5, top)) pool.push_back(p);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int s = 0; s < 20; ++s) {
    const GTPattern &p = pool[pick(rng)];
    for (int i = 2; i <= 5; ++i) {
      RatCoeffSet qc = rat_coeffs(p, i, Mode::quantum), cc = rat_coeffs(p, i, Mode::classical);
      for (std::size_t j = 0; j < qc.up.size(); ++j) {
        ASSERT_EQ(qc.up[j].has_value(), cc.up[j].has_value());
        if (qc.up[j]) EXPECT_NEAR(std::abs(qc.up[j]->eval(1.0 + 1e-7) - cc.up[j]->eval(1.0)), 0, 1e-5);
        if (qc.down[j]) EXPECT_NEAR(std::abs(qc.down[j]->eval(1.0 + 1e-7) - cc.down[j]->eval(1.0)), 0, 1e-5);
      }
      if (qc.diag && !qc.diag_zero_over_zero) EXPECT_NEAR(std::abs(qc.diag->eval(1.0 + 1e-7) - cc.diag->eval(1.0)), 0, 1e-5);
    }
  }
}

TEST(RatModule, DiagonalMatchesSqrtModule) {
  for (const char *top : {"1,0", "2,1", "3/2,1/2"}) {
    ExactModule ex = build_rat_module(5, parse_row(top), Mode::quantum);
    NumericModule nm = build_sqrt_module(5, parse_row(top), 1.3);
    for (int i : {2, 4}) {
      const auto &M = nm.gens.at(i);
      for (Eigen::Index k = 0; k < M.rows(); ++k) {
        auto it = ex.gens.at(i).find({static_cast<int>(k), static_cast<int>(k)});
        cd exact = it == ex.gens.at(i).end() ? cd(0) : it->second.eval(1.3);
        EXPECT_NEAR(std::abs(exact - M(k, k)), 0, 1e-10);
      }
    }
  }
}

TEST(Lambda, EmptyClosedFormProductAtLevel3) {
  for (const auto &p : enumerate_basis(3, parse_row("2"))) {
    if (!is_valid(shift(p, 2, 1, +1))) continue;
    auto r = lambda_ratio_squared(p, 1, LambdaVia::closed_form, Mode::quantum);
    EXPECT_EQ(r.inner, RatScalar::constant(Mode::quantum, 1));
  }
}

TEST(Lambda, RecursionEqualsClosedFormAtRank5) {
  for (Mode mode : {Mode::quantum, Mode::classical})
    for (const auto &p : enumerate_basis(5, parse_row("2,1")))
      for (int j = 1; j <= 2; ++j) {
        if (!is_valid(shift(p, 4, j, +1))) continue;
        auto a = lambda_ratio_squared(p, j, LambdaVia::recursion, mode);
        auto b = lambda_ratio_squared(p, j, LambdaVia::closed_form, mode);
        EXPECT_EQ(a.outer, b.outer) << p.to_string();
        EXPECT_EQ(a.inner, b.inner) << p.to_string();
      }
}

TEST(Lambda, RejectsInvalidRaise) {
  EXPECT_THROW(lambda_ratio_squared(P("[[1],[1]]"), 1, LambdaVia::recursion, Mode::quantum), std::invalid_argument);
}

TEST(Similarity, SmallModules) {
  EXPECT_LE(similarity_check(3, parse_row("1"), 1.5), 1e-10);
  EXPECT_LE(similarity_check(4, parse_row("1,0"), 1.2), 1e-9);
  EXPECT_LE(similarity_check(5, parse_row("1,1"), 1.1), 1e-8);
}

TEST(MatrixJson, NumericAndExact) {
  std::string num = matrices_to_json(build_sqrt_module(3, parse_row("1"), 1.5));
  EXPECT_NE(num.find("[0.0,-1.0]"), std::string::npos);
  std::string ex = matrices_to_json(build_rat_module(3, parse_row("1/2"), Mode::quantum));
  EXPECT_NE(ex.find("\"mode\":\"quantum\""), std::string::npos);
  EXPECT_EQ(ex, matrices_to_json(build_rat_module(3, parse_row("1/2"), Mode::quantum)));
}
