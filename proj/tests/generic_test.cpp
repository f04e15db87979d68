#include <gtest/gtest.h>

#include <set>

#include "gtq/generic.hpp"
#include "gtq/modules.hpp"
#include "gtq/suites.hpp"
#include "symbols.hpp"

using namespace gtq;

namespace {

std::vector<mpq_class> top_of(std::initializer_list<int> v) {
  std::vector<mpq_class> r;
  for (int x : v) r.emplace_back(x);
  return r;
}

}  // namespace

TEST(ShiftLayout, RowsBelowTheTop) {
  EXPECT_EQ(shift_dim(2), 0);
  EXPECT_EQ(shift_dim(3), 1);
  EXPECT_EQ(shift_dim(5), 4);
  EXPECT_EQ(shift_dim(6), 6);
  auto e = shift_entries(5);
  std::vector<std::pair<int, int>> want{{4, 1}, {4, 2}, {3, 1}, {2, 1}};
  EXPECT_EQ(e, want);
  EXPECT_EQ(shift_position(5, 3, 1), 2);
  EXPECT_EQ(to_string(unit_shift(5, 4, 2, -1)), "(0,-1,0,0)");
}

TEST(GenericAction, FirstGeneratorIsDiagonal) {
  FormalVector v = generic_action(3, 2, FormalVector::base(3), Mode::quantum);
  ASSERT_EQ(v.terms.size(), 1u);
  EXPECT_EQ(v.terms.begin()->first, ShiftVec{0});
  EXPECT_TRUE(v.terms.begin()->second.equals(sym::i() * sym::bracket(sym::var(2, 1))));

  FormalVector w = generic_action(3, 2, FormalVector::base(3), Mode::classical);
  ASSERT_EQ(w.terms.size(), 1u);
  EXPECT_TRUE(w.terms.begin()->second.equals(sym::i() * sym::var(2, 1)));
}

TEST(GenericAction, SecondGeneratorMovesBothWays) {
  for (Mode mode : {Mode::quantum, Mode::classical}) {
    FormalVector v = generic_action(3, 3, FormalVector::base(3), mode);
    ASSERT_EQ(v.terms.size(), 2u);
    EXPECT_TRUE(v.terms.count(ShiftVec{1}));
    EXPECT_TRUE(v.terms.count(ShiftVec{-1}));
  }
}

TEST(GenericAction, CoefficientsAreLocal) {
  for (Mode mode : {Mode::quantum, Mode::classical})
    for (int i = 2; i <= 6; ++i)
      for (const auto &t : action_terms(PointView::symbolic(6), i, mode)) {
        auto s = t.coeff.support();
        for (int idx = 0; idx < kTVar; ++idx)
          if (s[static_cast<std::size_t>(idx)]) {
            int r = var_row(idx);
            EXPECT_TRUE(r == i || r == i - 1 || r == i - 2) << "I_" << i << " uses row " << r;
          }
      }
}

TEST(GenericAction, SpecializesToFiniteModuleLadders) {
  // z := q^m at a valid pattern turns the symbolic up-coefficients into the exact ones
  for (Mode mode : {Mode::quantum, Mode::classical})
    for (const auto &p : enumerate_basis(4, parse_row("1,0"))) {
      std::map<int, mpq_class> values;
      for (int r = 2; r <= 4; ++r)
        for (int c = 1; c <= r / 2; ++c) values[var_index(r, c)] = p.m(r, c).to_mpq();
      Substitution s = bind_values(values, mode);
      for (int i = 3; i <= 4; ++i) {
        RatCoeffSet exact = rat_coeffs(p, i, mode);
        for (const auto &t : action_terms(PointView::symbolic(4), i, mode)) {
          if (t.direction != 1) continue;
          const auto &want = exact.up[static_cast<std::size_t>(t.col - 1)];
          if (!want) continue;
          EXPECT_EQ(t.coeff.substitute(s, mode).to_rat_scalar(mode), *want) << p.to_string() << " I_" << i;
        }
      }
    }
}

TEST(GenericRelations, VanishIdentically) {
  EXPECT_TRUE(verify_generic_relations(3, Mode::quantum).passed());
  EXPECT_TRUE(verify_generic_relations(4, Mode::classical).passed());
  SymbolicReport r5 = verify_generic_relations(5, Mode::quantum);
  EXPECT_TRUE(r5.passed());
  EXPECT_TRUE(std::any_of(r5.results.begin(), r5.results.end(), [](const auto &c) { return c.id == "commute(2,4)"; }));
  for (const auto &c : r5.results) EXPECT_GT(c.n_terms, 0u);
}

TEST(Admissibility, PrimeReciprocalBases) {
  for (int n = 3; n <= 7; ++n) {
    std::vector<mpq_class> top;
    for (int j = 1; j <= n / 2; ++j) top.emplace_back(n / 2 - j + 1);
    AdmissibleBase b = prime_reciprocal_base(n, top);
    EXPECT_EQ(static_cast<int>(b.base.size()), b.N());
    std::set<mpz_class> dens;
    for (const auto &[rc, v] : b.base) {
      EXPECT_EQ(v.get_num(), 1);
      dens.insert(v.get_den());
    }
    EXPECT_EQ(dens.size(), b.base.size());
    EXPECT_TRUE(check_admissible(b).admissible) << "n=" << n;
  }
}

TEST(Admissibility, CounterexampleFamilies) {
  Admissibility ints = check_admissible(integer_base(4, top_of({2, 1})));
  EXPECT_FALSE(ints.admissible);
  EXPECT_FALSE(ints.violations.empty());
  EXPECT_FALSE(check_admissible(integer_base(6, top_of({2, 1, 0}))).admissible);

  AdmissibleBase pair = prime_reciprocal_base(5, top_of({2, 1}));
  pair.base[{4, 1}] = mpq_class(1, 3);
  pair.base[{4, 2}] = mpq_class(2, 3);
  Admissibility a = check_admissible(pair);
  EXPECT_FALSE(a.admissible);
  ASSERT_FALSE(a.violations.empty());
  EXPECT_NE(a.violations.front().find("k = -1"), std::string::npos);

  // level 3 has only the even row 2 below the top, which carries no condition
  EXPECT_TRUE(check_admissible(integer_base(3, top_of({1}))).admissible);
}

TEST(Window, RadiusOneAtLevel3) {
  AdmissibleBase b = prime_reciprocal_base(3, top_of({1}));
  for (Mode mode : {Mode::quantum, Mode::classical}) {
    WindowTable w = instantiate_window(b, 1, mode);
    EXPECT_EQ(w.points.size(), 3u);
    bool up = false, down = false;
    for (const auto &e : w.entries) {
      if (e.generator != 3) continue;
      EXPECT_FALSE(e.value.is_zero());
      if (e.to[0] == e.from[0] + 1) up = true;
      if (e.to[0] == e.from[0] - 1) down = true;
    }
    EXPECT_TRUE(up && down);
    EXPECT_NE(window_to_json(w).find("leaves_window"), std::string::npos);
  }
}

TEST(Window, RadiusZeroIsDiagonal) {
  WindowTable w = instantiate_window(prime_reciprocal_base(4, top_of({2, 1})), 0, Mode::quantum);
  ASSERT_EQ(w.points.size(), 1u);
  for (const auto &e : w.entries)
    if (!e.leaves_window) EXPECT_EQ(e.from, e.to);
}

TEST(Window, InadmissibleBaseIsRejected) {
  EXPECT_THROW(instantiate_window(integer_base(4, top_of({2, 1})), 1, Mode::classical), std::invalid_argument);
}
