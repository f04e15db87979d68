// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>

#include <json.hpp>

#include "gtq/casimir.hpp"
#include "gtq/formula.hpp"
#include "gtq/generic.hpp"
#include "gtq/modules.hpp"
#include "gtq/pattern.hpp"
#include "gtq/skew.hpp"
#include "gtq/suites.hpp"
#include "oracles.hpp"

using namespace gtq;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string &why) {
    if (ok) detail = why;
    ok = false;
  }
};

int failures = 0;

void criterion(int id, const std::string &name, double budget_s, const std::function<Outcome()> &body) {
  auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception &e) {
    o.fail(std::string("exception: ") + e.what());
  }
  double s = std::chrono::duration<double>(Clock::now() - t0).count();
  if (o.ok && s > budget_s) o.fail("took longer than " + std::to_string(static_cast<int>(budget_s)) + " s");
  if (!o.ok) ++failures;
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.2fs", s);
  std::cout << (o.ok ? "PASS" : "FAIL") << " [" << id << "] " << name << " (" << secs
            << (o.detail.empty() ? "" : "; " + o.detail) << ")" << std::endl;
}

std::string text(const std::vector<HalfInt> &row) {
  std::string s = "(";
  for (std::size_t k = 0; k < row.size(); ++k) s += (k ? "," : "") + row[k].to_string();
  return s + ")";
}

void absorb(Outcome &o, const SymbolicReport &r, const std::string &label) {
  for (const auto &c : r.results)
    if (!c.zero) o.fail(label + " " + c.id + ": " + c.witness.value_or("nonzero"));
}

const Mode kModes[] = {Mode::quantum, Mode::classical};

std::string mode_text(Mode m) { return m == Mode::quantum ? "quantum" : "classical"; }

}  // namespace

int main() {
  criterion(1, "basis sizes match brute-force interlacing counts, n=3..6, |entries| <= 2", 10, [] {
    Outcome o;
    int tops = 0;
    for (int n = 3; n <= 6; ++n)
      for (const auto &top : oracle::all_tops(n, 4)) {
        std::vector<HalfInt> h;
        for (int v : top) h.push_back(HalfInt::from_twice(v));
        long want = oracle::count_patterns(n, top);
        long got = static_cast<long>(enumerate_basis(n, h).size());
        if (got != want) o.fail("n=" + std::to_string(n) + " top " + text(h));
        ++tops;
      }
    o.detail = std::to_string(tops) + " top rows";
    return o;
  });

  criterion(2, "square-root modules satisfy the relations numerically, n=3..5, |top| <= 3/2, q in {1.1, 1.5}", 30, [] {
    Outcome o;
    double worst = 0;
    for (int n = 3; n <= 5; ++n)
      for (const auto &top : top_rows_up_to(n, HalfInt::from_twice(3)))
        for (double q : {1.1, 1.5})
          for (const auto &[rel, r] : check_relations_numeric(build_sqrt_module(n, top, q))) {
            worst = std::max(worst, r);
            if (r > 1e-9) o.fail(rel + " at n=" + std::to_string(n) + " top " + text(top));
          }
    char buf[48];
    std::snprintf(buf, sizeof buf, "max residual %.2e", worst);
    if (o.ok) o.detail = buf;
    return o;
  });

  criterion(3, "squared coefficients without absolute values agree on 50 random patterns", 5, [] {
    Outcome o;
    std::vector<GTPattern> pool;
    for (int n = 3; n <= 6; ++n)
      for (const auto &top : top_rows_up_to(n, HalfInt(2)))
        for (auto &p : enumerate_basis(n, top)) pool.push_back(std::move(p));
    std::mt19937_64 rng(20);
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(50);
    double worst = 0;
    int compared = 0;
    for (const auto &p : pool) {
      PointView v = PointView::concrete(p);
      for (int i = 3; i <= p.n(); ++i)
        for (int j = 1; j <= GTPattern::row_length(i - 1); ++j) {
          if (!is_valid(shift(p, i - 1, j, +1))) continue;
          QFormula plain = i % 2 ? coeff::odd_sqrt_squared(v, i, j) : coeff::even_sqrt_squared(v, i, j);
          QFormula abs = i % 2 ? coeff::odd_sqrt_squared_abs(v, i, j) : coeff::even_sqrt_squared_abs(v, i, j);
          for (double q : {1.1, 1.7}) {
            double a = eval_numeric(plain, Mode::quantum, q), b = eval_numeric(abs, Mode::quantum, q);
            worst = std::max(worst, std::abs(a - b) / std::max(1.0, std::abs(b)));
            ++compared;
          }
        }
    }
    if (worst > 1e-12) o.fail("relative difference " + std::to_string(worst));
    o.detail = std::to_string(compared) + " comparisons";
    return o;
  });

  criterion(4, "rescaled modules satisfy the relations exactly, n=3..5, both modes", 120, [] {
    Outcome o;
    int checked = 0;
    for (Mode mode : kModes)
      for (int n = 3; n <= 5; ++n)
        for (const auto &top : top_rows_up_to(n, HalfInt(1)))
          for (const auto &r : check_relations_exact(build_rat_module(n, top, mode))) {
            ++checked;
            if (!r.zero) o.fail(mode_text(mode) + " n=" + std::to_string(n) + " " + r.id);
          }
    o.detail = std::to_string(checked) + " relation matrices";
    return o;
  });

  criterion(5, "telescoping ratios: recursion equals closed form, n=3..6, plus the empty product", 120, [] {
    Outcome o;
    std::size_t checks = 0;
    bool empty_product = false;
    for (Mode mode : kModes)
      for (int n = 3; n <= 6; ++n) {
        SuiteReport r = run_suite("telescoping", n, mode);
        checks += r.checks.size();
        for (const auto &c : r.checks) {
          if (!c.pass) o.fail(c.id + ": " + c.witness.value_or(""));
          if (c.id.find("empty closed-form product") != std::string::npos) empty_product = true;
        }
      }
    if (!empty_product) o.fail("empty product case not exercised");
    o.detail = std::to_string(checks) + " checks";
    return o;
  });

  criterion(6, "rescaling is a similarity, n=3..5, |top| <= 1", 60, [] {
    Outcome o;
    double worst = 0;
    for (int n = 3; n <= 5; ++n)
      for (const auto &top : top_rows_up_to(n, HalfInt(1)))
        for (double q : {1.1, 1.5}) worst = std::max(worst, similarity_check(n, top, q));
    if (worst > 1e-8) o.fail("residual " + std::to_string(worst));
    char buf[48];
    std::snprintf(buf, sizeof buf, "max residual %.2e", worst);
    if (o.ok) o.detail = buf;
    return o;
  });

  criterion(7, "generic module relations vanish identically, n=3..5, both modes", 600, [] {
    Outcome o;
    std::size_t terms = 0;
    for (Mode mode : kModes)
      for (int n = 3; n <= 5; ++n) {
        SymbolicReport r = verify_generic_relations(n, mode);
        absorb(o, r, mode_text(mode) + " n=" + std::to_string(n));
        terms = std::max(terms, r.stats.max_terms);
      }
    o.detail = "largest sum " + std::to_string(terms) + " terms";
    return o;
  });

  criterion(8, "admissibility certificates: prime-reciprocal bases pass, both counterexample families fail", 1, [] {
    Outcome o;
    auto top = [](int n) {
      std::vector<mpq_class> t;
      for (int j = 1; j <= n / 2; ++j) t.emplace_back(n / 2 - j + 1);
      return t;
    };
    for (int n = 3; n <= 7; ++n)
      if (!check_admissible(prime_reciprocal_base(n, top(n))).admissible)
        o.fail("prime-reciprocal base rejected at n=" + std::to_string(n));
    for (int n = 4; n <= 7; ++n)
      if (check_admissible(integer_base(n, top(n))).admissible) o.fail("integer base accepted at n=" + std::to_string(n));
    for (int n = 5; n <= 7; ++n) {
      AdmissibleBase b = prime_reciprocal_base(n, top(n));
      b.base[{4, 1}] = mpq_class(1, 3);
      b.base[{4, 2}] = mpq_class(2, 3);
      if (check_admissible(b).admissible) o.fail("integral-sum pair accepted at n=" + std::to_string(n));
    }
    return o;
  });

  criterion(9, "skew group algebra images satisfy the relations exactly, n=3..6, both modes", 600, [] {
    Outcome o;
    for (Mode mode : kModes)
      for (int n = 3; n <= 6; ++n) absorb(o, verify_embedding(n, mode), mode_text(mode) + " n=" + std::to_string(n));
    return o;
  });

  criterion(10, "Casimir consistency: level-2 identity, C+ image, diagonal action by the eigenvalue, n<=5", 300, [] {
    Outcome o;
    for (Mode mode : kModes) {
      std::string m = mode_text(mode);
      MultiRat plus = casimir_plus_eigenvalue_symbolic(2, mode);
      if (!(plus * plus).equals(casimir_eigenvalue_symbolic(2, 1, mode))) o.fail(m + " level-2 square");
      for (int n = 3; n <= 5; ++n)
        if (!SkewElement::scalar(n, mode, phi_casimir_plus(2, mode)).equals(phi_generator(n, 2, mode)))
          o.fail(m + " C+ image at n=" + std::to_string(n));
      for (int n = 2; n <= 5; ++n) {
        FormalVector v = FormalVector::base(n);
        if (shift_dim(n) > 0) v.add(unit_shift(n, n - 1, 1, -1), MultiRat::constant(1));
        auto diagonal = [&](const MultiRat &image, const MultiRat &eig) {
          FormalVector want;
          want.n = n;
          for (const auto &[a, c] : v.terms) want.add(a, c * eig);
          return skew_apply(SkewElement::scalar(n, mode, image), v).equals(want);
        };
        for (int d = 1; d <= n / 2; ++d)
          if (!diagonal(phi_casimir(n, d, mode), casimir_eigenvalue_symbolic(n, d, mode)))
            o.fail(m + " C(" + std::to_string(2 * d) + ") at n=" + std::to_string(n));
        if (n % 2 == 0 && !diagonal(phi_casimir_plus(n, mode), casimir_plus_eigenvalue_symbolic(n, mode)))
          o.fail(m + " C+ at n=" + std::to_string(n));
      }
    }
    return o;
  });

  criterion(11, "images are Weyl-invariant, single flip negates C+, decompositions round-trip, n=3..6", 300, [] {
    Outcome o;
    int negations = 0, round_trips = 0;
    for (Mode mode : kModes)
      for (int n = 3; n <= 6; ++n) {
        SymbolicReport r = verify_invariance(n, mode, 0, 20);
        absorb(o, r, mode_text(mode) + " n=" + std::to_string(n));
        for (const auto &c : r.results) {
          if (c.id.find("negated") != std::string::npos) ++negations;
          if (c.id.find("decomposes") != std::string::npos) ++round_trips;
        }
        if (n % 2 == 0 && std::none_of(r.results.begin(), r.results.end(), [&](const auto &c) {
              return c.id.find("level " + std::to_string(n) + ": C+ negated") != std::string::npos;
            }))
          o.fail("no negation check at n=" + std::to_string(n));
      }
    o.detail = std::to_string(negations) + " negation checks, " + std::to_string(round_trips) + " round trips";
    return o;
  });

  criterion(12, "run_suite(all) twice gives byte-identical JSON (n=5 quantum, n=6 classical)", 600, [] {
    Outcome o;
    for (auto [n, mode] : {std::pair{5, Mode::quantum}, std::pair{6, Mode::classical}}) {
      std::string a = run_suite("all", n, mode).to_json(), b = run_suite("all", n, mode).to_json();
      if (a != b) o.fail(mode_text(mode) + " n=" + std::to_string(n) + " reports differ");
      if (nlohmann::json::parse(a)["status"] != "pass") o.fail(mode_text(mode) + " run did not pass");
    }
    return o;
  });

  std::cout << (failures ? std::to_string(failures) + " criteria failed" : std::string("all criteria passed"))
            << std::endl;
  return failures ? 1 : 0;
}
