#include "gtq/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>

#include <json.hpp>

#include "gtq/casimir.hpp"
#include "gtq/generic.hpp"
#include "gtq/modules.hpp"
#include "gtq/pattern.hpp"
#include "gtq/skew.hpp"

namespace gtq {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string short_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

std::string row_text(const std::vector<HalfInt> &row) {
  std::string s = "(";
  for (std::size_t k = 0; k < row.size(); ++k) s += (k ? "," : "") + row[k].to_string();
  return s + ")";
}

class Run {
public:
  Run(SuiteReport &rep, std::string suite, int n, Mode mode, const SuiteOptions &opt)
      : rep_(rep), suite_(std::move(suite)), n_(n), mode_(mode), opt_(opt) {}

  int n() const { return n_; }
  Mode mode() const { return mode_; }
  const SuiteOptions &opt() const { return opt_; }

  void add(std::string id, bool pass, std::optional<std::string> witness = std::nullopt, std::size_t n_terms = 0,
           double seconds = 0) {
    CheckResult c;
    c.suite = suite_;
    c.n = n_;
    c.id = std::move(id);
    c.pass = pass;
    if (!pass) c.witness = std::move(witness);
    c.n_terms = n_terms;
    c.seconds = seconds;
    rep_.checks.push_back(std::move(c));
  }

  // A check whose body may throw; the message becomes the witness.
  void guarded(const std::string &id, const std::function<std::optional<std::string>()> &body) {
    auto t0 = Clock::now();
    try {
      auto failure = body();
      add(id, !failure.has_value(), failure, 0, since(t0));
    } catch (const std::exception &e) {
      add(id, false, std::string("exception: ") + e.what(), 0, since(t0));
    }
  }

  void absorb(const SymbolicReport &r) {
    for (const auto &c : r.results) add(c.id, c.zero, c.witness, c.n_terms, c.seconds);
    rep_.kernel.merge(r.stats);
  }

  std::mt19937_64 rng(int stream) const {
    std::seed_seq seq{static_cast<std::uint32_t>(opt_.seed), static_cast<std::uint32_t>(opt_.seed >> 32),
                      static_cast<std::uint32_t>(n_), static_cast<std::uint32_t>(stream)};
    return std::mt19937_64(seq);
  }

private:
  SuiteReport &rep_;
  std::string suite_;
  int n_;
  Mode mode_;
  const SuiteOptions &opt_;
};

std::vector<GTPattern> pattern_pool(int n, HalfInt max_abs) {
  std::vector<GTPattern> pool;
  for (const auto &top : top_rows_up_to(n, max_abs)) {
    auto basis = enumerate_basis(n, top);
    pool.insert(pool.end(), basis.begin(), basis.end());
  }
  return pool;
}

// Up to `count` distinct elements, drawn in order of appearance of the random indices.
std::vector<GTPattern> draw(const std::vector<GTPattern> &pool, std::size_t count, std::mt19937_64 &rng) {
  if (pool.size() <= count) return pool;
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::set<std::size_t> seen;
  std::vector<GTPattern> out;
  while (out.size() < count) {
    std::size_t k = pick(rng);
    if (seen.insert(k).second) out.push_back(pool[k]);
  }
  return out;
}

int ladder(int i) { return i % 2 == 1 ? i / 2 : (i - 2) / 2; }

std::vector<double> numeric_qs(Mode mode, double a, double b) {
  return mode == Mode::quantum ? std::vector<double>{a, b} : std::vector<double>{1.0};
}

std::string q_label(Mode mode, double q) { return mode == Mode::quantum ? " q=" + short_double(q) : ""; }

// ---- relations-numeric

void relations_numeric(Run &run) {
  int n = run.n();
  Mode mode = run.mode();
  if (n < 3) return;  // one generator, nothing to relate
  for (const auto &top : top_rows_up_to(n, HalfInt::from_twice(3)))
    for (double q : numeric_qs(mode, 1.1, 1.5)) {
      run.guarded("relations top " + row_text(top) + q_label(mode, q), [&]() -> std::optional<std::string> {
        auto residuals = check_relations_numeric(build_sqrt_module(n, top, q, mode));
        auto worst = std::max_element(residuals.begin(), residuals.end(),
                                      [](const auto &a, const auto &b) { return a.second < b.second; });
        if (worst == residuals.end() || worst->second <= run.opt().tol) return std::nullopt;
        return worst->first + " residual " + short_double(worst->second);
      });
    }

  // The squared coefficients written without absolute values agree with the original ones.
  auto rng = run.rng(1);
  auto patterns = draw(pattern_pool(n, HalfInt(2)), 50, rng);
  run.guarded("rewrite without absolute values, " + std::to_string(patterns.size()) + " patterns",
              [&]() -> std::optional<std::string> {
                double worst = 0;
                std::string where;
                for (const auto &p : patterns)
                  for (int i = 3; i <= n; ++i)
                    for (int j = 1; j <= ladder(i); ++j) {
                      if (!is_valid(shift(p, i - 1, j, +1))) continue;
                      PointView v = PointView::concrete(p);
                      QFormula plain = i % 2 ? coeff::odd_sqrt_squared(v, i, j) : coeff::even_sqrt_squared(v, i, j);
                      QFormula abs = i % 2 ? coeff::odd_sqrt_squared_abs(v, i, j) : coeff::even_sqrt_squared_abs(v, i, j);
                      for (double q : numeric_qs(mode, 1.1, 1.7)) {
                        double a = eval_numeric(plain, mode, q), b = eval_numeric(abs, mode, q);
                        double rel = std::abs(a - b) / std::max(1.0, std::abs(b));
                        if (rel > worst) {
                          worst = rel;
                          where = p.to_string() + " row " + std::to_string(i) + " j=" + std::to_string(j);
                        }
                      }
                    }
                if (worst <= 1e-12) return std::nullopt;
                return "relative difference " + short_double(worst) + " at " + where;
              });

  if (mode == Mode::quantum)
    for (const auto &top : top_rows_up_to(n, HalfInt(1)))
      for (double q : {1.1, 1.5})
        run.guarded("rescaling similarity top " + row_text(top) + " q=" + short_double(q),
                    [&]() -> std::optional<std::string> {
                      double r = similarity_check(n, top, q);
                      if (r <= 1e-8) return std::nullopt;
                      return "residual " + short_double(r);
                    });
}

// ---- relations-exact

void relations_exact(Run &run) {
  int n = run.n();
  if (n < 3) return;
  for (const auto &top : top_rows_up_to(n, HalfInt(1))) {
    auto t0 = Clock::now();
    try {
      auto results = check_relations_exact(build_rat_module(n, top, run.mode()));
      std::optional<std::string> witness;
      for (const auto &r : results)
        if (!r.zero) {
          witness = r.id + ": " + r.witness.value_or("nonzero");
          break;
        }
      run.add("exact relations top " + row_text(top), !witness, witness, results.size(), since(t0));
    } catch (const std::exception &e) {
      run.add("exact relations top " + row_text(top), false, std::string("exception: ") + e.what(), 0, since(t0));
    }
  }
}

// ---- telescoping

bool has_raise(const GTPattern &p) {
  int n = p.n();
  for (int j = 1; j <= (n - 1) / 2; ++j)
    if (is_valid(shift(p, n - 1, j, +1))) return true;
  return false;
}

void telescoping(Run &run) {
  int n = run.n();
  Mode mode = run.mode();
  if (n < 3) return;
  std::vector<GTPattern> pool;
  for (auto &p : pattern_pool(n, HalfInt(2)))
    if (has_raise(p)) pool.push_back(std::move(p));
  auto rng = run.rng(2);
  auto patterns = draw(pool, 10, rng);
  for (const auto &p : patterns)
    for (int j = 1; j <= (n - 1) / 2; ++j) {
      GTPattern raised = shift(p, n - 1, j, +1);
      if (!is_valid(raised)) continue;
      std::string at = p.to_string() + " j=" + std::to_string(j);
      run.guarded("lambda ratios, recursion = closed form at " + at, [&]() -> std::optional<std::string> {
        auto rec = lambda_ratio_squared(p, j, LambdaVia::recursion, mode);
        auto closed = lambda_ratio_squared(p, j, LambdaVia::closed_form, mode);
        if (rec.outer != closed.outer) return "outer " + rec.outer.to_string() + " vs " + closed.outer.to_string();
        if (rec.inner != closed.inner) return "inner " + rec.inner.to_string() + " vs " + closed.inner.to_string();
        return std::nullopt;
      });
      run.guarded("squared coefficient identities at " + at, [&]() -> std::optional<std::string> {
        PointView v = PointView::concrete(p), vr = PointView::concrete(raised);
        bool odd = n % 2 == 1;
        RatScalar up = eval_exact(odd ? coeff::odd_up(v, n, j) : coeff::even_up(v, n, j), mode).value;
        RatScalar down = eval_exact(odd ? coeff::odd_down(vr, n, j) : coeff::even_down(vr, n, j), mode).value;
        RatScalar square =
            eval_exact(odd ? coeff::odd_sqrt_squared(v, n, j) : coeff::even_sqrt_squared(v, n, j), mode).value;
        if (up * down != square) return "up * down = " + (up * down).to_string() + ", square " + square.to_string();
        auto r = lambda_ratio_squared(p, j, LambdaVia::recursion, mode);
        if (up * up != r.outer * r.inner * square) return "up^2 differs from the rescaled square";
        return std::nullopt;
      });
    }
  if (n == 3 && !patterns.empty())
    run.guarded("empty closed-form product at level 3", [&]() -> std::optional<std::string> {
      RatScalar v = eval_exact(coeff::closed_inner(PointView::concrete(patterns.front()), 3, 1), mode).value;
      if (v == RatScalar::constant(mode, 1)) return std::nullopt;
      return "got " + v.to_string();
    });
}

// ---- generic

// Substitutes the pattern values of p into a symbolic coefficient, top row first.
RatScalar specialize(const MultiRat &f, const GTPattern &p, Mode mode) {
  int n = p.n();
  std::map<int, mpq_class> top, lower;
  for (int r = 2; r <= n; ++r)
    for (int c = 1; c <= GTPattern::row_length(r); ++c)
      (r == n ? top : lower)[var_index(r, c)] = p.m(r, c).to_mpq();
  MultiRat g = top.empty() ? f : f.substitute(bind_values(top, mode), mode);
  if (!lower.empty()) g = g.substitute(bind_values(lower, mode), mode);
  return g.to_rat_scalar(mode);
}

std::optional<std::string> coherence_with_finite(int n, const std::vector<HalfInt> &top, Mode mode) {
  ExactModule ex = build_rat_module(n, top, mode);
  std::map<GTPattern, int> idx;
  for (std::size_t k = 0; k < ex.basis.size(); ++k) idx.emplace(ex.basis[k], static_cast<int>(k));
  auto entries = shift_entries(n);
  for (int i = 2; i <= n; ++i) {
    FormalVector image = generic_action(n, i, FormalVector::base(n), mode);
    const SparseExact &M = ex.gens.at(i);
    for (std::size_t col = 0; col < ex.basis.size(); ++col) {
      const GTPattern &alpha = ex.basis[col];
      std::set<int> hit;
      for (const auto &[a, coef] : image.terms) {
        GTPattern target = alpha;
        for (std::size_t k = 0; k < entries.size(); ++k)
          if (a[k] != 0) target = shift(target, entries[k].first, entries[k].second, a[k]);
        auto it = idx.find(target);
        if (it == idx.end()) continue;  // the finite module keeps only valid targets
        RatScalar value;
        try {
          value = specialize(coef, alpha, mode);
        } catch (const std::exception &e) {
          // a 0/0 diagonal is resolved as zero by the finite builder
          if (!std::all_of(a.begin(), a.end(), [](int x) { return x == 0; })) throw;
          value = RatScalar::constant(mode, 0);
        }
        hit.insert(it->second);
        auto e = M.find({it->second, static_cast<int>(col)});
        RatScalar expected = e == M.end() ? RatScalar::constant(mode, 0) : e->second;
        if (value != expected)
          return "I_" + std::to_string(i) + " at " + alpha.to_string() + " -> " + target.to_string() + ": " +
                 value.to_string() + " vs " + expected.to_string();
      }
      for (const auto &[rc, v] : M)
        if (rc.second == static_cast<int>(col) && !hit.count(rc.first) && !v.is_zero())
          return "finite entry missing from the generic action at " + alpha.to_string();
    }
  }
  return std::nullopt;
}

std::vector<mpq_class> sample_top(int n) {
  std::vector<mpq_class> top;
  for (int j = 1; j <= n / 2; ++j) top.emplace_back(n / 2 - j + 1);
  return top;
}

void generic(Run &run) {
  int n = run.n();
  Mode mode = run.mode();
  run.absorb(verify_generic_relations(n, mode));

  if (n >= 4) {
    auto top = sample_top(n);
    run.guarded("prime-reciprocal base is admissible", [&]() -> std::optional<std::string> {
      auto a = check_admissible(prime_reciprocal_base(n, top));
      if (a.admissible) return std::nullopt;
      return a.violations.front();
    });
    run.guarded("integer base is inadmissible", [&]() -> std::optional<std::string> {
      if (!check_admissible(integer_base(n, top)).admissible) return std::nullopt;
      return std::string("certified admissible");
    });
    if (n >= 5)
      run.guarded("base with an integral same-row sum is inadmissible", [&]() -> std::optional<std::string> {
        AdmissibleBase b = prime_reciprocal_base(n, top);
        b.base[{4, 1}] = mpq_class(1, 3);
        b.base[{4, 2}] = mpq_class(2, 3);
        if (!check_admissible(b).admissible) return std::nullopt;
        return std::string("certified admissible");
      });
    // beyond n = 4 the quantum root q^(1/lcm) makes exact windows impractically large
    if (n == 4)
      run.guarded("window of radius 1 on the prime-reciprocal base", [&]() -> std::optional<std::string> {
        WindowTable w = instantiate_window(prime_reciprocal_base(n, top), 1, mode);
        if (w.entries.empty()) return std::string("empty table");
        return std::nullopt;
      });
  }
  if (n == 3 || n == 4) {
    std::vector<HalfInt> top = n == 3 ? std::vector<HalfInt>{HalfInt(1)} : std::vector<HalfInt>{HalfInt(1), HalfInt(0)};
    run.guarded("specialization reproduces the finite module " + row_text(top),
                [&] { return coherence_with_finite(n, top, mode); });
  }
}

// ---- embedding

void embedding(Run &run) {
  int n = run.n();
  Mode mode = run.mode();
  run.absorb(verify_embedding(n, mode));
  FormalVector v = FormalVector::base(n);
  if (shift_dim(n) > 0) v.add(unit_shift(n, n - 1, 1, 1), MultiRat::constant(1));
  for (int i = 2; i <= n; ++i)
    run.guarded("image of I_" + std::to_string(i) + " acts as the generic action", [&]() -> std::optional<std::string> {
      FormalVector via_skew = skew_apply(phi_generator(n, i, mode), v);
      if (via_skew.equals(generic_action(n, i, v, mode))) return std::nullopt;
      return std::string("formal vectors differ");
    });
}

// ---- invariance

void invariance(Run &run) { run.absorb(verify_invariance(run.n(), run.mode(), run.opt().seed)); }

// ---- casimir-consistency

std::optional<std::string> differs(const MultiRat &a, const MultiRat &b, Mode mode) {
  MultiRat d = a - b;
  if (d.is_zero()) return std::nullopt;
  return "difference " + d.to_string(mode);
}

void casimir_consistency(Run &run) {
  int n = run.n();
  Mode mode = run.mode();
  run.guarded("square of the extra level-2 eigenvalue", [&] {
    MultiRat plus = casimir_plus_eigenvalue_symbolic(2, mode);
    return differs(plus * plus, casimir_eigenvalue_symbolic(2, 1, mode), mode);
  });
  run.guarded("square of the extra level-2 image", [&] {
    MultiRat plus = phi_casimir_plus(2, mode);
    return differs(plus * plus, phi_casimir(2, 1, mode), mode);
  });
  run.guarded("extra level-2 image equals the image of I_2", [&]() -> std::optional<std::string> {
    if (SkewElement::scalar(n, mode, phi_casimir_plus(2, mode)).equals(phi_generator(n, 2, mode))) return std::nullopt;
    return std::string("skew elements differ");
  });

  FormalVector v = FormalVector::base(n);
  if (shift_dim(n) > 0) v.add(unit_shift(n, n - 1, 1, -1), MultiRat::constant(1));
  struct Central {
    std::string name;
    int d;  // 0 for the extra element of even levels
    MultiRat image, eig;
  };
  std::vector<Central> central;
  for (int d = 1; d <= n / 2; ++d)
    central.push_back({"C(" + std::to_string(2 * d) + ")", d, phi_casimir(n, d, mode), casimir_eigenvalue_symbolic(n, d, mode)});
  if (n % 2 == 0) central.push_back({"C+", 0, phi_casimir_plus(n, mode), casimir_plus_eigenvalue_symbolic(n, mode)});

  auto tops = top_rows_up_to(n, HalfInt(1));
  for (const auto &[name, d, image, eig] : central) {
    run.guarded(name + " acts diagonally by its eigenvalue", [&]() -> std::optional<std::string> {
      FormalVector got = skew_apply(SkewElement::scalar(n, mode, image), v);
      FormalVector want;
      want.n = n;
      for (const auto &[a, c] : v.terms) want.add(a, c * eig);
      if (got.equals(want)) return std::nullopt;
      return std::string("action is not the eigenvalue");
    });
    run.guarded(name + " eigenvalue is fixed by the Weyl-type group", [&]() -> std::optional<std::string> {
      for (const auto &g : weyl_generators(n, mode))
        if (auto d = differs(weyl_act(g, eig, mode), eig, mode)) return g.to_string() + ": " + *d;
      return std::nullopt;
    });
    run.guarded(name + " eigenvalue specializes on small top rows", [&]() -> std::optional<std::string> {
      for (const auto &top : tops) {
        std::vector<mpq_class> values;
        std::map<int, mpq_class> bind;
        for (std::size_t j = 0; j < top.size(); ++j) {
          values.push_back(top[j].to_mpq());
          bind[var_index(n, static_cast<int>(j) + 1)] = top[j].to_mpq();
        }
        RatScalar direct = d == 0 ? casimir_plus_eigenvalue(n, values, mode) : casimir_eigenvalue(n, d, values, mode);
        RatScalar bound = eig.substitute(bind_values(bind, mode), mode).to_rat_scalar(mode);
        if (direct != bound) return row_text(top) + ": " + direct.to_string() + " vs " + bound.to_string();
      }
      return std::nullopt;
    });
  }
}

using SuiteFn = void (*)(Run &);

const std::vector<std::pair<std::string, SuiteFn>> &registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"relations-numeric", relations_numeric}, {"relations-exact", relations_exact},
      {"telescoping", telescoping},             {"generic", generic},
      {"embedding", embedding},                 {"invariance", invariance},
      {"casimir-consistency", casimir_consistency}};
  return r;
}

SuiteFn lookup(const std::string &name) {
  for (const auto &[k, fn] : registry())
    if (k == name) return fn;
  throw UnknownSuite("unknown suite '" + name + "'");
}

std::string bound_warning(const std::string &suite, int n, int bound, Mode mode) {
  return suite + " at n=" + std::to_string(n) + " (" + to_string(mode) + ") is past the default bound " +
         std::to_string(bound) + "; expect a long runtime";
}

}  // namespace

bool SuiteReport::passed() const { return failures() == 0; }

std::size_t SuiteReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const CheckResult &c) { return !c.pass; }));
}

std::string SuiteReport::to_json(bool timings) const {
  using nlohmann::ordered_json;
  ordered_json j;
  j["schema"] = 1;
  j["suite"] = suite;
  j["n"] = n;
  j["mode"] = to_string(mode);
  j["seed"] = options.seed;
  j["tol"] = options.tol;
  j["status"] = passed() ? "pass" : "fail";
  j["summary"] = {{"checks", checks.size()}, {"failed", failures()}};
  j["kernel"] = {{"max_terms", kernel.max_terms}, {"reductions", kernel.reductions}};
  j["warnings"] = warnings;
  ordered_json arr = ordered_json::array();
  for (const auto &c : checks) {
    ordered_json e;
    e["suite"] = c.suite;
    e["n"] = c.n;
    e["id"] = c.id;
    e["status"] = c.pass ? "pass" : "fail";
    if (c.n_terms) e["n_terms"] = c.n_terms;
    if (c.witness) e["witness"] = *c.witness;
    if (timings) e["seconds"] = c.seconds;
    arr.push_back(std::move(e));
  }
  j["checks"] = std::move(arr);
  if (timings) j["seconds"] = seconds;
  return j.dump(2) + "\n";
}

const std::vector<std::string> &suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto &[k, fn] : registry()) v.push_back(k);
    v.push_back("all");
    return v;
  }();
  return names;
}

int suite_bound(const std::string &suite, Mode mode) {
  if (suite != "all") lookup(suite);
  if (suite == "generic" && mode == Mode::quantum) return 5;
  return 6;
}

std::vector<std::vector<HalfInt>> top_rows_up_to(int n, HalfInt max_abs) {
  int k = n / 2;
  std::vector<std::vector<HalfInt>> out;
  for (int parity = 0; parity <= 1; ++parity) {
    std::vector<std::int64_t> values;
    for (std::int64_t tw = -max_abs.twice(); tw <= max_abs.twice(); ++tw)
      if (std::abs(tw) % 2 == parity) values.push_back(tw);
    if (values.empty()) continue;
    std::vector<std::size_t> pos(static_cast<std::size_t>(k), 0);
    while (true) {
      std::vector<HalfInt> row;
      for (auto p : pos) row.push_back(HalfInt::from_twice(values[p]));
      if (validate_top_row(n, row).valid) out.push_back(row);
      int r = k - 1;
      while (r >= 0 && pos[static_cast<std::size_t>(r)] == values.size() - 1) pos[static_cast<std::size_t>(r--)] = 0;
      if (r < 0) break;
      ++pos[static_cast<std::size_t>(r)];
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

SuiteReport run_suite(const std::string &suite, int n, Mode mode, const SuiteOptions &options) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  if (n > kMaxN) throw BoundExceeded("n=" + std::to_string(n) + " is beyond the supported maximum " + std::to_string(kMaxN));
  SuiteReport rep;
  rep.suite = suite;
  rep.n = n;
  rep.mode = mode;
  rep.options = options;
  auto t0 = Clock::now();

  auto check_bound = [&](const std::string &name, int level) {
    int bound = suite_bound(name, mode);
    if (level <= bound) return;
    if (!options.allow_over_bound)
      throw BoundExceeded(name + " at n=" + std::to_string(level) + " exceeds the default bound " + std::to_string(bound) +
                          "; pass the override to run it anyway");
    rep.warnings.push_back(bound_warning(name, level, bound, mode));
  };

  if (suite == "all") {
    check_bound("all", n);
    for (const auto &[name, fn] : registry()) {
      int upper = std::min(n, options.allow_over_bound ? n : suite_bound(name, mode));
      for (int level = 3; level <= upper; ++level) {
        if (level > suite_bound(name, mode)) rep.warnings.push_back(bound_warning(name, level, suite_bound(name, mode), mode));
        Run run(rep, name, level, mode, options);
        fn(run);
      }
    }
  } else {
    SuiteFn fn = lookup(suite);
    check_bound(suite, n);
    Run run(rep, suite, n, mode, options);
    fn(run);
  }
  rep.seconds = since(t0);
  return rep;
}

}  // namespace gtq
