#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gtq/casimir.hpp"
#include "gtq/generic.hpp"
#include "gtq/modules.hpp"
#include "gtq/pattern.hpp"
#include "gtq/skew.hpp"
#include "gtq/suites.hpp"

using namespace gtq;
using nlohmann::ordered_json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

int emit(const std::string &text, const std::string &out) {
  if (out.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(out);
  if (!f) {
    std::cerr << "cannot write " << out << "\n";
    return kExitUsage;
  }
  f << text;
  return 0;
}

std::string symbolic_json(const std::string &check, const SymbolicReport &r, bool timings) {
  ordered_json j;
  j["schema"] = 1;
  j["check"] = check;
  j["n"] = r.n;
  j["mode"] = to_string(r.mode);
  j["status"] = r.passed() ? "pass" : "fail";
  j["kernel"] = {{"max_terms", r.stats.max_terms}, {"reductions", r.stats.reductions}};
  ordered_json rows = ordered_json::array();
  for (const auto &c : r.results) {
    ordered_json e;
    e["relation"] = c.id;
    e["status"] = c.zero ? "pass" : "fail";
    e["n_terms"] = c.n_terms;
    if (c.witness) e["witness"] = *c.witness;
    if (timings) e["seconds"] = c.seconds;
    rows.push_back(std::move(e));
  }
  j["results"] = std::move(rows);
  return j.dump(2) + "\n";
}

std::vector<mpq_class> to_mpq(const std::vector<HalfInt> &row) {
  std::vector<mpq_class> v;
  for (auto h : row) v.push_back(h.to_mpq());
  return v;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact and numeric verification of Gelfand-Tsetlin modules of U_q'(so_n)"};
  app.require_subcommand(1);

  int n = 3;
  std::string mode_text = "quantum";
  std::string out;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  bool timings = false, force = false;

  auto add_common = [&](CLI::App *cmd) {
    cmd->add_option("--n", n, "rank parameter n of so_n")->check(CLI::Range(2, kMaxN));
    cmd->add_option("--mode", mode_text, "quantum or classical")->check(CLI::IsMember({"quantum", "classical"}));
    cmd->add_option("--out", out, "write JSON here instead of stdout");
  };

  // run
  std::string suite = "all";
  auto *run = app.add_subcommand("run", "run a verification suite and emit a report");
  add_common(run);
  run->add_option("--suite", suite, "suite name")->check(CLI::IsMember(suite_names()));
  run->add_option("--seed", seed, "seed for randomized checks");
  run->add_option("--tol", tol, "residual tolerance of numeric suites");
  run->add_flag("--timings", timings, "include wall times (breaks byte-identical output)");
  run->add_flag("--force", force, "run past the default size bound");

  // verify generic|embedding|invariance
  auto *verify = app.add_subcommand("verify", "symbolic verification of one family of identities");
  verify->require_subcommand(1);
  std::vector<std::pair<std::string, CLI::App *>> verify_cmds;
  for (const char *what : {"generic", "embedding", "invariance"}) {
    auto *c = verify->add_subcommand(what, std::string("verify ") + what);
    add_common(c);
    c->add_option("--seed", seed, "seed for random invariants (invariance)");
    c->add_flag("--timings", timings, "include wall times");
    c->add_flag("--force", force, "run past the default size bound");
    verify_cmds.emplace_back(what, c);
  }

  // casimir eig
  auto *casimir = app.add_subcommand("casimir", "central elements");
  casimir->require_subcommand(1);
  auto *eig = casimir->add_subcommand("eig", "eigenvalue of C(2d) (or the extra element) on a module with the given top row");
  int d = 1;
  std::string top_text;
  bool plus = false;
  add_common(eig);
  eig->add_option("--d", d, "degree index, 1 <= d <= n/2");
  eig->add_option("--top", top_text, "top row, e.g. 3,1 or 3/2,1/2")->required();
  eig->add_flag("--plus", plus, "the extra central element of even n");

  // inspection helpers
  auto *basis = app.add_subcommand("basis", "list the GT patterns of a finite-dimensional module");
  add_common(basis);
  basis->add_option("--top", top_text, "top row")->required();

  auto *module = app.add_subcommand("module", "generator matrices of a finite-dimensional module");
  add_common(module);
  double q = 1.5;
  bool exact = false;
  module->add_option("--top", top_text, "top row")->required();
  module->add_option("--q", q, "numeric q (square-root coefficients)");
  module->add_flag("--exact", exact, "rescaled exact matrices over Q(t), t = q^(1/2)");

  auto *phi = app.add_subcommand("phi", "image of a generator in the skew group algebra");
  add_common(phi);
  int gen = 2;
  phi->add_option("--i", gen, "generator I_{i,i-1}")->required();

  auto *window = app.add_subcommand("window", "exact action on a finite window of a generic module");
  add_common(window);
  int radius = 1;
  window->add_option("--radius", radius, "max-norm radius of the window")->check(CLI::Range(0, 3));
  window->add_option("--top", top_text, "top row (rational entries); defaults to k, k-1, ..., 1");

  CLI11_PARSE(app, argc, argv);

  try {
    Mode mode = parse_mode(mode_text);
    if (run->parsed()) {
      SuiteOptions opt;
      opt.seed = seed;
      opt.tol = tol;
      opt.allow_over_bound = force;
      SuiteReport rep = run_suite(suite, n, mode, opt);
      for (const auto &w : rep.warnings) std::cerr << "warning: " << w << "\n";
      if (int rc = emit(rep.to_json(timings), out)) return rc;
      std::cerr << rep.suite << " n=" << n << " " << mode_text << ": " << rep.checks.size() - rep.failures() << "/"
                << rep.checks.size() << " checks pass\n";
      return rep.passed() ? 0 : kExitFail;
    }
    for (const auto &[what, cmd] : verify_cmds) {
      if (!cmd->parsed()) continue;
      int bound = suite_bound(what, mode);
      if (n > bound) {
        if (!force) {
          std::cerr << what << " at n=" << n << " exceeds the default bound " << bound << "; use --force\n";
          return kExitUsage;
        }
        std::cerr << "warning: n=" << n << " is past the default bound " << bound << "; expect a long runtime\n";
      }
      SymbolicReport r = what == "generic"     ? verify_generic_relations(n, mode)
                         : what == "embedding" ? verify_embedding(n, mode)
                                               : verify_invariance(n, mode, seed);
      if (int rc = emit(symbolic_json(what, r, timings), out)) return rc;
      return r.passed() ? 0 : kExitFail;
    }
    if (eig->parsed()) {
      auto top = to_mpq(parse_row(top_text));
      RatScalar v = plus ? casimir_plus_eigenvalue(n, top, mode) : casimir_eigenvalue(n, d, top, mode);
      ordered_json j;
      j["schema"] = 1;
      j["n"] = n;
      j["mode"] = mode_text;
      j["element"] = plus ? std::string("C+") : "C(" + std::to_string(2 * d) + ")";
      j["top"] = top_text;
      j["eigenvalue"] = v.to_string();
      return emit(j.dump(2) + "\n", out);
    }
    if (basis->parsed()) {
      ordered_json arr = ordered_json::array();
      for (const auto &p : enumerate_basis(n, parse_row(top_text))) arr.push_back(ordered_json::parse(to_json(p)));
      return emit(arr.dump() + "\n", out);
    }
    if (module->parsed()) {
      auto top = parse_row(top_text);
      return emit((exact ? matrices_to_json(build_rat_module(n, top, mode))
                         : matrices_to_json(build_sqrt_module(n, top, q, mode))) + "\n",
                  out);
    }
    if (phi->parsed()) return emit(skew_to_json(phi_generator(n, gen, mode)) + "\n", out);
    if (window->parsed()) {
      std::vector<mpq_class> top;
      if (top_text.empty())
        for (int j = 1; j <= n / 2; ++j) top.emplace_back(n / 2 - j + 1);
      else
        for (const auto &part : CLI::detail::split(top_text, ',')) top.emplace_back(part);
      for (auto &v : top) v.canonicalize();
      return emit(window_to_json(instantiate_window(prime_reciprocal_base(n, top), radius, mode)) + "\n", out);
    }
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
