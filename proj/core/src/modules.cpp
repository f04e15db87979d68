#include "gtq/modules.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "gtq/relations.hpp"

namespace gtq {

namespace {

std::map<GTPattern, int> index_of(const std::vector<GTPattern> &basis) {
  std::map<GTPattern, int> idx;
  for (std::size_t k = 0; k < basis.size(); ++k) idx.emplace(basis[k], static_cast<int>(k));
  return idx;
}

int find(const std::map<GTPattern, int> &idx, const GTPattern &p) {
  auto it = idx.find(p);
  return it == idx.end() ? -1 : it->second;
}

double checked_sqrt(double v, const GTPattern &where) {
  if (v < -1e-12) throw std::domain_error("negative radicand " + std::to_string(v) + " at " + where.to_string());
  return v > 0 ? std::sqrt(v) : 0.0;
}

double numeric_qtwo(Mode mode, double q) { return mode == Mode::classical ? 2.0 : q + 1.0 / q; }

}  // namespace

NumericModule build_sqrt_module(int n, const std::vector<HalfInt> &top, double q, Mode mode) {
  if (mode == Mode::quantum && (!(q > 0) || q == 1.0)) throw std::invalid_argument("numeric modules need q > 0, q != 1");
  NumericModule rep;
  rep.n = n;
  rep.mode = mode;
  rep.q = q;
  rep.basis = enumerate_basis(n, top);
  auto idx = index_of(rep.basis);
  auto dim = static_cast<Eigen::Index>(rep.basis.size());
  const std::complex<double> I(0, 1);
  for (int i = 2; i <= n; ++i) {
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(dim, dim);
    int ladder = i % 2 == 1 ? i / 2 : (i - 2) / 2;
    for (Eigen::Index col = 0; col < dim; ++col) {
      const GTPattern &alpha = rep.basis[static_cast<std::size_t>(col)];
      PointView va = PointView::concrete(alpha);
      for (int j = 1; j <= ladder; ++j) {
        int up = find(idx, shift(alpha, i - 1, j, +1));
        if (up >= 0) {
          QFormula f = i % 2 == 1 ? coeff::odd_sqrt_squared(va, i, j) : coeff::even_sqrt_squared(va, i, j);
          M(up, col) += checked_sqrt(eval_numeric(f, mode, q), alpha);
        }
        GTPattern lowered = shift(alpha, i - 1, j, -1);
        int down = find(idx, lowered);
        if (down >= 0) {
          PointView vb = PointView::concrete(lowered);
          QFormula f = i % 2 == 1 ? coeff::odd_sqrt_squared(vb, i, j) : coeff::even_sqrt_squared(vb, i, j);
          M(down, col) -= checked_sqrt(eval_numeric(f, mode, q), lowered);
        }
      }
      if (i % 2 == 0) {
        bool resolved = false;
        double c = eval_numeric(coeff::even_diag(va, i), mode, q, ZeroPolicy::order_count, &resolved);
        if (resolved)
          rep.diagnostics.push_back("diagonal coefficient of I_" + std::to_string(i) + "," + std::to_string(i - 1) +
                                    " is 0/0 at " + alpha.to_string() + "; value 0 used");
        M(col, col) += I * c;
      }
    }
    rep.gens.emplace(i, std::move(M));
  }
  return rep;
}

std::map<std::string, double> check_relations_numeric(const NumericModule &rep) {
  std::map<std::string, double> out;
  double two = numeric_qtwo(rep.mode, rep.q);
  for (const auto &rel : defining_relations(rep.n)) {
    Eigen::Index dim = rep.gens.begin()->second.rows();
    Eigen::MatrixXcd R = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto &t : rel.terms) {
      Eigen::MatrixXcd P = Eigen::MatrixXcd::Identity(dim, dim);
      for (int g : t.word) P = P * rep.gens.at(g);
      R += (static_cast<double>(t.sign) * (t.times_qtwo ? two : 1.0)) * P;
    }
    out[rel.id] = dim == 0 ? 0.0 : R.cwiseAbs().maxCoeff();
  }
  return out;
}

RatCoeffSet rat_coeffs(const GTPattern &alpha, int i, Mode mode) {
  int n = alpha.n();
  if (i < 2 || i > n) throw std::out_of_range("generator index out of range");
  RatCoeffSet out;
  PointView va = PointView::concrete(alpha);
  int ladder = i % 2 == 1 ? i / 2 : (i - 2) / 2;
  for (int j = 1; j <= ladder; ++j) {
    if (is_valid(shift(alpha, i - 1, j, +1)))
      out.up.emplace_back(eval_exact(i % 2 == 1 ? coeff::odd_up(va, i, j) : coeff::even_up(va, i, j), mode).value);
    else
      out.up.emplace_back(std::nullopt);
    if (is_valid(shift(alpha, i - 1, j, -1)))
      out.down.emplace_back(eval_exact(i % 2 == 1 ? coeff::odd_down(va, i, j) : coeff::even_down(va, i, j), mode).value);
    else
      out.down.emplace_back(std::nullopt);
  }
  if (i % 2 == 0) {
    ExactValue c = eval_exact(coeff::even_diag(va, i), mode, ZeroPolicy::order_count);
    out.diag = c.value;
    out.diag_zero_over_zero = c.resolved_zero_over_zero;
  }
  return out;
}

ExactModule build_rat_module(int n, const std::vector<HalfInt> &top, Mode mode) {
  ExactModule rep;
  rep.n = n;
  rep.mode = mode;
  rep.basis = enumerate_basis(n, top);
  auto idx = index_of(rep.basis);
  const RatScalar I = RatScalar::imaginary_unit(mode);
  for (int i = 2; i <= n; ++i) {
    SparseExact M;
    for (std::size_t col = 0; col < rep.basis.size(); ++col) {
      const GTPattern &alpha = rep.basis[col];
      RatCoeffSet cs = rat_coeffs(alpha, i, mode);
      int c = static_cast<int>(col);
      for (std::size_t j = 0; j < cs.up.size(); ++j) {
        int jj = static_cast<int>(j) + 1;
        if (cs.up[j] && !cs.up[j]->is_zero()) M[{find(idx, shift(alpha, i - 1, jj, +1)), c}] = *cs.up[j];
        if (cs.down[j] && !cs.down[j]->is_zero()) M[{find(idx, shift(alpha, i - 1, jj, -1)), c}] = -*cs.down[j];
      }
      if (cs.diag) {
        if (cs.diag_zero_over_zero)
          rep.diagnostics.push_back("diagonal coefficient of I_" + std::to_string(i) + "," + std::to_string(i - 1) +
                                    " is 0/0 at " + alpha.to_string() + "; value 0 used");
        if (!cs.diag->is_zero()) M[{c, c}] = I * *cs.diag;
      }
    }
    rep.gens.emplace(i, std::move(M));
  }
  return rep;
}

namespace {

SparseExact multiply(const SparseExact &a, const SparseExact &b) {
  std::map<int, std::vector<std::pair<int, const RatScalar *>>> rows_of_b;
  for (const auto &[rc, v] : b) rows_of_b[rc.first].emplace_back(rc.second, &v);
  SparseExact out;
  for (const auto &[rc, v] : a) {
    auto it = rows_of_b.find(rc.second);
    if (it == rows_of_b.end()) continue;
    for (const auto &[col, w] : it->second) {
      auto key = std::make_pair(rc.first, col);
      auto pos = out.find(key);
      if (pos == out.end()) out.emplace(key, v * *w);
      else pos->second = pos->second + v * *w;
    }
  }
  return out;
}

}  // namespace

std::vector<ExactRelationResult> check_relations_exact(const ExactModule &rep) {
  std::vector<ExactRelationResult> out;
  RatScalar two = qnum(HalfInt(2), rep.mode);
  for (const auto &rel : defining_relations(rep.n)) {
    SparseExact total;
    for (const auto &t : rel.terms) {
      SparseExact P = rep.gens.at(t.word.back());
      for (auto it = t.word.rbegin() + 1; it != t.word.rend(); ++it) P = multiply(rep.gens.at(*it), P);
      RatScalar k = RatScalar::constant(rep.mode, t.sign);
      if (t.times_qtwo) k = k * two;
      for (const auto &[rc, v] : P) {
        auto pos = total.find(rc);
        if (pos == total.end()) total.emplace(rc, k * v);
        else pos->second = pos->second + k * v;
      }
    }
    ExactRelationResult r;
    r.id = rel.id;
    for (const auto &[rc, v] : total)
      if (!v.is_zero()) {
        r.zero = false;
        r.witness = "entry (" + std::to_string(rc.first) + "," + std::to_string(rc.second) + ") = " + v.to_string();
        break;
      }
    out.push_back(std::move(r));
  }
  return out;
}

namespace {

template <class Value, class Step>
Value telescope(const GTPattern &p, int N, Value one, Step step) {
  Value acc = one;
  if (N < 3) return acc;
  GTPattern w = p;
  int lower = N - 1;
  for (int s = 1; s <= GTPattern::row_length(lower); ++s) {
    HalfInt target = p.m(N, s);
    if (w.m(lower, s) > target)
      throw std::invalid_argument("rescaling telescope needs m_" + std::to_string(lower) + std::to_string(s) +
                                  " <= m_" + std::to_string(N) + std::to_string(s));
    while (w.m(lower, s) < target) {
      acc = acc * step(coeff::rescale_step(PointView::concrete(w), N, s));
      w.set(lower, s, w.m(lower, s) + HalfInt(1));
    }
  }
  return acc;
}

}  // namespace

RatScalar lambda_squared(const GTPattern &p, int N, Mode mode) {
  return telescope(p, N, RatScalar::constant(mode, 1), [&](const QFormula &f) { return eval_exact(f, mode).value; });
}

double lambda_squared_numeric(const GTPattern &p, int N, Mode mode, double q) {
  return telescope(p, N, 1.0, [&](const QFormula &f) { return eval_numeric(f, mode, q); });
}

LambdaRatios lambda_ratio_squared(const GTPattern &p, int j, LambdaVia via, Mode mode) {
  int n = p.n();
  if (n < 3) throw std::invalid_argument("rescaling ratios need n >= 3");
  GTPattern raised = shift(p, n - 1, j, +1);
  if (!is_valid(p) || !is_valid(raised)) throw std::invalid_argument("pattern and its raise must both be valid");
  if (via == LambdaVia::recursion) {
    RatScalar outer = lambda_squared(p, n, mode) / lambda_squared(raised, n, mode);
    RatScalar inner = n - 1 >= 3 ? lambda_squared(p, n - 1, mode) / lambda_squared(raised, n - 1, mode)
                                 : RatScalar::constant(mode, 1);
    return {outer, inner};
  }
  PointView v = PointView::concrete(p);
  return {eval_exact(coeff::closed_outer(v, n, j), mode).value, eval_exact(coeff::closed_inner(v, n, j), mode).value};
}

double similarity_check(int n, const std::vector<HalfInt> &top, double q) {
  NumericModule num = build_sqrt_module(n, top, q, Mode::quantum);
  ExactModule ex = build_rat_module(n, top, Mode::quantum);
  std::vector<double> mu;
  for (const auto &b : num.basis) {
    double m = 1.0;
    for (int k = 3; k <= n; ++k) m *= checked_sqrt(lambda_squared_numeric(b, k, Mode::quantum, q), b);
    mu.push_back(m);
  }
  double worst = 0.0;
  auto dim = static_cast<Eigen::Index>(num.basis.size());
  for (const auto &[i, M] : num.gens) {
    Eigen::MatrixXcd R = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto &[rc, v] : ex.gens.at(i)) R(rc.first, rc.second) = v.eval(q);
    for (Eigen::Index r = 0; r < dim; ++r)
      for (Eigen::Index c = 0; c < dim; ++c) {
        std::complex<double> scaled = M(r, c) * (mu[static_cast<std::size_t>(c)] / mu[static_cast<std::size_t>(r)]);
        worst = std::max(worst, std::abs(scaled - R(r, c)));
      }
  }
  return worst;
}

namespace {

nlohmann::json basis_json(const std::vector<GTPattern> &basis) {
  nlohmann::json b = nlohmann::json::array();
  for (const auto &p : basis) b.push_back(nlohmann::json::parse(to_json(p)));
  return b;
}

}  // namespace

std::string matrices_to_json(const NumericModule &rep) {
  nlohmann::json j;
  j["n"] = rep.n;
  j["mode"] = to_string(rep.mode);
  j["q"] = rep.q;
  j["basis"] = basis_json(rep.basis);
  nlohmann::json gens = nlohmann::json::object();
  for (const auto &[i, M] : rep.gens) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index r = 0; r < M.rows(); ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (Eigen::Index c = 0; c < M.cols(); ++c) row.push_back({M(r, c).real(), M(r, c).imag()});
      rows.push_back(row);
    }
    gens[std::to_string(i)] = rows;
  }
  j["generators"] = gens;
  j["diagnostics"] = rep.diagnostics;
  return j.dump();
}

std::string matrices_to_json(const ExactModule &rep) {
  nlohmann::json j;
  j["n"] = rep.n;
  j["mode"] = to_string(rep.mode);
  j["basis"] = basis_json(rep.basis);
  nlohmann::json gens = nlohmann::json::object();
  std::size_t dim = rep.basis.size();
  for (const auto &[i, M] : rep.gens) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < dim; ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t c = 0; c < dim; ++c) {
        auto it = M.find({static_cast<int>(r), static_cast<int>(c)});
        row.push_back(it == M.end() ? std::string("0") : it->second.to_string());
      }
      rows.push_back(row);
    }
    gens[std::to_string(i)] = rows;
  }
  j["generators"] = gens;
  j["diagnostics"] = rep.diagnostics;
  return j.dump();
}

}  // namespace gtq
