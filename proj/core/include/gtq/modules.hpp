#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "gtq/formula.hpp"
#include "gtq/pattern.hpp"
#include "gtq/rat_scalar.hpp"

namespace gtq {

// Finite-dimensional module with the original square-root coefficients, evaluated at real q.
struct NumericModule {
  int n = 0;
  Mode mode = Mode::quantum;
  double q = 1.0;
  std::vector<GTPattern> basis;
  std::map<int, Eigen::MatrixXcd> gens;  // i -> matrix of I_{i,i-1}, column = input basis vector
  std::vector<std::string> diagnostics;
};

NumericModule build_sqrt_module(int n, const std::vector<HalfInt> &top, double q, Mode mode = Mode::quantum);

// relation id -> max-abs entry of the residual matrix
std::map<std::string, double> check_relations_numeric(const NumericModule &rep);

using SparseExact = std::map<std::pair<int, int>, RatScalar>;  // (row, col) -> nonzero entry

// Rescaled module with exact coefficients in Q(t) (quantum) or Q (classical), t = q^(1/2).
struct ExactModule {
  int n = 0;
  Mode mode = Mode::quantum;
  std::vector<GTPattern> basis;
  std::map<int, SparseExact> gens;
  std::vector<std::string> diagnostics;
};

ExactModule build_rat_module(int n, const std::vector<HalfInt> &top, Mode mode);

struct ExactRelationResult {
  std::string id;
  bool zero = true;
  std::optional<std::string> witness;  // first nonzero entry
};
std::vector<ExactRelationResult> check_relations_exact(const ExactModule &rep);

// Exact coefficient families at a concrete pattern.  The raised/lowered
// pattern must be valid; the diagonal resolves 0/0 by zero order (flag set).
struct RatCoeffSet {
  std::vector<std::optional<RatScalar>> up, down;  // index j-1; empty when the target is invalid
  std::optional<RatScalar> diag;                   // even rows only
  bool diag_zero_over_zero = false;
};
RatCoeffSet rat_coeffs(const GTPattern &alpha, int i, Mode mode);

// lambda_N(top = row N, lower = row N-1 of p)^2 through the telescoping recursion.
RatScalar lambda_squared(const GTPattern &p, int N, Mode mode);
double lambda_squared_numeric(const GTPattern &p, int N, Mode mode, double q);

enum class LambdaVia { recursion, closed_form };
struct LambdaRatios {
  RatScalar outer;  // (lambda_n(m_n/m_{n-1}) / lambda_n(m_n/m_{n-1}+e_j))^2
  RatScalar inner;  // (lambda_{n-1}(m_{n-1}/m_{n-2}) / lambda_{n-1}(m_{n-1}+e_j/m_{n-2}))^2
};
// Ratios for raising m_{n-1,j} of a valid pattern whose raise stays valid.
LambdaRatios lambda_ratio_squared(const GTPattern &p, int j, LambdaVia via, Mode mode);

// max |D^-1 M_sqrt D - M_rat| over all generators, D = diag(mu), mu = prod_k lambda_k.
double similarity_check(int n, const std::vector<HalfInt> &top, double q);

// Dense row-major JSON: numeric entries as [re, im], exact ones as canonical strings.
std::string matrices_to_json(const NumericModule &rep);
std::string matrices_to_json(const ExactModule &rep);

}  // namespace gtq
