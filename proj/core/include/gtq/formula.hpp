#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gtq/multirat.hpp"
#include "gtq/pattern.hpp"

namespace gtq {

LinearArg operator+(const LinearArg &a, const LinearArg &b);
LinearArg operator-(const LinearArg &a, const LinearArg &b);
LinearArg operator+(const LinearArg &a, const mpq_class &c);
LinearArg operator-(const LinearArg &a, const mpq_class &c);
LinearArg operator*(std::int32_t k, const LinearArg &a);
std::string to_string(const LinearArg &a, Mode mode);

// Pattern entries as linear forms: either a pattern variable plus a fixed shift
// (symbolic) or a plain rational value (concrete).
class PointView {
public:
  // concrete values taken from p
  static PointView concrete(const GTPattern &p);
  // rows 2..n symbolic; shift(row,col) added to every variable
  static PointView symbolic(int n);
  // rational values, rows top-down (row n first)
  static PointView values(int n, const std::vector<std::vector<mpq_class>> &rows);

  int n() const { return n_; }
  LinearArg m(int row, int col) const;
  LinearArg l(int row, int col) const { return m(row, col) + GTPattern::l_offset(row, col).to_mpq(); }
  // a view with m_{row,col} moved by delta
  PointView shifted(int row, int col, int delta) const;
  bool symbolic_at(int row, int col) const;

private:
  int n_ = 0;
  std::array<bool, kSlots> sym_{};
  std::array<mpq_class, kSlots> val_{};
};

// q-number, q-sum q^x + q^-x, or q-number of an absolute value (numeric only).
enum class QKind { num, sum, num_abs };

struct QFactor {
  QKind kind;
  LinearArg arg;
  int power;
};

// scale * prod factor^power
struct QFormula {
  mpq_class scale = 1;
  std::vector<QFactor> factors;

  QFormula &num(const LinearArg &x, int power = 1) { return add(QKind::num, x, power); }
  QFormula &den(const LinearArg &x, int power = 1) { return add(QKind::num, x, -power); }
  QFormula &num_abs(const LinearArg &x) { return add(QKind::num_abs, x, 1); }
  QFormula &den_abs(const LinearArg &x) { return add(QKind::num_abs, x, -1); }
  // [x]/[2x] = 1/(q^x + q^-x)
  QFormula &half_ratio(const LinearArg &x) { return add(QKind::sum, x, -1); }
  // [2x]/[x] = q^x + q^-x
  QFormula &double_ratio(const LinearArg &x) { return add(QKind::sum, x, 1); }
  QFormula &times(const QFormula &o);
  QFormula &add(QKind k, const LinearArg &x, int power) {
    factors.push_back(QFactor{k, x, power});
    return *this;
  }
};

// How an exact evaluation treats q-numbers that vanish.
enum class ZeroPolicy {
  strict,      // any vanishing denominator factor is an error
  order_count  // 0 when numerator zeros outnumber denominator zeros, error otherwise
};

struct ExactValue {
  RatScalar value;
  bool resolved_zero_over_zero = false;  // order_count resolved a 0/0
};

MultiRat eval_symbolic(const QFormula &f, Mode mode);
ExactValue eval_exact(const QFormula &f, Mode mode, ZeroPolicy policy = ZeroPolicy::strict, int root = 2);
// numeric value at real q > 0 (quantum) or the classical value; zero factors follow the same policy
double eval_numeric(const QFormula &f, Mode mode, double q, ZeroPolicy policy = ZeroPolicy::strict,
                    bool *resolved_zero_over_zero = nullptr);

// Coefficients of the rescaled action of I_{i,i-1}; l, l', l'' are rows i, i-1, i-2.
namespace coeff {
QFormula odd_up(const PointView &v, int i, int j);      // a^j, i = 2p+1
QFormula odd_down(const PointView &v, int i, int j);    // a-hat^j
QFormula even_up(const PointView &v, int i, int j);     // b^j, i = 2p+2
QFormula even_down(const PointView &v, int i, int j);   // b-hat^j
QFormula even_diag(const PointView &v, int i);          // c

// Squares of the original square-root coefficients.
QFormula odd_sqrt_squared(const PointView &v, int i, int j);
QFormula even_sqrt_squared(const PointView &v, int i, int j);
// Same squares written with absolute values (numeric evaluation only).
QFormula odd_sqrt_squared_abs(const PointView &v, int i, int j);
QFormula even_sqrt_squared_abs(const PointView &v, int i, int j);

// Squared rescaling step lambda_N(top, lower) / lambda_N(top, lower + e_j),
// top = row N, lower = row N-1 of the view.
QFormula rescale_step(const PointView &v, int N, int j);

// Squared closed forms for lambda ratios of a pattern and the pattern raised at (N-1, j).
// outer: lambda_N(m_N / m_{N-1}) / lambda_N(m_N / m_{N-1} + e_j)
QFormula closed_outer(const PointView &v, int N, int j);
// inner: lambda_{N-1}(m_{N-1} / m_{N-2}) / lambda_{N-1}(m_{N-1} + e_j / m_{N-2})
QFormula closed_inner(const PointView &v, int N, int j);
}  // namespace coeff

}  // namespace gtq
