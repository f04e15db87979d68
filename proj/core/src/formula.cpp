#include "gtq/formula.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace gtq {

LinearArg operator+(const LinearArg &a, const LinearArg &b) {
  LinearArg r;
  for (int i = 0; i < kSlots; ++i) r.coeff[i] = a.coeff[i] + b.coeff[i];
  r.constant = a.constant + b.constant;
  return r;
}

LinearArg operator-(const LinearArg &a, const LinearArg &b) {
  LinearArg r;
  for (int i = 0; i < kSlots; ++i) r.coeff[i] = a.coeff[i] - b.coeff[i];
  r.constant = a.constant - b.constant;
  return r;
}

LinearArg operator+(const LinearArg &a, const mpq_class &c) {
  LinearArg r = a;
  r.constant += c;
  return r;
}

LinearArg operator-(const LinearArg &a, const mpq_class &c) {
  LinearArg r = a;
  r.constant -= c;
  return r;
}

LinearArg operator*(std::int32_t k, const LinearArg &a) {
  LinearArg r;
  for (int i = 0; i < kSlots; ++i) r.coeff[i] = k * a.coeff[i];
  r.constant = a.constant * k;
  return r;
}

std::string to_string(const LinearArg &a, Mode mode) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < kSlots; ++i) {
    int c = a.coeff[i];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    int ac = c < 0 ? -c : c;
    if (ac != 1) os << ac << "*";
    // the argument of a q-number is written in the exponent variables m_ij
    std::string name = var_name(i, mode);
    if (mode == Mode::quantum && !name.empty() && name[0] == 'z') name[0] = 'm';
    os << name;
  }
  if (first) return a.constant.get_str();
  if (a.constant != 0) os << (a.constant > 0 ? " + " : " - ") << mpq_class(abs(a.constant)).get_str();
  return os.str();
}

PointView PointView::concrete(const GTPattern &p) {
  if (p.n() > kMaxN) throw std::invalid_argument("patterns with n > " + std::to_string(kMaxN) + " are not supported");
  PointView v;
  v.n_ = p.n();
  for (int r = 2; r <= p.n(); ++r)
    for (int c = 1; c <= GTPattern::row_length(r); ++c) v.val_[var_index(r, c)] = p.m(r, c).to_mpq();
  return v;
}

PointView PointView::symbolic(int n) {
  if (n < 2 || n > kMaxN) throw std::invalid_argument("symbolic points need 2 <= n <= " + std::to_string(kMaxN));
  PointView v;
  v.n_ = n;
  for (int r = 2; r <= n; ++r)
    for (int c = 1; c <= GTPattern::row_length(r); ++c) v.sym_[var_index(r, c)] = true;
  return v;
}

PointView PointView::values(int n, const std::vector<std::vector<mpq_class>> &rows) {
  if (n < 2 || n > kMaxN) throw std::invalid_argument("points need 2 <= n <= " + std::to_string(kMaxN));
  if (rows.size() != static_cast<std::size_t>(n - 1)) throw std::invalid_argument("expected one value row per pattern row");
  PointView v;
  v.n_ = n;
  for (int r = 2; r <= n; ++r) {
    const auto &row = rows[static_cast<std::size_t>(n - r)];
    if (row.size() != static_cast<std::size_t>(GTPattern::row_length(r)))
      throw std::invalid_argument("row " + std::to_string(r) + " has the wrong length");
    for (int c = 1; c <= GTPattern::row_length(r); ++c) v.val_[var_index(r, c)] = row[static_cast<std::size_t>(c - 1)];
  }
  return v;
}

LinearArg PointView::m(int row, int col) const {
  if (row < 2 || row > n_ || col < 1 || col > GTPattern::row_length(row))
    throw std::out_of_range("pattern entry (" + std::to_string(row) + "," + std::to_string(col) + ") does not exist");
  int idx = var_index(row, col);
  LinearArg a;
  if (sym_[idx]) a.coeff[idx] = 1;
  a.constant = val_[idx];
  return a;
}

PointView PointView::shifted(int row, int col, int delta) const {
  PointView r = *this;
  r.val_[var_index(row, col)] += delta;
  return r;
}

bool PointView::symbolic_at(int row, int col) const { return sym_[var_index(row, col)]; }

QFormula &QFormula::times(const QFormula &o) {
  scale *= o.scale;
  factors.insert(factors.end(), o.factors.begin(), o.factors.end());
  return *this;
}

MultiRat eval_symbolic(const QFormula &f, Mode mode) {
  Factored acc = Factored::constant(f.scale);
  for (const auto &x : f.factors) {
    if (x.kind == QKind::num_abs) throw std::invalid_argument("absolute values have no symbolic meaning");
    MultiRat v = x.kind == QKind::num ? qnum_linear(x.arg, mode) : qsum_linear(x.arg, mode);
    if (v.is_zero()) {
      if (x.power > 0) return MultiRat{};
      throw DenominatorVanishes("denominator factor [" + to_string(x.arg, mode) + "] is identically zero");
    }
    acc = acc * v.re().pow(x.power);
  }
  return MultiRat(acc);
}

ExactValue eval_exact(const QFormula &f, Mode mode, ZeroPolicy policy, int root) {
  int num_zeros = 0, den_zeros = 0;
  std::string first_zero_den;
  RatScalar acc = RatScalar::constant(mode, f.scale, root);
  for (const auto &x : f.factors) {
    if (x.arg.has_variables()) throw std::invalid_argument("exact evaluation needs concrete arguments");
    const mpq_class &a = x.arg.constant;
    RatScalar v;
    switch (x.kind) {
      case QKind::num: v = qnum(a, mode, root); break;
      case QKind::num_abs: v = qnum(mpq_class(abs(a)), mode, root); break;
      case QKind::sum:
        v = mode == Mode::classical ? RatScalar::constant(mode, 2, root)
                                    : RatScalar::q_power(mode, a, root) + RatScalar::q_power(mode, mpq_class(-a), root);
        break;
    }
    if (v.is_zero()) {
      if (x.power > 0) {
        num_zeros += x.power;
      } else {
        den_zeros -= x.power;
        if (first_zero_den.empty()) first_zero_den = to_string(x.arg, mode);
      }
      continue;
    }
    RatScalar p = x.power > 0 ? v : v.inverse();
    int k = x.power > 0 ? x.power : -x.power;
    for (int i = 0; i < k; ++i) acc = acc * p;
  }
  ExactValue out;
  if (den_zeros > 0) {
    if (policy == ZeroPolicy::order_count && num_zeros > den_zeros) {
      out.value = RatScalar::constant(mode, 0, root);
      out.resolved_zero_over_zero = true;
      return out;
    }
    throw DenominatorVanishes("denominator factor [" + first_zero_den + "] vanishes");
  }
  out.value = num_zeros > 0 ? RatScalar::constant(mode, 0, root) : acc;
  return out;
}

double eval_numeric(const QFormula &f, Mode mode, double q, ZeroPolicy policy, bool *resolved_zero_over_zero) {
  if (resolved_zero_over_zero) *resolved_zero_over_zero = false;
  double acc = f.scale.get_d();
  int num_zeros = 0, den_zeros = 0;
  std::string first_zero_den;
  for (const auto &x : f.factors) {
    if (x.arg.has_variables()) throw std::invalid_argument("numeric evaluation needs concrete arguments");
    if (x.kind != QKind::sum && x.arg.constant == 0) {
      if (x.power > 0) {
        num_zeros += x.power;
      } else {
        den_zeros -= x.power;
        if (first_zero_den.empty()) first_zero_den = to_string(x.arg, mode);
      }
      continue;
    }
    double a = x.arg.constant.get_d();
    double v = 0;
    switch (x.kind) {
      case QKind::num_abs: a = std::fabs(a); [[fallthrough]];
      case QKind::num: v = mode == Mode::classical ? a : (std::pow(q, a) - std::pow(q, -a)) / (q - 1 / q); break;
      case QKind::sum: v = mode == Mode::classical ? 2.0 : std::pow(q, a) + std::pow(q, -a); break;
    }
    acc *= std::pow(v, x.power);
  }
  if (den_zeros > 0) {
    if (policy == ZeroPolicy::order_count && num_zeros > den_zeros) {
      if (resolved_zero_over_zero) *resolved_zero_over_zero = true;
      return 0.0;
    }
    throw DenominatorVanishes("denominator factor [" + first_zero_den + "] vanishes");
  }
  return num_zeros > 0 ? 0.0 : acc;
}

namespace coeff {

namespace {

// Rows i, i-1, i-2 of the view as l-coordinates; missing rows have length 0.
struct Rows {
  const PointView &v;
  int i;
  int len(int row) const { return row >= 2 ? GTPattern::row_length(row) : 0; }
  LinearArg L(int r) const { return v.l(i, r); }
  LinearArg L1(int r) const { return v.l(i - 1, r); }
  LinearArg L2(int r) const { return v.l(i - 2, r); }
  int len2() const { return len(i - 2); }
};

void check_generator(const PointView &v, int i, int parity, int j, int jmax) {
  if (i < 2 || i > v.n()) throw std::out_of_range("generator index out of range");
  if (i % 2 != parity) throw std::invalid_argument("coefficient family does not match generator parity");
  if (j < 1 || j > jmax) throw std::out_of_range("column index out of range");
}

}  // namespace

QFormula odd_up(const PointView &v, int i, int j) {
  int p = i / 2;
  check_generator(v, i, 1, j, p);
  Rows R{v, i};
  QFormula f;
  f.half_ratio(R.L1(j)).half_ratio(R.L1(j) + 1);
  f.num(R.L(j) + R.L1(j)).num(R.L(j) - R.L1(j) - 1);
  for (int r = 1; r < j; ++r) f.num(R.L(r) + R.L1(j));
  for (int r = j + 1; r <= p; ++r) f.num(R.L1(j) + R.L(r)).num(R.L1(j) - R.L(r) + 1);
  for (int r = 1; r < j; ++r) f.den(R.L1(r) + R.L1(j)).den(R.L1(r) + R.L1(j) + 1);
  for (int r = 1; r <= j && r <= R.len2(); ++r) f.num(R.L2(r) + R.L1(j));
  for (int r = j + 1; r <= p - 1 && r <= R.len2(); ++r) f.num(R.L1(j) + R.L2(r)).num(R.L1(j) - R.L2(r) + 1);
  for (int r = j + 1; r <= p; ++r)
    f.den(R.L1(j) + R.L1(r)).den(R.L1(j) - R.L1(r)).den(R.L1(j) + R.L1(r) + 1).den(R.L1(j) - R.L1(r) + 1);
  return f;
}

QFormula odd_down(const PointView &v, int i, int j) {
  int p = i / 2;
  check_generator(v, i, 1, j, p);
  Rows R{v, i};
  QFormula f;
  if (j <= R.len2()) f.num(R.L1(j) - R.L2(j));
  for (int r = 1; r < j; ++r) {
    f.num(R.L(r) - R.L1(j)).num(R.L2(r) - R.L1(j));
    f.den(R.L1(r) - R.L1(j) + 1).den(R.L1(r) - R.L1(j));
  }
  return f;
}

QFormula even_up(const PointView &v, int i, int j) {
  int p = (i - 2) / 2;
  check_generator(v, i, 0, j, p);
  Rows R{v, i};
  QFormula f;
  f.num(R.L(j) + R.L1(j)).num(R.L(j) - R.L1(j));
  for (int r = 1; r < j; ++r) f.num(R.L(r) + R.L1(j));
  for (int r = j + 1; r <= p + 1; ++r) f.num(R.L1(j) + R.L(r)).num(R.L1(j) - R.L(r));
  for (int r = 1; r < j; ++r) f.den(R.L1(r) + R.L1(j)).den(R.L1(r) + R.L1(j) - 1);
  for (int r = 1; r <= j; ++r) f.num(R.L2(r) + R.L1(j));
  for (int r = j + 1; r <= p; ++r) f.num(R.L1(j) + R.L2(r)).num(R.L1(j) - R.L2(r));
  for (int r = j + 1; r <= p; ++r)
    f.den(R.L1(j) + R.L1(r)).den(R.L1(j) - R.L1(r)).den(R.L1(j) + R.L1(r) - 1).den(R.L1(j) - R.L1(r) + 1);
  f.den(R.L1(j), 2).den(2 * R.L1(j) + 1).den(2 * R.L1(j) - 1);
  return f;
}

QFormula even_down(const PointView &v, int i, int j) {
  int p = (i - 2) / 2;
  check_generator(v, i, 0, j, p);
  Rows R{v, i};
  QFormula f;
  f.num(R.L1(j) - R.L2(j) - 1);
  for (int r = 1; r < j; ++r) {
    f.num(R.L(r) - R.L1(j) + 1).num(R.L2(r) - R.L1(j) + 1);
    f.den(R.L1(r) - R.L1(j) + 1).den(R.L1(r) - R.L1(j));
  }
  return f;
}

QFormula even_diag(const PointView &v, int i) {
  int p = (i - 2) / 2;
  check_generator(v, i, 0, 1, 1);
  Rows R{v, i};
  QFormula f;
  for (int r = 1; r <= p + 1; ++r) f.num(R.L(r));
  for (int r = 1; r <= p; ++r) f.num(R.L2(r));
  for (int r = 1; r <= p; ++r) f.den(R.L1(r)).den(R.L1(r) - 1);
  return f;
}

QFormula odd_sqrt_squared(const PointView &v, int i, int j) {
  int p = i / 2;
  check_generator(v, i, 1, j, p);
  Rows R{v, i};
  QFormula f;
  f.half_ratio(R.L1(j)).half_ratio(R.L1(j) + 1);
  for (int r = 1; r <= j; ++r) f.num(R.L(r) + R.L1(j)).num(R.L(r) - R.L1(j) - 1);
  for (int r = j + 1; r <= p; ++r) f.num(R.L1(j) + R.L(r)).num(R.L1(j) - R.L(r) + 1);
  for (int r = 1; r < j; ++r)
    f.den(R.L1(r) + R.L1(j)).den(R.L1(r) - R.L1(j)).den(R.L1(r) + R.L1(j) + 1).den(R.L1(r) - R.L1(j) - 1);
  for (int r = 1; r <= j - 1 && r <= R.len2(); ++r) f.num(R.L2(r) + R.L1(j)).num(R.L2(r) - R.L1(j) - 1);
  for (int r = j; r <= p - 1 && r <= R.len2(); ++r) f.num(R.L1(j) + R.L2(r)).num(R.L1(j) - R.L2(r) + 1);
  for (int r = j + 1; r <= p; ++r)
    f.den(R.L1(j) + R.L1(r)).den(R.L1(j) - R.L1(r)).den(R.L1(j) + R.L1(r) + 1).den(R.L1(j) - R.L1(r) + 1);
  return f;
}

QFormula even_sqrt_squared(const PointView &v, int i, int j) {
  int p = (i - 2) / 2;
  check_generator(v, i, 0, j, p);
  Rows R{v, i};
  QFormula f;
  for (int r = 1; r <= j; ++r) f.num(R.L(r) + R.L1(j)).num(R.L(r) - R.L1(j));
  for (int r = j + 1; r <= p + 1; ++r) f.num(R.L1(j) + R.L(r)).num(R.L1(j) - R.L(r));
  for (int r = 1; r < j; ++r)
    f.den(R.L1(r) + R.L1(j)).den(R.L1(r) - R.L1(j)).den(R.L1(r) + R.L1(j) - 1).den(R.L1(r) - R.L1(j) - 1);
  for (int r = 1; r <= j - 1; ++r) f.num(R.L2(r) + R.L1(j)).num(R.L2(r) - R.L1(j));
  for (int r = j; r <= p; ++r) f.num(R.L1(j) + R.L2(r)).num(R.L1(j) - R.L2(r));
  for (int r = j + 1; r <= p; ++r)
    f.den(R.L1(j) + R.L1(r)).den(R.L1(j) - R.L1(r)).den(R.L1(j) + R.L1(r) - 1).den(R.L1(j) - R.L1(r) + 1);
  f.den(R.L1(j), 2).den(2 * R.L1(j) + 1).den(2 * R.L1(j) - 1);
  return f;
}

QFormula odd_sqrt_squared_abs(const PointView &v, int i, int j) {
  int p = i / 2;
  check_generator(v, i, 1, j, p);
  Rows R{v, i};
  QFormula f;
  f.half_ratio(R.L1(j)).half_ratio(R.L1(j) + 1);
  for (int r = 1; r <= p; ++r) f.num(R.L(r) + R.L1(j)).num_abs(R.L(r) - R.L1(j) - 1);
  for (int r = 1; r <= p - 1 && r <= R.len2(); ++r) f.num(R.L2(r) + R.L1(j)).num_abs(R.L2(r) - R.L1(j) - 1);
  for (int r = 1; r <= p; ++r) {
    if (r == j) continue;
    f.den(R.L1(r) + R.L1(j)).den_abs(R.L1(r) - R.L1(j)).den(R.L1(r) + R.L1(j) + 1).den_abs(R.L1(r) - R.L1(j) - 1);
  }
  return f;
}

QFormula even_sqrt_squared_abs(const PointView &v, int i, int j) {
  int p = (i - 2) / 2;
  check_generator(v, i, 0, j, p);
  Rows R{v, i};
  QFormula f;
  for (int r = 1; r <= p + 1; ++r) f.num(R.L(r) + R.L1(j)).num_abs(R.L(r) - R.L1(j));
  for (int r = 1; r <= p; ++r) f.num(R.L2(r) + R.L1(j)).num_abs(R.L2(r) - R.L1(j));
  for (int r = 1; r <= p; ++r) {
    if (r == j) continue;
    f.den(R.L1(r) + R.L1(j)).den_abs(R.L1(r) - R.L1(j)).den(R.L1(r) + R.L1(j) - 1).den_abs(R.L1(r) - R.L1(j) - 1);
  }
  f.den(R.L1(j), 2).den(2 * R.L1(j) + 1).den(2 * R.L1(j) - 1);
  return f;
}

QFormula rescale_step(const PointView &v, int N, int j) {
  if (N < 3 || N > v.n()) throw std::out_of_range("rescaling level out of range");
  Rows R{v, N};
  QFormula f;
  if (N % 2 == 1) {
    int p = N / 2;
    if (j < 1 || j > p) throw std::out_of_range("column index out of range");
    f.half_ratio(R.L1(j) - p + j).half_ratio(R.L1(j) + 1);
    f.num(R.L(j) + R.L1(j)).num(R.L(j) - R.L1(j) - 1);
    for (int r = j + 1; r <= p; ++r) f.num(R.L1(j) + R.L(r)).num(R.L1(j) - R.L(r) + 1);
    for (int r = j + 1; r <= p; ++r) f.den(R.L1(j) + R.L1(r) + 1).den(R.L1(j) - R.L1(r) + 1);
  } else {
    int p = (N - 2) / 2;
    if (j < 1 || j > p) throw std::out_of_range("column index out of range");
    f.half_ratio(R.L1(j) - p + j - 1);
    f.num(R.L(j) + R.L1(j)).num(R.L(j) - R.L1(j));
    for (int r = j + 1; r <= p + 1; ++r) f.num(R.L1(j) + R.L(r)).num(R.L1(j) - R.L(r));
    for (int r = j + 1; r <= p; ++r) f.den(R.L1(j) + R.L1(r)).den(R.L1(j) - R.L1(r) + 1);
    f.den(R.L1(j)).den(2 * R.L1(j) + 1);
  }
  return f;
}

QFormula closed_outer(const PointView &v, int N, int j) {
  Rows R{v, N};
  QFormula f;
  if (N % 2 == 1) {
    for (int s = 1; s < j; ++s) {
      f.num(R.L(s) + R.L1(j)).num(R.L1(s) - R.L1(j));
      f.den(R.L1(s) + R.L1(j) + 1).den(R.L(s) - R.L1(j) - 1);
    }
  } else {
    for (int s = 1; s < j; ++s) {
      f.num(R.L(s) + R.L1(j)).num(R.L1(s) - R.L1(j));
      f.den(R.L1(s) + R.L1(j)).den(R.L(s) - R.L1(j));
    }
  }
  return f.times(rescale_step(v, N, j));
}

QFormula closed_inner(const PointView &v, int N, int j) {
  if (N < 3 || N > v.n()) throw std::out_of_range("inner rescaling needs 3 <= N <= n");
  Rows R{v, N};
  QFormula f;
  if (N % 2 == 1) {
    int p = N / 2;
    if (j < 1 || j > p) throw std::out_of_range("column index out of range");
    if (j == p) {
      for (int s = 1; s <= p - 1; ++s) {
        f.num(R.L2(s) + R.L1(p)).num(R.L1(s) - R.L1(p) - 1);
        f.den(R.L1(s) + R.L1(p)).den(R.L2(s) - R.L1(p) - 1);
      }
      return f;
    }
    for (int s = 1; s < j; ++s) {
      f.num(R.L2(s) + R.L1(j)).num(R.L1(s) - R.L1(j) - 1);
      f.den(R.L1(s) + R.L1(j)).den(R.L2(s) - R.L1(j) - 1);
    }
    // [l'_j + l''_j] / ([2 l'_j][l'_j - l''_j + 1]) times [2x][l'_j]/[x], x = l'_j - p + j
    f.num(R.L1(j) + R.L2(j)).half_ratio(R.L1(j)).den(R.L1(j) - R.L2(j) + 1);
    f.double_ratio(R.L1(j) - p + j);
    for (int r = j + 1; r <= p - 1; ++r) f.num(R.L1(j) + R.L2(r)).num(R.L1(j) - R.L2(r) + 1);
    for (int r = j + 1; r <= p; ++r) f.den(R.L1(j) + R.L1(r)).den(R.L1(j) - R.L1(r));
    return f;
  }
  int p = (N - 2) / 2;
  if (j < 1 || j > p) throw std::out_of_range("column index out of range");
  for (int s = 1; s < j; ++s) {
    f.num(R.L2(s) + R.L1(j)).num(R.L1(s) - R.L1(j) - 1);
    f.den(R.L1(s) + R.L1(j) - 1).den(R.L2(s) - R.L1(j));
  }
  f.num(R.L1(j) + R.L2(j)).den(2 * R.L1(j) - 1).den(R.L1(j) - R.L2(j));
  // [2x]/([x][l'_j]), x = l'_j - p + j - 1
  f.double_ratio(R.L1(j) - p + j - 1).den(R.L1(j));
  for (int r = j + 1; r <= p; ++r) f.num(R.L1(j) + R.L2(r)).num(R.L1(j) - R.L2(r));
  for (int r = j + 1; r <= p; ++r) f.den(R.L1(j) + R.L1(r) - 1).den(R.L1(j) - R.L1(r));
  return f;
}

}  // namespace coeff

}  // namespace gtq
