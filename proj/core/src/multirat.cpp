#include "gtq/multirat.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

namespace gtq {

const std::vector<long> &cyclotomic(int d) {
  if (d < 1) throw std::invalid_argument("cyclotomic index must be positive");
  thread_local std::map<int, std::vector<long>> cache;
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  // x^d - 1 divided by every Phi_e with e a proper divisor of d.
  std::vector<long> p(static_cast<std::size_t>(d) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(d)] = 1;
  for (int e = 1; e < d; ++e) {
    if (d % e != 0) continue;
    const std::vector<long> divisor = cyclotomic(e);  // copy: cache may rehash
    int dd = static_cast<int>(divisor.size()) - 1;
    int nd = static_cast<int>(p.size()) - 1;
    std::vector<long> q(static_cast<std::size_t>(nd - dd + 1), 0);
    for (int i = nd; i >= dd; --i) {
      long f = p[static_cast<std::size_t>(i)];
      if (f == 0) continue;
      q[static_cast<std::size_t>(i - dd)] = f;
      for (int j = 0; j <= dd; ++j) p[static_cast<std::size_t>(i - dd + j)] -= f * divisor[static_cast<std::size_t>(j)];
    }
    p = std::move(q);
  }
  return cache.emplace(d, std::move(p)).first->second;
}

namespace {

// Phi_d evaluated at the Laurent monomial w.
Poly cyclotomic_at(int d, const Monomial &w) {
  const auto &c = cyclotomic(d);
  std::vector<Term> terms;
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c[k] != 0) terms.push_back(Term{w.scaled(static_cast<int>(k)), mpz_class(c[k])});
  return Poly::from_terms(std::move(terms));
}

// Exponent vector of q^x in the variables z_v and t = q^(1/root).
Monomial q_power_monomial(const LinearArg &x, int root) {
  Monomial W;
  for (int i = 0; i < kSlots; ++i) {
    if (i == kTVar) continue;
    W.e[i] = static_cast<std::int16_t>(x.coeff[i]);
  }
  mpq_class te = x.constant * root;
  if (te.get_den() != 1) throw std::domain_error("q-number argument is not a multiple of 1/" + std::to_string(root));
  W.e[kTVar] = static_cast<std::int16_t>(te.get_num().get_si());
  return W;
}

// W = w^g with w primitive and first nonzero exponent positive; returns sign of g.
int primitive_root(const Monomial &W, Monomial &w, int &g) {
  g = 0;
  for (auto e : W.e) g = std::gcd(g, static_cast<int>(e < 0 ? -e : e));
  int sign = 1;
  for (auto e : W.e)
    if (e != 0) {
      sign = e > 0 ? 1 : -1;
      break;
    }
  for (int i = 0; i < kSlots; ++i) w.e[i] = static_cast<std::int16_t>(sign * W.e[i] / g);
  return sign;
}

// w^(2g) - 1  (plus = false) or  w^(2g) + 1  (plus = true) as a product of cyclotomic factors.
Factored binomial_product(const Monomial &w, int g, bool plus) {
  Factored r = Factored::constant(1);
  for (int d = 1; d <= 4 * g; ++d) {
    bool use = plus ? ((4 * g) % d == 0 && (2 * g) % d != 0) : ((2 * g) % d == 0);
    if (use) r = r * Factored::from_poly(cyclotomic_at(d, w));
  }
  return r;
}

Factored q_minus_qinv(int root) {
  // t^root - t^-root = t^-root (t^(2 root) - 1)
  Monomial t = var_monomial(kTVar);
  return Factored::from_monomial(var_monomial(kTVar, -root)) * binomial_product(t, root, false);
}

Poly linear_poly(const LinearArg &x, mpz_class &den) {
  den = x.constant.get_den();
  std::vector<Term> terms;
  for (int i = 0; i < kSlots; ++i)
    if (x.coeff[i] != 0) terms.push_back(Term{var_monomial(i), mpz_class(x.coeff[i]) * den});
  terms.push_back(Term{Monomial{}, x.constant.get_num()});
  return Poly::from_terms(std::move(terms));
}

}  // namespace

MultiRat qnum_linear(const LinearArg &x, Mode mode, int root) {
  if (mode == Mode::classical) {
    mpz_class den;
    Poly p = linear_poly(x, den);
    mpq_class inv(1, den);
    inv.canonicalize();
    return MultiRat(Factored::from_poly(p) * Factored::constant(inv));
  }
  Monomial W = q_power_monomial(x, root);
  if (W.is_one()) return MultiRat{};
  Monomial w;
  int g = 0;
  int sign = primitive_root(W, w, g);
  // W - W^-1 = W^-1 (W^2 - 1); for W = w^-g: W^2 - 1 = -w^(-2g) (w^(2g) - 1).
  Factored num = Factored::from_monomial(-W) * binomial_product(w, g, false);
  if (sign < 0) num = num * Factored::from_monomial(w.scaled(-2 * g), -1);
  return MultiRat(num / q_minus_qinv(root));
}

MultiRat qsum_linear(const LinearArg &x, Mode mode, int root) {
  if (mode == Mode::classical) return MultiRat::constant(2);
  Monomial W = q_power_monomial(x, root);
  if (W.is_one()) return MultiRat::constant(2);
  Monomial w;
  int g = 0;
  int sign = primitive_root(W, w, g);
  Factored r = Factored::from_monomial(-W) * binomial_product(w, g, true);
  if (sign < 0) r = r * Factored::from_monomial(w.scaled(-2 * g));
  return MultiRat(r);
}

MultiRat qnum_shifted(int var, std::int64_t k, Mode mode) {
  if (var < 0 || var >= kTVar) throw std::out_of_range("undeclared shift variable");
  LinearArg x;
  x.coeff[var] = 1;
  x.constant = mpq_class(static_cast<long>(k));
  return qnum_linear(x, mode);
}

MultiRat qnum_two(Mode mode) {
  LinearArg x;
  x.constant = 2;
  return qnum_linear(x, mode);
}

Substitution bind_values(const std::map<int, mpq_class> &values, Mode mode, int root) {
  Substitution s;
  for (const auto &[var, m] : values) {
    if (mode == Mode::quantum) {
      mpq_class te = m * root;
      if (te.get_den() != 1) throw std::domain_error("value is not a multiple of 1/" + std::to_string(root));
      s.set(var, Poly::monomial(var_monomial(kTVar, static_cast<int>(te.get_num().get_si()))));
    } else {
      s.set(var, Poly::constant(m.get_num()), m.get_den());
    }
  }
  return s;
}

MultiRat MultiRat::operator+(const MultiRat &o) const { return MultiRat(re_ + o.re_, im_ + o.im_); }
MultiRat MultiRat::operator-(const MultiRat &o) const { return MultiRat(re_ - o.re_, im_ - o.im_); }

MultiRat MultiRat::operator*(const MultiRat &o) const {
  if (im_.is_zero() && o.im_.is_zero()) return MultiRat(re_ * o.re_);
  if (re_.is_zero() && o.re_.is_zero()) return MultiRat(-(im_ * o.im_));
  if (im_.is_zero()) return MultiRat(re_ * o.re_, re_ * o.im_);
  if (re_.is_zero()) return MultiRat(-(im_ * o.im_), im_ * o.re_);
  if (o.im_.is_zero()) return MultiRat(re_ * o.re_, im_ * o.re_);
  if (o.re_.is_zero()) return MultiRat(-(im_ * o.im_), re_ * o.im_);
  return MultiRat(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
}

MultiRat MultiRat::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (im_.is_zero()) return MultiRat(re_.inverse());
  if (re_.is_zero()) return MultiRat(Factored{}, -im_.inverse());
  Factored n = re_ * re_ + im_ * im_;
  Factored inv = n.inverse();
  return MultiRat(re_ * inv, -(im_ * inv));
}

MultiRat MultiRat::pow(int k) const {
  if (im_.is_zero()) return MultiRat(re_.pow(k));
  if (k < 0) return inverse().pow(-k);
  MultiRat r = constant(1);
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

MultiRat MultiRat::sum(std::span<const MultiRat> terms, SumStats *stats) {
  std::vector<Factored> re, im;
  re.reserve(terms.size());
  for (const auto &t : terms) {
    if (!t.re_.is_zero()) re.push_back(t.re_);
    if (!t.im_.is_zero()) im.push_back(t.im_);
  }
  return MultiRat(Factored::sum(re, stats), Factored::sum(im, stats));
}

std::array<bool, kSlots> MultiRat::support() const {
  auto a = re_.support();
  auto b = im_.support();
  for (int i = 0; i < kSlots; ++i) a[i] = a[i] || b[i];
  return a;
}

namespace {

UPoly to_upoly(const Poly &p, int shift) {
  std::vector<mpq_class> c;
  for (const auto &t : p.terms()) {
    int e = t.m.e[kTVar] - shift;
    if (e >= static_cast<int>(c.size())) c.resize(static_cast<std::size_t>(e) + 1);
    c[static_cast<std::size_t>(e)] = mpq_class(t.c);
  }
  return UPoly(std::move(c));
}

RatFunc factored_to_ratfunc(const Factored &f) {
  if (f.is_zero()) return RatFunc{};
  auto sup = f.support();
  for (int i = 0; i < kSlots; ++i)
    if (sup[i] && i != kTVar) throw std::domain_error("value still depends on " + var_name(i, Mode::quantum));
  auto [num, den] = f.expand();
  int ns = num.min_exponents().e[kTVar];
  int ds = den.min_exponents().e[kTVar];
  return RatFunc::from_parts(ns - ds, to_upoly(num, ns), to_upoly(den, ds));
}

Factored ratfunc_to_factored(const RatFunc &r) {
  if (r.is_zero()) return Factored{};
  auto to_poly = [](const UPoly &u, mpz_class &den) {
    den = 1;
    for (const auto &c : u.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Term> ts;
    for (int i = 0; i <= u.degree(); ++i) {
      const mpq_class &c = u.coeff(i);
      if (c == 0) continue;
      ts.push_back(Term{var_monomial(kTVar, i), c.get_num() * (den / c.get_den())});
    }
    return Poly::from_terms(std::move(ts));
  };
  mpz_class dn, dd;
  Poly n = to_poly(r.num(), dn);
  Poly d = to_poly(r.den(), dd);
  mpq_class scale(dd, dn);
  scale.canonicalize();
  return Factored::from_monomial(var_monomial(kTVar, r.shift()), scale) * Factored::from_poly(n) /
         Factored::from_poly(d);
}

}  // namespace

RatScalar MultiRat::to_rat_scalar(Mode mode, int root) const {
  return RatScalar(mode, factored_to_ratfunc(re_), factored_to_ratfunc(im_), root);
}

MultiRat MultiRat::from_rat_scalar(const RatScalar &s) {
  return MultiRat(ratfunc_to_factored(s.re()), ratfunc_to_factored(s.im()));
}

std::string MultiRat::to_string(Mode mode) const {
  if (im_.is_zero()) return re_.to_string(mode);
  std::string im = "i*(" + im_.to_string(mode) + ")";
  if (re_.is_zero()) return im;
  return re_.to_string(mode) + " + " + im;
}

}  // namespace gtq
