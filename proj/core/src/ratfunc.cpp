#include "gtq/ratfunc.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace gtq {

UPoly::UPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::constant(const mpq_class &c) { return UPoly(std::vector<mpq_class>{c}); }

UPoly UPoly::monomial(int degree, const mpq_class &c) {
  std::vector<mpq_class> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int UPoly::valuation() const {
  int v = 0;
  while (v < static_cast<int>(c_.size()) && c_[static_cast<std::size_t>(v)] == 0) ++v;
  return v;
}

UPoly UPoly::operator+(const UPoly &o) const {
  std::vector<mpq_class> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return UPoly(std::move(r));
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto &x : r.c_) x = -x;
  return r;
}

UPoly UPoly::operator-(const UPoly &o) const { return *this + (-o); }

UPoly UPoly::operator*(const UPoly &o) const {
  if (is_zero() || o.is_zero()) return UPoly{};
  std::vector<mpq_class> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return UPoly(std::move(r));
}

UPoly UPoly::operator*(const mpq_class &k) const {
  if (k == 0) return UPoly{};
  UPoly r = *this;
  for (auto &x : r.c_) x *= k;
  return r;
}

UPoly UPoly::shifted_down(int k) const {
  if (k <= 0) return shifted_up(-k);
  if (k > static_cast<int>(c_.size())) return UPoly{};
  return UPoly(std::vector<mpq_class>(c_.begin() + k, c_.end()));
}

UPoly UPoly::shifted_up(int k) const {
  if (k <= 0) return k == 0 ? *this : shifted_down(-k);
  if (is_zero()) return *this;
  std::vector<mpq_class> r(static_cast<std::size_t>(k));
  r.insert(r.end(), c_.begin(), c_.end());
  return UPoly(std::move(r));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return *this * mpq_class(1 / lead());
}

void UPoly::divmod(const UPoly &d, UPoly &q, UPoly &r) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<mpq_class> rem = c_;
  int dd = d.degree();
  int nd = degree();
  if (nd < dd) {
    q = UPoly{};
    r = *this;
    return;
  }
  std::vector<mpq_class> quo(static_cast<std::size_t>(nd - dd + 1));
  mpq_class inv = 1 / d.lead();
  for (int i = nd; i >= dd; --i) {
    const mpq_class &top = rem[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    mpq_class f = top * inv;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i - dd + j)] -= f * d.c_[static_cast<std::size_t>(j)];
    quo[static_cast<std::size_t>(i - dd)] = f;
  }
  rem.resize(static_cast<std::size_t>(dd));
  q = UPoly(std::move(quo));
  r = UPoly(std::move(rem));
}

double UPoly::eval(double t) const {
  double acc = 0.0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i].get_d();
  return acc;
}

std::string UPoly::to_string(int shift) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    mpq_class c = c_[i];
    if (c == 0) continue;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    int e = static_cast<int>(i) + shift;
    if (e == 0) {
      os << c.get_str();
    } else {
      if (c != 1) os << c.get_str() << "*";
      os << "t";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

UPoly gcd(const UPoly &a, const UPoly &b) {
  UPoly x = a.monic(), y = b.monic();
  while (!y.is_zero()) {
    UPoly q, r;
    x.divmod(y, q, r);
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

RatFunc::RatFunc(const mpq_class &c) : num_(c == 0 ? UPoly{} : UPoly::constant(c)), den_(UPoly::constant(1)) {}

RatFunc RatFunc::t_power(int k) {
  RatFunc r(1);
  r.shift_ = k;
  return r;
}

RatFunc RatFunc::from_parts(int shift, UPoly num, UPoly den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  RatFunc r;
  r.shift_ = shift;
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  r.normalize();
  return r;
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    shift_ = 0;
    den_ = UPoly::constant(1);
    return;
  }
  int vn = num_.valuation();
  int vd = den_.valuation();
  if (vn) num_ = num_.shifted_down(vn);
  if (vd) den_ = den_.shifted_down(vd);
  shift_ += vn - vd;
  if (den_.degree() > 0 && num_.degree() > 0) {
    UPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
      UPoly q, r;
      num_.divmod(g, q, r);
      num_ = std::move(q);
      den_.divmod(g, q, r);
      den_ = std::move(q);
    }
  }
  mpq_class l = den_.lead();
  if (l != 1) {
    mpq_class inv = 1 / l;
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

RatFunc RatFunc::operator+(const RatFunc &o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  int s = std::min(shift_, o.shift_);
  UPoly a = num_.shifted_up(shift_ - s);
  UPoly b = o.num_.shifted_up(o.shift_ - s);
  if (den_ == o.den_) return from_parts(s, a + b, den_);
  return from_parts(s, a * o.den_ + b * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::operator-(const RatFunc &o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc &o) const {
  if (is_zero() || o.is_zero()) return RatFunc{};
  if (den_.degree() == 0 && o.den_.degree() == 0) {
    RatFunc r;
    r.shift_ = shift_ + o.shift_;
    r.num_ = num_ * o.num_;
    r.den_ = UPoly::constant(1);
    return r;
  }
  // Cross-cancel before multiplying to keep degrees small.
  UPoly g1 = (num_.degree() > 0 && o.den_.degree() > 0) ? gcd(num_, o.den_) : UPoly::constant(1);
  UPoly g2 = (o.num_.degree() > 0 && den_.degree() > 0) ? gcd(o.num_, den_) : UPoly::constant(1);
  UPoly q, rem;
  UPoly n1 = num_, d2 = o.den_, n2 = o.num_, d1 = den_;
  if (g1.degree() > 0) {
    n1.divmod(g1, q, rem);
    n1 = q;
    d2.divmod(g1, q, rem);
    d2 = q;
  }
  if (g2.degree() > 0) {
    n2.divmod(g2, q, rem);
    n2 = q;
    d1.divmod(g2, q, rem);
    d1 = q;
  }
  RatFunc r;
  r.shift_ = shift_ + o.shift_;
  r.num_ = n1 * n2;
  r.den_ = d1 * d2;
  mpq_class l = r.den_.lead();
  if (l != 1) {
    mpq_class inv = 1 / l;
    r.num_ = r.num_ * inv;
    r.den_ = r.den_ * inv;
  }
  return r;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return from_parts(-shift_, den_, num_);
}

double RatFunc::eval(double t) const {
  return std::pow(t, shift_) * num_.eval(t) / den_.eval(t);
}

std::string RatFunc::to_string() const {
  std::string n = num_.to_string(shift_);
  if (den_.degree() == 0) return n;
  return "(" + n + ")/(" + den_.to_string() + ")";
}

}  // namespace gtq
