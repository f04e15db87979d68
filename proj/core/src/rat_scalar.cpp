#include "gtq/rat_scalar.hpp"

#include <cmath>
#include <stdexcept>

namespace gtq {

namespace {

long exponent_in_t(const mpq_class &b, int root) {
  mpq_class e = b * root;
  if (e.get_den() != 1) throw std::domain_error("q^" + b.get_str() + " is not a power of t = q^(1/" + std::to_string(root) + ")");
  return e.get_num().get_si();
}

}  // namespace

RatScalar::RatScalar(Mode mode, RatFunc re, RatFunc im, int root)
    : mode_(mode), root_(root), re_(std::move(re)), im_(std::move(im)) {}

RatScalar RatScalar::constant(Mode mode, const mpq_class &c, int root) {
  return RatScalar(mode, RatFunc(c), RatFunc{}, root);
}

RatScalar RatScalar::imaginary_unit(Mode mode, int root) {
  return RatScalar(mode, RatFunc{}, RatFunc(1), root);
}

RatScalar RatScalar::q_power(Mode mode, const mpq_class &b, int root) {
  if (mode == Mode::classical) return constant(mode, 1, root);
  return RatScalar(mode, RatFunc::t_power(static_cast<int>(exponent_in_t(b, root))), RatFunc{}, root);
}

void RatScalar::check_compatible(const RatScalar &o) const {
  if (mode_ != o.mode_) throw std::invalid_argument("mixing quantum and classical scalars");
  if (mode_ == Mode::quantum && root_ != o.root_) throw std::invalid_argument("mixing scalars over different roots of q");
}

RatScalar RatScalar::operator+(const RatScalar &o) const {
  check_compatible(o);
  return RatScalar(mode_, re_ + o.re_, im_ + o.im_, root_);
}

RatScalar RatScalar::operator-(const RatScalar &o) const {
  check_compatible(o);
  return RatScalar(mode_, re_ - o.re_, im_ - o.im_, root_);
}

RatScalar RatScalar::operator-() const { return RatScalar(mode_, -re_, -im_, root_); }

RatScalar RatScalar::operator*(const RatScalar &o) const {
  check_compatible(o);
  if (im_.is_zero() && o.im_.is_zero()) return RatScalar(mode_, re_ * o.re_, RatFunc{}, root_);
  if (re_.is_zero() && o.re_.is_zero()) return RatScalar(mode_, -(im_ * o.im_), RatFunc{}, root_);
  return RatScalar(mode_, re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_, root_);
}

RatScalar RatScalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero scalar");
  if (im_.is_zero()) return RatScalar(mode_, re_.inverse(), RatFunc{}, root_);
  if (re_.is_zero()) return RatScalar(mode_, RatFunc{}, -im_.inverse(), root_);
  RatFunc n = re_ * re_ + im_ * im_;
  RatFunc inv = n.inverse();
  return RatScalar(mode_, re_ * inv, -(im_ * inv), root_);
}

bool RatScalar::operator==(const RatScalar &o) const {
  return mode_ == o.mode_ && (mode_ == Mode::classical || root_ == o.root_) && re_ == o.re_ && im_ == o.im_;
}

std::complex<double> RatScalar::eval(double q) const {
  double t = mode_ == Mode::quantum ? std::pow(q, 1.0 / root_) : 1.0;
  return {re_.eval(t), im_.eval(t)};
}

std::string RatScalar::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  std::string im = "i*(" + im_.to_string() + ")";
  if (re_.is_zero()) return im;
  return re_.to_string() + " + " + im;
}

RatScalar qnum(const mpq_class &b, Mode mode, int root) {
  if (mode == Mode::classical) return RatScalar::constant(mode, b, root);
  if (b == 0) return RatScalar::constant(mode, 0, root);
  long k = exponent_in_t(b, root);
  bool neg = k < 0;
  if (neg) k = -k;
  // (t^k - t^-k)/(t^root - t^-root) = t^(root-k) (t^(2k) - 1)/(t^(2 root) - 1)
  UPoly num = UPoly::monomial(static_cast<int>(2 * k)) - UPoly::constant(1);
  UPoly den = UPoly::monomial(2 * root) - UPoly::constant(1);
  RatFunc v = RatFunc::from_parts(root - static_cast<int>(k), num, den);
  return RatScalar(mode, neg ? -v : v, RatFunc{}, root);
}

RatScalar qnum(HalfInt b, Mode mode) { return qnum(b.to_mpq(), mode, 2); }

}  // namespace gtq
