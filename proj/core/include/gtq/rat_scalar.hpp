#pragma once

#include <complex>
#include <ostream>
#include <string>

#include "gtq/half_int.hpp"
#include "gtq/mode.hpp"
#include "gtq/ratfunc.hpp"

namespace gtq {

// Exact scalar: re + i*im with re, im in Q(t) (quantum) or Q (classical).
// `root` fixes the meaning of t as q^(1/root); the default t = q^(1/2) covers
// every half-integer exponent.
class RatScalar {
public:
  RatScalar() = default;
  RatScalar(Mode mode, RatFunc re, RatFunc im = RatFunc{}, int root = 2);
  static RatScalar constant(Mode mode, const mpq_class &c, int root = 2);
  static RatScalar imaginary_unit(Mode mode, int root = 2);
  // q^b as t^(root*b); classical mode gives 1.
  static RatScalar q_power(Mode mode, const mpq_class &b, int root = 2);

  Mode mode() const { return mode_; }
  int root() const { return root_; }
  const RatFunc &re() const { return re_; }
  const RatFunc &im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  RatScalar operator+(const RatScalar &o) const;
  RatScalar operator-(const RatScalar &o) const;
  RatScalar operator-() const;
  RatScalar operator*(const RatScalar &o) const;
  RatScalar operator/(const RatScalar &o) const { return *this * o.inverse(); }
  RatScalar inverse() const;
  RatScalar &operator+=(const RatScalar &o) { return *this = *this + o; }
  bool operator==(const RatScalar &o) const;
  bool operator!=(const RatScalar &o) const { return !(*this == o); }

  // Numeric value at the given q > 0.
  std::complex<double> eval(double q) const;
  // Canonical text: "re", "i*(im)" or "re + i*(im)".
  std::string to_string() const;

private:
  void check_compatible(const RatScalar &o) const;
  Mode mode_ = Mode::quantum;
  int root_ = 2;
  RatFunc re_, im_;
};

// [b] = (q^b - q^-b)/(q - q^-1); classical mode gives b.
inline std::ostream &operator<<(std::ostream &os, const RatScalar &s) { return os << s.to_string(); }

RatScalar qnum(HalfInt b, Mode mode);
RatScalar qnum(const mpq_class &b, Mode mode, int root = 2);

}  // namespace gtq
