#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

namespace gtq {

// Dense univariate polynomial over Q, coefficient i belongs to t^i.
class UPoly {
public:
  UPoly() = default;
  explicit UPoly(std::vector<mpq_class> coeffs);
  static UPoly constant(const mpq_class &c);
  static UPoly monomial(int degree, const mpq_class &c = 1);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const mpq_class &coeff(int i) const { return c_[static_cast<std::size_t>(i)]; }
  const mpq_class &lead() const { return c_.back(); }
  const std::vector<mpq_class> &coeffs() const { return c_; }
  // Number of leading zero coefficients (t-adic valuation).
  int valuation() const;

  UPoly operator+(const UPoly &o) const;
  UPoly operator-(const UPoly &o) const;
  UPoly operator-() const;
  UPoly operator*(const UPoly &o) const;
  UPoly operator*(const mpq_class &k) const;
  UPoly shifted_down(int k) const;  // divide by t^k (exact)
  UPoly shifted_up(int k) const;    // multiply by t^k
  UPoly monic() const;
  void divmod(const UPoly &d, UPoly &q, UPoly &r) const;
  bool operator==(const UPoly &o) const { return c_ == o.c_; }

  double eval(double t) const;
  std::string to_string(int shift = 0) const;

private:
  void trim();
  std::vector<mpq_class> c_;
};

UPoly gcd(const UPoly &a, const UPoly &b);

// Element of Q(t) in canonical form  t^s * num / den  with num(0) != 0,
// den(0) != 0, den monic, gcd(num, den) = 1.  Zero is num = 0, s = 0, den = 1.
class RatFunc {
public:
  RatFunc() : den_(UPoly::constant(1)) {}
  RatFunc(const mpq_class &c);  // NOLINT(google-explicit-constructor)
  static RatFunc from_parts(int shift, UPoly num, UPoly den);
  static RatFunc t_power(int k);

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return shift_ == 0 && num_.degree() <= 0 && den_.degree() == 0; }
  int shift() const { return shift_; }
  const UPoly &num() const { return num_; }
  const UPoly &den() const { return den_; }

  RatFunc operator+(const RatFunc &o) const;
  RatFunc operator-(const RatFunc &o) const;
  RatFunc operator-() const;
  RatFunc operator*(const RatFunc &o) const;
  RatFunc operator/(const RatFunc &o) const { return *this * o.inverse(); }
  RatFunc inverse() const;
  bool operator==(const RatFunc &o) const {
    return shift_ == o.shift_ && num_ == o.num_ && den_ == o.den_;
  }

  double eval(double t) const;
  std::string to_string() const;

private:
  void normalize();
  int shift_ = 0;
  UPoly num_, den_;
};

}  // namespace gtq
