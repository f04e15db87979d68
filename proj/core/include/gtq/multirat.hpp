#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>

#include "gtq/factored.hpp"
#include "gtq/rat_scalar.hpp"

namespace gtq {

// re + i*im with re, im real rational functions in the shift variables and t.
class MultiRat {
public:
  MultiRat() = default;
  explicit MultiRat(Factored re, Factored im = Factored{}) : re_(std::move(re)), im_(std::move(im)) {}
  static MultiRat constant(const mpq_class &c) { return MultiRat(Factored::constant(c)); }
  static MultiRat imaginary_unit() { return MultiRat(Factored{}, Factored::constant(1)); }
  static MultiRat variable(int idx) { return MultiRat(Factored::from_monomial(var_monomial(idx))); }
  static MultiRat from_poly(const Poly &p) { return MultiRat(Factored::from_poly(p)); }
  static MultiRat from_rat_scalar(const RatScalar &s);

  const Factored &re() const { return re_; }
  const Factored &im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

  MultiRat operator+(const MultiRat &o) const;
  MultiRat operator-(const MultiRat &o) const;
  MultiRat operator-() const { return MultiRat(-re_, -im_); }
  MultiRat operator*(const MultiRat &o) const;
  MultiRat operator/(const MultiRat &o) const { return *this * o.inverse(); }
  MultiRat inverse() const;
  MultiRat pow(int k) const;
  MultiRat times_i() const { return MultiRat(-im_, re_); }

  // Sum of many values with a single reduction per real/imaginary part.
  static MultiRat sum(std::span<const MultiRat> terms, SumStats *stats = nullptr);

  MultiRat substitute(const Substitution &s, Mode mode = Mode::quantum) const {
    return MultiRat(re_.substitute(s, mode), im_.substitute(s, mode));
  }
  std::array<bool, kSlots> support() const;
  // Exact equality through the zero test of the difference.
  bool equals(const MultiRat &o) const { return (*this - o).is_zero(); }

  // Requires that no shift variable remains.
  RatScalar to_rat_scalar(Mode mode, int root = 2) const;
  std::string to_string(Mode mode) const;

private:
  Factored re_, im_;
};

// Linear combination of pattern variables plus a rational constant; stands for
// the argument of a q-number.
struct LinearArg {
  std::array<std::int32_t, kSlots> coeff{};
  mpq_class constant;
  bool has_variables() const {
    for (auto c : coeff)
      if (c != 0) return true;
    return false;
  }
};

// (q^x - q^-x)/(q - q^-1) with q^m_v read as the variable z_v; classical: x itself.
MultiRat qnum_linear(const LinearArg &x, Mode mode, int root = 2);
// q^x + q^-x; classical: 2.
MultiRat qsum_linear(const LinearArg &x, Mode mode, int root = 2);
// (q^k z_v - q^-k z_v^-1)/(q - q^-1), or x_v + k classically.
MultiRat qnum_shifted(int var, std::int64_t k, Mode mode);
// [2] = q + q^-1, or 2 classically.
MultiRat qnum_two(Mode mode);

// Substitution z_v := q^{m_v} = t^{root m_v} (quantum) or x_v := m_v (classical).
Substitution bind_values(const std::map<int, mpq_class> &values, Mode mode, int root = 2);

// Coefficients of the d-th cyclotomic polynomial, lowest degree first.
const std::vector<long> &cyclotomic(int d);

}  // namespace gtq
