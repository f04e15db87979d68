#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "gtq/monomial.hpp"

namespace gtq {

struct Term {
  Monomial m;
  mpz_class c;
};

// Sparse Laurent polynomial over Z.  Terms are kept sorted by strictly
// decreasing monomial with no zero coefficients, so equality is structural.
class Poly {
public:
  Poly() = default;
  static Poly constant(const mpz_class &c);
  static Poly monomial(const Monomial &m, const mpz_class &c = 1);
  static Poly variable(int idx) { return monomial(var_monomial(idx)); }
  // Sorts and merges an arbitrary term list.
  static Poly from_terms(std::vector<Term> terms);

  const std::vector<Term> &terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }
  const Term &lead() const { return terms_.front(); }
  const Term &trail() const { return terms_.back(); }

  Poly operator+(const Poly &o) const;
  Poly operator-(const Poly &o) const;
  Poly operator-() const;
  Poly operator*(const Poly &o) const;
  Poly operator*(const mpz_class &k) const;
  Poly &operator+=(const Poly &o) { return *this = *this + o; }
  Poly times_monomial(const Monomial &m) const;
  Poly pow(unsigned k) const;

  // Componentwise minimum exponent over all terms (zero monomial for zero).
  Monomial min_exponents() const;
  // Componentwise maximum exponent over all terms.
  Monomial max_exponents() const;
  mpz_class content() const;
  bool uses_var(int idx) const;
  std::array<bool, kSlots> support() const;

  // Exact quotient if `d` divides *this in the polynomial ring, else nullopt.
  // Both operands must have nonnegative exponents.
  std::optional<Poly> divide_exact(const Poly &d) const;

  std::size_t hash() const;
  bool operator==(const Poly &o) const;
  // Total order used for factor maps: size, then terms.
  bool less(const Poly &o) const;

  std::string to_string(Mode mode) const;

private:
  std::vector<Term> terms_;
};

// Result of bringing a polynomial into factor normal form:
// p = scale * x^shift * primitive, with primitive having nonnegative exponents,
// no monomial content, coprime integer coefficients and positive lead.
struct NormalizedPoly {
  mpz_class scale;
  Monomial shift;
  Poly primitive;
};
NormalizedPoly normalize(const Poly &p);

// Simultaneous substitution of variables by Laurent polynomials divided by a
// positive integer.  Negative powers require a monomial image with coefficient
// +-1 and denominator 1.
class Substitution {
public:
  void set(int idx, Poly image, mpz_class den = 1);
  bool touches(const Poly &p) const;
  bool active(int idx) const { return active_[idx]; }
  bool empty() const;
  // Returns (image numerator, D) with p(image) = numerator / D.
  std::pair<Poly, mpz_class> apply(const Poly &p) const;

private:
  std::array<bool, kSlots> active_{};
  std::array<Poly, kSlots> image_{};
  std::array<mpz_class, kSlots> den_{};
};

}  // namespace gtq
