#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "gtq/poly.hpp"

namespace gtq {

class DenominatorVanishes : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// A normalized primitive polynomial used as a factor, with its hash cached.
class FactorKey {
public:
  explicit FactorKey(Poly primitive);
  const Poly &poly() const { return *poly_; }
  std::size_t hash() const { return hash_; }
  bool operator<(const FactorKey &o) const {
    if (hash_ != o.hash_) return hash_ < o.hash_;
    return poly_->less(*o.poly_);
  }
  bool operator==(const FactorKey &o) const {
    return hash_ == o.hash_ && (poly_ == o.poly_ || *poly_ == *o.poly_);
  }

private:
  std::shared_ptr<const Poly> poly_;
  std::size_t hash_;
};

struct SumStats {
  std::size_t max_terms = 0;   // largest expanded polynomial seen in a reduction
  std::size_t reductions = 0;  // number of multi-term reductions
  void merge(const SumStats &o) {
    if (o.max_terms > max_terms) max_terms = o.max_terms;
    reductions += o.reductions;
  }
};

// Rational function over Q kept as  c * x^u * prod F_i^{e_i}  with primitive
// polynomial factors F_i and nonzero integer exponents.  Products never expand;
// sums pull out the common factor part and expand only the remainders, so the
// zero test (c == 0) is exact.
class Factored {
public:
  using FactorList = std::vector<std::pair<FactorKey, int>>;

  Factored() = default;  // zero
  static Factored constant(const mpq_class &c);
  static Factored from_poly(const Poly &p);
  static Factored from_monomial(const Monomial &m, const mpq_class &c = 1);
  static Factored from_parts(mpq_class c, Monomial unit, FactorList factors);

  bool is_zero() const { return c_ == 0; }
  bool is_one() const { return c_ == 1 && unit_.is_one() && fs_.empty(); }
  const mpq_class &coefficient() const { return c_; }
  const Monomial &unit() const { return unit_; }
  const FactorList &factors() const { return fs_; }

  Factored operator*(const Factored &o) const;
  Factored operator/(const Factored &o) const { return *this * o.inverse(); }
  Factored operator-() const;
  Factored inverse() const;
  Factored pow(int k) const;
  Factored operator+(const Factored &o) const;
  Factored operator-(const Factored &o) const { return *this + (-o); }

  static Factored sum(std::span<const Factored> terms, SumStats *stats = nullptr);

  // Exact evaluation; throws DenominatorVanishes when a denominator factor maps to 0.
  Factored substitute(const Substitution &s, Mode mode = Mode::quantum) const;

  std::array<bool, kSlots> support() const;

  // value = num / den with den a polynomial (nonnegative exponents) and
  // num possibly Laurent.
  std::pair<Poly, Poly> expand() const;

  std::string to_string(Mode mode) const;

private:
  mpq_class c_;
  Monomial unit_;
  FactorList fs_;
};

}  // namespace gtq
