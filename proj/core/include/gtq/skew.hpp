#pragma once

#include <map>
#include <string>

#include "gtq/generic.hpp"

namespace gtq {

// Elements of the free abelian group on the shift operators delta_{k,i}, 2 <= k <= n-1,
// share the ShiftVec layout; the top row has no shift operator.
using GroupElement = ShiftVec;

// Finite sum  sum_mu f_mu (x) mu  in normal form, with f_mu in the fraction field.
struct SkewElement {
  int n = 0;
  Mode mode = Mode::quantum;
  std::map<GroupElement, MultiRat> terms;  // no zero coefficients

  static SkewElement zero(int n, Mode mode);
  static SkewElement scalar(int n, Mode mode, const MultiRat &f);  // f (x) 1
  static SkewElement shift(int n, Mode mode, const GroupElement &mu);  // 1 (x) mu
  void add(const GroupElement &mu, const MultiRat &f);
  bool is_zero() const { return terms.empty(); }
  bool equals(const SkewElement &o) const;

  SkewElement operator+(const SkewElement &o) const;
  SkewElement operator-(const SkewElement &o) const;
  SkewElement scaled(const MultiRat &c) const;  // c * (sum), c on the left
};

// Action of mu on f: quantum z_{k,i} -> q^(-e) z_{k,i}, classical x_{k,i} -> x_{k,i} - e,
// where e is the exponent of delta_{k,i} in mu.
MultiRat twist(int n, const GroupElement &mu, const MultiRat &f, Mode mode);

// (f (x) mu)(g (x) nu) = f * twist(mu, g) (x) mu nu
SkewElement skew_multiply(const SkewElement &a, const SkewElement &b);

// Image of I_{i,i-1} under the embedding.
SkewElement phi_generator(int n, int i, Mode mode);

// z_{k,i}|alpha> = q^{m_{k,i}}|alpha>, delta_{k,i}|alpha> = |alpha + e_{k,i}>.
FormalVector skew_apply(const SkewElement &s, const FormalVector &v);

// Defining relations with generators replaced by their images.
SymbolicReport verify_embedding(int n, Mode mode);

// [{delta: {"k,i": exponent}, coeff: text}], group points in lexicographic order.
std::string skew_to_json(const SkewElement &s);

}  // namespace gtq
