#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "gtq/generic.hpp"
#include "gtq/multirat.hpp"
#include "gtq/rat_scalar.hpp"

namespace gtq {

// e_d(y_1..y_k | a) = sum_{p_1 < ... < p_d} prod_r (y_{p_r} - a_{p_r - r + 1}); a needs k entries.
template <class T>
T gen_fact_esym(int d, const std::vector<T> &y, const std::vector<T> &a, const T &zero) {
  int k = static_cast<int>(y.size());
  if (d < 1 || d > k) throw std::out_of_range("e_d needs 1 <= d <= k");
  if (static_cast<int>(a.size()) < k) throw std::invalid_argument("shift sequence shorter than k");
  T total = zero;
  std::vector<int> p(static_cast<std::size_t>(d));
  for (int r = 0; r < d; ++r) p[static_cast<std::size_t>(r)] = r;
  while (true) {
    T prod = y[static_cast<std::size_t>(p[0])] - a[static_cast<std::size_t>(p[0])];
    for (int r = 1; r < d; ++r) {
      // 0-based: a index p_r - r
      std::size_t pr = static_cast<std::size_t>(p[static_cast<std::size_t>(r)]);
      prod = prod * (y[pr] - a[pr - static_cast<std::size_t>(r)]);
    }
    total = total + prod;
    int r = d - 1;
    while (r >= 0 && p[static_cast<std::size_t>(r)] == k - d + r) --r;
    if (r < 0) break;
    ++p[static_cast<std::size_t>(r)];
    for (int s = r + 1; s < d; ++s) p[static_cast<std::size_t>(s)] = p[static_cast<std::size_t>(s - 1)] + 1;
  }
  return total;
}

// Shift of the top row: s_{n,j} = m_{n,j} + k - j + eps, eps = 1/2 for odd n.
mpq_class top_offset(int n, int j);

// chi = (-1)^d e_d([s_1]^2..[s_k]^2 | [eps]^2, [eps+1]^2, ...), exactly k shift terms.
RatScalar casimir_eigenvalue(int n, int d, const std::vector<mpq_class> &top, Mode mode);
// i^k prod [s_r], n even.
RatScalar casimir_plus_eigenvalue(int n, const std::vector<mpq_class> &top, Mode mode);
// The same with the top row symbolic.
MultiRat casimir_eigenvalue_symbolic(int n, int d, Mode mode);
MultiRat casimir_plus_eigenvalue_symbolic(int n, Mode mode);

// Images in the row-n variables, written through b_j = z'^2 + z'^-2 (classical x'^2).
MultiRat phi_casimir(int n, int d, Mode mode);
MultiRat phi_casimir_plus(int n, Mode mode);

// Signed permutation acting on the primed row-n variables: f -> signs(perm(f)),
// perm sends z'_j to z'_{perm[j]}; signs[j] = {sigma exponent, tau exponent}.
struct WeylGroupElement {
  int n = 0;
  std::vector<std::array<int, 2>> signs;
  std::vector<int> perm;  // 0-based

  static WeylGroupElement identity(int n);
  static WeylGroupElement sigma(int n, int j);  // 1-based column
  static WeylGroupElement tau(int n, int j);
  static WeylGroupElement swap(int n, int j);   // exchanges columns j, j+1
  WeylGroupElement operator*(const WeylGroupElement &o) const;  // (this * o) f = this(o(f))
  bool operator==(const WeylGroupElement &o) const = default;
  // parity constraint for even n; classical mode ignores tau
  bool in_group(Mode mode) const;
  std::string to_string() const;
};

MultiRat weyl_act(const WeylGroupElement &w, const MultiRat &f, Mode mode);
// Every element of W_n (quantum: doubled signs).
std::vector<WeylGroupElement> weyl_group(int n, Mode mode);
// Generators: single sign flips (odd n) or pairs of them (even n), plus adjacent swaps.
std::vector<WeylGroupElement> weyl_generators(int n, Mode mode);
// Sum of w f over the whole group.
MultiRat symmetrize(int n, const MultiRat &f, Mode mode);

// Polynomial in e_1(b)..e_k(b): exponent vector of (e_1..e_k) -> coefficient in t.
using EPolynomial = std::map<std::vector<int>, MultiRat>;

struct InvariantWitness {
  int n = 0;
  Mode mode = Mode::quantum;
  EPolynomial even_part;  // all of f for odd n
  EPolynomial odd_part;   // f_odd = g * (this), even n; g = prod (z' - z'^-1) or prod x'
  MultiRat expand() const;
  std::string to_string() const;
};

class NotInvariant : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// Expresses a W_n-invariant function of row n through e_d(b); throws NotInvariant, or
// std::domain_error when f is not a Laurent polynomial in the primed variables.
InvariantWitness invariant_decompose(int n, const MultiRat &f, Mode mode);

// Invariance of every image at every level 2..n, the single-tau negation check on
// even levels, and decomposition round trips (images and `random_count` seeded invariants).
SymbolicReport verify_invariance(int n, Mode mode, std::uint64_t seed = 0, int random_count = 20);

// Random invariant of level n built by symmetrizing a random Laurent monomial.
MultiRat random_invariant(int n, Mode mode, std::mt19937_64 &rng);

}  // namespace gtq
