#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "gtq/factored.hpp"
#include "gtq/formula.hpp"
#include "gtq/multirat.hpp"
#include "gtq/rat_scalar.hpp"

namespace gtq {

// Integer shift of the entries below the top row.  Key order: rows n-1 down
// to 2, columns left to right inside a row.
using ShiftVec = std::vector<int>;

int shift_dim(int n);  // N = sum_{i=2}^{n-1} floor(i/2)
std::vector<std::pair<int, int>> shift_entries(int n);
int shift_position(int n, int row, int col);
ShiftVec unit_shift(int n, int row, int col, int direction);
ShiftVec operator+(const ShiftVec &a, const ShiftVec &b);
std::string to_string(const ShiftVec &a);

// Finite combination of formal basis vectors |alpha0 + a>.
struct FormalVector {
  int n = 0;
  std::map<ShiftVec, MultiRat> terms;  // no zero coefficients

  static FormalVector base(int n);  // |alpha0>
  void add(const ShiftVec &a, const MultiRat &c);
  bool equals(const FormalVector &o) const;
};

// One summand of I_{i,i-1}|alpha>: coefficient times |alpha + direction * e_(row,col)>.
// direction 0 is the diagonal term.
struct ActionTerm {
  int row = 0, col = 0, direction = 0;
  MultiRat coeff;
};
// Coefficients at the point v (any mix of symbolic and concrete entries).
std::vector<ActionTerm> action_terms(const PointView &v, int i, Mode mode);

// I_{i,i-1} on a formal vector, with symbolic base and top row.
FormalVector generic_action(int n, int i, const FormalVector &v, Mode mode);

struct RelationCheck {
  std::string id;
  bool zero = true;
  std::size_t n_terms = 0;  // summands before reduction
  std::optional<std::string> witness;
  double seconds = 0;  // wall time, never serialized by default
};

struct SymbolicReport {
  int n = 0;
  Mode mode = Mode::quantum;
  std::vector<RelationCheck> results;
  SumStats stats;
  bool passed() const;
};

// Every defining relation applied to |alpha0> with a fully symbolic pattern.
SymbolicReport verify_generic_relations(int n, Mode mode);

// Rational base point: top row and every lower entry.
struct AdmissibleBase {
  int n = 0;
  std::vector<mpq_class> top;
  std::map<std::pair<int, int>, mpq_class> base;  // (row, col), 2 <= row <= n-1
  int N() const { return shift_dim(n); }
  mpq_class at(int row, int col) const;
};

// Lower entries 1/p with distinct odd primes p, row-major from row n-1.
AdmissibleBase prime_reciprocal_base(int n, const std::vector<mpq_class> &top);
AdmissibleBase integer_base(int n, const std::vector<mpq_class> &top);

struct Admissibility {
  bool admissible = true;
  std::vector<std::string> violations;
};
// Decided for every integer shift at once; the conditions are the same in both modes.
Admissibility check_admissible(const AdmissibleBase &b);

struct WindowEntry {
  ShiftVec from;
  int generator = 0;
  ShiftVec to;
  RatScalar value;
  bool leaves_window = false;
};

struct WindowTable {
  int n = 0;
  Mode mode = Mode::quantum;
  int root = 2;  // t = q^(1/root)
  int radius = 0;
  std::vector<ShiftVec> points;
  std::vector<WindowEntry> entries;
};

// Exact action on all points with max-norm <= radius; throws std::invalid_argument
// for an inadmissible base and DenominatorVanishes if a denominator still vanishes.
WindowTable instantiate_window(const AdmissibleBase &b, int radius, Mode mode);
std::string window_to_json(const WindowTable &w);

}  // namespace gtq
