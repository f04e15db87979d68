#pragma once

#include <string>
#include <vector>

#include "gtq/half_int.hpp"

namespace gtq {

// Triangular array of half-integers, rows n down to 2; row i has floor(i/2) entries.
// Any values may be stored; validity is decided by validate().
class GTPattern {
public:
  GTPattern() = default;
  // rows are given top-down (row n first)
  GTPattern(int n, std::vector<std::vector<HalfInt>> rows);
  // every row zero-filled
  static GTPattern zeros(int n);

  int n() const { return n_; }
  static int row_length(int row) { return row / 2; }
  HalfInt m(int row, int col) const { return rows_[static_cast<std::size_t>(n_ - row)][static_cast<std::size_t>(col - 1)]; }
  void set(int row, int col, HalfInt v) { rows_[static_cast<std::size_t>(n_ - row)][static_cast<std::size_t>(col - 1)] = v; }
  const std::vector<HalfInt> &row(int r) const { return rows_[static_cast<std::size_t>(n_ - r)]; }
  const std::vector<std::vector<HalfInt>> &rows() const { return rows_; }
  std::vector<HalfInt> flattened() const;

  // l_{2p,j} = m_{2p,j} + p - j, l_{2p+1,j} = m_{2p+1,j} + p - j + 1
  HalfInt l(int row, int col) const { return m(row, col) + l_offset(row, col); }
  static HalfInt l_offset(int row, int col) { return HalfInt(row / 2 - col + (row % 2)); }

  bool operator==(const GTPattern &o) const { return n_ == o.n_ && rows_ == o.rows_; }
  auto operator<=>(const GTPattern &o) const {
    if (auto c = n_ <=> o.n_; c != 0) return c;
    return flattened() <=> o.flattened();
  }
  std::string to_string() const;

private:
  int n_ = 0;
  std::vector<std::vector<HalfInt>> rows_;
};

struct Validation {
  bool valid = true;
  std::vector<std::string> violations;
};

// Interlacing and highest-weight conditions; throws std::invalid_argument on a malformed shape.
Validation validate(const GTPattern &p);
bool is_valid(const GTPattern &p);

// Highest-weight conditions on a top row alone.
Validation validate_top_row(int n, const std::vector<HalfInt> &top);

// All valid patterns with the given top row, lexicographic in the flattened rows.
std::vector<GTPattern> enumerate_basis(int n, const std::vector<HalfInt> &top);

// Same shape as the pattern, entries l_{ij}.
std::vector<std::vector<HalfInt>> l_coords(const GTPattern &p);

// m_{row,col} += direction; rows 2..n-1 only.
GTPattern shift(const GTPattern &p, int row, int col, int direction);

// JSON array of rows top-down; integers as numbers, half-odd entries as strings "3/2".
std::string to_json(const GTPattern &p);
GTPattern pattern_from_json(const std::string &text);
// Parses a comma separated row "3,1" or "3/2,1/2".
std::vector<HalfInt> parse_row(const std::string &text);

}  // namespace gtq
