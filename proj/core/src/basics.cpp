#include <charconv>
#include <sstream>
#include <stdexcept>

#include "gtq/half_int.hpp"
#include "gtq/mode.hpp"
#include "gtq/monomial.hpp"

namespace gtq {

namespace {

std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("not an integer: " + std::string(s));
  return v;
}

// Slot of the first entry of each row, rows 2..kMaxN.
constexpr int row_offset(int row) {
  int off = 0;
  for (int k = 2; k < row; ++k) off += k / 2;
  return off;
}
static_assert(row_offset(kMaxN + 1) <= kTVar, "variable slots overflow");

}  // namespace

HalfInt HalfInt::parse(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return HalfInt::from_twice(2 * parse_int(s));
  if (s.substr(slash + 1) != "2") throw std::invalid_argument("not a half-integer: " + std::string(s));
  return HalfInt::from_twice(parse_int(s.substr(0, slash)));
}

std::string HalfInt::to_string() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

Mode parse_mode(std::string_view s) {
  if (s == "quantum") return Mode::quantum;
  if (s == "classical") return Mode::classical;
  throw std::invalid_argument("unknown mode: " + std::string(s));
}

std::string to_string(Mode m) { return m == Mode::quantum ? "quantum" : "classical"; }

int var_index(int row, int col) {
  if (row < 2 || row > kMaxN || col < 1 || col > row / 2)
    throw std::out_of_range("no variable for entry (" + std::to_string(row) + "," + std::to_string(col) + ")");
  return row_offset(row) + col - 1;
}

int var_row(int idx) {
  for (int k = 2; k <= kMaxN; ++k)
    if (idx < row_offset(k + 1)) return k;
  throw std::out_of_range("slot is not a pattern variable");
}

int var_col(int idx) { return idx - row_offset(var_row(idx)) + 1; }

std::string var_name(int idx, Mode mode) {
  if (idx == kTVar) return "t";
  return std::string(mode == Mode::quantum ? "z" : "x") + std::to_string(var_row(idx)) +
         std::to_string(var_col(idx));
}

std::string Monomial::to_string(Mode mode) const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < kSlots; ++i) {
    if (e[i] == 0) continue;
    if (!first) os << "*";
    first = false;
    os << var_name(i, mode);
    if (e[i] != 1) os << "^" << e[i];
  }
  return os.str();
}

}  // namespace gtq
