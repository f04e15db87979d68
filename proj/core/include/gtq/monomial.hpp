#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>

#include "gtq/mode.hpp"

namespace gtq {

// Variable slots.  Pattern entry (row k, col i) with 2 <= k <= kMaxN owns one
// slot; the last slot is t.  The order is fixed so that values built for
// different n share one variable universe.
inline constexpr int kSlots = 14;
inline constexpr int kMaxN = 7;
inline constexpr int kTVar = kSlots - 1;

int var_index(int row, int col);
int var_row(int idx);
int var_col(int idx);
std::string var_name(int idx, Mode mode);

struct Monomial {
  std::array<std::int16_t, kSlots> e{};

  bool is_one() const {
    for (auto x : e)
      if (x != 0) return false;
    return true;
  }
  Monomial operator+(const Monomial &o) const {
    Monomial r;
    for (int i = 0; i < kSlots; ++i) r.e[i] = static_cast<std::int16_t>(e[i] + o.e[i]);
    return r;
  }
  Monomial operator-(const Monomial &o) const {
    Monomial r;
    for (int i = 0; i < kSlots; ++i) r.e[i] = static_cast<std::int16_t>(e[i] - o.e[i]);
    return r;
  }
  Monomial operator-() const {
    Monomial r;
    for (int i = 0; i < kSlots; ++i) r.e[i] = static_cast<std::int16_t>(-e[i]);
    return r;
  }
  Monomial scaled(int k) const {
    Monomial r;
    for (int i = 0; i < kSlots; ++i) r.e[i] = static_cast<std::int16_t>(e[i] * k);
    return r;
  }
  // true iff every exponent of *this is <= the matching one of o
  bool divides(const Monomial &o) const {
    for (int i = 0; i < kSlots; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }
  bool nonnegative() const {
    for (auto x : e)
      if (x < 0) return false;
    return true;
  }
  // lexicographic, slot 0 most significant
  auto operator<=>(const Monomial &o) const = default;

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : e) {
      h ^= static_cast<std::uint16_t>(x);
      h *= 1099511628211ull;
    }
    return h;
  }
  std::string to_string(Mode mode) const;
};

inline Monomial var_monomial(int idx, int power = 1) {
  Monomial m;
  m.e[idx] = static_cast<std::int16_t>(power);
  return m;
}

inline Monomial elementwise_min(const Monomial &a, const Monomial &b) {
  Monomial r;
  for (int i = 0; i < kSlots; ++i) r.e[i] = a.e[i] < b.e[i] ? a.e[i] : b.e[i];
  return r;
}

}  // namespace gtq
