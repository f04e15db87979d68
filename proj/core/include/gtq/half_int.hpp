#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace gtq {

// A number in (1/2)Z, stored as twice its value.
class HalfInt {
public:
  constexpr HalfInt() = default;
  constexpr HalfInt(int v) : twice_(2 * static_cast<std::int64_t>(v)) {}

  static constexpr HalfInt from_twice(std::int64_t tw) {
    HalfInt h;
    h.twice_ = tw;
    return h;
  }
  // Accepts "3", "-2", "3/2", "-1/2".
  static HalfInt parse(std::string_view s);

  constexpr std::int64_t twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr bool is_zero() const { return twice_ == 0; }

  constexpr HalfInt operator-() const { return from_twice(-twice_); }
  constexpr HalfInt operator+(HalfInt o) const { return from_twice(twice_ + o.twice_); }
  constexpr HalfInt operator-(HalfInt o) const { return from_twice(twice_ - o.twice_); }
  constexpr HalfInt &operator+=(HalfInt o) { twice_ += o.twice_; return *this; }
  constexpr HalfInt &operator-=(HalfInt o) { twice_ -= o.twice_; return *this; }
  constexpr HalfInt operator*(std::int64_t k) const { return from_twice(twice_ * k); }
  constexpr HalfInt abs() const { return from_twice(twice_ < 0 ? -twice_ : twice_); }

  constexpr auto operator<=>(const HalfInt &) const = default;

  mpq_class to_mpq() const {
    mpq_class r(mpz_class(static_cast<long>(twice_)), mpz_class(2));
    r.canonicalize();
    return r;
  }
  double to_double() const { return static_cast<double>(twice_) / 2.0; }
  std::string to_string() const;

private:
  std::int64_t twice_ = 0;
};

}  // namespace gtq
