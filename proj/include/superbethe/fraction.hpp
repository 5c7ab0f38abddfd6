#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace superbethe {

/// Exact rational with 64-bit numerator and denominator. Every operation
/// checks for overflow and throws Errc::arithmetic_overflow instead of
/// wrapping. Used for term coefficients, which stay small integers in
/// practice (tableau signs, determinant cofactors).
class Fraction {
 public:
  constexpr Fraction() = default;
  constexpr Fraction(std::int64_t value) : num_(value) {}  // NOLINT: implicit by design of a number type
  Fraction(std::int64_t num, std::int64_t den);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_ == 0; }

  Fraction operator-() const;
  Fraction& operator+=(const Fraction& rhs);
  Fraction& operator-=(const Fraction& rhs);
  Fraction& operator*=(const Fraction& rhs);
  Fraction& operator/=(const Fraction& rhs);

  friend Fraction operator+(Fraction a, const Fraction& b) { return a += b; }
  friend Fraction operator-(Fraction a, const Fraction& b) { return a -= b; }
  friend Fraction operator*(Fraction a, const Fraction& b) { return a *= b; }
  friend Fraction operator/(Fraction a, const Fraction& b) { return a /= b; }

  friend bool operator==(const Fraction&, const Fraction&) = default;
  friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b);

  std::string to_string() const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace superbethe
