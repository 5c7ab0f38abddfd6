#include "superbethe/fraction.hpp"

#include "superbethe/error.hpp"

namespace superbethe {
namespace {

[[noreturn]] void overflow() {
  throw Error(Errc::arithmetic_overflow, "term coefficient exceeds 64-bit range");
}

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t narrow(__int128 v) {
  if (v > INT64_MAX || v < -INT64_MAX) overflow();
  return static_cast<std::int64_t>(v);
}

}  // namespace

Fraction::Fraction(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(Errc::invalid_argument, "zero denominator");
  __int128 n = num;
  __int128 d = den;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const __int128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  num_ = narrow(n);
  den_ = narrow(d);
}

Fraction Fraction::operator-() const {
  Fraction r;
  r.num_ = narrow(-static_cast<__int128>(num_));
  r.den_ = den_;
  return r;
}

Fraction& Fraction::operator+=(const Fraction& rhs) {
  if (den_ == 1 && rhs.den_ == 1) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(num_, rhs.num_, &out)) overflow();
    num_ = out;
    return *this;
  }
  const __int128 n = static_cast<__int128>(num_) * rhs.den_ +
                     static_cast<__int128>(rhs.num_) * den_;
  const __int128 d = static_cast<__int128>(den_) * rhs.den_;
  const __int128 g = gcd128(n, d);
  num_ = narrow(g > 1 ? n / g : n);
  den_ = narrow(g > 1 ? d / g : d);
  return *this;
}

Fraction& Fraction::operator-=(const Fraction& rhs) { return *this += -rhs; }

Fraction& Fraction::operator*=(const Fraction& rhs) {
  if (den_ == 1 && rhs.den_ == 1) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(num_, rhs.num_, &out)) overflow();
    num_ = out;
    return *this;
  }
  const __int128 n = static_cast<__int128>(num_) * rhs.num_;
  const __int128 d = static_cast<__int128>(den_) * rhs.den_;
  const __int128 g = gcd128(n, d);
  num_ = narrow(g > 1 ? n / g : n);
  den_ = narrow(g > 1 ? d / g : d);
  return *this;
}

Fraction& Fraction::operator/=(const Fraction& rhs) {
  if (rhs.num_ == 0) throw Error(Errc::invalid_argument, "division by zero coefficient");
  return *this *= Fraction(rhs.den_, rhs.num_);
}

std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
  const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  return lhs <=> rhs;
}

std::string Fraction::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace superbethe
