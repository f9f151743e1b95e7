#pragma once

#include <cstdint>
#include <string>

#include "wsonce/checked.hpp"

namespace wsonce {

// Exact rational on checked 64-bit integers. Genus-bound comparisons must be
// exact; floating point is never used for them.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;  // always > 0, gcd(|num|, den) == 1

  static Rational of(std::int64_t n, std::int64_t d = 1) {
    if (d == 0) throw OverflowError("rational with zero denominator");
    if (d < 0) {
      n = checked_sub(0, n);
      d = checked_sub(0, d);
    }
    std::int64_t g = gcd64(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    return Rational{n, d};
  }

  Rational operator-(const Rational& o) const {
    return of(checked_sub(checked_mul(num, o.den), checked_mul(o.num, den)),
              checked_mul(den, o.den));
  }

  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }

  // a/b < c/d  <=>  a*d < c*b  (denominators positive)
  bool operator<(const Rational& o) const {
    return checked_mul(num, o.den) < checked_mul(o.num, den);
  }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator<=(const Rational& o) const { return !(o < *this); }
  bool operator>=(const Rational& o) const { return !(*this < o); }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

inline bool operator>(std::int64_t a, const Rational& r) {
  return Rational::of(a) > r;
}

}  // namespace wsonce
