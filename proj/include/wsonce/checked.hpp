#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace wsonce {

// All arithmetic in this library is exact. Desk-scale inputs keep every
// intermediate well inside 64 bits, but an overflow must fault, never wrap.
class OverflowError : public std::overflow_error {
 public:
  explicit OverflowError(const char* op)
      : std::overflow_error(std::string("integer overflow in ") + op) {}
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("add");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("sub");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("mul");
  return r;
}

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  return std::gcd(a, b);
}

}  // namespace wsonce
