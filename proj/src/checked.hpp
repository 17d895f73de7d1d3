#pragma once

#include <cstdint>

#include "hnn/errors.hpp"

namespace hnn::detail {

  inline std::int64_t checked_add(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_add_overflow(x, y, &r)) {
      throw OverflowError("64-bit exponent overflow in addition");
    }
    return r;
  }

  inline std::int64_t checked_sub(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_sub_overflow(x, y, &r)) {
      throw OverflowError("64-bit exponent overflow in subtraction");
    }
    return r;
  }

  inline std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_mul_overflow(x, y, &r)) {
      throw OverflowError("64-bit exponent overflow in multiplication");
    }
    return r;
  }

  inline std::int64_t checked_neg(std::int64_t x) {
    return checked_sub(0, x);
  }

  // Floor-semantics modulus; result lies in [0, |m|).
  inline std::int64_t floor_mod(std::int64_t x, std::int64_t m) {
    std::int64_t am = m < 0 ? checked_neg(m) : m;
    std::int64_t r  = x % am;
    return r < 0 ? r + am : r;
  }

}  // namespace hnn::detail
