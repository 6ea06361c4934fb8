#pragma once

#include <cstdint>
#include <stdexcept>

namespace skein {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("int64 addition overflow");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("int64 subtraction overflow");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("int64 multiplication overflow");
    return r;
}

inline int checked_int(std::int64_t a) {
    if (a < INT32_MIN || a > INT32_MAX) throw std::overflow_error("exponent out of int range");
    return static_cast<int>(a);
}

}  // namespace skein
