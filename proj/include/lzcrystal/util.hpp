#pragma once

#include <cstdint>
#include <stdexcept>

namespace lzc {

// All lattice coordinates, grades and coefficients are exact integers.
// Arithmetic that could plausibly grow (polynomial coefficients, matrix
// products) goes through the checked helpers; overflow throws instead of
// wrapping.
using Int = long long;

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("lzc: integer overflow (add)");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("lzc: integer overflow (sub)");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("lzc: integer overflow (mul)");
    return r;
}

}  // namespace lzc
