#pragma once

#include <string>

#include "pcore/errors.hpp"

namespace pcore {

// Partition sizes grow like p^6/24 and the size formula has large negative
// intermediates, so all size arithmetic is done in checked 128-bit integers.
using int128 = __int128;

namespace checked {

inline int128 add(int128 a, int128 b) {
    int128 r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
    return r;
}

inline int128 sub(int128 a, int128 b) {
    int128 r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
    return r;
}

inline int128 mul(int128 a, int128 b) {
    int128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
}

// Division that must leave no remainder (used for the /24 and /96 bound
// denominators, whose divisibility is part of the contract).
inline int128 exact_div(int128 a, int128 b, const char* what) {
    if (b == 0 || a % b != 0) throw Error(std::string("inexact division in ") + what);
    return a / b;
}

}  // namespace checked

inline std::string to_string(int128 v) {
    if (v == 0) return "0";
    const bool neg = v < 0;
    std::string digits;
    // Peel digits off the absolute value without overflowing at the minimum.
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                              : static_cast<unsigned __int128>(v);
    while (u > 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) digits.push_back('-');
    return std::string(digits.rbegin(), digits.rend());
}

}  // namespace pcore
