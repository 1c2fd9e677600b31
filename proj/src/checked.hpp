#pragma once

#include <cstdint>

#include "errors.hpp"

namespace torelli {

using i64 = std::int64_t;

inline i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in add");
    return r;
}

inline i64 checked_sub(i64 a, i64 b) {
    i64 r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in sub");
    return r;
}

inline i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in mul");
    return r;
}

inline i64 checked_neg(i64 a) { return checked_sub(0, a); }

/// a += b*c without intermediate wrap.
inline void checked_addmul(i64& a, i64 b, i64 c) { a = checked_add(a, checked_mul(b, c)); }

} // namespace torelli
