#pragma once

#include "qprm/error.hpp"

#include <cstdint>

namespace qprm {

using Count = std::uint64_t;

inline Count checked_mul(Count a, Count b) {
    Count out = 0;
    if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorKind::Overflow, "64-bit count overflow");
    return out;
}

inline Count checked_add(Count a, Count b) {
    Count out = 0;
    if (__builtin_add_overflow(a, b, &out)) throw Error(ErrorKind::Overflow, "64-bit count overflow");
    return out;
}

inline Count ipow(Count base, int exp) {
    Count out = 1;
    for (int i = 0; i < exp; ++i) out = checked_mul(out, base);
    return out;
}

}  // namespace qprm
