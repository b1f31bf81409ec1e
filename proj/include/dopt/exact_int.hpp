#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "dopt/errors.hpp"

namespace dopt {

// Exact signed integer carrying every determinant and bound value the
// library certifies. Fixed width (256 bits) with checked arithmetic: any
// overflow throws instead of wrapping. Wide enough for all determinants of
// sign matrices up to order 40 and all exact bound values up to order 80.
using ExactInt = boost::multiprecision::checked_int256_t;

// Internal headroom type for fraction-free elimination numerators and bound
// radicands, which can exceed 256 bits before their exact divisions/roots.
using WideInt = boost::multiprecision::checked_int512_t;

inline std::string to_decimal(const ExactInt& v) { return v.str(); }

inline ExactInt exact_from_decimal(const std::string& s) {
    try {
        return ExactInt(s);
    } catch (const std::exception&) {
        throw ParseError("not a decimal integer: '" + s + "'");
    }
}

inline WideInt wide_pow(WideInt base, int exp) {
    WideInt r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

inline ExactInt exact_pow2(int exp) {
    ExactInt r = 1;
    return r << exp;
}

} // namespace dopt
