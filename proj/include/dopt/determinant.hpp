#pragma once

#include <cstdint>

#include "dopt/exact_int.hpp"
#include "dopt/sign_matrix.hpp"

namespace dopt {

// Largest order the exact determinant engine accepts. The Hadamard bound
// n^(n/2) keeps every determinant of a ±1 matrix of order <= 40 well inside
// 256 bits, and all elimination intermediates inside 512 bits.
inline constexpr int kMaxDetOrder = 40;

// Exact determinant by fraction-free (Bareiss) elimination over checked
// integers. No rounding anywhere; overflow is detected and thrown, never
// wrapped. Throws DimensionError (non-square), OrderError (order > 40),
// OverflowError.
ExactInt determinant_exact(const SignMatrix& m);

namespace detail {

// Fraction-free elimination over plain int64 for ±1 matrices of order <= 16,
// where the worst-case intermediate product (n-1)^(n-1) stays below 2^63.
// Shared by the search kernels; result is identical to the wide engine.
std::int64_t det_rowmajor_i64(const std::int8_t* a, int n);

inline constexpr int kSmallDetMaxOrder = 16;

} // namespace detail

} // namespace dopt
