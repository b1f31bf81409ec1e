#pragma once

#include "dopt/sign_matrix.hpp"

namespace dopt {

// Sylvester doubling: H(0) = [[1]], H(m) = [[H,H],[H,-H]]. Order 2^m with
// first row and column all +1. Capped at m = 5 (order 32) so every result
// stays inside the determinant engine range.
SignMatrix sylvester(int exponent);

inline constexpr int kMaxSylvesterExponent = 5;

// True iff H * H^T = n * I, computed in exact integers.
bool is_hadamard(const SignMatrix& h);

} // namespace dopt
