#pragma once

// Test-side helpers: an independent cofactor-expansion determinant oracle
// (kept free of the elimination engine it cross-checks) and seeded random
// matrix generators.

#include <random>

#include "dopt/determinant.hpp"
#include "dopt/exact_int.hpp"
#include "dopt/sign_matrix.hpp"

namespace testsupport {

// Naive Laplace expansion along the first row. Exponential; fine up to
// order 8 in tests.
inline dopt::ExactInt oracle_det(const dopt::SignMatrix& m) {
    const int n = m.rows();
    if (n == 1) return dopt::ExactInt(m(0, 0));
    dopt::ExactInt sum = 0;
    for (int c = 0; c < n; ++c) {
        dopt::SignMatrix minor(n - 1, n - 1);
        for (int i = 1; i < n; ++i) {
            int out = 0;
            for (int j = 0; j < n; ++j) {
                if (j == c) continue;
                minor.set(i - 1, out++, m(i, j));
            }
        }
        dopt::ExactInt term = dopt::ExactInt(m(0, c)) * oracle_det(minor);
        if (c % 2) sum -= term;
        else sum += term;
    }
    return sum;
}

inline dopt::SignMatrix random_sign_matrix(std::mt19937_64& rng, int rows, int cols) {
    dopt::SignMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.set(i, j, (rng() & 1u) ? -1 : +1);
    return m;
}

// Random nonsingular order-k ±1 matrix with all-ones first column.
inline dopt::SignMatrix random_m_class(std::mt19937_64& rng, int k) {
    for (;;) {
        dopt::SignMatrix m(k, k, +1);
        for (int i = 0; i < k; ++i)
            for (int j = 1; j < k; ++j) m.set(i, j, (rng() & 1u) ? -1 : +1);
        if (dopt::determinant_exact(m) != 0) return m;
    }
}

} // namespace testsupport
