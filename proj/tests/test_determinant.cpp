#include <doctest.h>

#include <random>

#include "dopt/determinant.hpp"
#include "dopt/formats.hpp"
#include "dopt/theta.hpp"
#include "support.hpp"

using dopt::ExactInt;
using dopt::SignMatrix;

TEST_CASE("small fixed determinants") {
    CHECK(dopt::determinant_exact(SignMatrix::from_rows({{1}})) == 1);
    CHECK(dopt::determinant_exact(SignMatrix::from_rows({{-1}})) == -1);
    CHECK(dopt::determinant_exact(SignMatrix::from_rows({{1, 1}, {1, -1}})) == -2);
    CHECK(dopt::determinant_exact(SignMatrix::from_rows({{1, 1}, {1, 1}})) == 0);
}

TEST_CASE("order-15 maximal determinant value") {
    const ExactInt expect = ExactInt(25515) * dopt::exact_pow2(14);
    CHECK(expect == 418037760);
    ExactInt d = dopt::determinant_exact(dopt::catalog::order15_witness_unnormalized());
    if (d < 0) d = -d;
    CHECK(d == expect);
    ExactInt dn = dopt::determinant_exact(dopt::catalog::order15_witness());
    if (dn < 0) dn = -dn;
    CHECK(dn == expect);
}

TEST_CASE("engine agrees with the cofactor oracle") {
    std::mt19937_64 rng(99);
    for (int rep = 0; rep < 200; ++rep) {
        const int n = 1 + static_cast<int>(rng() % 7);
        const SignMatrix m = testsupport::random_sign_matrix(rng, n, n);
        CHECK(dopt::determinant_exact(m) == testsupport::oracle_det(m));
    }
}

TEST_CASE("wide path agrees with block identity at order 30") {
    // order 30 goes through the 256-bit elimination path
    const SignMatrix w = dopt::catalog::order15_witness();
    const SignMatrix D = dopt::vblock(dopt::hblock(w, w), dopt::hblock(dopt::negated(w), w));
    const ExactInt det_w = dopt::determinant_exact(w);
    CHECK(dopt::determinant_exact(D) == dopt::exact_pow2(15) * det_w * det_w);
}

TEST_CASE("error paths") {
    CHECK_THROWS_AS(dopt::determinant_exact(SignMatrix(2, 3)), dopt::DimensionError);
    CHECK_THROWS_AS(dopt::determinant_exact(SignMatrix(41, 41)), dopt::OrderError);
    CHECK_NOTHROW(dopt::determinant_exact(SignMatrix(40, 40))); // rank 1, det 0
    CHECK(dopt::determinant_exact(SignMatrix(40, 40)) == 0);
}

TEST_CASE("repeated row forces zero") {
    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 20; ++rep) {
        const int n = 2 + static_cast<int>(rng() % 7);
        SignMatrix m = testsupport::random_sign_matrix(rng, n, n);
        const int src = static_cast<int>(rng() % n);
        int dst = static_cast<int>(rng() % n);
        if (dst == src) dst = (dst + 1) % n;
        for (int j = 0; j < n; ++j) m.set(dst, j, m(src, j));
        CHECK(dopt::determinant_exact(m) == 0);
    }
}
