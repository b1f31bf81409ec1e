#include <doctest.h>

#include <cmath>

#include "dopt/bounds.hpp"
#include "dopt/exact_int.hpp"

using dopt::BoundValue;
using dopt::DesignClass;
using dopt::ExactInt;
using dopt::WideInt;

TEST_CASE("ehlich constants follow the schedule") {
    auto e15 = dopt::ehlich_constants(15);
    CHECK(e15.s == 6);
    CHECK(e15.r == 2);
    CHECK(e15.u == 3);
    CHECK(e15.v == 3);

    auto e3 = dopt::ehlich_constants(3);
    CHECK(e3.s == 3);
    CHECK(e3.r == 1);
    CHECK(e3.v == 0);
    CHECK(e3.u == 3);

    auto e7 = dopt::ehlich_constants(7);
    CHECK(e7.s == 5);
    CHECK(e7.r == 1);
    CHECK(e7.v == 2);
    CHECK(e7.u == 3);

    auto e63 = dopt::ehlich_constants(63);
    CHECK(e63.s == 7);

    CHECK_THROWS_AS(dopt::ehlich_constants(4), dopt::ClassError);
    CHECK_THROWS_AS(dopt::ehlich_constants(1), dopt::ClassError);
}

TEST_CASE("constants are internally consistent and bracket stays in (0,1]") {
    for (int n = 3; n <= 79; n += 4) {
        const auto e = dopt::ehlich_constants(n);
        CHECK(e.u + e.v == e.s);
        CHECK(e.r * e.s + e.v == n);
        CHECK(e.u >= 0);
        CHECK(e.v >= 0);
        const double A = n - 3 + 4.0 * e.r, B = n + 1 + 4.0 * e.r;
        const double bracket = 1.0 - e.u * e.r / A - e.v * (e.r + 1) / B;
        CHECK(bracket > 0.0);
        CHECK(bracket <= 1.0);
    }
}

TEST_CASE("classical bounds at fixed orders") {
    auto check_exact = [](int n, const ExactInt& v) {
        const BoundValue b = dopt::classical_upper_bound(n);
        REQUIRE(b.exact.has_value());
        CHECK(*b.exact == v);
        CHECK(std::abs(static_cast<double>(b.approx) -
                       static_cast<double>(v.convert_to<long double>())) <=
              1e-12 * static_cast<double>(v.convert_to<long double>()));
    };
    check_exact(1, 1);
    check_exact(2, 2);
    check_exact(3, 4);
    check_exact(4, 16);
    check_exact(5, 48);       // Barba radicand 4^4 * 9 is a perfect square
    check_exact(6, 160);
    check_exact(8, 4096);
    check_exact(10, 73728);   // 18 * 8^4, the full even-case form
    check_exact(16, dopt::exact_pow2(32));

    // order 15: radicand is not a perfect square; approx only
    const BoundValue b15 = dopt::classical_upper_bound(15);
    CHECK_FALSE(b15.exact.has_value());
    CHECK(b15.residue == 3);
    CHECK(static_cast<double>(b15.approx) == doctest::Approx(430644736.79).epsilon(1e-9));
    CHECK(dopt::classical_upper_bound_squared(15) == ExactInt("185454889323724800"));

    CHECK_THROWS_AS(dopt::classical_upper_bound(0), dopt::OrderError);
    CHECK_THROWS_AS(dopt::classical_upper_bound(81), dopt::OrderError);
    CHECK_NOTHROW(dopt::classical_upper_bound(80));
}

TEST_CASE("local bounds compose from the classical bounds") {
    // g class
    auto lb = dopt::local_bound_g(16);
    REQUIRE(lb.exact.has_value());
    CHECK(*lb.exact == dopt::exact_pow2(16) * dopt::exact_pow2(64));
    CHECK(*dopt::local_bound_g(5).exact == 73728);
    CHECK(*dopt::local_bound_g(1).exact == 2);
    CHECK(*dopt::local_bound_g(15).exact ==
          dopt::exact_pow2(15) * ExactInt("185454889323724800"));

    // g1 class
    CHECK(*dopt::local_bound_g1(1).exact == 4);
    CHECK(*dopt::local_bound_g1(4).exact == 12288);
    CHECK(*dopt::local_bound_g1(5).exact == 245760);
    const BoundValue g115 = dopt::local_bound_g1(15);
    CHECK_FALSE(g115.exact.has_value());
    CHECK(static_cast<double>(g115.approx) ==
          doctest::Approx(std::ldexp(430644736.7886026 * 4294967296.0, 15)).epsilon(1e-9));

    CHECK_THROWS_AS(dopt::local_bound_g(0), dopt::OrderError);
    CHECK_THROWS_AS(dopt::local_bound_g(41), dopt::OrderError);
    CHECK_THROWS_AS(dopt::local_bound_g1(40), dopt::OrderError);
}

TEST_CASE("local bound tables, one k per residue class") {
    // k = 4 (0 mod 4): 2^k k^k and 2^k k^k sqrt(2k+1)
    CHECK(*dopt::local_bound_g(4).exact == dopt::exact_pow2(4) * ExactInt(256));
    CHECK(*dopt::local_bound_g1(4).exact == dopt::exact_pow2(4) * ExactInt(256) * 3);

    // k = 5 (1 mod 4): 2^k (k-1)^(k-1) (2k-1); g1 composes with the full
    // even-case bound at k+1 = 6
    CHECK(*dopt::local_bound_g(5).exact == dopt::exact_pow2(5) * ExactInt(256) * 9);
    CHECK(*dopt::local_bound_g1(5).exact == dopt::exact_pow2(5) * ExactInt(48) * (10 * 16));

    // k = 6 (2 mod 4): 2^k (2k-2)^2 (k-2)^(k-2); g1 composes with the
    // Ehlich bound at k+1 = 7
    CHECK(*dopt::local_bound_g(6).exact ==
          dopt::exact_pow2(6) * ExactInt(100) * ExactInt(256));
    {
        const auto e = dopt::ehlich_constants(7);
        const double A = 7 - 3 + 4.0 * e.r, B = 7 + 1 + 4.0 * e.r;
        const double radicand = std::pow(4.0, 7 - e.s) * std::pow(A, e.u) * std::pow(B, e.v) *
                                (1.0 - e.u * e.r / A - e.v * (e.r + 1) / B);
        const double expect = std::ldexp(160.0 * std::sqrt(radicand), 6);
        CHECK(static_cast<double>(dopt::local_bound_g1(6).approx) ==
              doctest::Approx(expect).epsilon(1e-9));
    }

    // k = 7 (3 mod 4): 2^k * Ehlich(7)^2 exactly
    CHECK(*dopt::local_bound_g(7).exact == dopt::exact_pow2(7) * ExactInt(344064));
    {
        const double expect = std::ldexp(std::sqrt(344064.0) * std::pow(8.0, 4), 7);
        CHECK(static_cast<double>(dopt::local_bound_g1(7).approx) ==
              doctest::Approx(expect).epsilon(1e-9));
    }
}

TEST_CASE("known global values") {
    REQUIRE(dopt::known_global_maxdet(10).has_value());
    CHECK(dopt::known_global_maxdet(10)->value == 73728);
    CHECK(dopt::known_global_maxdet(10)->proven);
    CHECK(dopt::known_global_maxdet(30)->value == ExactInt("10559428950136666980352"));
    CHECK(dopt::known_global_maxdet(31)->value == ExactInt("81562485683814255296512"));
    CHECK_FALSE(dopt::known_global_maxdet(31)->proven);
    CHECK(dopt::known_global_maxdet(32)->value == dopt::exact_pow2(80));
    CHECK_FALSE(dopt::known_global_maxdet(12).has_value());
}

TEST_CASE("efficiency reports reproduce the comparison table") {
    const ExactInt theta15 = ExactInt(25515) * dopt::exact_pow2(14);

    {
        const auto r = dopt::efficiency_report(DesignClass::g, 5, ExactInt(73728));
        CHECK(r.order == 10);
        CHECK(r.pct_local == doctest::Approx(100.0).epsilon(1e-9));
        REQUIRE(r.pct_global.has_value());
        CHECK(*r.pct_global == doctest::Approx(100.0).epsilon(1e-9));
    }
    {
        const ExactInt att = dopt::exact_pow2(15) * theta15 * theta15;
        const auto r = dopt::efficiency_report(DesignClass::g, 15, att);
        CHECK(r.order == 30);
        CHECK(r.pct_local == doctest::Approx(94.23).epsilon(1e-4));
        REQUIRE(r.pct_global.has_value());
        CHECK(*r.pct_global == doctest::Approx(54.23).epsilon(1e-4));
    }
    {
        const ExactInt att = dopt::exact_pow2(15) * theta15 * dopt::exact_pow2(32);
        const auto r = dopt::efficiency_report(DesignClass::g1, 15, att);
        CHECK(r.order == 31);
        CHECK(r.pct_local == doctest::Approx(97.07).epsilon(1e-4));
        REQUIRE(r.pct_global.has_value());
        CHECK(*r.pct_global == doctest::Approx(72.13).epsilon(1e-4));
        REQUIRE(r.ehlich.has_value());
        CHECK(r.ehlich->s == 6); // order 31 is 3 mod 4
        CHECK_FALSE(r.global->proven);
    }

    CHECK_THROWS_AS(dopt::efficiency_report(DesignClass::g, 5, ExactInt(0)), dopt::Error);
    CHECK_THROWS_AS(dopt::efficiency_report(DesignClass::gn, 2, ExactInt(1)), dopt::ClassError);
    // exceeding the bound is rejected as corrupt input
    CHECK_THROWS_AS(dopt::efficiency_report(DesignClass::g, 5, ExactInt(73729)), dopt::ClassError);
}

TEST_CASE("g1 percentage is the square root of the g percentage at k=15") {
    const ExactInt theta15 = ExactInt(25515) * dopt::exact_pow2(14);
    const auto rg = dopt::efficiency_report(DesignClass::g, 15,
                                            dopt::exact_pow2(15) * theta15 * theta15);
    const auto rg1 = dopt::efficiency_report(
        DesignClass::g1, 15, dopt::exact_pow2(15) * theta15 * dopt::exact_pow2(32));
    CHECK(rg1.pct_local == doctest::Approx(100.0 * std::sqrt(rg.pct_local / 100.0)).epsilon(1e-6));
}

TEST_CASE("percent arithmetic uses exact ratios when available") {
    BoundValue b;
    b.exact = ExactInt(3);
    b.approx = 3.0L;
    CHECK(dopt::percent_of(ExactInt(1), b) == doctest::Approx(33.333333).epsilon(1e-6));
    CHECK(dopt::percent_of(ExactInt(3), b) == 100.0);
}
