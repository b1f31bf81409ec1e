#pragma once

#include <optional>
#include <string>

#include "dopt/design_class.hpp"
#include "dopt/exact_int.hpp"

namespace dopt {

// Block parameters of the n = 3 (mod 4) determinant bound:
// s per the schedule (3 for n=3, 5 for n=7, 6 for 11..59, 7 for n>=63),
// r = floor(n/s), v = n - r*s, u = s - v.
struct EhlichConstants {
    int s;
    int r;
    int u;
    int v;
};

EhlichConstants ehlich_constants(int n); // ClassError unless n = 3 (mod 4)

// A determinant upper bound. `exact` is present whenever the bound value is
// an integer (n = 0 or 2 mod 4 always; root cases when the radicand is a
// perfect square; squared local bounds). `approx` is evaluated in extended
// precision and agrees with `exact` when both exist.
struct BoundValue {
    std::optional<ExactInt> exact;
    long double approx = 0;
    int residue = 0; // governing order mod 4
};

// Largest order the bound formulas are evaluated at; covers the orders of
// all designs the library constructs (2k and 2k+1 for k <= 40).
inline constexpr int kMaxBoundOrder = 80;

// The classical maximal-determinant upper bound over ±1 matrices of order n:
//   n = 0 mod 4 (and n = 1, 2):  n^(n/2)
//   n = 2 mod 4:                 (2n-2) * (n-2)^((n-2)/2)
//   n = 1 mod 4:                 sqrt((n-1)^(n-1) * (2n-1))
//   n = 3 mod 4:                 sqrt((n-3)^(n-s) * A^u * B^v * (1 - ur/A - v(r+1)/B))
//                                with A = n-3+4r, B = n+1+4r
BoundValue classical_upper_bound(int n);

// Exact integer square of the classical bound (all four residues yield an
// integer square). Valid for n <= 46; larger squares exceed 256 bits.
ExactInt classical_upper_bound_squared(int n);

// Determinant caps within the structured design classes:
//   local_bound_g(k)  = 2^k * UB(k)^2          (order-2k designs, always exact)
//   local_bound_g1(k) = 2^k * UB(k) * UB(k+1)  (order-(2k+1) designs)
BoundValue local_bound_g(int k);  // 1 <= k <= 40
BoundValue local_bound_g1(int k); // 1 <= k <= 39

// Known global maximal determinants at the design orders compared against,
// each flagged proven or merely reported.
struct GlobalValue {
    ExactInt value;
    bool proven;
};
std::optional<GlobalValue> known_global_maxdet(int order);

// Percent of a bound attained. Uses the exact integer ratio when the bound
// is exact, extended-precision division otherwise.
double percent_of(const ExactInt& attained, const BoundValue& bound);

// Efficiency scoring of an attained |det| against the class's local bound
// and, when known, the global maximal determinant at the same order.
struct BoundReport {
    DesignClass cls; // g or g1
    int k = 0;
    int order = 0;
    ExactInt attained;
    BoundValue local_bound;
    BoundValue classical_bound_at_order;
    std::optional<GlobalValue> global;
    double pct_local = 0;
    std::optional<double> pct_global;
    std::optional<EhlichConstants> ehlich; // when order = 3 (mod 4)
};

BoundReport efficiency_report(DesignClass cls, int k, const ExactInt& attained);

std::string to_json(const BoundValue& b);
std::string to_json(const BoundReport& r);
std::string to_text(const BoundReport& r);

} // namespace dopt
