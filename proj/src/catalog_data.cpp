#include "dopt/theta.hpp"

#include <string>

#include "dopt/formats.hpp"
#include "catalog_internal.hpp"

namespace dopt::catalog {

namespace {

// Order-15 maximal determinant matrix, |det| = 25515 * 2^14 = 418037760,
// as published (Smith / Cohn / Orrick lineage).
constexpr const char* kOrder15Unnormalized = R"(
----+++++-++++-
---+-++-++++-++
---++-++-++-+++
-++--+++-++----
++-+--+++-+----
+-+-+-+-+++----
++++++-++++--+-
-++-----+-+-+++
+++---++++-++++
+-+----+--++-++
++-------+++++-
++--+++------++
+-++-++-----++-
-++++-+----+-+-
+++++++---+++-+
)";

// Row-normalized version: rows with leading '-' negated, first column all +1.
constexpr const char* kOrder15Normalized = R"(
++++-----+----+
+++-+--+----+--
+++--+--+--+---
+--++---+--++++
++-+--+++-+----
+-+-+-+-+++----
++++++-++++--+-
+--+++++-+-+---
+++---++++-++++
+-+----+--++-++
++-------+++++-
++--+++------++
+-++-++-----++-
+----+-++++-+-+
+++++++---+++-+
)";

// Frozen winners of theta_exhaustive for k = 2..6 (smallest enumeration
// index among maximizers, first row and column all +1).
constexpr const char* kOrder2 = "++\n+-\n";
constexpr const char* kOrder3 = "+++\n++-\n+-+\n";
constexpr const char* kOrder4 = "++++\n++--\n+-+-\n+--+\n";
constexpr const char* kOrder5 = "+++++\n++---\n+-++-\n+-+-+\n+--++\n";
constexpr const char* kOrder6 = "++++++\n+-++--\n++--+-\n++---+\n+-+-++\n+--+++\n";

} // namespace

const SignMatrix& order15_witness_unnormalized() {
    static const SignMatrix m = sign_matrix_from_glyph(kOrder15Unnormalized);
    return m;
}

const SignMatrix& order15_witness() {
    static const SignMatrix m = sign_matrix_from_glyph(kOrder15Normalized);
    return m;
}

const SignMatrix& order16_witness() {
    static const SignMatrix m = [] {
        SignMatrix h(1, 1, +1);
        for (int i = 0; i < 4; ++i) h = vblock(hblock(h, h), hblock(h, negated(h)));
        return h;
    }();
    return m;
}

const SignMatrix& small_witness(int k) {
    static const SignMatrix w1 = SignMatrix(1, 1, +1);
    static const SignMatrix w2 = sign_matrix_from_glyph(kOrder2);
    static const SignMatrix w3 = sign_matrix_from_glyph(kOrder3);
    static const SignMatrix w4 = sign_matrix_from_glyph(kOrder4);
    static const SignMatrix w5 = sign_matrix_from_glyph(kOrder5);
    static const SignMatrix w6 = sign_matrix_from_glyph(kOrder6);
    switch (k) {
        case 1: return w1;
        case 2: return w2;
        case 3: return w3;
        case 4: return w4;
        case 5: return w5;
        case 6: return w6;
        default: throw CatalogError("no small witness of order " + std::to_string(k));
    }
}

} // namespace dopt::catalog
