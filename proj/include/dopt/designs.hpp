#pragma once

#include <string>
#include <vector>

#include "dopt/design_class.hpp"
#include "dopt/exact_int.hpp"
#include "dopt/sign_matrix.hpp"

namespace dopt {

// Parameter layout of a saturated model: k pivot-involved factors F1..Fk,
// the mean, the k-1 pivot interactions, then n_extra extra main effects.
// The pivot is fixed as factor 1 and the parameter sequence is
// [F1..Fk, F0, F12..F1k, Fe1..Fen]; rearranging other interaction patterns
// into this normal form is the caller's job.
struct ModelSpec {
    int k = 1;
    int n_extra = 0;
    int pivot = 1;

    int parameter_count() const { return 2 * k + n_extra; }
    std::vector<std::string> beta_labels() const;
};

// Run levels (runs x factors, entries ±1) with a designated pivot column.
// The pivot column is moved to the front at construction so factor 1 is
// always the pivot. 0/1-encoded run lists are converted at ingestion.
struct RunMatrix {
    SignMatrix levels;
    std::vector<std::string> factor_labels;

    explicit RunMatrix(SignMatrix lv, int pivot_col = 0,
                       std::vector<std::string> labels = {});
};

// A square design matrix together with its class, model layout, and exact
// determinant (always recomputed, never trusted from storage).
struct SaturatedDesign {
    SignMatrix matrix = SignMatrix(1, 1);
    ModelSpec spec;
    DesignClass cls = DesignClass::g;
    ExactInt determinant = 0;
    std::string provenance;
};

// Expand run levels into the model matrix: columns assembled in beta order,
// mean column = pivot * pivot, interaction columns = pivot * factor.
SignMatrix model_matrix(const RunMatrix& runs, const ModelSpec& spec);

// True iff the (square) model matrix is nonsingular. Throws DimensionError
// for non-saturated run counts.
bool is_estimable(const RunMatrix& runs, const ModelSpec& spec);

// [M M; -N N] from two nonsingular order-k blocks with all-ones first
// columns. det = 2^k det(M) det(N), asserted against the exact engine.
SaturatedDesign construct_g(const SignMatrix& M, const SignMatrix& N);

// construct_g(w, w) with w the catalog maximal-determinant witness;
// |det| = 2^k theta_k^2.
SaturatedDesign construct_g_optimal(int k);

// [g -V; G Mn] with G rows picked from g and V rows picked from Mn
// (repetition allowed). The result is verified nonsingular by the exact
// determinant before return; singular assemblies are rejected loudly with
// the offending picks, never accepted.
SaturatedDesign construct_gn(const SaturatedDesign& g, const SignMatrix& Mn,
                             const std::vector<int>& g_row_picks,
                             const std::vector<int>& m_row_picks);

// Doubling [g* -g*; g* g*] of the optimal order-2k design for k = 0 (mod 4);
// the result is a Hadamard matrix of order 4k with |det| = (4k)^(2k).
// Requires a Sylvester witness of order k, so k in {4, 8}.
SaturatedDesign construct_g2k_optimal(int k);

// Bordered construction from M_{k+1} (order k+1) and N_k (order k), both
// with all-ones first column and nonsingular: normalize the corner of
// M_{k+1} to +1 by negating its last column if needed, split it as
// [core -c0; r0^T 1], and assemble [[core core; -N N], -[c0;c0]; [r0 r0], 1].
// |det| = 2^k |det M_{k+1}| |det N_k|, asserted against the exact engine.
SaturatedDesign construct_g1(const SignMatrix& M_kp1, const SignMatrix& N_k);

// Split of an order-(k+1) matrix with +1 corner into [core -c0; r0^T 1].
struct BorderedSplit {
    SignMatrix core;
    SignCol c0;
    SignCol r0;
};
SignMatrix normalize_corner(const SignMatrix& m); // negate last column if corner is -1
BorderedSplit split_bordered(const SignMatrix& m);
SignMatrix reassemble_bordered(const BorderedSplit& s);

// Structural membership verification. Checks the class's block form and
// nonsingularity predicate by predicate; failures are reported, not thrown.
struct VerificationReport {
    struct Check {
        std::string predicate;
        bool passed;
        std::string detail;
    };
    std::vector<Check> checks;

    bool passed() const;
    std::vector<std::string> failed_predicates() const;
};

VerificationReport verify_membership(const SignMatrix& D, DesignClass cls,
                                     const ModelSpec& spec);

// Design file: a one-line JSON header (class, k, n_extra, beta labels,
// determinant as decimal string, provenance) followed by the glyph body.
std::string to_design_file(const SaturatedDesign& d);

struct LoadedDesign {
    SaturatedDesign design; // determinant recomputed from the matrix
    ExactInt header_determinant = 0;
    bool determinant_matches = false;
};
LoadedDesign design_from_file_text(const std::string& text);

} // namespace dopt
