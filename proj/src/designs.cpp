#include "dopt/designs.hpp"

#include <utility>

#include <nlohmann/json.hpp>

#include "dopt/determinant.hpp"
#include "dopt/formats.hpp"
#include "dopt/hadamard.hpp"
#include "dopt/theta.hpp"

namespace dopt {

std::vector<std::string> ModelSpec::beta_labels() const {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(parameter_count()));
    for (int j = 1; j <= k; ++j) labels.push_back("F" + std::to_string(j));
    labels.push_back("F0");
    for (int j = 2; j <= k; ++j) labels.push_back("F1" + std::to_string(j));
    for (int j = 1; j <= n_extra; ++j) labels.push_back("Fe" + std::to_string(j));
    return labels;
}

RunMatrix::RunMatrix(SignMatrix lv, int pivot_col, std::vector<std::string> labels)
    : levels(std::move(lv)), factor_labels(std::move(labels)) {
    if (pivot_col < 0 || pivot_col >= levels.cols())
        throw IndexError("pivot column " + std::to_string(pivot_col) + " out of range");
    if (factor_labels.empty()) {
        for (int j = 0; j < levels.cols(); ++j)
            factor_labels.push_back("X" + std::to_string(j + 1));
    }
    if (static_cast<int>(factor_labels.size()) != levels.cols())
        throw DimensionError("factor label count does not match column count");
    if (pivot_col != 0) {
        // bring the pivot to the front, preserving the order of the rest
        SignMatrix reordered(levels.rows(), levels.cols());
        std::vector<std::string> relabeled;
        relabeled.push_back(factor_labels[static_cast<std::size_t>(pivot_col)]);
        for (int i = 0; i < levels.rows(); ++i) reordered.set(i, 0, levels(i, pivot_col));
        int out = 1;
        for (int j = 0; j < levels.cols(); ++j) {
            if (j == pivot_col) continue;
            for (int i = 0; i < levels.rows(); ++i) reordered.set(i, out, levels(i, j));
            relabeled.push_back(factor_labels[static_cast<std::size_t>(j)]);
            ++out;
        }
        levels = std::move(reordered);
        factor_labels = std::move(relabeled);
    }
}

SignMatrix model_matrix(const RunMatrix& runs, const ModelSpec& spec) {
    if (spec.k < 1) throw DimensionError("model requires k >= 1");
    if (spec.pivot != 1) throw DimensionError("pivot must be factor 1");
    if (runs.levels.cols() < spec.k + spec.n_extra)
        throw DimensionError("run matrix has " + std::to_string(runs.levels.cols()) +
                             " factors, model needs " + std::to_string(spec.k + spec.n_extra));

    const SignCol pivot = runs.levels.col(0);
    SignMatrix m(runs.levels.rows(), spec.parameter_count());

    auto put_col = [&](int dest, const SignCol& c) {
        for (int i = 0; i < m.rows(); ++i) m.set(i, dest, c[static_cast<std::size_t>(i)]);
    };

    for (int j = 0; j < spec.k; ++j) put_col(j, runs.levels.col(j));
    put_col(spec.k, schur_product(pivot, pivot));
    for (int j = 1; j < spec.k; ++j)
        put_col(spec.k + j, schur_product(pivot, runs.levels.col(j)));
    for (int j = 0; j < spec.n_extra; ++j)
        put_col(2 * spec.k + j, runs.levels.col(spec.k + j));
    return m;
}

bool is_estimable(const RunMatrix& runs, const ModelSpec& spec) {
    if (runs.levels.rows() != spec.parameter_count())
        throw DimensionError("saturated model needs exactly " +
                             std::to_string(spec.parameter_count()) + " runs, got " +
                             std::to_string(runs.levels.rows()));
    return determinant_exact(model_matrix(runs, spec)) != 0;
}

namespace {

void require_m_class(const SignMatrix& m, const char* name) {
    if (!m.square())
        throw ClassError(std::string(name) + " must be square, got " +
                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    if (!first_column_all_ones(m))
        throw ClassError(std::string(name) + " must have all-ones first column");
}

ExactInt require_nonsingular(const SignMatrix& m, const char* name) {
    ExactInt d = determinant_exact(m);
    if (d == 0) throw SingularError(std::string(name) + " is singular");
    return d;
}

ExactInt abs_exact(ExactInt v) { return v < 0 ? ExactInt(-v) : v; }

void check_design_order(int order) {
    if (order > kMaxDetOrder)
        throw OrderError("design order " + std::to_string(order) +
                         " exceeds determinant engine cap " + std::to_string(kMaxDetOrder));
}

} // namespace

SaturatedDesign construct_g(const SignMatrix& M, const SignMatrix& N) {
    require_m_class(M, "M");
    require_m_class(N, "N");
    if (M.rows() != N.rows())
        throw ClassError("M and N must have the same order, got " + std::to_string(M.rows()) +
                         " and " + std::to_string(N.rows()));
    const int k = M.rows();
    check_design_order(2 * k);
    const ExactInt det_m = require_nonsingular(M, "M");
    const ExactInt det_n = require_nonsingular(N, "N");

    SaturatedDesign d;
    d.matrix = vblock(hblock(M, M), hblock(negated(N), N));
    d.spec = ModelSpec{k, 0};
    d.cls = DesignClass::g;
    d.determinant = determinant_exact(d.matrix);
    d.provenance = "construct-g k=" + std::to_string(k);
    if (d.determinant != exact_pow2(k) * det_m * det_n)
        throw std::logic_error("block determinant identity violated");
    return d;
}

SaturatedDesign construct_g_optimal(int k) {
    const MaxDetRecord rec = catalog_theta(k);
    SaturatedDesign d = construct_g(rec.witness, rec.witness);
    d.provenance = "construct-g-optimal k=" + std::to_string(k) + " witness=catalog";
    return d;
}

SaturatedDesign construct_gn(const SaturatedDesign& g, const SignMatrix& Mn,
                             const std::vector<int>& g_row_picks,
                             const std::vector<int>& m_row_picks) {
    if (g.cls != DesignClass::g)
        throw ClassError("base design must be of class g");
    const int k = g.spec.k;
    if (g.matrix.rows() != 2 * k || !g.matrix.square())
        throw ClassError("base design matrix must be square of order 2k");
    require_m_class(Mn, "Mn");
    const int n = Mn.rows();
    check_design_order(2 * k + n);
    require_nonsingular(Mn, "Mn");
    if (static_cast<int>(g_row_picks.size()) != n)
        throw DimensionError("need exactly n = " + std::to_string(n) + " base-row picks");
    if (static_cast<int>(m_row_picks.size()) != 2 * k)
        throw DimensionError("need exactly 2k = " + std::to_string(2 * k) + " extra-row picks");
    for (int i : g_row_picks)
        if (i < 0 || i >= 2 * k) throw IndexError("base row pick " + std::to_string(i) + " out of range");
    for (int i : m_row_picks)
        if (i < 0 || i >= n) throw IndexError("extra row pick " + std::to_string(i) + " out of range");

    SignMatrix V(2 * k, n);
    for (int i = 0; i < 2 * k; ++i)
        for (int j = 0; j < n; ++j) V.set(i, j, Mn(m_row_picks[static_cast<std::size_t>(i)], j));
    SignMatrix G(n, 2 * k);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < 2 * k; ++j) G.set(i, j, g.matrix(g_row_picks[static_cast<std::size_t>(i)], j));

    auto fmt_picks = [](const std::vector<int>& p) {
        std::string s = "[";
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(p[i]);
        }
        return s + "]";
    };

    SaturatedDesign d;
    d.matrix = vblock(hblock(g.matrix, negated(V)), hblock(G, Mn));
    d.spec = ModelSpec{k, n};
    d.cls = DesignClass::gn;
    d.determinant = determinant_exact(d.matrix);
    d.provenance = "construct-gn k=" + std::to_string(k) + " n=" + std::to_string(n) +
                   " g-rows=" + fmt_picks(g_row_picks) + " m-rows=" + fmt_picks(m_row_picks);
    if (d.determinant == 0)
        throw SingularError("assembled design is singular for g-rows=" + fmt_picks(g_row_picks) +
                            " m-rows=" + fmt_picks(m_row_picks));
    return d;
}

SaturatedDesign construct_g2k_optimal(int k) {
    if (k < 4 || k % 4 != 0)
        throw ClassError("doubling requires k = 0 (mod 4), got " + std::to_string(k));
    int expo = 0;
    while ((1 << expo) < k) ++expo;
    if ((1 << expo) != k)
        throw CatalogError("no Hadamard witness of order " + std::to_string(k));
    check_design_order(4 * k);
    const SignMatrix H = sylvester(expo);

    SaturatedDesign base = construct_g(H, H);
    SaturatedDesign d;
    d.matrix = vblock(hblock(base.matrix, negated(base.matrix)), hblock(base.matrix, base.matrix));
    d.spec = ModelSpec{k, 2 * k};
    d.cls = DesignClass::g2k;
    d.determinant = determinant_exact(d.matrix);
    d.provenance = "construct-g2k-optimal k=" + std::to_string(k);
    if (!is_hadamard(d.matrix))
        throw std::logic_error("doubled optimal design is not Hadamard");
    ExactInt expect = 1;
    for (int i = 0; i < 2 * k; ++i) expect *= 4 * k;
    if (abs_exact(d.determinant) != expect)
        throw std::logic_error("doubled design determinant mismatch");
    return d;
}

SignMatrix normalize_corner(const SignMatrix& m) {
    if (!m.square()) throw ClassError("corner normalization requires a square matrix");
    if (m(m.rows() - 1, m.cols() - 1) == 1) return m;
    return negate_cols(m, {m.cols() - 1});
}

BorderedSplit split_bordered(const SignMatrix& m) {
    if (!m.square() || m.rows() < 2)
        throw ClassError("bordered split requires a square matrix of order >= 2");
    const int k = m.rows() - 1;
    if (m(k, k) != 1) throw ClassError("bordered split requires a +1 corner");
    BorderedSplit s{SignMatrix(k, k), SignCol(static_cast<std::size_t>(k)),
                    SignCol(static_cast<std::size_t>(k))};
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) s.core.set(i, j, m(i, j));
    for (int i = 0; i < k; ++i) s.c0[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(-m(i, k));
    for (int j = 0; j < k; ++j) s.r0[static_cast<std::size_t>(j)] = static_cast<std::int8_t>(m(k, j));
    return s;
}

SignMatrix reassemble_bordered(const BorderedSplit& s) {
    SignCol neg_c0(s.c0.size());
    for (std::size_t i = 0; i < s.c0.size(); ++i) neg_c0[i] = static_cast<std::int8_t>(-s.c0[i]);
    SignCol border = s.r0;
    border.push_back(1);
    return vblock(hblock(s.core, col_matrix(neg_c0)), row_matrix(border));
}

SaturatedDesign construct_g1(const SignMatrix& M_kp1, const SignMatrix& N_k) {
    require_m_class(M_kp1, "M_{k+1}");
    require_m_class(N_k, "N_k");
    if (M_kp1.rows() != N_k.rows() + 1)
        throw ClassError("block orders must differ by one, got " + std::to_string(M_kp1.rows()) +
                         " and " + std::to_string(N_k.rows()));
    const int k = N_k.rows();
    check_design_order(2 * k + 1);
    const ExactInt det_m = require_nonsingular(M_kp1, "M_{k+1}");
    const ExactInt det_n = require_nonsingular(N_k, "N_k");

    const SignMatrix normalized = normalize_corner(M_kp1);
    const BorderedSplit s = split_bordered(normalized);

    // g0 = [core core; -N N]; the core block may be singular, the bordered
    // determinant identity holds regardless.
    const SignMatrix g0 = vblock(hblock(s.core, s.core), hblock(negated(N_k), N_k));
    SignCol neg_c_tilde(static_cast<std::size_t>(2 * k));
    for (int i = 0; i < k; ++i) {
        neg_c_tilde[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(-s.c0[static_cast<std::size_t>(i)]);
        neg_c_tilde[static_cast<std::size_t>(k + i)] = static_cast<std::int8_t>(-s.c0[static_cast<std::size_t>(i)]);
    }
    SignCol border(static_cast<std::size_t>(2 * k + 1));
    for (int j = 0; j < k; ++j) {
        border[static_cast<std::size_t>(j)] = s.r0[static_cast<std::size_t>(j)];
        border[static_cast<std::size_t>(k + j)] = s.r0[static_cast<std::size_t>(j)];
    }
    border[static_cast<std::size_t>(2 * k)] = 1;

    SaturatedDesign d;
    d.matrix = vblock(hblock(g0, col_matrix(neg_c_tilde)), row_matrix(border));
    d.spec = ModelSpec{k, 1};
    d.cls = DesignClass::g1;
    d.determinant = determinant_exact(d.matrix);
    d.provenance = "construct-g1 k=" + std::to_string(k);
    if (abs_exact(d.determinant) != exact_pow2(k) * abs_exact(det_m) * abs_exact(det_n))
        throw std::logic_error("bordered determinant identity violated");
    return d;
}

namespace {

void add_check(VerificationReport& rep, const std::string& name, bool ok,
               const std::string& detail = "") {
    rep.checks.push_back({name, ok, detail});
}

// Structural predicates of the [M M; -N N] block over the first 2k rows.
void check_g_structure(VerificationReport& rep, const SignMatrix& D, int k) {
    bool pivot_ok = true;
    for (int i = 0; i < k; ++i) pivot_ok &= D(i, 0) == 1;
    for (int i = k; i < 2 * k; ++i) pivot_ok &= D(i, 0) == -1;
    add_check(rep, "pivot-balance", pivot_ok,
              pivot_ok ? "" : "pivot column is not [+1^k; -1^k]");

    bool mean_ok = true;
    for (int i = 0; i < 2 * k; ++i) mean_ok &= D(i, k) == 1;
    add_check(rep, "mean-column", mean_ok, mean_ok ? "" : "mean column is not all ones");

    bool inter_ok = true;
    for (int j = 1; j < k && inter_ok; ++j)
        for (int i = 0; i < 2 * k && inter_ok; ++i)
            inter_ok = D(i, k + j) == (i < k ? D(i, j) : -D(i, j));
    add_check(rep, "interaction-structure", inter_ok,
              inter_ok ? "" : "interaction columns are not the pivot-signed factor columns");
}

SignMatrix submatrix(const SignMatrix& D, int r0, int r1, int c0, int c1) {
    SignMatrix s(r1 - r0, c1 - c0);
    for (int i = r0; i < r1; ++i)
        for (int j = c0; j < c1; ++j) s.set(i - r0, j - c0, D(i, j));
    return s;
}

} // namespace

bool VerificationReport::passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

std::vector<std::string> VerificationReport::failed_predicates() const {
    std::vector<std::string> out;
    for (const auto& c : checks)
        if (!c.passed) out.push_back(c.predicate);
    return out;
}

VerificationReport verify_membership(const SignMatrix& D, DesignClass cls,
                                     const ModelSpec& spec) {
    VerificationReport rep;
    const int k = spec.k;
    const int n = spec.n_extra;

    int expected_extra = n;
    switch (cls) {
        case DesignClass::g: expected_extra = 0; break;
        case DesignClass::g1: expected_extra = 1; break;
        case DesignClass::g2k: expected_extra = 2 * k; break;
        case DesignClass::gn: break;
    }
    const int order = 2 * k + expected_extra;
    const bool shape_ok = D.square() && D.rows() == order && expected_extra == n && k >= 1;
    add_check(rep, "square-order", shape_ok,
              shape_ok ? "" : "expected square order " + std::to_string(order) + ", got " +
                              std::to_string(D.rows()) + "x" + std::to_string(D.cols()));
    if (!shape_ok) return rep;

    check_g_structure(rep, D, k);

    if (n > 0) {
        // Extra runs: [r r] or [-r r] over the model columns, leading entry
        // of r equal to +1 (the mean column stays all ones).
        bool rows_ok = true;
        for (int t = 2 * k; t < order && rows_ok; ++t) {
            if (D(t, k) != 1) { rows_ok = false; break; }
            bool same = true, flipped = true;
            for (int j = 0; j < k; ++j) {
                same &= D(t, j) == D(t, k + j);
                flipped &= D(t, j) == -D(t, k + j);
            }
            rows_ok = same || flipped;
        }
        add_check(rep, "border-row-shape", rows_ok,
                  rows_ok ? "" : "an extra run row is not of the form [r r] or [-r r] with leading +1");

        const SignMatrix extra = submatrix(D, 2 * k, order, 2 * k, order);
        const bool extra_ok = determinant_exact(extra) != 0;
        add_check(rep, "extra-block-nonsingular", extra_ok,
                  extra_ok ? "" : "extra-factor block is singular");
    } else {
        // Diagnostic block checks; either one failing forces overall
        // singularity via det = 2^k det(upper) det(lower).
        const bool upper_ok = determinant_exact(submatrix(D, 0, k, 0, k)) != 0;
        add_check(rep, "upper-block-nonsingular", upper_ok,
                  upper_ok ? "" : "upper factor block is singular");
        const bool lower_ok = determinant_exact(submatrix(D, k, 2 * k, k, 2 * k)) != 0;
        add_check(rep, "lower-block-nonsingular", lower_ok,
                  lower_ok ? "" : "lower interaction block is singular");
    }

    const bool nonsingular = determinant_exact(D) != 0;
    add_check(rep, "nonsingular", nonsingular, nonsingular ? "" : "design matrix is singular");
    return rep;
}

std::string to_design_file(const SaturatedDesign& d) {
    nlohmann::json h;
    h["class"] = class_label(d.cls);
    h["k"] = d.spec.k;
    h["n_extra"] = d.spec.n_extra;
    h["beta"] = d.spec.beta_labels();
    h["determinant"] = to_decimal(d.determinant);
    h["provenance"] = d.provenance;
    return h.dump() + "\n" + to_glyph(d.matrix);
}

LoadedDesign design_from_file_text(const std::string& text) {
    const auto nl = text.find('\n');
    if (nl == std::string::npos) throw ParseError("design file has no header line");
    nlohmann::json h;
    try {
        h = nlohmann::json::parse(text.substr(0, nl));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad design header: ") + e.what());
    }
    LoadedDesign out;
    try {
        out.design.cls = class_from_label(h.at("class").get<std::string>());
        out.design.spec.k = h.at("k").get<int>();
        out.design.spec.n_extra = h.at("n_extra").get<int>();
        out.header_determinant = exact_from_decimal(h.at("determinant").get<std::string>());
        out.design.provenance = h.value("provenance", std::string{});
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("design header missing field: ") + e.what());
    }
    if (out.design.spec.k < 1 || out.design.spec.n_extra < 0)
        throw ParseError("design header has invalid k or n_extra");
    out.design.matrix = sign_matrix_from_glyph(text.substr(nl + 1));
    out.design.determinant = determinant_exact(out.design.matrix);
    out.determinant_matches = out.design.determinant == out.header_determinant;
    return out;
}

} // namespace dopt
