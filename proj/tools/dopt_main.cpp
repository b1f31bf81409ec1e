// Batch front end: construct designs, verify design files, compute bounds,
// run maximal-determinant searches, and emit the comparison report.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/parse/precondition
// error.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "dopt/bounds.hpp"
#include "dopt/designs.hpp"
#include "dopt/determinant.hpp"
#include "dopt/formats.hpp"
#include "dopt/hadamard.hpp"
#include "dopt/theta.hpp"

namespace {

using dopt::DesignClass;
using dopt::ExactInt;
using dopt::SignMatrix;

std::string fmt_pct(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string fmt_approx(long double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6Lg", v);
    return buf;
}

dopt::SaturatedDesign build_design(const std::string& cls, int k, int n,
                                   const std::optional<std::string>& m_file,
                                   const std::optional<std::string>& n_file,
                                   const std::vector<int>& g_rows,
                                   const std::vector<int>& m_rows) {
    if (cls == "g") {
        if (m_file || n_file) {
            if (!m_file || !n_file)
                throw dopt::Error("class g needs both --m-file and --n-file, or neither");
            return dopt::construct_g(dopt::load_sign_matrix(*m_file),
                                     dopt::load_sign_matrix(*n_file));
        }
        return dopt::construct_g_optimal(k);
    }
    if (cls == "g1") {
        const SignMatrix M = m_file ? dopt::load_sign_matrix(*m_file)
                                    : dopt::catalog_theta(k + 1).witness;
        const SignMatrix N = n_file ? dopt::load_sign_matrix(*n_file)
                                    : dopt::catalog_theta(k).witness;
        return dopt::construct_g1(M, N);
    }
    if (cls == "gn") {
        if (n < 1) throw dopt::Error("class gn needs --n >= 1");
        const dopt::SaturatedDesign g = dopt::construct_g_optimal(k);
        const SignMatrix Mn = m_file ? dopt::load_sign_matrix(*m_file)
                                     : dopt::catalog_theta(n).witness;
        std::vector<int> gp = g_rows, mp = m_rows;
        if (gp.empty())
            for (int i = 0; i < n; ++i) gp.push_back(i % (2 * k));
        if (mp.empty())
            for (int i = 0; i < 2 * k; ++i) mp.push_back(i % n);
        return dopt::construct_gn(g, Mn, gp, mp);
    }
    if (cls == "g2k") return dopt::construct_g2k_optimal(k);
    throw dopt::Error("unknown class '" + cls + "' (expected g, g1, gn, g2k)");
}

int cmd_construct(const std::string& cls, int k, int n,
                  const std::optional<std::string>& m_file,
                  const std::optional<std::string>& n_file,
                  const std::vector<int>& g_rows, const std::vector<int>& m_rows,
                  const std::string& out_path, const std::optional<std::string>& csv_out) {
    const dopt::SaturatedDesign d = build_design(cls, k, n, m_file, n_file, g_rows, m_rows);
    dopt::write_text_file(out_path, dopt::to_design_file(d));
    if (csv_out) dopt::write_text_file(*csv_out, dopt::to_csv(d.matrix));

    ExactInt att = d.determinant < 0 ? ExactInt(-d.determinant) : d.determinant;
    std::string summary = "class=" + cls + " k=" + std::to_string(k) +
                          " order=" + std::to_string(d.matrix.rows()) +
                          " det=" + dopt::to_decimal(d.determinant);
    if (d.cls == DesignClass::g || d.cls == DesignClass::g1) {
        const dopt::BoundReport rep = dopt::efficiency_report(d.cls, k, att);
        summary += " local_bound=";
        summary += rep.local_bound.exact ? dopt::to_decimal(*rep.local_bound.exact)
                                         : fmt_approx(rep.local_bound.approx);
        summary += " pct_local=" + fmt_pct(rep.pct_local);
        if (rep.pct_global) summary += " pct_global=" + fmt_pct(*rep.pct_global);
    } else if (d.cls == DesignClass::g2k) {
        const dopt::BoundValue cb = dopt::classical_upper_bound(d.matrix.rows());
        summary += " hadamard=" + std::string(dopt::is_hadamard(d.matrix) ? "yes" : "no");
        summary += " order_bound=" + (cb.exact ? dopt::to_decimal(*cb.exact) : "?");
        summary += " pct_bound=" + fmt_pct(dopt::percent_of(att, cb));
    }
    summary += " file=" + out_path;
    std::cout << summary << "\n";
    return 0;
}

int cmd_verify(const std::string& path) {
    const dopt::LoadedDesign loaded = dopt::design_from_file_text(dopt::read_text_file(path));
    dopt::VerificationReport rep = dopt::verify_membership(
        loaded.design.matrix, loaded.design.cls, loaded.design.spec);
    rep.checks.push_back({"determinant-header", loaded.determinant_matches,
                          loaded.determinant_matches
                              ? ""
                              : "header says " + dopt::to_decimal(loaded.header_determinant) +
                                    ", matrix has " + dopt::to_decimal(loaded.design.determinant)});
    bool all_ok = true;
    for (const auto& c : rep.checks) {
        std::cout << (c.passed ? "pass " : "FAIL ") << c.predicate;
        if (!c.passed && !c.detail.empty()) std::cout << "  (" << c.detail << ")";
        std::cout << "\n";
        all_ok &= c.passed;
    }
    std::cout << (all_ok ? "membership verified" : "membership FAILED") << " for class "
              << dopt::class_label(loaded.design.cls) << " k=" << loaded.design.spec.k << "\n";
    return all_ok ? 0 : 1;
}

int cmd_bound(std::optional<int> order, const std::optional<std::string>& cls, int k,
              bool as_json) {
    if (order && cls) throw dopt::Error("give either --n or --class, not both");
    if (order) {
        const dopt::BoundValue b = dopt::classical_upper_bound(*order);
        nlohmann::json j;
        j["n"] = *order;
        j["residue"] = b.residue;
        j["exact"] = b.exact ? nlohmann::json(dopt::to_decimal(*b.exact)) : nlohmann::json(nullptr);
        j["approx"] = static_cast<double>(b.approx);
        if (*order % 4 == 3) {
            const auto e = dopt::ehlich_constants(*order);
            j["ehlich"] = {{"s", e.s}, {"r", e.r}, {"u", e.u}, {"v", e.v}};
        }
        if (as_json) {
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "n = " << *order << " (" << b.residue << " mod 4)\n";
            if (b.exact) std::cout << "bound = " << dopt::to_decimal(*b.exact) << "\n";
            std::cout << "approx = " << static_cast<double>(b.approx) << "\n";
            if (j.contains("ehlich"))
                std::cout << "ehlich (s,r,u,v) = (" << j["ehlich"]["s"] << "," << j["ehlich"]["r"]
                          << "," << j["ehlich"]["u"] << "," << j["ehlich"]["v"] << ")\n";
        }
        return 0;
    }
    if (!cls) throw dopt::Error("bound needs --n or --class with --k");
    dopt::BoundValue b;
    if (*cls == "g") b = dopt::local_bound_g(k);
    else if (*cls == "g1") b = dopt::local_bound_g1(k);
    else throw dopt::Error("bound --class must be g or g1");
    if (as_json) {
        nlohmann::json j;
        j["class"] = *cls;
        j["k"] = k;
        j["exact"] = b.exact ? nlohmann::json(dopt::to_decimal(*b.exact)) : nlohmann::json(nullptr);
        j["approx"] = static_cast<double>(b.approx);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "local bound " << *cls << "(k=" << k << ")";
        if (b.exact) std::cout << " = " << dopt::to_decimal(*b.exact);
        std::cout << "  approx " << static_cast<double>(b.approx) << "\n";
    }
    return 0;
}

int cmd_maxdet(int k, const std::string& mode, int restarts, std::uint64_t seed) {
    dopt::MaxDetRecord rec{0, 0, SignMatrix(1, 1), dopt::Provenance::catalog};
    if (mode == "exhaustive") rec = dopt::theta_exhaustive(k);
    else if (mode == "hillclimb") rec = dopt::theta_hillclimb(k, restarts, seed);
    else if (mode == "catalog") rec = dopt::catalog_theta(k);
    else throw dopt::Error("mode must be exhaustive, hillclimb or catalog");
    std::cout << dopt::to_json(rec) << "\n";
    return 0;
}

int cmd_catalog(bool as_json) {
    nlohmann::json rows = nlohmann::json::array();
    for (int k : dopt::catalog_orders()) {
        const dopt::MaxDetRecord rec = dopt::catalog_theta(k);
        if (as_json) {
            rows.push_back({{"order", k}, {"theta", dopt::to_decimal(rec.theta)}});
        } else {
            std::cout << "k=" << k << "  theta=" << dopt::to_decimal(rec.theta) << "\n";
        }
    }
    if (as_json) std::cout << rows.dump(2) << "\n";
    return 0;
}

struct ReportColumn {
    std::string label;
    dopt::BoundReport rep;
};

int cmd_report(bool as_json) {
    std::vector<ReportColumn> cols;
    {
        const auto d = dopt::construct_g_optimal(5);
        cols.push_back({"G(5,1)", dopt::efficiency_report(DesignClass::g, 5,
                                                          d.determinant < 0 ? ExactInt(-d.determinant)
                                                                            : d.determinant)});
    }
    {
        const auto d = dopt::construct_g_optimal(15);
        cols.push_back({"G(15,1)", dopt::efficiency_report(DesignClass::g, 15,
                                                           d.determinant < 0 ? ExactInt(-d.determinant)
                                                                             : d.determinant)});
    }
    {
        const auto d = dopt::construct_g_optimal(16);
        cols.push_back({"G(16,1)", dopt::efficiency_report(DesignClass::g, 16,
                                                           d.determinant < 0 ? ExactInt(-d.determinant)
                                                                             : d.determinant)});
    }
    {
        const auto d = dopt::construct_g1(dopt::catalog_theta(16).witness,
                                          dopt::catalog_theta(15).witness);
        cols.push_back({"G1(15,1)", dopt::efficiency_report(DesignClass::g1, 15,
                                                            d.determinant < 0 ? ExactInt(-d.determinant)
                                                                              : d.determinant)});
    }

    if (as_json) {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& c : cols) {
            nlohmann::json e;
            e["label"] = c.label;
            e["order"] = c.rep.order;
            e["local_max_determinant"] = dopt::to_decimal(c.rep.attained);
            e["pct_local"] = c.rep.pct_local;
            if (c.rep.global) {
                e["global"] = dopt::to_decimal(c.rep.global->value);
                e["global_proven"] = c.rep.global->proven;
                e["pct_global"] = *c.rep.pct_global;
            }
            j.push_back(e);
        }
        std::cout << j.dump(2) << "\n";
        return 0;
    }

    auto print_row = [&](const std::string& head, auto cell) {
        std::printf("%-34s", head.c_str());
        for (const auto& c : cols) std::printf(" %28s", cell(c).c_str());
        std::printf("\n");
    };
    print_row("set of saturated design matrices", [](const ReportColumn& c) { return c.label; });
    print_row("p (order of the matrices)", [](const ReportColumn& c) {
        return std::to_string(c.rep.order);
    });
    print_row("local maximal determinants", [](const ReportColumn& c) {
        return dopt::to_decimal(c.rep.attained);
    });
    print_row("% of local upper bounds attained", [](const ReportColumn& c) {
        return fmt_pct(c.rep.pct_local);
    });
    print_row("global maximal determinants", [](const ReportColumn& c) {
        return c.rep.global ? dopt::to_decimal(c.rep.global->value) +
                                  (c.rep.global->proven ? "" : " (reported)")
                            : std::string("?");
    });
    print_row("% of global determinants attained", [](const ReportColumn& c) {
        return c.rep.pct_global ? fmt_pct(*c.rep.pct_global) : std::string("?");
    });
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"saturated d-optimal design construction, certification and bounds"};
    app.require_subcommand(1);

    // construct
    auto* construct = app.add_subcommand("construct", "construct a design and write a design file");
    std::string cls = "g";
    int k = 1, n = 0;
    std::optional<std::string> m_file, n_file, csv_out;
    std::vector<int> g_rows, m_rows;
    std::string out_path = "design.txt";
    construct->add_option("--class", cls, "design class: g | g1 | gn | g2k")->required();
    construct->add_option("--k", k, "pivot-involved factor count")->required();
    construct->add_option("--n", n, "extra main effect count (class gn)");
    construct->add_option("--m-file", m_file, "first block matrix file (glyph or .csv)");
    construct->add_option("--n-file", n_file, "second block matrix file (glyph or .csv)");
    construct->add_option("--g-rows", g_rows, "row picks from the base design (class gn)");
    construct->add_option("--m-rows", m_rows, "row picks from the extra block (class gn)");
    construct->add_option("-o,--out", out_path, "output design file");
    construct->add_option("--csv-out", csv_out, "also write the bare matrix as CSV");

    // verify
    auto* verify = app.add_subcommand("verify", "verify a design file");
    std::string verify_path;
    verify->add_option("file", verify_path, "design file to verify")->required();

    // bound
    auto* bound = app.add_subcommand("bound", "classical or class-local determinant bounds");
    std::optional<int> bound_n;
    std::optional<std::string> bound_cls;
    int bound_k = 1;
    bool bound_json = false;
    bound->add_option("--n", bound_n, "matrix order for the classical bound");
    bound->add_option("--class", bound_cls, "design class (g | g1) for the local bound");
    bound->add_option("--k", bound_k, "k for the local bound");
    bound->add_flag("--json", bound_json, "JSON output");

    // maxdet
    auto* maxdet = app.add_subcommand("maxdet", "maximal-determinant search or catalog lookup");
    int md_k = 1;
    std::string md_mode = "catalog";
    int md_restarts = 32;
    std::uint64_t md_seed = dopt::kDefaultSeed;
    maxdet->add_option("--k", md_k, "matrix order")->required();
    maxdet->add_option("--mode", md_mode, "exhaustive | hillclimb | catalog")
        ->capture_default_str();
    maxdet->add_option("--restarts", md_restarts, "hillclimb restarts")->capture_default_str();
    maxdet->add_option("--seed", md_seed, "hillclimb seed, fixed for reproducible default runs")
        ->capture_default_str();

    // report
    auto* report = app.add_subcommand("report", "orders, determinants and bound percentages table");
    bool report_json = false;
    report->add_flag("--json", report_json, "JSON output");

    // catalog
    auto* catalog = app.add_subcommand("catalog", "list embedded maximal-determinant records");
    bool catalog_json = false;
    catalog->add_flag("--json", catalog_json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2; // usage errors are exit 2; --help stays 0
    }

    try {
        if (construct->parsed())
            return cmd_construct(cls, k, n, m_file, n_file, g_rows, m_rows, out_path, csv_out);
        if (verify->parsed()) return cmd_verify(verify_path);
        if (bound->parsed()) return cmd_bound(bound_n, bound_cls, bound_k, bound_json);
        if (maxdet->parsed()) return cmd_maxdet(md_k, md_mode, md_restarts, md_seed);
        if (report->parsed()) return cmd_report(report_json);
        if (catalog->parsed()) return cmd_catalog(catalog_json);
    } catch (const dopt::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
