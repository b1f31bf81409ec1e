#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "dopt/formats.hpp"

// Drives the installed binary end to end; DOPT_CLI_PATH is injected by the
// build so the tests exercise exactly what ships.

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(DOPT_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t got = fread(buf, 1, sizeof(buf), pipe)) out.append(buf, got);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

} // namespace

TEST_CASE("construct then verify round trips with exit 0") {
    const auto file = temp_file("cli_g5.design");
    const auto c = run_cli("construct --class g --k 5 -o " + file.string());
    CHECK(c.exit_code == 0);
    CHECK(c.output.find("det=73728") != std::string::npos);
    CHECK(c.output.find("pct_local=100.00") != std::string::npos);

    const auto v = run_cli("verify " + file.string());
    CHECK(v.exit_code == 0);
    CHECK(v.output.find("membership verified") != std::string::npos);
}

TEST_CASE("verify flags a flipped pivot entry with exit 1") {
    const auto file = temp_file("cli_g3.design");
    REQUIRE(run_cli("construct --class g --k 3 -o " + file.string()).exit_code == 0);

    // flip the first glyph of the body (a pivot-column entry)
    std::string text = dopt::read_text_file(file);
    const auto nl = text.find('\n');
    REQUIRE(text[nl + 1] == '+');
    text[nl + 1] = '-';
    const auto tampered = temp_file("cli_g3_tampered.design");
    dopt::write_text_file(tampered, text);

    const auto v = run_cli("verify " + tampered.string());
    CHECK(v.exit_code == 1);
    CHECK(v.output.find("pivot-balance") != std::string::npos);
}

TEST_CASE("verify flags a lying header determinant") {
    const auto file = temp_file("cli_g4.design");
    REQUIRE(run_cli("construct --class g --k 4 -o " + file.string()).exit_code == 0);
    std::string text = dopt::read_text_file(file);
    const auto pos = text.find("\"determinant\":\"");
    REQUIRE(pos != std::string::npos);
    text[pos + 15] = text[pos + 15] == '9' ? '8' : '9'; // bend the claimed value
    const auto lied = temp_file("cli_g4_lied.design");
    dopt::write_text_file(lied, text);

    const auto v = run_cli("verify " + lied.string());
    CHECK(v.exit_code == 1);
    CHECK(v.output.find("determinant-header") != std::string::npos);
}

TEST_CASE("verify exits 2 on garbage input") {
    const auto file = temp_file("cli_garbage.design");
    dopt::write_text_file(file, "this is not a design\n");
    CHECK(run_cli("verify " + file.string()).exit_code == 2);
    CHECK(run_cli("verify /nonexistent/path.design").exit_code == 2);
}

TEST_CASE("construct rejects out-of-catalog orders with exit 2") {
    const auto r = run_cli("construct --class g --k 7 -o " + temp_file("nope.design").string());
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("catalog") != std::string::npos);
}

TEST_CASE("usage errors exit 2, help exits 0") {
    CHECK(run_cli("construct --class g").exit_code == 2);  // missing --k
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("bound").exit_code == 2); // needs --n or --class
}

TEST_CASE("bound output carries the constants") {
    const auto r = run_cli("bound --n 15");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("(6,2,3,3)") != std::string::npos);
    CHECK(r.output.find("4.30645e+08") != std::string::npos);

    const auto g16 = run_cli("bound --class g --k 16");
    CHECK(g16.exit_code == 0);
    CHECK(g16.output.find("1208925819614629174706176") != std::string::npos); // 2^16 * 16^16

    const auto n4 = run_cli("bound --n 4");
    CHECK(n4.exit_code == 0);
    CHECK(n4.output.find("16") != std::string::npos);
}

TEST_CASE("maxdet subcommand is deterministic and exact") {
    const auto ex = run_cli("maxdet --k 5 --mode exhaustive");
    CHECK(ex.exit_code == 0);
    CHECK(ex.output.find("\"theta\": \"48\"") != std::string::npos);

    const auto cat = run_cli("maxdet --k 15 --mode catalog");
    CHECK(cat.exit_code == 0);
    CHECK(cat.output.find("\"theta\": \"418037760\"") != std::string::npos);

    const auto k1 = run_cli("maxdet --k 1");
    CHECK(k1.exit_code == 0);
    CHECK(k1.output.find("\"theta\": \"1\"") != std::string::npos);

    const auto a = run_cli("maxdet --k 6 --mode hillclimb --restarts 12 --seed 9");
    const auto b = run_cli("maxdet --k 6 --mode hillclimb --restarts 12 --seed 9");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);

    CHECK(run_cli("maxdet --k 7 --mode exhaustive").exit_code == 2);
    CHECK(run_cli("maxdet --k 7 --mode catalog").exit_code == 2);
}

TEST_CASE("csv side output parses back to the same matrix") {
    const auto file = temp_file("cli_g2.design");
    const auto csv = temp_file("cli_g2.csv");
    REQUIRE(run_cli("construct --class g --k 2 -o " + file.string() + " --csv-out " +
                    csv.string()).exit_code == 0);
    const auto m = dopt::sign_matrix_from_csv(dopt::read_text_file(csv));
    const auto body = dopt::read_text_file(file);
    const auto d = dopt::sign_matrix_from_glyph(body.substr(body.find('\n') + 1));
    CHECK(m == d);
}
