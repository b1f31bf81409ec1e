#include "dopt/formats.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace dopt {

std::string to_glyph(const SignMatrix& m) {
    std::string out;
    out.reserve(static_cast<std::size_t>(m.rows()) * (m.cols() + 1));
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) out.push_back(m(i, j) > 0 ? '+' : '-');
        out.push_back('\n');
    }
    return out;
}

SignMatrix sign_matrix_from_glyph(const std::string& text) {
    std::vector<std::vector<int>> rows;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::vector<int> row;
        for (char c : line) {
            if (c == '+') row.push_back(1);
            else if (c == '-') row.push_back(-1);
            else if (c == ' ' || c == '\t' || c == '\r') continue;
            else throw ParseError("glyph line " + std::to_string(lineno) +
                                  ": unexpected character '" + std::string(1, c) + "'");
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("glyph text contains no rows");
    for (const auto& r : rows)
        if (r.size() != rows.front().size())
            throw ParseError("glyph rows have unequal lengths");
    return SignMatrix::from_rows(rows);
}

std::string to_csv(const SignMatrix& m) {
    std::string out;
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) out.push_back(',');
            out += (m(i, j) > 0 ? "1" : "-1");
        }
        out.push_back('\n');
    }
    return out;
}

namespace {

std::vector<std::vector<int>> parse_int_csv(const std::string& text) {
    std::vector<std::vector<int>> rows;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string trimmed;
        for (char c : line)
            if (c != ' ' && c != '\t' && c != '\r') trimmed.push_back(c);
        if (trimmed.empty()) continue;
        std::vector<int> row;
        std::istringstream ls(trimmed);
        std::string cell;
        while (std::getline(ls, cell, ',')) {
            try {
                std::size_t pos = 0;
                int v = std::stoi(cell, &pos);
                if (pos != cell.size()) throw std::invalid_argument(cell);
                row.push_back(v);
            } catch (const std::exception&) {
                throw ParseError("csv line " + std::to_string(lineno) + ": bad cell '" + cell + "'");
            }
        }
        if (row.empty()) continue;
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("csv text contains no rows");
    for (const auto& r : rows)
        if (r.size() != rows.front().size())
            throw ParseError("csv rows have unequal lengths");
    return rows;
}

} // namespace

SignMatrix sign_matrix_from_csv(const std::string& text) {
    auto rows = parse_int_csv(text);
    for (const auto& r : rows)
        for (int v : r)
            if (v != 1 && v != -1)
                throw ParseError("csv entry must be 1 or -1, got " + std::to_string(v));
    return SignMatrix::from_rows(rows);
}

SignMatrix run_levels_from_csv(const std::string& text) {
    auto rows = parse_int_csv(text);
    bool has_zero = false, has_minus = false;
    for (const auto& r : rows)
        for (int v : r) {
            if (v == 0) has_zero = true;
            else if (v == -1) has_minus = true;
            else if (v != 1)
                throw ParseError("run level must be 0/1 or -1/1, got " + std::to_string(v));
        }
    if (has_zero && has_minus)
        throw ParseError("run levels mix 0/1 and -1/1 encodings");
    if (has_zero)
        for (auto& r : rows)
            for (int& v : r)
                if (v == 0) v = -1;
    return SignMatrix::from_rows(rows);
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    out << text;
}

SignMatrix load_sign_matrix(const std::filesystem::path& path) {
    const std::string text = read_text_file(path);
    if (path.extension() == ".csv") return sign_matrix_from_csv(text);
    return sign_matrix_from_glyph(text);
}

void save_sign_matrix(const std::filesystem::path& path, const SignMatrix& m) {
    write_text_file(path, path.extension() == ".csv" ? to_csv(m) : to_glyph(m));
}

} // namespace dopt
