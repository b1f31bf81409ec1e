#pragma once

#include <filesystem>
#include <string>

#include "dopt/sign_matrix.hpp"

namespace dopt {

// Glyph text: one row per line, characters '+' and '-', optional single
// spaces between entries, blank lines ignored. The format sign matrices are
// usually printed in.
std::string to_glyph(const SignMatrix& m);
SignMatrix sign_matrix_from_glyph(const std::string& text);

// CSV of integers 1 / -1. Any other entry value is rejected.
std::string to_csv(const SignMatrix& m);
SignMatrix sign_matrix_from_csv(const std::string& text);

// CSV of run levels: accepts 1/-1 directly, or a 0/1 encoding which is
// converted by 1 -> +1, 0 -> -1 at ingestion. A file may not mix -1 and 0.
SignMatrix run_levels_from_csv(const std::string& text);

// File helpers; ".csv" selects CSV, anything else glyph.
SignMatrix load_sign_matrix(const std::filesystem::path& path);
void save_sign_matrix(const std::filesystem::path& path, const SignMatrix& m);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

} // namespace dopt
