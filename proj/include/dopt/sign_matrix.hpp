#pragma once

#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "dopt/errors.hpp"

namespace dopt {

// A ±1 column, used for factors, interactions, and borders.
using SignCol = std::vector<std::int8_t>;

// Dense rectangular matrix with entries in {-1,+1}, stored row-major as
// signed 8-bit values. The universal carrier for designs, blocks and
// catalog entries. Immutable in practice: operations return new values.
class SignMatrix {
public:
    SignMatrix(int rows, int cols, int fill = +1);

    // Construction from integer literals; every entry must be -1 or +1.
    static SignMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows);
    static SignMatrix from_rows(const std::vector<std::vector<int>>& rows);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    int operator()(int i, int j) const noexcept {
        assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
        return a_[static_cast<std::size_t>(i) * cols_ + j];
    }

    void set(int i, int j, int v);

    SignCol row(int i) const;
    SignCol col(int j) const;

    const std::int8_t* data() const noexcept { return a_.data(); }

    friend bool operator==(const SignMatrix& a, const SignMatrix& b) = default;

private:
    int rows_;
    int cols_;
    std::vector<std::int8_t> a_;
};

// Elementwise product of two ±1 columns. Builds interaction columns; the
// mean column is the product of the pivot column with itself.
SignCol schur_product(const SignCol& a, const SignCol& b);

bool is_balanced(const SignCol& c);
bool first_column_all_ones(const SignMatrix& m);

// Whole-matrix negation.
SignMatrix negated(const SignMatrix& m);

// Negate the stated rows/columns (set semantics: duplicates collapse).
// |det| of a square matrix is preserved.
SignMatrix negate_rows(const SignMatrix& m, const std::vector<int>& rows);
SignMatrix negate_cols(const SignMatrix& m, const std::vector<int>& cols);

// Block concatenation, side by side / stacked.
SignMatrix hblock(const SignMatrix& a, const SignMatrix& b);
SignMatrix vblock(const SignMatrix& a, const SignMatrix& b);

SignMatrix transpose(const SignMatrix& m);

// Column/row vectors as single-column/-row matrices, for block assembly.
SignMatrix col_matrix(const SignCol& c);
SignMatrix row_matrix(const SignCol& c);

} // namespace dopt
