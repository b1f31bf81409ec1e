#include "dopt/sign_matrix.hpp"

#include <algorithm>
#include <string>

namespace dopt {

namespace {

std::int8_t checked_entry(int v) {
    if (v != 1 && v != -1)
        throw DimensionError("matrix entry must be -1 or +1, got " + std::to_string(v));
    return static_cast<std::int8_t>(v);
}

} // namespace

SignMatrix::SignMatrix(int rows, int cols, int fill)
    : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1)
        throw DimensionError("matrix dimensions must be positive");
    a_.assign(static_cast<std::size_t>(rows) * cols, checked_entry(fill));
}

SignMatrix SignMatrix::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
    std::vector<std::vector<int>> v;
    v.reserve(rows.size());
    for (const auto& r : rows) v.emplace_back(r);
    return from_rows(v);
}

SignMatrix SignMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
    if (rows.empty() || rows.front().empty())
        throw DimensionError("matrix dimensions must be positive");
    SignMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
    for (int i = 0; i < m.rows_; ++i) {
        if (static_cast<int>(rows[i].size()) != m.cols_)
            throw DimensionError("ragged row lengths");
        for (int j = 0; j < m.cols_; ++j)
            m.a_[static_cast<std::size_t>(i) * m.cols_ + j] = checked_entry(rows[i][j]);
    }
    return m;
}

void SignMatrix::set(int i, int j, int v) {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw IndexError("entry (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
    a_[static_cast<std::size_t>(i) * cols_ + j] = checked_entry(v);
}

SignCol SignMatrix::row(int i) const {
    if (i < 0 || i >= rows_) throw IndexError("row " + std::to_string(i) + " out of range");
    return SignCol(a_.begin() + static_cast<std::size_t>(i) * cols_,
                   a_.begin() + static_cast<std::size_t>(i + 1) * cols_);
}

SignCol SignMatrix::col(int j) const {
    if (j < 0 || j >= cols_) throw IndexError("column " + std::to_string(j) + " out of range");
    SignCol c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = a_[static_cast<std::size_t>(i) * cols_ + j];
    return c;
}

SignCol schur_product(const SignCol& a, const SignCol& b) {
    if (a.size() != b.size())
        throw DimensionError("schur product length mismatch: " + std::to_string(a.size()) +
                             " vs " + std::to_string(b.size()));
    SignCol r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = static_cast<std::int8_t>(a[i] * b[i]);
    return r;
}

bool is_balanced(const SignCol& c) {
    long sum = 0;
    for (auto v : c) sum += v;
    return sum == 0;
}

bool first_column_all_ones(const SignMatrix& m) {
    for (int i = 0; i < m.rows(); ++i)
        if (m(i, 0) != 1) return false;
    return true;
}

SignMatrix negated(const SignMatrix& m) {
    SignMatrix r = m;
    for (int i = 0; i < r.rows(); ++i)
        for (int j = 0; j < r.cols(); ++j)
            r.set(i, j, -m(i, j));
    return r;
}

namespace {

std::vector<int> unique_indices(const std::vector<int>& idx, int limit, const char* what) {
    std::vector<int> v = idx;
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    for (int i : v)
        if (i < 0 || i >= limit)
            throw IndexError(std::string(what) + " index " + std::to_string(i) + " out of range");
    return v;
}

} // namespace

SignMatrix negate_rows(const SignMatrix& m, const std::vector<int>& rows) {
    SignMatrix r = m;
    for (int i : unique_indices(rows, m.rows(), "row"))
        for (int j = 0; j < m.cols(); ++j) r.set(i, j, -m(i, j));
    return r;
}

SignMatrix negate_cols(const SignMatrix& m, const std::vector<int>& cols) {
    SignMatrix r = m;
    for (int j : unique_indices(cols, m.cols(), "column"))
        for (int i = 0; i < m.rows(); ++i) r.set(i, j, -m(i, j));
    return r;
}

SignMatrix hblock(const SignMatrix& a, const SignMatrix& b) {
    if (a.rows() != b.rows())
        throw DimensionError("hblock row mismatch: " + std::to_string(a.rows()) + " vs " +
                             std::to_string(b.rows()));
    SignMatrix r(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) r.set(i, j, a(i, j));
        for (int j = 0; j < b.cols(); ++j) r.set(i, a.cols() + j, b(i, j));
    }
    return r;
}

SignMatrix vblock(const SignMatrix& a, const SignMatrix& b) {
    if (a.cols() != b.cols())
        throw DimensionError("vblock column mismatch: " + std::to_string(a.cols()) + " vs " +
                             std::to_string(b.cols()));
    SignMatrix r(a.rows() + b.rows(), a.cols());
    for (int j = 0; j < a.cols(); ++j) {
        for (int i = 0; i < a.rows(); ++i) r.set(i, j, a(i, j));
        for (int i = 0; i < b.rows(); ++i) r.set(a.rows() + i, j, b(i, j));
    }
    return r;
}

SignMatrix transpose(const SignMatrix& m) {
    SignMatrix r(m.cols(), m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r.set(j, i, m(i, j));
    return r;
}

SignMatrix col_matrix(const SignCol& c) {
    SignMatrix r(static_cast<int>(c.size()), 1);
    for (std::size_t i = 0; i < c.size(); ++i) r.set(static_cast<int>(i), 0, c[i]);
    return r;
}

SignMatrix row_matrix(const SignCol& c) {
    SignMatrix r(1, static_cast<int>(c.size()));
    for (std::size_t i = 0; i < c.size(); ++i) r.set(0, static_cast<int>(i), c[i]);
    return r;
}

} // namespace dopt
