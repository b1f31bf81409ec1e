#include "dopt/determinant.hpp"

#include <string>
#include <utility>
#include <vector>

namespace dopt {

namespace detail {

std::int64_t det_rowmajor_i64(const std::int8_t* m, int n) {
    std::int64_t a[kSmallDetMaxOrder][kSmallDetMaxOrder];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = m[i * n + j];

    std::int64_t prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) { p = i; break; }
            if (p < 0) return 0;
            for (int j = k; j < n; ++j) std::swap(a[k][j], a[p][j]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

namespace {

ExactInt det_wide(const SignMatrix& m) {
    const int n = m.rows();
    std::vector<WideInt> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * n + j] = m(i, j);

    auto at = [&](int i, int j) -> WideInt& { return a[static_cast<std::size_t>(i) * n + j]; };

    WideInt prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (at(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            for (int j = k; j < n; ++j) std::swap(at(k, j), at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                at(i, j) = (at(k, k) * at(i, j) - at(i, k) * at(k, j)) / prev;
        prev = at(k, k);
    }
    WideInt det = at(n - 1, n - 1);
    if (sign < 0) det = -det;
    return det.convert_to<ExactInt>();
}

} // namespace

} // namespace detail

ExactInt determinant_exact(const SignMatrix& m) {
    if (!m.square())
        throw DimensionError("determinant requires a square matrix, got " +
                             std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    const int n = m.rows();
    if (n > kMaxDetOrder)
        throw OrderError("order " + std::to_string(n) + " exceeds determinant engine cap " +
                         std::to_string(kMaxDetOrder));
    if (n <= detail::kSmallDetMaxOrder)
        return ExactInt(detail::det_rowmajor_i64(m.data(), n));
    try {
        return detail::det_wide(m);
    } catch (const std::overflow_error& e) {
        throw OverflowError(std::string("determinant intermediate overflow: ") + e.what());
    } catch (const std::range_error& e) {
        throw OverflowError(std::string("determinant result out of range: ") + e.what());
    }
}

} // namespace dopt
