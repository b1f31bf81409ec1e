#include "dopt/hadamard.hpp"

#include <string>

namespace dopt {

SignMatrix sylvester(int exponent) {
    if (exponent < 0 || exponent > kMaxSylvesterExponent)
        throw OrderError("sylvester exponent must be in [0, " +
                         std::to_string(kMaxSylvesterExponent) + "], got " +
                         std::to_string(exponent));
    SignMatrix h(1, 1, +1);
    for (int m = 0; m < exponent; ++m)
        h = vblock(hblock(h, h), hblock(h, negated(h)));
    return h;
}

bool is_hadamard(const SignMatrix& h) {
    if (!h.square())
        throw DimensionError("hadamard check requires a square matrix");
    const int n = h.rows();
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            long dot = 0;
            for (int t = 0; t < n; ++t) dot += h(i, t) * h(j, t);
            if (dot != (i == j ? n : 0)) return false;
        }
    }
    return true;
}

} // namespace dopt
