#pragma once

#include "dopt/sign_matrix.hpp"

namespace dopt::catalog {

// Frozen exhaustive-search winners for k = 1..6.
const SignMatrix& small_witness(int k);

} // namespace dopt::catalog
