#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dopt/exact_int.hpp"
#include "dopt/sign_matrix.hpp"

namespace dopt {

// How a maximal-determinant record was obtained. Heuristic records carry a
// lower bound, never an optimality claim; the distinction is part of the
// type and serialized with it.
enum class Provenance { exhaustive, heuristic_lower_bound, catalog };

std::string to_string(Provenance p);

// Order k, the maximal (or best-known) |det| over nonsingular ±1 matrices of
// order k with all-ones first column, and a witness attaining it.
struct MaxDetRecord {
    int order;
    ExactInt theta;
    SignMatrix witness;
    Provenance provenance;
};

// Exhaustive ceiling: 2^((k-1)^2) candidates at k = 6 is ~3.4e7 determinants,
// minutes at desk scale; k = 7 would be 2^36.
inline constexpr int kMaxExhaustiveOrder = 6;
inline constexpr int kMaxSearchOrder = 40;

// Default seed for reproducible CLI runs.
inline constexpr std::uint64_t kDefaultSeed = 1729;

// Exact theta by enumeration. Only the first column is fixed by the matrix
// class; the first row is additionally fixed to +1 by column-negation
// symmetry, which preserves both first-column membership and |det|, cutting
// the space from 2^(k(k-1)) to 2^((k-1)^2) states. The same row-negation
// symmetry makes this restricted maximum equal the unrestricted ±1 maximum.
// Work is partitioned across threads by first-free-row prefix; the result is
// bitwise identical to the serial run (max theta, smallest enumeration index
// on ties).
MaxDetRecord theta_exhaustive(int k);
MaxDetRecord theta_exhaustive_serial(int k);

// Single-entry-flip local search from random normalized starts, restarted
// `restarts` times. Deterministic for fixed (k, restarts, seed): candidate
// flips are scanned in row-major order and the first strict improvement is
// taken; restarts use independent seed streams and are merged by (max theta,
// smallest restart index), so the threaded run matches the serial one
// bitwise. Result is a lower bound witness, never an optimality claim.
MaxDetRecord theta_hillclimb(int k, int restarts, std::uint64_t seed);
MaxDetRecord theta_hillclimb_serial(int k, int restarts, std::uint64_t seed);

// Embedded records: k in {1..6} from enumeration, k = 15 (historical
// maximal-determinant matrix, normalized) and k = 16 (Sylvester).
MaxDetRecord catalog_theta(int k);
std::vector<int> catalog_orders();

// {order, theta (decimal string), provenance, witness (glyph text)}.
std::string to_json(const MaxDetRecord& rec);

namespace catalog {

// Order-15 maximal-determinant matrix as historically published (rows not
// sign-normalized), its normalization with all-ones first column, and the
// order-16 Sylvester matrix.
const SignMatrix& order15_witness_unnormalized();
const SignMatrix& order15_witness();
const SignMatrix& order16_witness();

} // namespace catalog

} // namespace dopt
