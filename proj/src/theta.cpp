#include "dopt/theta.hpp"

#include <random>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <nlohmann/json.hpp>

#include "dopt/determinant.hpp"
#include "dopt/formats.hpp"
#include "catalog_internal.hpp"

namespace dopt {

std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::exhaustive: return "exhaustive";
        case Provenance::heuristic_lower_bound: return "heuristic-lower-bound";
        case Provenance::catalog: return "catalog";
    }
    return "?";
}

namespace {

void check_search_order(int k, int cap, const char* what) {
    if (k < 1 || k > cap)
        throw OrderError(std::string(what) + " order must be in [1, " + std::to_string(cap) +
                         "], got " + std::to_string(k));
}

// Candidate layout for the exhaustive search: first row and column pinned to
// +1, the (k-1)x(k-1) free block driven by the bits of an enumeration index,
// row-major, bit set -> -1.
void fill_free_block(SignMatrix& m, int k, std::uint64_t s) {
    const int f = k - 1;
    for (int i = 1; i < k; ++i)
        for (int j = 1; j < k; ++j)
            m.set(i, j, ((s >> ((i - 1) * f + (j - 1))) & 1u) ? -1 : +1);
}

struct ExhaustiveBest {
    std::int64_t theta = -1;
    std::uint64_t index = 0;
};

// Scan indices [begin, end) of the 2^(f*f) space; buf is a reusable k*k
// row-major scratch block with first row/column already +1.
void scan_range(int k, std::uint64_t begin, std::uint64_t end, std::int8_t* buf,
                ExhaustiveBest& best) {
    const int f = k - 1;
    for (std::uint64_t s = begin; s < end; ++s) {
        for (int i = 1; i < k; ++i)
            for (int j = 1; j < k; ++j)
                buf[i * k + j] = ((s >> ((i - 1) * f + (j - 1))) & 1u) ? -1 : +1;
        std::int64_t d = detail::det_rowmajor_i64(buf, k);
        if (d < 0) d = -d;
        if (d > best.theta) {
            best.theta = d;
            best.index = s;
        }
    }
}

MaxDetRecord record_from_index(int k, const ExhaustiveBest& best, Provenance prov) {
    SignMatrix w(k, k, +1);
    fill_free_block(w, k, best.index);
    return MaxDetRecord{k, ExactInt(best.theta), w, prov};
}

} // namespace

MaxDetRecord theta_exhaustive_serial(int k) {
    check_search_order(k, kMaxExhaustiveOrder, "exhaustive");
    if (k == 1) return MaxDetRecord{1, 1, SignMatrix(1, 1, +1), Provenance::exhaustive};
    const int f = k - 1;
    const std::uint64_t total = 1ull << (f * f);
    std::vector<std::int8_t> buf(static_cast<std::size_t>(k) * k, +1);
    ExhaustiveBest best;
    scan_range(k, 0, total, buf.data(), best);
    return record_from_index(k, best, Provenance::exhaustive);
}

MaxDetRecord theta_exhaustive(int k) {
    check_search_order(k, kMaxExhaustiveOrder, "exhaustive");
    if (k == 1) return MaxDetRecord{1, 1, SignMatrix(1, 1, +1), Provenance::exhaustive};
    const int f = k - 1;
    const std::uint64_t suffixes = 1ull << (f * (f - 1));
    ExhaustiveBest best;

    // Partition by the first free row's bit pattern (the low f bits of the
    // enumeration index); merge below is order-independent, so the result
    // does not depend on thread count or schedule.
#ifdef _OPENMP
#pragma omp parallel
#endif
    {
        std::vector<std::int8_t> buf(static_cast<std::size_t>(k) * k, +1);
        ExhaustiveBest local;
#ifdef _OPENMP
#pragma omp for schedule(dynamic)
#endif
        for (std::int64_t prefix = 0; prefix < (1ll << f); ++prefix) {
            for (std::uint64_t hi = 0; hi < suffixes; ++hi) {
                const std::uint64_t s = (hi << f) | static_cast<std::uint64_t>(prefix);
                for (int i = 1; i < k; ++i)
                    for (int j = 1; j < k; ++j)
                        buf[i * k + j] = ((s >> ((i - 1) * f + (j - 1))) & 1u) ? -1 : +1;
                std::int64_t d = detail::det_rowmajor_i64(buf.data(), k);
                if (d < 0) d = -d;
                if (d > local.theta || (d == local.theta && s < local.index)) {
                    local.theta = d;
                    local.index = s;
                }
            }
        }
#ifdef _OPENMP
#pragma omp critical
#endif
        {
            if (local.theta > best.theta ||
                (local.theta == best.theta && local.index < best.index))
                best = local;
        }
    }
    return record_from_index(k, best, Provenance::exhaustive);
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

ExactInt abs_det(const SignMatrix& m) {
    ExactInt d = determinant_exact(m);
    return d < 0 ? ExactInt(-d) : d;
}

// One full local search from the given restart's start matrix. Neighborhood
// is single entry flips outside the first column; the first strictly
// improving flip in row-major scan order is taken and the scan restarts.
ExactInt climb_one(int k, std::uint64_t seed, std::uint64_t restart, SignMatrix& m) {
    std::mt19937_64 rng(splitmix64(seed ^ (0x9E3779B97F4A7C15ull * (restart + 1))));
    m = SignMatrix(k, k, +1);
    for (int i = 0; i < k; ++i)
        for (int j = 1; j < k; ++j)
            m.set(i, j, (rng() & 1u) ? -1 : +1);

    ExactInt best = abs_det(m);
    bool improved = true;
    while (improved) {
        improved = false;
        for (int i = 0; i < k && !improved; ++i) {
            for (int j = 1; j < k && !improved; ++j) {
                m.set(i, j, -m(i, j));
                ExactInt d = abs_det(m);
                if (d > best) {
                    best = d;
                    improved = true;
                } else {
                    m.set(i, j, -m(i, j));
                }
            }
        }
    }
    return best;
}

} // namespace

MaxDetRecord theta_hillclimb_serial(int k, int restarts, std::uint64_t seed) {
    check_search_order(k, kMaxSearchOrder, "hillclimb");
    if (restarts < 1) throw Error("restarts must be >= 1");
    ExactInt best = -1;
    std::uint64_t best_restart = 0;
    SignMatrix best_w(k, k, +1);
    SignMatrix w(k, k, +1);
    for (int r = 0; r < restarts; ++r) {
        ExactInt d = climb_one(k, seed, static_cast<std::uint64_t>(r), w);
        if (d > best) {
            best = d;
            best_restart = static_cast<std::uint64_t>(r);
            best_w = w;
        }
    }
    (void)best_restart;
    return MaxDetRecord{k, best, best_w, Provenance::heuristic_lower_bound};
}

MaxDetRecord theta_hillclimb(int k, int restarts, std::uint64_t seed) {
    check_search_order(k, kMaxSearchOrder, "hillclimb");
    if (restarts < 1) throw Error("restarts must be >= 1");
    ExactInt best = -1;
    std::uint64_t best_restart = 0;
    SignMatrix best_w(k, k, +1);

    // Restart indices are independent streams; merge by (max theta, smallest
    // restart index) so the outcome matches the serial loop bitwise.
#ifdef _OPENMP
#pragma omp parallel
#endif
    {
        ExactInt local_best = -1;
        std::uint64_t local_restart = 0;
        SignMatrix local_w(k, k, +1);
        SignMatrix w(k, k, +1);
#ifdef _OPENMP
#pragma omp for schedule(dynamic)
#endif
        for (int r = 0; r < restarts; ++r) {
            ExactInt d = climb_one(k, seed, static_cast<std::uint64_t>(r), w);
            if (d > local_best ||
                (d == local_best && static_cast<std::uint64_t>(r) < local_restart)) {
                local_best = d;
                local_restart = static_cast<std::uint64_t>(r);
                local_w = w;
            }
        }
#ifdef _OPENMP
#pragma omp critical
#endif
        {
            if (local_best > best || (local_best == best && local_restart < best_restart)) {
                best = local_best;
                best_restart = local_restart;
                best_w = local_w;
            }
        }
    }
    return MaxDetRecord{k, best, best_w, Provenance::heuristic_lower_bound};
}

std::vector<int> catalog_orders() { return {1, 2, 3, 4, 5, 6, 15, 16}; }

MaxDetRecord catalog_theta(int k) {
    switch (k) {
        case 1: return {1, ExactInt(1), catalog::small_witness(1), Provenance::catalog};
        case 2: return {2, ExactInt(2), catalog::small_witness(2), Provenance::catalog};
        case 3: return {3, ExactInt(4), catalog::small_witness(3), Provenance::catalog};
        case 4: return {4, ExactInt(16), catalog::small_witness(4), Provenance::catalog};
        case 5: return {5, ExactInt(48), catalog::small_witness(5), Provenance::catalog};
        case 6: return {6, ExactInt(160), catalog::small_witness(6), Provenance::catalog};
        case 15:
            return {15, ExactInt(25515) * exact_pow2(14), catalog::order15_witness(),
                    Provenance::catalog};
        case 16:
            return {16, exact_pow2(32), catalog::order16_witness(), Provenance::catalog};
        default:
            throw CatalogError("order " + std::to_string(k) + " not in catalog");
    }
}

std::string to_json(const MaxDetRecord& rec) {
    nlohmann::json j;
    j["order"] = rec.order;
    j["theta"] = to_decimal(rec.theta);
    j["provenance"] = to_string(rec.provenance);
    j["witness"] = to_glyph(rec.witness);
    return j.dump(2);
}

} // namespace dopt
