// Compares the serial reference search kernels against the threaded ones and
// checks that both return identical records.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "dopt/theta.hpp"

namespace {

template <typename F>
double time_ms(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

bool same(const dopt::MaxDetRecord& a, const dopt::MaxDetRecord& b) {
    return a.order == b.order && a.theta == b.theta && a.witness == b.witness &&
           a.provenance == b.provenance;
}

} // namespace

int main(int argc, char** argv) {
    const int k_exh = argc > 1 ? std::atoi(argv[1]) : 6;
    const int k_hc = argc > 2 ? std::atoi(argv[2]) : 12;
    const int restarts = argc > 3 ? std::atoi(argv[3]) : 64;

#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif

    dopt::MaxDetRecord rs{0, 0, dopt::SignMatrix(1, 1), dopt::Provenance::exhaustive};
    dopt::MaxDetRecord rp = rs;
    const double t_serial = time_ms([&] { rs = dopt::theta_exhaustive_serial(k_exh); });
    const double t_par = time_ms([&] { rp = dopt::theta_exhaustive(k_exh); });
    std::printf("exhaustive k=%d: serial %.1f ms, parallel %.1f ms, speedup %.2fx, identical %s\n",
                k_exh, t_serial, t_par, t_serial / t_par, same(rs, rp) ? "yes" : "NO");

    const double h_serial =
        time_ms([&] { rs = dopt::theta_hillclimb_serial(k_hc, restarts, dopt::kDefaultSeed); });
    const double h_par =
        time_ms([&] { rp = dopt::theta_hillclimb(k_hc, restarts, dopt::kDefaultSeed); });
    std::printf("hillclimb k=%d restarts=%d: serial %.1f ms, parallel %.1f ms, speedup %.2fx, identical %s\n",
                k_hc, restarts, h_serial, h_par, h_serial / h_par, same(rs, rp) ? "yes" : "NO");

    if (!same(rs, rp)) return 1;
    return 0;
}
