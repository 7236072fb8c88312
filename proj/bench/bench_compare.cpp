/* Compares the serial reference implementation of the per-n verification
 * kernels against the OpenMP version and reports wall times and speedups.
 *
 *   bench_compare [max_n_identity] [max_n_roundtrip]
 */

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "bressoud/verify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace bressoud;

namespace {

double seconds(const std::function<void()>& body) {
    const auto start = std::chrono::steady_clock::now();
    body();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void row(const char* name, double serial, double parallel, bool identical) {
    std::printf("%-28s %10.3f s %10.3f s %7.2fx  results %s\n", name, serial, parallel,
                serial / parallel, identical ? "identical" : "DIFFER");
}

} // namespace

int main(int argc, char** argv) {
    const int max_identity = argc > 1 ? std::atoi(argv[1]) : 50;
    const int max_roundtrip = argc > 2 ? std::atoi(argv[2]) : 40;
    const FamilyParams p{{3, 7}, 10, 5, 3, 0};

#ifdef _OPENMP
    std::printf("OpenMP enabled, %d threads available\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; the parallel entry points run serially\n");
#endif
    std::printf("%-28s %12s %12s %9s\n", "kernel", "serial", "parallel", "speedup");

    VerifyReport s1, p1;
    const double t_s1 = seconds([&] {
        s1 = verify_identity_serial(IdentityKind::A0barEqB0bar, p, 0, max_identity);
    });
    const double t_p1 = seconds([&] {
        p1 = verify_identity_parallel(IdentityKind::A0barEqB0bar, p, 0, max_identity);
    });
    row("equal-family counts", t_s1, t_p1, s1 == p1);

    VerifyReport s2, p2;
    const double t_s2 = seconds([&] {
        s2 = verify_identity_serial(IdentityKind::B0barEqProduct, p, 0, max_identity);
    });
    const double t_p2 = seconds([&] {
        p2 = verify_identity_parallel(IdentityKind::B0barEqProduct, p, 0, max_identity);
    });
    row("factorized product", t_s2, t_p2, s2 == p2);

    VerifyReport s3, p3;
    const double t_s3 = seconds([&] { s3 = roundtrip_check_serial(p, max_roundtrip); });
    const double t_p3 = seconds([&] { p3 = roundtrip_check_parallel(p, max_roundtrip); });
    row("round trip", t_s3, t_p3, s3 == p3);

    /* Dense workload: eta = 3 admits every residue, so the classical check
     * walks the full partition space. */
    const FamilyParams dense{{1, 2}, 3, 4, 2, 0};
    VerifyReport s4, p4;
    const double t_s4 = seconds([&] {
        s4 = verify_identity_serial(IdentityKind::AjEqBj, dense, 1, max_identity);
    });
    const double t_p4 = seconds([&] {
        p4 = verify_identity_parallel(IdentityKind::AjEqBj, dense, 1, max_identity);
    });
    row("classical identity (eta=3)", t_s4, t_p4, s4 == p4);

    const bool all_pass = s1.overall && s2.overall && s3.overall && s4.overall;
    std::printf("all kernels %s\n", all_pass ? "pass" : "FAIL");
    return all_pass && s1 == p1 && s2 == p2 && s3 == p3 && s4 == p4 ? 0 : 1;
}
