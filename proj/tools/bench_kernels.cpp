// Serial vs OpenMP timings for the two search kernels.
//   bench_kernels [k_max] [tuple_len]

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include <omp.h>

#include "monopath/block.hpp"
#include "monopath/search.hpp"

using namespace monopath;

namespace {

template <class F>
double seconds(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    const int k_max = argc > 1 ? std::atoi(argv[1]) : 34;
    const int len = argc > 2 ? std::atoi(argv[2]) : 8;
    std::printf("threads %d\n", omp_get_max_threads());

    coefficient_bounds(k_max);  // shared table, built once
    std::printf("%-22s %10s %10s %8s %s\n", "kernel", "serial_s", "omp_s", "speedup", "same");
    for (int k = k_max - 4; k <= k_max; ++k) {
        BlockSolution a, b;
        double ts = seconds([&] { a = solve_block({k}, kDefaultBlockBudget, Exec::Serial); });
        double tp = seconds([&] { b = solve_block({k}, kDefaultBlockBudget, Exec::Parallel); });
        bool same = a.f == b.f && a.assignment == b.assignment;
        std::printf("solve_block k=%-9d %10.3f %10.3f %8.2f %s\n", k, ts, tp, ts / tp, same ? "yes" : "NO");
    }
    for (int conn = 1; conn <= 3; ++conn) {
        SearchSpec s;
        s.n = len;
        s.cls = TupleClass::Merged3Regular;
        s.connectivity = conn;
        ExtremalReport a, b;
        double ts = seconds([&] { a = find_extremal_serial(s); });
        double tp = seconds([&] { b = find_extremal(s); });
        bool same = a.max_total == b.max_total && a.witnesses == b.witnesses;
        std::printf("find_extremal conn=%-3d %10.3f %10.3f %8.2f %s\n", conn, ts, tp, ts / tp, same ? "yes" : "NO");
    }
    return 0;
}
