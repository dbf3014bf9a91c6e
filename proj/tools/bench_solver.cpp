// Micro-benchmark for the explicit-state engine: builds full length slices of
// a built-in game and times the serial reference implementations against the
// OpenMP kernels, for both arena exploration and attractor solving. Results
// from both paths are asserted identical.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "rsg/arena.hpp"
#include "rsg/benchmarks.hpp"
#include "rsg/errors.hpp"

namespace {

double time_of(const std::function<void()>& body) {
    auto start = std::chrono::steady_clock::now();
    body();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

} // namespace

int main(int argc, char** argv) {
    std::string name = argc > 1 ? argv[1] : "control-unit";
    int max_length = argc > 2 ? std::atoi(argv[2]) : 12;
    std::size_t budget = argc > 3 ? static_cast<std::size_t>(std::atoll(argv[3])) : 2'000'000;

#ifdef _OPENMP
    std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "threads: 1 (compiled without OpenMP)\n";
#endif
    std::cout << "game: " << name << "\n";
    std::cout << "  n |  vertices |     edges | explore-ser | explore-omp | solve-ser | "
                 "solve-omp | speedup\n";

    rsg::RegularSafetyGame game = rsg::build_benchmark(name);
    for (int n = 0; n <= max_length; ++n) {
        try {
            rsg::FiniteArena serial_arena;
            rsg::FiniteArena parallel_arena;
            double t_explore_serial =
                time_of([&] { serial_arena = rsg::slice_arena_serial(game, n, budget); });
            double t_explore_parallel =
                time_of([&] { parallel_arena = rsg::slice_arena(game, n, budget); });
            if (serial_arena.vertices != parallel_arena.vertices ||
                serial_arena.edges != parallel_arena.edges) {
                std::cerr << "explorer mismatch at n=" << n << "\n";
                return 1;
            }
            if (serial_arena.size() == 0) continue;

            std::vector<std::uint8_t> serial_win, parallel_win;
            double t_solve_serial =
                time_of([&] { serial_win = rsg::solve_finite_serial(serial_arena); });
            double t_solve_parallel =
                time_of([&] { parallel_win = rsg::solve_finite_parallel(serial_arena); });
            if (serial_win != parallel_win) {
                std::cerr << "solver mismatch at n=" << n << "\n";
                return 1;
            }

            std::printf("%3d | %9zu | %9zu | %9.4fs | %9.4fs | %8.4fs | %8.4fs | %5.2fx\n", n,
                        serial_arena.size(), serial_arena.edge_count(), t_explore_serial,
                        t_explore_parallel, t_solve_serial, t_solve_parallel,
                        (t_explore_serial + t_solve_serial) /
                            std::max(1e-9, t_explore_parallel + t_solve_parallel));
        } catch (const rsg::BudgetError&) {
            std::cout << "  n=" << n << ": slice exceeds budget, stopping\n";
            break;
        }
    }
    return 0;
}
