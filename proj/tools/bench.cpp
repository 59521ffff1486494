// Times the serial reference against the OpenMP kernels for the three
// data-parallel stages: character table cells, Omega entries, K- columns.

#include <chrono>
#include <cstdio>
#include <string>

#include "kostka/exec.hpp"
#include "kostka/limit_kostka.hpp"

using namespace kostka;

namespace {

template <typename Fn>
double time_ms(Fn&& fn, int reps) {
    double best = 1e100;
    for (int r = 0; r < reps; ++r) {
        const auto start = std::chrono::steady_clock::now();
        fn();
        const auto stop = std::chrono::steady_clock::now();
        best = std::min(best,
                        std::chrono::duration<double, std::milli>(stop - start).count());
    }
    return best;
}

void report(const char* name, double serial_ms, double parallel_ms) {
    std::printf("%-28s %10.1f ms %10.1f ms %8.2fx\n", name, serial_ms, parallel_ms,
                serial_ms / parallel_ms);
}

} // namespace

int main(int argc, char** argv) {
    int reps = 3;
    if (argc > 1) reps = std::max(1, std::atoi(argv[1]));
    std::printf("threads available: %d, best of %d runs\n", max_threads(), reps);
    std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "openmp", "speedup");

    report("chartable 4 3",
           time_ms([] { character_table(4, 3, Exec::serial); }, reps),
           time_ms([] { character_table(4, 3, Exec::parallel); }, reps));

    {
        const CharacterTable t32 = character_table(3, 2);
        report("omega 3 2",
               time_ms([&] { omega_matrix(t32, Exec::serial); }, reps),
               time_ms([&] { omega_matrix(t32, Exec::parallel); }, reps));
        const CharacterTable t23 = character_table(2, 3);
        report("omega 2 3",
               time_ms([&] { omega_matrix(t23, Exec::serial); }, reps),
               time_ms([&] { omega_matrix(t23, Exec::parallel); }, reps));
    }

    report("kminus demazure 3 2",
           time_ms([] { kminus_demazure(3, 2, 3, Exec::serial); }, reps),
           time_ms([] { kminus_demazure(3, 2, 3, Exec::parallel); }, reps));

    return 0;
}
