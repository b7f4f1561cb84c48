// Benchmark: the serial reference enumerator against the OpenMP
// prefix-split counting kernel and the recurrence, on growing n. The two
// enumeration counts must agree exactly or the run aborts.

#include <chrono>
#include <iomanip>
#include <iostream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>

#include "ncolor/constraint.hpp"
#include "ncolor/enumerate.hpp"
#include "ncolor/recurrence.hpp"

namespace {

double ms_since(std::chrono::steady_clock::time_point start) {
    const auto elapsed = std::chrono::steady_clock::now() - start;
    return std::chrono::duration<double, std::milli>(elapsed).count();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"compare serial and parallel enumeration counts"};
    int min_n = 14;
    int max_n = 20;
    std::string constraint_text = "all";
    app.add_option("--min-n", min_n, "first n to time");
    app.add_option("--max-n", max_n, "last n to time");
    app.add_option("--constraint", constraint_text, "constraint text");
    CLI11_PARSE(app, argc, argv);

    ncolor::ColorConstraint constraint;
    try {
        constraint = ncolor::ColorConstraint::parse(constraint_text);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

#ifdef _OPENMP
    std::cout << "threads: " << omp_get_max_threads() << '\n';
#else
    std::cout << "threads: 1 (built without OpenMP)\n";
#endif
    std::cout << "constraint: " << constraint.describe() << "\n\n";
    std::cout << std::setw(4) << "n" << std::setw(16) << "count" << std::setw(12) << "serial ms"
              << std::setw(12) << "omp ms" << std::setw(10) << "speedup" << std::setw(12)
              << "rec ms" << '\n';

    for (int n = min_n; n <= max_n; ++n) {
        const ncolor::EnumerationRequest req{n, constraint, std::nullopt, n};

        auto start = std::chrono::steady_clock::now();
        const ncolor::BigInt serial = ncolor::count_colored(req);
        const double serial_ms = ms_since(start);

        start = std::chrono::steady_clock::now();
        const ncolor::BigInt parallel = ncolor::count_colored_parallel(req);
        const double parallel_ms = ms_since(start);

        if (serial != parallel) {
            std::cerr << "MISMATCH at n=" << n << ": serial=" << serial
                      << " parallel=" << parallel << '\n';
            return 1;
        }

        start = std::chrono::steady_clock::now();
        const auto rec = ncolor::recurrence_for(constraint, n);
        const double rec_ms = rec ? ms_since(start) : -1.0;
        if (rec && rec->values.back() != serial) {
            std::cerr << "MISMATCH at n=" << n << ": enumeration=" << serial
                      << " recurrence=" << rec->values.back() << '\n';
            return 1;
        }

        std::cout << std::setw(4) << n << std::setw(16) << serial.str() << std::fixed
                  << std::setprecision(2) << std::setw(12) << serial_ms << std::setw(12)
                  << parallel_ms << std::setprecision(2) << std::setw(10)
                  << (parallel_ms > 0 ? serial_ms / parallel_ms : 0.0) << std::setw(12) << rec_ms
                  << '\n';
    }
    return 0;
}
