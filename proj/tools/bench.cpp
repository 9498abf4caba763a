// Timing harness comparing the serial replication loop against the OpenMP one,
// and the serial grid oracle against its parallel version. The two sides must
// agree exactly; speedup is reported per kernel.

#include <chrono>
#include <cstdio>
#include <string>

#include "ebai/config.hpp"
#include "ebai/harness.hpp"
#include "ebai/oracle.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

template <class Fn>
double time_s(Fn&& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    int reps = 200;
    int threads = 0;
    for (int i = 1; i + 1 < argc; i += 2) {
        const std::string key = argv[i];
        if (key == "--reps") reps = std::stoi(argv[i + 1]);
        if (key == "--threads") threads = std::stoi(argv[i + 1]);
    }
#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
    std::printf("openmp: %d threads\n", threads > 0 ? threads : omp_get_max_threads());
#else
    std::printf("openmp: not compiled in, both columns run serial\n");
#endif

    ebai::ExperimentConfig config = ebai::preset("mu1");
    config.n_reps = reps;
    config.threads = threads;

    ebai::ExperimentReport serial_rep, parallel_rep;
    const double mc_serial =
        time_s([&] { serial_rep = ebai::run_experiment(config, ebai::ExecMode::Serial); });
    const double mc_parallel = time_s(
        [&] { parallel_rep = ebai::run_experiment(config, ebai::ExecMode::Parallel); });
    const bool mc_equal = serial_rep.mean_tau == parallel_rep.mean_tau &&
                          serial_rep.error_rate == parallel_rep.error_rate &&
                          serial_rep.mean_proportions == parallel_rep.mean_proportions;

    ebai::BanditInstance k3{ebai::Family::bernoulli(), {0.3, 0.5, 0.6}, 0.1};
    ebai::BruteForceResult bf_serial, bf_parallel;
    const double grid_serial =
        time_s([&] { bf_serial = ebai::brute_force_T_serial(k3, 160, 160); });
    const double grid_parallel =
        time_s([&] { bf_parallel = ebai::brute_force_T(k3, 160, 160); });
    const bool grid_equal = bf_serial.t_star == bf_parallel.t_star;

    std::printf("%-28s %10s %10s %8s %6s\n", "kernel", "serial[s]", "openmp[s]",
                "speedup", "equal");
    std::printf("%-28s %10.3f %10.3f %8.2f %6s\n", "mc_replications(mu1)", mc_serial,
                mc_parallel, mc_serial / mc_parallel, mc_equal ? "yes" : "NO");
    std::printf("%-28s %10.3f %10.3f %8.2f %6s\n", "brute_force_T(K=3)", grid_serial,
                grid_parallel, grid_serial / grid_parallel, grid_equal ? "yes" : "NO");
    return (mc_equal && grid_equal) ? 0 : 1;
}
