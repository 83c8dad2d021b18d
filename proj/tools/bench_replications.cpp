// Compares the serial and OpenMP replication runners on the default scenario
// and checks that they produce identical summaries.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "caresim/config.hpp"
#include "caresim/replication.hpp"

int main(int argc, char** argv) {
  int replications = 100;
  int days = 30;
  if (argc > 1) replications = std::stoi(argv[1]);
  if (argc > 2) days = std::stoi(argv[2]);

  caresim::Scenario scenario = caresim::default_experiment().scenario;
  scenario.replications = replications;
  scenario.horizon_days = days;

  using clock = std::chrono::steady_clock;

  const auto t0 = clock::now();
  const auto serial = caresim::run_replications_serial(scenario);
  const auto t1 = clock::now();
  const auto parallel = caresim::run_replications(scenario);
  const auto t2 = clock::now();

  for (std::size_t i = 0; i < serial.size(); ++i) {
    if (!caresim::identical(serial[i], parallel[i])) {
      std::fprintf(stderr, "mismatch at replication %zu\n", i);
      return 1;
    }
  }

  const double serial_s = std::chrono::duration<double>(t1 - t0).count();
  const double parallel_s = std::chrono::duration<double>(t2 - t1).count();
  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::printf("%d replications x %d days\n", replications, days);
  std::printf("serial   %8.3f s  (%.1f ms/replication)\n", serial_s,
              1e3 * serial_s / replications);
  std::printf("parallel %8.3f s  (%d threads, speedup %.2fx)\n", parallel_s,
              threads, serial_s / parallel_s);
  std::printf("runners agree on all %zu summaries\n", serial.size());
  return 0;
}
