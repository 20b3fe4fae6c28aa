// Times each property suite serial vs OpenMP-sharded on one window and
// checks that both runs produce the same report. --check exits nonzero on
// any serial/parallel mismatch, which the test suite relies on.

#include <cstdio>
#include <cstring>
#include <string>

#include "mseg/oracle.hpp"

#ifdef MSEG_HAVE_OPENMP
#include <omp.h>
#endif

int main(int argc, char** argv) {
  mseg::Window w = mseg::Window::acceptance();
  bool check = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--window") == 0 && i + 1 < argc) {
      w = mseg::window_from_string(argv[++i]);
    } else if (std::strcmp(argv[i], "--check") == 0) {
      check = true;
    } else {
      std::fprintf(stderr, "usage: mseg-bench [--window lo:hi:maxseg:maxlen] [--check]\n");
      return 2;
    }
  }

#ifdef MSEG_HAVE_OPENMP
  std::printf("window %s, %d threads\n", w.describe().c_str(), omp_get_max_threads());
#else
  std::printf("window %s, OpenMP unavailable\n", w.describe().c_str());
#endif
  std::printf("%-12s %12s %12s %12s %8s %6s\n", "suite", "checked", "serial ms", "parallel ms",
              "speedup", "same");

  bool all_same = true;
  for (const auto& id : mseg::suite_names()) {
    mseg::Report serial = mseg::run_suite(id, w, {false, false});
    mseg::Report parallel = mseg::run_suite(id, w, {true, false});
    bool same = serial.checked == parallel.checked && serial.violations == parallel.violations;
    all_same = all_same && same;
    std::printf("%-12s %12lld %12.1f %12.1f %7.2fx %6s\n", id.c_str(), serial.checked,
                serial.wall_ms, parallel.wall_ms,
                parallel.wall_ms > 0 ? serial.wall_ms / parallel.wall_ms : 0.0,
                same ? "yes" : "NO");
  }
  if (check && !all_same) {
    std::fprintf(stderr, "serial and parallel reports differ\n");
    return 1;
  }
  return 0;
}
