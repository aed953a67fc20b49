#include <chrono>
#include <cstdio>

#include "CLI11.hpp"
#include "qgf/dualform.hpp"
#include "qgf/matrep.hpp"

using namespace qgf;

namespace {

template <typename F>
double time_ms(F&& f, int repeat) {
  auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < repeat; ++i) f();
  auto dt = std::chrono::steady_clock::now() - t0;
  return std::chrono::duration<double, std::milli>(dt).count() / repeat;
}

}  // namespace

// Compares the OpenMP kernels against their serial reference on the three
// embarrassingly parallel workloads, checking that both produce identical
// results while timing them.
int main(int argc, char** argv) {
  CLI::App app{"qgf-bench: serial vs parallel verification kernels"};
  int cutoff = 4, repeat = 3;
  app.add_option("--cutoff", cutoff, "structure tensor cutoff")->default_val(4);
  app.add_option("--repeat", repeat, "repetitions per measurement")->default_val(3);
  CLI11_PARSE(app, argc, argv);

  std::printf("%-28s %12s %12s %9s\n", "kernel", "serial (ms)", "openmp (ms)", "speedup");

  {
    auto serial = compute_structure_tensor(cutoff, false);
    auto parallel = compute_structure_tensor(cutoff, true);
    if (!(serial.entries() == parallel.entries())) {
      std::fprintf(stderr, "structure tensor: serial and parallel results differ!\n");
      return 1;
    }
    double ts = time_ms([&] { compute_structure_tensor(cutoff, false); }, repeat);
    double tp = time_ms([&] { compute_structure_tensor(cutoff, true); }, repeat);
    std::printf("%-28s %12.2f %12.2f %8.2fx\n", "structure-tensor", ts, tp, ts / tp);
  }
  {
    auto F = compute_structure_tensor(cutoff, true);
    if (!verify_dual_product(F, false).ok() || !verify_dual_product(F, true).ok()) {
      std::fprintf(stderr, "dual product verification failed!\n");
      return 1;
    }
    double ts = time_ms([&] { verify_dual_product(F, false); }, repeat);
    double tp = time_ms([&] { verify_dual_product(F, true); }, repeat);
    std::printf("%-28s %12.2f %12.2f %8.2fx\n", "dual-product", ts, tp, ts / tp);
  }
  {
    auto T = group_matrix_funw();
    auto R = frt_R_matrix();
    if (!check_frt(R, T, false).pass || !check_frt(R, T, true).pass) {
      std::fprintf(stderr, "FRT verification failed!\n");
      return 1;
    }
    double ts = time_ms([&] { check_frt(R, T, false); }, repeat);
    double tp = time_ms([&] { check_frt(R, T, true); }, repeat);
    std::printf("%-28s %12.2f %12.2f %8.2fx\n", "frt-exchange", ts, tp, ts / tp);
  }
  return 0;
}
