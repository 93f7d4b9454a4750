#include <chrono>
#include <cstdio>
#include <functional>

#include <omp.h>

#include "ssav/census.hpp"
#include "ssav/htclassify.hpp"
#include "ssav/numthy.hpp"
#include "ssav/oracle.hpp"

namespace {

double seconds(const std::function<void()>& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void row(const char* name, const std::function<void()>& serial, const std::function<void()>& parallel) {
  const double s = seconds(serial);
  const double p = seconds(parallel);
  std::printf("%-28s serial %8.4f s  parallel %8.4f s  x%.2f\n", name, s, p, p > 0 ? s / p : 0.0);
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("serial references recompute totients; parallel kernels share a cached totient table\n");
  row("inverse_phi k<=150", [] { for (std::int64_t k = 1; k <= 150; ++k) ssav::inverse_phi_serial(k); },
      [] { for (std::int64_t k = 1; k <= 150; ++k) ssav::inverse_phi(k); });
  row("enumerate p=3 n=1 g<=24",
      [] { for (int g = 1; g <= 24; ++g) ssav::enumerate_serial(3, 1, g); },
      [] { for (int g = 1; g <= 24; ++g) ssav::enumerate(3, 1, g); });
  row("gap_dimensions 80", [] { ssav::gap_dimensions_serial(80); }, [] { ssav::gap_dimensions(80); });
  row("brute_force_weil q=4 g=2", [] { ssav::brute_force_weil_serial(4, 2); }, [] { ssav::brute_force_weil(4, 2); });
  const auto recs = ssav::enumerate(2, 1, 12);
  row("verify_records p=2 g=12", [&] { ssav::verify_records_serial(recs, 1e-6); },
      [&] { ssav::verify_records(recs, 1e-6); });
}
