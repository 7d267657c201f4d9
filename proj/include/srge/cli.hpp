#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "srge/core_types.hpp"

namespace srge {

// Exit codes: 0 success, 1 engine/domain error, 2 usage or parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Inclusive grid "a:b:step" or a single number.
std::vector<double> parse_grid(const std::string& text);

// Worker pool size: hardware concurrency capped by SRGE_THREADS.
unsigned worker_count();
// Runs f(i) for i in [0, n) on the pool; results are written by index, so order is deterministic.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f);

// Lattice versus CFT Delta Z_n (n = 1, 2) at fixed theta, parity averaged over (ell, ell+1).
struct ComparisonRow {
  int ell;
  double r;        // (ell + 1/2)/N, where the average is compared
  cplx cft;        // CFT at r
  cplx raw;        // lattice at ell
  cplx raw_cft;    // CFT at ell/N
  cplx averaged;   // mean of lattice at ell and ell + 1
};
struct ComparisonSummary {
  std::vector<ComparisonRow> rows;
  double max_dev_avg = 0, mean_dev_avg = 0, max_dev_raw = 0;
  double max_dev_avg_re = 0, max_dev_avg_im = 0;
  double oscillation = 0, oscillation_re = 0, oscillation_im = 0;
};
ComparisonSummary compare_delta_z(int n, int N, double theta, double r_min, double r_max);

}  // namespace srge
