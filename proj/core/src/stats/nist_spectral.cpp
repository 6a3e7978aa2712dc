// SPDX-License-Identifier: Apache-2.0
#include <fftw3.h>

#include <cmath>
#include <memory>
#include <mutex>
#include <string>

#include "iotrng/error.hpp"
#include "iotrng/stats/nist.hpp"
#include "iotrng/stats/special.hpp"

namespace iotrng::stats {

namespace {

// FFTW's planner is not re-entrant; execution of distinct plans is.
std::mutex g_planner_mutex;

struct FftwFree {
  void operator()(void* p) const noexcept { fftw_free(p); }
};

}  // namespace

double dft_test(Bits bits) {
  const std::size_t n = bits.size();
  if (n < 1000) throw Error(Errc::SequenceTooShort, "dft test needs at least 1000 bits, got " + std::to_string(n));

  const std::size_t n_out = n / 2 + 1;
  std::unique_ptr<double, FftwFree> in(static_cast<double*>(fftw_malloc(sizeof(double) * n)));
  std::unique_ptr<fftw_complex, FftwFree> out(static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n_out)));
  if (!in || !out) throw std::bad_alloc();

  fftw_plan plan;
  {
    std::lock_guard lock(g_planner_mutex);
    plan = fftw_plan_dft_r2c_1d(static_cast<int>(n), in.get(), out.get(), FFTW_ESTIMATE);
  }
  for (std::size_t i = 0; i < n; ++i) in.get()[i] = bits[i] ? 1.0 : -1.0;
  fftw_execute(plan);
  {
    std::lock_guard lock(g_planner_mutex);
    fftw_destroy_plan(plan);
  }

  const double upper_bound = std::sqrt(2.995732274 * static_cast<double>(n));
  std::size_t count = 0;
  for (std::size_t i = 0; i < n / 2; ++i) {
    const double re = out.get()[i][0];
    const double im = out.get()[i][1];
    if (std::sqrt(re * re + im * im) < upper_bound) ++count;
  }
  const double n_o = 0.95 * static_cast<double>(n) / 2.0;
  const double d = (static_cast<double>(count) - n_o) / std::sqrt(static_cast<double>(n) / 4.0 * 0.95 * 0.05);
  return erfc(std::fabs(d) / std::sqrt(2.0));
}

}  // namespace iotrng::stats
