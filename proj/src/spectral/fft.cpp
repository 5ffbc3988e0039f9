#include "fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

namespace gkdv::detail {
namespace {

// Planning is the one part of FFTW that is not thread safe.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

FftPlan& FftPlan::for_size(int n) {
  thread_local std::map<int, std::unique_ptr<FftPlan>> cache;
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<FftPlan>(n);
  return *slot;
}

FftPlan::FftPlan(int n) : n_(n) {
  std::lock_guard lock(planner_mutex());
  real_ = fftw_alloc_real(static_cast<std::size_t>(n));
  auto* spec = fftw_alloc_complex(static_cast<std::size_t>(n / 2 + 1));
  spec_ = spec;
  // FFTW_ESTIMATE keeps the chosen algorithm, and therefore the rounding,
  // identical from run to run.
  forward_plan_ = fftw_plan_dft_r2c_1d(n, real_, spec, FFTW_ESTIMATE);
  inverse_plan_ = fftw_plan_dft_c2r_1d(n, spec, real_, FFTW_ESTIMATE);
}

FftPlan::~FftPlan() {
  std::lock_guard lock(planner_mutex());
  fftw_destroy_plan(static_cast<fftw_plan>(forward_plan_));
  fftw_destroy_plan(static_cast<fftw_plan>(inverse_plan_));
  fftw_free(real_);
  fftw_free(spec_);
}

void FftPlan::forward(std::span<const double> in, std::span<std::complex<double>> out) {
  std::copy(in.begin(), in.begin() + n_, real_);
  fftw_execute(static_cast<fftw_plan>(forward_plan_));
  const auto* spec = static_cast<const std::complex<double>*>(spec_);
  std::copy(spec, spec + n_ / 2 + 1, out.begin());
}

void FftPlan::inverse(std::span<const std::complex<double>> in, std::span<double> out) {
  auto* spec = static_cast<std::complex<double>*>(spec_);
  std::copy(in.begin(), in.begin() + n_ / 2 + 1, spec);
  spec[0].imag(0.0);
  spec[n_ / 2].imag(0.0);
  fftw_execute(static_cast<fftw_plan>(inverse_plan_));
  const double scale = 1.0 / n_;
  for (int i = 0; i < n_; ++i) out[static_cast<std::size_t>(i)] = real_[i] * scale;
}

}  // namespace gkdv::detail
