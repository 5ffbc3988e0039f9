#pragma once

#include <complex>
#include <span>

namespace gkdv::detail {

// Real-to-complex transform of one size. Instances are cached per thread, so
// the buffers inside are never shared between workers.
class FftPlan {
 public:
  static FftPlan& for_size(int n);

  explicit FftPlan(int n);
  ~FftPlan();
  FftPlan(const FftPlan&) = delete;
  FftPlan& operator=(const FftPlan&) = delete;

  int size() const { return n_; }

  // Unnormalized: out has n/2 + 1 entries.
  void forward(std::span<const double> in, std::span<std::complex<double>> out);
  // Divided by n: in has n/2 + 1 entries.
  void inverse(std::span<const std::complex<double>> in, std::span<double> out);

 private:
  int n_;
  double* real_ = nullptr;
  void* spec_ = nullptr;
  void* forward_plan_ = nullptr;
  void* inverse_plan_ = nullptr;
};

}  // namespace gkdv::detail
