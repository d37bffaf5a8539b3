#include <map>
#include <mutex>
#include <utility>

#include <fftw3.h>

#include "aol/fields.hpp"

namespace aol {
namespace {

// FFTW planning is not thread-safe; execution through the new-array
// interface is. Plans are created once per size and never destroyed.
// SIMD plans need buffers with the planning alignment; the unaligned pair
// covers everything else.
struct PlanPair {
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
  fftw_plan forward_unaligned = nullptr;
  fftw_plan backward_unaligned = nullptr;
};

const PlanPair& plans_for(int n) {
  static std::mutex mutex;
  static std::map<int, PlanPair> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  const std::size_t real = static_cast<std::size_t>(n) * n * n;
  const std::size_t spec = static_cast<std::size_t>(n) * n * (n / 2 + 1);
  double* r = fftw_alloc_real(real);
  fftw_complex* c = fftw_alloc_complex(spec);
  PlanPair p;
  p.forward = fftw_plan_dft_r2c_3d(n, n, n, r, c, FFTW_ESTIMATE);
  p.backward = fftw_plan_dft_c2r_3d(n, n, n, c, r, FFTW_ESTIMATE);
  p.forward_unaligned = fftw_plan_dft_r2c_3d(n, n, n, r, c, FFTW_ESTIMATE | FFTW_UNALIGNED);
  p.backward_unaligned = fftw_plan_dft_c2r_3d(n, n, n, c, r, FFTW_ESTIMATE | FFTW_UNALIGNED);
  fftw_free(r);
  fftw_free(c);
  return cache.emplace(n, p).first->second;
}

bool aligned(const void* a, const void* b) {
  return fftw_alignment_of(const_cast<double*>(static_cast<const double*>(a))) == 0 &&
         fftw_alignment_of(const_cast<double*>(static_cast<const double*>(b))) == 0;
}

void execute_backward(int n, fftw_complex* in, double* out) {
  const PlanPair& p = plans_for(n);
  fftw_execute_dft_c2r(aligned(in, out) ? p.backward : p.backward_unaligned, in, out);
}

void execute_forward(int n, double* in, fftw_complex* out) {
  const PlanPair& p = plans_for(n);
  fftw_execute_dft_r2c(aligned(in, out) ? p.forward : p.forward_unaligned, in, out);
}

}  // namespace

RealArray inverse_transform(const Grid& grid, const ComplexArray& coeffs) {
  // c2r overwrites its input
  ComplexArray work = coeffs;
  RealArray out(static_cast<Eigen::Index>(grid.real_size()));
  execute_backward(grid.n(), reinterpret_cast<fftw_complex*>(work.data()), out.data());
  return out;
}

void inverse_transform_in_place(const Grid& grid, ComplexArray& coeffs, RealArray& out) {
  out.resize(static_cast<Eigen::Index>(grid.real_size()));
  execute_backward(grid.n(), reinterpret_cast<fftw_complex*>(coeffs.data()), out.data());
}

ComplexArray forward_transform(const Grid& grid, const RealArray& samples) {
  RealArray work = samples;
  ComplexArray out(static_cast<Eigen::Index>(grid.spectral_size()));
  execute_forward(grid.n(), work.data(), reinterpret_cast<fftw_complex*>(out.data()));
  out /= static_cast<double>(grid.real_size());
  return out;
}

}  // namespace aol
