#pragma once

#include <cstdint>
#include <string>

#include "aol/fields.hpp"

namespace aol {

/// splitmix64 stream with a fixed mapping to uniforms and Gaussians, so the
/// same seed yields the same field on every platform.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  /// Uniform on [0, 1) with 53 random bits.
  double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  /// Standard normal via Box-Muller (one draw per call, two uniforms consumed).
  double gaussian() noexcept;

 private:
  std::uint64_t state_;
};

enum class SynthKind { taylor_green, band_limited_random, power_law_rough, shear };

struct SynthSpec {
  SynthKind kind = SynthKind::taylor_green;
  double h = 0.5;          // target Hoelder exponent, power_law_rough only
  int kmin = 1;
  int kmax = 4;            // band_limited_random only; power_law_rough uses the dealias cutoff
  double amplitude = 1.0;  // rms velocity (band_limited_random), L2 norm (power_law_rough), peak (taylor_green, shear)
  std::uint64_t seed = 0;
};

const char* to_string(SynthKind kind);
SynthKind synth_kind_from_string(const std::string& name);

/// Divergence-free, Hermitian-symmetric field on `grid`:
///  - taylor_green: (sin x cos y cos z, -cos x sin y cos z, 0), set analytically
///  - shear: (sin y, 0, 0), a steady state of every model
///  - band_limited_random: iid Gaussian modes on kmin <= |k| <= kmax, projected,
///    scaled to rms |v| = amplitude
///  - power_law_rough: |c(k)| = |k|^{-(h+3/2)}, uniform random phases on two
///    transverse polarizations, 1 <= |k| <= n/3, scaled to ||v||_L2 = amplitude
SpectralVectorField generate(const SynthSpec& spec, const Grid& grid);

/// Shell-averaged |c(k)|^2 and its log-log slope over 1 <= |k| <= cutoff.
double spectral_slope(const SpectralVectorField& w);

}  // namespace aol
