#pragma once

#include <cstddef>
#include <memory>

#include <Eigen/Core>

namespace aol {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

/// Cubic periodic grid on [0, 2pi)^3 with n points per axis.
///
/// Real samples are stored z-major / y / x with x fastest:
/// index = ((z * n) + y) * n + x. Spectral coefficients use the
/// half-spectrum layout of a real-to-complex transform:
/// index = ((kz_idx * n) + ky_idx) * (n/2 + 1) + kx, where kx in [0, n/2]
/// and ky, kz indices map to signed wavenumbers in [-n/2, n/2).
/// Grid is cheap to copy; the wavenumber tables are shared.
class Grid {
 public:
  struct Tables {
    Eigen::ArrayXd kx, ky, kz;    // signed wavenumbers
    Eigen::ArrayXd dx, dy, dz;    // wavenumbers used for differentiation (Nyquist zeroed)
    Eigen::ArrayXd k2;            // |k|^2
    Eigen::ArrayXd multiplicity;  // 1 on the kx = 0 and kx = n/2 planes, 2 elsewhere
    Eigen::ArrayXd dealias_mask;  // 1 inside the 2/3-rule cube, 0 outside
  };

  /// Throws ConfigError unless n is a power of two and n >= 8.
  explicit Grid(int n);

  int n() const noexcept { return n_; }
  int half() const noexcept { return n_ / 2 + 1; }
  double length() const noexcept { return kTwoPi; }
  double spacing() const noexcept { return kTwoPi / n_; }
  double volume() const noexcept { return kTwoPi * kTwoPi * kTwoPi; }
  int dealias_cutoff() const noexcept { return n_ / 3; }
  std::size_t real_size() const noexcept {
    return static_cast<std::size_t>(n_) * n_ * n_;
  }
  std::size_t spectral_size() const noexcept {
    return static_cast<std::size_t>(n_) * n_ * half();
  }

  /// Signed wavenumber for a y or z index.
  int signed_wavenumber(int idx) const noexcept { return idx < n_ / 2 ? idx : idx - n_; }
  /// Axis index for a signed wavenumber in [-n/2, n/2).
  int axis_index(int k) const noexcept { return k >= 0 ? k : k + n_; }
  /// Spectral index for (kx >= 0, ky, kz) given as signed wavenumbers.
  std::size_t spectral_index(int kx, int ky, int kz) const noexcept {
    return (static_cast<std::size_t>(axis_index(kz)) * n_ + axis_index(ky)) * half() + kx;
  }
  std::size_t real_index(int x, int y, int z) const noexcept {
    return (static_cast<std::size_t>(z) * n_ + y) * n_ + x;
  }
  double coordinate(int i) const noexcept { return spacing() * i; }

  const Tables& tables() const noexcept { return *tables_; }

  friend bool operator==(const Grid& a, const Grid& b) noexcept { return a.n_ == b.n_; }

 private:
  int n_;
  std::shared_ptr<const Tables> tables_;
};

}  // namespace aol
