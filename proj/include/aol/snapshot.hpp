#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "aol/models.hpp"

namespace aol {

enum class SnapshotErrorKind { io, bad_magic, version_mismatch, bad_header, truncated_payload, nan_payload };

class SnapshotError : public std::runtime_error {
 public:
  SnapshotError(SnapshotErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  SnapshotErrorKind kind() const noexcept { return kind_; }

 private:
  SnapshotErrorKind kind_;
};

inline constexpr std::uint32_t kSnapshotVersion = 1;

/// File layout, little-endian: "AOL1", version u32, n u32, ncomp u32 (3, or
/// 6 with B), alpha f64, theta f64, time f64, then ncomp * n^3 f64 samples,
/// component-major, index ((z * n) + y) * n + x.
struct Snapshot {
  std::uint32_t n = 0;
  std::uint32_t ncomp = 3;
  double alpha = 0.0;
  double theta = 1.0;
  double time = 0.0;
  std::vector<double> samples;

  friend bool operator==(const Snapshot&, const Snapshot&) = default;
};

Snapshot make_snapshot(const ModelState& state);
/// Rebuilds the state for a model kind; the filter follows the kind and the stored alpha/theta.
ModelState snapshot_state(const Snapshot& snap, ModelKind kind);

void write_snapshot(const std::string& path, const Snapshot& snap);
void write_snapshot(const std::string& path, const ModelState& state);
/// Throws SnapshotError with a distinct kind per failure.
Snapshot read_snapshot(const std::string& path);

}  // namespace aol
