#include "aol/snapshot.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>

namespace aol {
namespace {

constexpr char kMagic[4] = {'A', 'O', 'L', '1'};
constexpr std::size_t kHeaderBytes = 4 + 3 * 4 + 3 * 8;

template <typename U>
void put_le(std::vector<unsigned char>& out, U v) {
  for (std::size_t i = 0; i < sizeof(U); ++i) out.push_back(static_cast<unsigned char>(v >> (8 * i)));
}

template <typename U>
U get_le(const unsigned char* p) {
  U v = 0;
  for (std::size_t i = 0; i < sizeof(U); ++i) v |= static_cast<U>(p[i]) << (8 * i);
  return v;
}

void put_f64(std::vector<unsigned char>& out, double d) { put_le(out, std::bit_cast<std::uint64_t>(d)); }
double get_f64(const unsigned char* p) { return std::bit_cast<double>(get_le<std::uint64_t>(p)); }

}  // namespace

Snapshot make_snapshot(const ModelState& state) {
  Snapshot s;
  const Grid& g = state.grid();
  s.n = static_cast<std::uint32_t>(g.n());
  s.ncomp = state.b ? 6 : 3;
  s.alpha = state.filter.alpha;
  s.theta = state.filter.theta;
  s.time = state.time;
  s.samples.reserve(s.ncomp * g.real_size());
  auto append = [&](const SpectralVectorField& w) {
    const RealVectorField r = to_real(w);
    for (const auto& c : r.c) s.samples.insert(s.samples.end(), c.data(), c.data() + c.size());
  };
  append(state.v);
  if (state.b) append(*state.b);
  return s;
}

ModelState snapshot_state(const Snapshot& snap, ModelKind kind) {
  const Grid g(static_cast<int>(snap.n));
  const std::size_t per = g.real_size();
  auto field = [&](std::size_t first) {
    RealVectorField r(g);
    for (int i = 0; i < 3; ++i) {
      r.c[i] = Eigen::Map<const RealArray>(snap.samples.data() + (first + i) * per,
                                           static_cast<Eigen::Index>(per));
    }
    SpectralVectorField w = to_spectral(r);
    w.divergence_free = true;
    return w;
  };
  const bool mhd = carries_magnetic_field(kind);
  if (mhd != (snap.ncomp == 6)) {
    throw StateError(std::string("snapshot with ") + std::to_string(snap.ncomp) +
                     " components does not fit model " + to_string(kind));
  }
  FilterSpec filter = kind == ModelKind::euler ? FilterSpec::identity()
                      : snap.theta == 1.0      ? FilterSpec::helmholtz(snap.alpha)
                                               : FilterSpec::fractional(snap.alpha, snap.theta);
  std::optional<SpectralVectorField> b;
  if (mhd) b = field(3);
  return ModelState(kind, field(0), filter, std::move(b), snap.time);
}

void write_snapshot(const std::string& path, const Snapshot& snap) {
  std::vector<unsigned char> out;
  out.reserve(kHeaderBytes + 8 * snap.samples.size());
  out.insert(out.end(), kMagic, kMagic + 4);
  put_le<std::uint32_t>(out, kSnapshotVersion);
  put_le<std::uint32_t>(out, snap.n);
  put_le<std::uint32_t>(out, snap.ncomp);
  put_f64(out, snap.alpha);
  put_f64(out, snap.theta);
  put_f64(out, snap.time);
  for (double d : snap.samples) put_f64(out, d);
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw SnapshotError(SnapshotErrorKind::io, "cannot open '" + path + "' for writing");
  f.write(reinterpret_cast<const char*>(out.data()), static_cast<std::streamsize>(out.size()));
  if (!f) throw SnapshotError(SnapshotErrorKind::io, "write to '" + path + "' failed");
}

void write_snapshot(const std::string& path, const ModelState& state) {
  write_snapshot(path, make_snapshot(state));
}

Snapshot read_snapshot(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw SnapshotError(SnapshotErrorKind::io, "cannot open '" + path + "'");
  const std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  if (bytes.size() < 4 || std::memcmp(bytes.data(), kMagic, 4) != 0) {
    throw SnapshotError(SnapshotErrorKind::bad_magic, "bad magic in '" + path + "'");
  }
  if (bytes.size() < kHeaderBytes) {
    throw SnapshotError(SnapshotErrorKind::bad_header, "truncated header in '" + path + "'");
  }
  Snapshot s;
  const std::uint32_t version = get_le<std::uint32_t>(bytes.data() + 4);
  if (version != kSnapshotVersion) {
    throw SnapshotError(SnapshotErrorKind::version_mismatch,
                        "snapshot version " + std::to_string(version) + " is not supported (expected " +
                            std::to_string(kSnapshotVersion) + ")");
  }
  s.n = get_le<std::uint32_t>(bytes.data() + 8);
  s.ncomp = get_le<std::uint32_t>(bytes.data() + 12);
  s.alpha = get_f64(bytes.data() + 16);
  s.theta = get_f64(bytes.data() + 24);
  s.time = get_f64(bytes.data() + 32);
  if ((s.ncomp != 3 && s.ncomp != 6) || s.n == 0 || s.n > 4096) {
    throw SnapshotError(SnapshotErrorKind::bad_header, "invalid grid size or component count");
  }
  const std::uint64_t count = static_cast<std::uint64_t>(s.ncomp) * s.n * s.n * s.n;
  const std::uint64_t expected = 8 * count;
  const std::uint64_t actual = bytes.size() - kHeaderBytes;
  if (actual != expected) {
    throw SnapshotError(SnapshotErrorKind::truncated_payload,
                        "truncated payload: expected " + std::to_string(expected) + " bytes, got " +
                            std::to_string(actual));
  }
  s.samples.resize(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    s.samples[i] = get_f64(bytes.data() + kHeaderBytes + 8 * i);
    if (std::isnan(s.samples[i])) {
      throw SnapshotError(SnapshotErrorKind::nan_payload,
                          "NaN in payload at sample " + std::to_string(i));
    }
  }
  return s;
}

}  // namespace aol
