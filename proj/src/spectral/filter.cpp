#include "aol/filter.hpp"

#include <cmath>
#include <string>

#include "aol/errors.hpp"

namespace aol {

void validate(const FilterSpec& spec) {
  if (!(spec.alpha >= 0.0) || !std::isfinite(spec.alpha)) {
    throw ConfigError("filter alpha must be finite and >= 0");
  }
  if (spec.kind == FilterKind::fractional && !(spec.theta > 0.0 && spec.theta <= 1.0)) {
    throw ConfigError("fractional filter order theta must lie in (0, 1], got " +
                      std::to_string(spec.theta));
  }
}

RealArray filter_symbol(const FilterSpec& spec, const Grid& grid) {
  validate(spec);
  const auto& k2 = grid.tables().k2;
  switch (spec.kind) {
    case FilterKind::identity:
      return RealArray::Ones(k2.size());
    case FilterKind::helmholtz:
      return 1.0 + spec.alpha * spec.alpha * k2;
    case FilterKind::fractional:
      return 1.0 + std::pow(spec.alpha, 2.0 * spec.theta) * k2.pow(spec.theta);
  }
  return RealArray::Ones(k2.size());
}

SpectralVectorField apply_inverse_filter(const FilterSpec& spec, const SpectralVectorField& v) {
  const RealArray inv = filter_symbol(spec, v.grid).inverse();
  SpectralVectorField u(v.grid);
  for (int i = 0; i < 3; ++i) u.c[i] = v.c[i] * inv;
  u.divergence_free = v.divergence_free;
  return u;
}

const char* to_string(FilterKind kind) {
  switch (kind) {
    case FilterKind::identity: return "identity";
    case FilterKind::helmholtz: return "helmholtz";
    case FilterKind::fractional: return "fractional";
  }
  return "identity";
}

FilterKind filter_kind_from_string(const std::string& name) {
  if (name == "identity") return FilterKind::identity;
  if (name == "helmholtz") return FilterKind::helmholtz;
  if (name == "fractional") return FilterKind::fractional;
  throw ConfigError("unknown filter kind '" + name + "'");
}

}  // namespace aol
