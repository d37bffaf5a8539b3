#pragma once

#include "aol/fields.hpp"

namespace aol {

enum class FilterKind { identity, helmholtz, fractional };

/// Relation between the evolved field v and the advecting field u:
/// v^(k) = symbol(k) u^(k) with symbol 1, 1 + a^2|k|^2 or 1 + a^{2t}|k|^{2t}.
struct FilterSpec {
  FilterKind kind = FilterKind::identity;
  double alpha = 0.0;
  double theta = 1.0;  // fractional kind only

  static FilterSpec identity() { return {}; }
  static FilterSpec helmholtz(double alpha) { return {FilterKind::helmholtz, alpha, 1.0}; }
  static FilterSpec fractional(double alpha, double theta) {
    return {FilterKind::fractional, alpha, theta};
  }
};

/// Throws ConfigError for alpha < 0 or a fractional order outside (0, 1].
void validate(const FilterSpec& spec);

RealArray filter_symbol(const FilterSpec& spec, const Grid& grid);

/// u = (symbol)^{-1} v, mode by mode.
SpectralVectorField apply_inverse_filter(const FilterSpec& spec, const SpectralVectorField& v);

const char* to_string(FilterKind kind);
FilterKind filter_kind_from_string(const std::string& name);

}  // namespace aol
