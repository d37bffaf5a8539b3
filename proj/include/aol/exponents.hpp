#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aol/models.hpp"

namespace aol {

/// Exact fraction in lowest terms with a positive denominator.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
  /// "1/3", "-1/2", "0"
  std::string to_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return Rational(-num_, den_); }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Lower bound on a regularity index; every bound in the tables is strict.
struct Bound {
  Rational value;
  bool exclusive = true;
};

/// B^s_{3,inf} index of the evolved fields. The MHD row adds the index r of
/// the magnetic field and the pair rule s + 2r > 1.
struct BesovThreshold {
  Bound s;
  std::optional<Bound> r;
  std::optional<Bound> s_plus_2r;
};

/// Sobolev thresholds H^u for u and H^v for v. The MHD row stores s, r and
/// the pair rule s + 2r > 5/2 in v, b and v_plus_2b.
struct SobolevThreshold {
  std::optional<Bound> u;
  Bound v;
  std::optional<Bound> b;
  std::optional<Bound> v_plus_2b;
};

struct ThresholdEntry {
  ModelKind model;
  std::string conserved;
  BesovThreshold besov;
  SobolevThreshold sobolev;
};

const std::vector<ThresholdEntry>& threshold_table();
const ThresholdEntry& threshold_entry(ModelKind model);
BesovThreshold onsager_besov_threshold(ModelKind model);
SobolevThreshold onsager_sobolev_threshold(ModelKind model);

struct FractionalExponent {
  Rational gamma;
  bool at_most = false;  // set above theta = 1/2, where only an upper value is known
};

/// gamma = (1 - 2 theta) / 3 up to theta = 1/2, then 0 flagged "at most".
/// Throws DomainError for theta <= 0.
FractionalExponent fractional_onsager_exponent(const Rational& theta);
double fractional_onsager_exponent(double theta);
/// The theta -> 0+ limit of the law.
Rational fractional_onsager_limit();

/// True iff s > 0, r > 0 and s + 2r > 1.
bool mhd_tradeoff_check(double s, double r);

/// "besov: s > 0; sobolev: u H^{5/2}, v H^{1/2}" style summary of one row.
std::string describe_thresholds(ModelKind model);
/// All rows as CSV, one column per bound; empty cells where a row has none.
std::string threshold_csv();

}  // namespace aol
