#include "aol/exponents.hpp"

#include <numeric>
#include <sstream>

#include "aol/errors.hpp"

namespace aol {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return a.num_ * b.den_ <=> b.num_ * a.den_;
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}
Rational operator/(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

namespace {

Bound gt(std::int64_t n, std::int64_t d = 1) { return Bound{Rational(n, d), true}; }

std::vector<ThresholdEntry> build_table() {
  const char* h1 = "|u|^2 + a^2|grad u|^2";
  return {
      {ModelKind::euler, "|v|^2", {gt(1, 3), {}, {}}, {{}, gt(5, 6), {}, {}}},
      {ModelKind::leray_alpha, "|v|^2", {gt(0), {}, {}}, {gt(5, 2), gt(1, 2), {}, {}}},
      {ModelKind::euler_alpha, h1, {gt(1), {}, {}}, {gt(3, 2), gt(-1, 2), {}, {}}},
      {ModelKind::modified_leray_alpha, h1, {gt(1), {}, {}}, {gt(3, 2), gt(-1, 2), {}, {}}},
      {ModelKind::clark_alpha, h1, {gt(1), {}, {}}, {gt(3, 2), gt(-1, 2), {}, {}}},
      {ModelKind::mhd_leray_alpha,
       "|v|^2 + |B|^2",
       {gt(0), gt(0), gt(1)},
       {{}, gt(1, 2), gt(1, 2), gt(5, 2)}},
  };
}

std::string relation(const Bound& b) { return b.exclusive ? " > " : " >= "; }

}  // namespace

const std::vector<ThresholdEntry>& threshold_table() {
  static const std::vector<ThresholdEntry> table = build_table();
  return table;
}

const ThresholdEntry& threshold_entry(ModelKind model) {
  for (const auto& e : threshold_table()) {
    if (e.model == model) return e;
  }
  throw ConfigError(std::string("no threshold entry for ") + to_string(model));
}

BesovThreshold onsager_besov_threshold(ModelKind model) { return threshold_entry(model).besov; }
SobolevThreshold onsager_sobolev_threshold(ModelKind model) {
  return threshold_entry(model).sobolev;
}

FractionalExponent fractional_onsager_exponent(const Rational& theta) {
  if (theta <= Rational(0)) throw DomainError("fractional order must be positive");
  if (theta > Rational(1, 2)) return {Rational(0), true};
  return {(Rational(1) - Rational(2) * theta) / Rational(3), false};
}

double fractional_onsager_exponent(double theta) {
  if (!(theta > 0.0)) throw DomainError("fractional order must be positive");
  if (theta > 0.5) return 0.0;
  return (1.0 - 2.0 * theta) / 3.0;
}

Rational fractional_onsager_limit() { return (Rational(1) - Rational(2) * Rational(0)) / Rational(3); }

bool mhd_tradeoff_check(double s, double r) { return s > 0.0 && r > 0.0 && s + 2.0 * r > 1.0; }

std::string describe_thresholds(ModelKind model) {
  const ThresholdEntry& e = threshold_entry(model);
  std::ostringstream out;
  out << "besov: s" << relation(e.besov.s) << e.besov.s.value.to_string();
  if (e.besov.r) out << ", r" << relation(*e.besov.r) << e.besov.r->value.to_string();
  if (e.besov.s_plus_2r) {
    out << ", s + 2r" << relation(*e.besov.s_plus_2r) << e.besov.s_plus_2r->value.to_string();
  }
  out << "; sobolev: ";
  const SobolevThreshold& s = e.sobolev;
  if (s.b) {
    out << "v H^{s}, B H^{r} with s" << relation(s.v) << s.v.value.to_string() << ", r"
        << relation(*s.b) << s.b->value.to_string();
    if (s.v_plus_2b) out << ", s + 2r" << relation(*s.v_plus_2b) << s.v_plus_2b->value.to_string();
    return out.str();
  }
  if (s.u) out << "u H^{" << s.u->value.to_string() << "}, ";
  out << "v H^{" << s.v.value.to_string() << "}";
  return out.str();
}

std::string threshold_csv() {
  std::ostringstream out;
  out << "model,conserved,besov_s,besov_r,besov_s_plus_2r,sobolev_u,sobolev_v,sobolev_b,sobolev_v_plus_2b\n";
  auto opt = [](const std::optional<Bound>& b) { return b ? b->value.to_string() : std::string(); };
  for (const auto& e : threshold_table()) {
    out << to_string(e.model) << ',' << '"' << e.conserved << '"' << ',' << e.besov.s.value.to_string()
        << ',' << opt(e.besov.r) << ',' << opt(e.besov.s_plus_2r) << ',' << opt(e.sobolev.u) << ','
        << e.sobolev.v.value.to_string() << ',' << opt(e.sobolev.b) << ','
        << opt(e.sobolev.v_plus_2b) << '\n';
  }
  return out.str();
}

}  // namespace aol
