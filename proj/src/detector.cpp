#include "eitqc/detector.hpp"

#include <algorithm>
#include <cmath>

namespace eitqc {

void DetectorParams::validate() const {
  if (rabi_p < 0) throw DomainError("detector: rabi_p must be non-negative");
  if (!(gamma_f > 0)) throw DomainError("detector: gamma_f must be positive");
  if (gamma_sf < 0) throw DomainError("detector: gamma_sf must be non-negative");
  if (!(gamma_s_lifetime > 0)) throw DomainError("detector: gamma_s_lifetime must be positive");
  if (!(quantum_efficiency > 0 && quantum_efficiency <= 1))
    throw DomainError("detector: quantum_efficiency must be in (0, 1]");
  if (integration_time < 0) throw DomainError("detector: integration_time must be non-negative");
  if (dark_rate < 0) throw DomainError("detector: dark_rate must be non-negative");
}

Real DetectorParams::time() const { return integration_time > 0 ? integration_time : 1.0 / gamma_s_lifetime; }

Real fluorescence_rate(const DetectorParams& d) {
  d.validate();
  const Real w = d.rabi_p * d.rabi_p;
  if (w == 0) return 0;
  return d.gamma_f * w / (2.0 * w + d.gamma_sf * d.gamma_sf);
}

Real signal(const DetectorParams& d) { return d.quantum_efficiency * fluorescence_rate(d) * d.time(); }

Real saturated_signal(const DetectorParams& d) {
  d.validate();
  return 0.5 * d.quantum_efficiency * d.gamma_f * d.time();
}

Diagnostics reliability(const DetectorParams& d) {
  const Real s = signal(d);
  Diagnostics r;
  r.checks.push_back(Check{"signal_at_least_one", 1.0, s, s, s >= 1.0});
  return r;
}

Real click_probability(const DetectorParams& d, bool photon_present) {
  if (photon_present) return -std::expm1(-signal(d));
  d.validate();
  return std::clamp(d.dark_rate * d.time(), 0.0, 1.0);
}

bool click(const DetectorParams& d, bool photon_present, Rng& rng) {
  return rng.bernoulli(click_probability(d, photon_present));
}

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::V: return "V";
    case Outcome::H: return "H";
    case Outcome::None: break;
  }
  return "none";
}

PolarizationMeasurement measure_polarization(const PolarizationQubit& q, const DetectorParams& d, Rng& rng) {
  q.validate();
  const Real p_click = click_probability(d, true);
  const bool branch_v = rng.uniform() < std::norm(q.alpha);
  PolarizationMeasurement m;
  m.collapsed = branch_v ? PolarizationQubit{1, 0} : PolarizationQubit{0, 1};
  m.outcome = rng.bernoulli(p_click) ? (branch_v ? Outcome::V : Outcome::H) : Outcome::None;
  return m;
}

}  // namespace eitqc
