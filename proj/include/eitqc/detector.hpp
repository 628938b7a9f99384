#pragma once

#include <string>
#include <vector>

#include "eitqc/qmemory.hpp"
#include "eitqc/rng.hpp"
#include "eitqc/types.hpp"

namespace eitqc {

struct DetectorParams {
  Real rabi_p = 0;
  Real gamma_f = 0;
  Real gamma_sf = 0;
  Real gamma_s_lifetime = 0;
  Real quantum_efficiency = 1;
  Real integration_time = 0;  // 0 means 1 / gamma_s_lifetime
  Real dark_rate = 0;         // clicks per second without a photon
  std::uint64_t rng_seed = 0;

  void validate() const;
  Real time() const;
};

/// R_f = Gamma_f Omega_p^2 / (2 Omega_p^2 + gamma_sf^2).
Real fluorescence_rate(const DetectorParams& d);

/// S_f = eta_q R_f t.
Real signal(const DetectorParams& d);

/// Saturated limit eta_q Gamma_f t / 2.
Real saturated_signal(const DetectorParams& d);

/// S_f >= 1.
Diagnostics reliability(const DetectorParams& d);

/// Probability of at least one collected photon, 1 - exp(-S_f); without a
/// photon, dark_rate * t.
Real click_probability(const DetectorParams& d, bool photon_present);

bool click(const DetectorParams& d, bool photon_present, Rng& rng);

enum class Outcome { V, H, None };

std::string to_string(Outcome o);

struct PolarizationMeasurement {
  Outcome outcome = Outcome::None;
  PolarizationQubit collapsed;
};

/// PBS routing: branch V with probability |alpha|^2, H with |beta|^2, then a
/// click on the branch detector.  A miss gives Outcome::None.
PolarizationMeasurement measure_polarization(const PolarizationQubit& q, const DetectorParams& d, Rng& rng);

}  // namespace eitqc
