#pragma once

#include "eitqc/types.hpp"

namespace eitqc {

/// alpha |V> + beta |H>, with |V> = |0> and |H> = |1>.
struct PolarizationQubit {
  Complex alpha = 1;
  Complex beta = 0;

  Real norm_sq() const { return std::norm(alpha) + std::norm(beta); }
  void validate() const;
  Eigen::Vector2cd vector() const { return {alpha, beta}; }
  static PolarizationQubit from_vector(const Eigen::Vector2cd& v) { return {v[0], v[1]}; }
};

/// Qubit after the 45-degree quarter-wave plate, on the circular basis:
/// amp_R |R> + amp_L |L>, |R> = (|V> + i|H>)/sqrt2, |L> = (|V> - i|H>)/sqrt2.
struct CircularQubit {
  Complex amp_R = 0;
  Complex amp_L = 0;
};

/// Collective spin-wave amplitudes of the M-scheme memory.
struct StoredQubit {
  Complex amp_s1 = 0;  // from |L>
  Complex amp_s2 = 0;  // from |R>
  Real stored_at = 0;
  Real gamma_R = 0;
  Real norm_remaining = 1;
};

/// Columns are the images of |V> and |H> in the (V, H) basis.
Eigen::Matrix2cd quarter_wave_45_matrix();

CircularQubit quarter_wave_45(const PolarizationQubit& q);
PolarizationQubit quarter_wave_45_inverse(const CircularQubit& q);
/// The circular state written back on the (V, H) basis.
PolarizationQubit to_linear_basis(const CircularQubit& q);

/// Waveplate followed by the mapping |L> -> |s1>, |R> -> |s2>.
StoredQubit store_qubit(const PolarizationQubit& q, Real t, Real gamma_R);

/// Common-mode decay exp(-gamma_R dt) of both spin-wave amplitudes.
StoredQubit hold(const StoredQubit& sq, Real dt);

struct RetrievedQubit {
  PolarizationQubit qubit;
  Real success_prob = 0;
};

RetrievedQubit retrieve_qubit(const StoredQubit& sq);

}  // namespace eitqc
