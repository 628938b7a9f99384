#pragma once

#include <complex>
#include <vector>

#include "eitqc/types.hpp"

namespace eitqc {

/// Atomic and optical constants of one Lambda-type EIT ensemble.  All rates
/// and frequencies are angular (rad/s).  Optional quantities are zero when
/// not supplied.
struct MediumParams {
  Real gamma_ge = 0;      // g-e coherence relaxation
  Real Gamma_e = 0;       // excited-state decay
  Real gamma_R = 0;       // Raman (spin) coherence relaxation
  Real omega = 0;         // probe carrier
  Complex rabi_d = 0;     // driving-field Rabi frequency
  Real delta_d = 0;       // driving detuning
  Real kappa0 = 0;        // resonant absorption coefficient, 1/m
  Real length = 0;        // m
  Real area = 0;          // m^2, optional
  Real density = 0;       // 1/m^3, optional
  Real dipole_ge = 0;     // C m, optional
  Real n_atoms = 0;       // optional
  Real coupling_g = 0;    // single-atom coupling, optional

  Real k() const;
  Real rabi_sq() const { return std::norm(rabi_d); }
  Real optical_depth() const { return 2.0 * kappa0 * length; }
  /// g^2 N expressed through the absorption coefficient: c * kappa0 * gamma_ge.
  Real collective_coupling_sq() const;
  /// Resonant cross-section from the dipole moment (needs dipole_ge).
  Real sigma0() const;

  /// Throws DomainError when an invariant is violated.
  void validate() const;
};

/// Optical response at one (delta, delta_R) point.
struct OpticalResponse {
  Real delta_R = 0;
  Real delta = 0;
  Complex chi = 0;
  Real transmission = 0;
  Real phase = 0;
};

/// chi / (2 kappa0 / k): the parameter-free part of the susceptibility.
template <typename T>
std::complex<T> normalized_susceptibility(T gamma_ge, T rabi_sq, T gamma_R, T delta, T delta_R) {
  using C = std::complex<T>;
  const C i(0, 1);
  const C raman = gamma_R - i * delta_R;
  const C denom = gamma_ge - i * delta + (rabi_sq == T(0) ? C(0) : rabi_sq / raman);
  return i * gamma_ge / denom;
}

Complex susceptibility(const MediumParams& p, Real delta, Real delta_R);
Complex normalized_susceptibility(const MediumParams& p, Real delta, Real delta_R);

/// delta = delta_R + Delta_d.
OpticalResponse response(const MediumParams& p, Real delta_R);

Real transmission(const MediumParams& p, Real delta_R, Real delta);
Real transmission(const MediumParams& p, Real delta_R);

Real transparency_width(const MediumParams& p);
Real transmission_gaussian(const MediumParams& p, Real delta_R);

struct GroupVelocity {
  Real exact = 0;   // c / (1 + c kappa0 gamma_ge / |Omega_d|^2)
  Real approx = 0;  // |Omega_d|^2 / (kappa0 gamma_ge)
  /// Relative disagreement; the slow-light approximation is trusted when
  /// the index ratio exceeds 1e3.
  Real relative_gap() const;
};
GroupVelocity group_velocity(const MediumParams& p);

struct PhaseShift {
  Real approx = 0;
  Real exact = 0;
  bool inside_window = true;
};
PhaseShift linear_phase_shift(const MediumParams& p, Real delta_R);

Diagnostics eit_validity(const MediumParams& p, Real pulse_duration);

/// One row per detuning over [from, to] (units of gamma_ge): delta_R/gamma_ge,
/// Re chi, Im chi, T.  chi is in
/// units of 2 kappa0 / k when `normalized` is set.
struct SpectrumRow {
  Real delta_R_over_gamma = 0;
  Real re_chi = 0;
  Real im_chi = 0;
  Real transmission = 0;
};
std::vector<SpectrumRow> spectrum(const MediumParams& p, Real from, Real to, int points, bool normalized = true);

}  // namespace eitqc
