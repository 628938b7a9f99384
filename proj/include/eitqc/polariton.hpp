#pragma once

#include <string>
#include <vector>

#include "eitqc/medium.hpp"
#include "eitqc/types.hpp"

namespace eitqc {

/// Complex envelope f(z) of a single-photon wavepacket on a uniform periodic
/// grid.  Sample j sits at z_start + j * dz.  The grid follows the pulse:
/// whole-cell translations move z_start, sub-cell ones are applied
/// spectrally.
struct PulseEnvelope {
  VectorXc samples;
  Real z_start = 0;
  Real dz = 0;
  Real origin_time = 0;

  Eigen::Index grid_size() const { return samples.size(); }
  Real domain_length() const { return static_cast<Real>(samples.size()) * dz; }
  Real z(Eigen::Index j) const { return z_start + static_cast<Real>(j) * dz; }
  /// Integral of |f|^2 dz.
  Real norm() const { return samples.squaredNorm() * dz; }
  /// Intensity-weighted mean position.
  Real centroid() const;
  /// Intensity rms width.
  Real rms_width() const;
  /// Full rms duration 2 * rms_width / c, the pulse duration used by the
  /// feasibility checks.
  Real duration() const;

  void normalize();
  /// Translated copy, g(z) = f(z - distance).
  PulseEnvelope translated(Real distance) const;
  /// f at arbitrary coordinates (trigonometric interpolation).
  VectorXc evaluate(const VectorXr& z) const;
};

/// Periodic box length for a pulse of given free-space extent and a medium.
Real default_box_length(Real pulse_length, Real medium_length);

/// Normalized Gaussian amplitude exp(-(z - center)^2 / (2 sigma^2)) on a
/// power-of-two grid.  The pulse extent is taken as 10 sigma; the box is
/// default_box_length(10 sigma, medium_length) unless box_length > 0.
PulseEnvelope gaussian_pulse(Real sigma, Eigen::Index grid_size, Real center = 0, Real medium_length = 0,
                             Real box_length = 0);

/// |<a|b>|^2 / (|a|^2 |b|^2) after moving b so its centroid coincides with
/// a's.  Both envelopes must share dz and grid size.
Real shape_fidelity(const PulseEnvelope& a, const PulseEnvelope& b);

/// Piecewise-linear Omega_d(t); values beyond the ends are held.
struct DriveSchedule {
  std::vector<Real> times;
  std::vector<Real> rabi;

  static DriveSchedule constant(Real rabi_d, Real t0, Real t1);
  static DriveSchedule linear_ramp(Real from, Real to, Real t0, Real duration);

  void validate() const;
  Real start() const { return times.front(); }
  Real end() const { return times.back(); }
  Real at(Real t) const;
  /// Integral of v_g = c Omega^2 / (Omega^2 + G^2) over [t0, t1], exact for
  /// the piecewise-linear drive.  collective_sq is G^2 = g^2 N.
  Real displacement(Real t0, Real t1, Real collective_sq) const;
};

Real mixing_angle(Real g, Real n_atoms, Real rabi_d);
/// Mixing angle with g^2 N = c kappa0 gamma_ge.
Real mixing_angle(const MediumParams& p, Real rabi_d);

/// Amplitudes of |n-m photons>|s^(m)>, m = 0..n.
VectorXr dark_state_coefficients(int n, Real theta);

/// Exact dark-state amplitudes on |n-m photons>|s^(m)> for N atoms.  They
/// carry an extra sqrt(N! / ((N-m)! N^m)) relative to dark_state_coefficients
/// and reduce to it as N grows.
VectorXr finite_n_dark_coefficients(int n, int n_atoms, Real theta);

struct DarkOracleConfig {
  int n_atoms = 2;
  int n_photons = 1;
  int max_photons = 2;
  Real theta = 0;
  Real delta = 0;         // one-photon detuning, units of the coupling scale
  Real k = 1.3;           // probe wavevector
  Real q = 0.2;           // mode offset
  Real k_d = 0.7;         // drive wavevector projection
  std::vector<Real> positions;  // atom positions; default spread if empty
  Eigen::Index dimension_cap = 4096;
  /// Use the exact finite-N dark state; otherwise the large-N coefficients
  /// of dark_state_coefficients, which are exact only for n <= 1.
  bool finite_n = true;
};

/// ||H|D>|| / ||D>|| for the dark state, with H the Lambda-ensemble
/// Hamiltonian at two-photon resonance.
Real hamiltonian_dark_oracle(const DarkOracleConfig& cfg);

struct ConstantDriveResult {
  PulseEnvelope envelope;        // field beyond the medium at time t
  Real amplitude_factor = 1;     // exp(-kappa L)
  Real phase = 0;                // s delta_R L
  Real group_velocity = 0;
  Real transit_time = 0;         // L / v_g
};

/// Closed-form constant-drive propagation through the medium occupying
/// [0, L].  The input envelope is the free-space field at t = 0.
ConstantDriveResult propagate_constant_drive(const PulseEnvelope& pulse, const MediumParams& p, Real t,
                                             Real delta_R = 0);

/// <I(z,t)> for a pulse that was f(z) in free space at t = 0 (lossless).
Real intensity(const PulseEnvelope& pulse, const MediumParams& p, Real z, Real t);

/// Photonic field and spin coherence on a medium-coordinate grid.
struct PolaritonState {
  VectorXc photonic;
  VectorXc spin;
  Real theta = 0;
  MediumParams medium;
  Real clock = 0;
  Real z_start = 0;
  Real dz = 0;
  std::vector<std::string> warnings;

  VectorXc psi() const;
  Real norm() const { return psi().squaredNorm() * dz; }
  static PolaritonState from_psi(const VectorXc& psi, Real theta, const MediumParams& p, Real z_start, Real dz,
                                 Real clock);
};

/// Advects Psi by the exact integral of v_g over each step of length dt
/// from state.clock to schedule.end(), re-projecting the components on the
/// current mixing angle.
PolaritonState evolve_polariton(const PolaritonState& state, const DriveSchedule& schedule, Real dt);

/// Storage feasibility of a pulse of duration T: fill = T v_g / L must
/// satisfy 5 (2 kappa0 L)^(-1/2) < fill < 1.
Diagnostics storage_feasibility(const MediumParams& p, Real pulse_duration);

struct SpinWave {
  VectorXc spin;
  Real z_start = 0;
  Real dz = 0;
  Real clock = 0;
  /// Fraction of the compressed pulse inside [0, L] when the ramp starts.
  Real containment = 1;
  /// Transmission expected from the EIT window and Raman decay over entry
  /// plus exit, reported, not applied.
  Real expected_efficiency = 1;
  std::vector<std::string> warnings;

  Real norm() const { return spin.squaredNorm() * dz; }
};

/// Maps a free-space pulse into the medium (centered at L/2 when the ramp
/// starts) and stops it by ramping the drive to zero.
SpinWave store(const PulseEnvelope& pulse, const MediumParams& p, const DriveSchedule& ramp, Real dt);

/// Spin-wave decay during a hold of duration t_hold.
SpinWave hold(const SpinWave& wave, Real gamma_R, Real t_hold);

/// Releases a stored spin wave by the drive ramp, the mirror of store():
/// Psi advects by the integral of v_g over the ramp and leaves the medium
/// with its grid stretched by c / v_g.  z is measured at origin_time, the
/// exit time of the centroid, with the medium exit at z = L.
PulseEnvelope retrieve(const SpinWave& wave, const MediumParams& p, const DriveSchedule& ramp);

}  // namespace eitqc
