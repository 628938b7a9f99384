#pragma once

#include <cstdint>
#include <string>

#include <Eigen/Core>

#include "eitqc/medium.hpp"
#include "eitqc/polariton.hpp"
#include "eitqc/types.hpp"

namespace eitqc {

/// Linear-Stark eigenstate (n, q, m) of a Rydberg manifold in a static field.
struct RydbergStark {
  int n = 50;
  int q_par = 0;
  int m = 0;
  Real e_static = 0;  // V/m

  void validate() const;
  /// Permanent dipole moment (3/2) n q e a0 along the field, C m.
  Real dipole() const;
};

enum class PairGeometry {
  Line,       // both atoms uniform on the trap axis
  Cylinder,   // both atoms uniform in the cylinder of given length and area
  Fixed,      // every pair at separation `length`
};

struct TrapConfig {
  Real length = 0;
  Real area = 0;
  Real density = 0;
  Real n_atoms = 0;
  Real rabi_r1 = 0;
  Real rabi_r2 = 0;
  Real gamma_r = 0;
  int rydberg_n = 50;
  std::uint64_t rng_seed = 0;
  PairGeometry geometry = PairGeometry::Line;
  /// |Delta_ij| at separation `length`; 0 means use dd_shift(rydberg_n, length).
  Real delta_at_length = 0;
  /// Preparation time used for dephasing; 0 means the collective pi-pulse
  /// time pi / (2 sqrt(N) Omega_r1).
  Real preparation_time = 0;
  /// Minimum pair distance; 0 means density^(-1/3) / 2.
  Real min_distance = 0;

  void validate() const;
  Real shift_at_length() const;
  Real pulse_time() const;
  Real min_pair_distance() const;
};

/// hbar Delta nu / hbar = (3/2) n q e a0 E / hbar, rad/s.
Real stark_shift(const RydbergStark& s);

/// Full dipole-dipole tensor interaction divided by hbar, rad/s.
Real dd_potential(const Eigen::Vector3d& d1, const Eigen::Vector3d& d2, const Eigen::Vector3d& r);

/// Pair shift estimate -n^4 e^2 a0^2 / (pi hbar eps0 R^3), rad/s.
Real dd_shift(int n, Real r);

struct McEstimate {
  Real mean = 0;
  Real std_err = 0;
  long long samples = 0;
};

/// Double-excitation probability N <|Omega_r1|^2 / Delta(R)^2> over random
/// atom pairs.  Sampling is split into fixed seeded sub-streams reduced in
/// order, so the result does not depend on the worker count.
McEstimate p_double_mc(const TrapConfig& cfg, long long samples, int workers = 0);

/// gamma_r T with T the preparation time.
Real p_dephase(const TrapConfig& cfg);

struct FidelityReport {
  Real p_double = 0;
  Real p_dephase = 0;
  Real fidelity = 0;
  Real pulse_time = 0;        // pi / (2 sqrt(N) Omega_r1)
  Real preparation_time = 0;  // time used for p_dephase
  long long samples = 0;
  Real std_err = 0;
  Real effective_shift = 0;   // (N |Omega|^2 / P_double)^(1/2)
  Diagnostics checks;
};

FidelityReport source_fidelity(const TrapConfig& cfg, long long samples);

struct GeneratedPhoton {
  PulseEnvelope envelope;
  FidelityReport report;
};

/// Converts the collective excitation (a uniform spin wave over the trap)
/// into a photon by the drive schedule.
GeneratedPhoton generate_photon(const TrapConfig& cfg, const MediumParams& medium, const DriveSchedule& drive,
                                long long samples, Eigen::Index grid_size = 1024);

}  // namespace eitqc
