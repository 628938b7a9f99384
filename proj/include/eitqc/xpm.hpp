#pragma once

#include <functional>
#include <string>
#include <vector>

#include "eitqc/medium.hpp"
#include "eitqc/types.hpp"

namespace eitqc {

/// Tripod medium: a Lambda medium plus Zeeman-split ground sublevels.
/// `delta_d` of the base is the drive detuning Delta_d.
struct TripodParams : MediumParams {
  Real zeeman = 0;     // Delta, ground Zeeman shift
  Real zeeman_s = 0;   // Delta'
  Real b_field = 0;    // T, optional
  Real g_factor = 0;   // g_F
  Real m_F = 0;
  Real delta_q = 0;    // quantization bandwidth, 1/m
  Eigen::Index modes = 64;
  Real v_bar = 0;      // mean thermal speed for the validity checks, m/s

  /// g^2 N from (coupling_g, n_atoms) when both are given, else c kappa0 gamma_ge.
  Real g2n() const;
  /// Single-atom g^2; needs coupling_g or n_atoms.
  Real g2() const;
  /// tan^2 theta = g^2 N / (2 |Omega_d|^2).
  Real tan2_theta() const;
  Real group_velocity() const;

  void validate() const;
};

struct XpmCoefficients {
  Real v_g = 0;
  Real tan2_theta = 0;
  Real kappa1 = 0;
  Real kappa2 = 0;
  Real s1 = 0;
  Real s2 = 0;
  Complex eta1 = 0;
  Complex eta2 = 0;
  Real eta_simple = 0;  // g^2 / (v_g |Omega_d|^2)
  Diagnostics validity;
  std::vector<std::string> warnings;
};

XpmCoefficients xpm_coefficients(const TripodParams& p);

/// phi = eta Delta_d L^2 delta_q / (2 pi), eta in its real limit.
Real conditional_phase(const TripodParams& p);

struct PiCondition {
  bool holds = false;
  Real lhs = 0;    // (delta_q L / 2 pi)^2
  Real rhs = 0;    // (v_g / c) |Omega_d|^2 / g^2
  Real ratio = 0;  // lhs / rhs
  /// 2 Delta_d / (c delta_q); phi / pi = ratio * detuning_ratio, so the
  /// inequality predicts phi > pi only when this equals 1.
  Real detuning_ratio = 0;
};

PiCondition pi_condition(const TripodParams& p);

/// Two-photon amplitude on an n x n periodic grid.  Rows index the field-1
/// coordinate z, columns the field-2 coordinate z'.  xi holds the mode
/// amplitudes in FFT order, normalized so that sum |xi|^2 = integral |Psi|^2.
struct TwoPhotonState {
  MatrixXc xi;
  Real z_start = 0;
  Real dz = 0;
  Real delta_q = 0;
  Real t = 0;

  Eigen::Index modes() const { return xi.rows(); }
  Real box() const { return static_cast<Real>(xi.rows()) * dz; }
  Real z(Eigen::Index j) const { return z_start + static_cast<Real>(j) * dz; }
  Real norm() const { return xi.squaredNorm(); }
  MatrixXc psi() const;
  void validate() const;

  static TwoPhotonState from_psi(const MatrixXc& psi, Real z_start, Real dz, Real delta_q, Real t = 0);
  /// Product state f1(z) f2(z') of two envelopes sampled on a common grid.
  static TwoPhotonState product(const VectorXc& f1, const VectorXc& f2, Real z_start, Real dz, Real delta_q,
                                Real t = 0);
};

/// xi = (dz / n) DFT2(Psi).
MatrixXc fourier_amplitudes(const MatrixXc& psi, Real dz);
MatrixXc inverse_fourier_amplitudes(const MatrixXc& xi, Real dz);

enum class XpmKernel {
  Sinc,  // sinc(delta_q x / 2), the continuum commutator
  Band,  // D(x) / D(0), D the sum of e^{iqx} over grid modes with |q| <= delta_q / 2
};

/// Interaction kernel k(x) for a periodic box of n cells of size dz.
Real xpm_kernel(XpmKernel kind, Real x, Real delta_q, Eigen::Index n = 0, Real dz = 0);

/// Phase accumulated after a propagation distance inside the medium.
Real interaction_phase(const TripodParams& p, Real distance);

/// Propagates the pair through `distance` of medium.  The interaction acts
/// on each field-1 row as the rank-one unitary 1 + (e^{i phi} - 1) u u^dagger
/// with u the normalized band kernel centred on that row; then the whole
/// amplitude is delayed by distance (c / v_g - 1) relative to free flight.
/// The frame co-moves with light in vacuum.
TwoPhotonState evolve_two_photon(const TwoPhotonState& state, const TripodParams& p, Real distance);

using Envelope = std::function<Complex(Real)>;

/// Equal-time closed-form pair amplitude after the interaction, z, z' >= L.
Complex two_photon_wavefunction(const TripodParams& p, const Envelope& f1, const Envelope& f2, Real z, Real zp,
                                Real t, XpmKernel kernel = XpmKernel::Sinc, Eigen::Index n = 0, Real dz = 0);

/// |Psi|^2 pointwise.
MatrixXr second_order_correlation(const MatrixXc& psi);

/// State times e^{i phi}; throws PreconditionError unless the pi condition
/// holds and |phi - pi| < tolerance.
TwoPhotonState cz_outcome(const TripodParams& p, const TwoPhotonState& state, Real tolerance = 1e-3);

}  // namespace eitqc
