#include <gtest/gtest.h>

#include "eitqc/constants.hpp"
#include "eitqc/rng.hpp"
#include "eitqc/spectral.hpp"
#include "eitqc/xpm.hpp"

using namespace eitqc;
using constants::c;
using constants::pi;

namespace {

const Real kGamma = 2 * pi * 3e6;

TripodParams tripod() {
  TripodParams p;
  p.gamma_ge = kGamma;
  p.Gamma_e = 2 * kGamma;
  p.omega = 2 * pi * 384e12;
  p.length = 1e-2;
  p.kappa0 = 50.0 / p.length;
  p.rabi_d = 2 * kGamma;
  p.gamma_R = 1e-6 * kGamma;
  p.zeeman = 1e3 * p.gamma_R;
  p.delta_q = 0.5 * transparency_width(p) / c;
  p.delta_d = 0.5 * c * p.delta_q;
  const Real a = p.delta_q * p.length / (2 * pi);
  p.coupling_g = std::sqrt(p.group_velocity() * p.rabi_sq() / (c * a * a));
  return p;
}

VectorXc gaussian(Eigen::Index n, Real z0, Real dz, Real center, Real width) {
  VectorXc f(n);
  for (Eigen::Index j = 0; j < n; ++j) f[j] = std::exp(-0.5 * std::pow((z0 + j * dz - center) / width, 2));
  return f / std::sqrt(f.squaredNorm() * dz);
}

}  // namespace

TEST(Tripod, CouplingFallbacks) {
  TripodParams p = tripod();
  EXPECT_DOUBLE_EQ(p.g2(), p.coupling_g * p.coupling_g);
  EXPECT_DOUBLE_EQ(p.g2n(), c * p.kappa0 * p.gamma_ge);
  p.n_atoms = 1e6;
  EXPECT_DOUBLE_EQ(p.g2n(), p.coupling_g * p.coupling_g * 1e6);
  p.coupling_g = 0;
  EXPECT_DOUBLE_EQ(p.g2(), c * p.kappa0 * p.gamma_ge / 1e6);
  p.n_atoms = 0;
  EXPECT_THROW(p.g2(), PreconditionError);
  const TripodParams q = tripod();
  EXPECT_DOUBLE_EQ(q.tan2_theta(), q.g2n() / (2 * q.rabi_sq()));
  EXPECT_DOUBLE_EQ(q.group_velocity(), c / (1 + q.tan2_theta()));
}

TEST(Tripod, Validation) {
  EXPECT_NO_THROW(tripod().validate());
  TripodParams p = tripod();
  p.delta_q *= 3;
  EXPECT_THROW(p.validate(), DomainError);
  p = tripod();
  p.b_field = 1e-4;
  p.g_factor = 0.5;
  p.m_F = 1;
  EXPECT_THROW(p.validate(), DomainError);
  p.zeeman = constants::mu_B * 0.5 * 1e-4 / constants::hbar;
  EXPECT_NO_THROW(p.validate());
  p = tripod();
  p.rabi_d = 0;
  EXPECT_THROW(p.validate(), DomainError);
}

TEST(Coefficients, SymmetryAndLimits) {
  const TripodParams p = tripod();
  const XpmCoefficients x = xpm_coefficients(p);
  TripodParams flipped = p;
  flipped.delta_d = -p.delta_d;
  const XpmCoefficients y = xpm_coefficients(flipped);
  EXPECT_DOUBLE_EQ(x.kappa1, y.kappa2);
  EXPECT_DOUBLE_EQ(x.s1, y.s2);
  EXPECT_NEAR(std::abs(x.eta1 - std::conj(x.eta2)), 0.0, 1e-15 * std::abs(x.eta1));
  EXPECT_TRUE(x.validity.all_pass());
  EXPECT_TRUE(x.warnings.empty());
  // Without Raman decay eta is real: g^2 sin^2(theta) / (v_g |Omega|^2).
  TripodParams clean = p;
  clean.gamma_R = 0;
  const XpmCoefficients z = xpm_coefficients(clean);
  const Real sin2 = z.tan2_theta / (1 + z.tan2_theta);
  EXPECT_NEAR(z.eta1.real(), z.eta_simple * sin2, 1e-12 * z.eta_simple);
  EXPECT_EQ(z.eta1.imag(), 0.0);
  TripodParams no_zeeman = p;
  no_zeeman.zeeman = 0;
  EXPECT_EQ(xpm_coefficients(no_zeeman).eta1, Complex(0));
}

TEST(Coefficients, HotVaporFlagsValidity) {
  TripodParams p = tripod();
  p.v_bar = 300;
  const XpmCoefficients x = xpm_coefficients(p);
  EXPECT_FALSE(x.validity.all_pass());
  EXPECT_FALSE(x.warnings.empty());
}

TEST(Phase, ScalingAndPiCondition) {
  const TripodParams p = tripod();
  EXPECT_NEAR(conditional_phase(p), pi, 1e-9);
  TripodParams q = p;
  q.delta_d *= 0.5;
  EXPECT_NEAR(conditional_phase(q), 0.5 * pi, 1e-9);
  for (Real scale : {0.3, 0.9, 1.1, 4.0}) {
    TripodParams r = p;
    r.coupling_g *= scale;
    const PiCondition pc = pi_condition(r);
    EXPECT_NEAR(conditional_phase(r) / pi, pc.ratio * pc.detuning_ratio, 1e-9);
    EXPECT_EQ(pc.holds, conditional_phase(r) > pi);
  }
  EXPECT_NEAR(interaction_phase(p, 0.25 * p.length), 0.25 * conditional_phase(p), 1e-15);
}

TEST(TwoPhoton, FourierRoundTripAndParseval) {
  Rng r(8);
  const Eigen::Index n = 16;
  const Real dz = 0.3;
  MatrixXc psi(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) psi(i, j) = {r.uniform() - 0.5, r.uniform() - 0.5};
  const MatrixXc xi = fourier_amplitudes(psi, dz);
  EXPECT_NEAR(xi.squaredNorm(), psi.squaredNorm() * dz * dz, 1e-12);
  EXPECT_LT((inverse_fourier_amplitudes(xi, dz) - psi).norm(), 1e-12);
  EXPECT_THROW(fourier_amplitudes(MatrixXc::Zero(3, 4), dz), DomainError);
}

TEST(TwoPhoton, ProductStateValidates) {
  const Eigen::Index n = 32;
  const Real dz = 0.5;
  const TwoPhotonState s =
      TwoPhotonState::product(gaussian(n, -8, dz, -2, 1.5), gaussian(n, -8, dz, 2, 1.5), -8, dz, 1.0);
  EXPECT_NO_THROW(s.validate());
  EXPECT_NEAR(s.norm(), 1.0, 1e-12);
  TwoPhotonState bad = s;
  bad.xi *= 2;
  EXPECT_THROW(bad.validate(), DomainError);
}

TEST(Kernel, BandAndSinc) {
  EXPECT_DOUBLE_EQ(xpm_kernel(XpmKernel::Sinc, 0, 2.0), 1.0);
  EXPECT_NEAR(xpm_kernel(XpmKernel::Sinc, pi, 2.0), 0.0, 1e-15);
  const Eigen::Index n = 64;
  const Real dz = 0.5;
  EXPECT_DOUBLE_EQ(xpm_kernel(XpmKernel::Band, 0, 1.0, n, dz), 1.0);
  EXPECT_NEAR(xpm_kernel(XpmKernel::Band, 1.3, 1.0, n, dz), xpm_kernel(XpmKernel::Band, 1.3 + n * dz, 1.0, n, dz),
              1e-12);
  EXPECT_NEAR(xpm_kernel(XpmKernel::Band, 2.1, 1.0, n, dz), xpm_kernel(XpmKernel::Band, -2.1, 1.0, n, dz), 1e-15);
  EXPECT_THROW(xpm_kernel(XpmKernel::Band, 0, 1.0), DomainError);
}

TEST(Evolution, UnitaryAndDelayed) {
  const TripodParams p = tripod();
  const Real dq = p.delta_q;
  const Eigen::Index n = 64;
  const Real box = 32.0 / dq, dz = box / n, z0 = -0.5 * box;
  const TwoPhotonState in = TwoPhotonState::product(gaussian(n, z0, dz, -5 / dq, 2 / dq),
                                                    gaussian(n, z0, dz, 5 / dq, 2 / dq), z0, dz, dq);
  const TwoPhotonState out = evolve_two_photon(in, p, p.length);
  EXPECT_NEAR(out.norm(), 1.0, 1e-12);
  EXPECT_NEAR(out.t, p.length / p.group_velocity(), 1e-18);

  // Without the conditional phase only the group delay remains.
  TripodParams free = p;
  free.delta_d = 0;
  const TwoPhotonState moved = evolve_two_photon(in, free, p.length);
  const Real delay = p.length * (c / p.group_velocity() - 1);
  const VectorXr q = spectral::wavenumbers(n, dz);
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b)
      EXPECT_LT(std::abs(moved.xi(a, b) - in.xi(a, b) * std::polar(1.0, (q[a] + q[b]) * delay)), 1e-14);

  const TwoPhotonState split = evolve_two_photon(evolve_two_photon(in, p, 0.5 * p.length), p, 0.5 * p.length);
  EXPECT_LT((split.xi - out.xi).norm(), 1e-8);
}

TEST(Evolution, AbsorptionPrecondition) {
  TripodParams p = tripod();
  p.gamma_R = 0.3 * kGamma;
  p.zeeman = 0;
  const Eigen::Index n = 16;
  const Real dz = 1.0 / p.delta_q;
  const TwoPhotonState in =
      TwoPhotonState::product(gaussian(n, -8 * dz, dz, 0, 2 * dz), gaussian(n, -8 * dz, dz, 0, 2 * dz), -8 * dz, dz,
                              p.delta_q);
  EXPECT_THROW(evolve_two_photon(in, p, p.length), PreconditionError);
}

TEST(ClosedForm, ReducesToProductWithoutPhase) {
  TripodParams p = tripod();
  p.delta_d = 0;
  const Envelope f = [](Real z) { return Complex(std::exp(-z * z / 1e4)); };
  const Real t = 0.0;
  const Real shift = p.length * (c / p.group_velocity() - 1);
  const Real z = p.length + 3.0, zp = p.length + 40.0;
  EXPECT_LT(std::abs(two_photon_wavefunction(p, f, f, z, zp, t) - f(z + shift) * f(zp + shift)), 1e-15);
  EXPECT_THROW(two_photon_wavefunction(p, f, f, 0.0, zp, t), PreconditionError);
}

TEST(ClosedForm, CoincidentPairPicksUpFullPhase) {
  const TripodParams p = tripod();
  const Envelope f = [](Real z) { return Complex(std::exp(-z * z / 1e6)); };
  const Real z = p.length + 10.0;
  const Real shift = p.length * (c / p.group_velocity() - 1);
  const Complex free = f(z + shift) * f(z + shift);
  EXPECT_LT(std::abs(two_photon_wavefunction(p, f, f, z, z, 0.0) - free * std::polar(1.0, conditional_phase(p))),
            1e-12);
}

TEST(Correlation, IsPointwiseIntensity) {
  MatrixXc psi(2, 2);
  psi << Complex(1, 1), Complex(0, 2), Complex(3, 0), Complex(0, 0);
  const MatrixXr g = second_order_correlation(psi);
  EXPECT_DOUBLE_EQ(g(0, 0), 2.0);
  EXPECT_DOUBLE_EQ(g(0, 1), 4.0);
  EXPECT_DOUBLE_EQ(g(1, 0), 9.0);
}

TEST(Cz, PhaseOrPrecondition) {
  const TripodParams p = tripod();
  const Eigen::Index n = 16;
  const Real dz = 1.0 / p.delta_q;
  const TwoPhotonState in =
      TwoPhotonState::product(gaussian(n, -8 * dz, dz, 0, 3 * dz), gaussian(n, -8 * dz, dz, 0, 3 * dz), -8 * dz, dz,
                              p.delta_q);
  const TwoPhotonState out = cz_outcome(p, in);
  EXPECT_LT((out.xi + in.xi).norm(), 1e-8);
  TripodParams detuned = p;
  detuned.delta_d *= 0.9;
  EXPECT_THROW(cz_outcome(detuned, in), PreconditionError);
}
