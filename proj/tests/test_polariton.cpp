#include <gtest/gtest.h>

#include "eitqc/constants.hpp"
#include "eitqc/polariton.hpp"
#include "eitqc/spectral.hpp"

using namespace eitqc;
using constants::c;
using constants::pi;

namespace {

const Real kGamma = 2 * pi * 3e6;

MediumParams medium(Real depth = 100) {
  MediumParams p;
  p.gamma_ge = kGamma;
  p.Gamma_e = 2 * kGamma;
  p.omega = 2 * pi * 384e12;
  p.rabi_d = kGamma;
  p.length = 1e-3;
  p.kappa0 = depth / (2 * p.length);
  return p;
}

DriveSchedule ramp_down(Real rabi, Real t0, Real d) { return {{t0, t0 + 0.01 * d, t0 + d}, {rabi, 0.03 * rabi, 0.0}}; }
DriveSchedule ramp_up(Real rabi, Real t0, Real d) { return {{t0, t0 + 0.99 * d, t0 + d}, {0.0, 0.03 * rabi, rabi}}; }

struct RoundTrip {
  PulseEnvelope in, out;
  SpinWave stored;
};

RoundTrip round_trip(const MediumParams& p, Real fill) {
  const Real vg = group_velocity(p).exact;
  const Real sigma = fill * p.length / vg * c / std::sqrt(2.0);
  RoundTrip r;
  r.in = gaussian_pulse(sigma, 2048, 0.0, p.length);
  const Real ramp = 20.0 / transparency_width(p);
  r.stored = store(r.in, p, ramp_down(std::abs(p.rabi_d), 0, ramp), ramp / 200);
  r.out = retrieve(r.stored, p, ramp_up(std::abs(p.rabi_d), ramp, ramp));
  return r;
}

}  // namespace

TEST(Pulse, GaussianMoments) {
  const PulseEnvelope f = gaussian_pulse(2.0, 1024, 3.0);
  EXPECT_NEAR(f.norm(), 1.0, 1e-12);
  EXPECT_NEAR(f.centroid(), 3.0, 1e-9);
  EXPECT_NEAR(f.rms_width(), 2.0 / std::sqrt(2.0), 1e-9);
  EXPECT_NEAR(f.duration(), 2 * f.rms_width() / c, 1e-20);
  EXPECT_THROW(gaussian_pulse(1.0, 1000), DomainError);
  EXPECT_THROW(gaussian_pulse(-1.0, 1024), DomainError);
}

TEST(Pulse, TranslationKeepsShapeAndNorm) {
  const PulseEnvelope f = gaussian_pulse(2.0, 1024, 0.0);
  const PulseEnvelope g = f.translated(7.31);
  EXPECT_NEAR(g.centroid() - f.centroid(), 7.31, 1e-9);
  EXPECT_NEAR(g.norm(), f.norm(), 1e-12);
  EXPECT_NEAR(shape_fidelity(f, g), 1.0, 1e-12);
  VectorXr z(1);
  z[0] = 7.31;
  EXPECT_NEAR(std::abs(g.evaluate(z)[0]), std::abs(f.samples[f.grid_size() / 2]), 1e-4);
}

TEST(Pulse, ShapeFidelityNeedsSameGrid) {
  EXPECT_THROW(shape_fidelity(gaussian_pulse(1, 256), gaussian_pulse(1, 512)), DomainError);
}

TEST(Schedule, DisplacementMatchesSimpson) {
  const DriveSchedule s{{0.0, 1e-6, 3e-6, 4e-6}, {2e7, 5e6, 1e6, 0.0}};
  const Real G2 = 3e15;
  const auto vg = [&](Real t) {
    const Real o = s.at(t);
    return c * o * o / (o * o + G2);
  };
  const auto simpson = [&](Real a, Real b) {
    const int n = 2000;
    const Real h = (b - a) / n;
    Real sum = vg(a) + vg(b);
    for (int i = 1; i < n; ++i) sum += (i % 2 ? 4 : 2) * vg(a + i * h);
    return sum * h / 3;
  };
  Real total = 0;
  for (std::size_t i = 1; i < s.times.size(); ++i) total += simpson(s.times[i - 1], s.times[i]);
  EXPECT_NEAR(s.displacement(0, 4e-6, G2), total, 1e-9 * total);
  EXPECT_NEAR(s.displacement(0.5e-6, 2e-6, G2) + s.displacement(2e-6, 3.5e-6, G2), s.displacement(0.5e-6, 3.5e-6, G2),
              1e-12 * total);
  EXPECT_EQ(s.at(-1.0), 2e7);
  EXPECT_EQ(s.at(10.0), 0.0);
}

TEST(Schedule, ValidateRejectsBadSchedules) {
  EXPECT_THROW((DriveSchedule{{0.0}, {1.0}}.validate()), DomainError);
  EXPECT_THROW((DriveSchedule{{0.0, 0.0}, {1.0, 1.0}}.validate()), DomainError);
  EXPECT_THROW((DriveSchedule{{0.0, 1.0}, {1.0, -1.0}}.validate()), DomainError);
}

TEST(DarkState, MixingAngle) {
  EXPECT_NEAR(std::tan(mixing_angle(2.0, 9.0, 3.0)), 2.0, 1e-14);
  EXPECT_NEAR(mixing_angle(1.0, 1.0, 0.0), pi / 2, 1e-15);
  const MediumParams p = medium();
  EXPECT_NEAR(std::pow(std::tan(mixing_angle(p, 2 * kGamma)), 2), p.collective_coupling_sq() / (4 * kGamma * kGamma),
              1e-9 * p.collective_coupling_sq() / (4 * kGamma * kGamma));
}

TEST(DarkState, CoefficientsNormalized) {
  for (int n = 0; n <= 6; ++n)
    for (Real th : {0.0, 0.3, 1.1, pi / 2}) EXPECT_NEAR(dark_state_coefficients(n, th).squaredNorm(), 1.0, 1e-13);
  const VectorXr one = dark_state_coefficients(1, 0.4);
  EXPECT_NEAR(one[0], std::cos(0.4), 1e-15);
  EXPECT_NEAR(one[1], -std::sin(0.4), 1e-15);
}

TEST(DarkState, FiniteNApproachesLargeN) {
  const Real th = 0.7;
  Real last = 1e9;
  for (int N : {4, 16, 64, 256, 1024}) {
    VectorXr a = finite_n_dark_coefficients(3, N, th);
    a.normalize();
    const Real gap = (a - dark_state_coefficients(3, th)).norm();
    EXPECT_LT(gap, last);
    last = gap;
  }
  EXPECT_LT(last, 5e-3);
  EXPECT_THROW(finite_n_dark_coefficients(3, 2, th), DomainError);
}

TEST(DarkState, ExactFiniteNIsAnnihilated) {
  for (int N : {1, 2, 3, 4})
    for (int n = 0; n <= std::min(N, 2); ++n)
      for (Real th : {0.2, 0.9, 1.4}) {
        DarkOracleConfig cfg;
        cfg.n_atoms = N;
        cfg.n_photons = n;
        cfg.max_photons = 2;
        cfg.theta = th;
        cfg.delta = 0.4;
        EXPECT_LT(hamiltonian_dark_oracle(cfg), 1e-12) << "N=" << N << " n=" << n << " theta=" << th;
      }
}

TEST(DarkState, LargeNCoefficientsImproveWithN) {
  Real last = 1e9;
  for (int N : {2, 3, 4, 5, 6}) {
    DarkOracleConfig cfg;
    cfg.n_atoms = N;
    cfg.n_photons = 2;
    cfg.theta = 0.9;
    cfg.finite_n = false;
    const Real r = hamiltonian_dark_oracle(cfg);
    EXPECT_LT(r, last) << "N=" << N;
    last = r;
  }
  DarkOracleConfig one;
  one.n_photons = 1;
  one.theta = 0.9;
  one.finite_n = false;
  EXPECT_LT(hamiltonian_dark_oracle(one), 1e-12);
}

TEST(SlowLight, ConstantDriveDelayAndLoss) {
  MediumParams p = medium();
  p.gamma_R = 1e-4 * kGamma;
  const PulseEnvelope in = gaussian_pulse(300.0, 2048, -2000.0, p.length);
  const Real t = 1e-5;
  const ConstantDriveResult r = propagate_constant_drive(in, p, t);
  const Real vg = group_velocity(p).exact;
  EXPECT_NEAR(r.group_velocity, vg, 1e-12 * vg);
  EXPECT_NEAR(r.transit_time, p.length / vg, 1e-18);
  EXPECT_NEAR(r.envelope.centroid() - in.centroid(), c * t - p.length * (c / vg - 1), 1e-6);
  const Real tan_sq = c / vg - 1;
  EXPECT_NEAR(r.amplitude_factor, std::exp(-tan_sq / c * p.gamma_R * p.length), 1e-12);
  EXPECT_NEAR(r.envelope.norm(), r.amplitude_factor * r.amplitude_factor, 1e-9);
  EXPECT_EQ(r.phase, 0.0);

  MediumParams off = p;
  off.rabi_d = 0;
  EXPECT_THROW(propagate_constant_drive(in, off, t), PreconditionError);
}

TEST(SlowLight, IntensityContinuousAtFaces) {
  const MediumParams p = medium();
  const PulseEnvelope in = gaussian_pulse(300.0, 2048, -1000.0, p.length);
  const Real t = 1e-6 * 3;
  for (Real face : {0.0, p.length}) {
    const Real eps = 1e-12;
    EXPECT_NEAR(intensity(in, p, face - eps, t), intensity(in, p, face + eps, t), 1e-6);
  }
}

TEST(Polariton, EvolutionConservesNormAndComponents) {
  const MediumParams p = medium();
  const PulseEnvelope f = gaussian_pulse(1e-4, 512, 5e-4);
  const Real th = mixing_angle(p, kGamma);
  PolaritonState s = PolaritonState::from_psi(f.samples, th, p, f.z_start, f.dz, 0.0);
  EXPECT_LT((s.psi() - f.samples).norm(), 1e-13);
  const Real n0 = s.norm();
  const PolaritonState e = evolve_polariton(s, ramp_down(kGamma, 0, 1e-5), 1e-8);
  EXPECT_NEAR(e.norm(), n0, 1e-12 * n0);
  EXPECT_NEAR(e.theta, pi / 2, 1e-15);
  EXPECT_LT(e.photonic.norm(), 1e-12);
  EXPECT_TRUE(e.warnings.empty());
}

TEST(Polariton, FastRampWarns) {
  const MediumParams p = medium();
  const PulseEnvelope f = gaussian_pulse(1e-4, 256, 5e-4);
  PolaritonState s = PolaritonState::from_psi(f.samples, mixing_angle(p, kGamma), p, f.z_start, f.dz, 0.0);
  const PolaritonState e = evolve_polariton(s, DriveSchedule::linear_ramp(kGamma, 0, 0, 1e-9), 1e-10);
  EXPECT_FALSE(e.warnings.empty());
}

TEST(Storage, Feasibility) {
  const MediumParams p = medium();
  const Real vg = group_velocity(p).exact;
  EXPECT_TRUE(storage_feasibility(p, 0.7 * p.length / vg).all_pass());
  EXPECT_FALSE(storage_feasibility(p, 1.2 * p.length / vg).find("fits_in_medium").pass);
  EXPECT_FALSE(storage_feasibility(p, 0.3 * p.length / vg).find("depth_lower_bound").pass);
}

TEST(Storage, RoundTripRestoresPulse) {
  const MediumParams p = medium();
  const RoundTrip r = round_trip(p, 0.7);
  EXPECT_NEAR(r.stored.norm(), r.in.norm(), 1e-9);
  EXPECT_TRUE(r.stored.warnings.empty());
  EXPECT_GT(shape_fidelity(r.in, r.out), 0.999);
  EXPECT_NEAR(r.out.norm(), r.in.norm(), 1e-9);
  EXPECT_GT(r.stored.containment, 0.5);
  EXPECT_LE(r.stored.containment, 1.0);
}

TEST(Storage, EfficiencyMonotoneInDepth) {
  Real last = 0;
  for (Real depth : {60.0, 100.0, 300.0, 1000.0}) {
    const RoundTrip r = round_trip(medium(depth), 0.7);
    const Real figure = shape_fidelity(r.in, r.out) * r.stored.expected_efficiency;
    EXPECT_GT(figure, last) << "depth " << depth;
    last = figure;
  }
}

TEST(Storage, HoldDecaysSpinWave) {
  const RoundTrip r = round_trip(medium(), 0.7);
  const SpinWave h = hold(r.stored, 1e3, 1e-4);
  EXPECT_NEAR(h.norm(), r.stored.norm() * std::exp(-2 * 1e3 * 1e-4), 1e-12);
  EXPECT_NEAR(h.clock, r.stored.clock + 1e-4, 1e-18);
  EXPECT_THROW(hold(r.stored, 1e3, -1), DomainError);
}

TEST(Storage, Preconditions) {
  const MediumParams p = medium();
  const Real vg = group_velocity(p).exact;
  const PulseEnvelope in = gaussian_pulse(0.7 * p.length / vg * c / std::sqrt(2.0), 1024, 0, p.length);
  const Real ramp = 20.0 / transparency_width(p);
  EXPECT_THROW(store(in, p, DriveSchedule::constant(kGamma, 0, ramp), ramp / 10), PreconditionError);
  EXPECT_THROW(store(in, p, ramp_up(kGamma, 0, ramp), ramp / 10), PreconditionError);
  const PulseEnvelope wide = gaussian_pulse(1.5 * p.length / vg * c / std::sqrt(2.0), 1024, 0, p.length);
  EXPECT_THROW(store(wide, p, ramp_down(kGamma, 0, ramp), ramp / 10), PreconditionError);
  const SpinWave w = store(in, p, ramp_down(kGamma, 0, ramp), ramp / 100);
  EXPECT_THROW(retrieve(w, p, ramp_down(kGamma, ramp, ramp)), PreconditionError);
  EXPECT_THROW(retrieve(w, p, ramp_up(kGamma, 0.5 * ramp, ramp)), PreconditionError);
}
