#include <gtest/gtest.h>

#include "eitqc/blockade.hpp"
#include "eitqc/constants.hpp"

using namespace eitqc;
using constants::pi;

namespace {

TrapConfig rb_set() {
  TrapConfig t;
  t.n_atoms = 1e4;
  t.length = 10e-6;
  t.rydberg_n = 50;
  t.rabi_r1 = 2 * pi * 100e3;
  t.delta_at_length = 2 * pi * 20e6;
  t.preparation_time = 0.1e-6;
  t.gamma_r = 2 * pi * 1.6e3;
  t.rng_seed = 42;
  return t;
}

}  // namespace

TEST(Stark, ShiftAndDipole) {
  RydbergStark s{50, 49, 0, 100.0};
  EXPECT_NO_THROW(s.validate());
  const Real d = 1.5 * 50 * 49 * constants::e * constants::a0;
  EXPECT_NEAR(s.dipole(), d, 1e-12 * d);
  EXPECT_NEAR(stark_shift(s), d * 100.0 / constants::hbar, 1e-9 * d * 100.0 / constants::hbar);
  EXPECT_THROW((RydbergStark{50, 48, 0, 1}.validate()), DomainError);
  EXPECT_THROW((RydbergStark{50, 0, 50, 1}.validate()), DomainError);
}

TEST(Dipole, TensorLimits) {
  const Real d = 1e-27, r = 5e-6;
  const Real scale = d * d / (4 * pi * constants::epsilon0 * r * r * r * constants::hbar);
  const Eigen::Vector3d z(0, 0, d);
  EXPECT_NEAR(dd_potential(z, z, {r, 0, 0}), scale, 1e-12 * scale);
  EXPECT_NEAR(dd_potential(z, z, {0, 0, r}), -2 * scale, 1e-12 * scale);
  // Magic angle.
  const Real a = std::acos(1 / std::sqrt(3.0));
  EXPECT_NEAR(dd_potential(z, z, {r * std::sin(a), 0, r * std::cos(a)}), 0.0, 1e-12 * scale);
}

TEST(Dipole, PairShiftScaling) {
  EXPECT_NEAR(std::abs(dd_shift(50, 10e-6)) / (2 * pi * 1e6), 24.38, 0.01);
  EXPECT_NEAR(dd_shift(50, 5e-6) / dd_shift(50, 10e-6), 8.0, 1e-12);
  EXPECT_NEAR(dd_shift(100, 10e-6) / dd_shift(50, 10e-6), 16.0, 1e-12);
  EXPECT_LT(dd_shift(50, 10e-6), 0.0);
}

TEST(Trap, Validation) {
  TrapConfig t = rb_set();
  EXPECT_NO_THROW(t.validate());
  t.area = 1e-10;
  t.density = 2 * t.n_atoms / (t.area * t.length);
  EXPECT_THROW(t.validate(), DomainError);
  t = rb_set();
  t.geometry = PairGeometry::Cylinder;
  EXPECT_THROW(t.validate(), DomainError);
  EXPECT_THROW(p_double_mc(rb_set(), 100), DomainError);
}

TEST(Trap, DefaultsFromPhysics) {
  TrapConfig t = rb_set();
  EXPECT_NEAR(t.pulse_time(), pi / (2 * 100 * t.rabi_r1), 1e-20);
  t.delta_at_length = 0;
  EXPECT_DOUBLE_EQ(t.shift_at_length(), std::abs(dd_shift(50, t.length)));
  t.density = 8e18;
  EXPECT_NEAR(t.min_pair_distance(), 0.5 * 5e-7, 1e-15);
}

TEST(MonteCarlo, FixedPairsHaveNoSpread) {
  TrapConfig t = rb_set();
  t.geometry = PairGeometry::Fixed;
  const McEstimate m = p_double_mc(t, 20000);
  const Real exact = t.n_atoms * std::pow(t.rabi_r1 / t.delta_at_length, 2);
  EXPECT_NEAR(m.mean, exact, 1e-12 * exact);
  EXPECT_LT(m.std_err, 1e-12 * exact);
}

TEST(MonteCarlo, LineMomentIsOneOver28) {
  const TrapConfig t = rb_set();
  const McEstimate m = p_double_mc(t, 400000);
  const Real exact = t.n_atoms * std::pow(t.rabi_r1 / t.delta_at_length, 2) / 28.0;
  EXPECT_LT(std::abs(m.mean - exact), 5 * m.std_err);
  EXPECT_EQ(m.samples, 400000);
}

TEST(MonteCarlo, IndependentOfWorkerCount) {
  const TrapConfig t = rb_set();
  const McEstimate a = p_double_mc(t, 100000, 1), b = p_double_mc(t, 100000, 4);
  EXPECT_EQ(a.mean, b.mean);
  EXPECT_EQ(a.std_err, b.std_err);
  TrapConfig other = t;
  other.rng_seed = 43;
  EXPECT_NE(p_double_mc(other, 100000).mean, a.mean);
}

TEST(MonteCarlo, MinimumDistanceClampRaisesEstimate) {
  TrapConfig t = rb_set();
  const Real free = p_double_mc(t, 100000).mean;
  t.min_distance = 0.3 * t.length;
  EXPECT_GT(p_double_mc(t, 100000).mean, free);
}

TEST(MonteCarlo, CylinderSampling) {
  TrapConfig t = rb_set();
  t.geometry = PairGeometry::Cylinder;
  t.area = pi * 1e-12;
  const McEstimate m = p_double_mc(t, 100000);
  EXPECT_GT(m.mean, 0.0);
  EXPECT_TRUE(std::isfinite(m.std_err));
}

TEST(Source, RbSetFidelity) {
  const FidelityReport r = source_fidelity(rb_set(), 1000000);
  EXPECT_TRUE(r.checks.all_pass());
  EXPECT_GE(r.fidelity, 0.98);
  EXPECT_NEAR(r.p_dephase, 2 * pi * 1.6e3 * 0.1e-6, 1e-15);
  EXPECT_NEAR(r.fidelity, 1 - r.p_double - r.p_dephase, 1e-15);
  EXPECT_NEAR(r.effective_shift, std::sqrt(1e4 * std::pow(2 * pi * 100e3, 2) / r.p_double), 1e-3);
  const FidelityReport again = source_fidelity(rb_set(), 1000000);
  EXPECT_EQ(again.p_double, r.p_double);
  EXPECT_EQ(again.fidelity, r.fidelity);
}

TEST(Source, WeakBlockadeFailsChecks) {
  TrapConfig t = rb_set();
  t.delta_at_length = 0.5 * t.rabi_r1;
  const FidelityReport r = source_fidelity(t, 20000);
  EXPECT_FALSE(r.checks.find("pair_shift_exceeds_rabi").pass);
  EXPECT_EQ(r.fidelity, 0.0);
}

TEST(Source, GeneratedPhotonIsNormalized) {
  MediumParams m;
  m.gamma_ge = 2 * pi * 3e6;
  m.omega = 2 * pi * 384e12;
  m.rabi_d = m.gamma_ge;
  m.length = 10e-6;
  m.kappa0 = 50.0 / m.length;
  const GeneratedPhoton g =
      generate_photon(rb_set(), m, DriveSchedule::linear_ramp(0, m.gamma_ge, 0, 1e-6), 20000, 1024);
  EXPECT_NEAR(g.envelope.norm(), 1.0, 1e-9);
  EXPECT_GT(g.envelope.origin_time, 0.0);
  MediumParams thin = m;
  thin.kappa0 = 1.0 / m.length;
  EXPECT_THROW(generate_photon(rb_set(), thin, DriveSchedule::linear_ramp(0, m.gamma_ge, 0, 1e-6), 20000),
               PreconditionError);
}
