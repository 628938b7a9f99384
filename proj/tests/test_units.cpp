#include <gtest/gtest.h>

#include "eitqc/constants.hpp"
#include "eitqc/rng.hpp"
#include "eitqc/spectral.hpp"
#include "eitqc/units.hpp"

using namespace eitqc;
using constants::pi;

TEST(Units, FrequenciesAreAngular) {
  EXPECT_DOUBLE_EQ(units::parse("1 Hz"), 2 * pi);
  EXPECT_DOUBLE_EQ(units::parse("3 MHz"), 2 * pi * 3e6);
  EXPECT_DOUBLE_EQ(units::parse("384 THz"), 2 * pi * 384e12);
  EXPECT_DOUBLE_EQ(units::parse("5 rad/s"), 5.0);
}

TEST(Units, LengthsTimesAndBareNumbers) {
  EXPECT_DOUBLE_EQ(units::parse("1 mm"), 1e-3);
  EXPECT_DOUBLE_EQ(units::parse("10 um"), 1e-5);
  EXPECT_DOUBLE_EQ(units::parse("0.1 us"), 1e-7);
  EXPECT_DOUBLE_EQ(units::parse("  2.5e3 "), 2.5e3);
  EXPECT_DOUBLE_EQ(units::parse("1e12 cm^-3"), 1e18);
  EXPECT_DOUBLE_EQ(units::parse("0.25pi"), 0.25 * pi);
  EXPECT_DOUBLE_EQ(units::parse("90 deg"), 0.5 * pi);
}

TEST(Units, RejectsGarbage) {
  EXPECT_THROW(units::parse("abc"), DomainError);
  EXPECT_THROW(units::parse("3 furlongs"), DomainError);
  EXPECT_THROW(units::parse(""), DomainError);
}

TEST(Rng, SubstreamsAreReproducibleAndDistinct) {
  Rng a = Rng::substream(5, 3), b = Rng::substream(5, 3), c = Rng::substream(5, 4);
  const double x = a.uniform();
  EXPECT_EQ(x, b.uniform());
  EXPECT_NE(x, c.uniform());
}

TEST(Rng, UniformMoments) {
  Rng r(1);
  const int n = 200000;
  double s = 0, s2 = 0;
  for (int i = 0; i < n; ++i) {
    const double u = r.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    s += u;
    s2 += u * u;
  }
  EXPECT_NEAR(s / n, 0.5, 5 * std::sqrt(1.0 / 12 / n));
  EXPECT_NEAR(s2 / n - (s / n) * (s / n), 1.0 / 12, 2e-3);
}

TEST(Spectral, FftRoundTrip) {
  Rng r(2);
  VectorXc f(64);
  for (auto& v : f) v = {r.uniform() - 0.5, r.uniform() - 0.5};
  EXPECT_LT((spectral::ifft(spectral::fft(f)) - f).norm(), 1e-13);
}

TEST(Spectral, ShiftIsUnitaryAndExactOnBandLimited) {
  const Eigen::Index n = 64;
  const Real dz = 0.1, box = n * dz;
  VectorXc f(n), expected(n);
  const Real s = 0.237;
  for (Eigen::Index j = 0; j < n; ++j) {
    f[j] = std::cos(2 * pi * 3 * j * dz / box) + Complex(0, 1) * std::sin(2 * pi * 5 * j * dz / box);
    expected[j] = std::cos(2 * pi * 3 * (j * dz - s) / box) + Complex(0, 1) * std::sin(2 * pi * 5 * (j * dz - s) / box);
  }
  const VectorXc g = spectral::shift(f, dz, s);
  EXPECT_NEAR(g.norm(), f.norm(), 1e-12);
  EXPECT_LT((g - expected).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Spectral, WavenumbersInFftOrder) {
  const VectorXr q = spectral::wavenumbers(8, 0.5);
  const Real dq = 2 * pi / 4.0;
  EXPECT_DOUBLE_EQ(q[0], 0.0);
  EXPECT_DOUBLE_EQ(q[1], dq);
  EXPECT_DOUBLE_EQ(q[4], -4 * dq);
  EXPECT_DOUBLE_EQ(q[7], -dq);
  EXPECT_TRUE(spectral::is_power_of_two(1024));
  EXPECT_FALSE(spectral::is_power_of_two(96));
}
