#include "eitqc/spectral.hpp"

#include <cmath>

#include <unsupported/Eigen/FFT>

#include "eitqc/constants.hpp"

namespace eitqc::spectral {

VectorXr wavenumbers(Eigen::Index n, Real dz) {
  VectorXr k(n);
  const Real dk = constants::two_pi / (static_cast<Real>(n) * dz);
  for (Eigen::Index m = 0; m < n; ++m) k[m] = static_cast<Real>(m < (n + 1) / 2 ? m : m - n) * dk;
  return k;
}

VectorXc fft(const VectorXc& samples) {
  Eigen::FFT<Real> engine;
  VectorXc out;
  engine.fwd(out, samples);
  return out;
}

VectorXc ifft(const VectorXc& spectrum) {
  Eigen::FFT<Real> engine;
  VectorXc out;
  engine.inv(out, spectrum);
  return out;
}

VectorXc shift(const VectorXc& samples, Real dz, Real shift) {
  if (shift == 0.0) return samples;
  VectorXc spectrum = fft(samples);
  const VectorXr k = wavenumbers(samples.size(), dz);
  for (Eigen::Index m = 0; m < spectrum.size(); ++m) spectrum[m] *= std::polar(1.0, -k[m] * shift);
  return ifft(spectrum);
}

VectorXc interpolate(const VectorXc& samples, Real dz, const VectorXr& points) {
  const Eigen::Index n = samples.size();
  const VectorXc spectrum = fft(samples) / static_cast<Real>(n);
  const VectorXr k = wavenumbers(n, dz);
  const bool has_nyquist = n % 2 == 0;
  VectorXc out(points.size());
  for (Eigen::Index p = 0; p < points.size(); ++p) {
    const Real x = points[p];
    Complex acc = 0;
    for (Eigen::Index m = 0; m < n; ++m) {
      if (has_nyquist && m == n / 2)
        acc += spectrum[m] * std::cos(k[m] * x);
      else
        acc += spectrum[m] * std::polar(1.0, k[m] * x);
    }
    out[p] = acc;
  }
  return out;
}

bool is_power_of_two(Eigen::Index n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace eitqc::spectral
