#pragma once

#include "eitqc/types.hpp"

namespace eitqc::spectral {

/// Angular wavenumbers of an n-point periodic grid with spacing dz, in
/// FFT order (0, 1, ..., n/2-1, -n/2, ..., -1) * 2*pi/(n*dz).
VectorXr wavenumbers(Eigen::Index n, Real dz);

VectorXc fft(const VectorXc& samples);
VectorXc ifft(const VectorXc& spectrum);

/// Exact band-limited translation of a periodic signal: returns g with
/// g(z) = f(z - shift).  Unitary up to round-off.
VectorXc shift(const VectorXc& samples, Real dz, Real shift);

/// Trigonometric interpolation of the periodic signal at arbitrary points
/// (coordinates relative to the first sample).
VectorXc interpolate(const VectorXc& samples, Real dz, const VectorXr& points);

bool is_power_of_two(Eigen::Index n);

}  // namespace eitqc::spectral
