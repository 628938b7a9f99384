#include "eitqc/medium.hpp"

#include <cmath>

#include "eitqc/constants.hpp"

namespace eitqc {

Real MediumParams::k() const { return omega / constants::c; }

Real MediumParams::collective_coupling_sq() const { return constants::c * kappa0 * gamma_ge; }

Real MediumParams::sigma0() const {
  return dipole_ge * dipole_ge * omega / (2.0 * constants::hbar * constants::c * constants::epsilon0 * gamma_ge);
}

void MediumParams::validate() const {
  if (!(gamma_ge > 0)) throw DomainError("gamma_ge must be positive");
  if (Gamma_e < 0) throw DomainError("Gamma_e must be non-negative");
  if (gamma_R < 0) throw DomainError("gamma_R must be non-negative");
  if (!(omega > 0)) throw DomainError("omega must be positive");
  if (!(kappa0 > 0)) throw DomainError("kappa0 must be positive");
  if (!(length > 0)) throw DomainError("length must be positive");
  if (area < 0 || density < 0 || n_atoms < 0 || dipole_ge < 0 || coupling_g < 0)
    throw DomainError("optional geometry/coupling fields must be non-negative");
  if (gamma_ge < 0.5 * Gamma_e) throw DomainError("gamma_ge must be at least Gamma_e/2");
  if (area > 0 && density > 0 && n_atoms > 0) {
    const Real expected = density * area * length;
    if (std::abs(n_atoms - expected) > 1e-6 * expected)
      throw DomainError("n_atoms inconsistent with density * area * length");
  }
  if (dipole_ge > 0 && density > 0) {
    const Real expected = sigma0() * density;
    if (std::abs(kappa0 - expected) > 1e-6 * expected)
      throw DomainError("kappa0 inconsistent with sigma0 * density");
  }
}

Complex normalized_susceptibility(const MediumParams& p, Real delta, Real delta_R) {
  // Exact Raman resonance with no spin decay: the dark state decouples fully.
  if (p.gamma_R == 0 && delta_R == 0 && p.rabi_sq() > 0) return Complex(0, 0);
  return normalized_susceptibility<Real>(p.gamma_ge, p.rabi_sq(), p.gamma_R, delta, delta_R);
}

Complex susceptibility(const MediumParams& p, Real delta, Real delta_R) {
  if (!(p.gamma_ge > 0) || p.gamma_R < 0) throw DomainError("susceptibility: nonpositive rate");
  return (2.0 * p.kappa0 / p.k()) * normalized_susceptibility(p, delta, delta_R);
}

OpticalResponse response(const MediumParams& p, Real delta_R) {
  OpticalResponse r;
  r.delta_R = delta_R;
  r.delta = delta_R + p.delta_d;
  r.chi = susceptibility(p, r.delta, delta_R);
  r.transmission = std::exp(-p.k() * r.chi.imag() * p.length);
  r.phase = 0.5 * p.k() * r.chi.real() * p.length;
  return r;
}

Real transmission(const MediumParams& p, Real delta_R, Real delta) {
  p.validate();
  // k Im chi L = 2 kappa0 L Im(chi_normalized); avoids the k/k round trip.
  return std::exp(-p.optical_depth() * normalized_susceptibility(p, delta, delta_R).imag());
}

Real transmission(const MediumParams& p, Real delta_R) { return transmission(p, delta_R, delta_R + p.delta_d); }

Real transparency_width(const MediumParams& p) {
  p.validate();
  if (!(p.optical_depth() > 1.0))
    throw PreconditionError("transparency_width: optical depth 2*kappa0*L must exceed 1");
  return p.rabi_sq() / (p.gamma_ge * std::sqrt(p.optical_depth()));
}

Real transmission_gaussian(const MediumParams& p, Real delta_R) {
  const Real w = transparency_width(p);
  return std::exp(-delta_R * delta_R / (w * w));
}

Real GroupVelocity::relative_gap() const { return std::abs(approx - exact) / exact; }

GroupVelocity group_velocity(const MediumParams& p) {
  p.validate();
  GroupVelocity v;
  const Real index_term = constants::c * p.kappa0 * p.gamma_ge / p.rabi_sq();
  v.exact = constants::c / (1.0 + index_term);
  v.approx = p.rabi_sq() / (p.kappa0 * p.gamma_ge);
  return v;
}

PhaseShift linear_phase_shift(const MediumParams& p, Real delta_R) {
  p.validate();
  PhaseShift s;
  s.approx = p.kappa0 * p.length * p.gamma_ge * delta_R / p.rabi_sq();
  s.exact = p.kappa0 * p.length * normalized_susceptibility(p, delta_R + p.delta_d, delta_R).real();
  s.inside_window = std::abs(delta_R) < transparency_width(p);
  return s;
}

Diagnostics eit_validity(const MediumParams& p, Real pulse_duration) {
  Diagnostics d;
  const Real rabi_sq = p.rabi_sq();
  const Real dd = std::abs(p.delta_d);
  d.checks.push_back(much_less("drive_detuning_raman", dd * p.gamma_R, rabi_sq));
  d.checks.push_back(much_less("drive_detuning_sq_raman", dd * dd * p.gamma_R / p.gamma_ge, rabi_sq));
  d.checks.push_back(much_less("optical_depth", 1.0, p.optical_depth()));

  const Real depth = p.optical_depth();
  const Real width = depth > 0 ? rabi_sq / (p.gamma_ge * std::sqrt(depth)) : 0.0;
  const Real inv_width = width > 0 ? 1.0 / width : std::numeric_limits<Real>::infinity();
  Check bw{"bandwidth", inv_width, pulse_duration, 0, false};
  bw.margin = pulse_duration / inv_width;
  bw.pass = pulse_duration >= inv_width;
  d.checks.push_back(bw);

  const Real vg = rabi_sq > 0 ? constants::c / (1.0 + constants::c * p.kappa0 * p.gamma_ge / rabi_sq) : 0.0;
  const Real fill = pulse_duration * vg / p.length;
  d.checks.push_back(much_less("containment_lower", depth > 0 ? 1.0 / std::sqrt(depth) : 1.0, fill, 5.0));
  d.checks.push_back(less("containment_upper", fill, 1.0));
  return d;
}

std::vector<SpectrumRow> spectrum(const MediumParams& p, Real from, Real to, int points, bool normalized) {
  p.validate();
  if (points < 2) throw DomainError("spectrum: need at least two points");
  std::vector<SpectrumRow> rows;
  rows.reserve(static_cast<std::size_t>(points));
  const Real scale = normalized ? 1.0 : 2.0 * p.kappa0 / p.k();
  for (int i = 0; i < points; ++i) {
    const Real x = from + (to - from) * i / (points - 1);
    const Real delta_R = x * p.gamma_ge;
    const Complex chi = normalized_susceptibility(p, delta_R + p.delta_d, delta_R);
    rows.push_back({x, scale * chi.real(), scale * chi.imag(), std::exp(-p.optical_depth() * chi.imag())});
  }
  return rows;
}

}  // namespace eitqc
