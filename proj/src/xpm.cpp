#include "eitqc/xpm.hpp"

#include <algorithm>
#include <cmath>

#include "eitqc/constants.hpp"
#include "eitqc/spectral.hpp"

namespace eitqc {
namespace {

using constants::c;
using constants::pi;

Real wave_number_of(const TripodParams& p) { return p.omega / c; }

// Largest m with 2 pi m / box <= delta_q / 2, kept below the Nyquist index.
Eigen::Index band_edge(Real delta_q, Eigen::Index n, Real dz) {
  const Real box = static_cast<Real>(n) * dz;
  auto m = static_cast<Eigen::Index>(std::floor(delta_q * box / (4.0 * pi) + 1e-9));
  return std::clamp<Eigen::Index>(m, 0, n / 2 - 1);
}

MatrixXc fft2(MatrixXc m, bool inverse) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    m.col(j) = inverse ? spectral::ifft(m.col(j)) : spectral::fft(m.col(j));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    const VectorXc row = m.row(i).transpose();
    m.row(i) = (inverse ? spectral::ifft(row) : spectral::fft(row)).transpose();
  }
  return m;
}

}  // namespace

Real TripodParams::g2n() const {
  if (coupling_g > 0 && n_atoms > 0) return coupling_g * coupling_g * n_atoms;
  return collective_coupling_sq();
}

Real TripodParams::g2() const {
  if (coupling_g > 0) return coupling_g * coupling_g;
  if (n_atoms > 0) return g2n() / n_atoms;
  throw PreconditionError("tripod: single-atom coupling needs coupling_g or n_atoms");
}

Real TripodParams::tan2_theta() const { return g2n() / (2.0 * rabi_sq()); }

Real TripodParams::group_velocity() const { return c / (1.0 + tan2_theta()); }

void TripodParams::validate() const {
  MediumParams::validate();
  if (!(rabi_sq() > 0)) throw DomainError("tripod: drive Rabi frequency must be non-zero");
  if (!(delta_q > 0)) throw DomainError("tripod: delta_q must be positive");
  if (modes < 2) throw DomainError("tripod: need at least two modes");
  if (b_field > 0) {
    const Real expected = constants::mu_B * m_F * g_factor * b_field / constants::hbar;
    if (std::abs(zeeman - expected) > 1e-6 * std::abs(expected))
      throw DomainError("tripod: zeeman inconsistent with mu_B m_F g_F B / hbar");
  }
  if (optical_depth() > 1.0 && delta_q > transparency_width(*this) / c * (1.0 + 1e-12))
    throw DomainError("tripod: delta_q exceeds the transparency window delta_omega_tw / c");
}

XpmCoefficients xpm_coefficients(const TripodParams& p) {
  p.validate();
  XpmCoefficients x;
  const Real W = p.rabi_sq();
  const Real D = p.zeeman;
  const Real Dd = p.delta_d;
  const Real g2 = p.g2();
  x.tan2_theta = p.tan2_theta();
  x.v_g = p.group_velocity();
  x.kappa1 = x.tan2_theta / c * (p.gamma_R + p.gamma_ge * (D + Dd) * (D + Dd) / W);
  x.kappa2 = x.tan2_theta / c * (p.gamma_R + p.gamma_ge * (D - Dd) * (D - Dd) / W);
  x.s1 = x.tan2_theta / c * (1.0 + D * (D + Dd) / W);
  x.s2 = x.tan2_theta / c * (1.0 + D * (D - Dd) / W);
  const Complex i(0, 1);
  if (D != 0) {
    x.eta1 = g2 * 2.0 * D * x.tan2_theta / (c * W * (2.0 * D - i * p.gamma_R));
    x.eta2 = g2 * 2.0 * D * x.tan2_theta / (c * W * (2.0 * D + i * p.gamma_R));
  }
  x.eta_simple = g2 / (x.v_g * W);

  const Real kv = wave_number_of(p) * p.v_bar;
  auto& ch = x.validity.checks;
  ch.push_back(much_less("drive_vs_detuning_plus", std::abs((D + kv) * (D + Dd)), W));
  ch.push_back(much_less("drive_vs_detuning_minus", std::abs((D + kv) * (D - Dd)), W));
  ch.push_back(much_less("drive_vs_raman", p.gamma_R * (p.gamma_ge + kv), W));
  ch.push_back(much_less("absorption_1", x.kappa1 * p.length, 1.0));
  ch.push_back(much_less("absorption_2", x.kappa2 * p.length, 1.0));
  for (const auto& chk : ch)
    if (!chk.pass) x.warnings.push_back("xpm validity check failed: " + chk.name);
  return x;
}

Real conditional_phase(const TripodParams& p) {
  p.validate();
  const Real eta = p.g2() / (p.group_velocity() * p.rabi_sq());
  return eta * p.delta_d * p.length * p.length * p.delta_q / (2.0 * pi);
}

PiCondition pi_condition(const TripodParams& p) {
  p.validate();
  PiCondition r;
  const Real a = p.delta_q * p.length / (2.0 * pi);
  r.lhs = a * a;
  r.rhs = p.group_velocity() / c * p.rabi_sq() / p.g2();
  r.ratio = r.lhs / r.rhs;
  r.holds = r.lhs > r.rhs;
  r.detuning_ratio = 2.0 * p.delta_d / (c * p.delta_q);
  return r;
}

MatrixXc fourier_amplitudes(const MatrixXc& psi, Real dz) {
  if (psi.rows() != psi.cols() || psi.rows() < 1) throw DomainError("fourier_amplitudes: grid must be square");
  if (!(dz > 0)) throw DomainError("fourier_amplitudes: dz must be positive");
  return fft2(psi, false) * (dz / static_cast<Real>(psi.rows()));
}

MatrixXc inverse_fourier_amplitudes(const MatrixXc& xi, Real dz) {
  if (xi.rows() != xi.cols() || xi.rows() < 1) throw DomainError("inverse_fourier_amplitudes: grid must be square");
  if (!(dz > 0)) throw DomainError("inverse_fourier_amplitudes: dz must be positive");
  return fft2(xi, true) * (static_cast<Real>(xi.rows()) / dz);
}

MatrixXc TwoPhotonState::psi() const { return inverse_fourier_amplitudes(xi, dz); }

void TwoPhotonState::validate() const {
  if (xi.rows() != xi.cols() || xi.rows() < 2) throw DomainError("two-photon state: grid must be square");
  if (!(dz > 0) || !(delta_q > 0)) throw DomainError("two-photon state: dz and delta_q must be positive");
  if (std::abs(norm() - 1.0) > 1e-9) throw DomainError("two-photon state: sum |xi|^2 must be 1");
}

TwoPhotonState TwoPhotonState::from_psi(const MatrixXc& psi, Real z_start, Real dz, Real delta_q, Real t) {
  TwoPhotonState s;
  s.xi = fourier_amplitudes(psi, dz);
  s.z_start = z_start;
  s.dz = dz;
  s.delta_q = delta_q;
  s.t = t;
  return s;
}

TwoPhotonState TwoPhotonState::product(const VectorXc& f1, const VectorXc& f2, Real z_start, Real dz, Real delta_q,
                                       Real t) {
  if (f1.size() != f2.size()) throw DomainError("product state: envelope sizes differ");
  return from_psi(f1 * f2.transpose(), z_start, dz, delta_q, t);
}

Real xpm_kernel(XpmKernel kind, Real x, Real delta_q, Eigen::Index n, Real dz) {
  if (kind == XpmKernel::Sinc) {
    const Real a = 0.5 * delta_q * x;
    return a == 0 ? 1.0 : std::sin(a) / a;
  }
  if (n < 2 || !(dz > 0)) throw DomainError("xpm_kernel: band kernel needs the grid");
  const Eigen::Index m_max = band_edge(delta_q, n, dz);
  const Real dk = 2.0 * pi / (static_cast<Real>(n) * dz);
  Real d = 1.0;
  for (Eigen::Index m = 1; m <= m_max; ++m) d += 2.0 * std::cos(dk * static_cast<Real>(m) * x);
  return d / static_cast<Real>(2 * m_max + 1);
}

Real interaction_phase(const TripodParams& p, Real distance) {
  return conditional_phase(p) * distance / p.length;
}

TwoPhotonState evolve_two_photon(const TwoPhotonState& state, const TripodParams& p, Real distance) {
  state.validate();
  if (distance < 0) throw DomainError("evolve_two_photon: distance must be non-negative");
  const XpmCoefficients x = xpm_coefficients(p);
  if (x.kappa1 * distance * 10.0 > 1.0 || x.kappa2 * distance * 10.0 > 1.0)
    throw PreconditionError("evolve_two_photon: absorption not negligible (kappa L << 1 violated)");

  const Eigen::Index n = state.modes();
  const Real phi = interaction_phase(p, distance);
  MatrixXc psi = state.psi();
  if (phi != 0) {
    VectorXr kernel(n);
    for (Eigen::Index k = 0; k < n; ++k) kernel[k] = xpm_kernel(XpmKernel::Band, k * state.dz, state.delta_q, n, state.dz);
    kernel /= kernel.norm();
    const Complex factor = std::polar(1.0, phi) - 1.0;
    VectorXc u(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) u[j] = kernel[((j - i) % n + n) % n];
      const Complex proj = u.dot(psi.row(i).transpose());
      psi.row(i) += (factor * proj) * u.transpose();
    }
  }

  TwoPhotonState out = state;
  out.xi = fourier_amplitudes(psi, state.dz);
  const Real delay = distance * (c / x.v_g - 1.0);
  const VectorXr q = spectral::wavenumbers(n, state.dz);
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b) out.xi(a, b) *= std::polar(1.0, (q[a] + q[b]) * delay);
  out.t = state.t + distance / x.v_g;
  return out;
}

Complex two_photon_wavefunction(const TripodParams& p, const Envelope& f1, const Envelope& f2, Real z, Real zp, Real t,
                                XpmKernel kernel, Eigen::Index n, Real dz) {
  if (z < p.length || zp < p.length)
    throw PreconditionError("two_photon_wavefunction: only defined after the interaction, z, z' >= L");
  const Real shift = p.length * (c / p.group_velocity() - 1.0) - c * t;
  const Real phi = conditional_phase(p);
  const Complex a = f1(z + shift);
  const Complex b = f2(zp + shift);
  const Complex b_at_z = f2(z + shift);
  const Real k = xpm_kernel(kernel, zp - z, p.delta_q, n, dz);
  return a * b + a * b_at_z * k * (std::polar(1.0, phi) - 1.0);
}

MatrixXr second_order_correlation(const MatrixXc& psi) { return psi.cwiseAbs2(); }

TwoPhotonState cz_outcome(const TripodParams& p, const TwoPhotonState& state, Real tolerance) {
  const Real phi = conditional_phase(p);
  if (!(std::abs(phi - pi) < tolerance))
    throw PreconditionError("cz_outcome: conditional phase not within tolerance of pi");
  TwoPhotonState out = state;
  out.xi *= std::polar(1.0, phi);
  return out;
}

}  // namespace eitqc
