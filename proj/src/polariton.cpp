#include "eitqc/polariton.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "eitqc/constants.hpp"
#include "eitqc/spectral.hpp"

namespace eitqc {
namespace {

using constants::c;

// Translates samples by `distance`, moving whole cells into z_start.
void translate(VectorXc& samples, Real& z_start, Real dz, Real distance) {
  const Real cells = std::round(distance / dz);
  z_start += cells * dz;
  samples = spectral::shift(samples, dz, distance - cells * dz);
}

Real tan_sq_theta(const MediumParams& p, Real rabi) {
  return p.collective_coupling_sq() / (rabi * rabi);
}

Real binomial(int n, int k) {
  Real r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

// --- PulseEnvelope -------------------------------------------------------

Real PulseEnvelope::centroid() const {
  Real w = 0, m = 0;
  for (Eigen::Index j = 0; j < samples.size(); ++j) {
    const Real i = std::norm(samples[j]);
    w += i;
    m += i * z(j);
  }
  return m / w;
}

Real PulseEnvelope::rms_width() const {
  const Real mean = centroid();
  Real w = 0, v = 0;
  for (Eigen::Index j = 0; j < samples.size(); ++j) {
    const Real i = std::norm(samples[j]);
    w += i;
    v += i * (z(j) - mean) * (z(j) - mean);
  }
  return std::sqrt(v / w);
}

Real PulseEnvelope::duration() const { return 2.0 * rms_width() / c; }

void PulseEnvelope::normalize() { samples /= std::sqrt(norm()); }

PulseEnvelope PulseEnvelope::translated(Real distance) const {
  PulseEnvelope out = *this;
  translate(out.samples, out.z_start, dz, distance);
  return out;
}

VectorXc PulseEnvelope::evaluate(const VectorXr& points) const {
  return spectral::interpolate(samples, dz, points.array() - z_start);
}

Real default_box_length(Real pulse_length, Real medium_length) { return 4.0 * std::max(pulse_length, medium_length); }

PulseEnvelope gaussian_pulse(Real sigma, Eigen::Index grid_size, Real center, Real medium_length, Real box_length) {
  if (!(sigma > 0)) throw DomainError("gaussian_pulse: sigma must be positive");
  if (!spectral::is_power_of_two(grid_size)) throw DomainError("gaussian_pulse: grid size must be a power of two");
  const Real box = box_length > 0 ? box_length : default_box_length(10.0 * sigma, medium_length);
  PulseEnvelope f;
  f.dz = box / static_cast<Real>(grid_size);
  f.z_start = center - 0.5 * box;
  f.samples.resize(grid_size);
  for (Eigen::Index j = 0; j < grid_size; ++j) {
    const Real x = (f.z(j) - center) / sigma;
    f.samples[j] = std::exp(-0.5 * x * x);
  }
  f.normalize();
  return f;
}

Real shape_fidelity(const PulseEnvelope& a, const PulseEnvelope& b) {
  if (a.grid_size() != b.grid_size() || std::abs(a.dz - b.dz) > 1e-9 * a.dz)
    throw DomainError("shape_fidelity: grid mismatch");
  // Align b onto a's grid and centroid.
  const Real offset = a.centroid() - b.centroid();
  VectorXc moved = spectral::shift(b.samples, b.dz, offset + (b.z_start - a.z_start));
  const Complex overlap = a.samples.dot(moved);
  return std::norm(overlap) / (a.samples.squaredNorm() * moved.squaredNorm());
}

// --- DriveSchedule -------------------------------------------------------

DriveSchedule DriveSchedule::constant(Real rabi_d, Real t0, Real t1) { return {{t0, t1}, {rabi_d, rabi_d}}; }

DriveSchedule DriveSchedule::linear_ramp(Real from, Real to, Real t0, Real duration) {
  return {{t0, t0 + duration}, {from, to}};
}

void DriveSchedule::validate() const {
  if (times.size() < 2 || times.size() != rabi.size()) throw DomainError("drive schedule needs >= 2 samples");
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (rabi[i] < 0) throw DomainError("drive schedule: Omega_d must be non-negative");
    if (i > 0 && !(times[i] > times[i - 1])) throw DomainError("drive schedule: times must increase");
  }
}

Real DriveSchedule::at(Real t) const {
  if (t <= times.front()) return rabi.front();
  if (t >= times.back()) return rabi.back();
  const auto it = std::upper_bound(times.begin(), times.end(), t);
  const std::size_t i = static_cast<std::size_t>(it - times.begin());
  const Real u = (t - times[i - 1]) / (times[i] - times[i - 1]);
  return rabi[i - 1] + u * (rabi[i] - rabi[i - 1]);
}

Real DriveSchedule::displacement(Real t0, Real t1, Real collective_sq) const {
  // Antiderivative of W^2/(W^2+G^2) in W is W - G atan(W/G).
  const Real G = std::sqrt(collective_sq);
  const auto speed = [&](Real w) { return w * w / (w * w + collective_sq); };
  const auto prim = [&](Real w) { return w - G * std::atan(w / G); };
  std::vector<Real> cuts{t0};
  for (Real t : times)
    if (t > t0 && t < t1) cuts.push_back(t);
  cuts.push_back(t1);
  Real total = 0;
  for (std::size_t i = 1; i < cuts.size(); ++i) {
    const Real a = cuts[i - 1], b = cuts[i];
    const Real wa = at(a), wb = at(b);
    const Real slope = (wb - wa) / (b - a);
    if (std::abs(wb - wa) <= 1e-14 * std::max(wa, wb))
      total += speed(0.5 * (wa + wb)) * (b - a);
    else
      total += (prim(wb) - prim(wa)) / slope;
  }
  return c * total;
}

// --- Mixing angle and dark states ---------------------------------------

Real mixing_angle(Real g, Real n_atoms, Real rabi_d) {
  if (rabi_d < 0) throw DomainError("mixing_angle: Omega_d must be non-negative");
  return std::atan2(g * std::sqrt(n_atoms), rabi_d);
}

Real mixing_angle(const MediumParams& p, Real rabi_d) {
  return std::atan2(std::sqrt(p.collective_coupling_sq()), rabi_d);
}

VectorXr dark_state_coefficients(int n, Real theta) {
  if (n < 0) throw DomainError("dark_state_coefficients: n must be >= 0");
  VectorXr out(n + 1);
  for (int m = 0; m <= n; ++m)
    out[m] = std::sqrt(binomial(n, m)) * std::pow(-std::sin(theta), m) * std::pow(std::cos(theta), n - m);
  return out;
}

VectorXr finite_n_dark_coefficients(int n, int n_atoms, Real theta) {
  if (n < 0 || n > n_atoms) throw DomainError("finite_n_dark_coefficients: need 0 <= n <= N");
  // a_{m+1} = -(g / Omega) sqrt((n - m)(N - m) / (m + 1)) a_m, g sqrt(N) / Omega = tan(theta).
  const Real g = std::sin(theta) / std::sqrt(static_cast<Real>(n_atoms));
  const Real w = std::cos(theta);
  VectorXr a = VectorXr::Zero(n + 1);
  const auto step = [&](int m) { return std::sqrt((n - m) * static_cast<Real>(n_atoms - m) / (m + 1)); };
  if (g <= w) {
    a[0] = 1;
    for (int m = 0; m < n; ++m) a[m + 1] = -(g / w) * step(m) * a[m];
  } else {
    a[n] = 1;
    for (int m = n - 1; m >= 0; --m) a[m] = -(w / g) / step(m) * a[m + 1];
  }
  return a / a.norm();
}

Real hamiltonian_dark_oracle(const DarkOracleConfig& cfg) {
  const int N = cfg.n_atoms;
  const int nmax = cfg.max_photons;
  if (N < 1 || cfg.n_photons < 0 || cfg.n_photons > nmax || cfg.n_photons > N)
    throw DomainError("hamiltonian_dark_oracle: invalid sizes");
  Eigen::Index atom_dim = 1;
  for (int j = 0; j < N; ++j) atom_dim *= 3;
  const Eigen::Index dim = atom_dim * (nmax + 1);
  if (dim > cfg.dimension_cap) throw DomainError("hamiltonian_dark_oracle: basis exceeds dimension cap");

  std::vector<Real> z = cfg.positions;
  if (z.empty())
    for (int j = 0; j < N; ++j) z.push_back(0.37 + 1.91 * j + 0.23 * j * j);
  if (static_cast<int>(z.size()) != N) throw DomainError("hamiltonian_dark_oracle: position count mismatch");

  // Coupling scale fixed by g sqrt(N) = sin(theta), Omega_d = cos(theta).
  const Real g = std::sin(cfg.theta) / std::sqrt(static_cast<Real>(N));
  const Real rabi = std::cos(cfg.theta);

  enum : int { kG = 0, kE = 1, kS = 2 };
  std::vector<Eigen::Index> power(N);
  for (int j = 0; j < N; ++j) power[j] = j == 0 ? 1 : power[j - 1] * 3;
  const auto level = [&](Eigen::Index atoms, int j) { return static_cast<int>((atoms / power[j]) % 3); };
  const auto with = [&](Eigen::Index atoms, int j, int lv) { return atoms + (lv - level(atoms, j)) * power[j]; };

  MatrixXc H = MatrixXc::Zero(dim, dim);
  for (int p = 0; p <= nmax; ++p) {
    for (Eigen::Index atoms = 0; atoms < atom_dim; ++atoms) {
      const Eigen::Index col = p * atom_dim + atoms;
      for (int j = 0; j < N; ++j) {
        const int lv = level(atoms, j);
        const Complex probe_phase = std::polar(1.0, (cfg.k + cfg.q) * z[j]);
        const Complex drive_phase = std::polar(1.0, cfg.k_d * z[j]);
        if (lv == kE) {
          H(col, col) += cfg.delta;
          if (p < nmax)
            H((p + 1) * atom_dim + with(atoms, j, kG), col) += -g * std::sqrt(p + 1.0) * std::conj(probe_phase);
          H(p * atom_dim + with(atoms, j, kS), col) += -rabi * std::conj(drive_phase);
        } else if (lv == kG) {
          if (p > 0) H((p - 1) * atom_dim + with(atoms, j, kE), col) += -g * std::sqrt(Real(p)) * probe_phase;
        } else {
          H(p * atom_dim + with(atoms, j, kE), col) += -rabi * drive_phase;
        }
      }
    }
  }

  const int n = cfg.n_photons;
  const VectorXr coeff = cfg.finite_n ? finite_n_dark_coefficients(n, N, cfg.theta) : dark_state_coefficients(n, cfg.theta);
  const Real spin_k = cfg.k + cfg.q - cfg.k_d;
  VectorXc dark = VectorXc::Zero(dim);
  for (Eigen::Index atoms = 0; atoms < atom_dim; ++atoms) {
    int m = 0;
    Real phase = 0;
    bool ground_or_spin = true;
    for (int j = 0; j < N; ++j) {
      const int lv = level(atoms, j);
      if (lv == kE) ground_or_spin = false;
      if (lv == kS) {
        ++m;
        phase += spin_k * z[j];
      }
    }
    if (!ground_or_spin || m > n) continue;
    dark[(n - m) * atom_dim + atoms] = coeff[m] / std::sqrt(binomial(N, m)) * std::polar(1.0, phase);
  }
  return (H * dark).norm() / dark.norm();
}

// --- Constant drive -------------------------------------------------------

ConstantDriveResult propagate_constant_drive(const PulseEnvelope& pulse, const MediumParams& p, Real t,
                                             Real delta_R) {
  p.validate();
  const Real rabi_sq = p.rabi_sq();
  const Real delta = delta_R + p.delta_d;
  if (!(rabi_sq > 0)) throw PreconditionError("propagate_constant_drive: drive field is off");
  if (std::abs(delta_R * delta) > 0.1 * rabi_sq)
    throw PreconditionError("propagate_constant_drive: delta_R * Delta is not small against |Omega_d|^2");

  const Real tan_sq = tan_sq_theta(p, std::abs(p.rabi_d));
  const Real vg = c / (1.0 + tan_sq);
  const Real kappa = tan_sq / c * (p.gamma_R + p.gamma_ge * delta_R * delta_R / rabi_sq);

  ConstantDriveResult r;
  r.group_velocity = vg;
  r.transit_time = p.length / vg;
  r.amplitude_factor = std::exp(-kappa * p.length);
  r.phase = tan_sq / c * delta_R * p.length;
  r.envelope = pulse.translated(c * t - p.length * (c / vg - 1.0));
  r.envelope.samples *= std::polar(r.amplitude_factor, r.phase);
  r.envelope.origin_time = pulse.origin_time + t;
  return r;
}

Real intensity(const PulseEnvelope& pulse, const MediumParams& p, Real z, Real t) {
  const Real vg = group_velocity(p).exact;
  Real arg;
  if (z < 0)
    arg = z - c * t;
  else if (z < p.length)
    arg = z * c / vg - c * t;
  else
    arg = z + p.length * (c / vg - 1.0) - c * t;
  VectorXr at(1);
  at[0] = arg;
  return std::norm(pulse.evaluate(at)[0]);
}

// --- Polariton evolution --------------------------------------------------

VectorXc PolaritonState::psi() const { return std::cos(theta) * photonic - std::sin(theta) * spin; }

PolaritonState PolaritonState::from_psi(const VectorXc& psi, Real theta, const MediumParams& p, Real z_start,
                                        Real dz, Real clock) {
  PolaritonState s;
  s.theta = theta;
  s.photonic = std::cos(theta) * psi;
  s.spin = -std::sin(theta) * psi;
  s.medium = p;
  s.z_start = z_start;
  s.dz = dz;
  s.clock = clock;
  return s;
}

PolaritonState evolve_polariton(const PolaritonState& state, const DriveSchedule& schedule, Real dt) {
  schedule.validate();
  if (!(dt > 0)) throw DomainError("evolve_polariton: dt must be positive");
  const MediumParams& p = state.medium;
  const Real G2 = p.collective_coupling_sq();

  PolaritonState out = state;
  // Ramp adiabaticity: ramp time times the widest transparency window.
  Real ramp_time = 0, peak = 0;
  for (std::size_t i = 1; i < schedule.times.size(); ++i) {
    if (schedule.rabi[i] != schedule.rabi[i - 1]) ramp_time += schedule.times[i] - schedule.times[i - 1];
    peak = std::max({peak, schedule.rabi[i], schedule.rabi[i - 1]});
  }
  if (ramp_time > 0 && p.optical_depth() > 1) {
    const Real width = peak * peak / (p.gamma_ge * std::sqrt(p.optical_depth()));
    const Real margin = ramp_time * width;
    if (margin < 10.0) {
      std::ostringstream msg;
      msg << "non-adiabatic drive ramp: ramp_time * transparency_width = " << margin << " < 10";
      out.warnings.push_back(msg.str());
    }
  }

  VectorXc psi = state.psi();
  Real t = state.clock;
  const Real t_end = schedule.end();
  while (t < t_end) {
    const Real t1 = std::min(t + dt, t_end);
    translate(psi, out.z_start, out.dz, schedule.displacement(t, t1, G2));
    t = t1;
  }
  out.theta = mixing_angle(p, schedule.at(t));
  out.clock = std::max(t, state.clock);
  out.photonic = std::cos(out.theta) * psi;
  out.spin = -std::sin(out.theta) * psi;
  return out;
}

// --- Storage and retrieval ------------------------------------------------

Diagnostics storage_feasibility(const MediumParams& p, Real pulse_duration) {
  Diagnostics d;
  const Real depth = p.optical_depth();
  const Real vg = p.rabi_sq() > 0 ? group_velocity(p).exact : 0.0;
  const Real fill = pulse_duration * vg / p.length;
  d.checks.push_back(much_less("depth_lower_bound", depth > 0 ? 1.0 / std::sqrt(depth) : 1.0, fill, 5.0));
  d.checks.push_back(less("fits_in_medium", fill, 1.0));
  return d;
}

SpinWave store(const PulseEnvelope& pulse, const MediumParams& p, const DriveSchedule& ramp, Real dt) {
  p.validate();
  ramp.validate();
  const Real rabi0 = ramp.rabi.front();
  if (!(rabi0 > 0)) throw PreconditionError("store: drive must be on when the pulse enters");
  if (ramp.rabi.back() != 0) throw PreconditionError("store: ramp must end with the drive off");

  MediumParams entry = p;
  entry.rabi_d = rabi0;
  const Diagnostics feas = storage_feasibility(entry, pulse.duration());
  if (!feas.all_pass()) throw PreconditionError("store: storage feasibility fails for this pulse and medium");

  const Real theta0 = mixing_angle(p, rabi0);
  const Real cos_sq = std::cos(theta0) * std::cos(theta0);
  const Real dz = pulse.dz * cos_sq;
  const Real z_start = 0.5 * p.length - (pulse.centroid() - pulse.z_start) * cos_sq;
  const VectorXc psi = pulse.samples / std::cos(theta0);

  SpinWave wave;
  {
    Real inside = 0, total = 0;
    for (Eigen::Index j = 0; j < psi.size(); ++j) {
      const Real z = z_start + static_cast<Real>(j) * dz;
      const Real w = std::norm(psi[j]);
      total += w;
      if (z >= 0 && z <= p.length) inside += w;
    }
    wave.containment = inside / total;
  }
  {
    // Entry and exit each cover half the medium: total loss exponent
    // 2 kappa(delta) L with delta = c q.
    const VectorXc spectrum = spectral::fft(pulse.samples);
    const VectorXr q = spectral::wavenumbers(pulse.grid_size(), pulse.dz);
    const Real tan_sq = tan_sq_theta(p, rabi0);
    Real kept = 0, total = 0;
    for (Eigen::Index m = 0; m < q.size(); ++m) {
      const Real delta = c * q[m];
      const Real kappa = tan_sq / c * (p.gamma_R + p.gamma_ge * delta * delta / (rabi0 * rabi0));
      const Real w = std::norm(spectrum[m]);
      total += w;
      kept += w * std::exp(-2.0 * kappa * p.length);
    }
    wave.expected_efficiency = kept / total;
  }

  PolaritonState state = PolaritonState::from_psi(psi, theta0, p, z_start, dz, ramp.start());
  state = evolve_polariton(state, ramp, dt);
  wave.spin = state.spin;
  wave.z_start = state.z_start;
  wave.dz = state.dz;
  wave.clock = state.clock;
  wave.warnings = state.warnings;
  return wave;
}

SpinWave hold(const SpinWave& wave, Real gamma_R, Real t_hold) {
  if (t_hold < 0) throw DomainError("hold: negative duration");
  SpinWave out = wave;
  out.spin *= std::exp(-gamma_R * t_hold);
  out.clock += t_hold;
  return out;
}

PulseEnvelope retrieve(const SpinWave& wave, const MediumParams& p, const DriveSchedule& ramp) {
  p.validate();
  ramp.validate();
  const Real rabi_f = ramp.rabi.back();
  if (!(rabi_f > 0)) throw PreconditionError("retrieve: ramp must end with the drive on");
  if (ramp.start() < wave.clock - 1e-15 * std::abs(wave.clock))
    throw PreconditionError("retrieve: ramp starts before the spin wave was stored");

  const Real G2 = p.collective_coupling_sq();
  const Real vg_f = c * rabi_f * rabi_f / (rabi_f * rabi_f + G2);
  const Real cos_f = std::cos(mixing_angle(p, rabi_f));
  // Spin coherence is -Psi once the drive is off.
  VectorXc psi = -wave.spin;
  const auto centroid = [&](Real z_start) {
    Real m = 0, w = 0;
    for (Eigen::Index j = 0; j < psi.size(); ++j) {
      m += std::norm(psi[j]) * (z_start + static_cast<Real>(j) * wave.dz);
      w += std::norm(psi[j]);
    }
    return m / w;
  };
  const Real before = centroid(wave.z_start);
  Real z_start = wave.z_start;
  translate(psi, z_start, wave.dz, ramp.displacement(ramp.start(), ramp.end(), G2));
  const Real after = centroid(z_start);

  // Exit time of the centroid.
  Real t_exit = ramp.end() + (p.length - after) / vg_f;
  if (after > p.length) {
    Real t_lo = ramp.start(), t_hi = ramp.end();
    const Real target = std::max(0.0, p.length - before);
    for (int it = 0; it < 200; ++it) {
      const Real mid = 0.5 * (t_lo + t_hi);
      (ramp.displacement(ramp.start(), mid, G2) < target ? t_lo : t_hi) = mid;
    }
    t_exit = 0.5 * (t_lo + t_hi);
  }

  // Leaving the medium stretches the grid by c / v_g; the centroid sits at
  // z = L at origin_time.
  PulseEnvelope out;
  out.dz = wave.dz * c / vg_f;
  out.z_start = p.length + (z_start - after) * c / vg_f;
  out.origin_time = t_exit;
  out.samples = cos_f * psi;
  return out;
}

}  // namespace eitqc
