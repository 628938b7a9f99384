#include "eitqc/blockade.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <thread>
#include <vector>

#include "eitqc/constants.hpp"
#include "eitqc/rng.hpp"

namespace eitqc {
namespace {

using namespace constants;

constexpr int kSubstreams = 64;

struct ChunkSums {
  long double sum = 0;
  long double sum_sq = 0;
  long long count = 0;
};

}  // namespace

void RydbergStark::validate() const {
  if (n < 1) throw DomainError("RydbergStark: n must be >= 1");
  if (std::abs(m) > n - 1) throw DomainError("RydbergStark: |m| must not exceed n-1");
  const int top = n - 1 - std::abs(m);
  if (std::abs(q_par) > top || (top - q_par) % 2 != 0)
    throw DomainError("RydbergStark: q must be one of n-1-|m|, n-3-|m|, ..., -(n-1-|m|)");
}

Real RydbergStark::dipole() const { return 1.5 * n * q_par * e * a0; }

Real stark_shift(const RydbergStark& s) {
  s.validate();
  return s.dipole() * s.e_static / hbar;
}

Real dd_potential(const Eigen::Vector3d& d1, const Eigen::Vector3d& d2, const Eigen::Vector3d& r) {
  const Real R = r.norm();
  if (!(R > 0)) throw DomainError("dd_potential: zero separation");
  const Eigen::Vector3d u = r / R;
  return (d1.dot(d2) - 3.0 * d1.dot(u) * d2.dot(u)) / (4.0 * pi * epsilon0 * R * R * R * hbar);
}

Real dd_shift(int n, Real r) {
  if (!(r > 0)) throw DomainError("dd_shift: separation must be positive");
  const Real n2 = static_cast<Real>(n) * n;
  return -n2 * n2 * e * e * a0 * a0 / (pi * hbar * epsilon0 * r * r * r);
}

void TrapConfig::validate() const {
  if (!(length > 0)) throw DomainError("trap: length must be positive");
  if (!(n_atoms > 0)) throw DomainError("trap: n_atoms must be positive");
  if (rabi_r1 < 0 || rabi_r2 < 0 || gamma_r < 0) throw DomainError("trap: rates must be non-negative");
  if (geometry == PairGeometry::Cylinder && !(area > 0)) throw DomainError("trap: cylinder geometry needs an area");
  if (density > 0 && area > 0) {
    const Real expected = density * area * length;
    if (std::abs(n_atoms - expected) > 0.01 * expected)
      throw DomainError("trap: n_atoms inconsistent with density * area * length");
  }
}

Real TrapConfig::shift_at_length() const {
  return delta_at_length > 0 ? delta_at_length : std::abs(dd_shift(rydberg_n, length));
}

Real TrapConfig::pulse_time() const { return pi / (2.0 * std::sqrt(n_atoms) * rabi_r1); }

Real TrapConfig::min_pair_distance() const {
  if (min_distance > 0) return min_distance;
  return density > 0 ? 0.5 * std::cbrt(1.0 / density) : 0.0;
}

McEstimate p_double_mc(const TrapConfig& cfg, long long samples, int workers) {
  cfg.validate();
  if (samples < 10000) throw DomainError("p_double_mc: need at least 1e4 samples");

  const Real L = cfg.length;
  const Real base = cfg.n_atoms * cfg.rabi_r1 * cfg.rabi_r1 / (cfg.shift_at_length() * cfg.shift_at_length());
  const Real r_min = cfg.min_pair_distance();
  const Real radius = cfg.area > 0 ? std::sqrt(cfg.area / pi) : 0.0;

  // Delta(r) = Delta(L) (L/r)^3, so each sample contributes base * (r/L)^6.
  const auto draw = [&](Rng& rng) -> Real {
    Real r = L;
    switch (cfg.geometry) {
      case PairGeometry::Fixed:
        break;
      case PairGeometry::Line:
        r = std::abs(rng.uniform() - rng.uniform()) * L;
        break;
      case PairGeometry::Cylinder: {
        Eigen::Vector3d a, b;
        for (Eigen::Vector3d* p : {&a, &b}) {
          Real x, y;
          do {
            x = 2.0 * rng.uniform() - 1.0;
            y = 2.0 * rng.uniform() - 1.0;
          } while (x * x + y * y > 1.0);
          *p = {x * radius, y * radius, rng.uniform() * L};
        }
        r = (a - b).norm();
        break;
      }
    }
    const Real u = std::max(r, r_min) / L;
    const Real u3 = u * u * u;
    return base * u3 * u3;
  };

  std::vector<ChunkSums> chunks(kSubstreams);
  const auto run_chunk = [&](int index) {
    Rng rng = Rng::substream(cfg.rng_seed, static_cast<std::uint64_t>(index));
    const long long count = samples / kSubstreams + (index < samples % kSubstreams ? 1 : 0);
    ChunkSums s;
    for (long long i = 0; i < count; ++i) {
      const long double x = draw(rng);
      s.sum += x;
      s.sum_sq += x * x;
    }
    s.count = count;
    chunks[static_cast<std::size_t>(index)] = s;
  };

  int n_workers = workers > 0 ? workers : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  n_workers = std::min(n_workers, kSubstreams);
  if (n_workers == 1) {
    for (int i = 0; i < kSubstreams; ++i) run_chunk(i);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < n_workers; ++w)
      pool.emplace_back([&, w] {
        for (int i = w; i < kSubstreams; i += n_workers) run_chunk(i);
      });
    for (auto& t : pool) t.join();
  }

  long double sum = 0, sum_sq = 0;
  long long count = 0;
  for (const auto& s : chunks) {
    sum += s.sum;
    sum_sq += s.sum_sq;
    count += s.count;
  }
  McEstimate est;
  est.samples = count;
  est.mean = static_cast<Real>(sum / count);
  const long double var = std::max<long double>(0, (sum_sq - sum * sum / count) / (count - 1));
  est.std_err = static_cast<Real>(std::sqrt(var / count));
  return est;
}

Real p_dephase(const TrapConfig& cfg) {
  const Real T = cfg.preparation_time > 0 ? cfg.preparation_time : cfg.pulse_time();
  return cfg.gamma_r * T;
}

FidelityReport source_fidelity(const TrapConfig& cfg, long long samples) {
  const McEstimate mc = p_double_mc(cfg, samples);
  FidelityReport r;
  r.p_double = mc.mean;
  r.std_err = mc.std_err;
  r.samples = mc.samples;
  r.p_dephase = p_dephase(cfg);
  r.fidelity = std::clamp(1.0 - r.p_double - r.p_dephase, 0.0, 1.0);
  r.pulse_time = cfg.pulse_time();
  r.preparation_time = cfg.preparation_time > 0 ? cfg.preparation_time : r.pulse_time;
  const Real collective = std::sqrt(cfg.n_atoms) * cfg.rabi_r1;
  r.effective_shift = r.p_double > 0 ? std::sqrt(cfg.n_atoms * cfg.rabi_r1 * cfg.rabi_r1 / r.p_double)
                                     : std::numeric_limits<Real>::infinity();
  const Real shift_L = cfg.shift_at_length();
  r.checks.checks.push_back(less("collective_rabi_below_mean_shift", collective, r.effective_shift));
  r.checks.checks.push_back(less("pair_shift_exceeds_rabi", cfg.rabi_r1, shift_L));
  r.checks.checks.push_back(less("pair_shift_exceeds_linewidth", cfg.gamma_r, shift_L));
  return r;
}

GeneratedPhoton generate_photon(const TrapConfig& cfg, const MediumParams& medium, const DriveSchedule& drive,
                                long long samples, Eigen::Index grid_size) {
  medium.validate();
  drive.validate();
  if (!(drive.end() > drive.start())) throw DomainError("generate_photon: empty drive schedule");
  const Diagnostics eit = eit_validity(medium, 0.0);
  if (!eit.find("optical_depth").pass) throw PreconditionError("generate_photon: optical depth too small");

  GeneratedPhoton out;
  out.report = source_fidelity(cfg, samples);

  SpinWave wave;
  const Real L = medium.length;
  const Real box = default_box_length(L, L);
  wave.dz = box / static_cast<Real>(grid_size);
  wave.z_start = 0.5 * L - 0.5 * box;
  wave.spin = VectorXc::Zero(grid_size);
  for (Eigen::Index j = 0; j < grid_size; ++j) {
    const Real z = wave.z_start + j * wave.dz;
    if (z >= 0 && z < L) wave.spin[j] = 1.0;
  }
  wave.spin /= std::sqrt(wave.norm());
  wave.clock = drive.start();
  out.envelope = retrieve(wave, medium, drive);
  return out;
}

}  // namespace eitqc
