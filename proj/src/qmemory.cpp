#include "eitqc/qmemory.hpp"

#include <cmath>

namespace eitqc {
namespace {
const Complex I(0, 1);
const Real kInvSqrt2 = 1.0 / std::sqrt(2.0);
}  // namespace

void PolarizationQubit::validate() const {
  if (std::abs(norm_sq() - 1.0) > 1e-9) throw DomainError("polarization qubit is not normalized");
}

Eigen::Matrix2cd quarter_wave_45_matrix() {
  Eigen::Matrix2cd U;
  U << kInvSqrt2, kInvSqrt2, I * kInvSqrt2, -I * kInvSqrt2;
  return U;
}

CircularQubit quarter_wave_45(const PolarizationQubit& q) {
  q.validate();
  // |V> -> |R>, |H> -> |L>.
  return {q.alpha, q.beta};
}

PolarizationQubit to_linear_basis(const CircularQubit& q) {
  const Eigen::Vector2cd v = quarter_wave_45_matrix() * Eigen::Vector2cd(q.amp_R, q.amp_L);
  return PolarizationQubit::from_vector(v);
}

PolarizationQubit quarter_wave_45_inverse(const CircularQubit& q) {
  // Undo the plate: |R> -> |V>, |L> -> |H>.
  return {q.amp_R, q.amp_L};
}

StoredQubit store_qubit(const PolarizationQubit& q, Real t, Real gamma_R) {
  if (gamma_R < 0) throw DomainError("store_qubit: gamma_R must be non-negative");
  const CircularQubit c = quarter_wave_45(q);
  return {c.amp_L, c.amp_R, t, gamma_R, 1.0};
}

StoredQubit hold(const StoredQubit& sq, Real dt) {
  if (dt < 0) throw DomainError("hold: negative duration");
  const Real decay = std::exp(-sq.gamma_R * dt);
  StoredQubit out = sq;
  out.amp_s1 *= decay;
  out.amp_s2 *= decay;
  out.norm_remaining *= decay * decay;
  return out;
}

RetrievedQubit retrieve_qubit(const StoredQubit& sq) {
  if (sq.norm_remaining < 1e-12) throw DomainError("retrieve_qubit: stored excitation has decayed away");
  const Real scale = 1.0 / std::sqrt(std::norm(sq.amp_s1) + std::norm(sq.amp_s2));
  const CircularQubit c{sq.amp_s2 * scale, sq.amp_s1 * scale};
  return {quarter_wave_45_inverse(c), sq.norm_remaining};
}

}  // namespace eitqc
