#pragma once

#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "eitqc/detector.hpp"
#include "eitqc/rng.hpp"
#include "eitqc/types.hpp"

namespace eitqc {

template <typename S>
using Gate2 = Eigen::Matrix<std::complex<S>, 2, 2>;
template <typename S>
using Gate4 = Eigen::Matrix<std::complex<S>, 4, 4>;

/// R(theta) = [[cos, -sin], [sin, cos]] on the (V, H) basis.
template <typename S = Real>
Gate2<S> rotation(S theta) {
  Gate2<S> g;
  g << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
  return g;
}

/// T(phi) = diag(1, e^{i phi}).
template <typename S = Real>
Gate2<S> phase(S phi) {
  Gate2<S> g;
  g << S(1), S(0), S(0), std::polar(S(1), phi);
  return g;
}

template <typename S = Real>
Gate2<S> pauli_x() {
  Gate2<S> g;
  g << S(0), S(1), S(1), S(0);
  return g;
}

template <typename S = Real>
Gate2<S> pauli_y() {
  const std::complex<S> i(0, 1);
  Gate2<S> g;
  g << S(0), -i, i, S(0);
  return g;
}

template <typename S = Real>
Gate2<S> pauli_z() {
  Gate2<S> g;
  g << S(1), S(0), S(0), S(-1);
  return g;
}

template <typename S = Real>
Gate2<S> hadamard() {
  const S r = S(1) / std::sqrt(S(2));
  Gate2<S> g;
  g << r, r, r, -r;
  return g;
}

struct NamedGates {
  Gate2<Real> x, y, z, h;
};

/// X = R(pi/2) T(pi), Y = e^{i pi/2} R(pi/2), Z = T(pi), H = R(pi/4) T(pi).
NamedGates pauli_and_hadamard();

/// diag(1, 1, 1, e^{i phi}) on |VV>, |VH>, |HV>, |HH>.
template <typename S = Real>
Gate4<S> cz_gate(S phi) {
  Gate4<S> g = Gate4<S>::Identity();
  g(3, 3) = std::polar(S(1), phi);
  return g;
}

constexpr int kMaxQubits = 20;

/// Dense state over {|V> = |0>, |H> = |1>}^n.  Little-endian: qubit k is
/// bit k of the amplitude index.
struct CircuitState {
  VectorXc amplitudes;
  int n_qubits = 0;
  std::vector<int> record;  // 0 = V, 1 = H, -1 = no click
  Real success_prob = 1;

  static CircuitState basis(int n_qubits, std::uint64_t index = 0);
  Real norm() const { return amplitudes.norm(); }
  void validate() const;
};

void apply(CircuitState& s, const Gate2<Real>& g, int k);
/// Two-qubit gate with local index b_j * 2 + b_k.
void apply(CircuitState& s, const Gate4<Real>& g, int j, int k);
void apply_global_phase(CircuitState& s, Real phi);

/// Projective measurement of qubit k.  With a detector the branch click
/// probability multiplies success_prob; a miss records -1.
int measure(CircuitState& s, int k, Rng& rng, const DetectorParams* detector = nullptr);

/// Holding qubit k in a memory for time t: success probability times
/// exp(-2 gamma_R t), amplitudes unchanged.
void memory_delay(CircuitState& s, int k, Real t, Real gamma_R);

/// Reduced-state purity Tr(rho_k^2) of qubit k.
Real reduced_purity(const CircuitState& s, int k);

struct Instruction {
  enum class Kind { R, T, G, CZ, M } kind = Kind::R;
  int a = 0;
  int b = 0;
  Real angle = 0;
  bool auto_phase = false;  // CZ phase taken from the run options
};

struct GateProgram {
  std::vector<Instruction> instructions;

  int qubits_used() const;
  void validate(int n_qubits) const;
  static GateProgram parse(const std::string& text);
  std::string to_string() const;
};

struct RunOptions {
  std::optional<Real> cz_phase;            // resolves "CZ j k auto"
  const DetectorParams* detector = nullptr;
};

CircuitState run(const GateProgram& program, CircuitState initial, Rng& rng, const RunOptions& options = {});

}  // namespace eitqc
