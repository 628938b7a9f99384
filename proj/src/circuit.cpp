#include "eitqc/circuit.hpp"

#include <sstream>

#include "eitqc/constants.hpp"
#include "eitqc/qmemory.hpp"
#include "eitqc/units.hpp"

namespace eitqc {
namespace {

using constants::pi;

void check_qubit(const CircuitState& s, int k) {
  if (k < 0 || k >= s.n_qubits) throw DomainError("circuit: qubit index out of range");
}

}  // namespace

NamedGates pauli_and_hadamard() {
  NamedGates g;
  g.x = rotation(pi / 2) * phase(pi);
  g.y = std::polar(1.0, pi / 2) * rotation(pi / 2);
  g.z = phase(pi);
  g.h = rotation(pi / 4) * phase(pi);
  return g;
}

CircuitState CircuitState::basis(int n_qubits, std::uint64_t index) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) throw DomainError("circuit: qubit count must be in 1..20");
  const auto dim = Eigen::Index{1} << n_qubits;
  if (index >= static_cast<std::uint64_t>(dim)) throw DomainError("circuit: basis index out of range");
  CircuitState s;
  s.n_qubits = n_qubits;
  s.amplitudes = VectorXc::Zero(dim);
  s.amplitudes[static_cast<Eigen::Index>(index)] = 1.0;
  return s;
}

void CircuitState::validate() const {
  if (n_qubits < 1 || n_qubits > kMaxQubits) throw DomainError("circuit: qubit count must be in 1..20");
  if (amplitudes.size() != (Eigen::Index{1} << n_qubits)) throw DomainError("circuit: amplitude size mismatch");
  if (std::abs(norm() - 1.0) > 1e-9) throw DomainError("circuit: state not normalized");
}

void apply(CircuitState& s, const Gate2<Real>& g, int k) {
  check_qubit(s, k);
  const Eigen::Index bit = Eigen::Index{1} << k;
  for (Eigen::Index i = 0; i < s.amplitudes.size(); ++i) {
    if (i & bit) continue;
    const Complex a0 = s.amplitudes[i];
    const Complex a1 = s.amplitudes[i | bit];
    s.amplitudes[i] = g(0, 0) * a0 + g(0, 1) * a1;
    s.amplitudes[i | bit] = g(1, 0) * a0 + g(1, 1) * a1;
  }
}

void apply(CircuitState& s, const Gate4<Real>& g, int j, int k) {
  check_qubit(s, j);
  check_qubit(s, k);
  if (j == k) throw DomainError("circuit: two-qubit gate needs distinct qubits");
  const Eigen::Index bj = Eigen::Index{1} << j;
  const Eigen::Index bk = Eigen::Index{1} << k;
  for (Eigen::Index i = 0; i < s.amplitudes.size(); ++i) {
    if (i & (bj | bk)) continue;
    const Eigen::Index idx[4] = {i, i | bk, i | bj, i | bj | bk};
    Eigen::Vector4cd v;
    for (int m = 0; m < 4; ++m) v[m] = s.amplitudes[idx[m]];
    const Eigen::Vector4cd w = g * v;
    for (int m = 0; m < 4; ++m) s.amplitudes[idx[m]] = w[m];
  }
}

void apply_global_phase(CircuitState& s, Real phi) { s.amplitudes *= std::polar(1.0, phi); }

int measure(CircuitState& s, int k, Rng& rng, const DetectorParams* detector) {
  check_qubit(s, k);
  const Eigen::Index bit = Eigen::Index{1} << k;
  Real p1 = 0;
  for (Eigen::Index i = 0; i < s.amplitudes.size(); ++i)
    if (i & bit) p1 += std::norm(s.amplitudes[i]);
  const Real total = s.amplitudes.squaredNorm();
  const int outcome = rng.uniform() * total < p1 ? 1 : 0;
  for (Eigen::Index i = 0; i < s.amplitudes.size(); ++i)
    if (static_cast<bool>(i & bit) != static_cast<bool>(outcome)) s.amplitudes[i] = 0;
  s.amplitudes.normalize();
  int recorded = outcome;
  if (detector) {
    const Real p_click = click_probability(*detector, true);
    if (!rng.bernoulli(p_click)) recorded = -1;
    s.success_prob *= p_click;
  }
  s.record.push_back(recorded);
  return recorded;
}

void memory_delay(CircuitState& s, int k, Real t, Real gamma_R) {
  check_qubit(s, k);
  const StoredQubit held = hold(StoredQubit{0, 0, 0, gamma_R, 1.0}, t);
  s.success_prob *= held.norm_remaining;
}

Real reduced_purity(const CircuitState& s, int k) {
  check_qubit(s, k);
  const Eigen::Index bit = Eigen::Index{1} << k;
  Eigen::Matrix2cd rho = Eigen::Matrix2cd::Zero();
  for (Eigen::Index i = 0; i < s.amplitudes.size(); ++i) {
    if (i & bit) continue;
    const Complex a0 = s.amplitudes[i];
    const Complex a1 = s.amplitudes[i | bit];
    rho(0, 0) += a0 * std::conj(a0);
    rho(0, 1) += a0 * std::conj(a1);
    rho(1, 0) += a1 * std::conj(a0);
    rho(1, 1) += a1 * std::conj(a1);
  }
  rho /= rho.trace();
  return (rho * rho).trace().real();
}

int GateProgram::qubits_used() const {
  int n = 0;
  for (const auto& in : instructions) {
    if (in.kind == Instruction::Kind::G) continue;
    n = std::max(n, in.a + 1);
    if (in.kind == Instruction::Kind::CZ) n = std::max(n, in.b + 1);
  }
  return n;
}

void GateProgram::validate(int n_qubits) const {
  for (const auto& in : instructions) {
    if (in.kind == Instruction::Kind::G) continue;
    if (in.a < 0 || in.a >= n_qubits) throw DomainError("program: qubit index out of range");
    if (in.kind == Instruction::Kind::CZ && (in.b < 0 || in.b >= n_qubits || in.b == in.a))
      throw DomainError("program: CZ needs two distinct qubits in range");
  }
}

GateProgram GateProgram::parse(const std::string& text) {
  GateProgram p;
  std::istringstream lines(text);
  std::string line;
  int number = 0;
  const auto fail = [&](const std::string& what) {
    throw DomainError("program line " + std::to_string(number) + ": " + what);
  };
  const auto read_index = [&](std::istringstream& in) {
    int k;
    if (!(in >> k)) fail("expected a qubit index");
    return k;
  };
  const auto read_angle = [&](std::istringstream& in) {
    std::string tok;
    if (!(in >> tok)) fail("expected an angle");
    try {
      return units::parse(tok);
    } catch (const DomainError& e) {
      fail(e.what());
    }
    return 0.0;
  };
  while (std::getline(lines, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream in(line);
    std::string op;
    if (!(in >> op)) continue;
    Instruction ins;
    if (op == "R" || op == "T") {
      ins.kind = op == "R" ? Instruction::Kind::R : Instruction::Kind::T;
      ins.a = read_index(in);
      ins.angle = read_angle(in);
    } else if (op == "G") {
      ins.kind = Instruction::Kind::G;
      ins.angle = read_angle(in);
    } else if (op == "CZ") {
      ins.kind = Instruction::Kind::CZ;
      ins.a = read_index(in);
      ins.b = read_index(in);
      std::string tok;
      if (!(in >> tok)) {
        ins.angle = pi;
      } else if (tok == "auto") {
        ins.auto_phase = true;
      } else {
        std::istringstream back(tok);
        ins.angle = read_angle(back);
      }
    } else if (op == "M") {
      ins.kind = Instruction::Kind::M;
      ins.a = read_index(in);
    } else {
      fail("unknown instruction '" + op + "'");
    }
    std::string extra;
    if (in >> extra) fail("trailing text '" + extra + "'");
    if (ins.a < 0 || ins.b < 0) fail("negative qubit index");
    p.instructions.push_back(ins);
  }
  return p;
}

std::string GateProgram::to_string() const {
  std::ostringstream out;
  out.precision(17);
  for (const auto& in : instructions) {
    switch (in.kind) {
      case Instruction::Kind::R: out << "R " << in.a << ' ' << in.angle; break;
      case Instruction::Kind::T: out << "T " << in.a << ' ' << in.angle; break;
      case Instruction::Kind::G: out << "G " << in.angle; break;
      case Instruction::Kind::CZ:
        out << "CZ " << in.a << ' ' << in.b << ' ';
        if (in.auto_phase) out << "auto";
        else out << in.angle;
        break;
      case Instruction::Kind::M: out << "M " << in.a; break;
    }
    out << '\n';
  }
  return out.str();
}

CircuitState run(const GateProgram& program, CircuitState state, Rng& rng, const RunOptions& options) {
  state.validate();
  program.validate(state.n_qubits);
  for (const auto& in : program.instructions) {
    switch (in.kind) {
      case Instruction::Kind::R: apply(state, rotation(in.angle), in.a); break;
      case Instruction::Kind::T: apply(state, phase(in.angle), in.a); break;
      case Instruction::Kind::G: apply_global_phase(state, in.angle); break;
      case Instruction::Kind::CZ: {
        if (in.auto_phase && !options.cz_phase) throw PreconditionError("program: CZ auto needs a conditional phase");
        apply(state, cz_gate(in.auto_phase ? *options.cz_phase : in.angle), in.a, in.b);
        break;
      }
      case Instruction::Kind::M: measure(state, in.a, rng, options.detector); break;
    }
  }
  return state;
}

}  // namespace eitqc
