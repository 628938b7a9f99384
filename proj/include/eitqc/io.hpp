#pragma once

#include <string>
#include <vector>

#include "eitqc/circuit.hpp"
#include "eitqc/detector.hpp"
#include "eitqc/medium.hpp"
#include "eitqc/polariton.hpp"
#include "eitqc/types.hpp"

namespace eitqc::io {

/// Numbers are written with 17 significant digits so every file reads back
/// bit-exactly.  Lines starting with '#' are comments.
std::string number(Real v);

/// Comma-separated rows of a file, comments and blank lines skipped.
std::vector<std::vector<std::string>> read_csv(const std::string& path);

void write_spectrum(const std::string& path, const std::vector<SpectrumRow>& rows);
std::vector<SpectrumRow> read_spectrum(const std::string& path);

/// Columns z_m, re_f, im_f, intensity.
void write_envelope(const std::string& path, const PulseEnvelope& f);
PulseEnvelope read_envelope(const std::string& path);

/// Header n_z, dz, t, then one row per field-1 point with interleaved
/// re, im of Psi over field-2 points.
struct PsiGrid {
  MatrixXc psi;
  Real dz = 0;
  Real t = 0;
};
void write_psi(const std::string& path, const PsiGrid& grid);
PsiGrid read_psi(const std::string& path);

/// Columns trial, outcome.
void write_measurements(const std::string& path, const std::vector<Outcome>& outcomes);
std::vector<Outcome> read_measurements(const std::string& path);

/// Columns trial, m0, m1, ..., success_prob (0 = V, 1 = H, -1 = no click).
void write_circuit_results(const std::string& path, const std::vector<CircuitState>& trials);
struct CircuitRow {
  std::vector<int> outcomes;
  Real success_prob = 0;
};
std::vector<CircuitRow> read_circuit_results(const std::string& path);

/// Columns t_s, rabi_d_rad_per_s.
void write_schedule(const std::string& path, const DriveSchedule& s);
DriveSchedule read_schedule(const std::string& path);

std::string read_text(const std::string& path);
void write_text(const std::string& path, const std::string& text);

}  // namespace eitqc::io
