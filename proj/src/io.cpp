#include "eitqc/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace eitqc::io {
namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  return out;
}

Real to_real(const std::string& s, const std::string& path) {
  try {
    std::size_t used = 0;
    const Real v = std::stod(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw DomainError(path + ": not a number '" + s + "'");
}

void expect_columns(const std::vector<std::string>& row, std::size_t n, const std::string& path) {
  if (row.size() != n) throw DomainError(path + ": expected " + std::to_string(n) + " columns");
}

}  // namespace

std::string number(Real v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<std::vector<std::string>> read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read " + path);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) {
      const auto b = cell.find_first_not_of(' ');
      cells.push_back(b == std::string::npos ? "" : cell.substr(b));
    }
    rows.push_back(std::move(cells));
  }
  return rows;
}

void write_spectrum(const std::string& path, const std::vector<SpectrumRow>& rows) {
  auto out = open_out(path);
  out << "delta_R_over_gamma,re_chi,im_chi,transmission\n";
  for (const auto& r : rows)
    out << number(r.delta_R_over_gamma) << ',' << number(r.re_chi) << ',' << number(r.im_chi) << ','
        << number(r.transmission) << '\n';
}

std::vector<SpectrumRow> read_spectrum(const std::string& path) {
  const auto rows = read_csv(path);
  std::vector<SpectrumRow> out;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    expect_columns(rows[i], 4, path);
    out.push_back({to_real(rows[i][0], path), to_real(rows[i][1], path), to_real(rows[i][2], path),
                   to_real(rows[i][3], path)});
  }
  return out;
}

void write_envelope(const std::string& path, const PulseEnvelope& f) {
  auto out = open_out(path);
  out << "# dz " << number(f.dz) << " origin_time " << number(f.origin_time) << '\n';
  out << "z_m,re_f,im_f,intensity\n";
  for (Eigen::Index j = 0; j < f.grid_size(); ++j)
    out << number(f.z(j)) << ',' << number(f.samples[j].real()) << ',' << number(f.samples[j].imag()) << ','
        << number(std::norm(f.samples[j])) << '\n';
}

PulseEnvelope read_envelope(const std::string& path) {
  const auto rows = read_csv(path);
  if (rows.size() < 3) throw DomainError(path + ": envelope needs at least two samples");
  PulseEnvelope f;
  f.samples.resize(static_cast<Eigen::Index>(rows.size() - 1));
  for (std::size_t i = 1; i < rows.size(); ++i) {
    expect_columns(rows[i], 4, path);
    f.samples[static_cast<Eigen::Index>(i - 1)] = {to_real(rows[i][1], path), to_real(rows[i][2], path)};
  }
  f.z_start = to_real(rows[1][0], path);
  // The comment line carries dz exactly; fall back to the first spacing.
  f.dz = to_real(rows[2][0], path) - f.z_start;
  std::ifstream in(path);
  std::string tag, dz, tag2, t0;
  if (in >> tag >> tag >> dz >> tag2 >> t0 && tag == "dz") {
    f.dz = to_real(dz, path);
    f.origin_time = to_real(t0, path);
  }
  return f;
}

void write_psi(const std::string& path, const PsiGrid& g) {
  auto out = open_out(path);
  out << "n_z,dz,t\n" << g.psi.rows() << ',' << number(g.dz) << ',' << number(g.t) << '\n';
  for (Eigen::Index i = 0; i < g.psi.rows(); ++i) {
    for (Eigen::Index j = 0; j < g.psi.cols(); ++j) {
      if (j) out << ',';
      out << number(g.psi(i, j).real()) << ',' << number(g.psi(i, j).imag());
    }
    out << '\n';
  }
}

PsiGrid read_psi(const std::string& path) {
  const auto rows = read_csv(path);
  if (rows.size() < 2) throw DomainError(path + ": missing header");
  expect_columns(rows[1], 3, path);
  const auto n = static_cast<Eigen::Index>(to_real(rows[1][0], path));
  if (n < 1 || rows.size() != static_cast<std::size_t>(n) + 2) throw DomainError(path + ": row count mismatch");
  PsiGrid g;
  g.dz = to_real(rows[1][1], path);
  g.t = to_real(rows[1][2], path);
  g.psi.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& r = rows[static_cast<std::size_t>(i) + 2];
    expect_columns(r, static_cast<std::size_t>(2 * n), path);
    for (Eigen::Index j = 0; j < n; ++j)
      g.psi(i, j) = {to_real(r[static_cast<std::size_t>(2 * j)], path), to_real(r[static_cast<std::size_t>(2 * j + 1)], path)};
  }
  return g;
}

void write_measurements(const std::string& path, const std::vector<Outcome>& outcomes) {
  auto out = open_out(path);
  out << "trial,outcome\n";
  for (std::size_t i = 0; i < outcomes.size(); ++i) out << i << ',' << to_string(outcomes[i]) << '\n';
}

std::vector<Outcome> read_measurements(const std::string& path) {
  const auto rows = read_csv(path);
  std::vector<Outcome> out;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    expect_columns(rows[i], 2, path);
    const auto& s = rows[i][1];
    if (s == "V") out.push_back(Outcome::V);
    else if (s == "H") out.push_back(Outcome::H);
    else if (s == "none") out.push_back(Outcome::None);
    else throw DomainError(path + ": unknown outcome '" + s + "'");
  }
  return out;
}

void write_circuit_results(const std::string& path, const std::vector<CircuitState>& trials) {
  auto out = open_out(path);
  out << "# basis |V>=0 |H>=1, qubit k is bit k of the amplitude index (little-endian); -1 = no click\n";
  std::size_t width = 0;
  for (const auto& t : trials) width = std::max(width, t.record.size());
  out << "trial";
  for (std::size_t m = 0; m < width; ++m) out << ",m" << m;
  out << ",success_prob\n";
  for (std::size_t i = 0; i < trials.size(); ++i) {
    out << i;
    for (std::size_t m = 0; m < width; ++m) out << ',' << (m < trials[i].record.size() ? trials[i].record[m] : -1);
    out << ',' << number(trials[i].success_prob) << '\n';
  }
}

std::vector<CircuitRow> read_circuit_results(const std::string& path) {
  const auto rows = read_csv(path);
  if (rows.empty()) throw DomainError(path + ": missing header");
  const std::size_t width = rows[0].size();
  std::vector<CircuitRow> out;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    expect_columns(rows[i], width, path);
    CircuitRow r;
    for (std::size_t m = 1; m + 1 < width; ++m) r.outcomes.push_back(static_cast<int>(to_real(rows[i][m], path)));
    r.success_prob = to_real(rows[i].back(), path);
    out.push_back(std::move(r));
  }
  return out;
}

void write_schedule(const std::string& path, const DriveSchedule& s) {
  auto out = open_out(path);
  out << "t_s,rabi_d_rad_per_s\n";
  for (std::size_t i = 0; i < s.times.size(); ++i) out << number(s.times[i]) << ',' << number(s.rabi[i]) << '\n';
}

DriveSchedule read_schedule(const std::string& path) {
  const auto rows = read_csv(path);
  DriveSchedule s;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    expect_columns(rows[i], 2, path);
    s.times.push_back(to_real(rows[i][0], path));
    s.rabi.push_back(to_real(rows[i][1], path));
  }
  s.validate();
  return s;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
  auto out = open_out(path);
  out << text;
}

}  // namespace eitqc::io
