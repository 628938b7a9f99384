#include "eitqc/scenario.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <json.hpp>

#include "eitqc/circuit.hpp"
#include "eitqc/constants.hpp"
#include "eitqc/io.hpp"
#include "eitqc/polariton.hpp"
#include "eitqc/qmemory.hpp"
#include "eitqc/rng.hpp"
#include "eitqc/units.hpp"

namespace eitqc {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;
using constants::c;
using constants::pi;

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json checks_json(const Diagnostics& d) {
  json out = json::array();
  for (const auto& ch : d.checks)
    out.push_back({{"name", ch.name}, {"lhs", ch.lhs}, {"rhs", ch.rhs}, {"margin", ch.margin}, {"pass", ch.pass}});
  return out;
}

std::string timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return buf;
}

struct Writer {
  explicit Writer(const ScenarioConfig& c) : cfg(c) {}

  const ScenarioConfig& cfg;
  ScenarioResult result;
  json results = json::object();

  std::string file(const std::string& name) {
    const std::string p = (fs::path(cfg.out_dir) / name).string();
    result.files.push_back(p);
    return p;
  }
  template <typename T>
  void put(const std::string& key, const T& value) {
    results[key] = value;
    std::ostringstream s;
    s << key << " = " << json(value).dump();
    result.summary.push_back(s.str());
  }
  ScenarioResult finish() {
    json echo;
    echo["scenario"] = cfg.name;
    echo["seed"] = cfg.seed;
    echo["config"] = cfg.sections;
    echo["results"] = results;
    echo["generated_at"] = timestamp();
    io::write_text(file("params.json"), echo.dump(2) + "\n");
    return result;
  }
};

PulseEnvelope pulse_from(const ScenarioConfig& cfg, const MediumParams& p) {
  const Real sigma = cfg.quantity("pulse", "sigma");
  const auto n = static_cast<Eigen::Index>(cfg.integer("pulse", "grid", 4096));
  const Real center = cfg.quantity("pulse", "center", 0.0);
  const Real box = cfg.quantity("pulse", "box", 0.0);
  try {
    return gaussian_pulse(sigma, n, center, p.length, box);
  } catch (const DomainError& e) {
    throw ConfigError(std::string("pulse: ") + e.what());
  }
}

Diagnostics eit_checks(const ScenarioConfig& cfg, const MediumParams& p) {
  if (cfg.has("pulse")) return eit_validity(p, pulse_from(cfg, p).duration());
  Diagnostics all = eit_validity(p, 0.0), kept;
  for (const auto& ch : all.checks)
    if (ch.name.rfind("drive", 0) == 0 || ch.name == "optical_depth") kept.checks.push_back(ch);
  return kept;
}

// Store, hold and retrieve ramps for the store scenario.
struct StorePlan {
  DriveSchedule down, up;
  Real dt = 0, hold = 0;
};

StorePlan store_plan(const ScenarioConfig& cfg, const MediumParams& p) {
  StorePlan s;
  const Real rabi = std::abs(p.rabi_d);
  const Real ramp = cfg.quantity("store", "ramp_time");
  const Real ramp_out = cfg.quantity("store", "retrieve_ramp_time", ramp);
  s.hold = cfg.quantity("store", "hold_time", 0.0);
  s.dt = cfg.quantity("store", "dt", ramp / 200.0);
  s.down = DriveSchedule::linear_ramp(rabi, 0.0, 0.0, ramp);
  s.up = DriveSchedule::linear_ramp(0.0, rabi, ramp + s.hold, ramp_out);
  return s;
}

void require(const ScenarioConfig& cfg, const std::string& section) {
  if (!cfg.has(section)) throw ConfigError("missing section [" + section + "]");
}

VectorXc gaussian_samples(Eigen::Index n, Real z_start, Real dz, Real center, Real width) {
  VectorXc f(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const Real u = (z_start + j * dz - center) / width;
    f[j] = std::exp(-0.5 * u * u);
  }
  return f / std::sqrt(f.squaredNorm() * dz);
}

ScenarioResult run_spectra(const ScenarioConfig& cfg) {
  Writer w(cfg);
  const MediumParams p = medium_from(cfg);
  const Real from = cfg.quantity("spectra", "from", -3.0);
  const Real to = cfg.quantity("spectra", "to", 3.0);
  const int points = static_cast<int>(cfg.integer("spectra", "points", 2001));
  const auto rows = spectrum(p, from, to, points, true);
  io::write_spectrum(w.file("spectrum.csv"), rows);
  w.put("suppression_ratio", normalized_susceptibility(p, p.delta_d, 0.0).imag());
  std::vector<Real> peaks;
  for (std::size_t i = 1; i + 1 < rows.size(); ++i)
    if (rows[i].im_chi > rows[i - 1].im_chi && rows[i].im_chi > rows[i + 1].im_chi)
      peaks.push_back(rows[i].delta_R_over_gamma);
  w.put("absorption_maxima_over_gamma", peaks);
  w.results["validity"] = checks_json(eit_checks(cfg, p));
  return w.finish();
}

ScenarioResult run_slowlight(const ScenarioConfig& cfg) {
  Writer w(cfg);
  const MediumParams p = medium_from(cfg);
  const PulseEnvelope in = pulse_from(cfg, p);
  const GroupVelocity vg = group_velocity(p);
  const Real t = cfg.quantity("slowlight", "time", p.length / vg.exact + 2.0 * in.rms_width() / c);
  const Real delta_R = cfg.quantity("slowlight", "delta_R", 0.0);
  const ConstantDriveResult r = propagate_constant_drive(in, p, t, delta_R);
  io::write_envelope(w.file("envelope_in.csv"), in);
  io::write_envelope(w.file("envelope_out.csv"), r.envelope);
  w.put("group_velocity", vg.exact);
  w.put("group_velocity_approx", vg.approx);
  w.put("transit_time", r.transit_time);
  w.put("amplitude_factor", r.amplitude_factor);
  w.put("phase", r.phase);
  w.put("delay_vs_vacuum", r.transit_time - p.length / c);
  w.results["validity"] = checks_json(eit_validity(p, in.duration()));
  return w.finish();
}

ScenarioResult run_store(const ScenarioConfig& cfg) {
  Writer w(cfg);
  const MediumParams p = medium_from(cfg);
  const PulseEnvelope in = pulse_from(cfg, p);
  const StorePlan plan = store_plan(cfg, p);
  const SpinWave stored = store(in, p, plan.down, plan.dt);
  const SpinWave held = hold(stored, p.gamma_R, plan.hold);
  const PulseEnvelope out = retrieve(held, p, plan.up);
  io::write_envelope(w.file("envelope_in.csv"), in);
  io::write_envelope(w.file("spin_wave.csv"), PulseEnvelope{held.spin, held.z_start, held.dz, held.clock});
  io::write_envelope(w.file("envelope_out.csv"), out);
  io::write_schedule(w.file("schedule_store.csv"), plan.down);
  io::write_schedule(w.file("schedule_retrieve.csv"), plan.up);
  w.put("containment", stored.containment);
  w.put("expected_efficiency", stored.expected_efficiency * std::exp(-2.0 * p.gamma_R * plan.hold));
  w.put("retrieved_norm", out.norm());
  if (out.grid_size() == in.grid_size() && std::abs(out.dz - in.dz) <= 1e-9 * in.dz)
    w.put("shape_fidelity", shape_fidelity(in, out));
  w.put("exit_time", out.origin_time);
  w.put("warnings", stored.warnings);
  w.results["feasibility"] = checks_json(storage_feasibility(p, in.duration()));
  return w.finish();
}

ScenarioResult run_memory(const ScenarioConfig& cfg) {
  Writer w(cfg);
  PolarizationQubit q{{cfg.quantity("memory", "alpha_re", 1.0), cfg.quantity("memory", "alpha_im", 0.0)},
                      {cfg.quantity("memory", "beta_re", 0.0), cfg.quantity("memory", "beta_im", 0.0)}};
  if (cfg.flag("memory", "normalize", false)) {
    const Real n = std::sqrt(q.norm_sq());
    q.alpha /= n;
    q.beta /= n;
  }
  try {
    q.validate();
  } catch (const DomainError& e) {
    throw ConfigError(std::string("memory: ") + e.what());
  }
  const Real gamma_R = cfg.quantity("memory", "gamma_R", 0.0);
  const Real t_hold = cfg.quantity("memory", "hold_time", 0.0);
  const StoredQubit s = store_qubit(q, 0.0, gamma_R);
  const StoredQubit h = hold(s, t_hold);
  const RetrievedQubit r = retrieve_qubit(h);
  std::string csv = "stage,re_a,im_a,re_b,im_b\n";
  const auto row = [&](const std::string& stage, Complex a, Complex b) {
    csv += stage + ',' + io::number(a.real()) + ',' + io::number(a.imag()) + ',' + io::number(b.real()) + ',' +
           io::number(b.imag()) + '\n';
  };
  row("input_V_H", q.alpha, q.beta);
  row("stored_s1_s2", s.amp_s1, s.amp_s2);
  row("held_s1_s2", h.amp_s1, h.amp_s2);
  row("output_V_H", r.qubit.alpha, r.qubit.beta);
  io::write_text(w.file("memory.csv"), csv);
  w.put("success_prob", r.success_prob);
  w.put("fidelity", std::norm(q.vector().dot(r.qubit.vector())));
  return w.finish();
}

ScenarioResult run_source(const ScenarioConfig& cfg) {
  Writer w(cfg);
  const TrapConfig trap = trap_from(cfg);
  const long long samples = cfg.integer("trap", "samples", 1000000);
  const FidelityReport r = source_fidelity(trap, samples);
  std::string csv = "name,lhs,rhs,margin,pass\n";
  for (const auto& ch : r.checks.checks)
    csv += ch.name + ',' + io::number(ch.lhs) + ',' + io::number(ch.rhs) + ',' + io::number(ch.margin) + ',' +
           (ch.pass ? "1" : "0") + '\n';
  io::write_text(w.file("checks.csv"), csv);
  w.put("p_double", r.p_double);
  w.put("p_double_std_err", r.std_err);
  w.put("p_dephase", r.p_dephase);
  w.put("fidelity", r.fidelity);
  w.put("pulse_time", r.pulse_time);
  w.put("preparation_time", r.preparation_time);
  w.put("effective_shift", r.effective_shift);
  if (cfg.has("medium") && cfg.has("trap", "drive_ramp_time")) {
    const MediumParams p = medium_from(cfg);
    const DriveSchedule drive =
        DriveSchedule::linear_ramp(0.0, std::abs(p.rabi_d), 0.0, cfg.quantity("trap", "drive_ramp_time"));
    const GeneratedPhoton photon = generate_photon(trap, p, drive, samples);
    io::write_envelope(w.file("photon.csv"), photon.envelope);
    w.put("photon_norm", photon.envelope.norm());
  }
  return w.finish();
}

ScenarioResult run_xpm(const ScenarioConfig& cfg) {
  Writer w(cfg);
  const TripodParams p = tripod_from(cfg);
  const XpmCoefficients x = xpm_coefficients(p);
  const PiCondition pc = pi_condition(p);
  const Real phi = conditional_phase(p);
  const Eigen::Index n = p.modes;
  const Real box = cfg.quantity("xpm", "box", 16.0 / p.delta_q);
  const Real dz = box / static_cast<Real>(n);
  const Real z0 = -0.5 * box;
  const Real width = cfg.quantity("xpm", "width", box / 16.0);
  const Real sep = cfg.quantity("xpm", "separation", 0.0);
  const VectorXc f1 = gaussian_samples(n, z0, dz, -0.5 * sep, width);
  const VectorXc f2 = gaussian_samples(n, z0, dz, 0.5 * sep, width);
  const TwoPhotonState in = TwoPhotonState::product(f1, f2, z0, dz, p.delta_q);
  const TwoPhotonState out = evolve_two_photon(in, p, p.length);
  const MatrixXc psi_in = in.psi(), psi_out = out.psi();
  io::write_psi(w.file("psi_in.csv"), {psi_in, dz, in.t});
  io::write_psi(w.file("psi_out.csv"), {psi_out, dz, out.t});
  io::write_psi(w.file("g2_out.csv"), {second_order_correlation(psi_out).cast<Complex>(), dz, out.t});
  w.put("v_g", x.v_g);
  w.put("kappa", std::vector<Real>{x.kappa1, x.kappa2});
  w.put("s", std::vector<Real>{x.s1, x.s2});
  w.results["eta1"] = complex_json(x.eta1);
  w.results["eta2"] = complex_json(x.eta2);
  w.put("eta", x.eta_simple);
  w.put("conditional_phase", phi);
  w.put("pi_condition", pc.holds);
  w.put("pi_ratio", pc.ratio);
  w.put("detuning_ratio", pc.detuning_ratio);
  w.put("norm_out", out.norm());
  w.put("warnings", x.warnings);
  w.results["validity"] = checks_json(x.validity);
  return w.finish();
}

ScenarioResult run_detect(const ScenarioConfig& cfg) {
  Writer w(cfg);
  const DetectorParams d = detector_from(cfg);
  const long long trials = cfg.integer("detector", "trials", 100000);
  const bool photon = cfg.flag("detector", "photon", true);
  Rng rng(d.rng_seed);
  std::vector<Outcome> outcomes;
  outcomes.reserve(static_cast<std::size_t>(trials));
  long long clicks = 0;
  for (long long i = 0; i < trials; ++i) {
    const bool hit = click(d, photon, rng);
    clicks += hit;
    outcomes.push_back(hit ? Outcome::H : Outcome::None);
  }
  io::write_measurements(w.file("records.csv"), outcomes);
  w.put("fluorescence_rate", fluorescence_rate(d));
  w.put("S_f", signal(d));
  w.put("click_probability", click_probability(d, photon));
  w.put("click_frequency", static_cast<Real>(clicks) / static_cast<Real>(trials));
  w.results["reliability"] = checks_json(reliability(d));
  return w.finish();
}

ScenarioResult run_circuit(const ScenarioConfig& cfg) {
  Writer w(cfg);
  const GateProgram program = GateProgram::parse(io::read_text(cfg.path("circuit", "program")));
  const int qubits = static_cast<int>(cfg.integer("circuit", "qubits", std::max(1, program.qubits_used())));
  if (qubits > kMaxQubits) throw ConfigError("circuit.qubits: at most 20 qubits");
  const long long trials = cfg.integer("circuit", "trials", 1);
  RunOptions opt;
  const std::string phase_src = cfg.text("circuit", "cz_phase", "");
  if (phase_src == "auto") opt.cz_phase = conditional_phase(tripod_from(cfg));
  else if (!phase_src.empty()) opt.cz_phase = cfg.quantity("circuit", "cz_phase");
  DetectorParams det;
  if (cfg.flag("circuit", "detector", false)) {
    det = detector_from(cfg);
    opt.detector = &det;
  }
  program.validate(qubits);
  std::vector<CircuitState> results;
  for (long long i = 0; i < trials; ++i) {
    Rng rng = Rng::substream(cfg.seed, static_cast<std::uint64_t>(i));
    results.push_back(run(program, CircuitState::basis(qubits), rng, opt));
  }
  io::write_circuit_results(w.file("results.csv"), results);
  std::string csv = "# basis |V>=0 |H>=1, qubit k is bit k of the index (little-endian)\nindex,re,im\n";
  for (Eigen::Index i = 0; i < results.front().amplitudes.size(); ++i)
    csv += std::to_string(i) + ',' + io::number(results.front().amplitudes[i].real()) + ',' +
           io::number(results.front().amplitudes[i].imag()) + '\n';
  io::write_text(w.file("state_trial0.csv"), csv);
  if (opt.cz_phase) w.put("cz_phase", *opt.cz_phase);
  w.put("qubits", qubits);
  w.put("trials", trials);
  std::vector<Real> purity;
  for (int k = 0; k < qubits; ++k) purity.push_back(reduced_purity(results.front(), k));
  w.put("reduced_purity_trial0", purity);
  return w.finish();
}

}  // namespace

const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names{"spectra", "slowlight", "store", "memory",
                                              "source",  "xpm",       "detect", "circuit"};
  return names;
}

ScenarioConfig ScenarioConfig::parse(const std::string& text, const std::string& base_dir) {
  boost::property_tree::ptree tree;
  std::istringstream in(text);
  try {
    boost::property_tree::read_ini(in, tree);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  ScenarioConfig cfg;
  cfg.base_dir = base_dir;
  for (const auto& [section, body] : tree) {
    if (body.empty()) throw ConfigError("config: key '" + section + "' outside a section");
    for (const auto& [key, value] : body) cfg.sections[section][key] = value.data();
  }
  cfg.name = cfg.text("scenario", "name", "");
  if (cfg.name.empty()) throw ConfigError("scenario.name: missing");
  if (std::find(scenario_names().begin(), scenario_names().end(), cfg.name) == scenario_names().end())
    throw ConfigError("scenario.name: unknown scenario '" + cfg.name + "'");
  cfg.out_dir = cfg.text("scenario", "out", ".");
  cfg.seed = static_cast<std::uint64_t>(cfg.integer("scenario", "seed", 0));
  return cfg;
}

ScenarioConfig ScenarioConfig::load(const std::string& path) {
  const std::string text = io::read_text(path);
  return parse(text, fs::path(path).parent_path().string());
}

bool ScenarioConfig::has(const std::string& section, const std::string& key) const {
  return raw(section, key).has_value();
}

std::optional<std::string> ScenarioConfig::raw(const std::string& section, const std::string& key) const {
  const auto s = sections.find(section);
  if (s == sections.end()) return std::nullopt;
  const auto k = s->second.find(key);
  if (k == s->second.end()) return std::nullopt;
  return k->second;
}

Real ScenarioConfig::quantity(const std::string& section, const std::string& key) const {
  const auto v = raw(section, key);
  if (!v) throw ConfigError(section + "." + key + ": missing");
  try {
    return units::parse(*v);
  } catch (const DomainError& e) {
    throw ConfigError(section + "." + key + ": " + e.what());
  }
}

Real ScenarioConfig::quantity(const std::string& section, const std::string& key, Real fallback) const {
  return has(section, key) ? quantity(section, key) : fallback;
}

long long ScenarioConfig::integer(const std::string& section, const std::string& key, long long fallback) const {
  const auto v = raw(section, key);
  if (!v) return fallback;
  const Real x = quantity(section, key);
  if (x != std::floor(x) || std::abs(x) > 9e15) throw ConfigError(section + "." + key + ": expected an integer");
  return static_cast<long long>(x);
}

bool ScenarioConfig::flag(const std::string& section, const std::string& key, bool fallback) const {
  const auto v = raw(section, key);
  if (!v) return fallback;
  if (*v == "true" || *v == "1" || *v == "yes") return true;
  if (*v == "false" || *v == "0" || *v == "no") return false;
  throw ConfigError(section + "." + key + ": expected true or false");
}

std::string ScenarioConfig::text(const std::string& section, const std::string& key,
                                 const std::string& fallback) const {
  return raw(section, key).value_or(fallback);
}

std::string ScenarioConfig::path(const std::string& section, const std::string& key) const {
  const auto v = raw(section, key);
  if (!v) throw ConfigError(section + "." + key + ": missing");
  const fs::path p(*v);
  return p.is_absolute() ? p.string() : (fs::path(base_dir) / p).string();
}

MediumParams medium_from(const ScenarioConfig& cfg) {
  require(cfg, "medium");
  MediumParams p;
  const std::string s = "medium";
  p.gamma_ge = cfg.quantity(s, "gamma_ge");
  p.Gamma_e = cfg.quantity(s, "Gamma_e", 0.0);
  p.gamma_R = cfg.quantity(s, "gamma_R", 0.0);
  p.omega = cfg.quantity(s, "omega");
  p.rabi_d = cfg.quantity(s, "rabi_d", 0.0);
  p.delta_d = cfg.quantity(s, "delta_d", 0.0);
  p.length = cfg.quantity(s, "length");
  if (cfg.has(s, "optical_depth")) {
    if (cfg.has(s, "kappa0")) throw ConfigError("medium.optical_depth: give either kappa0 or optical_depth");
    p.kappa0 = cfg.quantity(s, "optical_depth") / (2.0 * p.length);
  } else {
    p.kappa0 = cfg.quantity(s, "kappa0");
  }
  p.area = cfg.quantity(s, "area", 0.0);
  p.density = cfg.quantity(s, "density", 0.0);
  p.dipole_ge = cfg.quantity(s, "dipole_ge", 0.0);
  p.n_atoms = cfg.quantity(s, "n_atoms", 0.0);
  p.coupling_g = cfg.quantity(s, "coupling_g", 0.0);
  try {
    p.validate();
  } catch (const DomainError& e) {
    throw ConfigError(std::string("medium: ") + e.what());
  }
  return p;
}

TripodParams tripod_from(const ScenarioConfig& cfg) {
  require(cfg, "tripod");
  TripodParams p;
  static_cast<MediumParams&>(p) = medium_from(cfg);
  const std::string s = "tripod";
  p.zeeman = cfg.quantity(s, "zeeman");
  p.zeeman_s = cfg.quantity(s, "zeeman_s", 0.0);
  p.b_field = cfg.quantity(s, "b_field", 0.0);
  p.g_factor = cfg.quantity(s, "g_factor", 0.0);
  p.m_F = cfg.quantity(s, "m_F", 0.0);
  p.delta_q = cfg.quantity(s, "delta_q");
  p.modes = static_cast<Eigen::Index>(cfg.integer(s, "modes", 64));
  p.v_bar = cfg.quantity(s, "v_bar", 0.0);
  try {
    p.validate();
  } catch (const DomainError& e) {
    throw ConfigError(std::string("tripod: ") + e.what());
  }
  return p;
}

TrapConfig trap_from(const ScenarioConfig& cfg) {
  require(cfg, "trap");
  TrapConfig t;
  const std::string s = "trap";
  t.length = cfg.quantity(s, "length");
  t.area = cfg.quantity(s, "area", 0.0);
  t.density = cfg.quantity(s, "density", 0.0);
  t.n_atoms = cfg.quantity(s, "n_atoms");
  t.rabi_r1 = cfg.quantity(s, "rabi_r1");
  t.rabi_r2 = cfg.quantity(s, "rabi_r2", 0.0);
  t.gamma_r = cfg.quantity(s, "gamma_r", 0.0);
  t.rydberg_n = static_cast<int>(cfg.integer(s, "rydberg_n", 50));
  t.rng_seed = cfg.seed;
  const std::string geometry = cfg.text(s, "geometry", "line");
  if (geometry == "line") t.geometry = PairGeometry::Line;
  else if (geometry == "cylinder") t.geometry = PairGeometry::Cylinder;
  else if (geometry == "fixed") t.geometry = PairGeometry::Fixed;
  else throw ConfigError("trap.geometry: expected line, cylinder or fixed");
  t.delta_at_length = cfg.quantity(s, "delta_at_length", 0.0);
  t.preparation_time = cfg.quantity(s, "preparation_time", 0.0);
  t.min_distance = cfg.quantity(s, "min_distance", 0.0);
  try {
    t.validate();
  } catch (const DomainError& e) {
    throw ConfigError(std::string("trap: ") + e.what());
  }
  return t;
}

DetectorParams detector_from(const ScenarioConfig& cfg) {
  require(cfg, "detector");
  DetectorParams d;
  const std::string s = "detector";
  d.rabi_p = cfg.quantity(s, "rabi_p");
  d.gamma_f = cfg.quantity(s, "gamma_f");
  d.gamma_sf = cfg.quantity(s, "gamma_sf", 0.0);
  d.gamma_s_lifetime = cfg.quantity(s, "gamma_s_lifetime");
  d.quantum_efficiency = cfg.quantity(s, "quantum_efficiency", 1.0);
  if (cfg.text(s, "integration_time", "auto") != "auto") d.integration_time = cfg.quantity(s, "integration_time");
  d.dark_rate = cfg.quantity(s, "dark_rate", 0.0);
  d.rng_seed = cfg.seed;
  try {
    d.validate();
  } catch (const DomainError& e) {
    throw ConfigError(std::string("detector: ") + e.what());
  }
  return d;
}

bool ValidationReport::all_pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const ValidationRow& r) { return r.check.pass; });
}

std::string ValidationReport::table() const {
  std::ostringstream out;
  out << "section      check                                   lhs            rhs            margin     result\n";
  for (const auto& r : rows) {
    char line[256];
    std::snprintf(line, sizeof line, "%-12s %-38s %-14.6g %-14.6g %-10.4g %s\n", r.section.c_str(),
                  r.check.name.c_str(), r.check.lhs, r.check.rhs, r.check.margin, r.check.pass ? "PASS" : "FAIL");
    out << line;
  }
  return out.str();
}

ValidationReport validate(const ScenarioConfig& cfg) {
  ValidationReport rep;
  const auto add = [&](const std::string& section, const Diagnostics& d) {
    for (const auto& ch : d.checks) rep.rows.push_back({section, ch});
  };
  const std::string& n = cfg.name;
  if (cfg.has("medium") && (n == "spectra" || n == "slowlight" || n == "store" || n == "xpm" || n == "source")) {
    const MediumParams p = medium_from(cfg);
    Diagnostics drive;
    drive.checks.push_back(less("drive_nonzero", 0.0, p.rabi_sq()));
    add("medium", drive);
    add("medium", eit_checks(cfg, p));
    if (n == "store") {
      MediumParams entry = p;
      add("store", storage_feasibility(entry, pulse_from(cfg, p).duration()));
    }
  }
  if (n == "xpm") {
    const TripodParams p = tripod_from(cfg);
    add("xpm", xpm_coefficients(p).validity);
    const PiCondition pc = pi_condition(p);
    const Real phi = conditional_phase(p);
    const Real tol = cfg.quantity("xpm", "phase_tolerance", 1e-3);
    Diagnostics d;
    d.checks.push_back(Check{"pi_condition", pc.rhs, pc.lhs, pc.ratio, pc.holds});
    d.checks.push_back(Check{"phase_within_tolerance_of_pi", std::abs(phi - pi), tol, tol / std::abs(phi - pi),
                             std::abs(phi - pi) < tol});
    add("xpm", d);
  }
  if (n == "source") {
    TrapConfig t = trap_from(cfg);
    add("trap", source_fidelity(t, 10000).checks);
  }
  if (n == "detect" || (n == "circuit" && cfg.flag("circuit", "detector", false)))
    add("detector", reliability(detector_from(cfg)));
  if (n == "circuit") {
    const GateProgram program = GateProgram::parse(io::read_text(cfg.path("circuit", "program")));
    const int qubits = static_cast<int>(cfg.integer("circuit", "qubits", std::max(1, program.qubits_used())));
    Diagnostics d;
    d.checks.push_back(Check{"qubit_cap", static_cast<Real>(qubits), static_cast<Real>(kMaxQubits),
                             static_cast<Real>(kMaxQubits) / qubits, qubits <= kMaxQubits});
    add("circuit", d);
    program.validate(std::min(qubits, kMaxQubits));
  }
  if (n == "memory") {
    Diagnostics d;
    const Real a = std::hypot(cfg.quantity("memory", "alpha_re", 1.0), cfg.quantity("memory", "alpha_im", 0.0));
    const Real b = std::hypot(cfg.quantity("memory", "beta_re", 0.0), cfg.quantity("memory", "beta_im", 0.0));
    const Real norm = a * a + b * b;
    d.checks.push_back(Check{"qubit_normalized", norm, 1.0, 1.0,
                             cfg.flag("memory", "normalize", false) ? norm > 0 : std::abs(norm - 1.0) <= 1e-9});
    add("memory", d);
  }
  return rep;
}

ScenarioResult run_scenario(const ScenarioConfig& cfg) {
  fs::create_directories(cfg.out_dir);
  const std::string& n = cfg.name;
  if (n == "spectra") return run_spectra(cfg);
  if (n == "slowlight") return run_slowlight(cfg);
  if (n == "store") return run_store(cfg);
  if (n == "memory") return run_memory(cfg);
  if (n == "source") return run_source(cfg);
  if (n == "xpm") return run_xpm(cfg);
  if (n == "detect") return run_detect(cfg);
  if (n == "circuit") return run_circuit(cfg);
  throw ConfigError("scenario.name: unknown scenario '" + n + "'");
}

}  // namespace eitqc
