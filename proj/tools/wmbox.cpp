// Command-line front end: boundary-condition checks and classification,
// spectra, time evolution, parameter scans, and the one-shot verification
// suite. Payload goes to stdout (or --output), diagnostics to stderr.
// Exit codes: 0 success, 1 failed assertion/criterion, 2 invalid
// configuration.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wmbox/acceptance.hpp"
#include "wmbox/evolution.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace wmbox;

constexpr int kExitOk = 0;
constexpr int kExitAssertionFailed = 1;
constexpr int kExitBadConfig = 2;

// ---------------------------------------------------------------------------
// parsing helpers
// ---------------------------------------------------------------------------

/// Accepts "1.5", "-2i", "i", "1+2i", "0.5-0.25i", "1e-3+2e-4i".
Cx parse_complex(std::string s) {
  std::erase_if(s, [](char ch) { return ch == ' ' || ch == '\t'; });
  if (s.empty()) {
    throw std::invalid_argument("empty complex literal");
  }
  auto to_double = [](const std::string& t) {
    std::size_t used = 0;
    const double v = std::stod(t, &used);
    if (used != t.size()) {
      throw std::invalid_argument("bad numeric literal '" + t + "'");
    }
    return v;
  };
  const bool has_i = s.back() == 'i' || s.back() == 'j';
  // Find a +/- separating real and imaginary parts (not an exponent sign).
  std::size_t split = std::string::npos;
  for (std::size_t p = 1; p < s.size(); ++p) {
    if ((s[p] == '+' || s[p] == '-') && s[p - 1] != 'e' && s[p - 1] != 'E') {
      split = p;
    }
  }
  if (!has_i) {
    return Cx(to_double(s), 0.0);
  }
  std::string im = s.substr(0, s.size() - 1);
  std::string re = "0";
  if (split != std::string::npos) {
    re = s.substr(0, split);
    im = s.substr(split, s.size() - 1 - split);
  }
  if (im.empty() || im == "+") {
    im = "1";
  } else if (im == "-") {
    im = "-1";
  }
  return Cx(to_double(re), to_double(im));
}

/// Row-major, ';' between rows, ',' between entries: "a,b;c,d".
Mat2 parse_matrix(const std::string& text) {
  std::vector<Cx> entries;
  std::string row;
  std::istringstream rows(text);
  while (std::getline(rows, row, ';')) {
    std::string cell;
    std::istringstream cells(row);
    while (std::getline(cells, cell, ',')) {
      entries.push_back(parse_complex(cell));
    }
  }
  if (entries.size() != 4) {
    throw std::invalid_argument("matrix literal must have 2x2 entries");
  }
  return Mat2{entries[0], entries[1], entries[2], entries[3]};
}

std::vector<Cx> parse_complex_list(const std::string& text) {
  std::vector<Cx> out;
  std::string cell;
  std::istringstream cells(text);
  while (std::getline(cells, cell, ',')) {
    out.push_back(parse_complex(cell));
  }
  return out;
}

/// "lo:hi:count" inclusive sweep.
std::vector<double> parse_sweep(const std::string& text) {
  double lo = 0.0;
  double hi = 0.0;
  int count = 0;
  char c1 = 0;
  char c2 = 0;
  std::istringstream is(text);
  if (!(is >> lo >> c1 >> hi >> c2 >> count) || c1 != ':' || c2 != ':' ||
      count < 2) {
    throw std::invalid_argument("sweep must be 'lo:hi:count' with count >= 2");
  }
  std::vector<double> out(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] =
        lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
  }
  return out;
}

// ---------------------------------------------------------------------------
// shared configuration
// ---------------------------------------------------------------------------

struct CommonConfig {
  PhysicalParams params;
  std::string format = "json";
  std::string output;
  unsigned seed = 12345;
  bool serial = false;

  Exec exec() const { return serial ? Exec::serial : Exec::openmp; }
};

struct BCSpec {
  std::string named;
  std::vector<double> family1;
  std::vector<double> family2;
  std::string matrix_text;

  bool present() const {
    return !named.empty() || !family1.empty() || !family2.empty() ||
           !matrix_text.empty();
  }

  MatrixBC build() const {
    const int given = (named.empty() ? 0 : 1) + (family1.empty() ? 0 : 1) +
                      (family2.empty() ? 0 : 1) + (matrix_text.empty() ? 0 : 1);
    if (given != 1) {
      throw std::invalid_argument(
          "exactly one of --named/--family1/--family2/--matrix is required");
    }
    if (!named.empty()) {
      if (named == "periodic") return periodic_bc();
      if (named == "antiperiodic") return antiperiodic_bc();
      if (named == "plus_gamma5") return plus_gamma5_bc();
      if (named == "minus_gamma5") return minus_gamma5_bc();
      throw std::invalid_argument("unknown named BC '" + named + "'");
    }
    if (!family1.empty()) {
      return family_one(family1.at(0), family1.at(1));
    }
    if (!family2.empty()) {
      return family_two(family2.at(0), family2.at(1));
    }
    return MatrixBC(parse_matrix(matrix_text));
  }

  json echo() const {
    json j;
    if (!named.empty()) j["named"] = named;
    if (!family1.empty()) j["family1"] = family1;
    if (!family2.empty()) j["family2"] = family2;
    if (!matrix_text.empty()) j["matrix"] = matrix_text;
    return j;
  }
};

void add_common_options(CLI::App* cmd, CommonConfig& cfg) {
  cmd->add_option("--hbar", cfg.params.hbar, "Action unit (default 1)");
  cmd->add_option("--c", cfg.params.c, "Speed unit (default 1)");
  cmd->add_option("--length", cfg.params.L, "Box length (default 1)");
  cmd->add_option("--mass", cfg.params.mass, "Rest mass (default 0)");
  cmd->add_option("--nu", cfg.params.nu,
                  "Charge-conjugation phase in [0, 2*pi) (default 3*pi/2)");
  cmd->add_option("--format", cfg.format, "Output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--output", cfg.output,
                  "Write payload to this file instead of stdout (relative "
                  "paths resolve under $WMBOX_OUTPUT_DIR when set)");
  cmd->add_option("--seed", cfg.seed, "Random seed recorded in the report");
  cmd->add_flag("--serial", cfg.serial,
                "Use the serial reference kernels instead of OpenMP");
}

void add_bc_options(CLI::App* cmd, BCSpec& bc) {
  cmd->add_option("--named", bc.named,
                  "periodic | antiperiodic | plus_gamma5 | minus_gamma5");
  cmd->add_option("--family1", bc.family1,
                  "m0 m2 with m0^2 + m2^2 = 1, m2 != 0")
      ->expected(2);
  cmd->add_option("--family2", bc.family2,
                  "m1 m3 with m1^2 + m3^2 = 1, m1 != 0")
      ->expected(2);
  cmd->add_option("--matrix", bc.matrix_text,
                  "Row-major 2x2 complex matrix 'a,b;c,d', entries like "
                  "'0.5-0.25i'");
}

void emit(const CommonConfig& cfg, const std::string& payload) {
  if (cfg.output.empty()) {
    std::cout << payload;
    return;
  }
  std::string path = cfg.output;
  if (const char* dir = std::getenv("WMBOX_OUTPUT_DIR");
      dir != nullptr && !path.empty() && path.front() != '/') {
    path = std::string(dir) + "/" + path;
  }
  std::ofstream out(path);
  if (!out) {
    throw std::invalid_argument("cannot open output file '" + path + "'");
  }
  out << payload;
  std::cerr << "wrote " << path << "\n";
}

json params_echo(const PhysicalParams& p) {
  return json{{"hbar", p.hbar},
              {"c", p.c},
              {"length", p.L},
              {"mass", p.mass},
              {"nu", p.nu}};
}

json complex_json(Cx z) { return json::array({z.real(), z.imag()}); }

json matrix_json(const Mat2& m) {
  return json::array({json::array({complex_json(m.m11), complex_json(m.m12)}),
                      json::array({complex_json(m.m21), complex_json(m.m22)})});
}

std::string family_name(FamilyKind k) {
  switch (k) {
    case FamilyKind::one: return "I";
    case FamilyKind::two: return "II";
    default: return "none";
  }
}

// ---------------------------------------------------------------------------
// check
// ---------------------------------------------------------------------------

struct CheckConfig {
  CommonConfig common;
  BCSpec bc;
  bool require_self_adjoint = false;
  bool require_majorana = false;
  bool require_chirality = false;
};

int run_check(const CheckConfig& cfg) {
  cfg.common.params.validate();
  const MatrixBC bc = cfg.bc.build();
  const BCClassification cls = classify(bc);

  bool pass = true;
  if (cfg.require_self_adjoint) pass = pass && cls.self_adjoint.ok;
  if (cfg.require_majorana) pass = pass && cls.majorana_compatible.ok;
  if (cfg.require_chirality) pass = pass && cls.chirality_preserving.ok;

  if (cfg.common.format == "csv") {
    std::ostringstream os;
    os.precision(17);
    os << "property,ok,residual\n";
    os << "self_adjoint," << cls.self_adjoint.ok << ','
       << cls.self_adjoint.residual << '\n';
    os << "majorana_compatible," << cls.majorana_compatible.ok << ','
       << cls.majorana_compatible.residual << '\n';
    os << "chirality_preserving," << cls.chirality_preserving.ok << ','
       << cls.chirality_preserving.residual << '\n';
    os << "family," << family_name(cls.family.kind) << ",\n";
    if (cls.family.kind != FamilyKind::none) {
      os << "family_params," << cls.family.p0 << ' ' << cls.family.p1 << ",\n";
    }
    emit(cfg.common, os.str());
  } else {
    json rep;
    rep["command"] = "check";
    rep["config"] = {{"params", params_echo(cfg.common.params)},
                     {"bc", cfg.bc.echo()},
                     {"seed", cfg.common.seed}};
    rep["results"] = {
        {"matrix", matrix_json(bc.matrix())},
        {"self_adjoint",
         {{"ok", cls.self_adjoint.ok},
          {"residual", cls.self_adjoint.residual}}},
        {"majorana_compatible",
         {{"ok", cls.majorana_compatible.ok},
          {"residual", cls.majorana_compatible.residual}}},
        {"chirality_preserving",
         {{"ok", cls.chirality_preserving.ok},
          {"residual", cls.chirality_preserving.residual}}},
        {"family",
         {{"kind", family_name(cls.family.kind)},
          {"params", json::array({cls.family.p0, cls.family.p1})}}}};
    rep["pass"] = pass;
    emit(cfg.common, rep.dump(2) + "\n");
  }
  return pass ? kExitOk : kExitAssertionFailed;
}

// ---------------------------------------------------------------------------
// spectrum
// ---------------------------------------------------------------------------

struct SpectrumConfig {
  CommonConfig common;
  BCSpec bc;
  int weyl_branch = 0;  // 0 = two-component solve
  double theta = 0.0;
  double e_min = -20.0;
  double e_max = 20.0;
  std::size_t points = 1024;
  std::string dump_path;
  std::size_t dump_grid = 256;
};

int run_spectrum(const SpectrumConfig& cfg) {
  cfg.common.params.validate();
  const EnergyWindow window{cfg.e_min, cfg.e_max, cfg.points};

  Spectrum spec;
  if (cfg.weyl_branch != 0) {
    spec = weyl_spectrum(PhaseBC::make(cfg.weyl_branch, cfg.theta), window,
                         cfg.common.params);
  } else {
    SolveOptions opts;
    opts.exec = cfg.common.exec();
    spec = solve_spectrum(cfg.bc.build(), window, cfg.common.params, opts);
  }
  for (const std::string& w : spec.warnings) {
    std::cerr << "warning: " << w << "\n";
  }

  if (!cfg.dump_path.empty()) {
    std::ostringstream os;
    os.precision(17);
    os << "mode,x,re_phi1,im_phi1,re_phi2,im_phi2\n";
    for (std::size_t i = 0; i < spec.pairs.size(); ++i) {
      const GridWaveFunction f =
          eigenfunction(spec.pairs[i], spec, cfg.dump_grid);
      for (std::size_t j = 0; j < f.samples.size(); ++j) {
        const double x = f.params.L * static_cast<double>(j) /
                         static_cast<double>(f.grid_size());
        os << i << ',' << x << ',' << f.samples[j].c1.real() << ','
           << f.samples[j].c1.imag() << ',' << f.samples[j].c2.real() << ','
           << f.samples[j].c2.imag() << '\n';
      }
    }
    std::ofstream dump(cfg.dump_path);
    if (!dump) {
      throw std::invalid_argument("cannot open dump file '" + cfg.dump_path +
                                  "'");
    }
    dump << os.str();
    std::cerr << "wrote " << cfg.dump_path << "\n";
  }

  if (cfg.common.format == "csv") {
    std::ostringstream os;
    os.precision(17);
    os << "n,k,E,degeneracy_index\n";
    for (std::size_t i = 0; i < spec.pairs.size(); ++i) {
      const Eigenpair& p = spec.pairs[i];
      os << i << ',' << p.k << ',' << p.E << ',' << p.degeneracy_index << '\n';
    }
    emit(cfg.common, os.str());
  } else {
    json rep;
    rep["command"] = "spectrum";
    rep["config"] = {{"params", params_echo(cfg.common.params)},
                     {"bc", cfg.weyl_branch != 0
                                ? json{{"weyl_branch", cfg.weyl_branch},
                                       {"theta", cfg.theta}}
                                : cfg.bc.echo()},
                     {"window", {{"e_min", cfg.e_min},
                                 {"e_max", cfg.e_max},
                                 {"points", cfg.points}}},
                     {"seed", cfg.common.seed}};
    json levels = json::array();
    for (std::size_t i = 0; i < spec.pairs.size(); ++i) {
      const Eigenpair& p = spec.pairs[i];
      levels.push_back({{"n", i},
                        {"k", p.k},
                        {"E", p.E},
                        {"degeneracy_index", p.degeneracy_index},
                        {"amplitude", json::array({complex_json(p.amplitude.c1),
                                                   complex_json(p.amplitude.c2)})}});
    }
    rep["results"] = {{"levels", levels}};
    rep["warnings"] = spec.warnings;
    rep["pass"] = true;
    emit(cfg.common, rep.dump(2) + "\n");
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// evolve
// ---------------------------------------------------------------------------

struct EvolveConfig {
  CommonConfig common;
  BCSpec bc;
  std::string coeffs_text;
  std::string initial_path;  // CSV rows: u,v (grid order)
  bool random_majorana = false;
  double t_final = 10.0;
  std::size_t steps = 100;
  double e_min = 0.0;
  double e_max = 0.0;  // 0,0 = default window
  std::size_t grid = 256;
  std::string final_state_path;
};

GridWaveFunction initial_state_from_file(const std::string& path,
                                         const PhysicalParams& params,
                                         std::size_t grid) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open initial-state file '" + path +
                                "'");
  }
  std::vector<double> u;
  std::vector<double> v;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') {
      continue;
    }
    std::istringstream ls(line);
    std::string a;
    std::string b;
    if (!std::getline(ls, a, ',') || !std::getline(ls, b, ',')) {
      throw std::invalid_argument("initial-state rows must be 'u,v'");
    }
    u.push_back(std::stod(a));
    v.push_back(std::stod(b));
  }
  if (u.size() != grid + 1) {
    throw std::invalid_argument(
        "initial-state file must have grid+1 rows (got " +
        std::to_string(u.size()) + ", want " + std::to_string(grid + 1) + ")");
  }
  return make_majorana_state(u, v, params.nu, params);
}

int run_evolve(const EvolveConfig& cfg) {
  cfg.common.params.validate();
  if (cfg.steps < 2) {
    throw std::invalid_argument("evolve: --steps must be at least 2");
  }
  const MatrixBC bc = cfg.bc.build();
  const EnergyWindow window =
      (cfg.e_min == 0.0 && cfg.e_max == 0.0)
          ? default_mode_window(cfg.common.params)
          : EnergyWindow{cfg.e_min, cfg.e_max, 1024};

  const int given = (cfg.coeffs_text.empty() ? 0 : 1) +
                    (cfg.initial_path.empty() ? 0 : 1) +
                    (cfg.random_majorana ? 1 : 0);
  if (given != 1) {
    throw std::invalid_argument(
        "exactly one of --coeffs/--initial/--random-majorana is required");
  }

  SolveOptions sopts;
  sopts.exec = cfg.common.exec();
  const Spectrum spectrum =
      solve_spectrum(bc, window, cfg.common.params, sopts);

  ModeExpansion expansion;
  if (!cfg.coeffs_text.empty()) {
    std::vector<Cx> coeffs = parse_complex_list(cfg.coeffs_text);
    if (coeffs.size() != spectrum.pairs.size()) {
      throw std::invalid_argument(
          "--coeffs needs one entry per spectrum level (" +
          std::to_string(spectrum.pairs.size()) + " levels in the window)");
    }
    double norm2 = 0.0;
    for (const Cx& c : coeffs) {
      norm2 += std::norm(c);
    }
    if (norm2 < 1e-300) {
      throw std::invalid_argument("--coeffs must not be all zero");
    }
    // Build the state from the coefficients, then expand it back so the
    // time series uses the same machinery as the other input modes.
    ModeExpansion direct;
    direct.spectrum = spectrum;
    direct.grid_size = cfg.grid;
    direct.coefficients = coeffs;
    direct.basis.resize(spectrum.pairs.size());
    for (std::size_t i = 0; i < spectrum.pairs.size(); ++i) {
      direct.basis[i] = eigenfunction(spectrum.pairs[i], spectrum,
                                      cfg.grid).samples;
    }
    GridWaveFunction state = evolve(direct, 0.0, cfg.common.exec());
    normalize(state);
    expansion = expand(state, spectrum, cfg.common.exec());
  } else if (!cfg.initial_path.empty()) {
    const GridWaveFunction state =
        initial_state_from_file(cfg.initial_path, cfg.common.params, cfg.grid);
    expansion = expand(state, spectrum, cfg.common.exec());
  } else {
    const GridWaveFunction state = make_random_majorana_state(
        bc, cfg.common.params, cfg.grid, window, cfg.common.seed,
        cfg.common.exec());
    expansion = expand(state, spectrum, cfg.common.exec());
  }
  for (const std::string& w : expansion.warnings) {
    std::cerr << "warning: " << w << "\n";
  }

  std::ostringstream csv;
  csv.precision(17);
  csv << "t,norm,j_at_0,j_at_L,chirality,majorana_residual\n";
  json series = json::array();
  for (std::size_t s = 0; s < cfg.steps; ++s) {
    const double t = cfg.t_final * static_cast<double>(s) /
                     static_cast<double>(cfg.steps - 1);
    const GridWaveFunction psi = evolve(expansion, t, cfg.common.exec());
    const Observables obs = observables(psi, cfg.common.params.nu);
    csv << t << ',' << obs.norm << ',' << obs.j_at_0 << ',' << obs.j_at_L
        << ',' << obs.chirality << ',' << obs.majorana_residual << '\n';
    series.push_back({{"t", t},
                      {"norm", obs.norm},
                      {"j_at_0", obs.j_at_0},
                      {"j_at_L", obs.j_at_L},
                      {"chirality", obs.chirality},
                      {"majorana_residual", obs.majorana_residual}});
    if (!cfg.final_state_path.empty() && s + 1 == cfg.steps) {
      std::ofstream dump(cfg.final_state_path);
      if (!dump) {
        throw std::invalid_argument("cannot open final-state file '" +
                                    cfg.final_state_path + "'");
      }
      dump.precision(17);
      dump << "x,re_phi1,im_phi1,re_phi2,im_phi2\n";
      for (std::size_t j = 0; j < psi.samples.size(); ++j) {
        const double x = psi.params.L * static_cast<double>(j) /
                         static_cast<double>(psi.grid_size());
        dump << x << ',' << psi.samples[j].c1.real() << ','
             << psi.samples[j].c1.imag() << ',' << psi.samples[j].c2.real()
             << ',' << psi.samples[j].c2.imag() << '\n';
      }
      std::cerr << "wrote " << cfg.final_state_path << "\n";
    }
  }

  if (cfg.common.format == "csv") {
    emit(cfg.common, csv.str());
  } else {
    json rep;
    rep["command"] = "evolve";
    rep["config"] = {{"params", params_echo(cfg.common.params)},
                     {"bc", cfg.bc.echo()},
                     {"t_final", cfg.t_final},
                     {"steps", cfg.steps},
                     {"grid", cfg.grid},
                     {"seed", cfg.common.seed}};
    rep["results"] = {{"series", series},
                      {"truncation_error", expansion.truncation_error}};
    rep["warnings"] = expansion.warnings;
    rep["pass"] = true;
    emit(cfg.common, rep.dump(2) + "\n");
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// scan
// ---------------------------------------------------------------------------

struct ScanConfig {
  CommonConfig common;
  std::size_t theta_points = 0;
  int branch = 1;
  std::string family1_sweep;
  std::string family2_sweep;
  double e_min = -10.0;
  double e_max = 10.0;
  std::size_t points = 768;
};

int run_scan(const ScanConfig& cfg) {
  cfg.common.params.validate();
  const int given = (cfg.theta_points != 0 ? 1 : 0) +
                    (cfg.family1_sweep.empty() ? 0 : 1) +
                    (cfg.family2_sweep.empty() ? 0 : 1);
  if (given != 1) {
    throw std::invalid_argument(
        "exactly one of --theta/--family1-m0/--family2-m1 is required");
  }

  if (cfg.theta_points != 0) {
    const auto thetas =
        majorana_phase_scan(cfg.branch, cfg.theta_points, cfg.common.exec());
    if (cfg.common.format == "csv") {
      std::ostringstream os;
      os.precision(17);
      os << "theta\n";
      for (double t : thetas) {
        os << t << '\n';
      }
      emit(cfg.common, os.str());
    } else {
      json rep;
      rep["command"] = "scan";
      rep["config"] = {{"params", params_echo(cfg.common.params)},
                       {"theta_points", cfg.theta_points},
                       {"branch", cfg.branch},
                       {"seed", cfg.common.seed}};
      rep["results"] = {{"admissible_thetas", thetas}};
      rep["pass"] = true;
      emit(cfg.common, rep.dump(2) + "\n");
    }
    return kExitOk;
  }

  const bool is_family1 = !cfg.family1_sweep.empty();
  const std::vector<double> sweep =
      parse_sweep(is_family1 ? cfg.family1_sweep : cfg.family2_sweep);
  const EnergyWindow window{cfg.e_min, cfg.e_max, cfg.points};
  SolveOptions sopts;
  sopts.exec = cfg.common.exec();

  std::ostringstream csv;
  csv.precision(17);
  csv << "param,root_index,k,E\n";
  json rows = json::array();
  for (double p : sweep) {
    const MatrixBC bc = is_family1
                            ? family_one(p, std::sqrt(1.0 - p * p))
                            : family_two(p, std::sqrt(1.0 - p * p));
    const Spectrum s = solve_spectrum(bc, window, cfg.common.params, sopts);
    for (std::size_t i = 0; i < s.pairs.size(); ++i) {
      csv << p << ',' << i << ',' << s.pairs[i].k << ',' << s.pairs[i].E
          << '\n';
      rows.push_back({{"param", p},
                      {"root_index", i},
                      {"k", s.pairs[i].k},
                      {"E", s.pairs[i].E}});
    }
  }

  if (cfg.common.format == "csv") {
    emit(cfg.common, csv.str());
  } else {
    json rep;
    rep["command"] = "scan";
    rep["config"] = {{"params", params_echo(cfg.common.params)},
                     {"sweep", is_family1 ? cfg.family1_sweep
                                          : cfg.family2_sweep},
                     {"family", is_family1 ? "I" : "II"},
                     {"window", {{"e_min", cfg.e_min},
                                 {"e_max", cfg.e_max},
                                 {"points", cfg.points}}},
                     {"seed", cfg.common.seed}};
    rep["results"] = {{"levels", rows}};
    rep["pass"] = true;
    emit(cfg.common, rep.dump(2) + "\n");
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct VerifyConfig {
  CommonConfig common;
  std::vector<double> extra_masses;
  double tolerance_scale = 1.0;
};

int run_verify(const VerifyConfig& cfg) {
  AcceptanceOptions opts;
  opts.exec = cfg.common.exec();
  opts.tolerance_scale = cfg.tolerance_scale;
  for (double m : cfg.extra_masses) {
    opts.masses.push_back(m);
  }

  const auto results = run_acceptance_suite(opts);
  bool all_pass = true;
  for (const auto& r : results) {
    all_pass = all_pass && r.pass;
  }

  if (cfg.common.format == "csv") {
    std::ostringstream os;
    os << "id,name,pass,detail\n";
    for (const auto& r : results) {
      os << r.id << ',' << r.name << ',' << (r.pass ? "1" : "0") << ",\""
         << r.detail << "\"\n";
    }
    emit(cfg.common, os.str());
  } else if (cfg.common.format == "json") {
    json rep;
    rep["command"] = "verify";
    rep["config"] = {{"tolerance_scale", cfg.tolerance_scale},
                     {"extra_masses", cfg.extra_masses}};
    json rows = json::array();
    for (const auto& r : results) {
      rows.push_back({{"id", r.id},
                      {"name", r.name},
                      {"pass", r.pass},
                      {"detail", r.detail}});
    }
    rep["results"] = {{"criteria", rows}};
    rep["pass"] = all_pass;
    emit(cfg.common, rep.dump(2) + "\n");
  } else {
    std::ostringstream table;
    for (const auto& r : results) {
      table << (r.pass ? "PASS" : "FAIL") << "  " << r.id << "\t" << r.name
            << "\t" << r.detail << "\n";
    }
    table << (all_pass ? "OK" : "FAILURE") << "\n";
    emit(cfg.common, table.str());
  }
  return all_pass ? kExitOk : kExitAssertionFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "wmbox: boundary conditions, spectra, and dynamics for the 1+1D "
      "Dirac/Weyl/Majorana particle in a box"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read options from a TOML/INI file");

  CheckConfig check_cfg;
  auto* check_cmd = app.add_subcommand(
      "check", "Classify a boundary condition (self-adjointness, Majorana "
               "compatibility, chirality preservation, family membership)");
  add_common_options(check_cmd, check_cfg.common);
  add_bc_options(check_cmd, check_cfg.bc);
  check_cmd->add_flag("--require-self-adjoint", check_cfg.require_self_adjoint,
                      "Exit 1 unless self-adjoint");
  check_cmd->add_flag("--require-majorana", check_cfg.require_majorana,
                      "Exit 1 unless Majorana-compatible");
  check_cmd->add_flag("--require-chirality", check_cfg.require_chirality,
                      "Exit 1 unless chirality-preserving");

  SpectrumConfig spec_cfg;
  auto* spec_cmd = app.add_subcommand(
      "spectrum", "Quantized levels in an energy window, with optional "
                  "plot-ready eigenfunction dump");
  add_common_options(spec_cmd, spec_cfg.common);
  add_bc_options(spec_cmd, spec_cfg.bc);
  spec_cmd->add_option("--weyl-branch", spec_cfg.weyl_branch,
                       "Solve the one-component Weyl problem on branch 1|2 "
                       "instead of a matrix BC");
  spec_cmd->add_option("--theta", spec_cfg.theta,
                       "Phase for --weyl-branch (default 0)");
  spec_cmd->add_option("--emin", spec_cfg.e_min, "Window lower edge");
  spec_cmd->add_option("--emax", spec_cfg.e_max, "Window upper edge");
  spec_cmd->add_option("--points", spec_cfg.points, "Coarse scan points");
  spec_cmd->add_option("--dump", spec_cfg.dump_path,
                       "Write eigenfunctions as CSV "
                       "(mode,x,re_phi1,im_phi1,re_phi2,im_phi2)");
  spec_cmd->add_option("--dump-grid", spec_cfg.dump_grid,
                       "Grid size for --dump (default 256)");

  EvolveConfig evolve_cfg;
  auto* evolve_cmd = app.add_subcommand(
      "evolve", "Eigenbasis time evolution with an observables time series");
  add_common_options(evolve_cmd, evolve_cfg.common);
  add_bc_options(evolve_cmd, evolve_cfg.bc);
  evolve_cmd->add_option("--coeffs", evolve_cfg.coeffs_text,
                         "Mode coefficients 'c0,c1,...' aligned with the "
                         "window's levels");
  evolve_cmd->add_option("--initial", evolve_cfg.initial_path,
                         "CSV file of real 'u,v' rows (grid+1 of them); the "
                         "state is built to satisfy the Majorana relations");
  evolve_cmd->add_flag("--random-majorana", evolve_cfg.random_majorana,
                       "Random band-limited Majorana initial state (uses "
                       "--seed)");
  evolve_cmd->add_option("--t-final", evolve_cfg.t_final,
                         "Final time (default 10)");
  evolve_cmd->add_option("--steps", evolve_cfg.steps,
                         "Number of sample times (default 100)");
  evolve_cmd->add_option("--emin", evolve_cfg.e_min,
                         "Mode window lower edge (default -40 hbar c / L)");
  evolve_cmd->add_option("--emax", evolve_cfg.e_max,
                         "Mode window upper edge");
  evolve_cmd->add_option("--grid", evolve_cfg.grid,
                         "Spatial grid size N (default 256)");
  evolve_cmd->add_option("--final-state", evolve_cfg.final_state_path,
                         "Dump the final state as CSV");

  ScanConfig scan_cfg;
  auto* scan_cmd = app.add_subcommand(
      "scan", "Phase scans and family parameter sweeps (level diagrams)");
  add_common_options(scan_cmd, scan_cfg.common);
  scan_cmd->add_option("--theta", scan_cfg.theta_points,
                       "Scan the chiral phase over this many grid points and "
                       "report the Majorana-admissible set");
  scan_cmd->add_option("--branch", scan_cfg.branch, "Weyl branch 1|2");
  scan_cmd->add_option("--family1-m0", scan_cfg.family1_sweep,
                       "Sweep m0 as 'lo:hi:count' (m2 = +sqrt(1-m0^2))");
  scan_cmd->add_option("--family2-m1", scan_cfg.family2_sweep,
                       "Sweep m1 as 'lo:hi:count' (m3 = +sqrt(1-m1^2))");
  scan_cmd->add_option("--emin", scan_cfg.e_min, "Window lower edge");
  scan_cmd->add_option("--emax", scan_cfg.e_max, "Window upper edge");
  scan_cmd->add_option("--points", scan_cfg.points, "Coarse scan points");

  VerifyConfig verify_cfg;
  auto* verify_cmd = app.add_subcommand(
      "verify", "Run the full verification suite; exit 0 iff every criterion "
                "passes");
  verify_cfg.common.format = "table";
  verify_cmd->add_option("--format", verify_cfg.common.format,
                         "Output format: table, json, or csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  verify_cmd->add_option("--output", verify_cfg.common.output,
                         "Write the table to this file instead of stdout");
  verify_cmd->add_flag("--serial", verify_cfg.common.serial,
                       "Use the serial reference kernels");
  verify_cmd->add_option("--mass", verify_cfg.extra_masses,
                         "Extra mass values for the mass-independence "
                         "criterion (repeatable)")
      ->take_all();
  verify_cmd->add_option("--tolerance-scale", verify_cfg.tolerance_scale,
                         "Scales every bound (0 = injected-fault sanity run)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadConfig;
  }

  const auto started = std::chrono::steady_clock::now();
  int code = kExitOk;
  try {
    if (check_cmd->parsed()) {
      code = run_check(check_cfg);
    } else if (spec_cmd->parsed()) {
      code = run_spectrum(spec_cfg);
    } else if (evolve_cmd->parsed()) {
      code = run_evolve(evolve_cfg);
    } else if (scan_cmd->parsed()) {
      code = run_scan(scan_cfg);
    } else if (verify_cmd->parsed()) {
      code = run_verify(verify_cfg);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitAssertionFailed;
  }
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - started);
  std::cerr << "wall-clock: " << elapsed.count() << " ms\n";
  return code;
}
