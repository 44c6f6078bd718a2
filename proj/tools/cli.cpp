#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "cliffstring/errors.hpp"
#include "cliffstring/json_io.hpp"
#include "cliffstring/quantum_rep.hpp"
#include "cliffstring/random.hpp"
#include "cliffstring/resolve.hpp"
#include "cliffstring/string_modes.hpp"
#include "cliffstring/sweeps.hpp"

namespace cliffstring::cli {

namespace {

constexpr const char* kSeedVariable = "CLIFFSTRING_SEED";
constexpr std::uint64_t kDefaultSeed = 1;

// Thrown for anything the user must fix: unreadable files, bad flags, invalid data.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Check {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  long trials = 1;
  bool lower_bound = false;

  bool pass() const { return lower_bound ? value >= tolerance : value <= tolerance; }
};

class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  void add(Check c) { checks_.push_back(std::move(c)); }
  Json& data() { return data_; }

  bool pass() const {
    for (const auto& c : checks_) {
      if (!c.pass()) return false;
    }
    return true;
  }

  Json to_json() const {
    Json j = data_.is_null() ? Json::object() : data_;
    Json checks = Json::object();
    for (const auto& c : checks_) {
      checks[c.name] = {{"max_residual", c.value},
                        {"tolerance", c.tolerance},
                        {"bound", c.lower_bound ? "lower" : "upper"},
                        {"trials", c.trials},
                        {"pass", c.pass()}};
    }
    j["command"] = command_;
    j["checks"] = std::move(checks);
    j["pass"] = pass();
    return j;
  }

 private:
  std::string command_;
  std::vector<Check> checks_;
  Json data_;
};

struct Options {
  std::optional<std::uint64_t> seed;
  int trials = 0;
  std::string input;
  std::string output;
  std::string csv;
  int grid = 512;
  int csv_grid = 64;
  int degree = 6;
  double hbar = 1.0;
  int jz_degree = 4;
  int nest_depth = 5;
  int spacetime_trials = 1000;
  double t_emit = 0.0;
  double t_obsv = 0.0;
  std::optional<double> p;
  std::string kind;
  int size = 4;
  int modes = 3;
  std::map<std::string, std::map<std::string, double>> tol;
};

std::uint64_t resolve_seed(const Options& o) {
  if (o.seed) return *o.seed;
  if (const char* env = std::getenv(kSeedVariable); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      const std::uint64_t s = std::stoull(env, &used);
      if (used == std::string(env).size()) return s;
    } catch (const std::exception&) {
    }
    throw InputError(std::string(kSeedVariable) + " is not an unsigned integer");
  }
  return kDefaultSeed;
}

int trials_or(const Options& o, int fallback) { return o.trials > 0 ? o.trials : fallback; }

Json read_input(const std::string& path) {
  try {
    return read_json_file(path);
  } catch (const JsonFormatError&) {
    throw;
  } catch (const std::runtime_error& e) {
    throw InputError(e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write " + path);
  f << text;
}

void add_common(CLI::App* sub, Options& o, bool seeded) {
  if (seeded) {
    sub->add_option("--seed", o.seed, "Random seed; falls back to $" + std::string(kSeedVariable));
    sub->add_option("--trials", o.trials, "Number of random trials")->check(CLI::PositiveNumber);
  }
  sub->add_option("--output,--report", o.output, "Write the JSON report to this path instead of stdout");
}

void add_tolerance(CLI::App* sub, Options& o, const std::string& name, double fallback,
                   const std::string& alias = "") {
  double& slot = o.tol[sub->get_name()][name];
  slot = fallback;
  sub->add_option("--tol." + name + (alias.empty() ? "" : "," + alias), slot, "Tolerance for " + name)->check(CLI::PositiveNumber)->capture_default_str();
}

double tol(const Options& o, const std::string& command, const std::string& name) {
  return o.tol.at(command).at(name);
}

Report octonion_check(const Options& o) {
  const std::uint64_t seed = resolve_seed(o);
  const int trials = trials_or(o, 10000);
  Rng rng(seed);
  const auto pairs = random_octonion_pairs(rng, trials);
  const auto s = octonion_identity_sweep(pairs);
  const Octonion w = non_associativity_witness();

  Report r("octonion-check");
  const std::string c = "octonion-check";
  r.add({"norm_composition", s.norm_composition, tol(o, c, "norm"), trials});
  r.add({"alternativity", s.alternativity, tol(o, c, "alternativity"), trials});
  r.add({"conjugation", s.conjugation, tol(o, c, "conjugation"), trials});
  r.add({"non_associativity", norm(w), tol(o, c, "witness"), 1, true});
  r.data()["seed"] = seed;
  r.data()["witness"] = {{"a", "e1"}, {"b", "e2"}, {"c", "e4"}, {"associator", to_json(w)}};
  return r;
}

Json pivot_names(const Resolution& res) {
  Json j = Json::array();
  for (int k = 0; k < res.size(); ++k) {
    switch (res.pivot(k)) {
      case Pivot::Positive:
        j.push_back("positive");
        break;
      case Pivot::Negative:
        j.push_back("negative");
        break;
      case Pivot::Degenerate:
        j.push_back("degenerate");
        break;
    }
  }
  return j;
}

Report resolve_command(const Options& o) {
  const std::string c = "resolve";
  Report r(c);
  if (!o.input.empty()) {
    const OctHermitian h = hermitian_from_json(read_input(o.input));
    const Resolution res = resolve_hermitian(h);
    const double residual = reconstruction_residual(h, res);
    Json vs = Json::array();
    for (const auto& v : vectors(res)) vs.push_back(to_json(v));
    r.add({"reconstruction", residual, tol(o, c, "residual") * (1.0 + h.max_entry()), 1});
    Json a = Json::array();
    Json b = Json::array();
    for (int i = 0; i < res.size(); ++i) {
      Json ra = Json::array();
      Json rb = Json::array();
      for (int k = 0; k <= i; ++k) {
        ra.push_back(to_json(res.a(i, k)));
        rb.push_back(to_json(res.b(i, k)));
      }
      a.push_back(std::move(ra));
      b.push_back(std::move(rb));
    }
    r.data()["input"] = to_json(h);
    r.data()["a"] = std::move(a);
    r.data()["b"] = std::move(b);
    r.data()["max_residual"] = residual;
    r.data()["vectors"] = std::move(vs);
    r.data()["pivots"] = pivot_names(res);
    return r;
  }
  const std::uint64_t seed = resolve_seed(o);
  const int trials = trials_or(o, 200);
  Rng rng(seed);
  const auto batch = random_resolve_batch(rng, trials);
  const auto points = random_spacetime_points(rng, o.spacetime_trials);
  const auto rs = resolve_sweep(batch);
  const auto st = spacetime_sweep(points);
  r.add({"reconstruction", rs.max_residual, tol(o, c, "residual"), trials});
  r.add({"degenerate_pivots", static_cast<double>(rs.degenerate_pivots), 1.0, trials, true});
  r.add({"spacetime_roundtrip", st.roundtrip, tol(o, c, "spacetime"), o.spacetime_trials});
  r.add({"spacetime_isotropy", st.isotropy, tol(o, c, "spacetime"), o.spacetime_trials});
  r.data()["seed"] = seed;
  r.data()["negative_pivots"] = rs.negative_pivots;
  return r;
}

Report lorentz_check(const Options& o) {
  const std::string c = "lorentz-check";
  const std::uint64_t seed = resolve_seed(o);
  const int trials = trials_or(o, 1000);
  Rng rng(seed);
  const auto batch = random_lorentz_trials(rng, trials, o.nest_depth);
  const double control = mixed_subspace_control(rng, 32);
  const auto s = lorentz_sweep(batch);

  int subspaces = 0;
  for (int k = 1; k < 8; ++k) subspaces += s.subspace_hits[static_cast<std::size_t>(k)] > 0 ? 1 : 0;

  Report r(c);
  r.add({"determinant", s.determinant, tol(o, c, "det"), trials});
  r.add({"minkowski_norm", s.minkowski_norm, tol(o, c, "det"), trials});
  r.add({"compatibility", s.compatibility, tol(o, c, "compatibility"), trials});
  r.add({"contraction", s.contraction, tol(o, c, "contraction"), trials});
  r.add({"mixed_subspace_control", control, tol(o, c, "control"), 32, true});
  r.add({"subspaces_exercised", static_cast<double>(subspaces), 7.0, trials, true});
  r.add({"reflections_exercised", static_cast<double>(s.reflections), 1.0, trials, true});
  r.data()["seed"] = seed;
  r.data()["nest_depth"] = s.max_depth;
  r.data()["max_det_residual"] = std::max(s.determinant, s.minkowski_norm);
  r.data()["max_compat_residual"] = s.compatibility;
  r.data()["max_contraction_residual"] = s.contraction;
  r.data()["subspace_hits"] = s.subspace_hits;
  return r;
}

std::string grid_csv(const ModeSpectrum& ms, int n) {
  std::ostringstream csv;
  csv << std::setprecision(17);
  csv << "tau,sigma";
  for (const char* field : {"X", "Jtau", "Jsigma"}) {
    for (const char* e : {"00", "01", "10", "11"}) csv << ',' << field << e << "_re," << field << e << "_im";
  }
  csv << '\n';
  const WorldsheetGrid grid{n, n};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= n; ++j) {
      const WorldsheetPoint pt{i * grid.h_tau(), std::min(j * grid.h_sigma(), 3.14159265358979323846)};
      const CMatrix2 x = coordinates(ms, pt);
      const Current cur = current_density(ms, pt);
      csv << pt.tau << ',' << pt.sigma;
      for (const CMatrix2* m : {&x, &cur.tau, &cur.sigma}) {
        for (int a = 0; a < 2; ++a) {
          for (int b = 0; b < 2; ++b) csv << ',' << (*m)(a, b).real() << ',' << (*m)(a, b).imag();
        }
      }
      csv << '\n';
    }
  }
  return csv.str();
}

Report string_modes_command(const Options& o) {
  const std::string c = "string-modes";
  std::optional<ModeSpectrum> ms;
  std::optional<std::uint64_t> seed;
  if (!o.input.empty()) {
    ms = enforce_boundary(spectrum_from_json(read_input(o.input)));
  } else {
    seed = resolve_seed(o);
    Rng rng(*seed);
    ms = random_spectrum(rng, o.modes);
  }
  const WorldsheetGrid grid{o.grid, o.grid};
  const StringSuite s = run_string_suite(*ms, grid);

  Report r(c);
  const long points = static_cast<long>(grid.n_tau) * (grid.n_sigma - 1);
  r.add({"conservation_convergence", std::abs(s.divergence_ratio - 4.0), tol(o, c, "ratio"), points});
  r.add({"eom_convergence", std::abs(s.eom_ratio - 4.0), tol(o, c, "ratio"), points});
  r.add({"endpoint_flux", s.endpoint_flux, tol(o, c, "flux"), grid.n_tau});
  r.add({"charge", s.charge, tol(o, c, "charge"), 2});
  r.add({"charge_independence", s.charge_independence, tol(o, c, "charge"), 2});
  r.add({"evenness", s.evenness, tol(o, c, "evenness"), 1});
  r.add({"endpoint_slope", s.endpoint_slope, tol(o, c, "evenness"), 1});
  r.add({"hermiticity", s.hermiticity, tol(o, c, "hermiticity"), 1});

  Json& d = r.data();
  if (seed) d["seed"] = *seed;
  d["grid"] = {{"n_tau", grid.n_tau}, {"n_sigma", grid.n_sigma}};
  d["spectrum"] = to_json(*ms);
  d["divergence"] = {{"coarse", s.divergence_coarse}, {"fine", s.divergence_fine}, {"ratio", s.divergence_ratio}};
  d["eom"] = {{"coarse", s.eom_coarse}, {"fine", s.eom_fine}, {"ratio", s.eom_ratio}};
  Json p = Json::array();
  for (const auto& v : momentum_vector(*ms)) p.push_back(to_json(v));
  d["momentum"] = std::move(p);
  d["mass_shell"] = to_json(mass_shell(*ms));
  Json charges = Json::array();
  for (const auto& [n, m] : charge_density_coefficients(*ms)) charges.push_back({{"n", n}, {"M", to_json(m)}});
  d["charge_coefficients"] = std::move(charges);

  if (!o.csv.empty()) write_text(o.csv, grid_csv(*ms, o.csv_grid));
  return r;
}

Report quantum_check(const Options& o) {
  const std::string c = "quantum-check";
  const QuantumSuite s = run_quantum_suite(o.degree, o.hbar, o.jz_degree);
  const double t = tol(o, c, "relation");
  Report r(c);
  r.add({"canonical", s.canonical, t, 16});
  r.add({"mixed_algebra", s.mixed, t, 16});
  r.add({"m0_routes", s.m0_routes, t, 4});
  r.add({"lorentz_closure", s.closure, t, 16});
  r.add({"dotted_commutator", s.dotted, t, 16});
  r.add({"three_vector", s.three_vector, t, 9});
  r.add({"jz_three_vector", s.jz_three_vector, t, 1});
  r.add({"tensor_antisymmetry", s.tensor_antisymmetry, t, 16});
  r.add({"tensor_roundtrip", s.tensor_roundtrip, t, 4});
  r.add({"tensor_closure", s.tensor_closure, t, 36});
  r.add({"printed_order_conjugate_closure", s.closure_printed_conjugate, t, 16});
  r.add({"printed_order_control", s.closure_printed_plus, tol(o, c, "control"), 16, true});
  r.add({"jz_integrality", s.jz_integrality, tol(o, c, "integrality"), static_cast<long>(s.jz_eigenvalues.size())});

  Json& d = r.data();
  d["degree"] = o.degree;
  d["hbar"] = o.hbar;
  d["dim"] = PolyBasis(o.degree).dim();
  d["jz_degree"] = o.jz_degree;
  Json ev = Json::array();
  for (const auto& z : s.jz_eigenvalues) ev.push_back(to_json(z));
  d["jz_spectrum"] = std::move(ev);
  return r;
}

Report redshift_command(const Options& o) {
  Report r("redshift");
  const double z = redshift(o.t_emit, o.t_obsv);
  r.data()["t_emit"] = o.t_emit;
  r.data()["t_obsv"] = o.t_obsv;
  r.data()["z"] = z;
  if (o.p) {
    r.data()["p"] = *o.p;
    r.data()["emission_bound"] = emission_bound(o.t_obsv - o.t_emit, *o.p, z);
  }
  return r;
}

Json gen_fixture(const Options& o) {
  Rng rng(resolve_seed(o));
  if (o.kind == "hermitian") return to_json(random_hermitian(rng, o.size));
  if (o.kind == "spectrum") return to_json(random_spectrum(rng, o.modes));
  return to_json(OctSpinor{rng.octonion(), rng.octonion()});
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.output.empty()) {
    out << text;
  } else {
    write_text(o.output, text);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Octonionic spinor, Lorentz and string-mode checks"};
  app.require_subcommand(1);
  Options o;

  auto* oct = app.add_subcommand("octonion-check", "Randomized octonion identity sweep");
  add_common(oct, o, true);
  add_tolerance(oct, o, "norm", 1e-12);
  add_tolerance(oct, o, "alternativity", 1e-12);
  add_tolerance(oct, o, "conjugation", 1e-12);
  add_tolerance(oct, o, "witness", 1.0);

  auto* res = app.add_subcommand("resolve", "Resolve a Hermitian matrix, or sweep random ones");
  add_common(res, o, true);
  res->add_option("--input", o.input, "Hermitian matrix JSON")->check(CLI::ExistingFile);
  res->add_option("--spacetime-trials", o.spacetime_trials, "Random 4-vectors for the spacetime sweep")
      ->check(CLI::PositiveNumber);
  add_tolerance(res, o, "residual", 1e-10, "--tol");
  add_tolerance(res, o, "spacetime", 1e-12);

  auto* lor = app.add_subcommand("lorentz-check", "Nested Lorentz transform sweep");
  add_common(lor, o, true);
  lor->add_option("--nest-depth", o.nest_depth, "Maximum factors per transform")->check(CLI::Range(1, 16));
  add_tolerance(lor, o, "det", 1e-10);
  add_tolerance(lor, o, "compatibility", 1e-10);
  add_tolerance(lor, o, "contraction", 1e-10);
  add_tolerance(lor, o, "control", 0.1);

  auto* str = app.add_subcommand("string-modes", "Open-string current, charge and equation-of-motion checks");
  add_common(str, o, true);
  str->add_option("--input,--spectrum", o.input, "Spectrum JSON; a random spectrum is used when absent")
      ->check(CLI::ExistingFile);
  str->add_option("--grid", o.grid, "Nodes per world-sheet direction")->check(CLI::Range(8, 1 << 14));
  str->add_option("--modes", o.modes, "Modes of the random spectrum")->check(CLI::Range(1, 64));
  str->add_option("--csv", o.csv, "Write X and J on a grid scan to this CSV path");
  str->add_option("--csv-grid", o.csv_grid, "Nodes per direction of the CSV scan")->check(CLI::Range(2, 4096));
  add_tolerance(str, o, "ratio", 0.5);
  add_tolerance(str, o, "flux", 1e-12);
  add_tolerance(str, o, "charge", 1e-8);
  add_tolerance(str, o, "evenness", 1e-8);
  add_tolerance(str, o, "hermiticity", 1e-12);

  auto* qua = app.add_subcommand("quantum-check", "Polynomial representation of the quantized Lorentz algebra");
  add_common(qua, o, false);
  qua->add_option("--degree", o.degree, "Polynomial degree bound N")->check(CLI::Range(2, 12));
  qua->add_option("--hbar", o.hbar, "Value of hbar")->check(CLI::PositiveNumber);
  qua->add_option("--jz-degree", o.jz_degree, "Degree bound of the J^z spectrum")->check(CLI::Range(0, 16));
  add_tolerance(qua, o, "relation", 1e-10);
  add_tolerance(qua, o, "integrality", 1e-9);
  add_tolerance(qua, o, "control", 0.1);

  auto* red = app.add_subcommand("redshift", "Redshift and emission-time bound");
  add_common(red, o, false);
  red->add_option("--t-emit", o.t_emit, "Emission time")->required();
  red->add_option("--t-obsv", o.t_obsv, "Observation time")->required();
  red->add_option("--p", o.p, "Fraction p in (0, 1) for the emission-time bound");

  auto* gen = app.add_subcommand("gen-fixture", "Write a reproducible random input file");
  gen->add_option("--kind", o.kind, "hermitian, spectrum or spinor")
      ->required()
      ->check(CLI::IsMember({"hermitian", "spectrum", "spinor"}));
  gen->add_option("--seed", o.seed, "Random seed; falls back to $" + std::string(kSeedVariable));
  gen->add_option("--output", o.output, "Write the fixture to this path instead of stdout");
  gen->add_option("--n", o.size, "Size of a Hermitian fixture")->check(CLI::Range(1, 64));
  gen->add_option("--modes", o.modes, "Modes of a spectrum fixture")->check(CLI::Range(1, 64));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitInputError;
  }

  try {
    if (gen->parsed()) {
      emit(o, dump(gen_fixture(o)), out);
      return kExitPass;
    }
    std::optional<Report> report;
    if (oct->parsed()) report = octonion_check(o);
    if (res->parsed()) report = resolve_command(o);
    if (lor->parsed()) report = lorentz_check(o);
    if (str->parsed()) report = string_modes_command(o);
    if (qua->parsed()) report = quantum_check(o);
    if (red->parsed()) report = redshift_command(o);
    emit(o, dump(report->to_json()), out);
    return report->pass() ? kExitPass : kExitCheckFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace cliffstring::cli
