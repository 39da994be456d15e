#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "framescope/classifier.hpp"
#include "framescope/errors.hpp"
#include "framescope/frame_bounds.hpp"
#include "framescope/sampling_lab.hpp"
#include "framescope/toeplitz_ops.hpp"
#include "io.hpp"

namespace framescope::cli {

namespace {

using io::Cell;
using io::Table;

struct RunConfig {
  std::string command;
  std::string window;
  std::string xi;
  std::string M = "4,8,16,32";
  std::string N;
  std::int64_t cutoff = 4096;
  std::int64_t truncation = kDefaultTruncation;
  std::uint64_t seed = 1;
  std::string out;
  std::string format;
  std::string set = "gamma";
  std::string kind = "toeplitz";
  bool dump = false;
  bool even = false;
  double noise = 0.0;
  double t = 0.75;
  std::int64_t n_lo = -8;
  std::int64_t n_hi = 8;
};

[[noreturn]] void invalid(const std::string& msg) { throw Error(Errc::InvalidArgument, msg); }

std::vector<std::int64_t> sorted_list(const std::string& text, const std::string& field, std::int64_t min) {
  auto v = io::parse_int_list(text, field);
  for (auto x : v)
    if (x < min) invalid(field + ": values must be >= " + std::to_string(min) + " (got " + std::to_string(x) + ")");
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::optional<Xi> xi_of(const RunConfig& c) {
  if (c.xi.empty()) return std::nullopt;
  return Xi::parse(c.xi);
}

// Window from --window, or the modulation e^{2πiξx} from --xi.
WindowSpec window_of(const RunConfig& c) {
  if (!c.window.empty() && !c.xi.empty()) invalid("--window and --xi are mutually exclusive");
  if (!c.xi.empty()) return WindowSpec::modulated(Xi::parse(c.xi));
  if (c.window.empty()) invalid("--window is required");
  return io::parse_window(c.window);
}

Cell xi_cell(const WindowSpec& w) {
  if (auto m = w.get_if<Modulated>()) return m->xi.to_string();
  return std::monostate{};
}

Cell flag_cell(const std::optional<bool>& b) {
  if (b) return *b;
  return std::monostate{};
}

FrequencySet frequency_set(const RunConfig& c, std::optional<Xi>& xi) {
  xi = xi_of(c);
  if (c.set == "gamma") {
    if (!xi) invalid("--xi is required for --set gamma");
    return gamma_of_xi(*xi);
  }
  if (xi) invalid("--xi only applies to --set gamma");
  if (c.set == "integers") return FrequencySet::integers();
  if (c.set == "nonnegative") return FrequencySet::nonnegative();
  if (c.set == "negative") return FrequencySet::negative();
  invalid("--set: unknown set '" + c.set + "' (expected gamma, integers, nonnegative or negative)");
}

struct Output {
  Table table;
  std::optional<io::json> json_override;
};

Output cmd_classify(const RunConfig& c) {
  const auto w = window_of(c);
  const auto v = classify(w);
  Output o;
  o.table.columns = {"window", "xi", "status", "injective", "bounded_below", "invertible", "citation"};
  o.table.rows.push_back({w.name(), xi_cell(w), to_string(v.status), flag_cell(v.toeplitz.injective),
                          flag_cell(v.toeplitz.bounded_below), flag_cell(v.toeplitz.invertible), v.citation});
  o.json_override = io::verdict_to_json(v);
  return o;
}

Output cmd_bounds(const RunConfig& c) {
  const auto w = window_of(c);
  const auto status = to_string(classify(w).status);
  Output o;
  o.table.columns = {"window", "xi", "M", "A_M", "B_M", "tail", "rigorous", "verdict"};
  for (auto M : sorted_list(c.M, "--M", 1)) {
    const auto e = frame_bounds_subspace(w, static_cast<int>(M), c.truncation);
    o.table.rows.push_back({w.name(), xi_cell(w), M, e.A_M, e.B_M, e.tail, e.rigorous, status});
  }
  return o;
}

Output cmd_expsys(const RunConfig& c) {
  std::optional<Xi> xi;
  const auto gamma = frequency_set(c, xi);
  if (c.cutoff < 1) invalid("--cutoff must be >= 1");
  Output o;
  o.table.columns = {"window", "xi", "M", "A_M", "B_M", "tail", "rigorous", "verdict"};
  for (auto M : sorted_list(c.M, "--M", 1)) {
    const auto e = exp_system_bounds(gamma, static_cast<int>(M), c.cutoff);
    Cell verdict = std::monostate{};
    if (xi) verdict = to_string(classify_modulated(*xi).status);
    o.table.rows.push_back({c.set, xi ? Cell(xi->to_string()) : Cell(std::monostate{}), M, e.A_M, e.B_M, e.tail,
                            e.rigorous, verdict});
  }
  return o;
}

FiniteSection section_of(const RunConfig& c, const WindowSpec& w, int N) {
  if (c.kind == "toeplitz") return toeplitz_section(w, N);
  if (c.kind == "hankel") return hankel_section(w, N);
  if (c.kind == "analysis") return analysis_section(w, N);
  invalid("--kind: unknown section '" + c.kind + "' (expected toeplitz, hankel or analysis)");
}

Output cmd_spectrum(const RunConfig& c) {
  const auto w = window_of(c);
  const auto sizes = sorted_list(c.N.empty() ? "8,16,32,64" : c.N, "--N", 1);
  Output o;
  if (c.dump) {
    o.table.columns = {"kind", "N", "i", "j", "re", "im"};
  } else {
    o.table.columns = {"window", "kind", "N", "sigma_min", "sigma_max", "hermitian", "eig_min", "eig_max"};
  }
  for (auto N : sizes) {
    if (N > max_section_size()) {
      throw Error(Errc::SizeLimitExceeded, "--N: " + std::to_string(N) + " exceeds FRAMESCOPE_MAX_N");
    }
    const auto s = section_of(c, w, static_cast<int>(N));
    if (c.dump) {
      for (Eigen::Index i = 0; i < s.rows(); ++i)
        for (Eigen::Index j = 0; j < s.cols(); ++j)
          o.table.rows.push_back({to_string(s.kind), N, static_cast<std::int64_t>(i), static_cast<std::int64_t>(j),
                                  s.data(i, j).real(), s.data(i, j).imag()});
      continue;
    }
    const auto summary = spectral_summary(s);
    Cell eig_min = std::monostate{}, eig_max = std::monostate{};
    if (summary.hermitian_eigs) {
      eig_min = summary.hermitian_eigs->front();
      eig_max = summary.hermitian_eigs->back();
    }
    o.table.rows.push_back({w.name(), to_string(s.kind), N, summary.sigma_min, summary.sigma_max,
                            summary.hermitian_eigs.has_value(), eig_min, eig_max});
  }
  return o;
}

Output cmd_witness(const RunConfig& c) {
  Output o;
  o.table.columns = {"t", "n", "frequency", "re", "im", "abs"};
  for (const auto& [n, v] : witness_values(c.t, c.n_lo, c.n_hi)) {
    const double freq = n >= 0 ? static_cast<double>(n) + c.t : static_cast<double>(n) - c.t;
    o.table.rows.push_back({c.t, n, freq, v.real(), v.imag(), std::abs(v)});
  }
  return o;
}

Output cmd_dynsample(const RunConfig& c) {
  const auto w = window_of(c);
  Output o;
  o.table.columns = {"experiment", "N", "seed", "relative_error", "condition_number", "residual"};
  for (auto N : sorted_list(c.N.empty() ? "8,16,32" : c.N, "--N", 1)) {
    const auto pair = split_scheme(w, random_sequence(N, c.seed));
    auto samples = dynamical_forward(pair);
    if (c.noise > 0.0) samples = add_noise(std::move(samples), c.noise, c.seed + 1);
    const auto r = dynamical_recover(pair, samples);
    o.table.rows.push_back({"dynamical:" + w.name(), N, static_cast<std::int64_t>(c.seed), r.relative_error,
                            r.condition_number, r.residual});
  }
  return o;
}

Output cmd_derivsample(const RunConfig& c) {
  Output o;
  o.table.columns = {"experiment", "N", "seed", "relative_error", "condition_number", "residual", "M", "min_rayleigh"};
  std::optional<std::int64_t> fixed_n;
  if (!c.N.empty()) {
    const auto v = sorted_list(c.N, "--N", 1);
    if (v.size() != 1) invalid("--N: derivsample takes a single value");
    fixed_n = v.front();
  }
  for (auto M : sorted_list(c.M, "--M", c.even ? 0 : 1)) {
    const auto N = fixed_n.value_or(std::max<std::int64_t>(8, 4 * M));
    const auto r = derivative_recover(static_cast<int>(M), N, c.seed, c.even);
    o.table.rows.push_back({std::string(c.even ? "derivative_even" : "derivative_full"), N,
                            static_cast<std::int64_t>(c.seed), r.recovery.relative_error, r.recovery.condition_number,
                            r.recovery.residual, M, r.min_rayleigh});
  }
  return o;
}

Output cmd_density(const RunConfig& c) {
  std::optional<Xi> xi;
  const auto gamma = frequency_set(c, xi);
  Output o;
  o.table.columns = {"set", "xi", "density"};
  o.table.rows.push_back(
      {c.set, xi ? Cell(xi->to_string()) : Cell(std::monostate{}), upper_beurling_density(gamma)});
  return o;
}

Output dispatch(const RunConfig& c) {
  if (c.command == "classify") return cmd_classify(c);
  if (c.command == "bounds") return cmd_bounds(c);
  if (c.command == "expsys") return cmd_expsys(c);
  if (c.command == "spectrum") return cmd_spectrum(c);
  if (c.command == "witness") return cmd_witness(c);
  if (c.command == "dynsample") return cmd_dynsample(c);
  if (c.command == "derivsample") return cmd_derivsample(c);
  if (c.command == "density") return cmd_density(c);
  invalid("unknown command '" + c.command + "'");
}

void add_common(CLI::App* sub, RunConfig& c) {
  sub->add_option("--out", c.out, "Write output to this file instead of stdout");
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
}

void add_window(CLI::App* sub, RunConfig& c) {
  sub->add_option("--window", c.window, "Window: sawtooth, sign, or a JSON window object");
  sub->add_option("--xi", c.xi, "Modulation frequency as a float or an exact p/q");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Classify and probe the split windowed-exponential system F(g)", "framescope"};
  app.require_subcommand(1);

  auto* classify_cmd = app.add_subcommand("classify", "Symbolic verdict for F(g)");
  add_window(classify_cmd, c);

  auto* bounds_cmd = app.add_subcommand("bounds", "Frame-bound sweep of F(g) over subspace degrees");
  add_window(bounds_cmd, c);
  bounds_cmd->add_option("--M", c.M, "Comma-separated subspace degrees");
  bounds_cmd->add_option("--truncation", c.truncation, "Negative frequencies kept before the tail bound");

  auto* expsys_cmd = app.add_subcommand("expsys", "Frame-bound sweep of an exponential system E(Γ)");
  expsys_cmd->add_option("--xi", c.xi, "Build Γ_ξ for this ξ");
  expsys_cmd->add_option("--set", c.set, "gamma, integers, nonnegative or negative");
  expsys_cmd->add_option("--M", c.M, "Comma-separated subspace degrees");
  expsys_cmd->add_option("--cutoff", c.cutoff, "Elements enumerated per ray");

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Finite-section spectral summary or matrix dump");
  add_window(spectrum_cmd, c);
  spectrum_cmd->add_option("--N", c.N, "Comma-separated section sizes");
  spectrum_cmd->add_option("--kind", c.kind, "toeplitz, hankel or analysis");
  spectrum_cmd->add_flag("--dump", c.dump, "Dump matrix entries instead of the summary");

  auto* witness_cmd = app.add_subcommand("witness", "Inner products of the witness F_t");
  witness_cmd->add_option("--t", c.t, "Witness parameter t > 1/4");
  witness_cmd->add_option("--n-lo", c.n_lo, "First index");
  witness_cmd->add_option("--n-hi", c.n_hi, "Last index");

  auto* dyn_cmd = app.add_subcommand("dynsample", "Dynamical-sampling recovery sweep");
  add_window(dyn_cmd, c);
  dyn_cmd->add_option("--N", c.N, "Comma-separated truncations");
  dyn_cmd->add_option("--seed", c.seed, "Seed for the random signal and noise");
  dyn_cmd->add_option("--noise", c.noise, "Standard deviation of additive sample noise");

  auto* deriv_cmd = app.add_subcommand("derivsample", "Derivative-sampling Rayleigh and recovery sweep");
  deriv_cmd->add_option("--M", c.M, "Comma-separated polynomial degrees");
  deriv_cmd->add_option("--N", c.N, "Sample range |n| <= N (default max(8, 4M))");
  deriv_cmd->add_option("--seed", c.seed, "Seed for the random polynomial");
  deriv_cmd->add_flag("--even", c.even, "Restrict to even real polynomials");

  auto* density_cmd = app.add_subcommand("density", "Upper Beurling density of a frequency set");
  density_cmd->add_option("--xi", c.xi, "Build Γ_ξ for this ξ");
  density_cmd->add_option("--set", c.set, "gamma, integers, nonnegative or negative");

  for (auto* sub : app.get_subcommands({})) add_common(sub, c);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }
  c.command = app.get_subcommands().front()->get_name();
  if (c.format.empty()) c.format = c.command == "classify" ? "json" : "csv";
  // Sweep defaults differ per command.
  if (c.command == "derivsample" && deriv_cmd->count("--M") == 0) c.M = "8";

  try {
    const auto result = dispatch(c);
    std::ostringstream buffer;
    if (c.format == "json") {
      const auto j = result.json_override ? *result.json_override : result.table.to_json();
      buffer << j.dump(2) << '\n';
    } else {
      result.table.write_csv(buffer);
    }
    if (c.out.empty()) {
      out << buffer.str();
    } else {
      std::ofstream file(c.out, std::ios::binary);
      if (!file) invalid("--out: cannot open '" + c.out + "' for writing");
      file << buffer.str();
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.is_numerical() ? kExitNumerical : kExitValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
}

}  // namespace framescope::cli
