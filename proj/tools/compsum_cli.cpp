// Copyright 2026 The compsum Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// compsum command-line harness.
//
// Exit codes: 0 ok, 1 a bound or property was violated, 2 invalid
// configuration or inapplicable bound, 3 I/O failure.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "compsum/bounds.hpp"
#include "compsum/experiment.hpp"
#include "compsum/numberline.hpp"
#include "compsum/pedagogy.hpp"
#include "compsum/theorems.hpp"
#include "compsum/threebody.hpp"

namespace {

using namespace compsum;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitIo = 3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// "1048576" or "2^20".
std::uint64_t parse_count(const std::string& s) {
  try {
    std::size_t used = 0;
    if (s.rfind("2^", 0) == 0) {
      const int k = std::stoi(s.substr(2), &used);
      if (used != s.size() - 2 || k < 0 || k > 62) throw ConfigError("");
      return std::uint64_t{1} << k;
    }
    const auto v = std::stoull(s, &used);
    if (used != s.size()) throw ConfigError("");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("invalid count '" + s + "' (expected an integer or 2^k)");
  }
}

std::vector<std::uint64_t> parse_counts(const std::string& s) {
  std::vector<std::uint64_t> out;
  for (const auto& item : split(s, ',')) out.push_back(parse_count(item));
  if (out.empty()) throw ConfigError("--n needs at least one value");
  return out;
}

// "0.00048828125" or "2^-11".
double parse_real(const std::string& s) {
  try {
    std::size_t used = 0;
    if (s.rfind("2^", 0) == 0) {
      const int k = std::stoi(s.substr(2), &used);
      if (used != s.size() - 2) throw ConfigError("");
      return std::ldexp(1.0, k);
    }
    const double v = std::stod(s, &used);
    if (used != s.size()) throw ConfigError("");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("invalid number '" + s + "' (expected a decimal or 2^k)");
  }
}

std::vector<Algorithm> parse_algorithms(const std::string& s) {
  std::vector<Algorithm> out;
  try {
    for (const auto& item : split(s, ',')) {
      if (item == "all") {
        out.insert(out.end(), kAllAlgorithms.begin(), kAllAlgorithms.end());
      } else {
        out.push_back(parse_algorithm(item));
      }
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (out.empty()) throw ConfigError("--algo needs at least one algorithm");
  return out;
}

char separator(const std::string& format) {
  if (format == "csv") return ',';
  if (format == "tsv") return '\t';
  throw ConfigError("unknown format '" + format + "' (expected csv or tsv)");
}

// Writes to <out>/<name> when an output directory is given, else to stdout.
class Sink {
 public:
  Sink(const std::string& out_dir, const std::string& name) {
    if (out_dir.empty()) return;
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create directory '" + out_dir + "': " + ec.message());
    path_ = (std::filesystem::path(out_dir) / name).string();
    file_.open(path_);
    if (!file_) throw IoError("cannot open '" + path_ + "' for writing");
  }

  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

  void close() {
    if (!file_.is_open()) return;
    file_.close();
    if (!file_) throw IoError("failed writing '" + path_ + "'");
  }

 private:
  std::string path_;
  std::ofstream file_;
};

void write_file(const std::string& out_dir, const std::string& name, const std::string& text) {
  Sink sink(out_dir, name);
  sink.stream() << text;
  sink.close();
}

struct CommonOptions {
  std::string precision = "f64";
  std::string n = "2^20";
  std::uint64_t seed = 1;
  std::uint64_t seeds = 1;
  std::string algo = "all";
  std::string out;
  std::string format = "csv";
};

void add_common(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--precision", o.precision, "f32 or f64")->capture_default_str();
  cmd->add_option("--n", o.n, "addend count(s): integer or 2^k, comma-separated")
      ->capture_default_str();
  cmd->add_option("--seed", o.seed, "first RNG seed")->capture_default_str();
  cmd->add_option("--seeds", o.seeds, "number of consecutive seeds to run")->capture_default_str();
  cmd->add_option("--algo", o.algo, "plain,kahan,6op,double6op,triple6op or all")
      ->capture_default_str();
  cmd->add_option("--out", o.out, "output directory (default: stdout)");
  cmd->add_option("--format", o.format, "csv or tsv")->capture_default_str();
}

Precision precision_of(const std::string& s) {
  try {
    return parse_precision(s);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

int cmd_accumulate(const CommonOptions& o) {
  const Precision p = precision_of(o.precision);
  const auto counts = parse_counts(o.n);
  const auto algos = parse_algorithms(o.algo);
  const char sep = separator(o.format);
  if (o.seeds == 0) throw ConfigError("--seeds must be >= 1");

  std::vector<ExperimentRecord> records;
  for (std::uint64_t k = 0; k < o.seeds; ++k) {
    for (const auto n : counts) {
      auto batch = run_accumulation(make_stream_spec(p, n, o.seed + k), algos);
      records.insert(records.end(), batch.begin(), batch.end());
    }
  }
  Sink sink(o.out, o.format == "csv" ? "accumulate.csv" : "accumulate.tsv");
  write_records(sink.stream(), records, sep);
  sink.close();
  bool violated = false;
  for (const auto& r : records) violated = violated || r.violated;
  return violated ? kExitViolation : kExitOk;
}

struct FaultOptions {
  bool inject = false;
  std::optional<std::uint64_t> step;
  std::optional<int> bit;
};

int cmd_validate(const CommonOptions& o, const FaultOptions& f) {
  const Precision p = precision_of(o.precision);
  const auto counts = parse_counts(o.n);
  const auto algos = parse_algorithms(o.algo);
  const char sep = separator(o.format);
  if (o.seeds == 0) throw ConfigError("--seeds must be >= 1");

  // A bound that does not exist cannot validate anything: refuse up front.
  for (const auto n : counts) {
    for (const auto a : algos) {
      try {
        require_bound_applicable(a, p, n);
      } catch (const BoundInapplicable& e) {
        std::cerr << "compsum validate: " << to_string(a) << " at " << to_string(p)
                  << " with n=" << n << ": " << e.what() << '\n';
        return kExitInvalid;
      }
    }
  }

  std::vector<ExperimentRecord> records;
  for (std::uint64_t k = 0; k < o.seeds; ++k) {
    for (const auto n : counts) {
      std::optional<FaultInjection> fault;
      if (f.inject || f.step || f.bit) {
        fault = FaultInjection{f.step.value_or(n / 2 == 0 ? 1 : n / 2),
                               f.bit.value_or(default_fault_bit(p))};
      }
      auto batch = run_accumulation(make_stream_spec(p, n, o.seed + k), algos, fault);
      records.insert(records.end(), batch.begin(), batch.end());
    }
  }

  Sink sink(o.out, o.format == "csv" ? "validate.csv" : "validate.tsv");
  write_records(sink.stream(), records, sep);
  sink.close();

  std::size_t violations = 0;
  for (const auto& r : records) {
    if (!r.violated) continue;
    ++violations;
    std::cerr << "VIOLATION " << to_string(r.algorithm) << " error bound: "
              << format_record(r, ',') << '\n';
  }
  std::cerr << "compsum validate: " << records.size() << " runs, " << violations
            << " violation(s)\n";
  return violations ? kExitViolation : kExitOk;
}

int cmd_pedagogy(int t, const std::string& out) {
  if (t < 2 || t > 30) throw ConfigError("--t must be in [2, 30]");
  write_file(out, "pedagogy.txt", render_all(pedagogy_traces(t), t));
  return kExitOk;
}

struct ThreeBodyOptions {
  std::string precision = "f32";
  std::string h = "2^-11";
  double periods = 10;
  int segments = 1;
  std::string compensation = "plain";
  std::uint64_t sample_stride = 1024;
  bool no_reference = false;
  std::string out;
  std::string format = "csv";
};

int cmd_threebody(const ThreeBodyOptions& o) {
  SimSpec spec;
  spec.precision = precision_of(o.precision);
  spec.h = parse_real(o.h);
  if (!(spec.h > 0)) throw ConfigError("--h must be positive");
  if (!(o.periods > 0)) throw ConfigError("--periods must be positive");
  if (o.segments < 0) throw ConfigError("--segments must be >= 0");
  spec.periods = o.periods;
  spec.segments = o.out.empty() ? 0 : o.segments;
  const auto algos = parse_algorithms(o.compensation);
  if (algos.size() != 1) throw ConfigError("--compensation takes exactly one algorithm");
  spec.compensation = algos.front();
  spec.sample_stride = o.sample_stride;
  spec.track_reference = !o.no_reference;
  const char sep = separator(o.format);

  SimResult result;
  try {
    result = simulate_threebody(spec);
  } catch (const SimulationError& e) {
    std::cerr << "compsum threebody: numerical breakdown: " << e.what() << '\n';
    return kExitViolation;
  }

  Sink sink(o.out, o.format == "csv" ? "trajectory.csv" : "trajectory.tsv");
  write_trajectory(sink.stream(), result.samples, sep);
  sink.close();
  for (std::size_t s = 0; s < result.segment_paths.size(); ++s) {
    const std::string title = std::string(to_string(spec.compensation)) + " " +
                              std::string(to_string(spec.precision)) + ", segment " +
                              std::to_string(s + 1) + " of " +
                              std::to_string(result.segment_paths.size());
    write_file(o.out, "orbit_segment_" + std::to_string(s + 1) + ".svg",
               orbit_svg(result.segment_paths[s], title));
  }
  std::cerr << "compsum threebody: " << result.steps << " steps";
  if (spec.track_reference) {
    std::cerr << ", max deviation from f64 double6op reference " << result.max_deviation;
  }
  std::cerr << '\n';
  return kExitOk;
}

struct NumberLineOptions {
  int beta = 2;
  int t = 3;
  std::int64_t emin = -3;
  std::int64_t emax = 0;
  std::string view = "all";
  std::string out;
  std::string format = "csv";
};

int cmd_numberline(const NumberLineOptions& o) {
  std::optional<dekker::SystemParams> p;
  NumberLineView view{};
  try {
    p.emplace(o.beta, o.t, o.emin, o.emax);
    view = parse_numberline_view(o.view);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  std::vector<NumberLineRow> rows;
  try {
    rows = number_line(*p, view);
  } catch (const std::length_error& e) {
    throw ConfigError(e.what());
  }
  Sink sink(o.out, "numberline_" + std::string(to_string(view)) +
                       (o.format == "csv" ? ".csv" : ".tsv"));
  write_number_line(sink.stream(), rows, view, separator(o.format));
  sink.close();
  return kExitOk;
}

struct TheoremOptions {
  TheoremGrid grid;
  bool per_system = false;
  bool tie_half_up = false;
  std::string out;
};

int cmd_check_theorems(const TheoremOptions& o) {
  const auto tie = o.tie_half_up ? dekker::TieBreak::half_up : dekker::TieBreak::to_even;
  TheoremReport report;
  try {
    if (o.grid.t_min > o.grid.t_max || o.grid.emin_min > o.grid.emin_max ||
        o.grid.emax_min > o.grid.emax_max) {
      throw ConfigError("empty parameter grid");
    }
    report = check_grid(o.grid, tie);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  } catch (const std::length_error& e) {
    throw ConfigError(e.what());
  }
  std::ostringstream text;
  print_report(text, report, o.per_system);
  text << (report.all_passed() ? "all checks passed" : "checks FAILED") << '\n';
  write_file(o.out, "theorems.txt", text.str());
  return report.all_passed() ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"compsum: compensated summation experiments"};
  app.require_subcommand(1);

  CommonOptions acc_opts;
  auto* accumulate = app.add_subcommand("accumulate", "random accumulation against error bounds");
  add_common(accumulate, acc_opts);

  CommonOptions val_opts;
  FaultOptions fault;
  auto* validate =
      app.add_subcommand("validate", "like accumulate; exit 1 on any bound violation");
  add_common(validate, val_opts);
  // Test hooks: flip one bit of the running sum mid-run.
  validate->add_flag("--inject-fault", fault.inject)->group("");
  validate->add_option("--fault-step", fault.step)->group("");
  validate->add_option("--fault-bit", fault.bit)->group("");

  int ped_t = 3;
  std::string ped_out;
  auto* pedagogy = app.add_subcommand("pedagogy", "step-by-step traces on a 3-digit binary system");
  pedagogy->add_option("--t", ped_t, "mantissa digits")->capture_default_str();
  pedagogy->add_option("--out", ped_out, "output directory (default: stdout)");

  ThreeBodyOptions tb;
  auto* threebody = app.add_subcommand("threebody", "figure-eight three-body orbit");
  threebody->set_help_flag("--help", "print this help");  // -h would clash with --h
  threebody->add_option("--precision", tb.precision, "f32 or f64")->capture_default_str();
  threebody->add_option("--h", tb.h, "step size (decimal or 2^k)")->capture_default_str();
  threebody->add_option("--periods", tb.periods)->capture_default_str();
  threebody->add_option("--segments", tb.segments, "orbit plots, one per segment")
      ->capture_default_str();
  threebody->add_option("--compensation", tb.compensation, "summation algorithm")
      ->capture_default_str();
  threebody->add_option("--sample-stride", tb.sample_stride, "steps between CSV samples (0: none)")
      ->capture_default_str();
  threebody->add_flag("--no-reference", tb.no_reference, "skip the f64 reference run");
  threebody->add_option("--out", tb.out, "output directory (default: CSV to stdout, no plots)");
  threebody->add_option("--format", tb.format, "csv or tsv")->capture_default_str();

  NumberLineOptions nl;
  auto* numberline = app.add_subcommand("numberline", "numbers and bins of a small system");
  numberline->add_option("--beta", nl.beta)->capture_default_str();
  numberline->add_option("--t", nl.t)->capture_default_str();
  numberline->add_option("--emin", nl.emin)->capture_default_str();
  numberline->add_option("--emax", nl.emax)->capture_default_str();
  numberline->add_option("--view", nl.view, "all, dekker_bins or ieee_bins")->capture_default_str();
  numberline->add_option("--out", nl.out, "output directory (default: stdout)");
  numberline->add_option("--format", nl.format, "csv or tsv")->capture_default_str();

  TheoremOptions th;
  auto* theorems =
      app.add_subcommand("check-theorems", "exhaustive rounding and EFT checks on small systems");
  theorems->add_option("--beta", th.grid.beta)->capture_default_str();
  theorems->add_option("--t-min", th.grid.t_min)->capture_default_str();
  theorems->add_option("--t-max", th.grid.t_max)->capture_default_str();
  theorems->add_option("--emin-min", th.grid.emin_min)->capture_default_str();
  theorems->add_option("--emin-max", th.grid.emin_max)->capture_default_str();
  theorems->add_option("--emax-min", th.grid.emax_min)->capture_default_str();
  theorems->add_option("--emax-max", th.grid.emax_max)->capture_default_str();
  theorems->add_flag("--per-system", th.per_system, "one line per check and system");
  theorems->add_option("--out", th.out, "output directory (default: stdout)");
  // Mutation hook: round ties upward, which the checks must catch.
  theorems->add_flag("--tie-half-up", th.tie_half_up)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (*accumulate) return cmd_accumulate(acc_opts);
    if (*validate) return cmd_validate(val_opts, fault);
    if (*pedagogy) return cmd_pedagogy(ped_t, ped_out);
    if (*threebody) return cmd_threebody(tb);
    if (*numberline) return cmd_numberline(nl);
    if (*theorems) return cmd_check_theorems(th);
  } catch (const ConfigError& e) {
    std::cerr << "compsum: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const BoundInapplicable& e) {
    std::cerr << "compsum: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const IoError& e) {
    std::cerr << "compsum: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "compsum: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}
