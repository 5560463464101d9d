// Copyright 2026 The votepriv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Command-line front end: exact delta sweeps over n, inverse-sqrt fits,
// randomized invariant suites, and the truncated geometric mechanism.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "votepriv/closed_form.hpp"
#include "votepriv/delta.hpp"
#include "votepriv/fit.hpp"
#include "votepriv/geometric.hpp"
#include "votepriv/suites.hpp"
#include "votepriv/threading.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace votepriv;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceGuard = 3;

struct DeltaOptions {
  std::string rule;
  std::string observable = "winner";
  int m = 3;
  std::string alpha;
  std::string dist = "uniform";
  std::string n_range;
  std::string eps_ratio = "1";
  std::string engine = "exact";
  std::string out = "csv";
  int jobs = 0;
};

int jobs_or_default(int jobs) {
  if (jobs > 0) return jobs;
  if (const char* env = std::getenv("VOTEPRIV_JOBS")) {
    const int parsed = std::atoi(env);
    if (parsed > 0) return parsed;
  }
  return default_jobs();
}

std::pair<int, int> parse_n_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int n = std::stoi(text);
    return {n, n};
  }
  const int lo = std::stoi(text.substr(0, dots));
  const int hi = std::stoi(text.substr(dots + 2));
  if (lo < 1 || hi < lo) {
    throw std::invalid_argument("bad --n range: " + text);
  }
  return {lo, hi};
}

std::vector<Rational> parse_dist_list(const std::string& text) {
  std::vector<Rational> probs;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    probs.push_back(parse_rational(text.substr(pos, comma - pos)));
    pos = comma + 1;
    if (comma == text.size()) break;
  }
  return probs;
}

// CSV fields must stay comma-free; rule names may carry custom scoring
// vectors.
std::string csv_safe(std::string text) {
  std::replace(text.begin(), text.end(), ',', '|');
  return text;
}

struct SweepConfig {
  std::string rule_label;
  std::string observable;
  int c = 0;
  VoteDistribution pi{std::vector<Rational>{Rational(1), Rational(0)}};
  std::optional<GsrRule> rule;
  std::optional<Rational> alpha;

  std::unique_ptr<Mechanism> make_mechanism(int n) const {
    if (observable == "histogram") {
      return std::make_unique<HistogramIdentityMechanism>(n, c);
    }
    if (alpha.has_value()) {
      return std::make_unique<AlphaMajorityMechanism>(n, *alpha);
    }
    if (observable == "winner") {
      return std::make_unique<GsrWinnerMechanism>(n, *rule);
    }
    return std::make_unique<GsrScoreMechanism>(n, *rule);
  }
};

SweepConfig build_sweep_config(const DeltaOptions& opt) {
  SweepConfig config;
  config.observable = opt.observable;
  if (opt.observable != "winner" && opt.observable != "score" &&
      opt.observable != "histogram") {
    throw std::invalid_argument("unknown --observable: " + opt.observable);
  }

  const bool majority = opt.rule == "majority";
  if (majority) {
    if (opt.alpha.empty()) {
      throw std::invalid_argument("--rule majority requires --alpha");
    }
    if (opt.observable != "winner") {
      throw std::invalid_argument("majority supports only the winner observable");
    }
    config.alpha = parse_rational(opt.alpha);
    config.c = 2;
    config.rule_label = "majority:" + to_fraction_string(*config.alpha);
  } else if (opt.observable == "histogram") {
    config.rule_label = opt.rule.empty() ? "histogram" : opt.rule;
    config.c = opt.dist == "uniform" ? num_orders(opt.m) : 0;
  } else {
    if (opt.rule.empty()) {
      throw std::invalid_argument("--rule is required for this observable");
    }
    config.rule = GsrRule::from_name(opt.rule, opt.m);
    config.c = config.rule->order_count();
    config.rule_label = opt.rule;
  }

  if (opt.dist == "uniform") {
    if (config.c <= 0) {
      throw std::invalid_argument("--dist uniform needs --m (or a rule) to fix c");
    }
    config.pi = VoteDistribution::uniform(config.c);
  } else {
    std::vector<Rational> probs = parse_dist_list(opt.dist);
    if (config.c > 0 && static_cast<int>(probs.size()) != config.c) {
      throw std::invalid_argument(
          "--dist has " + std::to_string(probs.size()) + " entries, expected " +
          std::to_string(config.c));
    }
    config.c = static_cast<int>(probs.size());
    config.pi = VoteDistribution(std::move(probs));
  }
  return config;
}

DeltaResult run_engine(const SweepConfig& config, const std::string& engine,
                       Mechanism& mech, const Rational& ratio) {
  if (engine == "exact") {
    return delta_exact(mech, config.pi, ratio);
  }
  if (engine == "oracle") {
    return delta_bruteforce_db(mech, config.pi, ratio);
  }
  if (engine == "trails") {
    // Trail evaluation per ordered pair; the overall delta is the pair max.
    DeltaResult best;
    best.delta = -1;
    for (int x = 0; x < config.c; ++x) {
      if (!config.pi.supported(x)) continue;
      for (int y = 0; y < config.c; ++y) {
        if (y == x || !config.pi.supported(y)) continue;
        DeltaResult pair = delta_via_trails(mech, config.pi, Direction{x, y});
        if (pair.delta > best.delta) best = std::move(pair);
      }
    }
    if (best.delta < 0) {
      throw std::invalid_argument(
          "delta: distribution has fewer than two supported values");
    }
    return best;
  }
  throw std::invalid_argument("unknown --engine: " + engine);
}

int cmd_delta(const DeltaOptions& opt) {
  const SweepConfig config = build_sweep_config(opt);
  const auto [n_lo, n_hi] = parse_n_range(opt.n_range);
  const Rational ratio = parse_rational(opt.eps_ratio);
  if (ratio < 1) {
    throw std::invalid_argument("--eps-ratio must be >= 1 (r = e^eps)");
  }
  if (opt.engine == "trails" && ratio != 1) {
    throw std::invalid_argument(
        "--engine trails evaluates the eps = 0 characterization; use "
        "--eps-ratio 1");
  }
  if (opt.out != "csv" && opt.out != "json") {
    throw std::invalid_argument("unknown --out: " + opt.out);
  }

  // Witness names have to be extracted inside the task while the mechanism
  // that interned them is still alive.
  struct Row {
    DeltaResult result;
    std::vector<std::string> witness_names;
  };
  const std::size_t count = static_cast<std::size_t>(n_hi - n_lo + 1);
  const int jobs = jobs_or_default(opt.jobs);
  ensure_factorials(n_hi);
  auto rows = parallel_map<Row>(count, jobs, [&](std::size_t idx) {
    const int n = n_lo + static_cast<int>(idx);
    const auto mech = config.make_mechanism(n);
    Row row{run_engine(config, opt.engine, *mech, ratio), {}};
    if (row.result.witness.size() <= 64) {
      for (int id : row.result.witness) {
        row.witness_names.push_back(mech->output_name(id));
      }
    }
    return row;
  });

  if (opt.out == "csv") {
    std::cout << "n,rule,observable,eps_ratio,delta_num,delta_den,delta_float,"
                 "x,xprime\n";
    for (std::size_t i = 0; i < count; ++i) {
      const DeltaResult& r = rows[i].result;
      std::cout << (n_lo + static_cast<int>(i)) << ','
                << csv_safe(config.rule_label) << ',' << opt.observable << ','
                << to_fraction_string(ratio) << ',' << r.delta.get_num() << ','
                << r.delta.get_den() << ',' << format_double(r.delta_float())
                << ',' << r.x + 1 << ',' << r.xprime + 1 << '\n';
    }
  } else {
    json out = json::array();
    for (std::size_t i = 0; i < count; ++i) {
      const DeltaResult& r = rows[i].result;
      json row;
      row["n"] = n_lo + static_cast<int>(i);
      row["rule"] = config.rule_label;
      row["observable"] = opt.observable;
      row["eps_ratio"] = to_fraction_string(ratio);
      row["delta"] = to_fraction_string(r.delta);
      row["delta_float"] = r.delta_float();
      row["x"] = r.x + 1;
      row["xprime"] = r.xprime + 1;
      row["witness_size"] = r.witness.size();
      if (!rows[i].witness_names.empty() || r.witness.empty()) {
        row["witness"] = rows[i].witness_names;
      }
      out.push_back(std::move(row));
    }
    std::cout << out.dump(2) << '\n';
  }
  return kExitOk;
}

struct FitOptions {
  std::vector<std::string> inputs;
  int n_min = 3;
  int n_max = 49;
  bool table = false;
};

struct FittedSeries {
  std::string rule;
  std::string observable;
  FitResult fit;
};

FittedSeries fit_one_csv(const std::string& path, int n_min, int n_max) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open --input file: " + path);
  }
  std::string line;
  if (!std::getline(in, line)) {
    throw std::invalid_argument("empty CSV input");
  }
  if (line.rfind("n,rule,observable,eps_ratio,delta_num,delta_den", 0) != 0) {
    throw std::invalid_argument("unrecognized CSV header: " + line);
  }
  std::vector<std::pair<int, double>> samples;
  FittedSeries series;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream row(line);
    std::string field;
    while (std::getline(row, field, ',')) fields.push_back(field);
    if (fields.size() < 9) {
      throw std::invalid_argument("malformed CSV row: " + line);
    }
    const int n = std::stoi(fields[0]);
    if (series.rule.empty()) {
      series.rule = fields[1];
      series.observable = fields[2];
    } else if (series.rule != fields[1] || series.observable != fields[2]) {
      throw std::invalid_argument(
          "fit input mixes different rules/observables; fit one series per "
          "file");
    }
    if (n < n_min || n > n_max) continue;
    const Rational delta = make_rational(BigInt(fields[4]), BigInt(fields[5]));
    samples.emplace_back(n, to_double(delta));
  }
  series.fit = fit_inverse_sqrt(samples);
  return series;
}

int cmd_fit(const FitOptions& opt) {
  std::vector<FittedSeries> all;
  for (const std::string& path : opt.inputs) {
    all.push_back(fit_one_csv(path, opt.n_min, opt.n_max));
  }

  if (opt.table) {
    // Rule-by-observable grid of rendered curves.
    std::vector<std::string> rules, observables;
    for (const FittedSeries& s : all) {
      if (std::find(rules.begin(), rules.end(), s.rule) == rules.end()) {
        rules.push_back(s.rule);
      }
      if (std::find(observables.begin(), observables.end(), s.observable) ==
          observables.end()) {
        observables.push_back(s.observable);
      }
    }
    auto cell = [&](const std::string& rule, const std::string& observable) {
      for (const FittedSeries& s : all) {
        if (s.rule == rule && s.observable == observable) {
          char buf[96];
          std::snprintf(buf, sizeof(buf), "1/sqrt(%.4g*n + %.4g)", s.fit.a,
                        s.fit.b);
          return std::string(buf);
        }
      }
      return std::string("-");
    };
    std::size_t width = 12;
    for (const std::string& r : rules) width = std::max(width, r.size() + 2);
    std::cout << std::string(width, ' ');
    for (const std::string& o : observables) {
      std::cout << "| " << o << std::string(o.size() < 24 ? 24 - o.size() : 1, ' ');
    }
    std::cout << '\n';
    for (const std::string& r : rules) {
      std::cout << r << std::string(width - r.size(), ' ');
      for (const std::string& o : observables) {
        const std::string c = cell(r, o);
        std::cout << "| " << c << std::string(c.size() < 24 ? 24 - c.size() : 1, ' ');
      }
      std::cout << '\n';
    }
    return kExitOk;
  }

  json out = json::array();
  for (const FittedSeries& s : all) {
    json row;
    row["rule"] = s.rule;
    row["observable"] = s.observable;
    row["a"] = s.fit.a;
    row["b"] = s.fit.b;
    row["mse"] = s.fit.mse;
    row["mse_inverse_square"] = s.fit.mse_inverse_square;
    row["n_min"] = s.fit.n_min;
    row["n_max"] = s.fit.n_max;
    row["definition"] = "conditional-pair";
    row["curve"] = s.fit.render();
    out.push_back(std::move(row));
  }
  std::cout << (all.size() == 1 ? out.front().dump(2) : out.dump(2)) << '\n';
  return kExitOk;
}

struct CheckOptions {
  std::string suite;
  std::uint64_t seed = 42;
  int cases = 0;
  int n_max = 0;
};

int cmd_check(const CheckOptions& opt) {
  SuiteOptions options;
  options.seed = opt.seed;
  options.cases = opt.cases;
  options.n_max = opt.n_max;
  const SuiteReport report = run_suite(opt.suite, options);
  std::cout << report.summary() << '\n';
  for (const std::string& failure : report.failures) {
    std::cout << "  " << failure << '\n';
  }
  return report.pass() ? kExitOk : kExitCheckFailure;
}

struct GeomOptions {
  std::string alpha;
  int n = 5;
  std::string gamma = "1/10";
  bool print_matrix = false;
};

int cmd_geom(const GeomOptions& opt) {
  const Rational alpha = parse_rational(opt.alpha);
  const Rational gamma = parse_rational(opt.gamma);
  const auto mx = truncated_geometric(alpha, opt.n);
  const Rational ratio = exact_dp_ratio(mx);
  const Rational u = utility(mx, gamma);
  if (opt.print_matrix) std::cout << mx.to_string();
  std::cout << "ratio " << to_fraction_string(ratio) << " (eps = ln ratio = "
            << format_double(std::log(to_double(ratio))) << ")\n";
  std::cout << "utility " << to_fraction_string(u) << " ("
            << format_double(to_double(u)) << ") at gamma "
            << to_fraction_string(gamma) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact distributional differential privacy of voting mechanisms"};
  app.require_subcommand(1);

  DeltaOptions delta_opt;
  CLI::App* delta_cmd = app.add_subcommand(
      "delta", "Exact delta sweep over database sizes");
  delta_cmd->add_option("--rule", delta_opt.rule,
                        "plurality|kapproval:k|veto|borda|stv|maximin|copeland|"
                        "majority|custom \"s1,s2,...,sm\"");
  delta_cmd->add_option("--observable", delta_opt.observable,
                        "winner|score|histogram");
  delta_cmd->add_option("--m", delta_opt.m, "number of candidates");
  delta_cmd->add_option("--alpha", delta_opt.alpha,
                        "majority threshold (rational)");
  delta_cmd->add_option("--dist", delta_opt.dist,
                        "uniform or comma-joined rationals");
  delta_cmd->add_option("--n", delta_opt.n_range, "database sizes, e.g. 3..49")
      ->required();
  delta_cmd->add_option("--eps-ratio", delta_opt.eps_ratio,
                        "r = e^eps as an exact rational, default 1");
  delta_cmd->add_option("--engine", delta_opt.engine, "exact|trails|oracle");
  delta_cmd->add_option("--out", delta_opt.out, "csv|json");
  delta_cmd->add_option("--jobs", delta_opt.jobs,
                        "parallel tasks over n (default: VOTEPRIV_JOBS or "
                        "hardware)");

  FitOptions fit_opt;
  CLI::App* fit_cmd = app.add_subcommand(
      "fit", "Fit delta(n) = 1/sqrt(a n + b) to delta CSVs");
  fit_cmd
      ->add_option("--input", fit_opt.inputs,
                   "CSV produced by delta (repeatable, one series per file)")
      ->required();
  fit_cmd->add_option("--n-min", fit_opt.n_min, "smallest n kept (default 3)");
  fit_cmd->add_option("--n-max", fit_opt.n_max, "largest n kept (default 49)");
  fit_cmd->add_flag("--table", fit_opt.table,
                    "render a rule-by-observable text table of fitted curves");

  CheckOptions check_opt;
  CLI::App* check_cmd = app.add_subcommand(
      "check", "Run a randomized invariant suite");
  check_cmd
      ->add_option("suite", check_opt.suite,
                   "trails|oracle|postprocess|lemma1|geom|bounds")
      ->required();
  check_cmd->add_option("--seed", check_opt.seed, "RNG seed (default 42)");
  check_cmd->add_option("--cases", check_opt.cases, "case count override");
  check_cmd->add_option("--n-max", check_opt.n_max,
                        "size override for the oracle suite");

  GeomOptions geom_opt;
  CLI::App* geom_cmd = app.add_subcommand(
      "geom", "Truncated geometric mechanism: exact ratio and utility");
  geom_cmd->add_option("--alpha", geom_opt.alpha, "noise parameter in (0,1)")
      ->required();
  geom_cmd->add_option("--n", geom_opt.n, "count query range 0..n");
  geom_cmd->add_option("--gamma", geom_opt.gamma,
                       "loss slope (default 1/10)");
  geom_cmd->add_flag("--print-matrix", geom_opt.print_matrix,
                     "dump the exact transition matrix");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (delta_cmd->parsed()) return cmd_delta(delta_opt);
    if (fit_cmd->parsed()) return cmd_fit(fit_opt);
    if (check_cmd->parsed()) return cmd_check(check_opt);
    if (geom_cmd->parsed()) return cmd_geom(geom_opt);
  } catch (const resource_guard_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitResourceGuard;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
