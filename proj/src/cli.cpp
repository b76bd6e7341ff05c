#include "seedstop/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "seedstop/correlation.hpp"
#include "seedstop/early_stopping.hpp"
#include "seedstop/errors.hpp"
#include "seedstop/expected_performance.hpp"
#include "seedstop/jsonl.hpp"
#include "seedstop/parallel.hpp"
#include "seedstop/rng.hpp"
#include "seedstop/seed_analysis.hpp"
#include "seedstop/synthgen.hpp"
#include "seedstop/trial_model.hpp"

namespace seedstop::cli {

namespace {

using json = nlohmann::ordered_json;

// Numbers are rounded to 6 significant digits by default so tables diff
// cleanly; --full-precision switches to exact round-trip form.
struct Fmt {
  bool full = false;

  std::string num(double v) const {
    if (full) {
      char buf[64];
      const auto res = std::to_chars(buf, buf + sizeof buf, v);
      return std::string(buf, res.ptr);
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
  }

  json jnum(double v) const {
    if (full) return v;
    return std::strtod(num(v).c_str(), nullptr);
  }
};

struct CommonOpts {
  std::string in_path;
  std::string field_map_path;
  std::string out_path;
  Fmt fmt;
};

TrialPool load_pool(const CommonOpts& opts) {
  FieldMap fields;
  if (!opts.field_map_path.empty()) {
    fields = load_field_map(opts.field_map_path);
  }
  return load_pool_file(opts.in_path, fields);
}

// Buffered output: written atomically (temp file + rename) when --out is
// given, streamed otherwise.
void deliver(const std::string& text, const std::string& out_path,
             std::ostream& fallback) {
  if (out_path.empty()) {
    fallback << text;
    fallback.flush();
    return;
  }
  const std::string tmp = out_path + ".tmp";
  {
    std::ofstream o(tmp, std::ios::binary);
    if (!o) raise(Errc::io_error, "cannot open '" + tmp + "' for writing");
    o << text;
    o.flush();
    if (!o) raise(Errc::io_error, "failed while writing '" + tmp + "'");
  }
  if (std::rename(tmp.c_str(), out_path.c_str()) != 0) {
    std::remove(tmp.c_str());
    raise(Errc::io_error, "cannot move '" + tmp + "' to '" + out_path + "'");
  }
}

std::int64_t resolve_seed(const std::optional<std::int64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("SEEDSTOP_SEED")) {
    std::int64_t v = 0;
    const auto res = std::from_chars(env, env + std::string_view(env).size(), v);
    if (res.ec == std::errc() && *res.ptr == '\0') return v;
    raise(Errc::invalid_argument,
          std::string("SEEDSTOP_SEED is not an integer: '") + env + "'");
  }
  return kDefaultMasterSeed;
}

void apply_thread_settings(const std::optional<int>& flag) {
  if (const char* env = std::getenv("SEEDSTOP_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) set_threads(v);
  }
  if (flag && *flag >= 1) set_threads(*flag);
}

SeedAxis parse_axis(const std::string& name) {
  if (name == "wi") return SeedAxis::weight_init;
  if (name == "do") return SeedAxis::data_order;
  raise(Errc::invalid_argument, "axis must be 'wi' or 'do', got '" + name + "'");
}

// "1,5,10" or "2-6" or both mixed, ascending not required.
std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::istringstream items(text);
  std::string item;
  while (std::getline(items, item, ',')) {
    if (item.empty()) continue;
    const std::size_t dash = item.find('-', 1);
    try {
      if (dash != std::string::npos) {
        const int lo = std::stoi(item.substr(0, dash));
        const int hi = std::stoi(item.substr(dash + 1));
        if (hi < lo) raise(Errc::invalid_argument, "bad range '" + item + "'");
        for (int v = lo; v <= hi; ++v) out.push_back(v);
      } else {
        out.push_back(std::stoi(item));
      }
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      raise(Errc::invalid_argument, "bad integer list entry '" + item + "'");
    }
  }
  if (out.empty()) raise(Errc::invalid_argument, "empty integer list");
  return out;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::istringstream items(text);
  std::string item;
  while (std::getline(items, item, ',')) {
    if (item.empty()) continue;
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      raise(Errc::invalid_argument, "bad number list entry '" + item + "'");
    }
  }
  if (out.empty()) raise(Errc::invalid_argument, "empty number list");
  return out;
}

// ---- subcommand bodies -------------------------------------------------

void cmd_validate(const CommonOpts& opts, std::ostream& out) {
  const TrialPool pool = load_pool(opts);
  std::set<std::int64_t> wi, dorder;
  for (const TrialRecord& t : pool.trials) {
    wi.insert(t.wi_seed);
    dorder.insert(t.do_seed);
  }
  json report;
  report["task"] = pool.task_id;
  report["metric"] = metric_name(pool.metric_kind);
  report["trials"] = pool.trials.size();
  report["wi_seeds"] = wi.size();
  report["do_seeds"] = dorder.size();
  report["fully_crossed"] = pool.trials.size() == wi.size() * dorder.size();
  json fracs = json::array();
  for (double f : common_fractions(pool)) fracs.push_back(opts.fmt.jnum(f));
  report["common_fractions"] = std::move(fracs);
  json dropped = json::array();
  for (double f : partial_fractions(pool)) dropped.push_back(opts.fmt.jnum(f));
  report["dropped_fractions"] = std::move(dropped);
  deliver(report.dump() + "\n", opts.out_path, out);
}

void cmd_expected(const CommonOpts& opts, int x_max, const std::string& band,
                  std::ostream& out) {
  const TrialPool pool = load_pool(opts);
  const ExpectedMaxCurve curve =
      expected_max_curve(pool.final_values(), x_max);

  std::ostringstream os;
  os << "x,mean,std,min,max";
  if (band != "none") os << ",band_lo,band_hi";
  os << "\n";
  for (const ExpectedMaxPoint& p : curve.points) {
    os << p.x << ',' << opts.fmt.num(p.mean) << ',' << opts.fmt.num(p.std)
       << ',' << opts.fmt.num(p.min) << ',' << opts.fmt.num(p.max);
    if (band == "std") {
      os << ',' << opts.fmt.num(p.mean - p.std) << ','
         << opts.fmt.num(p.mean + p.std);
    } else if (band == "minmax") {
      os << ',' << opts.fmt.num(p.min) << ',' << opts.fmt.num(p.max);
    }
    os << "\n";
  }
  deliver(os.str(), opts.out_path, out);
}

void cmd_seeds(const CommonOpts& opts, const std::string& format,
               std::ostream& out) {
  const TrialPool pool = load_pool(opts);
  const SeedGrid grid = build_seed_grid(pool);
  const AggregatedStdReport wi = aggregated_std(grid, SeedAxis::weight_init);
  const AggregatedStdReport dorder =
      aggregated_std(grid, SeedAxis::data_order);

  const auto agg_label = [](SeedAxis a) {
    return a == SeedAxis::weight_init ? "agg_over_wi" : "agg_over_do";
  };

  if (format == "json") {
    json report;
    for (const AggregatedStdReport* r : {&wi, &dorder}) {
      json per = json::array();
      for (const PerSeedStd& s : r->per_seed) {
        per.push_back({{"seed", s.seed}, {"std", opts.fmt.jnum(s.std)}});
      }
      report[agg_label(r->axis)] = {
          {"per_seed", std::move(per)},
          {"expected_std", opts.fmt.jnum(r->expected_std)}};
    }
    report["total_std"] = opts.fmt.jnum(wi.overall_std);
    deliver(report.dump() + "\n", opts.out_path, out);
    return;
  }

  std::ostringstream os;
  os << "aggregation,seed,std\n";
  for (const AggregatedStdReport* r : {&wi, &dorder}) {
    for (const PerSeedStd& s : r->per_seed) {
      os << agg_label(r->axis) << ',' << s.seed << ',' << opts.fmt.num(s.std)
         << "\n";
    }
  }
  os << "agg_over_wi,expected," << opts.fmt.num(wi.expected_std) << "\n";
  os << "agg_over_do,expected," << opts.fmt.num(dorder.expected_std) << "\n";
  os << "total,all," << opts.fmt.num(wi.overall_std) << "\n";
  deliver(os.str(), opts.out_path, out);
}

// Compares the trials of the best-ranked seed against those of the
// worst-ranked seed on the chosen axis.
void cmd_anova(const CommonOpts& opts, const std::string& axis_name,
               std::ostream& out) {
  const TrialPool pool = load_pool(opts);
  const SeedGrid grid = build_seed_grid(pool);
  const SeedAxis axis = parse_axis(axis_name);

  const std::vector<SeedMean> ranked = rank_seeds(grid, axis);
  if (ranked.size() < 2) {
    raise(Errc::too_few_groups,
          "anova needs at least 2 seeds on axis " + axis_name);
  }
  const std::int64_t best_seed = ranked.front().seed;
  const std::int64_t worst_seed = ranked.back().seed;

  const std::vector<std::int64_t>& seeds =
      axis == SeedAxis::weight_init ? grid.wi_seeds : grid.do_seeds;
  const auto seed_values = [&](std::int64_t seed) {
    const std::size_t k = static_cast<std::size_t>(
        std::find(seeds.begin(), seeds.end(), seed) - seeds.begin());
    const std::size_t n =
        axis == SeedAxis::weight_init ? grid.cols() : grid.rows();
    std::vector<double> vals(n);
    for (std::size_t j = 0; j < n; ++j) {
      vals[j] = axis == SeedAxis::weight_init ? grid.at(k, j) : grid.at(j, k);
    }
    return vals;
  };
  const AnovaResult r =
      anova_f_test({seed_values(best_seed), seed_values(worst_seed)});

  json report;
  report["axis"] = axis_name;
  report["best_seed"] = best_seed;
  report["worst_seed"] = worst_seed;
  report["group_size"] =
      axis == SeedAxis::weight_init ? grid.cols() : grid.rows();
  // +inf has no JSON literal; it serializes as null.
  report["f_stat"] = opts.fmt.jnum(r.f_stat);
  report["df_between"] = r.df_between;
  report["df_within"] = r.df_within;
  report["p_value"] = opts.fmt.jnum(r.p_value);
  deliver(report.dump() + "\n", opts.out_path, out);
}

void cmd_corr(const CommonOpts& opts, const std::string& method_name,
              std::ostream& out, std::ostream& err) {
  const TrialPool pool = load_pool(opts);
  const CorrelationMethod method = method_name == "pearson"
                                       ? CorrelationMethod::pearson
                                       : CorrelationMethod::spearman;
  const CorrelationMatrix m = checkpoint_correlation_matrix(pool, method);

  if (!m.dropped_fractions.empty()) {
    err << "warning: ignoring checkpoints missing from some trials:";
    for (double f : m.dropped_fractions) err << ' ' << opts.fmt.num(f);
    err << "\n";
  }

  std::ostringstream os;
  os << "frac";
  for (double f : m.fractions) os << ',' << opts.fmt.num(f);
  os << "\n";
  for (std::size_t i = 0; i < m.size(); ++i) {
    os << opts.fmt.num(m.fractions[i]);
    for (std::size_t j = 0; j < m.size(); ++j) {
      const std::optional<double> v = m.at(i, j);
      os << ',' << (v ? opts.fmt.num(*v) : "nan");
    }
    os << "\n";
  }
  deliver(os.str(), opts.out_path, out);
}

void cmd_kde(const CommonOpts& opts, const std::string& of,
             std::optional<double> bandwidth, int points, std::ostream& out) {
  const TrialPool pool = load_pool(opts);
  std::vector<double> values;
  if (of == "finals") {
    values = pool.final_values();
  } else {
    const SeedGrid grid = build_seed_grid(pool);
    const SeedAxis axis =
        of == "wi-std" ? SeedAxis::weight_init : SeedAxis::data_order;
    for (const PerSeedStd& s : aggregated_std(grid, axis).per_seed) {
      values.push_back(s.std);
    }
  }
  const std::vector<KdePoint> density = kde(values, bandwidth, points);

  std::ostringstream os;
  os << "x,density\n";
  for (const KdePoint& p : density) {
    os << opts.fmt.num(p.x) << ',' << opts.fmt.num(p.density) << "\n";
  }
  deliver(os.str(), opts.out_path, out);
}

json simulation_json(const SimulationReport& r, const Fmt& fmt,
                     const char* method) {
  json report;
  report["method"] = method;
  report["t"] = r.policy.t;
  report["f"] = fmt.jnum(r.policy.f);
  report["p"] = r.policy.p;
  report["s"] = fmt.jnum(r.policy.s);
  report["reps"] = r.reps;
  report["expected_perf"] = fmt.jnum(r.expected_perf);
  report["std_perf"] = fmt.jnum(r.std_perf);
  report["budget_epochs"] = fmt.jnum(r.budget_epochs);
  return report;
}

void cmd_es_simulate(const CommonOpts& opts, const EarlyStopPolicy& policy,
                     std::uint64_t reps, std::optional<std::int64_t> seed,
                     bool exact, std::uint64_t cap, std::ostream& out) {
  const TrialPool pool = load_pool(opts);
  const SimulationReport r =
      exact ? enumerate_policy(pool, policy, cap)
            : simulate_policy(pool, policy, reps, resolve_seed(seed));
  deliver(simulation_json(r, opts.fmt, exact ? "exact" : "monte_carlo").dump() +
              "\n",
          opts.out_path, out);
}

void cmd_es_optimize(const CommonOpts& opts, const std::string& budgets,
                     const std::string& f_grid_text, double s,
                     std::uint64_t reps, std::optional<std::int64_t> seed,
                     std::ostream& out) {
  const TrialPool pool = load_pool(opts);
  const std::vector<int> xs = parse_int_list(budgets);
  std::vector<double> f_grid;
  if (f_grid_text.empty()) {
    f_grid = common_fractions(pool);
  } else {
    f_grid = parse_double_list(f_grid_text);
  }
  const std::int64_t master = resolve_seed(seed);

  std::ostringstream os;
  os << "x,t,f,p,expected_perf,baseline_perf,rer\n";
  for (int x : xs) {
    const OptimizationResult r =
        optimize_policy(pool, x, f_grid, reps, master, s);
    os << r.budget_trials << ',' << r.best_policy.t << ','
       << opts.fmt.num(r.best_policy.f) << ',' << r.best_policy.p << ','
       << opts.fmt.num(r.expected_perf) << ','
       << opts.fmt.num(r.baseline_perf) << ','
       << opts.fmt.num(r.relative_error_reduction) << "\n";
  }
  deliver(os.str(), opts.out_path, out);
}

void cmd_es_seed_simulate(const CommonOpts& opts, const std::string& axis_name,
                          int started, double f, int kept, double s,
                          std::uint64_t reps, std::optional<std::int64_t> seed,
                          std::ostream& out) {
  const TrialPool pool = load_pool(opts);
  const SeedAxis axis = parse_axis(axis_name);
  const SimulationReport r = simulate_seed_stopping(
      pool, axis, started, f, kept, s, reps, resolve_seed(seed));
  json report = simulation_json(r, opts.fmt, "seed_groups");
  report["axis"] = axis_name;
  deliver(report.dump() + "\n", opts.out_path, out);
}

void cmd_synth(const std::string& config_path, const std::string& out_path,
               std::ostream& out) {
  const SynthConfig config = load_synth_config(config_path);
  const TrialPool pool = generate_pool(config);
  std::ostringstream os;
  write_pool_jsonl(os, pool);
  deliver(os.str(), out_path, out);
}

void add_common(CLI::App* sub, CommonOpts& opts, bool needs_pool = true) {
  if (needs_pool) {
    sub->add_option("--in", opts.in_path, "input pool (JSONL)")->required();
    sub->add_option("--field-map", opts.field_map_path,
                    "JSON file renaming input fields");
  }
  sub->add_option("--out", opts.out_path,
                  "output file (written atomically); default stdout");
  sub->add_flag("--full-precision", opts.fmt.full,
                "print numbers with full round-trip precision");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"analysis of repeated fine-tuning trials and early-stopping "
               "policies"};
  app.require_subcommand(1);
  app.fallthrough();

  std::optional<int> threads;
  app.add_option("--threads", threads,
                 "worker threads (overrides SEEDSTOP_THREADS)");

  CommonOpts validate_opts;
  CLI::App* validate = app.add_subcommand(
      "validate", "check a trial pool and summarize its shape");
  add_common(validate, validate_opts);

  CommonOpts expected_opts;
  int x_max = 1;
  std::string band = "std";
  CLI::App* expected = app.add_subcommand(
      "expected", "expected best performance vs number of trials (CSV)");
  add_common(expected, expected_opts);
  expected->add_option("--x-max", x_max, "largest trial count")->required();
  expected
      ->add_option("--band", band,
                   "band columns: std (default), minmax or none")
      ->check(CLI::IsMember({"none", "std", "minmax"}));

  CommonOpts seeds_opts;
  std::string seeds_format = "csv";
  CLI::App* seeds = app.add_subcommand(
      "seeds", "per-seed and overall variance decomposition");
  add_common(seeds, seeds_opts);
  seeds->add_option("--format", seeds_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  CommonOpts anova_opts;
  std::string anova_axis;
  CLI::App* anova = app.add_subcommand(
      "anova", "one-way ANOVA of final values grouped by seed");
  add_common(anova, anova_opts);
  anova->add_option("--axis", anova_axis, "wi or do")
      ->required()
      ->check(CLI::IsMember({"wi", "do"}));

  CommonOpts corr_opts;
  std::string corr_method = "spearman";
  CLI::App* corr = app.add_subcommand(
      "corr", "correlation between checkpoints across trials (CSV matrix)");
  add_common(corr, corr_opts);
  corr->add_option("--method", corr_method, "spearman or pearson")
      ->check(CLI::IsMember({"spearman", "pearson"}));

  CommonOpts kde_opts;
  std::string kde_of = "finals";
  std::optional<double> kde_bandwidth;
  int kde_points = 512;
  CLI::App* kde_cmd = app.add_subcommand(
      "kde", "kernel density estimate of pool statistics (CSV)");
  add_common(kde_cmd, kde_opts);
  kde_cmd->add_option("--of", kde_of, "finals, wi-std or do-std")
      ->check(CLI::IsMember({"finals", "wi-std", "do-std"}));
  kde_cmd->add_option("--bandwidth", kde_bandwidth,
                      "kernel bandwidth; default Silverman's rule");
  kde_cmd->add_option("--points", kde_points, "grid size (default 512)");

  CLI::App* earlystop = app.add_subcommand(
      "earlystop", "start-many / stop-early / continue-some policies");
  earlystop->require_subcommand(1);

  CommonOpts sim_opts;
  EarlyStopPolicy sim_policy;
  std::uint64_t sim_reps = 50000;
  std::optional<std::int64_t> sim_seed;
  bool sim_exact = false;
  std::uint64_t sim_cap = kDefaultEnumerationCap;
  CLI::App* simulate = earlystop->add_subcommand(
      "simulate", "estimate the expected outcome of one (t, f, p) policy");
  add_common(simulate, sim_opts);
  simulate->add_option("--t", sim_policy.t, "trials started")->required();
  simulate->add_option("--f", sim_policy.f, "stopping fraction in (0, 1]")
      ->required();
  simulate->add_option("--p", sim_policy.p, "trials trained to completion")
      ->required();
  simulate->add_option("--s", sim_policy.s, "epochs per full trial");
  simulate->add_option("--reps", sim_reps, "Monte-Carlo repetitions");
  simulate->add_option("--seed", sim_seed, "master seed");
  simulate->add_flag("--exact", sim_exact,
                     "enumerate all draw tuples instead of sampling");
  simulate->add_option("--enumeration-cap", sim_cap,
                       "refuse enumerations larger than this");

  CommonOpts opt_opts;
  std::string opt_budgets;
  std::string opt_f_grid;
  double opt_s = 3.0;
  std::uint64_t opt_reps = 50000;
  std::optional<std::int64_t> opt_seed;
  CLI::App* optimize = earlystop->add_subcommand(
      "optimize", "best (t, f, p) per compute budget (CSV)");
  add_common(optimize, opt_opts);
  optimize
      ->add_option("--budget-trials", opt_budgets,
                   "budgets in full trials, e.g. 5,10,20 or 1-30")
      ->required();
  optimize->add_option("--f-grid", opt_f_grid,
                       "stopping fractions to search; default: all common "
                       "checkpoints");
  optimize->add_option("--s", opt_s, "epochs per full trial");
  optimize->add_option("--reps", opt_reps, "Monte-Carlo repetitions");
  optimize->add_option("--seed", opt_seed, "master seed");

  CommonOpts grp_opts;
  std::string grp_axis;
  int grp_started = 1;
  double grp_f = 1.0;
  int grp_kept = 1;
  double grp_s = 3.0;
  std::uint64_t grp_reps = 50000;
  std::optional<std::int64_t> grp_seed;
  CLI::App* seed_sim = earlystop->add_subcommand(
      "seed-simulate",
      "experimental: stop whole seed groups by their mean checkpoint value");
  add_common(seed_sim, grp_opts);
  seed_sim->add_option("--axis", grp_axis, "wi or do")
      ->required()
      ->check(CLI::IsMember({"wi", "do"}));
  seed_sim->add_option("--groups-started", grp_started, "seed groups started")
      ->required();
  seed_sim->add_option("--f", grp_f, "stopping fraction in (0, 1]")
      ->required();
  seed_sim->add_option("--groups-kept", grp_kept, "seed groups finished")
      ->required();
  seed_sim->add_option("--s", grp_s, "epochs per full trial");
  seed_sim->add_option("--reps", grp_reps, "Monte-Carlo repetitions");
  seed_sim->add_option("--seed", grp_seed, "master seed");

  std::string synth_config;
  std::string synth_out;
  CLI::App* synth = app.add_subcommand(
      "synth", "generate a synthetic trial pool (JSONL)");
  synth->add_option("--config", synth_config, "key = value config file")
      ->required();
  synth->add_option("--out", synth_out,
                    "output file (written atomically); default stdout");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("seedstop");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    apply_thread_settings(threads);
    if (*validate) {
      cmd_validate(validate_opts, out);
    } else if (*expected) {
      cmd_expected(expected_opts, x_max, band, out);
    } else if (*seeds) {
      cmd_seeds(seeds_opts, seeds_format, out);
    } else if (*anova) {
      cmd_anova(anova_opts, anova_axis, out);
    } else if (*corr) {
      cmd_corr(corr_opts, corr_method, out, err);
    } else if (*kde_cmd) {
      cmd_kde(kde_opts, kde_of, kde_bandwidth, kde_points, out);
    } else if (*simulate) {
      cmd_es_simulate(sim_opts, sim_policy, sim_reps, sim_seed, sim_exact,
                      sim_cap, out);
    } else if (*optimize) {
      cmd_es_optimize(opt_opts, opt_budgets, opt_f_grid, opt_s, opt_reps,
                      opt_seed, out);
    } else if (*seed_sim) {
      cmd_es_seed_simulate(grp_opts, grp_axis, grp_started, grp_f, grp_kept,
                           grp_s, grp_reps, grp_seed, out);
    } else if (*synth) {
      cmd_synth(synth_config, synth_out, out);
    }
  } catch (const Error& e) {
    err << nlohmann::json{{"error", e.code_string()},
                          {"message", e.what()}}
               .dump()
        << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << nlohmann::json{{"error", "E_INTERNAL"}, {"message", e.what()}}
               .dump()
        << "\n";
    return 1;
  }
  return 0;
}

}  // namespace seedstop::cli
