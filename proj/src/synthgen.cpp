#include "seedstop/synthgen.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "seedstop/errors.hpp"

namespace seedstop {

namespace {

// Substream tags. Every WI effect, DO effect and trial has its own stream,
// so the pool is a pure function of the config.
constexpr std::uint64_t kWiStream = 1;
constexpr std::uint64_t kDoStream = 2;
constexpr std::uint64_t kTrialStream = 3;

void check_config(const SynthConfig& c) {
  std::vector<std::string> problems;
  auto bad = [&](const std::string& msg) { problems.push_back(msg); };

  if (c.task_id.empty()) bad("task_id must be nonempty");
  if (c.n_wi < 1) bad("n_wi must be >= 1");
  if (c.n_do < 1) bad("n_do must be >= 1");
  if (!(c.wi_effect_scale >= 0.0)) bad("wi_effect_scale must be >= 0");
  if (!(c.do_effect_scale >= 0.0)) bad("do_effect_scale must be >= 0");
  if (!(c.noise_scale >= 0.0)) bad("noise_scale must be >= 0");
  if (!(c.diverge_prob >= 0.0) || c.diverge_prob > 1.0) {
    bad("diverge_prob must be in [0, 1]");
  }
  if (!(c.curve_rate > 0.0) || !std::isfinite(c.curve_rate)) {
    bad("curve_rate must be positive and finite");
  }
  const MetricRange range = metric_range(c.metric_kind);
  if (!(c.base >= range.lo) || c.base > range.hi) {
    bad("base must lie in the metric range");
  }
  if (!(c.diverge_value >= range.lo) || c.diverge_value > range.hi) {
    bad("diverge_value must lie in the metric range");
  }
  if (c.checkpoints.empty()) {
    bad("checkpoints must be nonempty");
  } else {
    double prev = 0.0;
    bool ordered = true;
    for (double f : c.checkpoints) {
      if (!(f > prev) || f > 1.0) ordered = false;
      prev = f;
    }
    if (!ordered) bad("checkpoints must be strictly increasing in (0, 1]");
    if (c.checkpoints.back() != 1.0) bad("checkpoints must end at 1");
  }

  if (!problems.empty()) {
    std::string msg = problems.front();
    for (std::size_t i = 1; i < problems.size(); ++i) msg += "; " + problems[i];
    raise(Errc::invalid_config, msg);
  }
}

std::string trim(const std::string& s) {
  const std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

[[noreturn]] void config_fail(std::size_t line, const std::string& what) {
  std::ostringstream os;
  os << "config line " << line << ": " << what;
  raise(Errc::invalid_config, os.str());
}

double parse_double(const std::string& v, std::size_t line) {
  try {
    std::size_t used = 0;
    const double x = std::stod(v, &used);
    if (used != v.size()) config_fail(line, "trailing junk in '" + v + "'");
    return x;
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    config_fail(line, "not a number: '" + v + "'");
  }
}

long long parse_int(const std::string& v, std::size_t line) {
  try {
    std::size_t used = 0;
    const long long x = std::stoll(v, &used);
    if (used != v.size()) config_fail(line, "trailing junk in '" + v + "'");
    return x;
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    config_fail(line, "not an integer: '" + v + "'");
  }
}

}  // namespace

TrialPool generate_pool(const SynthConfig& config) {
  check_config(config);
  const MetricRange range = metric_range(config.metric_kind);
  const auto master = static_cast<std::uint64_t>(config.master_seed);

  std::vector<double> wi_effect(static_cast<std::size_t>(config.n_wi));
  for (int i = 0; i < config.n_wi; ++i) {
    Rng rng(derive_stream(master, kWiStream, static_cast<std::uint64_t>(i)));
    wi_effect[static_cast<std::size_t>(i)] =
        rng.normal() * config.wi_effect_scale;
  }
  std::vector<double> do_effect(static_cast<std::size_t>(config.n_do));
  for (int j = 0; j < config.n_do; ++j) {
    Rng rng(derive_stream(master, kDoStream, static_cast<std::uint64_t>(j)));
    do_effect[static_cast<std::size_t>(j)] =
        rng.normal() * config.do_effect_scale;
  }

  const double denom = 1.0 - std::exp(-config.curve_rate);
  std::vector<TrialRecord> records;
  records.reserve(static_cast<std::size_t>(config.n_wi) *
                  static_cast<std::size_t>(config.n_do));
  for (int i = 0; i < config.n_wi; ++i) {
    for (int j = 0; j < config.n_do; ++j) {
      const std::uint64_t cell = static_cast<std::uint64_t>(i) *
                                     static_cast<std::uint64_t>(config.n_do) +
                                 static_cast<std::uint64_t>(j);
      Rng rng(derive_stream(master, kTrialStream, cell));
      const bool diverged = rng.uniform_unit() <= config.diverge_prob;
      const double noise = rng.normal() * config.noise_scale;

      TrialRecord t;
      t.task_id = config.task_id;
      t.metric_kind = config.metric_kind;
      t.wi_seed = i + 1;
      t.do_seed = j + 1;
      t.evals.reserve(config.checkpoints.size());
      if (diverged) {
        // A diverged run flatlines: every checkpoint reads the same value.
        for (double cp : config.checkpoints) {
          t.evals.push_back({cp, config.diverge_value});
        }
      } else {
        const double ceiling =
            std::clamp(config.base + wi_effect[static_cast<std::size_t>(i)] +
                           do_effect[static_cast<std::size_t>(j)] + noise,
                       range.lo, range.hi);
        for (double cp : config.checkpoints) {
          // Saturating approach to the ceiling; reaches it exactly at 1.
          const double g = (1.0 - std::exp(-config.curve_rate * cp)) / denom;
          t.evals.push_back({cp, ceiling * g});
        }
      }
      records.push_back(std::move(t));
    }
  }
  return validate_pool(std::move(records));
}

SynthConfig parse_synth_config(std::istream& in) {
  SynthConfig c;
  std::vector<std::string> seen;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const std::size_t hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    const std::string body = trim(line);
    if (body.empty()) continue;
    const std::size_t eq = body.find('=');
    if (eq == std::string::npos) {
      config_fail(lineno, "expected 'key = value', got '" + body + "'");
    }
    const std::string key = trim(body.substr(0, eq));
    const std::string value = trim(body.substr(eq + 1));
    if (key.empty() || value.empty()) {
      config_fail(lineno, "expected 'key = value', got '" + body + "'");
    }
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) {
      config_fail(lineno, "duplicate key '" + key + "'");
    }
    seen.push_back(key);

    if (key == "task") {
      c.task_id = value;
    } else if (key == "metric") {
      const auto kind = metric_from_name(value);
      if (!kind) config_fail(lineno, "unknown metric '" + value + "'");
      c.metric_kind = *kind;
    } else if (key == "n_wi") {
      c.n_wi = static_cast<int>(parse_int(value, lineno));
    } else if (key == "n_do") {
      c.n_do = static_cast<int>(parse_int(value, lineno));
    } else if (key == "base") {
      c.base = parse_double(value, lineno);
    } else if (key == "wi_effect_scale") {
      c.wi_effect_scale = parse_double(value, lineno);
    } else if (key == "do_effect_scale") {
      c.do_effect_scale = parse_double(value, lineno);
    } else if (key == "noise_scale") {
      c.noise_scale = parse_double(value, lineno);
    } else if (key == "diverge_prob") {
      c.diverge_prob = parse_double(value, lineno);
    } else if (key == "diverge_value") {
      c.diverge_value = parse_double(value, lineno);
    } else if (key == "curve_rate") {
      c.curve_rate = parse_double(value, lineno);
    } else if (key == "master_seed") {
      c.master_seed = parse_int(value, lineno);
    } else if (key == "checkpoints") {
      c.checkpoints.clear();
      std::istringstream items(value);
      std::string item;
      while (std::getline(items, item, ',')) {
        c.checkpoints.push_back(parse_double(trim(item), lineno));
      }
    } else {
      config_fail(lineno, "unknown key '" + key + "'");
    }
  }
  check_config(c);
  return c;
}

SynthConfig load_synth_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(Errc::io_error, "cannot open config '" + path + "'");
  return parse_synth_config(in);
}

}  // namespace seedstop
