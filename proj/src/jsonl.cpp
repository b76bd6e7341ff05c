#include "seedstop/jsonl.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "seedstop/errors.hpp"

namespace seedstop {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  std::ostringstream os;
  os << "line " << line << ": " << what;
  raise(Errc::parse_error, os.str());
}

const json& field(const json& obj, const std::string& key, std::size_t line) {
  auto it = obj.find(key);
  if (it == obj.end()) parse_fail(line, "missing field '" + key + "'");
  return *it;
}

TrialRecord parse_trial(const json& obj, const FieldMap& fields,
                        std::size_t line) {
  if (!obj.is_object()) parse_fail(line, "expected a JSON object");

  TrialRecord t;
  const json& task = field(obj, fields.task, line);
  if (!task.is_string()) parse_fail(line, "'" + fields.task + "' must be a string");
  t.task_id = task.get<std::string>();

  const json& metric = field(obj, fields.metric, line);
  if (!metric.is_string())
    parse_fail(line, "'" + fields.metric + "' must be a string");
  auto kind = metric_from_name(metric.get<std::string>());
  if (!kind)
    parse_fail(line, "unknown metric '" + metric.get<std::string>() + "'");
  t.metric_kind = *kind;

  const json& wi = field(obj, fields.wi_seed, line);
  const json& dorder = field(obj, fields.do_seed, line);
  if (!wi.is_number_integer() || !dorder.is_number_integer())
    parse_fail(line, "seeds must be integers");
  t.wi_seed = wi.get<std::int64_t>();
  t.do_seed = dorder.get<std::int64_t>();

  const json& evals = field(obj, fields.evals, line);
  if (!evals.is_array())
    parse_fail(line, "'" + fields.evals + "' must be an array");
  for (const json& e : evals) {
    if (!e.is_object()) parse_fail(line, "eval entries must be objects");
    const json& frac = field(e, fields.frac, line);
    const json& value = field(e, fields.value, line);
    if (!frac.is_number() || !value.is_number())
      parse_fail(line, "eval fields must be numbers");
    t.evals.push_back({frac.get<double>(), value.get<double>()});
  }

  if (auto it = obj.find(fields.meta); it != obj.end()) {
    if (!it->is_object())
      parse_fail(line, "'" + fields.meta + "' must be an object");
    for (const auto& [key, val] : it->items()) {
      t.meta[key] = val.is_string() ? val.get<std::string>() : val.dump();
    }
  }
  return t;
}

}  // namespace

FieldMap load_field_map(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(Errc::io_error, "cannot open field map '" + path + "'");
  json obj;
  try {
    obj = json::parse(in);
  } catch (const json::exception& e) {
    raise(Errc::parse_error, "field map '" + path + "': " + e.what());
  }
  if (!obj.is_object())
    raise(Errc::parse_error, "field map '" + path + "' must be a JSON object");

  FieldMap fields;
  for (const auto& [key, val] : obj.items()) {
    if (!val.is_string())
      raise(Errc::parse_error, "field map entry '" + key + "' must be a string");
    const std::string name = val.get<std::string>();
    if (key == "task") fields.task = name;
    else if (key == "metric") fields.metric = name;
    else if (key == "wi_seed") fields.wi_seed = name;
    else if (key == "do_seed") fields.do_seed = name;
    else if (key == "evals") fields.evals = name;
    else if (key == "frac") fields.frac = name;
    else if (key == "value") fields.value = name;
    else if (key == "meta") fields.meta = name;
    else raise(Errc::parse_error, "field map has unknown key '" + key + "'");
  }
  return fields;
}

std::vector<TrialRecord> read_trials_jsonl(std::istream& in,
                                           const FieldMap& fields) {
  std::vector<TrialRecord> records;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::exception& e) {
      parse_fail(lineno, e.what());
    }
    records.push_back(parse_trial(obj, fields, lineno));
  }
  return records;
}

std::vector<TrialRecord> read_trials_jsonl_file(const std::string& path,
                                                const FieldMap& fields) {
  std::ifstream in(path);
  if (!in) raise(Errc::io_error, "cannot open '" + path + "'");
  return read_trials_jsonl(in, fields);
}

TrialPool load_pool_file(const std::string& path, const FieldMap& fields) {
  std::vector<TrialRecord> records = read_trials_jsonl_file(path, fields);
  if (records.empty())
    raise(Errc::empty_input, "'" + path + "' contains no trials");
  return validate_pool(std::move(records));
}

void write_pool_jsonl(std::ostream& out, const TrialPool& pool) {
  for (const TrialRecord& t : pool.trials) {
    ordered_json obj;
    obj["task"] = t.task_id;
    obj["metric"] = metric_name(t.metric_kind);
    obj["wi_seed"] = t.wi_seed;
    obj["do_seed"] = t.do_seed;
    ordered_json evals = ordered_json::array();
    for (const EvalPoint& e : t.evals) {
      evals.push_back({{"frac", e.fraction}, {"value", e.value}});
    }
    obj["evals"] = std::move(evals);
    if (!t.meta.empty()) obj["meta"] = t.meta;
    out << obj.dump() << '\n';
  }
}

void write_pool_jsonl_file(const std::string& path, const TrialPool& pool) {
  std::ofstream out(path);
  if (!out) raise(Errc::io_error, "cannot open '" + path + "' for writing");
  write_pool_jsonl(out, pool);
  out.flush();
  if (!out) raise(Errc::io_error, "failed while writing '" + path + "'");
}

}  // namespace seedstop
