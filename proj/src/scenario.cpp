#include "adtime/scenario.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "adtime/errors.hpp"
#include "adtime/rng.hpp"
#include "json.hpp"

namespace adtime {

namespace {

using nlohmann::json;

std::string idx(const char* name, int i) {
  std::ostringstream os;
  os << name << "[" << i << "]";
  return os.str();
}

std::string idx2(const char* name, int i, int j) {
  std::ostringstream os;
  os << name << "[" << i << "][" << j << "]";
  return os.str();
}

void require(bool ok, const std::string& field, const std::string& what) {
  if (!ok) throw validation_error(field + ": " + what);
}

void require_finite(Real v, const std::string& field) {
  require(std::isfinite(v), field, "must be finite");
}

}  // namespace

void validate(const Scenario& s) {
  require(s.n_followers >= 1, "n_followers", "must be >= 1");
  require(s.m_blocks >= 1, "m_blocks", "must be >= 1");
  const auto n = static_cast<std::size_t>(s.n_followers);
  const auto m = static_cast<std::size_t>(s.m_blocks);
  require(s.batch_duration.size() == m, "batch_duration", "wrong length");
  require(s.block_budget.size() == n, "block_budget", "wrong length");
  require(s.alpha.size() == m, "alpha", "wrong length");
  require(s.lambda.rows() == n && s.lambda.cols() == m, "lambda",
          "wrong shape");
  require(s.t_design.rows() == n && s.t_design.cols() == m, "t_design",
          "wrong shape");
  for (int j = 0; j < s.m_blocks; ++j) {
    require_finite(s.batch_duration[j], idx("batch_duration", j));
    require(s.batch_duration[j] > 0.0, idx("batch_duration", j),
            "must be > 0");
    require_finite(s.alpha[j], idx("alpha", j));
    require(s.alpha[j] >= 1.0, idx("alpha", j), "must be >= 1");
  }
  for (int i = 0; i < s.n_followers; ++i) {
    require(s.block_budget[i] >= 0, idx("block_budget", i), "must be >= 0");
    require(s.block_budget[i] <= s.m_blocks, idx("block_budget", i),
            "must be <= m_blocks");
    for (int j = 0; j < s.m_blocks; ++j) {
      require_finite(s.lambda(i, j), idx2("lambda", i, j));
      require(s.lambda(i, j) >= 0.0, idx2("lambda", i, j), "must be >= 0");
      require_finite(s.t_design(i, j), idx2("t_design", i, j));
      require(s.t_design(i, j) > 0.0, idx2("t_design", i, j), "must be > 0");
    }
  }
}

Scenario generate(const GenSpec& spec) {
  if (spec.n_followers < 1) throw validation_error("n_followers: must be >= 1");
  if (spec.m_blocks < 1) throw validation_error("m_blocks: must be >= 1");
  if (!(spec.t_design_max > spec.t_design_floor) || spec.t_design_floor <= 0.0)
    throw validation_error("t_design_range: need 0 < floor < max");
  if (spec.lambda_max < 0.0)
    throw validation_error("lambda_max: must be >= 0");
  if (spec.vehicles_min < 0 || spec.vehicles_max < spec.vehicles_min)
    throw validation_error("vehicles_range: need 0 <= min <= max");
  if (spec.alpha_scale < 0.0)
    throw validation_error("alpha_scale: must be >= 0");
  if (spec.batch_duration <= 0.0)
    throw validation_error("batch_duration: must be > 0");
  const int budget_max =
      spec.budget_max < 0 ? spec.m_blocks : spec.budget_max;
  if (spec.budget_min < 0 || budget_max < spec.budget_min ||
      budget_max > spec.m_blocks)
    throw validation_error("block_budget_range: need 0 <= min <= max <= M");

  const int n = spec.n_followers;
  const int m = spec.m_blocks;
  Scenario s;
  s.n_followers = n;
  s.m_blocks = m;
  s.lambda = RealGrid(n, m);
  s.t_design = RealGrid(n, m);
  s.batch_duration.assign(m, spec.batch_duration);
  s.alpha.resize(m);
  s.block_budget.resize(n);

  SplitMix64 rng(spec.seed);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) s.lambda(i, j) = spec.lambda_max * rng.next_unit();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) {
      Real t = spec.t_design_max * rng.next_unit();
      while (t < spec.t_design_floor) t = spec.t_design_max * rng.next_unit();
      s.t_design(i, j) = t;
    }
  for (int j = 0; j < m; ++j) {
    const auto vehicles = rng.next_int(spec.vehicles_min, spec.vehicles_max);
    s.alpha[j] = 1.0 + spec.alpha_scale * static_cast<Real>(vehicles);
  }
  for (int i = 0; i < n; ++i)
    s.block_budget[i] =
        static_cast<int>(rng.next_int(spec.budget_min, budget_max));

  validate(s);
  return s;
}

namespace {

json parse_object(const std::string& text, const char* what) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw validation_error(std::string(what) + ": malformed JSON: " + e.what());
  }
  if (!doc.is_object())
    throw validation_error(std::string(what) + ": top level must be an object");
  return doc;
}

void reject_unknown_keys(const json& doc, const std::set<std::string>& known,
                         const char* what) {
  for (const auto& [key, _] : doc.items())
    if (!known.contains(key))
      throw validation_error(std::string(what) + ": unknown key \"" + key +
                             "\"");
}

template <class T>
T get_field(const json& doc, const char* key) {
  if (!doc.contains(key))
    throw validation_error(std::string(key) + ": missing");
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception&) {
    throw validation_error(std::string(key) + ": wrong type");
  }
}

RealGrid grid_field(const json& doc, const char* key, int n, int m) {
  const auto rows = get_field<std::vector<std::vector<Real>>>(doc, key);
  if (static_cast<int>(rows.size()) != n)
    throw validation_error(std::string(key) + ": expected " +
                           std::to_string(n) + " rows");
  RealGrid g(n, m);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != m)
      throw validation_error(idx(key, i) + ": expected " + std::to_string(m) +
                             " entries");
    for (int j = 0; j < m; ++j) g(i, j) = rows[i][j];
  }
  return g;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw validation_error(path.string() + ": cannot open");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

Scenario scenario_from_json(const std::string& text) {
  const json doc = parse_object(text, "scenario");
  reject_unknown_keys(doc,
                      {"n_followers", "m_blocks", "batch_duration",
                       "block_budget", "lambda", "t_design", "alpha"},
                      "scenario");
  Scenario s;
  s.n_followers = get_field<int>(doc, "n_followers");
  s.m_blocks = get_field<int>(doc, "m_blocks");
  if (s.n_followers < 1) throw validation_error("n_followers: must be >= 1");
  if (s.m_blocks < 1) throw validation_error("m_blocks: must be >= 1");
  s.batch_duration = get_field<std::vector<Real>>(doc, "batch_duration");
  s.block_budget = get_field<std::vector<int>>(doc, "block_budget");
  s.alpha = get_field<std::vector<Real>>(doc, "alpha");
  s.lambda = grid_field(doc, "lambda", s.n_followers, s.m_blocks);
  s.t_design = grid_field(doc, "t_design", s.n_followers, s.m_blocks);
  validate(s);
  return s;
}

std::string scenario_to_json(const Scenario& s) {
  json doc;
  doc["n_followers"] = s.n_followers;
  doc["m_blocks"] = s.m_blocks;
  doc["batch_duration"] = s.batch_duration;
  doc["block_budget"] = s.block_budget;
  auto grid_rows = [&](const RealGrid& g) {
    std::vector<std::vector<Real>> rows;
    for (std::size_t i = 0; i < g.rows(); ++i)
      rows.emplace_back(g.flat().begin() + i * g.cols(),
                        g.flat().begin() + (i + 1) * g.cols());
    return rows;
  };
  doc["lambda"] = grid_rows(s.lambda);
  doc["t_design"] = grid_rows(s.t_design);
  doc["alpha"] = s.alpha;
  return doc.dump(2) + "\n";
}

Scenario load_scenario(const std::filesystem::path& path) {
  return scenario_from_json(read_file(path));
}

void save_scenario(const Scenario& s, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw validation_error(path.string() + ": cannot write");
  out << scenario_to_json(s);
}

GenSpec load_gen_spec(const std::filesystem::path& path) {
  const json doc = parse_object(read_file(path), "gen spec");
  reject_unknown_keys(
      doc, {"n_followers", "m_blocks", "t_design_max", "t_design_floor",
            "lambda_max", "vehicles_min", "vehicles_max", "alpha_scale",
            "batch_duration", "budget_min", "budget_max", "seed"},
      "gen spec");
  GenSpec spec;
  auto opt = [&](const char* key, auto& field) {
    if (doc.contains(key)) {
      try {
        field = doc.at(key).get<std::remove_reference_t<decltype(field)>>();
      } catch (const json::exception&) {
        throw validation_error(std::string(key) + ": wrong type");
      }
    }
  };
  opt("n_followers", spec.n_followers);
  opt("m_blocks", spec.m_blocks);
  opt("t_design_max", spec.t_design_max);
  opt("t_design_floor", spec.t_design_floor);
  opt("lambda_max", spec.lambda_max);
  opt("vehicles_min", spec.vehicles_min);
  opt("vehicles_max", spec.vehicles_max);
  opt("alpha_scale", spec.alpha_scale);
  opt("batch_duration", spec.batch_duration);
  opt("budget_min", spec.budget_min);
  opt("budget_max", spec.budget_max);
  opt("seed", spec.seed);
  return spec;
}

}  // namespace adtime
