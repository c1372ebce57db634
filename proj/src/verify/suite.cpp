#include "qcrys/suite.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <set>
#include <thread>

namespace qcrys {

namespace {

const std::set<std::string> kRelations{"cartan", "ladder", "serre", "map", "cz", "q1_limit"};
const std::set<std::string> kModelKeys{"type", "n", "lambda", "cap", "cap_offset", "q", "flavors", "relations", "margin"};
const std::set<std::string> kBosonKeys{"realization", "q", "cutoff"};

int line_of(const YAML::Node& node) { return node.Mark().line >= 0 ? node.Mark().line + 1 : 0; }

template <class T>
T scalar_as(const YAML::Node& node, const std::string& what) {
  if (!node.IsScalar()) throw ConfigError(line_of(node), what + " must be a scalar");
  try {
    return node.as<T>();
  } catch (const YAML::Exception&) {
    throw ConfigError(line_of(node), "cannot read " + what + " from '" + node.Scalar() + "'");
  }
}

// A scalar or a sequence of scalars.
template <class T, class Fn>
std::vector<T> list_of(const YAML::Node& node, const std::string& what, Fn&& read) {
  std::vector<T> out;
  if (node.IsMap()) throw ConfigError(line_of(node), what + " must be a value or a list");
  if (node.IsSequence())
    for (const auto& item : node) out.push_back(read(item));
  else
    out.push_back(read(node));
  return out;
}

Rational read_q(const YAML::Node& node) {
  const auto text = scalar_as<std::string>(node, "q");
  Rational q;
  try {
    q = parse_rational(text);
  } catch (const std::exception&) {
    throw ConfigError(line_of(node), "bad rational '" + text + "'");
  }
  if (q <= 0) throw ConfigError(line_of(node), "q must be positive, got " + text);
  return q;
}

void reject_unknown(const YAML::Node& map, const std::set<std::string>& keys, const std::string& where) {
  for (const auto& kv : map) {
    const auto key = kv.first.as<std::string>();
    if (!keys.count(key)) throw ConfigError(line_of(kv.first), "unknown key '" + key + "' in " + where);
  }
}

YAML::Node required(const YAML::Node& map, const std::string& key, const std::string& where) {
  const YAML::Node node = map[key];
  if (!node) throw ConfigError(line_of(map), where + " needs '" + key + "'");
  return node;
}

ModelGrid read_model(const YAML::Node& node) {
  if (!node.IsMap()) throw ConfigError(line_of(node), "model entry must be a mapping");
  reject_unknown(node, kModelKeys, "model");
  ModelGrid g;
  const YAML::Node type = required(node, "type", "model");
  try {
    g.type = parse_algebra_type(scalar_as<std::string>(type, "type"));
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(line_of(type), e.what());
  }
  auto ints = [](const std::string& what) { return [what](const YAML::Node& v) { return scalar_as<int>(v, what); }; };
  g.n = list_of<int>(required(node, "n", "model"), "n", ints("n"));
  g.lambda = list_of<int>(required(node, "lambda", "model"), "lambda", ints("lambda"));
  if (node["cap"]) g.cap = scalar_as<int>(node["cap"], "cap");
  if (node["cap_offset"]) g.cap_offset = scalar_as<int>(node["cap_offset"], "cap_offset");
  if (node["margin"]) g.margin = scalar_as<int>(node["margin"], "margin");
  if (g.margin < 0) throw ConfigError(line_of(node["margin"]), "margin must be >= 0");
  g.q = node["q"] ? list_of<Rational>(node["q"], "q", read_q) : std::vector<Rational>{Rational(1)};
  if (node["flavors"]) {
    g.flavors = list_of<Flavor>(node["flavors"], "flavors", [](const YAML::Node& v) {
      const auto s = scalar_as<std::string>(v, "flavor");
      if (s == "classical") return Flavor::Classical;
      if (s == "deformed") return Flavor::Deformed;
      throw ConfigError(line_of(v), "unknown flavor '" + s + "'");
    });
  }
  const YAML::Node rels = required(node, "relations", "model");
  if (!rels.IsSequence()) throw ConfigError(line_of(rels), "relations must be a list");
  for (const auto& r : rels) {
    const auto s = scalar_as<std::string>(r, "relation");
    if (!kRelations.count(s)) throw ConfigError(line_of(r), "unknown relation family '" + s + "'");
    g.relations.push_back(s);
  }
  for (int n : g.n)
    for (int lambda : g.lambda) {
      CrystalSpec spec{g.type, n, lambda, g.type == AlgebraType::C ? (g.cap >= 0 ? g.cap : lambda + g.cap_offset) : -1};
      try {
        build_model(spec);
      } catch (const std::domain_error& e) {
        throw ConfigError(line_of(node), e.what());
      }
      if (std::count(g.relations.begin(), g.relations.end(), "cz") && (g.type != AlgebraType::A || n != 2))
        throw ConfigError(line_of(rels), "cz needs type A with n = 2");
    }
  return g;
}

BosonGrid read_boson(const YAML::Node& node) {
  if (!node.IsMap()) throw ConfigError(line_of(node), "boson entry must be a mapping");
  reject_unknown(node, kBosonKeys, "boson");
  BosonGrid g;
  const YAML::Node real = required(node, "realization", "boson");
  g.realization = scalar_as<std::string>(real, "realization");
  if (g.realization != "vdj" && g.realization != "standard")
    throw ConfigError(line_of(real), "realization must be vdj or standard");
  g.q = node["q"] ? list_of<Rational>(node["q"], "q", read_q) : std::vector<Rational>{Rational(1)};
  if (node["cutoff"]) g.cutoff = scalar_as<int>(node["cutoff"], "cutoff");
  if (g.cutoff < 0) throw ConfigError(line_of(node["cutoff"]), "cutoff must be >= 0");
  return g;
}

SuiteConfig read_config(const YAML::Node& root) {
  SuiteConfig c;
  if (!root || root.IsNull()) return c;
  if (!root.IsMap()) throw ConfigError(line_of(root), "config must be a mapping");
  reject_unknown(root, {"models", "bosons"}, "config");
  for (const char* key : {"models", "bosons"})
    if (root[key] && !root[key].IsNull() && !root[key].IsSequence())
      throw ConfigError(line_of(root[key]), std::string(key) + " must be a list");
  if (root["models"])
    for (const auto& m : root["models"]) c.models.push_back(read_model(m));
  if (root["bosons"])
    for (const auto& b : root["bosons"]) c.bosons.push_back(read_boson(b));
  return c;
}

using Task = std::function<RelationReport()>;

std::vector<Task> expand(const SuiteConfig& config) {
  std::vector<Task> tasks;
  for (const auto& g : config.models)
    for (int n : g.n)
      for (int lambda : g.lambda) {
        const CrystalSpec spec{g.type, n, lambda,
                               g.type == AlgebraType::C ? (g.cap >= 0 ? g.cap : lambda + g.cap_offset) : -1};
        const int margin = g.margin;
        for (const auto& rel : g.relations) {
          auto flavored = [&](auto check) {
            for (Flavor f : g.flavors) {
              if (f == Flavor::Classical)
                tasks.push_back([=] { return check(build_model(spec), f, Rational(1), margin); });
              else
                for (const auto& q : g.q) tasks.push_back([=] { return check(build_model(spec), f, q, margin); });
            }
          };
          if (rel == "cartan")
            flavored([](const CrystalModel& m, Flavor f, const Rational& q, int mg) { return check_cartan(m, f, q, mg); });
          else if (rel == "ladder")
            flavored([](const CrystalModel& m, Flavor f, const Rational& q, int mg) { return check_ladder(m, f, q, mg); });
          else if (rel == "serre")
            flavored([](const CrystalModel& m, Flavor f, const Rational& q, int mg) { return check_serre(m, f, q, mg); });
          else if (rel == "map")
            for (const auto& q : g.q) tasks.push_back([=] { return check_map(build_model(spec), q, margin); });
          else if (rel == "cz")
            for (const auto& q : g.q) tasks.push_back([=] { return check_cz(build_model(spec), q); });
          else if (rel == "q1_limit")
            tasks.push_back([=] { return check_q1_limit(build_model(spec), margin); });
        }
      }
  for (const auto& b : config.bosons)
    for (const auto& q : b.q) {
      const std::string real = b.realization;
      const int cutoff = b.cutoff;
      tasks.push_back([=] {
        const FockSpace space(cutoff);
        return check_so3(real, real == "vdj" ? vdj_so3(space, q) : standard_so3(space, q), space, q);
      });
    }
  return tasks;
}

unsigned thread_count(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("QCRYS_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace

SuiteConfig parse_suite_config(const std::string& yaml_text) {
  YAML::Node root;
  try {
    root = YAML::Load(yaml_text);
  } catch (const YAML::Exception& e) {
    throw ConfigError(e.mark.line >= 0 ? e.mark.line + 1 : 0, e.msg);
  }
  return read_config(root);
}

SuiteConfig load_suite_config(const std::string& path) {
  YAML::Node root;
  try {
    root = YAML::LoadFile(path);
  } catch (const YAML::BadFile&) {
    throw ConfigError(0, "cannot read config file " + path);
  } catch (const YAML::Exception& e) {
    throw ConfigError(e.mark.line >= 0 ? e.mark.line + 1 : 0, e.msg);
  }
  return read_config(root);
}

int SuiteResult::exit_status() const {
  return std::all_of(reports.begin(), reports.end(), [](const RelationReport& r) { return r.ok(); }) ? 0 : 1;
}

Json SuiteResult::to_json() const {
  std::size_t pass = 0, fail = 0, boundary = 0, failed_reports = 0;
  Json list = Json::array();
  for (const auto& r : reports) {
    pass += r.pass;
    fail += r.fail;
    boundary += r.boundary;
    failed_reports += r.ok() ? 0 : 1;
    list.push_back(r.to_json());
  }
  Json j;
  j["summary"] = Json{{"reports", reports.size()},
                      {"failed_reports", failed_reports},
                      {"pass", pass},
                      {"fail", fail},
                      {"boundary", boundary},
                      {"exit_status", exit_status()}};
  j["reports"] = std::move(list);
  return j;
}

SuiteResult run_suite(const SuiteConfig& config, unsigned threads) {
  const std::vector<Task> tasks = expand(config);
  SuiteResult result;
  result.reports.resize(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next++) < tasks.size();) {
      try {
        result.reports[k] = tasks[k]();
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  const unsigned count = std::min<std::size_t>(thread_count(threads), std::max<std::size_t>(tasks.size(), 1));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < count; ++t) pool.emplace_back(worker);
    worker();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return result;
}

ModelGrid single_model_grid(const CrystalSpec& spec, const std::vector<Rational>& q, int margin, bool cz_only) {
  ModelGrid g;
  g.type = spec.type;
  g.n = {spec.n};
  g.lambda = {spec.lambda};
  g.cap = spec.cap;
  g.q = q;
  g.margin = margin;
  g.relations = cz_only ? std::vector<std::string>{"cz"}
                        : std::vector<std::string>{"cartan", "ladder", "serre", "map", "q1_limit"};
  return g;
}

}  // namespace qcrys
