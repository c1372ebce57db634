#pragma once

// Batch runner: a YAML config lists model grids and boson spaces, the
// suite expands them into independent checks and aggregates the reports.

#include <stdexcept>
#include <string>
#include <vector>

#include "qcrys/verify.hpp"

namespace qcrys {

class ConfigError : public std::runtime_error {
 public:
  ConfigError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  /// 1-based line of the offending node, 0 when unknown.
  int line() const { return line_; }

 private:
  int line_;
};

struct ModelGrid {
  AlgebraType type = AlgebraType::A;
  std::vector<int> n;
  std::vector<int> lambda;
  int cap = -1;         ///< fixed cap for type C
  int cap_offset = 10;  ///< cap = lambda + cap_offset when cap is unset
  std::vector<Rational> q;
  std::vector<Flavor> flavors{Flavor::Classical, Flavor::Deformed};
  /// Any of cartan, ladder, serre, map, cz, q1_limit.
  std::vector<std::string> relations;
  int margin = 6;
};

struct BosonGrid {
  std::string realization;  ///< vdj or standard
  std::vector<Rational> q;
  int cutoff = 8;
};

struct SuiteConfig {
  std::vector<ModelGrid> models;
  std::vector<BosonGrid> bosons;
};

SuiteConfig parse_suite_config(const std::string& yaml_text);
SuiteConfig load_suite_config(const std::string& path);

struct SuiteResult {
  std::vector<RelationReport> reports;

  /// 0 when no report has a FAIL state, 1 otherwise.
  int exit_status() const;
  Json to_json() const;
};

/// Runs every check the config expands to. Reports come back in config
/// order whatever the thread count; threads = 0 reads QCRYS_THREADS and
/// falls back to the hardware concurrency.
SuiteResult run_suite(const SuiteConfig& config, unsigned threads = 0);

/// The single-model suite used by `verify` on the command line.
ModelGrid single_model_grid(const CrystalSpec& spec, const std::vector<Rational>& q, int margin, bool cz_only);

}  // namespace qcrys
