#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "qcrys/qnumbers.hpp"
#include "qcrys/rep_export.hpp"
#include "qcrys/suite.hpp"

namespace qcrys {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SpecFlags {
  std::string type = "A";
  int n = 2;
  int lambda = 0;
  int cap = -1;

  void attach(CLI::App* cmd) {
    cmd->add_option("--type", type, "Algebra type, A or C")->capture_default_str();
    cmd->add_option("--n", n, "Rank n")->capture_default_str();
    cmd->add_option("--lambda", lambda, "Highest weight Lambda")->capture_default_str();
    cmd->add_option("--cap", cap, "Truncation cap for type C (default lambda + 10)");
  }

  CrystalSpec spec() const {
    CrystalSpec s;
    try {
      s.type = parse_algebra_type(type);
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
    s.n = n;
    s.lambda = lambda;
    if (s.type == AlgebraType::A && cap >= 0) throw UsageError("--cap only applies to type C");
    s.cap = s.type == AlgebraType::C ? (cap >= 0 ? cap : lambda + 10) : -1;
    return s;
  }

  CrystalModel model() const {
    try {
      return build_model(spec());
    } catch (const std::domain_error& e) {
      throw UsageError(e.what());
    }
  }
};

Rational positive_rational(const std::string& text) {
  Rational q;
  try {
    q = parse_rational(text);
  } catch (const std::exception&) {
    throw UsageError("not a rational: '" + text + "'");
  }
  if (q <= 0) throw UsageError("q must be positive, got " + text);
  return q;
}

std::vector<Rational> rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) out.push_back(positive_rational(item));
  if (out.empty()) throw UsageError("empty q list");
  return out;
}

// Writes to a sibling temporary and renames it over the target, so a failed
// run never leaves a partial file behind.
void write_atomically(const std::string& path, const std::string& text) {
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw UsageError("cannot write " + path);
    f << text;
    f.close();
    if (!f) {
      std::filesystem::remove(tmp);
      throw UsageError("cannot write " + path);
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw UsageError("cannot write " + path + ": " + ec.message());
  }
}

void emit(const std::string& text, const std::string& output, std::ostream& out) {
  if (output.empty())
    out << text;
  else
    write_atomically(output, text);
}

int cmd_identity(int a, int z, bool classical, std::ostream& out) {
  bool holds = false;
  try {
    holds = check_serre_identity(a, z, classical ? IdentityScope::ClassicalLimit : IdentityScope::AllQ);
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
  out << "identity a=" << a << " z=" << z << " scope=" << (classical ? "q=1" : "all-q") << ": "
      << (holds ? "PASS" : "FAIL") << "\n";
  return holds ? 0 : 1;
}

int cmd_crystal(const SpecFlags& flags, const std::string& format, const std::string& output, std::ostream& out) {
  const CrystalModel m = flags.model();
  if (format == "json")
    emit(export_graph_json(m), output, out);
  else if (format == "dot")
    emit(export_graph_dot(m), output, out);
  else
    throw UsageError("crystal formats are json and dot");
  return 0;
}

int cmd_rep(const SpecFlags& flags, int node, const std::string& which, const std::string& q_text,
            const std::string& format, const std::string& output, std::ostream& out) {
  const CrystalModel m = flags.model();
  if (node < 1 || node > m.num_nodes())
    throw UsageError("--node must be in 1.." + std::to_string(m.num_nodes()));
  const Rational q = positive_rational(q_text);
  LinOp raise, lower;
  if (which == "hat") {
    raise = op_hat(m, node, Sign::Plus);
    lower = op_hat(m, node, Sign::Minus);
  } else if (which == "classical") {
    raise = op_E_classical(m, node, Sign::Plus);
    lower = op_E_classical(m, node, Sign::Minus);
  } else if (which == "deformed") {
    raise = op_e_deformed(m, node, Sign::Plus, q);
    lower = op_e_deformed(m, node, Sign::Minus, q);
  } else {
    throw UsageError("--which must be hat, classical or deformed");
  }
  if (format == "csv") {
    emit(entries_to_csv(raise, "+") + entries_to_csv(lower, "-"), output, out);
  } else if (format == "json") {
    Json j;
    j["spec"] = spec_to_json(m.spec());
    j["node"] = node;
    j["which"] = which;
    if (which == "deformed") j["q"] = to_string(q);
    j["states"] = Json::array();
    for (const auto& s : m.states()) j["states"].push_back(state_to_json(s));
    j["raise"] = entries_to_json(raise);
    j["lower"] = entries_to_json(lower);
    emit(j.dump(2) + "\n", output, out);
  } else {
    throw UsageError("rep formats are json and csv");
  }
  return 0;
}

int run_and_report(const SuiteConfig& cfg, const std::string& output, std::ostream& out) {
  const SuiteResult result = run_suite(cfg);
  const Json j = result.to_json();
  emit(j.dump(2) + "\n", output, out);
  if (!output.empty()) {
    const auto& s = j["summary"];
    out << "reports " << s["reports"] << ", failed " << s["failed_reports"] << " (pass " << s["pass"] << ", fail "
        << s["fail"] << ", boundary " << s["boundary"] << ")\n";
  }
  return result.exit_status();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of q-deformed crystal representations", "qcrys"};
  app.require_subcommand(1);

  int id_a = 1, id_z = 1;
  bool id_classical = false;
  auto* identity = app.add_subcommand("identity", "Check the q-Serre bracket identity for (a, z)");
  identity->add_option("--a", id_a, "a >= 1")->required();
  identity->add_option("--z", id_z, "z")->required();
  identity->add_flag("--classical", id_classical, "Check at q = 1 only");

  SpecFlags crystal_flags;
  std::string crystal_format = "json", crystal_out;
  auto* crystal = app.add_subcommand("crystal", "Export the crystal graph");
  crystal_flags.attach(crystal);
  crystal->add_option("--format", crystal_format, "json or dot")->capture_default_str();
  crystal->add_option("-o,--output", crystal_out, "Output file (default stdout)");

  SpecFlags rep_flags;
  int rep_node = 1;
  std::string rep_which = "classical", rep_q = "1", rep_format = "json", rep_out;
  auto* rep = app.add_subcommand("rep", "Export a generator pair of one node");
  rep_flags.attach(rep);
  rep->add_option("--node", rep_node, "Dynkin node, 1-based")->capture_default_str();
  rep->add_option("--which", rep_which, "hat, classical or deformed")->capture_default_str();
  rep->add_option("--q", rep_q, "Deformation parameter p/s")->capture_default_str();
  rep->add_option("--format", rep_format, "json or csv")->capture_default_str();
  rep->add_option("-o,--output", rep_out, "Output file (default stdout)");

  SpecFlags verify_flags;
  int verify_margin = 6;
  bool verify_cz = false;
  std::string verify_q = "1,2,1/2,3/5", verify_config, verify_out;
  auto* verify = app.add_subcommand("verify", "Verify the defining relations on one model or a config grid");
  verify_flags.attach(verify);
  verify->add_option("--margin", verify_margin, "Cap margin for BOUNDARY states")->capture_default_str();
  verify->add_option("--q", verify_q, "Comma-separated q values")->capture_default_str();
  verify->add_flag("--cz", verify_cz, "Check the sl(2) Curtright-Zachos map and Casimir only");
  auto* config_opt = verify->add_option("--config", verify_config, "YAML suite config");
  for (const char* flag : {"--type", "--n", "--lambda", "--cap", "--margin", "--q", "--cz"})
    config_opt->excludes(verify->get_option(flag));
  verify->add_option("-o,--output", verify_out, "Report file (default stdout)");

  std::string boson_real = "vdj", boson_q = "1,2,3/2", boson_out;
  int boson_cutoff = 8;
  auto* boson = app.add_subcommand("boson", "Check an so_q(3) boson realization");
  boson->add_option("--realization", boson_real, "vdj or standard")->capture_default_str();
  boson->add_option("--q", boson_q, "Comma-separated q values")->capture_default_str();
  boson->add_option("--cutoff", boson_cutoff, "Total boson number cutoff")->capture_default_str();
  boson->add_option("-o,--output", boson_out, "Report file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (*identity) return cmd_identity(id_a, id_z, id_classical, out);
    if (*crystal) return cmd_crystal(crystal_flags, crystal_format, crystal_out, out);
    if (*rep) return cmd_rep(rep_flags, rep_node, rep_which, rep_q, rep_format, rep_out, out);
    if (*verify) {
      SuiteConfig cfg;
      if (!verify_config.empty()) {
        cfg = load_suite_config(verify_config);
      } else {
        const CrystalModel m = verify_flags.model();
        if (verify_margin < 0) throw UsageError("--margin must be >= 0");
        if (verify_cz && (m.type() != AlgebraType::A || m.rank() != 2)) throw UsageError("--cz needs --type A --n 2");
        cfg.models.push_back(single_model_grid(m.spec(), rational_list(verify_q), verify_margin, verify_cz));
      }
      return run_and_report(cfg, verify_out, out);
    }
    if (*boson) {
      if (boson_real != "vdj" && boson_real != "standard") throw UsageError("--realization must be vdj or standard");
      if (boson_cutoff < 0) throw UsageError("--cutoff must be >= 0");
      SuiteConfig cfg;
      cfg.bosons.push_back({boson_real, rational_list(boson_q), boson_cutoff});
      return run_and_report(cfg, boson_out, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace qcrys
