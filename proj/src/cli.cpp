#include "chromsym/cli.hpp"

#include "chromsym/classifier.hpp"
#include "chromsym/error.hpp"
#include "chromsym/json_io.hpp"
#include "chromsym/oracle.hpp"
#include "chromsym/schur.hpp"
#include "chromsym/sequences.hpp"
#include "chromsym/tabloid.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

namespace chromsym {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string multipartite;
  std::string poset_path;
  std::string graph_path;
  std::string format = "json";
  std::string route = "auto";
  std::string lambda;
  std::string shape;
  std::string verify;
  std::string mode = "full";
  std::string output;
  int max_vertices = kDefaultScanCap;
  long long max_tabloids = 100000;
  int max_n = 6;
  bool tail_only = false;
};

int env_max_vertices() {
  if (const char* env = std::getenv("CHROMSYM_MAX_VERTICES")) {
    try {
      const int value = std::stoi(env);
      if (value > 0) return value;
    } catch (const std::exception&) {
    }
  }
  return kDefaultScanCap;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw UsageError("invalid JSON in '" + path + "': " + e.what());
  }
}

bool has_graph_spec(const RunConfig& cfg) {
  return !cfg.multipartite.empty() || !cfg.poset_path.empty() || !cfg.graph_path.empty();
}

Instance load_instance(const RunConfig& cfg) {
  const int specs = !cfg.multipartite.empty() + !cfg.poset_path.empty() + !cfg.graph_path.empty();
  if (specs != 1) throw UsageError("exactly one of --multipartite, --poset, --graph is required");
  if (!cfg.multipartite.empty()) {
    Partition lambda = parse_partition(cfg.multipartite);
    if (lambda.n() > cfg.max_vertices) {
      throw UsageError("--multipartite: " + std::to_string(lambda.n()) + " vertices exceed --max-vertices " +
                       std::to_string(cfg.max_vertices));
    }
    return Instance::from_multipartite(lambda);
  }
  Json j = read_json_file(cfg.poset_path.empty() ? cfg.graph_path : cfg.poset_path);
  Instance instance = instance_from_json(j);
  if (instance.size() > cfg.max_vertices) {
    throw UsageError(std::string(cfg.poset_path.empty() ? "--graph" : "--poset") + ": " +
                     std::to_string(instance.size()) + " vertices exceed --max-vertices " +
                     std::to_string(cfg.max_vertices));
  }
  return instance;
}

Partition required_partition(const std::string& text, const char* flag) {
  if (text.empty()) throw UsageError(std::string(flag) + " is required");
  return parse_partition(text);
}

std::vector<std::string> vertex_labels(const Instance& instance) {
  if (instance.poset) return instance.poset->labels();
  std::vector<std::string> labels;
  for (int v = 0; v < instance.size(); ++v) labels.push_back(std::to_string(v));
  return labels;
}

int cmd_expand(const RunConfig& cfg, std::ostream& out) {
  const Instance instance = load_instance(cfg);
  const SymFunc f = expand_schur(instance, parse_route(cfg.route));
  if (cfg.format == "json") {
    out << chromsym::to_json(f, chromsym::to_json(instance)).dump() << '\n';
  } else if (cfg.format == "csv") {
    out << to_csv(f);
  } else {
    for (const auto& [lambda, c] : f.terms()) out << "s" << lambda.to_string() << "  " << to_decimal(c) << '\n';
  }
  return kExitOk;
}

int cmd_coeff(const RunConfig& cfg, std::ostream& out) {
  const Instance instance = load_instance(cfg);
  const Partition lambda = required_partition(cfg.lambda, "--lambda");
  const CoeffReport report = coefficient(instance, lambda, parse_route(cfg.route));
  if (cfg.format == "csv") {
    out << "partition;value\n" << cfg.lambda << ';' << to_decimal(report.value) << '\n';
  } else {
    out << to_json(report).dump() << '\n';
  }
  return kExitOk;
}

int cmd_classify(const RunConfig& cfg, const std::string& verify_mode, std::ostream& out) {
  const Partition lambda = required_partition(cfg.lambda, "--lambda");
  if (verify_mode.empty()) {
    out << to_json(classify(lambda, cfg.max_vertices)).dump() << '\n';
    return kExitOk;
  }
  VerifyMode mode;
  if (verify_mode == "witness") {
    mode = VerifyMode::Witness;
  } else if (verify_mode == "full" || verify_mode == "full_scan") {
    mode = VerifyMode::FullScan;
    if (lambda.n() > cfg.max_vertices) {
      throw UsageError("full scan on " + std::to_string(lambda.n()) + " vertices exceeds --max-vertices " +
                       std::to_string(cfg.max_vertices));
    }
  } else {
    throw UsageError("unknown verification mode '" + verify_mode + "'");
  }
  const auto report = verify_classification(lambda, mode, cfg.max_vertices);
  out << to_json(report).dump() << '\n';
  return report.verified ? kExitOk : kExitVerifyFailed;
}

int cmd_tabloids(const RunConfig& cfg, std::ostream& out) {
  const Partition shape = required_partition(cfg.shape, "--shape");
  std::vector<std::string> rendered;
  auto push = [&](std::string text) {
    if (static_cast<long long>(rendered.size()) >= cfg.max_tabloids) {
      throw UsageError("more than --max-tabloids " + std::to_string(cfg.max_tabloids) + " tabloids");
    }
    rendered.push_back(std::move(text));
  };
  const bool ascii = cfg.format == "ascii";
  if (!has_graph_spec(cfg)) {
    if (shape.n() > cfg.max_vertices) {
      throw UsageError("--shape: " + std::to_string(shape.n()) + " cells exceed --max-vertices");
    }
    for (const auto& t : enumerate_srh_tabloids(shape)) push(ascii ? render_ascii(t) : to_json(t).dump());
  } else {
    const Instance instance = load_instance(cfg);
    if (cfg.tail_only && !instance.poset) throw UsageError("--tail-only needs --multipartite or --poset");
    const auto labels = vertex_labels(instance);
    for_each_srh_g_tabloid(
        instance.graph, instance.order(), shape,
        [&](const SRHGTabloid& t) { push(ascii ? render_ascii(t, labels) : chromsym::to_json(t, labels).dump()); },
        cfg.tail_only ? TailFilter::NonIncreasing : TailFilter::All);
  }
  if (ascii) {
    for (std::size_t i = 0; i < rendered.size(); ++i) out << '#' << (i + 1) << ' ' << rendered[i] << '\n';
    out << rendered.size() << " tabloids\n";
  } else {
    out << '[';
    for (std::size_t i = 0; i < rendered.size(); ++i) out << (i ? "," : "") << rendered[i];
    out << "]\n";
  }
  return kExitOk;
}

int cmd_nsp(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.poset_path.empty()) {
    const Instance instance = instance_from_json(read_json_file(cfg.poset_path));
    if (!instance.poset) throw UsageError("--poset file has no covers");
    if (instance.size() > kDefaultBruteforceCap) {
      throw UsageError("brute-force count is capped at " + std::to_string(kDefaultBruteforceCap) + " elements");
    }
    out << to_decimal(nsp_bruteforce(*instance.poset)) << '\n';
    return kExitOk;
  }
  if (cfg.lambda.empty() && cfg.multipartite.empty()) throw UsageError("--lambda or --poset is required");
  out << to_decimal(nsp_chain_union(parse_partition(cfg.lambda.empty() ? cfg.multipartite : cfg.lambda))) << '\n';
  return kExitOk;
}

struct CheckRow {
  std::string name;
  int n;
  bool pass;
  std::string note;
};

int cmd_oracle_check(const RunConfig& cfg, std::ostream& out) {
  if (cfg.max_n > cfg.max_vertices || cfg.max_n < 1) {
    throw UsageError("--max-n must lie in 1.." + std::to_string(cfg.max_vertices));
  }
  std::vector<CheckRow> rows;
  for (int n = 1; n <= cfg.max_n; ++n) {
    const auto parts = all_partitions(n);

    bool unitriangular = true;
    const KostkaMatrix k = kostka_matrix(n);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (k.entries[i][i] != 1) unitriangular = false;
      for (std::size_t j = 0; j < parts.size(); ++j) {
        if (!dominates(parts[i], parts[j]) && kostka(parts[i], parts[j]) != 0) unitriangular = false;
      }
    }
    rows.push_back({"kostka-unitriangular", n, unitriangular, ""});

    // Inverse of K by substitution, compared with signed tabloid counts.
    bool inverse_ok = true;
    for (std::size_t col = 0; col < parts.size(); ++col) {
      // Row `col` of K^{-1}, from Kinv K = I.
      std::vector<BigInt> inv_row(parts.size(), 0);
      for (std::size_t nu = 0; nu < parts.size(); ++nu) {
        BigInt value = nu == col ? 1 : 0;
        for (std::size_t l = 0; l < nu; ++l) value -= inv_row[l] * k.entries[l][nu];
        inv_row[nu] = value;
      }
      for (std::size_t l = 0; l < parts.size(); ++l) {
        if (inv_row[l] != signed_tabloid_count(parts[l], parts[col])) inverse_ok = false;
      }
    }
    rows.push_back({"inverse-kostka-tabloids", n, inverse_ok, ""});

    bool routes_ok = true;
    bool specialization_ok = true;
    std::string note;
    for (const auto& lambda : parts) {
      const Instance instance = Instance::from_multipartite(lambda);
      const SymFunc oracle = expand_schur(instance, Route::Oracle);
      for (Route r : {Route::WW, Route::Tabloid, Route::Tail}) {
        if (expand_schur(instance, r) != oracle) {
          routes_ok = false;
          note = "K_" + lambda.to_string() + " route " + std::string(to_string(r));
        }
      }
      if (closed_family(lambda) && expand_schur(instance, Route::Closed) != oracle) {
        routes_ok = false;
        note = "K_" + lambda.to_string() + " closed form";
      }
      for (int q = 0; q <= 4; ++q) {
        if (evaluate_at_ones(oracle, q) != coloring_count(instance.graph, q)) specialization_ok = false;
      }
    }
    rows.push_back({"route-equivalence", n, routes_ok, note});
    rows.push_back({"specialization", n, specialization_ok, ""});
  }

  bool all = true;
  out << "check                      n  status\n";
  for (const auto& row : rows) {
    std::string name = row.name;
    name.resize(26, ' ');
    out << name << ' ' << row.n << "  " << (row.pass ? "PASS" : "FAIL");
    if (!row.note.empty()) out << "  " << row.note;
    out << '\n';
    all = all && row.pass;
  }
  return all ? kExitOk : kExitVerifyFailed;
}

void add_graph_flags(CLI::App* cmd, RunConfig& cfg) {
  auto* mp = cmd->add_option("--multipartite", cfg.multipartite, "complete multipartite K_lambda, e.g. 3,2,2");
  auto* po = cmd->add_option("--poset", cfg.poset_path, "poset JSON file; the graph is its incomparability graph");
  auto* gr = cmd->add_option("--graph", cfg.graph_path, "graph JSON file");
  mp->excludes(po)->excludes(gr);
  po->excludes(gr);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  cfg.max_vertices = env_max_vertices();

  CLI::App app{"Schur expansions of chromatic symmetric functions", "chromsym"};
  app.require_subcommand(1);
  app.add_option("--max-vertices", cfg.max_vertices, "vertex cap (env CHROMSYM_MAX_VERTICES)")
      ->check(CLI::PositiveNumber);
  app.add_option("-o,--output", cfg.output, "write output to this file");

  auto* expand = app.add_subcommand("expand", "full Schur expansion");
  add_graph_flags(expand, cfg);
  expand->add_option("--route", cfg.route, "auto|ww|tabloid|tail|closed|oracle");
  expand->add_option("--format", cfg.format, "json|csv|ascii")->check(CLI::IsMember({"json", "csv", "ascii"}));

  auto* coeff = app.add_subcommand("coeff", "one Schur coefficient");
  add_graph_flags(coeff, cfg);
  coeff->add_option("--lambda", cfg.lambda, "partition indexing the coefficient")->required();
  coeff->add_option("--route", cfg.route, "auto|ww|tabloid|tail|closed|oracle");
  coeff->add_option("--format", cfg.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));

  auto* classify_cmd = app.add_subcommand("classify", "Schur-positivity verdict for K_lambda");
  classify_cmd->add_option("--lambda", cfg.lambda, "sides of K_lambda")->required();
  classify_cmd->add_option("--verify", cfg.verify, "witness|full");

  auto* verify = app.add_subcommand("verify", "verify a classification verdict");
  verify->add_option("--lambda", cfg.lambda, "sides of K_lambda")->required();
  verify->add_option("--mode", cfg.mode, "witness|full");

  auto* tabloids = app.add_subcommand("tabloids", "list SRH tabloids or SRH G-tabloids");
  tabloids->add_option("--shape", cfg.shape, "partition shape")->required();
  add_graph_flags(tabloids, cfg);
  tabloids->add_flag("--tail-only", cfg.tail_only, "keep G-tabloids with a non-increasing tail sequence");
  tabloids->add_option("--max-tabloids", cfg.max_tabloids, "stop with an error beyond this many")
      ->check(CLI::PositiveNumber);
  tabloids->add_option("--format", cfg.format, "json|ascii")->check(CLI::IsMember({"json", "ascii"}));

  auto* nsp = app.add_subcommand("nsp", "count spanning non-increasing sequences");
  nsp->add_option("--lambda", cfg.lambda, "chain lengths");
  nsp->add_option("--poset", cfg.poset_path, "poset JSON file (brute force)");

  auto* oracle = app.add_subcommand("oracle-check", "cross-validate every route against the oracle");
  oracle->add_option("--max-n", cfg.max_n, "largest vertex count checked");

  // CLI11 consumes arguments back to front; drop the program name.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::ostringstream buffer;
  int code = kExitOk;
  try {
    if (*expand) {
      code = cmd_expand(cfg, buffer);
    } else if (*coeff) {
      code = cmd_coeff(cfg, buffer);
    } else if (*classify_cmd) {
      code = cmd_classify(cfg, cfg.verify, buffer);
    } else if (*verify) {
      code = cmd_classify(cfg, cfg.mode, buffer);
    } else if (*tabloids) {
      code = cmd_tabloids(cfg, buffer);
    } else if (*nsp) {
      code = cmd_nsp(cfg, buffer);
    } else if (*oracle) {
      code = cmd_oracle_check(cfg, buffer);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (cfg.output.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(cfg.output);
    if (!file) {
      err << "error: cannot write '" << cfg.output << "'\n";
      return kExitUsage;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace chromsym
