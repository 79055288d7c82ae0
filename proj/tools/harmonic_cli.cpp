// harmonic: harmonic-index toolkit.
//
//   harmonic compute [--in FILE] [--format graph6|edges]
//   harmonic extremal --n-max K [--json FILE]
//   harmonic verify [--claims LIST] [--seed U64] [--n-max K] [--random-samples N] [--json FILE]
//   harmonic gen FAMILY PARAMS...
//   harmonic enumerate trees|connected|random ARGS... [--out FILE]
//
// Exit codes: 0 success, 1 a verified claim failed, 2 usage or input error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "harmonic/constructions.hpp"
#include "harmonic/enumerate.hpp"
#include "harmonic/graph6.hpp"
#include "harmonic/report.hpp"
#include "harmonic/verify.hpp"

namespace {

using namespace harmonic;

constexpr int kExitClaimFailed = 1;
constexpr int kExitInputError = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// One graph6 string per line; blank lines and a leading >>graph6<< are ignored.
std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    std::string text = trim(line);
    if (text.rfind(">>graph6<<", 0) == 0) text = text.substr(10);
    if (text.empty()) continue;
    try {
      out.push_back(parse_graph6(text));
    } catch (const ParseError& e) {
      throw InputError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

// Blocks separated by blank lines; first line of a block is n, then "u v" per
// edge. '#' starts a comment.
std::vector<Graph> read_edge_list_stream(std::istream& in) {
  std::vector<Graph> out;
  std::optional<Graph> current;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string text = trim(line);
    if (text.empty()) {
      if (current) out.push_back(std::move(*current));
      current.reset();
      continue;
    }
    std::istringstream fields(text);
    const auto fail = [&](const std::string& why) {
      return InputError("line " + std::to_string(lineno) + ": " + why);
    };
    if (!current) {
      int n = -1;
      std::string extra;
      if (!(fields >> n) || n < 0 || (fields >> extra)) throw fail("expected a vertex count");
      current.emplace(n);
      continue;
    }
    int u = -1;
    int v = -1;
    std::string extra;
    if (!(fields >> u >> v) || (fields >> extra)) throw fail("expected an edge 'u v'");
    try {
      current->add_edge(u, v);
    } catch (const GraphError& e) {
      throw fail(e.what());
    }
  }
  if (current) out.push_back(std::move(*current));
  return out;
}

void write_json(const std::string& path, const nlohmann::json& doc) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << doc.dump(2) << '\n';
}

int cmd_compute(const std::string& in_path, const std::string& format) {
  std::vector<Graph> graphs;
  auto read = [&](std::istream& in) {
    graphs = format == "edges" ? read_edge_list_stream(in) : read_graph6_stream(in);
  };
  if (in_path.empty() || in_path == "-") {
    read(std::cin);
  } else {
    std::ifstream in(in_path);
    if (!in) throw InputError("cannot open " + in_path);
    read(in);
  }
  for (const Graph& g : graphs) std::cout << graph_report(g).dump() << '\n';
  return 0;
}

int cmd_extremal(int n_max, const std::string& json_path) {
  const auto records = extremal_trees(n_max);
  for (const auto& r : records) {
    std::cout << "n=" << r.n << ' ' << to_string(r.rank) << " H=" << r.value.str() << " ("
              << r.value.decimal() << ") attained by " << r.attaining_set.size() << ":";
    for (const auto& g6 : r.attaining_set) std::cout << ' ' << g6;
    std::cout << '\n';
  }
  if (!json_path.empty()) write_json(json_path, extremal_report(records));
  return 0;
}

int cmd_verify(const std::string& claims_arg, const VerifyOptions& options,
               const std::string& json_path) {
  std::vector<ClaimId> claims;
  if (claims_arg.empty() || claims_arg == "all") {
    claims.assign(all_claims().begin(), all_claims().end());
  } else {
    std::stringstream list(claims_arg);
    std::string name;
    while (std::getline(list, name, ',')) {
      const auto id = parse_claim_id(trim(name));
      if (!id) throw InputError("unknown claim id '" + name + "'");
      claims.push_back(*id);
    }
  }
  const auto results = run_claims(claims, options);
  bool all_passed = true;
  for (const auto& r : results) {
    all_passed = all_passed && r.passed;
    std::cout << (r.passed ? "PASS " : "FAIL ") << to_string(r.claim) << "  instances=" << r.instances
              << " violations=" << r.violations << " elapsed_ms=" << static_cast<long>(r.elapsed_ms)
              << "\n     universe: " << r.universe << '\n';
    if (r.counterexample) {
      std::cout << "     counterexample: " << r.counterexample->graph6 << "  "
                << r.counterexample->detail << '\n';
    }
  }
  for (const auto& e : errata()) std::cout << "warning " << e.id << ": " << e.note << '\n';
  if (!json_path.empty()) write_json(json_path, verification_report(results));
  return all_passed ? 0 : kExitClaimFailed;
}

int cmd_gen(const std::string& family, const std::vector<int>& params) {
  auto arity = [&](std::size_t k) {
    if (params.size() != k) {
      throw InputError(family + " takes " + std::to_string(k) + " parameter(s)");
    }
  };
  std::vector<Graph> out;
  if (family == "path" || family == "star") {
    if (params.empty()) throw InputError(family + " needs at least one order");
    for (int n : params) out.push_back(family == "path" ? path(n) : star(n));
  } else if (family == "complete_bipartite") {
    arity(2);
    out.push_back(complete_bipartite(params[0], params[1]));
  } else if (family == "spider") {
    arity(3);
    out.push_back(spider(SpiderSpec::make(params[0], params[1], params[2])));
  } else {
    throw InputError("unknown family '" + family + "'");
  }
  for (const Graph& g : out) std::cout << to_graph6(g) << '\n';
  return 0;
}

int cmd_enumerate(const std::string& kind, const std::vector<int>& args, std::uint64_t seed,
                  std::size_t count, const std::string& out_path) {
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw InputError("cannot write " + out_path);
  }
  std::ostream& out = out_path.empty() ? std::cout : file;
  if (kind == "trees" || kind == "connected") {
    if (args.size() != 1) throw InputError(kind + " takes one order");
    if (kind == "trees") {
      FreeTreeStream stream(args[0]);
      while (auto g = stream.next()) out << to_graph6(*g) << '\n';
    } else {
      ConnectedGraphStream stream(args[0]);
      while (auto g = stream.next()) out << to_graph6(*g) << '\n';
    }
  } else if (kind == "random") {
    if (args.size() != 2) throw InputError("random takes an order and an edge count");
    Xorshift64Star master(Seed{seed});
    for (std::size_t i = 0; i < count; ++i) {
      out << to_graph6(random_connected_graph(args[0], args[1], Seed{master.next()})) << '\n';
    }
  } else {
    throw InputError("unknown stream '" + kind + "'");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Harmonic, Randić and Zagreb indices with exact verification of extremal claims"};
  app.require_subcommand(1);

  std::string in_path;
  std::string format = "graph6";
  auto* compute = app.add_subcommand("compute", "Indices and bound reports for each input graph (JSON lines)");
  compute->add_option("--in", in_path, "Input file ('-' or omitted: stdin)");
  compute->add_option("--format", format, "Input format")
      ->check(CLI::IsMember({"graph6", "edges"}));

  int extremal_n_max = 12;
  std::string extremal_json;
  auto* extremal = app.add_subcommand("extremal", "Min, max and second-max trees by harmonic index");
  extremal->add_option("--n-max", extremal_n_max, "Largest tree order")->required()->check(CLI::Range(3, 14));
  extremal->add_option("--json", extremal_json, "Write a JSON report");

  VerifyOptions opts;
  std::string claims_arg;
  std::string verify_json;
  auto* verify = app.add_subcommand("verify", "Run the claim-verification suite");
  verify->add_option("--claims", claims_arg, "Comma-separated claim ids (default: all)");
  verify->add_option("--seed", opts.seed.value, "Seed for the random universe");
  verify->add_option("--n-max", opts.tree_n_max, "Largest tree order")->check(CLI::Range(3, 14));
  verify->add_option("--random-samples", opts.random_samples, "Random connected graphs");
  verify->add_option("--lemma-n-max", opts.lemma_n_max, "Edge-removal exhaustive order")->check(CLI::Range(3, 7));
  verify->add_option("--shift-base-n-max", opts.shift_base_n_max, "Path-shift base order")->check(CLI::Range(2, 7));
  verify->add_option("--shift-path-max", opts.shift_path_max, "Longest attached path")->check(CLI::Range(1, 8));
  verify->add_option("--bipartite-n-max", opts.bipartite_n_max, "2m/n sweep order")->check(CLI::Range(2, 7));
  verify->add_option("--cs-n-max", opts.cs_n_max, "Cauchy-Schwarz sweep order")->check(CLI::Range(2, 7));
  verify->add_option("--threads", opts.threads, "Worker threads (0: all cores)");
  verify->add_flag("--mutant", opts.mutant, "Invert every checked inequality (harness self-test)");
  verify->add_option("--json", verify_json, "Write a JSON report");

  std::string family;
  std::vector<int> gen_params;
  auto* gen = app.add_subcommand("gen", "Emit a graph family as graph6");
  gen->add_option("family", family, "path | star | complete_bipartite | spider")->required();
  gen->add_option("params", gen_params, "Family parameters");

  std::string stream_kind;
  std::vector<int> stream_args;
  std::uint64_t stream_seed = 1;
  std::size_t stream_count = 1;
  std::string stream_out;
  auto* enumerate = app.add_subcommand("enumerate", "Stream graphs as graph6 lines");
  enumerate->add_option("kind", stream_kind, "trees N | connected N | random N M")->required();
  enumerate->add_option("args", stream_args, "Order (and edge count for random)");
  enumerate->add_option("--seed", stream_seed, "Seed for random");
  enumerate->add_option("--count", stream_count, "Number of random graphs");
  enumerate->add_option("--out", stream_out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  try {
    if (*compute) return cmd_compute(in_path, format);
    if (*extremal) return cmd_extremal(extremal_n_max, extremal_json);
    if (*verify) return cmd_verify(claims_arg, opts, verify_json);
    if (*gen) return cmd_gen(family, gen_params);
    if (*enumerate) return cmd_enumerate(stream_kind, stream_args, stream_seed, stream_count, stream_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return 0;
}
