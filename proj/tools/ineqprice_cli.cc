#include <chrono>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ineqprice/approx.h"
#include "ineqprice/errors.h"
#include "ineqprice/exact.h"
#include "ineqprice/generators.h"
#include "ineqprice/instance.h"
#include "ineqprice/instance_io.h"
#include "ineqprice/reductions.h"
#include "ineqprice/reductions_io.h"
#include "ineqprice/table.h"

namespace fs = std::filesystem;
using nlohmann::ordered_json;
using namespace ineqprice;

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;
constexpr int kExitSizeLimit = 3;

void emit(const ordered_json& doc, bool pretty) {
  std::cout << (pretty ? doc.dump(2) : doc.dump()) << "\n";
}

void emit_text(const std::string& text, const std::optional<std::string>& out) {
  if (out) {
    write_file(*out, text);
  } else {
    std::cout << text;
  }
}

// ---------------------------------------------------------------------------
// solve

struct SolveFlags {
  std::string in;
  std::string batch;
  std::string algo = "vc";
  bool oracle = false;
  int node_limit = kDefaultNodeLimit;
  std::string out;
  bool pretty = false;
};

Solution run_algorithm(const Instance& inst, const std::string& algo,
                       int node_limit) {
  if (algo == "single-price") return single_price_best(inst);
  if (algo == "vc") return alg_two_prices(inst);
  if (algo == "general") return alg_general_k(inst);
  return brute_force_opt(inst, node_limit);
}

ordered_json solve_one(const std::string& path, const SolveFlags& flags,
                       PriceVector* written) {
  const auto start = std::chrono::steady_clock::now();
  const Instance original = parse_instance(read_file(path));
  const Normalization norm = normalize_with_map(original);
  const Instance& inst = norm.instance;

  const Solution sol = run_algorithm(inst, flags.algo, flags.node_limit);
  std::optional<Revenue> opt;
  if (flags.oracle) opt = brute_force_opt(inst, flags.node_limit).revenue;
  const RatioReport report = ratio_report(inst, sol, opt);
  const auto elapsed = std::chrono::duration<double, std::milli>(
      std::chrono::steady_clock::now() - start);

  ordered_json doc;
  doc["instance"] = path;
  doc["n"] = original.num_nodes();
  doc["m"] = original.num_edges();
  doc["k"] = original.prices().size();
  doc["algorithm"] = flags.algo;
  doc["revenue"] = sol.revenue;
  if (opt) {
    doc["opt"] = *opt;
    doc["ratio"] = to_double(report.achieved());
    doc["ratio_exact"] = to_string(report.achieved());
  }
  doc["guaranteed"] = to_string(report.guaranteed);
  doc["wall_time_ms"] = elapsed.count();
  if (written) *written = expand_to_original(norm, sol.prices, original.num_nodes());
  return doc;
}

int cmd_solve(const SolveFlags& flags) {
  if (flags.batch.empty()) {
    PriceVector pv;
    const ordered_json doc = solve_one(flags.in, flags, &pv);
    if (!flags.out.empty()) write_file(flags.out, serialize_price_vector(pv));
    emit(doc, flags.pretty);
    return 0;
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(flags.batch)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  ordered_json reports = ordered_json::array();
  int status = 0;
  for (const fs::path& file : files) {
    try {
      reports.push_back(solve_one(file.string(), flags, nullptr));
    } catch (const SizeLimitError& e) {
      reports.push_back({{"instance", file.string()}, {"error", e.what()}});
      status = std::max(status, kExitSizeLimit);
    } catch (const ValidationError& e) {
      reports.push_back({{"instance", file.string()}, {"error", e.what()}});
      status = std::max(status, kExitInput);
    }
  }
  emit(reports, flags.pretty);
  return status;
}

// ---------------------------------------------------------------------------
// gen

struct GenFlags {
  std::string family;
  int copies = 1;
  bool chain = false;
  int n = 0;
  int k = 0;
  std::string in;
  std::string prices = "1,2";
  std::string edge_prob = "1/2";
  Price alpha_max = 0;
  std::int64_t max_demand = 1;
  std::uint64_t seed = 0;
  std::string out;
};

int cmd_gen(const GenFlags& flags) {
  std::optional<Instance> inst;
  if (flags.family == "fig1") {
    inst = gen_fig1(flags.copies, flags.chain);
  } else if (flags.family == "clique-harmonic") {
    inst = gen_clique_harmonic(flags.n);
  } else if (flags.family == "clique-pk") {
    inst = gen_clique_pk(flags.k);
  } else if (flags.family == "nd-pinch") {
    if (flags.in.empty()) throw ValidationError("nd-pinch needs --in");
    inst = gen_nd_pinch(parse_instance(read_file(flags.in)));
  } else {
    RandomSpec spec;
    spec.n = flags.n;
    spec.prices = parse_price_spec(flags.prices);
    spec.edge_prob = parse_rational(flags.edge_prob);
    spec.alpha_max = flags.alpha_max;
    spec.max_demand = flags.max_demand;
    spec.seed = flags.seed;
    inst = gen_random(spec);
  }
  emit_text(serialize_instance(*inst),
            flags.out.empty() ? std::nullopt : std::optional(flags.out));
  return 0;
}

// ---------------------------------------------------------------------------
// reduce

struct ReduceFlags {
  std::string type;
  std::string in;
  std::optional<int> q;
  std::string r = "3/2";
  std::optional<Price> alpha;
  bool scaled = false;
  std::string epsilon = "1/2";
  std::int64_t size_cap = TncOptions{}.size_cap;
  std::string out;
  std::string sidecar;
  bool pretty = false;
};

int cmd_reduce(const ReduceFlags& flags) {
  const std::string text = read_file(flags.in);
  ordered_json summary;
  summary["reduction"] = flags.type;

  if (flags.type == "tc-to-tnc") {
    const TerminalGraph g = parse_terminal_graph(text);
    const SubdividedGraph h = tc_to_tnc(g);
    summary["nodes"] = h.graph.num_nodes;
    summary["edges"] = h.graph.edges.size();
    summary["terminals"] = h.graph.terminals;
    const std::string graph = serialize_terminal_graph(h.graph);
    const std::string side = serialize_subdivision(h);
    if (!flags.out.empty()) {
      write_file(flags.out, graph);
    } else {
      summary["graph"] = ordered_json::parse(graph);
    }
    if (!flags.sidecar.empty()) {
      write_file(flags.sidecar, side);
    } else if (flags.out.empty()) {
      summary["sidecar"] = ordered_json::parse(side);
    }
    emit(summary, flags.pretty);
    return 0;
  }

  std::optional<ReductionOutput> red;
  if (flags.type == "multi-demand") {
    red = multi_demand_reduce(parse_instance(text), flags.size_cap);
  } else {
    TerminalGraph g = parse_terminal_graph(text);
    if (flags.q) {
      g.budget = *flags.q;
      validate_terminal_graph(g);
    }
    if (flags.type == "apx") {
      red = apx_construct(g, parse_rational(flags.r));
    } else {
      TncOptions options;
      options.alpha = flags.alpha;
      options.scaled = flags.scaled;
      options.epsilon = parse_rational(flags.epsilon);
      options.size_cap = flags.size_cap;
      red = tnc_to_pricing(g, options);
    }
  }

  const std::string side = serialize_sidecar(flags.type, *red);
  const ordered_json side_json = ordered_json::parse(side);
  summary["nodes"] = red->instance.num_nodes();
  summary["edges"] = red->instance.num_edges();
  summary["k"] = red->instance.prices().size();
  summary["threshold"] = side_json["threshold"];
  summary["params"] = side_json["params"];
  if (!flags.out.empty()) {
    write_file(flags.out, serialize_instance(red->instance));
  } else {
    summary["instance"] = ordered_json::parse(serialize_instance(red->instance));
  }
  if (!flags.sidecar.empty()) {
    write_file(flags.sidecar, side);
  } else if (flags.out.empty()) {
    summary["sidecar"] = side_json;
  }
  emit(summary, flags.pretty);
  return 0;
}

// ---------------------------------------------------------------------------
// table

struct TableFlags {
  std::vector<std::string> prices;
  std::string alpha;
  std::string format = "csv";
  bool exact = false;
};

int cmd_table(const TableFlags& flags) {
  std::vector<TableRow> rows;
  if (flags.prices.empty() && flags.alpha.empty()) {
    rows = default_table();
  } else {
    std::vector<PriceSet> sets;
    for (const auto& spec : flags.prices) sets.push_back(parse_price_spec(spec));
    if (sets.empty()) {
      for (const TableRow& row : default_table()) {
        if (sets.empty() || !(sets.back() == row.prices)) {
          sets.push_back(row.prices);
        }
      }
    }
    std::vector<AlphaChoice> alphas;
    if (flags.alpha.empty()) {
      alphas = {AlphaChoice::parse("worst"), AlphaChoice::parse("zero")};
    } else {
      alphas = {AlphaChoice::parse(flags.alpha)};
    }
    for (const PriceSet& p : sets) {
      for (const AlphaChoice& a : alphas) rows.push_back(table_row(p, a));
    }
  }
  std::cout << (flags.format == "text" ? format_table_text(rows, flags.exact)
                                       : format_table_csv(rows, flags.exact));
  return 0;
}

// ---------------------------------------------------------------------------
// verify

int cmd_verify(const std::string& in, const std::string& pv_path) {
  const Instance inst = parse_instance(read_file(in));
  const PriceVector pv = parse_price_vector(read_file(pv_path), inst.num_nodes());
  if (auto bad = first_violation(inst, pv)) {
    ordered_json doc;
    doc["feasible"] = false;
    doc["edge"] = {bad->u, bad->v};
    doc["prices"] = {bad->price_u, bad->price_v};
    doc["alpha"] = {bad->alpha_uv, bad->alpha_vu};
    emit(doc, false);
    std::cerr << "edge (" << bad->u << "," << bad->v << ") violated: prices "
              << bad->price_u << " and " << bad->price_v << ", slacks "
              << bad->alpha_uv << " and " << bad->alpha_vu << "\n";
    return kExitViolation;
  }
  ordered_json doc;
  doc["feasible"] = true;
  doc["revenue"] = revenue(inst, pv);
  emit(doc, false);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pricing with inequity aversion: solvers, generators, reductions"};
  app.require_subcommand(1);

  SolveFlags solve;
  auto* sub_solve = app.add_subcommand("solve", "Run an algorithm on an instance");
  auto* solve_in = sub_solve->add_option("--in", solve.in, "Instance JSON")
                       ->check(CLI::ExistingFile);
  auto* solve_batch =
      sub_solve->add_option("--batch", solve.batch, "Solve every *.json in DIR")
          ->check(CLI::ExistingDirectory);
  solve_in->excludes(solve_batch);
  sub_solve->add_option("--algo", solve.algo)
      ->check(CLI::IsMember({"single-price", "vc", "general", "brute"}));
  sub_solve->add_flag("--oracle", solve.oracle, "Also run brute force");
  sub_solve->add_option("--node-limit", solve.node_limit)->check(CLI::PositiveNumber);
  sub_solve->add_option("--out", solve.out, "Write the price vector here");
  sub_solve->add_flag("--pretty", solve.pretty);

  GenFlags gen;
  auto* sub_gen = app.add_subcommand("gen", "Generate an instance");
  sub_gen->add_option("--family", gen.family)
      ->required()
      ->check(CLI::IsMember({"fig1", "clique-harmonic", "clique-pk", "nd-pinch", "random"}));
  sub_gen->add_option("--copies", gen.copies);
  sub_gen->add_flag("--chain", gen.chain);
  sub_gen->add_option("--n", gen.n);
  sub_gen->add_option("--k", gen.k);
  sub_gen->add_option("--in", gen.in)->check(CLI::ExistingFile);
  sub_gen->add_option("--prices", gen.prices);
  sub_gen->add_option("--edge-prob", gen.edge_prob);
  sub_gen->add_option("--alpha-max", gen.alpha_max);
  sub_gen->add_option("--max-demand", gen.max_demand);
  sub_gen->add_option("--seed", gen.seed);
  sub_gen->add_option("--out", gen.out);

  ReduceFlags reduce;
  auto* sub_reduce = app.add_subcommand("reduce", "Build a reduction instance");
  sub_reduce->add_option("--type", reduce.type)
      ->required()
      ->check(CLI::IsMember({"multi-demand", "tc-to-tnc", "tnc-to-pricing", "apx"}));
  sub_reduce->add_option("--in", reduce.in)->required()->check(CLI::ExistingFile);
  sub_reduce->add_option("--q", reduce.q);
  sub_reduce->add_option("--r", reduce.r);
  sub_reduce->add_option("--alpha", reduce.alpha);
  sub_reduce->add_flag("--scaled", reduce.scaled);
  sub_reduce->add_option("--epsilon", reduce.epsilon);
  sub_reduce->add_option("--size-cap", reduce.size_cap);
  sub_reduce->add_option("--out", reduce.out);
  sub_reduce->add_option("--sidecar", reduce.sidecar);
  sub_reduce->add_flag("--pretty", reduce.pretty);

  TableFlags table;
  auto* sub_table = app.add_subcommand("table", "Print guaranteed ratios");
  sub_table->add_option("--prices", table.prices, "Price set, e.g. 1,...,100");
  sub_table->add_option("--alpha", table.alpha, "zero, worst or an integer");
  sub_table->add_option("--format", table.format)
      ->check(CLI::IsMember({"csv", "text"}));
  sub_table->add_flag("--exact", table.exact);

  std::string verify_in;
  std::string verify_pv;
  auto* sub_verify = app.add_subcommand("verify", "Check a price vector");
  sub_verify->add_option("--in", verify_in)->required();
  sub_verify->add_option("--pv", verify_pv)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*sub_solve) {
      if (solve.in.empty() && solve.batch.empty()) {
        throw ValidationError("solve needs --in or --batch");
      }
      return cmd_solve(solve);
    }
    if (*sub_gen) return cmd_gen(gen);
    if (*sub_reduce) return cmd_reduce(reduce);
    if (*sub_table) return cmd_table(table);
    if (*sub_verify) return cmd_verify(verify_in, verify_pv);
  } catch (const SizeLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSizeLimit;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return 0;
}
