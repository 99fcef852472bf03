// Command-line front end: ingest a finite metric space (distance-matrix CSV,
// edge-list JSON, or a named fixture), run a clustering method or a scenario
// check, and emit deterministic JSON / Newick / text.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "unchain/unchain.hpp"

namespace {

using unchain::FiniteMetricSpace;

constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream iss(s);
  while (std::getline(iss, cur, sep))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

FiniteMetricSpace load_matrix_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line))
    throw std::invalid_argument("empty matrix input");
  const std::vector<std::string> labels = split(line, ',');
  std::vector<std::vector<double>> matrix;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    for (const std::string& cell : split(line, ','))
      row.push_back(std::stod(cell));
    matrix.push_back(std::move(row));
  }
  return FiniteMetricSpace::from_distance_matrix(labels, matrix);
}

FiniteMetricSpace load_graph_json(std::istream& in) {
  nlohmann::json j;
  in >> j;
  const auto points = j.at("points").get<std::vector<std::string>>();
  std::vector<std::tuple<std::string, std::string, double>> edges;
  for (const auto& e : j.at("edges"))
    edges.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>(),
                       e.at(2).get<double>());
  return FiniteMetricSpace::from_weighted_graph(points, edges);
}

struct InputOpts {
  std::string input_path;
  std::string fixture;
  std::string format = "graph";
};

void add_input_flags(CLI::App* cmd, InputOpts& opts) {
  auto* in = cmd->add_option("--input", opts.input_path,
                             "Path to a space document ('-' for stdin)");
  auto* fx = cmd->add_option("--fixture", opts.fixture, "Named built-in fixture");
  cmd->add_option("--format", opts.format, "Input format: matrix|graph")
      ->check(CLI::IsMember({"matrix", "graph"}));
  in->excludes(fx);
}

FiniteMetricSpace load_space(const InputOpts& opts) {
  if (!opts.fixture.empty()) return unchain::fixture_by_name(opts.fixture).space();
  if (opts.input_path.empty())
    throw std::invalid_argument("one of --input or --fixture is required");
  std::ifstream file;
  std::istream* in = &std::cin;
  if (opts.input_path != "-") {
    file.open(opts.input_path);
    if (!file) throw std::invalid_argument("cannot open " + opts.input_path);
    in = &file;
  }
  return opts.format == "matrix" ? load_matrix_csv(*in) : load_graph_json(*in);
}

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty() || output_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path);
  if (!out) throw std::invalid_argument("cannot open " + output_path);
  out << text;
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

unchain::Dendrogram run_method(const FiniteMetricSpace& space,
                               const std::string& method,
                               std::optional<int> alpha) {
  if (method == "sl-alpha" || method == "sl-star") {
    if (!alpha)
      throw std::invalid_argument("--alpha is required for method " + method);
    return method == "sl-alpha" ? unchain::sl_alpha(space, *alpha)
                                : unchain::sl_star_alpha(space, *alpha);
  }
  if (!method.empty() && alpha)
    throw std::invalid_argument("--alpha is only valid with sl-alpha/sl-star");
  return unchain::agglomerate(space, unchain::linkage_kind_from_string(method));
}

std::vector<int> subset_arg(const FiniteMetricSpace& space, const std::string& csv,
                            const std::string& flag) {
  if (csv.empty()) throw std::invalid_argument(flag + " is required");
  return space.indices_of(split(csv, ','));
}

std::vector<std::vector<int>> blocks_arg(const FiniteMetricSpace& space,
                                         const std::string& arg,
                                         const std::string& flag) {
  std::vector<std::vector<int>> out;
  for (const std::string& blk : split(arg, ';'))
    out.push_back(space.indices_of(split(blk, ',')));
  if (out.empty()) throw std::invalid_argument(flag + " is required");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hierarchical clustering toolkit with density-sensitive "
               "alpha-unchaining methods"};
  app.require_subcommand(1);

  // cluster
  InputOpts cluster_in;
  std::string method, output_path, emit_kind = "json";
  std::optional<int> alpha;
  auto* cluster = app.add_subcommand("cluster", "Compute a dendrogram");
  add_input_flags(cluster, cluster_in);
  cluster->add_option("--method", method, "sl|cl|al|sl-alpha|sl-star")
      ->required()
      ->check(CLI::IsMember({"sl", "cl", "al", "single", "complete", "average",
                             "sl-alpha", "sl-star"}));
  cluster->add_option("--alpha", alpha, "Unchaining parameter (>= 1)");
  cluster->add_option("--output", output_path, "Output path (default stdout)");
  cluster->add_option("--emit", emit_kind, "json|newick|text")
      ->check(CLI::IsMember({"json", "newick", "text"}));

  // dbscan
  InputOpts dbscan_in;
  unchain::DbscanParams params;
  std::string dbscan_output;
  auto* dbs = app.add_subcommand("dbscan", "Flat density-based labeling");
  add_input_flags(dbs, dbscan_in);
  dbs->add_option("--eps", params.eps, "Neighborhood radius")->required();
  dbs->add_option("--min-pts", params.min_pts, "Core-point threshold")->required();
  dbs->add_option("--output", dbscan_output, "Output path (default stdout)");

  // analyze
  InputOpts analyze_in;
  std::string check, an_method, an_output;
  std::optional<int> an_alpha;
  std::string b1_csv, b2_csv, n1_csv, n2_csv, blocks_csv, z_csv, xs_csv, ys_csv;
  bool symmetric = false;
  auto* an = app.add_subcommand("analyze", "Run a chaining detector or scenario check");
  add_input_flags(an, analyze_in);
  an->add_option("--check", check,
                 "chained|single-edge|smaller-blocks|strongly|completely|weakly|bridge")
      ->required()
      ->check(CLI::IsMember({"chained", "single-edge", "smaller-blocks",
                             "strongly", "completely", "weakly", "bridge"}));
  an->add_option("--method", an_method, "Method for dendrogram-based checks");
  an->add_option("--alpha", an_alpha, "Unchaining parameter");
  an->add_option("--b1", b1_csv, "First subset (comma-separated labels)");
  an->add_option("--b2", b2_csv, "Second subset");
  an->add_option("--n1", n1_csv, "First nucleus (weakly)");
  an->add_option("--n2", n2_csv, "Second nucleus (weakly)");
  an->add_option("--blocks", blocks_csv,
                 "Block chain, ';'-separated blocks of ','-separated labels");
  an->add_option("--z", z_csv, "Bridge chain points in order (bridge)");
  an->add_option("--xs", xs_csv, "Satellites of B1 (bridge)");
  an->add_option("--ys", ys_csv, "Satellites of B2 (bridge)");
  an->add_flag("--symmetric", symmetric, "Symmetric reading of condition i (chained)");
  an->add_option("--output", an_output, "Output path (default stdout)");

  // fixture
  std::string fixture_name;
  auto* fx = app.add_subcommand("fixture", "Print a fixture as edge-list JSON");
  fx->add_option("name", fixture_name, "Fixture name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (cluster->parsed()) {
      const FiniteMetricSpace space = load_space(cluster_in);
      const unchain::Dendrogram d = run_method(space, method, alpha);
      if (emit_kind == "json")
        emit(dump(unchain::serialize(d)), output_path);
      else if (emit_kind == "newick")
        emit(unchain::to_newick(d) + "\n", output_path);
      else
        emit(unchain::render_text(d), output_path);
    } else if (dbs->parsed()) {
      const FiniteMetricSpace space = load_space(dbscan_in);
      const auto labeling = unchain::dbscan(space, params);
      emit(dump(unchain::serialize(labeling, space)), dbscan_output);
    } else if (an->parsed()) {
      const FiniteMetricSpace space = load_space(analyze_in);
      nlohmann::json out;
      out["check"] = check;
      auto need_alpha = [&] {
        if (!an_alpha) throw std::invalid_argument("--alpha is required");
        return *an_alpha;
      };
      auto dendrogram = [&] {
        if (an_method.empty())
          throw std::invalid_argument("--method is required for this check");
        const bool alpha_method =
            an_method == "sl-alpha" || an_method == "sl-star";
        return run_method(space, an_method,
                          alpha_method ? an_alpha : std::nullopt);
      };
      if (check == "chained" || check == "single-edge") {
        const auto b1 = subset_arg(space, b1_csv, "--b1");
        const auto b2 = subset_arg(space, b2_csv, "--b2");
        const auto r = check == "chained"
                           ? unchain::detect_chained(space, b1, b2, symmetric)
                           : unchain::detect_single_edge_chained(space, b1, b2);
        out["detected"] = r.has_value();
        if (r) out["report"] = r->to_json(space);
      } else if (check == "smaller-blocks") {
        const auto blocks = blocks_arg(space, blocks_csv, "--blocks");
        const auto r =
            unchain::detect_smaller_block_chained(space, blocks, need_alpha());
        out["detected"] = r.has_value();
        if (r) out["report"] = r->to_json(space);
      } else if (check == "strongly") {
        const auto b1 = subset_arg(space, b1_csv, "--b1");
        const auto b2 = subset_arg(space, b2_csv, "--b2");
        out["scenario"] =
            unchain::verify_strongly_chaining(dendrogram(), space, b1, b2).to_json();
      } else if (check == "completely") {
        const auto blocks = blocks_arg(space, blocks_csv, "--blocks");
        out["scenario"] = unchain::verify_completely_chaining(dendrogram(), space,
                                                              blocks, need_alpha())
                              .to_json();
      } else if (check == "weakly") {
        const auto b1 = subset_arg(space, b1_csv, "--b1");
        const auto b2 = subset_arg(space, b2_csv, "--b2");
        const auto n1 = subset_arg(space, n1_csv, "--n1");
        const auto n2 = subset_arg(space, n2_csv, "--n2");
        const int a = an_alpha.value_or(1);
        out["scenario"] =
            unchain::verify_weakly_unchaining(dendrogram(), space, b1, b2, n1, n2, a)
                .to_json();
      } else {  // bridge
        unchain::BridgeScenario sc;
        sc.b1 = subset_arg(space, b1_csv, "--b1");
        sc.b2 = subset_arg(space, b2_csv, "--b2");
        if (z_csv.empty()) throw std::invalid_argument("--z is required");
        for (const std::string& l : split(z_csv, ','))
          sc.z_chain.push_back(space.index_of(l));
        if (!xs_csv.empty()) sc.x_list = subset_arg(space, xs_csv, "--xs");
        if (!ys_csv.empty()) sc.y_list = subset_arg(space, ys_csv, "--ys");
        out["scenario"] =
            unchain::verify_bridge_unchaining(dendrogram(), space, sc, need_alpha())
                .to_json();
      }
      emit(dump(out), an_output);
    } else if (fx->parsed()) {
      const unchain::Fixture& f = unchain::fixture_by_name(fixture_name);
      nlohmann::json j = f.to_json();
      j["name"] = f.name;
      j["doc"] = f.doc;
      emit(dump(j), "");
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return 0;
}
