#include <fstream>
#include <iostream>
#include <memory>

#include <CLI11.hpp>

#include "smoothpoly/classifier.hpp"

using namespace smoothpoly;

namespace {

constexpr int kConfigError = 2;
constexpr int kInvariantViolation = 3;

int classify(const RunConfig& base, const std::string& format, const std::string& out_path,
             const std::string& trace_path) {
  RunConfig cfg = base;
  std::ofstream trace;
  if (!trace_path.empty()) {
    trace.open(trace_path);
    if (!trace) throw Error(ErrorCode::ConfigError, "cannot open " + trace_path);
    cfg.trace = &trace;
  }
  const auto result = run_classify(cfg);
  std::string text = format == "json" ? to_json(result).dump(2) + "\n" : to_text(result);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw Error(ErrorCode::ConfigError, "cannot open " + out_path);
    out << text;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classification of smooth lattice polytopes with few lattice points"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format = "text", out_path, trace_path;
  auto* cls = app.add_subcommand("classify", "classify smooth polytopes with at most N lattice points");
  cls->add_option("--dim", cfg.dimension, "dimension (2 or 3)")->required();
  cls->add_option("--max-points", cfg.max_points, "maximal number of lattice points")->required();
  cls->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));
  cls->add_option("--out", out_path, "write output to this file");
  cls->add_option("--threads", cfg.threads, "worker threads");
  cls->add_option("--trace-tree", trace_path, "write the blow-up search tree to this file");
  cls->add_flag("--allow-large", cfg.allow_large, "run dimension 3 beyond 12 points");

  std::string seed;
  std::size_t max_cones = 12;
  bool unpruned = false;
  auto* ct = app.add_subcommand("count-tree", "count the nodes of a seed's blow-up tree");
  ct->add_option("--seed", seed, "seed name, see `seeds`")->required();
  ct->add_option("--max-cones", max_cones, "maximal number of maximal cones")->required();
  ct->add_flag("--unpruned", unpruned, "expand every cone at every node");

  std::size_t stats_points = 12;
  auto* st = app.add_subcommand("stats", "minimal point counts of smooth k-gons");
  st->add_option("--max-points", stats_points, "maximal number of lattice points")->required();

  std::size_t seeds_points = 12;
  auto* sd = app.add_subcommand("seeds", "list the seed fans and the excluded minimal fans");
  sd->add_option("--max-points", seeds_points, "bound used for parameter ranges");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kConfigError;
  }

  try {
    if (*cls) return classify(cfg, format, out_path, trace_path);
    if (*ct) {
      std::cout << run_count_tree(seed, max_cones, !unpruned) << '\n';
      return 0;
    }
    if (*st) {
      std::cout << render_stats(run_stats(stats_points));
      return 0;
    }
    if (*sd) {
      std::cout << render_seeds(seeds_points, run_stats(seeds_points));
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    if (e.code() == ErrorCode::ConfigError || e.code() == ErrorCode::UnknownSeed) return kConfigError;
    return kInvariantViolation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvariantViolation;
  }
  return 0;
}
