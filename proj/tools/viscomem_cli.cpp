#include <cstdlib>
#include <exception>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "viscomem/config.hpp"
#include "viscomem/harness.hpp"

namespace fs = std::filesystem;
using namespace viscomem;

namespace {

RunConfig load(const std::string& path, const std::string& out_override) {
  RunConfig config = path.empty() ? RunConfig{} : load_config(path);
  if (!out_override.empty()) config.output_dir = out_override;
  return config;
}

std::vector<std::size_t> parse_ladder(const std::string& text) {
  std::vector<std::size_t> ladder;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    const unsigned long v = std::stoul(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad ladder entry '" + item + "'");
    ladder.push_back(v);
  }
  return ladder;
}

int cmd_run(const RunConfig& config) {
  const RunOutput out = run_single(config);
  write_run_outputs(out, config.output_dir);
  std::cout << out.record.run_id << ": E^0 = " << format_real(out.record.energy.front())
            << ", E^N = " << format_real(out.record.energy.back()) << '\n';
  return 0;
}

int cmd_energy(RunConfig config) {
  config.forcing = false;
  config.write_energy = true;
  const RunOutput out = run_single(config);
  write_run_outputs(out, config.output_dir);
  const auto& e = out.record.energy;
  std::size_t worst = 0;
  double worst_ratio = 0.0;
  for (std::size_t n = 1; n < e.size(); ++n) {
    const double ratio = e[n] / e[n - 1];
    if (ratio > worst_ratio) {
      worst_ratio = ratio;
      worst = n;
    }
  }
  std::cout << "E^0 = " << format_real(e.front()) << ", E^N = " << format_real(e.back())
            << ", largest step ratio E^n/E^(n-1) = " << format_real(worst_ratio) << " at n = "
            << worst << '\n';
  return 0;
}

int cmd_convergence(const RunConfig& config, const std::string& mode, const std::string& ladder) {
  const auto rows = run_convergence(config, ladder_mode_from_string(mode), parse_ladder(ladder));
  const fs::path file = fs::path(config.output_dir) / ("convergence_" + mode + ".csv");
  write_convergence_csv(rows, file);
  std::cout << "M,N,E,CR\n";
  for (const auto& r : rows) {
    std::cout << r.M << ',' << r.N << ',' << format_real(r.error) << ','
              << (r.rate ? format_real(*r.rate) : std::string()) << '\n';
  }
  return 0;
}

int cmd_weights(const RunConfig& config, std::size_t n_max) {
  const std::size_t n = n_max > 0 ? n_max : config.N;
  const WeightTable table = build_weight_table(make_kernel(config), config.tau(), n);
  write_weights_csv(table, fs::path(config.output_dir) / "weights.csv");
  std::cout << "sum of left-edge weights up to n = " << n << ": "
            << format_real(table.left_edge_sum(n)) << (table.left_edge_sum(n) <= 1.0 ? " <= 1" : " > 1")
            << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Galerkin solver for damped wave equations with sign-changing memory"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  std::string mode = "time";
  std::string ladder;
  std::size_t n_max = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "configuration file")->check(CLI::ExistingFile);
    sub->add_option("--out", out_dir, "output directory (overrides [output] dir)");
  };

  auto* run = app.add_subcommand("run", "single run: energy.csv, summary.json, checkpoints");
  add_common(run);
  auto* energy = app.add_subcommand("energy", "unforced energy study of the configured problem");
  add_common(energy);
  auto* conv = app.add_subcommand("convergence", "self-convergence ladder in time or space");
  add_common(conv);
  conv->add_option("--mode", mode, "time or space")->check(CLI::IsMember({"time", "space"}));
  conv->add_option("--ladder", ladder, "comma-separated N (time) or M (space) values")->required();
  auto* weights = app.add_subcommand("weights", "dump memory quadrature weights");
  add_common(weights);
  weights->add_option("--n-max", n_max, "largest step index (default: time.N)");

  CLI11_PARSE(app, argc, argv);

  try {
    const RunConfig config = load(config_path, out_dir);
    if (run->parsed()) return cmd_run(config);
    if (energy->parsed()) return cmd_energy(config);
    if (conv->parsed()) return cmd_convergence(config, mode, ladder);
    if (weights->parsed()) return cmd_weights(config, n_max);
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
