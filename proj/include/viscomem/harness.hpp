#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "viscomem/config.hpp"
#include "viscomem/diagnostics.hpp"
#include "viscomem/fem.hpp"
#include "viscomem/memory_quadrature.hpp"
#include "viscomem/problem.hpp"
#include "viscomem/time_stepper.hpp"

namespace viscomem {

Mesh make_mesh(const RunConfig& config);
MemoryKernel make_kernel(const RunConfig& config);
/// The preset's data with the configured kernel and damping. The
/// manufactured preset always uses K = 0 and G = damping.constant.
Problem make_problem(const RunConfig& config);

struct RunOutput {
  RunConfig config;
  Mesh mesh;
  DiscreteOperators ops;
  Problem problem;
  SimulationHistory history;  ///< U^0..U^{N+1}; U^N sits at t = T
  DiagnosticsRecord record;
};

/// Runs N + 1 steps so that centred quantities are available at t = T.
RunOutput run_single(const RunConfig& config);

/// energy.csv (n, t, energy, a_norm), summary.json and, when
/// trajectory_every > 0, trajectory_<n>.csv (node, value) checkpoints.
void write_run_outputs(const RunOutput& out, const std::filesystem::path& dir);

enum class LadderMode { time, space };
LadderMode ladder_mode_from_string(const std::string& name);

struct ConvergenceRow {
  int M = 0;
  std::size_t N = 0;
  double error = 0.0;
  std::optional<double> rate;  ///< against the previous row
};

/// For each ladder entry r (N in time mode, M in space mode) computes the
/// self-error between the runs at r and 2r, and the rate between successive
/// entries. The ladder must double at every step.
std::vector<ConvergenceRow> run_convergence(const RunConfig& config, LadderMode mode,
                                            std::span<const std::size_t> ladder);

void write_convergence_csv(std::span<const ConvergenceRow> rows, const std::filesystem::path& file);

/// (n, p, weight, left_edge_sum, left_edge_sum_le_1) for 1 <= n <= n_max, 0 <= p <= n.
void write_weights_csv(const WeightTable& table, const std::filesystem::path& file);

/// Fixed 17-significant-digit formatting used by every CSV writer.
std::string format_real(double v);

}  // namespace viscomem
