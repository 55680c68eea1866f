#include "viscomem/harness.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

namespace viscomem {

namespace {

std::ofstream open_for_writing(const std::filesystem::path& file) {
  if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
  std::ofstream out(file);
  if (!out) throw std::runtime_error("cannot write '" + file.string() + "'");
  return out;
}

Vector terminal_state(const RunConfig& config, int M, std::size_t N) {
  RunConfig c = config;
  c.M = M;
  c.N = N;
  c.validate();
  const Mesh mesh = make_mesh(c);
  const Problem problem = make_problem(c);
  SimulationHistory h = run(problem, mesh, c.tau(), c.N, c.mass);
  return std::move(h.states[c.N]);
}

}  // namespace

std::string format_real(double v) {
  std::ostringstream out;
  out << std::setprecision(17) << v;
  return out.str();
}

Mesh make_mesh(const RunConfig& config) { return Mesh(config.dim, config.M); }

MemoryKernel make_kernel(const RunConfig& config) {
  if (config.kernel_kind == KernelKind::constant) return MemoryKernel::constant(config.kernel_constant);
  return MemoryKernel::from_spec(config.kernel);
}

Problem make_problem(const RunConfig& config) {
  config.validate();
  Problem p;
  switch (config.preset) {
    case Preset::paper_1d:
      p = paper_1d_problem(config.kernel, config.forcing);
      break;
    case Preset::paper_2d:
      p = paper_2d_problem(config.kernel);
      break;
    case Preset::manufactured:
      return manufactured_problem(config.damping.constant);
    case Preset::zero:
      p = zero_problem(make_kernel(config), config.damping);
      break;
  }
  p.damping = config.damping;
  return p;
}

RunOutput run_single(const RunConfig& config) {
  config.validate();
  RunOutput out{config, make_mesh(config), {}, make_problem(config), {}, {}};
  out.ops = assemble(out.mesh, config.mass);
  WeightTable table = build_weight_table(out.problem.kernel, config.tau(), config.N);
  TimeStepper stepper(out.mesh, out.ops, out.problem, std::move(table));
  out.history = stepper.start();
  stepper.advance(out.history, config.N + 1);

  std::ostringstream id;
  id << to_string(config.preset) << "_d" << config.dim << "_M" << config.M << "_N" << config.N;
  out.record =
      make_record(out.history, out.mesh, out.ops, out.problem, config.N, config.T, id.str());
  return out;
}

void write_run_outputs(const RunOutput& out, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const auto& r = out.record;
  if (out.config.write_energy) {
    auto csv = open_for_writing(dir / "energy.csv");
    csv << "n,t,energy,a_norm\n";
    for (std::size_t n = 0; n < r.energy.size(); ++n) {
      csv << n << ',' << format_real(out.history.time(n)) << ',' << format_real(r.energy[n]) << ','
          << format_real(r.a_norm[n]) << '\n';
    }
  }
  if (out.config.trajectory_every > 0) {
    for (std::size_t n = 0; n <= r.N; n += out.config.trajectory_every) {
      auto csv = open_for_writing(dir / ("trajectory_" + std::to_string(n) + ".csv"));
      csv << "node,value\n";
      const Vector& u = out.history.states[n];
      for (Eigen::Index k = 0; k < u.size(); ++k) csv << k << ',' << format_real(u[k]) << '\n';
    }
  }

  nlohmann::json j;
  j["run_id"] = r.run_id;
  j["dim"] = r.dim;
  j["M"] = r.M;
  j["N"] = r.N;
  j["T"] = r.T;
  j["tau"] = r.tau;
  j["kernel"] = {{"alpha", r.alpha}, {"sigma", r.sigma}, {"gamma", r.gamma},
                 {"mu0", out.problem.kernel.mu0()}};
  j["damping"] = {{"function", r.damping}, {"mu1", r.mu1}, {"mu2", r.mu2}};
  j["energy_initial"] = r.energy.front();
  j["energy_final"] = r.energy.back();
  j["a_norm_max"] = *std::max_element(r.a_norm.begin(), r.a_norm.end());
  j["terminal_gradient"] = r.terminal_gradient;
  auto file = open_for_writing(dir / "summary.json");
  file << std::setw(2) << j << '\n';
}

LadderMode ladder_mode_from_string(const std::string& name) {
  if (name == "time") return LadderMode::time;
  if (name == "space") return LadderMode::space;
  throw std::invalid_argument("unknown convergence mode '" + name + "' (expected time or space)");
}

std::vector<ConvergenceRow> run_convergence(const RunConfig& config, LadderMode mode,
                                            std::span<const std::size_t> ladder) {
  if (ladder.empty()) throw std::invalid_argument("convergence ladder is empty");
  for (std::size_t k = 1; k < ladder.size(); ++k) {
    if (ladder[k] != 2 * ladder[k - 1]) {
      std::ostringstream msg;
      msg << "convergence ladder must double at every step, got " << ladder[k - 1] << " then "
          << ladder[k];
      throw std::invalid_argument(msg.str());
    }
  }
  if (ladder.front() < 1) throw std::invalid_argument("convergence ladder entries must be positive");

  std::map<std::size_t, Vector> states;
  auto state_at = [&](std::size_t r) -> const Vector& {
    auto it = states.find(r);
    if (it == states.end()) {
      Vector u = mode == LadderMode::time ? terminal_state(config, config.M, r)
                                          : terminal_state(config, static_cast<int>(r), config.N);
      it = states.emplace(r, std::move(u)).first;
    }
    return it->second;
  };

  std::vector<ConvergenceRow> rows;
  for (std::size_t r : ladder) {
    ConvergenceRow row;
    if (mode == LadderMode::time) {
      row.M = config.M;
      row.N = r;
      row.error = self_error_time(state_at(r), state_at(2 * r), make_mesh(config));
    } else {
      row.M = static_cast<int>(r);
      row.N = config.N;
      const Mesh coarse(config.dim, static_cast<int>(r));
      const Mesh fine(config.dim, static_cast<int>(2 * r));
      row.error = self_error_space(state_at(r), coarse, state_at(2 * r), fine);
    }
    if (!rows.empty()) row.rate = rate(rows.back().error, row.error);
    rows.push_back(row);
    // Coarser runs are no longer needed.
    states.erase(r);
  }
  return rows;
}

void write_convergence_csv(std::span<const ConvergenceRow> rows, const std::filesystem::path& file) {
  auto csv = open_for_writing(file);
  csv << "M,N,E,CR\n";
  for (const auto& row : rows) {
    csv << row.M << ',' << row.N << ',' << format_real(row.error) << ',';
    if (row.rate) csv << format_real(*row.rate);
    csv << '\n';
  }
}

void write_weights_csv(const WeightTable& table, const std::filesystem::path& file) {
  auto csv = open_for_writing(file);
  csv << "n,p,weight,left_edge_sum,left_edge_sum_le_1\n";
  for (std::size_t n = 1; n <= table.n_max(); ++n) {
    const double sum = table.left_edge_sum(n);
    const std::string tail = ',' + format_real(sum) + (sum <= 1.0 ? ",true\n" : ",false\n");
    for (std::size_t p = 0; p <= n; ++p) csv << n << ',' << p << ',' << format_real(table.weight(n, p)) << tail;
  }
}

}  // namespace viscomem
