#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "viscomem/fem.hpp"
#include "viscomem/kernel.hpp"
#include "viscomem/problem.hpp"

namespace viscomem {

enum class Preset { paper_1d, paper_2d, manufactured, zero };
enum class KernelKind { tempered, constant };

const char* to_string(Preset preset);
Preset preset_from_string(const std::string& name);

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One simulation as described by a configuration file:
///
///   [mesh]     dim, M, mass = consistent | lumped
///   [time]     N, T
///   [kernel]   type = tempered | constant, alpha, sigma, gamma, value, enforce_range
///   [damping]  function = sqrt | affine | constant, constant, mu1, mu2
///   [problem]  preset = paper_1d | paper_2d | manufactured | zero, forcing
///   [output]   dir, energy, trajectory_every
///
/// Lines are `key = value`; `#` and `;` start comments. Numeric values accept
/// `x`, `sqrt(x)` and `a*sqrt(x)`. Unknown sections or keys are errors.
struct RunConfig {
  int dim = 1;
  int M = 32;
  MassMatrix mass = MassMatrix::consistent;
  std::size_t N = 32;
  double T = 1.0;

  KernelKind kernel_kind = KernelKind::tempered;
  KernelSpec kernel{};
  double kernel_constant = 0.0;

  DampingSpec damping = DampingSpec::square_root(1.0, 1.0);

  Preset preset = Preset::paper_1d;
  bool forcing = true;  ///< paper_1d only; false gives the unforced energy study

  std::string output_dir = "out";
  bool write_energy = true;
  std::size_t trajectory_every = 0;  ///< 0 disables trajectory checkpoints

  double tau() const { return T / static_cast<double>(N); }

  /// Throws ConfigError naming the offending field.
  void validate() const;
};

RunConfig parse_config(std::string_view text);
RunConfig load_config(const std::filesystem::path& path);

/// Canonical text form; parse_config(serialize(c)) reproduces c exactly.
std::string serialize(const RunConfig& config);

/// Parses `x`, `sqrt(x)` or `a*sqrt(x)`.
double parse_number(std::string_view text);

}  // namespace viscomem
