#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "dhl/evolution.hpp"

namespace dhl {

/// Initial-state selection for a run. `kind` picks the branch; unrelated
/// parameters keep their defaults so configs round-trip losslessly.
struct InitialDataConfig {
  std::string kind = "gaussian";  // gaussian | modulated_gaussian | eigen_projected_plane_wave | file
  double amplitude = 1.0;
  double width = 2.0;
  std::array<double, 2> center{0.0, 0.0};
  std::array<double, 2> spinor_re{1.0, 0.0};
  std::array<double, 2> spinor_im{0.0, 0.0};
  std::array<double, 2> xi0{0.0, 0.0};   // modulation frequency
  std::array<int, 2> mode{1, 0};         // lattice mode for the eigen plane wave
  int branch = 1;                        // +1 / -1 eigenspace
  double l2_normalize_to = 0.0;          // > 0: rescale to this L^2 norm
  std::string path;                      // snapshot file for kind = file
};

struct RunConfig {
  std::size_t grid_n = 128;
  double grid_length = 16.0 * 3.14159265358979323846;
  double mass = 1.0;
  double b = 1.0;
  std::string density_form = "gamma0";   // gamma0 | modulus
  int coupling_sign = -1;
  bool coupling_enabled = true;
  std::string method = "strang";         // strang | picard
  double dt = 1e-2;
  double t_final = 1.0;
  double picard_tol = 1e-12;
  int picard_max_iter = 50;
  int quad_nodes = 17;
  InitialDataConfig initial_data{};
  std::vector<double> s_list{0.5};
  int sample_every = 10;
  bool save_state = false;
  std::uint64_t seed = 1;
  std::string output_dir = "out";
};

RunConfig run_config_from_json(const std::string& text);   // throws std::runtime_error on bad input
std::string run_config_to_json(const RunConfig& config);   // all defaults explicit
RunConfig load_run_config(const std::string& path);

EvolutionConfig evolution_config(const RunConfig& config);
SpinorField build_initial_data(const RunConfig& config, GridPtr grid);

struct VerifySuiteConfig {
  std::vector<std::string> which;  // nonempty subset of the known checks
  std::vector<double> s_grid{0.25, 0.5, 0.75};
  std::vector<double> b_grid{0.5, 1.0, 2.0};
  int lambda_octaves = 8;
  std::vector<double> eps_grid{0.5, 0.25, 0.125, 0.0625};
  std::uint64_t seed = 1;
};

extern const std::vector<std::string> kVerifyCheckNames;

VerifySuiteConfig verify_config_from_json(const std::string& text);
std::string verify_config_to_json(const VerifySuiteConfig& config);
VerifySuiteConfig load_verify_config(const std::string& path);

}  // namespace dhl
