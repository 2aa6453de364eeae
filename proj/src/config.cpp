#include "dhl/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "dhl/initial_data.hpp"
#include "dhl/run_io.hpp"

namespace dhl {

using nlohmann::json;

const std::vector<std::string> kVerifyCheckNames = {
    "bernstein",    "dyadic_multiplier", "product_estimate", "brezis_gallouet",
    "kernel_bound", "kernel_lp",         "potential_term"};

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

template <typename T>
void fetch(const json& j, const char* key, T& target) {
  if (j.contains(key)) target = j.at(key).get<T>();
}

json initial_data_to_json(const InitialDataConfig& d) {
  return json{{"kind", d.kind},
              {"amplitude", d.amplitude},
              {"width", d.width},
              {"center", d.center},
              {"spinor_re", d.spinor_re},
              {"spinor_im", d.spinor_im},
              {"xi0", d.xi0},
              {"mode", d.mode},
              {"branch", d.branch},
              {"l2_normalize_to", d.l2_normalize_to},
              {"path", d.path}};
}

InitialDataConfig initial_data_from_json(const json& j) {
  InitialDataConfig d;
  fetch(j, "kind", d.kind);
  fetch(j, "amplitude", d.amplitude);
  fetch(j, "width", d.width);
  fetch(j, "center", d.center);
  fetch(j, "spinor_re", d.spinor_re);
  fetch(j, "spinor_im", d.spinor_im);
  fetch(j, "xi0", d.xi0);
  fetch(j, "mode", d.mode);
  fetch(j, "branch", d.branch);
  fetch(j, "l2_normalize_to", d.l2_normalize_to);
  fetch(j, "path", d.path);
  return d;
}

}  // namespace

RunConfig run_config_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("config parse error: ") + e.what());
  }
  RunConfig cfg;
  try {
    if (j.contains("grid")) {
      fetch(j["grid"], "n", cfg.grid_n);
      fetch(j["grid"], "L", cfg.grid_length);
    }
    if (j.contains("model")) {
      const json& m = j["model"];
      fetch(m, "m", cfg.mass);
      fetch(m, "b", cfg.b);
      fetch(m, "density_form", cfg.density_form);
      fetch(m, "coupling_sign", cfg.coupling_sign);
      if (m.contains("coupling")) cfg.coupling_enabled = m.at("coupling").get<std::string>() == "on";
    }
    if (j.contains("evolution")) {
      const json& e = j["evolution"];
      fetch(e, "method", cfg.method);
      fetch(e, "dt", cfg.dt);
      fetch(e, "t_final", cfg.t_final);
      fetch(e, "picard_tol", cfg.picard_tol);
      fetch(e, "picard_max_iter", cfg.picard_max_iter);
      fetch(e, "quad_nodes", cfg.quad_nodes);
    }
    if (j.contains("initial_data")) cfg.initial_data = initial_data_from_json(j["initial_data"]);
    if (j.contains("diagnostics")) {
      fetch(j["diagnostics"], "s_list", cfg.s_list);
      fetch(j["diagnostics"], "sample_every", cfg.sample_every);
    }
    if (j.contains("output")) fetch(j["output"], "save_state", cfg.save_state);
    fetch(j, "seed", cfg.seed);
    fetch(j, "output_dir", cfg.output_dir);
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("config field error: ") + e.what());
  }

  if (cfg.density_form != "gamma0" && cfg.density_form != "modulus")
    throw std::runtime_error("density_form must be 'gamma0' or 'modulus'");
  if (cfg.method != "strang" && cfg.method != "picard")
    throw std::runtime_error("method must be 'strang' or 'picard'");
  const std::vector<std::string> kinds = {"gaussian", "modulated_gaussian",
                                          "eigen_projected_plane_wave", "file"};
  if (std::find(kinds.begin(), kinds.end(), cfg.initial_data.kind) == kinds.end())
    throw std::runtime_error("unknown initial_data.kind: " + cfg.initial_data.kind);
  return cfg;
}

std::string run_config_to_json(const RunConfig& cfg) {
  json j{{"grid", {{"n", cfg.grid_n}, {"L", cfg.grid_length}}},
         {"model",
          {{"m", cfg.mass},
           {"b", cfg.b},
           {"density_form", cfg.density_form},
           {"coupling_sign", cfg.coupling_sign},
           {"coupling", cfg.coupling_enabled ? "on" : "off"}}},
         {"evolution",
          {{"method", cfg.method},
           {"dt", cfg.dt},
           {"t_final", cfg.t_final},
           {"picard_tol", cfg.picard_tol},
           {"picard_max_iter", cfg.picard_max_iter},
           {"quad_nodes", cfg.quad_nodes}}},
         {"initial_data", initial_data_to_json(cfg.initial_data)},
         {"diagnostics", {{"s_list", cfg.s_list}, {"sample_every", cfg.sample_every}}},
         {"output", {{"save_state", cfg.save_state}}},
         {"seed", cfg.seed},
         {"output_dir", cfg.output_dir}};
  return j.dump(2);
}

RunConfig load_run_config(const std::string& path) { return run_config_from_json(read_file(path)); }

EvolutionConfig evolution_config(const RunConfig& cfg) {
  EvolutionConfig e;
  e.dt = cfg.dt;
  e.t_final = cfg.t_final;
  e.method = cfg.method == "picard" ? Method::Picard : Method::Strang;
  e.model.dirac = DiracParams(cfg.mass);
  e.model.hartree.b = cfg.b;
  e.model.hartree.density_form =
      cfg.density_form == "modulus" ? DensityForm::Modulus : DensityForm::Gamma0;
  e.model.hartree.coupling_sign = cfg.coupling_sign;
  e.model.hartree.enabled = cfg.coupling_enabled;
  e.picard_tol = cfg.picard_tol;
  e.picard_max_iter = cfg.picard_max_iter;
  e.quad_nodes = cfg.quad_nodes;
  e.sample_every = cfg.sample_every;
  return e;
}

SpinorField build_initial_data(const RunConfig& cfg, GridPtr grid) {
  const InitialDataConfig& d = cfg.initial_data;
  const std::array<Complex, 2> spinor{Complex{d.spinor_re[0], d.spinor_im[0]},
                                      Complex{d.spinor_re[1], d.spinor_im[1]}};
  SpinorField psi;
  if (d.kind == "gaussian") {
    psi = gaussian_data(grid, d.amplitude, d.width, d.center, spinor);
  } else if (d.kind == "modulated_gaussian") {
    psi = modulated_gaussian_data(grid, d.amplitude, d.width, d.xi0, d.center, spinor);
  } else if (d.kind == "eigen_projected_plane_wave") {
    psi = eigen_plane_wave_data(grid, d.mode, d.branch, d.amplitude, DiracParams(cfg.mass));
  } else {  // file
    psi = read_snapshot(d.path);
    if (psi.grid->n() != grid->n() || psi.grid->box_length() != grid->box_length())
      throw std::runtime_error("snapshot grid does not match the configured grid");
    psi.grid = std::move(grid);
  }
  if (d.l2_normalize_to > 0.0) normalize_l2(psi, d.l2_normalize_to);
  return psi;
}

VerifySuiteConfig verify_config_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("config parse error: ") + e.what());
  }
  VerifySuiteConfig cfg;
  try {
    fetch(j, "which", cfg.which);
    fetch(j, "s_grid", cfg.s_grid);
    fetch(j, "b_grid", cfg.b_grid);
    fetch(j, "lambda_octaves", cfg.lambda_octaves);
    fetch(j, "eps_grid", cfg.eps_grid);
    fetch(j, "seed", cfg.seed);
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("config field error: ") + e.what());
  }
  if (cfg.which.empty()) throw std::runtime_error("verify suite selection must be nonempty");
  for (const std::string& name : cfg.which)
    if (std::find(kVerifyCheckNames.begin(), kVerifyCheckNames.end(), name) ==
        kVerifyCheckNames.end())
      throw std::runtime_error("unknown verify check: " + name);
  return cfg;
}

std::string verify_config_to_json(const VerifySuiteConfig& cfg) {
  json j{{"which", cfg.which},       {"s_grid", cfg.s_grid},
         {"b_grid", cfg.b_grid},     {"lambda_octaves", cfg.lambda_octaves},
         {"eps_grid", cfg.eps_grid}, {"seed", cfg.seed}};
  return j.dump(2);
}

VerifySuiteConfig load_verify_config(const std::string& path) {
  return verify_config_from_json(read_file(path));
}

}  // namespace dhl
