#include "dhl/run_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "parallel.hpp"

namespace dhl {

using nlohmann::json;

namespace {

constexpr char kSnapshotMagic[4] = {'D', 'H', 'R', 'T'};
constexpr std::uint32_t kSnapshotVersion = 1;

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.16e", v);
  return buf;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

double rel_drift(const std::vector<DiagnosticsRecord>& recs, double (*field)(const DiagnosticsRecord&)) {
  if (recs.empty()) return 0.0;
  const double ref = field(recs.front());
  const double scale = std::max(std::abs(ref), 1e-300);
  double drift = 0.0;
  for (const DiagnosticsRecord& r : recs) drift = std::max(drift, std::abs(field(r) - ref) / scale);
  return drift;
}

json fit_to_json(const GrowthFit& fit) {
  return json{{"model", fit.model == GrowthModel::DoubleExponential ? "double_exponential"
                                                                    : "single_exponential"},
              {"amplitude", fit.amplitude},
              {"rate", fit.rate},
              {"residual", fit.residual}};
}

}  // namespace

std::string diagnostics_csv(const std::vector<DiagnosticsRecord>& records,
                            const std::vector<double>& s_list) {
  std::string out = "t,mass,energy,kinetic,h_half";
  for (double s : s_list) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), ",h_s_%g", s);
    out += buf;
  }
  out += ",potential_term\n";
  for (const DiagnosticsRecord& r : records) {
    out += format_double(r.t);
    out += ',' + format_double(r.mass);
    out += ',' + format_double(r.energy);
    out += ',' + format_double(r.kinetic);
    out += ',' + format_double(r.h_half);
    for (double h : r.h_s) out += ',' + format_double(h);
    out += ',' + format_double(r.potential_term);
    out += '\n';
  }
  return out;
}

void write_snapshot(const std::string& path, const SpinorField& psi, const ModelParams& model) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write snapshot " + path);
  out.write(kSnapshotMagic, 4);
  const std::uint32_t version = kSnapshotVersion;
  const std::uint32_t n = static_cast<std::uint32_t>(psi.grid->n());
  const double header[3] = {psi.grid->box_length(), model.dirac.mass, model.hartree.b};
  out.write(reinterpret_cast<const char*>(&version), sizeof(version));
  out.write(reinterpret_cast<const char*>(&n), sizeof(n));
  out.write(reinterpret_cast<const char*>(header), sizeof(header));
  out.write(reinterpret_cast<const char*>(psi.u.data()),
            static_cast<std::streamsize>(psi.u.size() * sizeof(Complex)));
  out.write(reinterpret_cast<const char*>(psi.v.data()),
            static_cast<std::streamsize>(psi.v.size() * sizeof(Complex)));
  if (!out) throw std::runtime_error("short write on snapshot " + path);
}

SpinorField read_snapshot(const std::string& path, ModelParams* model_out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open snapshot " + path);
  char magic[4];
  std::uint32_t version = 0, n = 0;
  double header[3];
  in.read(magic, 4);
  in.read(reinterpret_cast<char*>(&version), sizeof(version));
  in.read(reinterpret_cast<char*>(&n), sizeof(n));
  in.read(reinterpret_cast<char*>(header), sizeof(header));
  if (!in || std::memcmp(magic, kSnapshotMagic, 4) != 0)
    throw std::runtime_error("not a state snapshot: " + path);
  if (version != kSnapshotVersion)
    throw std::runtime_error("unsupported snapshot version in " + path);
  SpinorField psi = make_spinor(make_grid(n, header[0]));
  in.read(reinterpret_cast<char*>(psi.u.data()),
          static_cast<std::streamsize>(psi.u.size() * sizeof(Complex)));
  in.read(reinterpret_cast<char*>(psi.v.data()),
          static_cast<std::streamsize>(psi.v.size() * sizeof(Complex)));
  if (!in) throw std::runtime_error("truncated snapshot " + path);
  if (model_out != nullptr) {
    model_out->dirac = DiracParams(header[1]);
    model_out->hartree.b = header[2];
  }
  return psi;
}

RunOutcome run_simulation(const RunConfig& config, const std::string& out_dir) {
  RunOutcome outcome;
  GridPtr grid;
  SpinorField psi0;
  EvolutionConfig evo;
  try {
    grid = make_grid(config.grid_n, config.grid_length);
    evo = evolution_config(config);
    validate(evo);
    psi0 = build_initial_data(config, grid);
    if (!is_finite(psi0)) throw std::runtime_error("initial data is not finite");
  } catch (const std::exception& e) {
    outcome.exit_code = 2;
    outcome.message = e.what();
    return outcome;
  }

  EvolveOptions opts;
  opts.s_list = config.s_list;
  SpinorField last_state = psi0;  // refreshed by the hook; final sample is always taken
  Trajectory traj = evolve(psi0, evo, opts,
                           [&](const DiagnosticsRecord&, const SpinorField& s) { last_state = s; });

  json summary;
  summary["config"] = json::parse(run_config_to_json(config));
  summary["samples"] = traj.records.size();
  summary["aborted"] = traj.aborted;
  if (traj.aborted) {
    summary["abort_reason"] = traj.abort_reason;
    summary["last_valid_time"] = traj.last_valid_time;
  }

  summary["drifts"] = {
      {"mass_rel", rel_drift(traj.records, [](const DiagnosticsRecord& r) { return r.mass; })},
      {"energy_rel", rel_drift(traj.records, [](const DiagnosticsRecord& r) { return r.energy; })}};

  // envelope verdicts on |kinetic| (single exponential) and H^{1/2}
  // (double exponential), first-half fit / second-half test, slack 2
  json envelopes = json::object();
  if (traj.records.size() >= 16 && !traj.aborted) {
    std::vector<double> kin, h12;
    kin.reserve(traj.records.size());
    h12.reserve(traj.records.size());
    bool kin_positive = true;
    for (const DiagnosticsRecord& r : traj.records) {
      kin.push_back(std::abs(r.kinetic));
      if (!(kin.back() > 0.0)) kin_positive = false;
      h12.push_back(r.h_half);
    }
    if (kin_positive) {
      try {
        GrowthFit fit;
        const EnvelopeCheck check =
            split_envelope_check(traj.times, kin, GrowthModel::SingleExponential, 2.0, &fit);
        envelopes["kinetic_single_exponential"] = {
            {"pass", check.pass}, {"max_ratio", check.max_ratio}, {"fit", fit_to_json(fit)}};
      } catch (const std::exception& e) {
        envelopes["kinetic_single_exponential"] = {{"pass", nullptr}, {"reason", e.what()}};
      }
    }
    try {
      GrowthFit fit;
      const EnvelopeCheck check =
          split_envelope_check(traj.times, h12, GrowthModel::DoubleExponential, 2.0, &fit);
      envelopes["h_half_double_exponential"] = {
          {"pass", check.pass}, {"max_ratio", check.max_ratio}, {"fit", fit_to_json(fit)}};
    } catch (const std::exception& e) {
      envelopes["h_half_double_exponential"] = {{"pass", nullptr}, {"reason", e.what()}};
    }
  }
  summary["envelopes"] = envelopes;

  if (!evo.model.hartree.enabled && !traj.aborted) {
    // linear run: compare against the exact per-mode free flow
    const SpinorField exact = propagator_step(psi0, traj.last_valid_time, evo.model.dirac);
    summary["linear_exact_rel_error"] = l2_distance(last_state, exact) / lp_norm(exact, 2.0);
  }

  outcome.csv = diagnostics_csv(traj.records, config.s_list);
  outcome.summary_json = summary.dump(2);
  std::filesystem::create_directories(out_dir);
  write_text(out_dir + "/diagnostics.csv", outcome.csv);
  write_text(out_dir + "/summary.json", outcome.summary_json);
  if (config.save_state && !traj.aborted)
    write_snapshot(out_dir + "/state_final.dhrt", last_state, evo.model);
  outcome.exit_code = traj.aborted ? 3 : 0;
  if (traj.aborted) outcome.message = traj.abort_reason;
  return outcome;
}

ConvergenceOutcome run_convergence(const RunConfig& config, const std::vector<double>& dt_ladder,
                                   const std::string& out_dir) {
  ConvergenceOutcome outcome;
  if (dt_ladder.size() < 4) {
    outcome.exit_code = 2;
    outcome.table = "dt ladder needs at least 4 rungs\n";
    return outcome;
  }
  GridPtr grid;
  SpinorField psi0;
  EvolutionConfig evo;
  try {
    grid = make_grid(config.grid_n, config.grid_length);
    evo = evolution_config(config);
    validate(evo);
    psi0 = build_initial_data(config, grid);
  } catch (const std::exception& e) {
    outcome.exit_code = 2;
    outcome.table = std::string(e.what()) + "\n";
    return outcome;
  }

  double dt_min = dt_ladder.front();
  for (double dt : dt_ladder) dt_min = std::min(dt_min, dt);
  const double dt_ref = dt_min / 8.0;

  auto final_state = [&](double dt) {
    EvolutionConfig run = evo;
    run.dt = dt;
    run.sample_every = std::numeric_limits<int>::max();
    EvolveOptions store;
    store.store_states = true;
    Trajectory traj = evolve(psi0, run, store);
    if (traj.aborted || traj.states.empty())
      throw std::runtime_error("convergence run aborted at dt=" + std::to_string(dt));
    return traj.states.back();
  };

  try {
    std::vector<SpinorField> finals(dt_ladder.size());
    SpinorField reference = make_spinor(grid);
    std::exception_ptr failure;
    std::mutex failure_mutex;
    detail::parallel_for_indexed(dt_ladder.size() + 1, [&](std::size_t i) {
      try {
        if (i == dt_ladder.size()) reference = final_state(dt_ref);
        else finals[i] = final_state(dt_ladder[i]);
      } catch (...) {
        std::scoped_lock lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
    if (failure) std::rethrow_exception(failure);

    outcome.dts = dt_ladder;
    const double ref_norm = lp_norm(reference, 2.0);
    for (const SpinorField& f : finals)
      outcome.errors.push_back(l2_distance(f, reference) / ref_norm);
  } catch (const std::exception& e) {
    outcome.exit_code = 3;
    outcome.table = std::string(e.what()) + "\n";
    return outcome;
  }

  bool all_roundoff = true;
  for (double e : outcome.errors) all_roundoff = all_roundoff && e <= 1e-11;
  outcome.linear_exact = all_roundoff;

  // log-log least squares for the observed order
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(outcome.dts.size());
  for (std::size_t i = 0; i < outcome.dts.size(); ++i) {
    const double x = std::log(outcome.dts[i]);
    const double y = std::log(std::max(outcome.errors[i], 1e-300));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  outcome.fitted_order = (n * sxy - sx * sy) / (n * sxx - sx * sx);

  std::string table = "dt,error\n";
  for (std::size_t i = 0; i < outcome.dts.size(); ++i)
    table += format_double(outcome.dts[i]) + "," + format_double(outcome.errors[i]) + "\n";
  char tail[128];
  if (outcome.linear_exact)
    std::snprintf(tail, sizeof(tail), "order: exact (errors at roundoff)\n");
  else
    std::snprintf(tail, sizeof(tail), "order: %.4f\n", outcome.fitted_order);
  outcome.table = table + tail;

  json j{{"dt", outcome.dts},
         {"error", outcome.errors},
         {"fitted_order", outcome.fitted_order},
         {"linear_exact", outcome.linear_exact},
         {"reference_dt", dt_ref}};
  outcome.json = j.dump(2);
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    write_text(out_dir + "/convergence.json", outcome.json);
  }
  return outcome;
}

}  // namespace dhl
