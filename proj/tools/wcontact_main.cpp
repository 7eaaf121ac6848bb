// Command-line experiment harness: run | sweep-gamma | sweep-layer | verify |
// mesh-info. Scenario input is a flat key=value config file plus --set
// overrides. Exit codes: 0 success, 1 config error, 2 verification failure,
// 3 non-converged run under --strict.

#include "CLI11.hpp"

#include "wcontact/config.hpp"
#include "wcontact/harness.hpp"
#include "wcontact/verify.hpp"

#include <cstdio>
#include <string>
#include <utility>
#include <vector>

namespace {

struct CommonArgs {
  std::string config_path;
  std::vector<std::string> sets;
  std::string output;
  std::string gamma;
  std::string strategy;
  std::string seed;

  void attach(CLI::App* cmd) {
    cmd->add_option("-c,--config", config_path, "key=value config file");
    cmd->add_option("--set", sets, "override a config key, e.g. --set layer.B=1e-5");
    cmd->add_option("-o,--output", output, "output directory");
    cmd->add_option("--gamma", gamma, "relaxation parameter (overrides solver.gamma)");
    cmd->add_option("--strategy", strategy, "psi strategy: neumann|full_robin|active_set");
    cmd->add_option("--seed", seed, "seed for randomized checks");
  }

  wcontact::ScenarioConfig load() const {
    std::vector<std::pair<std::string, std::string>> overrides;
    for (const auto& s : sets) {
      const auto eq = s.find('=');
      if (eq == std::string::npos)
        throw wcontact::ConfigError("--set expects key=value, got \"" + s + "\"");
      overrides.emplace_back(s.substr(0, eq), s.substr(eq + 1));
    }
    if (!gamma.empty()) overrides.emplace_back("solver.gamma", gamma);
    if (!strategy.empty()) overrides.emplace_back("solver.strategy", strategy);
    if (!seed.empty()) overrides.emplace_back("seed", seed);
    if (!output.empty()) overrides.emplace_back("output", output);
    return wcontact::load_scenario_config(config_path, overrides);
  }
};

int do_run(const CommonArgs& args, bool strict) {
  const auto cfg = args.load();
  const auto art = wcontact::cmd_run(cfg);
  std::printf("outcome=%s iterations=%d seconds=%.3f\n", wcontact::to_string(art.summary.outcome),
              art.summary.iterations, art.summary.seconds);
  if (!art.summary.note.empty()) std::printf("note=%s\n", art.summary.note.c_str());
  std::printf("wrote %s\nwrote %s\nwrote %s\n", art.convergence_csv.string().c_str(),
              art.pressure_csv.string().c_str(), art.summary_file.string().c_str());
  if (strict && art.summary.outcome != wcontact::Outcome::converged) return 3;
  return 0;
}

int do_sweep_gamma(const CommonArgs& args, const std::string& gammas_arg) {
  const auto cfg = args.load();
  const auto gammas = wcontact::parse_double_list("--gammas", gammas_arg);
  const auto rows = wcontact::cmd_sweep_gamma(cfg, gammas);
  for (const auto& row : rows)
    std::printf("gamma=%-8g outcome=%-14s iterations=%d%s%s\n", row.gamma,
                wcontact::to_string(row.outcome), row.iterations,
                row.note.empty() ? "" : "  note=", row.note.c_str());
  std::printf("wrote %s\n",
              (std::filesystem::path(cfg.output_dir) / "gamma_sweep.csv").string().c_str());
  return 0;
}

int do_sweep_layer(const CommonArgs& args, const std::string& layers_arg) {
  const auto cfg = args.load();
  const auto layers = wcontact::parse_layer_list("--layers", layers_arg);
  const auto rows = wcontact::cmd_sweep_layer(cfg, layers);
  for (const auto& row : rows)
    std::printf("B=%-10g a=%-6g outcome=%-14s iterations=%-5d peak|sigma_n|=%g MPa\n",
                row.layer_b, row.layer_a, wcontact::to_string(row.outcome), row.iterations,
                row.peak_pressure);
  std::printf("wrote %s\n",
              (std::filesystem::path(cfg.output_dir) / "layer_sweep.csv").string().c_str());
  return 0;
}

int do_verify(const CommonArgs& args) {
  const auto cfg = args.load();
  const auto results = wcontact::run_verification(cfg);
  for (const auto& r : results)
    std::printf("[%s] %-28s measured %.6g vs required %.6g  %s\n", r.pass ? "PASS" : "FAIL",
                r.name.c_str(), r.measured, r.required, r.note.c_str());
  if (!wcontact::all_passed(results)) {
    std::printf("verification FAILED\n");
    return 2;
  }
  std::printf("verification passed (%zu checks)\n", results.size());
  return 0;
}

int do_mesh_info(const CommonArgs& args) {
  const auto cfg = args.load();
  const auto problem = wcontact::generate_scenario(cfg);
  std::printf("bodies=%zu\n", problem.bodies.size());
  std::printf("elements_per_body=%d (2*nx*ny with nx=%d, ny=%d)\n", cfg.elements_per_body(),
              cfg.nx, cfg.ny);
  for (size_t b = 0; b < problem.bodies.size(); ++b) {
    const auto dofs = wcontact::DofMap::build(problem.bodies[b].mesh);
    std::printf("body %zu: nodes=%zu dofs=%d free_dofs=%d triangles=%zu\n", b,
                problem.bodies[b].mesh.nodes.size(), dofs.n_full(), dofs.n_free(),
                problem.bodies[b].mesh.triangles.size());
  }
  for (int q = 0; q < int(problem.contact_pairs.size()); ++q) {
    const auto pair = wcontact::build_pairing(problem, q);
    double len = 0.0, max_gap = 0.0;
    for (const auto& pn : pair.nodes) {
      len += pn.tributary;
      max_gap = std::max(max_gap, pn.gap);
    }
    std::printf("contact pair %d: nodes=%zu segment_length=%g cm max_gap=%g cm\n", q,
                pair.nodes.size(), len, max_gap);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2D plane-strain FE solver for unilateral multi-body contact through "
               "nonlinear Winkler layers, with parallel Robin-Robin iterations"};
  app.require_subcommand(1);

  CommonArgs run_args, sweep_g_args, sweep_l_args, verify_args, info_args;
  bool strict = false;
  std::string gammas_arg, layers_arg;

  auto* run = app.add_subcommand("run", "solve one scenario and write CSV artifacts");
  run_args.attach(run);
  run->add_flag("--strict", strict, "exit 3 when the run does not converge");

  auto* sweep_gamma = app.add_subcommand("sweep-gamma", "one run per relaxation parameter");
  sweep_g_args.attach(sweep_gamma);
  sweep_gamma->add_option("--gammas", gammas_arg, "comma list, e.g. 0.05,0.6,0.9")->required();

  auto* sweep_layer = app.add_subcommand("sweep-layer", "one run per (B, a) layer");
  sweep_l_args.attach(sweep_layer);
  sweep_layer->add_option("--layers", layers_arg, "comma list of B:a, e.g. 1e-5:0.3,1e-5:1");

  auto* verify = app.add_subcommand("verify", "run the verification suite");
  verify_args.attach(verify);

  auto* info = app.add_subcommand("mesh-info", "print scenario discretization facts");
  info_args.attach(info);

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return do_run(run_args, strict);
    if (sweep_gamma->parsed()) return do_sweep_gamma(sweep_g_args, gammas_arg);
    if (sweep_layer->parsed()) return do_sweep_layer(sweep_l_args, layers_arg);
    if (verify->parsed()) return do_verify(verify_args);
    if (info->parsed()) return do_mesh_info(info_args);
  } catch (const wcontact::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 1;
  } catch (const wcontact::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
