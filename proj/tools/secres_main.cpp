#include <cmath>
#include <cstdio>
#include <filesystem>
#include <future>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "secres/criterion.hpp"
#include "secres/frequency.hpp"
#include "secres/integrator.hpp"
#include "secres/secular.hpp"
#include "secres/system_io.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitCompute = 3;
constexpr int kExitIo = 4;

double parse_c_override(const std::string& text) {
  double v = 0.0;
  try {
    size_t pos = 0;
    v = std::stod(text, &pos);
    if (pos != text.size()) throw std::invalid_argument(text);
  } catch (const std::exception&) {
    throw std::invalid_argument("--c-override: not a number: " + text);
  }
  if (!(v > 0.0))
    throw std::invalid_argument("--c-override must be positive (inf allowed)");
  return v;
}

struct CommonFlags {
  std::string c_override;
  double rel_tol = 0.0;
  bool has_rel_tol = false;
  double threshold = 0.1;
};

void apply_overrides(secres::SystemFile& sf, const CommonFlags& flags) {
  if (!flags.c_override.empty())
    sf.config.constants.c = parse_c_override(flags.c_override);
  if (flags.has_rel_tol) {
    if (!(flags.rel_tol > 0.0) || flags.rel_tol > 1e-6)
      throw std::invalid_argument("--rel-tol must be in (0, 1e-6]");
    sf.settings.rel_tol = flags.rel_tol;
  }
}

int cmd_integrate(const std::string& file, const std::string& out_csv,
                  const CommonFlags& flags) {
  secres::SystemFile sf = secres::load_system_file(file);
  apply_overrides(sf, flags);
  secres::CartesianTrajectory traj = secres::integrate(sf.config, sf.settings);
  secres::ElementsSeries series = secres::osculating_series(traj);
  secres::write_results_csv(out_csv, traj.times, series, traj.energy_rel_err);
  if (traj.status != secres::IntegrationStatus::kOk) {
    const char* why = traj.status == secres::IntegrationStatus::kSingularity
                          ? "close encounter below the separation floor"
                          : "step budget exhausted";
    std::fprintf(stderr, "secres: integration: aborted (%s); wrote %zu rows\n",
                 why, traj.times.size());
    return kExitCompute;
  }
  return 0;
}

int cmd_secular(const std::string& file, const CommonFlags& flags) {
  secres::SystemFile sf = secres::load_system_file(file);
  apply_overrides(sf, flags);
  secres::SecularSolution sol = secres::secular_solution(sf.config);
  std::string body = secres::secular_report_json(sf.name, sf.config, sol);
  std::fputs(body.c_str(), stdout);
  return 0;
}

int cmd_criterion(const std::vector<std::string>& files, const CommonFlags& flags) {
  std::printf("%-24s %14s %-4s %14s %-4s\n", "system", "Pi_1", "rel1", "Pi_2",
              "rel2");
  for (const auto& file : files) {
    secres::SystemFile sf = secres::load_system_file(file);
    apply_overrides(sf, flags);
    secres::PiReport rep = secres::pi_indicator(sf.config, flags.threshold);
    std::printf("%-24s %14.7f %-4s %14.7f %-4s\n", sf.name.c_str(), rep.pi[0],
                rep.relevant[0] ? "yes" : "no", rep.pi[1],
                rep.relevant[1] ? "yes" : "no");
  }
  return 0;
}

int cmd_compare(const std::string& file, const std::string& out_dir,
                const CommonFlags& flags) {
  secres::SystemFile sf = secres::load_system_file(file);
  apply_overrides(sf, flags);

  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw secres::IoError("cannot create output directory " + out_dir);

  // resolve the output grid before integrating: the perihelion unwrap needs
  // at least 32 samples per precession period, pre-estimated analytically
  secres::SecularSolution sol = secres::secular_solution(sf.config);
  double g_max = 0.0;
  for (int j = 0; j < 2; ++j) {
    g_max = std::max(g_max, std::abs(sol.newtonian.g[j]));
    g_max = std::max(g_max, std::abs(sol.relativistic.g[j]));
  }
  if (g_max > 0.0) {
    double dt_max = secres::kTwoPi / g_max / 32.0;
    if (sf.settings.dt_out > dt_max) {
      std::fprintf(stderr,
                   "secres: note: dt_out shrunk from %g to %g yr to resolve "
                   "the fastest precession period\n",
                   sf.settings.dt_out, dt_max);
      sf.settings.dt_out = dt_max;
    }
  }

  secres::SystemConfig newton_cfg = sf.config;
  newton_cfg.model = secres::Model::kNewtonian;
  secres::SystemConfig rel_cfg = sf.config;
  rel_cfg.model = secres::Model::kRelativistic;

  auto run = [&](const secres::SystemConfig& cfg) {
    secres::CartesianTrajectory traj = secres::integrate(cfg, sf.settings);
    if (traj.status != secres::IntegrationStatus::kOk) {
      const char* why = traj.status == secres::IntegrationStatus::kSingularity
                            ? "close encounter below the separation floor"
                            : "step budget exhausted";
      throw std::runtime_error(std::string("integration aborted: ") + why);
    }
    return traj;
  };
  auto rel_future = std::async(std::launch::async, run, rel_cfg);
  secres::CartesianTrajectory newton_traj = run(newton_cfg);
  secres::CartesianTrajectory rel_traj = rel_future.get();
  secres::ElementsSeries newton_series = secres::osculating_series(newton_traj);
  secres::ElementsSeries rel_series = secres::osculating_series(rel_traj);

  namespace fs = std::filesystem;
  auto path = [&](const char* name) { return (fs::path(out_dir) / name).string(); };
  secres::write_results_csv(path("numeric_newtonian.csv"), newton_traj.times,
                            newton_series, newton_traj.energy_rel_err);
  secres::write_results_csv(path("numeric_relativistic.csv"), rel_traj.times,
                            rel_series, rel_traj.energy_rel_err);
  secres::write_secular_csv(path("analytic_newtonian.csv"), sf.config, sol,
                            secres::Model::kNewtonian, newton_traj.times);
  secres::write_secular_csv(path("analytic_relativistic.csv"), sf.config, sol,
                            secres::Model::kRelativistic, newton_traj.times);

  secres::PrecessionReport report =
      secres::compare_series(sf.config, newton_traj.times, newton_series,
                             rel_traj.times, rel_series, flags.threshold);
  std::string body = secres::precession_report_json(sf.name, report);
  secres::write_text_atomic(path("report.json"), body);
  std::fputs(body.c_str(), stdout);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"secular evolution of two-planet systems, Newtonian and 1PN"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("secres ") + secres::kVersion);

  std::string file, out_csv, out_dir;
  std::vector<std::string> files;
  CommonFlags flags;

  auto add_c_override = [&](CLI::App* sub) {
    sub->add_option("--c-override", flags.c_override,
                    "speed of light, AU/yr (inf gives the Newtonian limit)");
  };
  auto add_rel_tol = [&](CLI::App* sub) {
    sub->add_option("--rel-tol", flags.rel_tol,
                    "integrator relative tolerance, (0, 1e-6]")
        ->each([&](const std::string&) { flags.has_rel_tol = true; });
  };

  CLI::App* integ = app.add_subcommand(
      "integrate", "integrate a system and write the elements CSV");
  integ->add_option("file", file, "system JSON file")->required();
  integ->add_option("-o,--output", out_csv, "output CSV path")->required();
  add_c_override(integ);
  add_rel_tol(integ);

  CLI::App* secular =
      app.add_subcommand("secular", "print the analytic secular report");
  secular->add_option("file", file, "system JSON file")->required();
  add_c_override(secular);

  CLI::App* criterion = app.add_subcommand(
      "criterion", "tabulate the relativistic relevance indicator");
  criterion->add_option("files", files, "system JSON files")->required();
  criterion->add_option("--threshold", flags.threshold,
                        "relevance threshold on Pi (default 0.1)");
  add_c_override(criterion);

  CLI::App* compare = app.add_subcommand(
      "compare", "numeric vs analytic precession, both models");
  compare->add_option("file", file, "system JSON file")->required();
  compare->add_option("-o,--out-dir", out_dir, "output directory")->required();
  compare->add_option("--threshold", flags.threshold,
                      "relevance threshold on Pi (default 0.1)");
  add_c_override(compare);
  add_rel_tol(compare);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "secres: usage: %s\n", e.what());
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(integ)) return cmd_integrate(file, out_csv, flags);
    if (app.got_subcommand(secular)) return cmd_secular(file, flags);
    if (app.got_subcommand(criterion)) return cmd_criterion(files, flags);
    if (app.got_subcommand(compare)) return cmd_compare(file, out_dir, flags);
    std::fprintf(stderr, "secres: usage: missing subcommand\n");
    return kExitUsage;
  } catch (const secres::SchemaError& e) {
    std::fprintf(stderr, "secres: schema: [%s] %s\n", e.field.c_str(), e.what());
    return kExitUsage;
  } catch (const secres::IoError& e) {
    std::fprintf(stderr, "secres: io: %s\n", e.what());
    return kExitIo;
  } catch (const secres::UnboundOrbit& e) {
    std::fprintf(stderr, "secres: integration: unbound orbit: %s\n", e.what());
    return kExitCompute;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "secres: usage: %s\n", e.what());
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "secres: config: %s\n", e.what());
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    std::fprintf(stderr, "secres: integration: %s\n", e.what());
    return kExitCompute;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "secres: internal: %s\n", e.what());
    return 1;
  }
}
