#pragma once

#include <stdexcept>
#include <string>

#include "secres/frequency.hpp"
#include "secres/integrator.hpp"
#include "secres/secular.hpp"

namespace secres {

inline constexpr const char* kVersion = "0.1.0";

// Schema violation; `field` names the offending JSON path when known.
struct SchemaError : std::runtime_error {
  std::string field;
  SchemaError(std::string field_, const std::string& message)
      : std::runtime_error(message), field(std::move(field_)) {}
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SystemFile {
  std::string name;
  SystemConfig config;
  IntegrationSettings settings;
};

// Parse and validate a system description:
// {
//   "name": str, "star_mass_msun": num,
//   "planets": [{"mass_msun", "a_au", "e", "varpi_deg", "mean_anomaly_deg"}, x2],
//   "model": "newtonian"|"relativistic",
//   "integration": {"t_end_yr", "dt_out_yr", "rel_tol"}
// }
// Planets are listed inner first. Angles arrive in degrees and are stored in
// radians. Optional string fields "provenance" and "notes" are accepted at
// the top level and per planet; "integration" accepts optional "abs_tol" and
// "max_steps". Anything else is rejected by name. Throws SchemaError or
// IoError.
SystemFile load_system_file(const std::string& path);

// CSV columns: t_yr,e1,varpi1_rad,e2,varpi2_rad,a1_au,a2_au,energy_rel_err.
// 17 significant digits, LF newlines, version confined to a leading comment
// line. Writes are atomic (temp file + rename). Throws IoError.
void write_results_csv(const std::string& path, const std::vector<double>& times,
                       const ElementsSeries& series,
                       const std::vector<double>& energy_rel_err);

// The same table for an analytic secular solution sampled on `times`:
// semi-major axes stay at their initial values and energy_rel_err is 0 by
// construction.
void write_secular_csv(const std::string& path, const SystemConfig& config,
                       const SecularSolution& sol, Model model,
                       const std::vector<double>& times);

// Deterministic JSON bodies for the CLI (trailing newline included).
std::string secular_report_json(const std::string& name,
                                const SystemConfig& config,
                                const SecularSolution& sol);
std::string precession_report_json(const std::string& name,
                                   const PrecessionReport& report);

// Atomic text write (temp file + rename). Throws IoError.
void write_text_atomic(const std::string& path, const std::string& body);

}  // namespace secres
