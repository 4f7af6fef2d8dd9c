#include "secres/system_io.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace secres {
namespace {

using Json = nlohmann::ordered_json;

double require_number(const Json& obj, const std::string& path,
                      const std::string& key) {
  if (!obj.contains(key)) throw SchemaError(path + key, "missing field");
  const Json& v = obj.at(key);
  if (!v.is_number()) throw SchemaError(path + key, "expected a number");
  double x = v.get<double>();
  if (!std::isfinite(x)) throw SchemaError(path + key, "must be finite");
  return x;
}

std::string require_string(const Json& obj, const std::string& path,
                           const std::string& key) {
  if (!obj.contains(key)) throw SchemaError(path + key, "missing field");
  const Json& v = obj.at(key);
  if (!v.is_string()) throw SchemaError(path + key, "expected a string");
  return v.get<std::string>();
}

void reject_unknown(const Json& obj, const std::string& path,
                    const std::set<std::string>& allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!allowed.count(it.key()))
      throw SchemaError(path + it.key(), "unknown field");
  }
}

constexpr double kDegToRad = kPi / 180.0;

}  // namespace

SystemFile load_system_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const std::exception& ex) {
    throw SchemaError("", std::string("not valid JSON: ") + ex.what());
  }
  if (!doc.is_object()) throw SchemaError("", "top level must be an object");

  reject_unknown(doc, "", {"name", "star_mass_msun", "planets", "model",
                           "integration", "provenance", "notes"});

  SystemFile sf;
  sf.name = require_string(doc, "", "name");
  if (sf.name.empty()) throw SchemaError("name", "must be non-empty");

  sf.config.m0 = require_number(doc, "", "star_mass_msun");
  if (sf.config.m0 <= 0.0) throw SchemaError("star_mass_msun", "must be positive");

  if (!doc.contains("planets")) throw SchemaError("planets", "missing field");
  const Json& planets = doc.at("planets");
  if (!planets.is_array() || planets.size() != 2)
    throw SchemaError("planets", "expected an array of exactly 2 planets, inner first");
  for (int i = 0; i < 2; ++i) {
    const Json& p = planets.at(i);
    std::string path_i = "planets[" + std::to_string(i) + "].";
    if (!p.is_object()) throw SchemaError(path_i, "expected an object");
    reject_unknown(p, path_i, {"mass_msun", "a_au", "e", "varpi_deg",
                               "mean_anomaly_deg", "provenance", "notes"});
    Planet& pl = sf.config.planets[i];
    pl.m = require_number(p, path_i, "mass_msun");
    if (pl.m <= 0.0) throw SchemaError(path_i + "mass_msun", "must be positive");
    pl.elements.a = require_number(p, path_i, "a_au");
    if (pl.elements.a <= 0.0) throw SchemaError(path_i + "a_au", "must be positive");
    pl.elements.e = require_number(p, path_i, "e");
    if (pl.elements.e < 0.0 || pl.elements.e >= 1.0)
      throw SchemaError(path_i + "e", "must be in [0, 1)");
    pl.elements.varpi =
        reduce_angle(require_number(p, path_i, "varpi_deg") * kDegToRad);
    pl.elements.M =
        reduce_angle(require_number(p, path_i, "mean_anomaly_deg") * kDegToRad);
  }
  if (!(sf.config.planets[0].elements.a < sf.config.planets[1].elements.a))
    throw SchemaError("planets", "must be ordered inner first (a1 < a2)");

  std::string model = require_string(doc, "", "model");
  if (model == "newtonian") {
    sf.config.model = Model::kNewtonian;
  } else if (model == "relativistic") {
    sf.config.model = Model::kRelativistic;
  } else {
    throw SchemaError("model", "expected \"newtonian\" or \"relativistic\"");
  }

  if (!doc.contains("integration")) throw SchemaError("integration", "missing field");
  const Json& integ = doc.at("integration");
  if (!integ.is_object()) throw SchemaError("integration", "expected an object");
  reject_unknown(integ, "integration.",
                 {"t_end_yr", "dt_out_yr", "rel_tol", "abs_tol", "max_steps"});
  sf.settings.t_end = require_number(integ, "integration.", "t_end_yr");
  if (sf.settings.t_end <= 0.0)
    throw SchemaError("integration.t_end_yr", "must be positive");
  sf.settings.dt_out = require_number(integ, "integration.", "dt_out_yr");
  if (sf.settings.dt_out <= 0.0 || sf.settings.dt_out > sf.settings.t_end)
    throw SchemaError("integration.dt_out_yr", "must be in (0, t_end_yr]");
  sf.settings.rel_tol = require_number(integ, "integration.", "rel_tol");
  if (sf.settings.rel_tol <= 0.0 || sf.settings.rel_tol > 1e-6)
    throw SchemaError("integration.rel_tol", "must be in (0, 1e-6]");
  if (integ.contains("abs_tol")) {
    sf.settings.abs_tol = require_number(integ, "integration.", "abs_tol");
    if (sf.settings.abs_tol < 0.0)
      throw SchemaError("integration.abs_tol", "must be non-negative");
  }
  if (integ.contains("max_steps")) {
    const Json& ms = integ.at("max_steps");
    if (!ms.is_number_integer() || ms.get<std::int64_t>() <= 0)
      throw SchemaError("integration.max_steps", "must be a positive integer");
    sf.settings.max_steps = ms.get<std::int64_t>();
  }
  return sf;
}

void write_text_atomic(const std::string& path, const std::string& body) {
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
    out.write(body.data(), static_cast<std::streamsize>(body.size()));
    out.flush();
    if (!out) throw IoError("write failed: " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot rename into place: " + path);
  }
}

namespace {

void append_row(std::string& body, double t, double e1, double w1, double e2,
                double w2, double a1, double a2, double err) {
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", t, e1, w1,
                e2, w2, a1, a2, err);
  body += buf;
}

constexpr const char* kCsvHeader =
    "t_yr,e1,varpi1_rad,e2,varpi2_rad,a1_au,a2_au,energy_rel_err\n";

}  // namespace

void write_results_csv(const std::string& path, const std::vector<double>& times,
                       const ElementsSeries& series,
                       const std::vector<double>& energy_rel_err) {
  size_t n = times.size();
  if (series.planets[0].size() != n || series.planets[1].size() != n ||
      energy_rel_err.size() != n)
    throw std::invalid_argument("write_results_csv: column length mismatch");
  std::string body = std::string("# secres ") + kVersion + "\n" + kCsvHeader;
  for (size_t i = 0; i < n; ++i) {
    const auto& p1 = series.planets[0][i];
    const auto& p2 = series.planets[1][i];
    append_row(body, times[i], p1.e, p1.varpi, p2.e, p2.varpi, p1.a, p2.a,
               energy_rel_err[i]);
  }
  write_text_atomic(path, body);
}

void write_secular_csv(const std::string& path, const SystemConfig& config,
                       const SecularSolution& sol, Model model,
                       const std::vector<double>& times) {
  std::string body = std::string("# secres ") + kVersion + "\n" + kCsvHeader;
  double a1 = config.planets[0].elements.a;
  double a2 = config.planets[1].elements.a;
  for (double t : times) {
    EccentricityVector v = secular_eccentricities(sol, model, t);
    double e1 = std::hypot(v.k[0], v.h[0]);
    double e2 = std::hypot(v.k[1], v.h[1]);
    double w1 = reduce_angle(std::atan2(v.h[0], v.k[0]));
    double w2 = reduce_angle(std::atan2(v.h[1], v.k[1]));
    append_row(body, t, e1, w1, e2, w2, a1, a2, 0.0);
  }
  write_text_atomic(path, body);
}

namespace {

Json mat_json(const Mat2& m) {
  return Json::array({Json::array({m[0][0], m[0][1]}),
                      Json::array({m[1][0], m[1][1]})});
}

Json modes_json(const SecularModes& modes, const SecularMatrices& matrices) {
  Json j;
  j["frequencies_rad_yr"] = {modes.g[0], modes.g[1]};
  j["precession_periods_yr"] = {kTwoPi / std::abs(modes.g[0]),
                                kTwoPi / std::abs(modes.g[1])};
  double beat = std::abs(modes.g[0] - modes.g[1]);
  j["beat_period_yr"] = beat > 0.0 ? kTwoPi / beat : 0.0;
  j["mode_vectors"] = mat_json(modes.modes);
  j["amplitudes"] = {modes.amplitudes[0], modes.amplitudes[1]};
  j["phases_rad"] = {modes.phases[0], modes.phases[1]};
  j["degenerate"] = modes.degenerate;
  Envelope env = envelope(modes);
  j["eccentricity_min"] = {env.e_min[0] / matrices.basis_scale[0],
                           env.e_min[1] / matrices.basis_scale[1]};
  j["eccentricity_max"] = {env.e_max[0] / matrices.basis_scale[0],
                           env.e_max[1] / matrices.basis_scale[1]};
  return j;
}

}  // namespace

std::string secular_report_json(const std::string& name,
                                const SystemConfig& config,
                                const SecularSolution& sol) {
  Json j;
  j["name"] = name;
  j["basis_scale"] = {sol.matrices.basis_scale[0], sol.matrices.basis_scale[1]};
  j["matrix_newtonian_rad_yr"] = mat_json(sol.matrices.A);
  j["matrix_relativistic_rad_yr"] = mat_json(sol.matrices.B);
  auto delta = gr_correction(config);
  j["gr_correction_rad_yr"] = {delta[0], delta[1]};
  j["newtonian"] = modes_json(sol.newtonian, sol.matrices);
  j["relativistic"] = modes_json(sol.relativistic, sol.matrices);
  return j.dump(2) + "\n";
}

std::string precession_report_json(const std::string& name,
                                   const PrecessionReport& report) {
  Json j;
  j["name"] = name;
  Json planets = Json::array();
  for (int i = 0; i < 2; ++i) {
    const PlanetFrequencies& p = report.planets[i];
    Json pj;
    pj["g_numeric_newtonian_rad_yr"] = p.g_numeric_newton;
    pj["g_numeric_relativistic_rad_yr"] = p.g_numeric_rel;
    pj["g_analytic_newtonian_rad_yr"] = p.g_analytic_newton;
    pj["g_analytic_relativistic_rad_yr"] = p.g_analytic_rel;
    pj["rel_shift"] = p.rel_shift;
    planets.push_back(pj);
  }
  j["planets"] = planets;
  Json pi;
  pi["values"] = {report.pi.pi[0], report.pi.pi[1]};
  pi["relevant"] = {report.pi.relevant[0], report.pi.relevant[1]};
  pi["threshold"] = report.pi.threshold;
  j["pi"] = pi;
  return j.dump(2) + "\n";
}

}  // namespace secres
