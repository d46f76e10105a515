#include "rieszlab/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace rieszlab {

bool timings_enabled() {
  static const bool enabled = [] {
    const char* env = std::getenv("RIESZ_LAB_TIMINGS");
    return !(env && std::string(env) == "0");
  }();
  return enabled;
}

double elapsed_ms_or_zero(double ms) { return timings_enabled() ? ms : 0.0; }

bool ScalingReport::all_pass() const {
  for (const Verdict& v : verdicts)
    if (!v.pass) return false;
  return true;
}

nlohmann::ordered_json ScalingReport::to_json() const {
  nlohmann::ordered_json j;
  j["meta"] = meta;
  j["rows"] = nlohmann::ordered_json::array();
  for (const ReportRow& r : rows) {
    nlohmann::ordered_json row;
    row["n"] = r.n;
    row["delta"] = r.delta;
    row["eta_raw"] = r.eta_raw;
    row["eta"] = r.eta;
    row["energy"] = r.energy;
    row["wall_ms"] = r.wall_ms;
    j["rows"].push_back(row);
  }
  j["fits"] = nlohmann::ordered_json::array();
  for (const ReportFit& f : fits) {
    nlohmann::ordered_json fit;
    fit["quantity"] = f.quantity;
    fit["slope"] = f.slope;
    fit["stderr"] = f.stderr_slope;
    fit["residual"] = f.residual;
    fit["n_min"] = f.n_min;
    fit["n_max"] = f.n_max;
    j["fits"].push_back(fit);
  }
  j["verdicts"] = nlohmann::ordered_json::array();
  for (const Verdict& v : verdicts) {
    nlohmann::ordered_json jv;
    jv["name"] = v.name;
    jv["pass"] = v.pass;
    jv["value"] = v.value;
    jv["window"] = {v.lo, v.hi};
    j["verdicts"].push_back(jv);
  }
  return j;
}

std::string ScalingReport::rows_csv() const {
  std::ostringstream os;
  os << "n,delta,eta_raw,eta,energy,wall_ms\n";
  char buf[160];
  for (const ReportRow& r : rows) {
    std::snprintf(buf, sizeof(buf), "%d,%.17g,%.17g,%.17g,%.17g,%.17g\n", r.n, r.delta,
                  r.eta_raw, r.eta, r.energy, r.wall_ms);
    os << buf;
  }
  return os.str();
}

std::string ScalingReport::summary() const {
  std::ostringstream os;
  if (meta.contains("name")) os << "experiment: " << meta["name"].get<std::string>() << "\n";
  for (const ReportRow& r : rows) {
    os << "  n=" << r.n << "  delta=" << r.delta;
    if (r.eta > 0.0) os << "  eta=" << r.eta;
    os << "  energy=" << r.energy << "\n";
  }
  for (const ReportFit& f : fits)
    os << "  fit " << f.quantity << ": slope=" << f.slope << " (stderr " << f.stderr_slope
       << ", residual " << f.residual << ")\n";
  for (const Verdict& v : verdicts)
    os << "  [" << (v.pass ? "pass" : "FAIL") << "] " << v.name << ": value=" << v.value
       << " window=[" << v.lo << ", " << v.hi << "]\n";
  return os.str();
}

}  // namespace rieszlab
