#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace rieszlab {

struct ReportRow {
  int n = 0;
  double delta = 0.0;    // separation distance
  double eta_raw = 0.0;  // covering radius before refinement (0 when skipped)
  double eta = 0.0;      // refined covering radius (0 when skipped)
  double energy = 0.0;
  double wall_ms = 0.0;
};

struct ReportFit {
  std::string quantity;
  double slope = 0.0;
  double stderr_slope = 0.0;
  double residual = 0.0;
  int n_min = 0;
  int n_max = 0;
};

struct Verdict {
  std::string name;
  bool pass = false;
  double value = 0.0;
  double lo = 0.0;
  double hi = 0.0;
};

/// Per-N diagnostics plus fitted exponents and pass/fail verdicts.
struct ScalingReport {
  nlohmann::ordered_json meta;
  std::vector<ReportRow> rows;
  std::vector<ReportFit> fits;
  std::vector<Verdict> verdicts;

  bool all_pass() const;
  nlohmann::ordered_json to_json() const;
  std::string rows_csv() const;
  std::string summary() const;
};

/// Wall-clock timings are recorded in reports unless RIESZ_LAB_TIMINGS=0,
/// which zeroes them so identical runs produce byte-identical reports.
bool timings_enabled();
double elapsed_ms_or_zero(double ms);

}  // namespace rieszlab
