#pragma once

#include <string>
#include <vector>

#include "dsh/complex_utils.hpp"
#include "dsh/huygens.hpp"

namespace dsh {

/// Flat configuration for a tail scan as driven from the command line or a
/// key=value config file. Round-trips exactly through to_kv()/from_kv().
struct RunConfig {
  double H = 1.0;
  cplx m = 0.0;
  double eps = 0.1;
  double amp = 1.0;
  double t_min = 3.0;
  double t_max = 12.0;
  int t_steps = 20;
  huygens::Split split = huygens::Split::FIRST;
  double huygens_tol = 1e-8;
  double rate_tol = 0.05;
  std::string format = "csv";
  std::string out_path;

  std::string to_kv() const;
  static RunConfig from_kv(const std::string& text);
  std::vector<double> time_grid() const;
};

std::string verdict_name(huygens::Verdict v);
std::string mass_tag_name(MassTag t);

/// Deterministic CSV rendering of a tail report: config echo header, one
/// data row per grid point, verdict footer. LF line endings, '.' decimal.
std::string tail_report_csv(const huygens::TailReport& rep, const RunConfig& cfg);

}  // namespace dsh
