#include "dsh/report.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "dsh/errors.hpp"

namespace dsh {

namespace {

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

std::string format_complex(cplx z) {
  std::string s = fmt17(z.real());
  if (z.imag() >= 0.0 || std::isnan(z.imag()))
    s += "+" + fmt17(z.imag()) + "i";
  else
    s += fmt17(z.imag()) + "i";
  return s;
}

cplx parse_complex(const std::string& in) {
  std::string s;
  for (char ch : in)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw DomainError("empty complex literal");

  // peel one signed float off the front; returns chars consumed (0 if none)
  auto scan_num = [](const std::string& t, std::size_t pos, double* out) {
    const char* start = t.c_str() + pos;
    char* end = nullptr;
    double v = std::strtod(start, &end);
    if (end == start) return std::size_t{0};
    *out = v;
    return static_cast<std::size_t>(end - start);
  };

  double re = 0.0, im = 0.0;
  std::size_t pos = 0;
  bool have_re = false, have_im = false;

  while (pos < s.size()) {
    // bare "i", "+i", "-i"
    if (s[pos] == 'i' || ((s[pos] == '+' || s[pos] == '-') && pos + 1 < s.size() &&
                          s[pos + 1] == 'i')) {
      if (have_im) throw DomainError("malformed complex literal: " + in);
      im += (s[pos] == '-') ? -1.0 : 1.0;
      pos += (s[pos] == 'i') ? 1 : 2;
      have_im = true;
      continue;
    }
    double v = 0.0;
    const std::size_t used = scan_num(s, pos, &v);
    if (used == 0) throw DomainError("malformed complex literal: " + in);
    pos += used;
    if (pos < s.size() && (s[pos] == 'i' || s[pos] == 'j')) {
      if (have_im) throw DomainError("malformed complex literal: " + in);
      im += v;
      ++pos;
      have_im = true;
    } else {
      if (have_re) throw DomainError("malformed complex literal: " + in);
      re += v;
      have_re = true;
    }
  }
  if (!have_re && !have_im) throw DomainError("malformed complex literal: " + in);
  return {re, im};
}

std::string RunConfig::to_kv() const {
  std::ostringstream os;
  os << "H=" << fmt17(H) << "\n";
  os << "m=" << format_complex(m) << "\n";
  os << "eps=" << fmt17(eps) << "\n";
  os << "amp=" << fmt17(amp) << "\n";
  os << "t_min=" << fmt17(t_min) << "\n";
  os << "t_max=" << fmt17(t_max) << "\n";
  os << "t_steps=" << t_steps << "\n";
  os << "split=" << (split == huygens::Split::FIRST ? "first" : "second") << "\n";
  os << "huygens_tol=" << fmt17(huygens_tol) << "\n";
  os << "rate_tol=" << fmt17(rate_tol) << "\n";
  os << "format=" << format << "\n";
  if (!out_path.empty()) os << "out=" << out_path << "\n";
  return os.str();
}

RunConfig RunConfig::from_kv(const std::string& text) {
  RunConfig rc;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw DomainError("config line is not key=value: " + line);
    const std::string key = line.substr(0, eq), val = line.substr(eq + 1);
    if (key == "H") rc.H = std::stod(val);
    else if (key == "m") rc.m = parse_complex(val);
    else if (key == "eps") rc.eps = std::stod(val);
    else if (key == "amp") rc.amp = std::stod(val);
    else if (key == "t_min") rc.t_min = std::stod(val);
    else if (key == "t_max") rc.t_max = std::stod(val);
    else if (key == "t_steps") rc.t_steps = std::stoi(val);
    else if (key == "split") {
      if (val == "first") rc.split = huygens::Split::FIRST;
      else if (val == "second") rc.split = huygens::Split::SECOND;
      else throw DomainError("split must be 'first' or 'second'");
    } else if (key == "huygens_tol") rc.huygens_tol = std::stod(val);
    else if (key == "rate_tol") rc.rate_tol = std::stod(val);
    else if (key == "format") rc.format = val;
    else if (key == "out") rc.out_path = val;
    else throw DomainError("unknown config key: " + key);
  }
  return rc;
}

std::vector<double> RunConfig::time_grid() const {
  std::vector<double> ts;
  ts.reserve(t_steps);
  if (t_steps == 1) {
    ts.push_back(t_min);
    return ts;
  }
  for (int i = 0; i < t_steps; ++i)
    ts.push_back(t_min + (t_max - t_min) * double(i) / double(t_steps - 1));
  return ts;
}

std::string verdict_name(huygens::Verdict v) {
  switch (v) {
    case huygens::Verdict::HUYGENSIAN: return "HUYGENSIAN";
    case huygens::Verdict::NON_HUYGENSIAN_MATCHED: return "NON_HUYGENSIAN_MATCHED";
    case huygens::Verdict::NON_HUYGENSIAN_UNMATCHED: return "NON_HUYGENSIAN_UNMATCHED";
  }
  return "?";
}

std::string mass_tag_name(MassTag t) {
  switch (t) {
    case MassTag::GENERIC: return "GENERIC";
    case MassTag::ODD_NEG: return "ODD_NEG";
    case MassTag::ODD_POS: return "ODD_POS";
    case MassTag::EVEN_POS: return "EVEN_POS";
    case MassTag::EVEN_NEG: return "EVEN_NEG";
    case MassTag::MINUS_HALF: return "MINUS_HALF";
    case MassTag::PLUS_HALF: return "PLUS_HALF";
    case MassTag::ZERO: return "ZERO";
    case MassTag::PLUS_IH: return "PLUS_IH";
    case MassTag::MINUS_IH: return "MINUS_IH";
  }
  return "?";
}

std::string tail_report_csv(const huygens::TailReport& rep, const RunConfig& cfg) {
  std::ostringstream os;
  os << "# dsh tail-scan\n";
  os << "# H=" << fmt17(cfg.H) << " m=" << format_complex(cfg.m)
     << " eps=" << fmt17(cfg.eps) << " amp=" << fmt17(cfg.amp)
     << " split=" << (rep.split == huygens::Split::FIRST ? "first" : "second")
     << " t_min=" << fmt17(cfg.t_min) << " t_max=" << fmt17(cfg.t_max)
     << " t_steps=" << cfg.t_steps << " huygens_tol=" << fmt17(rep.tol.huygens_tol)
     << " rate_tol=" << fmt17(rep.tol.rate_tol) << "\n";
  os << "# mass_class=" << mass_tag_name(rep.mass_class.tag);
  if (rep.mass_class.ell) os << " ell=" << *rep.mass_class.ell;
  os << "\n";
  os << "t,tail_re,tail_im,tail_abs,pred_re,pred_im,ratio_dev\n";
  for (std::size_t i = 0; i < rep.times.size(); ++i) {
    const cplx tail = rep.tails[i], pred = rep.predicted[i];
    os << fmt17(rep.times[i]) << "," << fmt17(tail.real()) << ","
       << fmt17(tail.imag()) << "," << fmt17(std::abs(tail)) << ","
       << fmt17(pred.real()) << "," << fmt17(pred.imag()) << ",";
    if (std::abs(pred) == 0.0)
      os << "nan";
    else
      os << fmt17(std::abs(rep.ratios[i] - 1.0));
    os << "\n";
  }
  os << "# verdict=" << verdict_name(rep.verdict)
     << " max_tail=" << fmt17(rep.max_tail())
     << " final_ratio_dev=" << fmt17(rep.final_ratio_dev()) << "\n";
  if (rep.coeff_paper != cplx{} || rep.coeff_fitted != cplx{})
    os << "# coeff_paper=" << format_complex(rep.coeff_paper)
       << " coeff_fitted=" << format_complex(rep.coeff_fitted) << "\n";
  return os.str();
}

}  // namespace dsh
