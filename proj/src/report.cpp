#include "elliptica/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "json.hpp"

namespace elliptica {

std::string format_real(double x) {
  if (x == 0) return "0e0";
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", x);
  std::string s(buf);
  const auto e = s.find('e');
  std::string mantissa = s.substr(0, e);
  int exponent = std::stoi(s.substr(e + 1));
  return mantissa + "e" + std::to_string(exponent);
}

std::string format_complex(std::complex<double> z) {
  const double im = z.imag();
  const bool negative = std::signbit(im) && im != 0;
  return format_real(z.real()) + (negative ? "-" : "+") + format_real(std::abs(im)) + "i";
}

std::string format_pair(std::complex<double> z) { return format_real(z.real()) + "," + format_real(z.imag()); }

namespace {

std::string json_number(double x) { return std::isfinite(x) ? format_real(x) : "null"; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void write_json(std::ostream& out, const std::vector<TrialOutcome>& outcomes) {
  out << "[";
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const TrialOutcome& o = outcomes[i];
    out << (i ? ",\n " : "\n ") << "{\"identity_id\":" << nlohmann::json(o.identity_id).dump()
        << ",\"seed\":" << o.seed << ",\"trial_index\":" << o.trial_index
        << ",\"params\":" << nlohmann::json(o.params).dump() << ",\"lhs_re\":" << json_number(o.lhs.real())
        << ",\"lhs_im\":" << json_number(o.lhs.imag()) << ",\"rhs_re\":" << json_number(o.rhs.real())
        << ",\"rhs_im\":" << json_number(o.rhs.imag()) << ",\"rel_error\":" << json_number(o.rel_error)
        << ",\"status\":\"" << status_name(o.status) << "\",\"condition_flag\":"
        << (o.condition_flag ? "true" : "false") << "}";
  }
  out << (outcomes.empty() ? "]\n" : "\n]\n");
}

void write_csv(std::ostream& out, const std::vector<TrialOutcome>& outcomes) {
  out << "identity_id,seed,trial_index,params,lhs_re,lhs_im,rhs_re,rhs_im,rel_error,status,condition_flag\n";
  for (const TrialOutcome& o : outcomes) {
    out << csv_field(o.identity_id) << ',' << o.seed << ',' << o.trial_index << ',' << csv_field(o.params) << ','
        << format_real(o.lhs.real()) << ',' << format_real(o.lhs.imag()) << ',' << format_real(o.rhs.real())
        << ',' << format_real(o.rhs.imag()) << ',' << format_real(o.rel_error) << ',' << status_name(o.status)
        << ',' << (o.condition_flag ? "true" : "false") << '\n';
  }
}

}  // namespace elliptica
