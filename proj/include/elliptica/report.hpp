#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

#include "elliptica/harness.hpp"

namespace elliptica {

/// 17 significant digits, minimal exponent ("5.0000000000000000e-1", "0e0").
std::string format_real(double x);

/// "re+im i" or "re-im i", e.g. "5.0000000000000000e-1+0e0i".
std::string format_complex(std::complex<double> z);

/// Flag syntax "re,im".
std::string format_pair(std::complex<double> z);

/// Fields: identity_id, seed, trial_index, params, lhs_re, lhs_im, rhs_re,
/// rhs_im, rel_error, status, condition_flag.
void write_json(std::ostream& out, const std::vector<TrialOutcome>& outcomes);
void write_csv(std::ostream& out, const std::vector<TrialOutcome>& outcomes);

}  // namespace elliptica
