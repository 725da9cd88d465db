#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace homnambu {

// mpq_class canonicalizes after every arithmetic operation, so values are
// always in lowest terms with a positive denominator.
using Scalar = mpq_class;

// Accepts "p" or "p/q" with optional leading sign; rejects q = 0 and
// anything that is not a plain decimal integer ratio.
Scalar parse_scalar(std::string_view text);

std::string to_string(const Scalar& value);

inline bool is_zero(const Scalar& value) { return sgn(value) == 0; }

}  // namespace homnambu
