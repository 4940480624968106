#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace dyfrt {

using Scalar = mpq_class;

/// "p/q" when q != 1, otherwise "p".
std::string to_string(const Scalar& s);

/// Accepts "p", "-p", "p/q". Throws StructuralError on anything else.
Scalar parse_scalar(std::string_view text);

inline bool is_zero(const Scalar& s) { return sgn(s) == 0; }

}  // namespace dyfrt
