#pragma once

#include <gmpxx.h>

#include <string>

namespace gotzrep {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Integer& x) { return x.get_str(); }

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& x) { return x.get_str(); }

}  // namespace gotzrep
