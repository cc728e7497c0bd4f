#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace pert {

using Rational = mpq_class;

/// Parses "3", "-2", "3/2" or a decimal such as "1.25" / "-.5" / "2e-3"
/// exactly. Throws pert::Error (Input) on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical form: "5/3", "-1/2", "2".
std::string format_rational(const Rational& value);

/// Scales a vector by a positive factor so that all entries become integers
/// with gcd 1. The zero vector is returned unchanged.
std::vector<Rational> normalize_integral(std::vector<Rational> v);

} // namespace pert
