#pragma once

#include <gmpxx.h>

#include <string>

namespace listpack {

using Rational = mpq_class;

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& q);
/// Accepts "p/q" or "p"; throws std::invalid_argument otherwise.
Rational rational_from_string(const std::string& text);

}  // namespace listpack
