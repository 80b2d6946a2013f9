#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace eefx {

using Rational = mpq_class;

// Accepts "12", "12.345", ".5" and "p/q". Negative values and exponents are
// rejected with InputError.
Rational parse_rational(std::string_view text);

// Terminating decimals are written as decimals ("0.1", "300"); anything else
// as "p/q". parse_rational(format_rational(x)) == x.
std::string format_rational(const Rational& value);

}  // namespace eefx
