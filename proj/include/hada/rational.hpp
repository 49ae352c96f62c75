#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hada {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" (q > 0) into a canonical rational.
/// Whitespace, decimals and zero denominators are rejected with ParseError.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise. Never a floating-point rendering.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

/// Clears denominators, divides by the content and makes the first nonzero
/// entry positive. The zero vector maps to itself.
std::vector<Integer> primitive_integer_vector(std::span<const Rational> values);
std::vector<Integer> primitive_integer_vector(std::span<const Integer> values);

/// Like primitive_integer_vector but keeps the sign of the input.
std::vector<Integer> content_free(std::span<const Integer> values);

}  // namespace hada
