#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace leibniz {

/// Exact rational number. GMP keeps every value canonical (lowest terms,
/// positive denominator) after each arithmetic operation.
using Scalar = mpq_class;

/// Dense coordinate vector over the rationals.
using Vector = std::vector<Scalar>;

/// Parses "p", "-p", "p/q" (q != 0). Surrounding whitespace is not accepted.
/// Throws std::invalid_argument on malformed input.
Scalar parse_scalar(std::string_view text);

/// "p/q" with q > 0, or "p" when q == 1.
std::string to_string(const Scalar& value);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);

} // namespace leibniz
