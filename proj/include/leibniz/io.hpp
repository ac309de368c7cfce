#pragma once

#include "leibniz/algebra.hpp"
#include "leibniz/cochain.hpp"
#include "leibniz/local_base.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace leibniz {

/// Algebra document:
///   { "dim": n,
///     "labels": [...],                      (optional)
///     "brackets": [ { "left": i, "right": j,
///                     "value": [ { "basis": k, "coeff": "p/q" }, ... ] }, ... ] }
/// Indices are 1-based; unlisted brackets are zero. Throws ParseError.
LeibnizAlgebra parse_algebra_json(std::string_view text);

/// Canonical document: brackets sorted by (left, right), value entries by
/// basis, zero entries omitted. parse_algebra_json inverts it exactly.
std::string algebra_to_json(const LeibnizAlgebra& alg);

/// "lambda6" or a path to an algebra document.
LeibnizAlgebra load_algebra(const std::string& source);

/// Representatives document:
///   { "degree": p,
///     "representatives": [ { "entries": [ { "inputs": [i_1..i_p], "output": k,
///                                           "coeff": "p/q" }, ... ] }, ... ] }
/// Other top-level keys are ignored, so cohomology reports can be fed back.
std::vector<Cochain> parse_representatives_json(std::string_view text, std::size_t algebra_dim,
                                                std::size_t expected_degree);

std::string read_file(const std::string& path);

/// Polynomial in the given generator names, e.g. "t - 2*s^2 + 1/3*t*s".
/// Throws ParseError with a 1-based column.
PolyTerms parse_polynomial(std::string_view text, const std::vector<std::string>& names);

} // namespace leibniz
