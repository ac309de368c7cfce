#pragma once

#include "leibniz/algebra.hpp"
#include "leibniz/cochain.hpp"
#include "leibniz/deformation.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace leibniz {

enum class OutputFormat { text, json };

/// Dimensions to compare a computation against.
struct ReferenceDims {
    std::size_t cocycles;
    std::size_t coboundaries;
    std::size_t cohomology;
};

/// Tabulated dimensions for lambda6 in degrees 2 and 3. The degree-3 row
/// (20, 18, 2) is not consistent with rank-nullity and is kept so reports
/// can flag the disagreement.
std::optional<ReferenceDims> lambda6_reference_dims(std::size_t degree);

/// "-e_1 + 1/2*e_3"; "0" for the zero vector.
std::string render_vector(const Vector& v, const LeibnizAlgebra& alg);

/// Sparse listing "(e_2,e_3) -> -e_1; ..." of a cochain.
std::string render_cochain(const Cochain& c, const LeibnizAlgebra& alg);

/// "e_2 + s*e_1": expansion ordered by monomial, then basis index.
std::string render_poly_vector(const PolyVector& v, const LeibnizAlgebra& alg);

std::string check_report(const LeibnizAlgebra& alg, const std::string& name, OutputFormat fmt);

struct CohomologyReportOptions {
    std::size_t degree = 2;
    std::optional<std::vector<Cochain>> representatives;
    std::optional<ReferenceDims> reference;
};

std::string cohomology_report(const LeibnizAlgebra& alg, const std::string& name,
                              const CohomologyReportOptions& opts, OutputFormat fmt);

std::string massey_report(const LeibnizAlgebra& alg, const std::string& name,
                          const std::optional<std::vector<Cochain>>& reps, OutputFormat fmt);

std::string deformation_report(const Deformation& d, const std::string& name, const std::string& title,
                               const std::vector<std::pair<unsigned, std::vector<PolyTerms>>>& relations_by_order,
                               OutputFormat fmt);

} // namespace leibniz
