#pragma once

#include "leibniz/algebra.hpp"
#include "leibniz/cochain.hpp"
#include "leibniz/exact_linalg.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace leibniz {

/// Coboundary with adjoint coefficients, evaluated term by term:
///   (df)(x_1..x_{p+1}) = [x_1, f(x_2..x_{p+1})]
///                      + sum_{i=2}^{p+1} (-1)^i [f(x_1..^x_i..x_{p+1}), x_i]
///                      + sum_{i<j} (-1)^{j+1} f(x_1..x_{i-1},[x_i,x_j],x_{i+1}..^x_j..x_{p+1}).
Cochain coboundary(const LeibnizAlgebra& alg, const Cochain& f);

/// Matrix of delta^p from CL^p (n^p * n coordinates) to CL^{p+1}.
Matrix coboundary_matrix(const LeibnizAlgebra& alg, std::size_t p);

/// HL^p(L;L) with cocycle and coboundary bases and a fixed choice of class
/// representatives.
class CohomologySpace {
public:
    CohomologySpace(std::size_t algebra_dim, std::size_t degree, SubspaceBasis cocycles, SubspaceBasis coboundaries,
                    QuotientSpace quotient);

    std::size_t degree() const noexcept { return degree_; }
    std::size_t algebra_dim() const noexcept { return algebra_dim_; }
    const SubspaceBasis& cocycle_basis() const noexcept { return cocycles_; }
    const SubspaceBasis& coboundary_basis() const noexcept { return coboundaries_; }
    const std::vector<Cochain>& representatives() const noexcept { return representatives_; }

    std::size_t dim_cochains() const noexcept { return cocycles_.ambient_dim(); }
    std::size_t dim_cocycles() const noexcept { return cocycles_.size(); }
    std::size_t dim_coboundaries() const noexcept { return coboundaries_.size(); }
    std::size_t dim() const noexcept { return representatives_.size(); }

    bool is_cocycle(const Cochain& c) const;
    bool is_coboundary(const Cochain& c) const;

    /// Class coordinates of a cocycle on the representatives. Throws
    /// PreconditionError for non-cocycles.
    Vector project_to_classes(const Cochain& cocycle) const;

    /// sum_i coords[i] * representative_i.
    Cochain representative_of(const Vector& coords) const;

private:
    std::size_t algebra_dim_;
    std::size_t degree_;
    SubspaceBasis cocycles_;
    SubspaceBasis coboundaries_;
    QuotientSpace quotient_;
    std::vector<Cochain> representatives_;
};

/// ZL^p = ker delta^p, BL^p = im delta^{p-1}, representatives extending
/// BL^p greedily from the ZL^p kernel basis. Requires p >= 1.
CohomologySpace cohomology(const LeibnizAlgebra& alg, std::size_t p);

/// Same spaces with caller-chosen representatives. They must be cocycles,
/// independent modulo BL^p, and exactly dim HL^p many.
CohomologySpace cohomology_with_representatives(const LeibnizAlgebra& alg, std::size_t p,
                                                const std::vector<Cochain>& representatives);

/// One line of the linear system cutting out ZL^p, e.g.
///   a_{1,1}^2 = a_{3,1}^1 = -a_{3,3}^3.
/// Every member coefficient * a_member equals the common right-hand side,
/// a combination of free coordinates (empty means 0).
struct CocycleRelation {
    std::vector<std::pair<Scalar, std::size_t>> members;
    std::vector<std::pair<Scalar, std::size_t>> rhs;
};

/// Relations read off the rref of delta^p: pivot coordinates in terms of free
/// ones. Pivots equal to zero are grouped by input tuple; the others are
/// grouped when their right-hand sides agree up to a scalar.
std::vector<CocycleRelation> cocycle_relations(const LeibnizAlgebra& alg, std::size_t p);

/// Coordinate name a_{i_1,..,i_p}^k with 1-based indices.
std::string coordinate_name(std::size_t algebra_dim, std::size_t arity, std::size_t coordinate);

std::string to_string(const CocycleRelation& rel, std::size_t algebra_dim, std::size_t arity);

} // namespace leibniz
