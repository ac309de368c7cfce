#pragma once

#include "leibniz/scalar.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace leibniz {

/// Finite-dimensional algebra given by structure constants
/// [e_i, e_j] = sum_k c(i,j,k) e_k, indices 0-based in code.
///
/// The Leibniz identity is not enforced here: deformation code builds
/// candidate brackets that may violate it. Call validate() explicitly.
class LeibnizAlgebra {
public:
    /// Abelian algebra of the given dimension.
    explicit LeibnizAlgebra(std::size_t dim, std::vector<std::string> labels = {});

    struct BasisBracket {
        std::size_t left;
        std::size_t right;
        Vector value;
    };
    /// Unlisted basis brackets are zero. Later entries for the same pair
    /// overwrite earlier ones.
    LeibnizAlgebra(std::size_t dim, const std::vector<BasisBracket>& brackets, std::vector<std::string> labels = {});

    std::size_t dim() const noexcept { return dim_; }

    /// [e_i, e_j] as a coordinate vector.
    const Vector& basis_bracket(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
    const Scalar& constant(std::size_t i, std::size_t j, std::size_t k) const { return table_[i * dim_ + j][k]; }

    const std::vector<std::string>& labels() const noexcept { return labels_; }
    /// Label of e_i, defaulting to "e_{i+1}".
    std::string label(std::size_t i) const;

    bool is_abelian() const;

    bool operator==(const LeibnizAlgebra& other) const
    {
        return dim_ == other.dim_ && table_ == other.table_ && labels_ == other.labels_;
    }

private:
    std::size_t dim_;
    std::vector<Vector> table_;
    std::vector<std::string> labels_;
};

/// Bilinear extension of the structure constants.
Vector bracket_eval(const LeibnizAlgebra& alg, const Vector& x, const Vector& y);

struct LeibnizViolation {
    std::size_t i, j, k;
    /// [e_i,[e_j,e_k]] - [[e_i,e_j],e_k] + [[e_i,e_k],e_j], nonzero.
    Vector defect;
};

/// All basis triples on which [x,[y,z]] = [[x,y],z] - [[x,z],y] fails,
/// in lexicographic order. Empty iff the algebra is Leibniz.
std::vector<LeibnizViolation> validate(const LeibnizAlgebra& alg);

/// The 3-dimensional nilpotent algebra [e_1,e_3] = e_2, [e_3,e_3] = e_1.
LeibnizAlgebra builtin_lambda6();

/// Change of basis: the returned algebra has structure constants in the
/// basis f_j = sum_i p(i,j) e_i. `p` is a dense n x n row-major matrix and
/// must be invertible.
LeibnizAlgebra change_basis(const LeibnizAlgebra& alg, const std::vector<Scalar>& p);

} // namespace leibniz
