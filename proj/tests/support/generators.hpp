#pragma once

#include "leibniz/algebra.hpp"
#include "leibniz/cochain.hpp"
#include "leibniz/exact_linalg.hpp"

#include <cstddef>
#include <random>
#include <vector>

namespace leibniz::testgen {

using Rng = std::mt19937_64;

Scalar small_scalar(Rng& rng, long bound = 2);

/// Dense matrix with integer entries in [-bound, bound].
Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long bound = 2);

/// Matrix of given size and target rank built as a product of random
/// factors, so it has many dependent rows.
Matrix random_low_rank_matrix(Rng& rng, std::size_t rows, std::size_t cols, std::size_t rank);

/// Invertible integer matrix (row-major), entries in [-2, 2].
std::vector<Scalar> random_invertible(Rng& rng, std::size_t n);

/// Cochain with entries in [-2, 2], roughly half of them zero.
Cochain random_cochain(Rng& rng, std::size_t n, std::size_t arity);

/// Every 2-dimensional Leibniz algebra with structure constants in {-1,0,1}.
const std::vector<LeibnizAlgebra>& small_two_dim_algebras();

/// Hand-picked 3-dimensional Leibniz algebras: lambda6, Heisenberg, sl2,
/// [e_1,e_1]=e_2, [e_2,e_1]=e_2 and the abelian one.
const std::vector<LeibnizAlgebra>& three_dim_seeds();

using Brackets = std::vector<LeibnizAlgebra::BasisBracket>;

/// [e,e] = e on a line: the smallest algebra that is not Leibniz.
LeibnizAlgebra non_leibniz_line();

/// A random seed algebra of dimension 2 or 3 in a random integer basis.
/// Always satisfies the Leibniz identity.
LeibnizAlgebra random_leibniz_algebra(Rng& rng, std::size_t dim);

} // namespace leibniz::testgen
