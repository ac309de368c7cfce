#pragma once

#include "leibniz/algebra.hpp"
#include "leibniz/cochain.hpp"
#include "leibniz/cochain_complex.hpp"

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace leibniz {

struct MasseyResult {
    Vector hl3_class;
    Cochain representative;
};

/// <y_a, y_b>: the class of [x_a, x_b] for the chosen representatives x.
MasseyResult massey2(const LeibnizAlgebra& alg, const CohomologySpace& hl2, const CohomologySpace& hl3,
                     const Vector& a, const Vector& b);

/// Witnesses keyed by 0-based pairs (0,1), (1,2), (0,2); each satisfies
/// d x_ij = [x_i, x_j].
using MasseyWitnesses = std::map<std::pair<std::size_t, std::size_t>, Cochain>;

struct Massey3Result {
    Vector hl3_class;
    Cochain representative;
    MasseyWitnesses witnesses;
};

/// <y_1, y_2, y_3> represented by [x_12,x_3] + [x_1,x_23] + [x_13,x_2].
/// Missing witnesses are solved for with free variables set to zero.
/// Throws PreconditionError if a pairwise bracket is not exact or a
/// supplied witness is wrong.
Massey3Result massey3(const LeibnizAlgebra& alg, const CohomologySpace& hl2, const CohomologySpace& hl3,
                      const Vector& y1, const Vector& y2, const Vector& y3, const MasseyWitnesses& witnesses = {});

} // namespace leibniz
