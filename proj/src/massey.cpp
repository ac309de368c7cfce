#include "leibniz/massey.hpp"

#include "leibniz/errors.hpp"
#include "leibniz/exact_linalg.hpp"
#include "leibniz/graded_lie.hpp"

#include <array>
#include <string>

namespace leibniz {

namespace {

void require_spaces(const LeibnizAlgebra& alg, const CohomologySpace& hl2, const CohomologySpace& hl3)
{
    if (hl2.degree() != 2 || hl3.degree() != 3 || hl2.algebra_dim() != alg.dim() ||
        hl3.algebra_dim() != alg.dim())
        throw PreconditionError("massey: expected HL^2 and HL^3 of the given algebra");
}

Cochain bracket(const Cochain& a, const Cochain& b)
{
    return graded_bracket(GradedElement(a), GradedElement(b)).cochain();
}

} // namespace

MasseyResult massey2(const LeibnizAlgebra& alg, const CohomologySpace& hl2, const CohomologySpace& hl3,
                     const Vector& a, const Vector& b)
{
    require_spaces(alg, hl2, hl3);
    Cochain rep = bracket(hl2.representative_of(a), hl2.representative_of(b));
    Vector cls = hl3.project_to_classes(rep);
    return {std::move(cls), std::move(rep)};
}

Massey3Result massey3(const LeibnizAlgebra& alg, const CohomologySpace& hl2, const CohomologySpace& hl3,
                      const Vector& y1, const Vector& y2, const Vector& y3, const MasseyWitnesses& witnesses)
{
    require_spaces(alg, hl2, hl3);
    const std::array<Cochain, 3> x{hl2.representative_of(y1), hl2.representative_of(y2),
                                   hl2.representative_of(y3)};
    const Matrix delta2 = coboundary_matrix(alg, 2);

    Massey3Result result;
    for (auto [i, j] : {std::pair<std::size_t, std::size_t>{0, 1}, {1, 2}, {0, 2}}) {
        const Cochain target = bracket(x[i], x[j]);
        const std::string name = "x_" + std::to_string(i + 1) + std::to_string(j + 1);
        // d = -delta on 2-cochains, so d w = target means delta w = -target.
        auto it = witnesses.find({i, j});
        if (it != witnesses.end()) {
            const Cochain& w = it->second;
            if (w.arity() != 2 || w.algebra_dim() != alg.dim())
                throw PreconditionError("massey3: witness " + name + " is not a 2-cochain");
            if (!(coboundary(alg, w) + target).is_zero())
                throw PreconditionError("massey3: witness " + name + " does not satisfy d " + name +
                                        " = [x_" + std::to_string(i + 1) + ",x_" + std::to_string(j + 1) + "]");
            result.witnesses.emplace(std::make_pair(i, j), w);
            continue;
        }
        Vector rhs = target.coordinates();
        for (auto& v : rhs)
            v = -v;
        auto sol = solve(delta2, rhs);
        if (!sol)
            throw PreconditionError("massey3: [x_" + std::to_string(i + 1) + ",x_" + std::to_string(j + 1) +
                                    "] is not exact, so the triple bracket is undefined");
        result.witnesses.emplace(std::make_pair(i, j), Cochain::from_coordinates(alg.dim(), 2, std::move(*sol)));
    }

    const Cochain& x12 = result.witnesses.at({0, 1});
    const Cochain& x23 = result.witnesses.at({1, 2});
    const Cochain& x13 = result.witnesses.at({0, 2});
    result.representative = bracket(x12, x[2]) + bracket(x[0], x23) + bracket(x13, x[1]);
    if (!hl3.is_cocycle(result.representative))
        throw std::logic_error("massey3: triple bracket representative is not a cocycle");
    result.hl3_class = hl3.project_to_classes(result.representative);
    return result;
}

} // namespace leibniz
