#include "leibniz/graded_lie.hpp"

#include "leibniz/cochain_complex.hpp"
#include "leibniz/errors.hpp"
#include "leibniz/kernels.hpp"

#include <utility>

namespace leibniz {

std::vector<Shuffle> shuffles(std::size_t p, std::size_t q)
{
    const std::size_t total = p + q;
    std::vector<Shuffle> out;
    // Combinations of p positions in lexicographic order.
    std::vector<std::size_t> chosen(p);
    for (std::size_t i = 0; i < p; ++i)
        chosen[i] = i;
    while (true) {
        Shuffle sh{p, q, chosen, 1};
        std::vector<bool> used(total, false);
        for (auto c : chosen)
            used[c] = true;
        std::size_t inversions = 0;
        for (std::size_t v = 0; v < total; ++v) {
            if (used[v])
                continue;
            sh.image.push_back(v);
            for (auto c : chosen)
                if (c > v)
                    ++inversions;
        }
        sh.sign = inversions % 2 == 0 ? 1 : -1;
        out.push_back(std::move(sh));

        std::size_t i = p;
        while (i > 0 && chosen[i - 1] == total - p + (i - 1))
            --i;
        if (i == 0)
            break;
        ++chosen[i - 1];
        for (std::size_t j = i; j < p; ++j)
            chosen[j] = chosen[j - 1] + 1;
    }
    return out;
}

GradedElement::GradedElement(Cochain cochain) : cochain_(std::move(cochain))
{
    if (cochain_.arity() == 0)
        throw PreconditionError("GradedElement: 0-cochains carry no graded degree");
}

GradedElement circle(const GradedElement& a, const GradedElement& b)
{
    return GradedElement(kernels::circle_parallel(a.cochain(), b.cochain()));
}

GradedElement graded_bracket(const GradedElement& a, const GradedElement& b)
{
    const std::size_t p = a.degree();
    const std::size_t q = b.degree();
    Cochain ab = kernels::circle_parallel(a.cochain(), b.cochain());
    Cochain ba = kernels::circle_parallel(b.cochain(), a.cochain());
    if ((p * q + 1) % 2 == 0)
        ab += ba;
    else
        ab -= ba;
    return GradedElement(std::move(ab));
}

GradedElement dgla_differential(const LeibnizAlgebra& alg, const GradedElement& a)
{
    Cochain d = coboundary(alg, a.cochain());
    if (a.degree() % 2 == 1)
        d *= Scalar(-1);
    return GradedElement(std::move(d));
}

} // namespace leibniz
