#include "leibniz/algebra.hpp"

#include "leibniz/errors.hpp"
#include "leibniz/exact_linalg.hpp"

#include <string>
#include <utility>

namespace leibniz {

LeibnizAlgebra::LeibnizAlgebra(std::size_t dim, std::vector<std::string> labels)
    : dim_(dim), table_(dim * dim, zero_vector(dim)), labels_(std::move(labels))
{
    if (!labels_.empty() && labels_.size() != dim_)
        throw PreconditionError("LeibnizAlgebra: expected " + std::to_string(dim_) + " basis labels");
}

LeibnizAlgebra::LeibnizAlgebra(std::size_t dim, const std::vector<BasisBracket>& brackets,
                               std::vector<std::string> labels)
    : LeibnizAlgebra(dim, std::move(labels))
{
    for (const auto& b : brackets) {
        if (b.left >= dim_ || b.right >= dim_)
            throw PreconditionError("LeibnizAlgebra: bracket index out of range");
        if (b.value.size() != dim_)
            throw PreconditionError("LeibnizAlgebra: bracket value has wrong length");
        table_[b.left * dim_ + b.right] = b.value;
    }
}

std::string LeibnizAlgebra::label(std::size_t i) const
{
    if (!labels_.empty())
        return labels_.at(i);
    return "e_" + std::to_string(i + 1);
}

bool LeibnizAlgebra::is_abelian() const
{
    for (const auto& v : table_)
        if (!is_zero(v))
            return false;
    return true;
}

Vector bracket_eval(const LeibnizAlgebra& alg, const Vector& x, const Vector& y)
{
    const std::size_t n = alg.dim();
    if (x.size() != n || y.size() != n)
        throw PreconditionError("bracket_eval: operand length differs from algebra dimension");
    Vector out = zero_vector(n);
    Scalar xy;
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] == 0)
            continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j] == 0)
                continue;
            xy = x[i] * y[j];
            const Vector& b = alg.basis_bracket(i, j);
            for (std::size_t k = 0; k < n; ++k)
                if (b[k] != 0)
                    out[k] += xy * b[k];
        }
    }
    return out;
}

std::vector<LeibnizViolation> validate(const LeibnizAlgebra& alg)
{
    const std::size_t n = alg.dim();
    std::vector<LeibnizViolation> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vector ei = unit_vector(n, i);
                Vector lhs = bracket_eval(alg, ei, alg.basis_bracket(j, k));
                Vector a = bracket_eval(alg, alg.basis_bracket(i, j), unit_vector(n, k));
                Vector b = bracket_eval(alg, alg.basis_bracket(i, k), unit_vector(n, j));
                for (std::size_t m = 0; m < n; ++m)
                    lhs[m] += b[m] - a[m];
                if (!is_zero(lhs))
                    out.push_back({i, j, k, std::move(lhs)});
            }
    return out;
}

LeibnizAlgebra builtin_lambda6()
{
    return LeibnizAlgebra(3, {{0, 2, {0, 1, 0}}, {2, 2, {1, 0, 0}}});
}

LeibnizAlgebra change_basis(const LeibnizAlgebra& alg, const std::vector<Scalar>& p)
{
    const std::size_t n = alg.dim();
    if (p.size() != n * n)
        throw PreconditionError("change_basis: expected an n x n matrix");
    Matrix pm(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            pm(i, j) = p[i * n + j];

    // Columns of the inverse give e_k in the new basis.
    std::vector<Vector> inv_cols;
    for (std::size_t k = 0; k < n; ++k) {
        auto col = solve(pm, unit_vector(n, k));
        if (!col || rank(pm) != n)
            throw PreconditionError("change_basis: matrix is singular");
        inv_cols.push_back(std::move(*col));
    }

    std::vector<LeibnizAlgebra::BasisBracket> brackets;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Vector fa = pm.column(a);
            Vector fb = pm.column(b);
            Vector old = bracket_eval(alg, fa, fb);
            Vector value = zero_vector(n);
            for (std::size_t k = 0; k < n; ++k) {
                if (old[k] == 0)
                    continue;
                for (std::size_t l = 0; l < n; ++l)
                    value[l] += old[k] * inv_cols[k][l];
            }
            brackets.push_back({a, b, std::move(value)});
        }
    return LeibnizAlgebra(n, brackets, alg.labels());
}

} // namespace leibniz
