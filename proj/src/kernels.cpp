#include "leibniz/kernels.hpp"

#include "leibniz/errors.hpp"
#include "leibniz/graded_lie.hpp"

#include <cstddef>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace leibniz::kernels {

namespace {

std::vector<std::size_t> decode(std::size_t index, std::size_t n, std::size_t len)
{
    std::vector<std::size_t> t(len);
    for (std::size_t pos = len; pos-- > 0;) {
        t[pos] = index % n;
        index /= n;
    }
    return t;
}

std::size_t encode(const std::vector<std::size_t>& t, std::size_t n)
{
    std::size_t idx = 0;
    for (auto i : t)
        idx = idx * n + i;
    return idx;
}

// Fills the n rows of the coboundary matrix belonging to output tuple t.
void coboundary_rows(const LeibnizAlgebra& alg, std::size_t p, std::size_t t, Matrix& m)
{
    const std::size_t n = alg.dim();
    const std::vector<std::size_t> x = decode(t, n, p + 1);
    const std::size_t row0 = t * n;

    // [x_1, f(x_2, ..., x_{p+1})]
    {
        std::vector<std::size_t> tail(x.begin() + 1, x.end());
        const std::size_t col0 = encode(tail, n) * n;
        for (std::size_t k = 0; k < n; ++k) {
            const Vector& b = alg.basis_bracket(x[0], k);
            for (std::size_t r = 0; r < n; ++r)
                if (b[r] != 0)
                    m(row0 + r, col0 + k) += b[r];
        }
    }

    // sum_{i=2}^{p+1} (-1)^i [f(x_1..^x_i..x_{p+1}), x_i]
    for (std::size_t i = 2; i <= p + 1; ++i) {
        const int sign = (i % 2 == 0) ? 1 : -1;
        std::vector<std::size_t> rest;
        for (std::size_t pos = 0; pos <= p; ++pos)
            if (pos != i - 1)
                rest.push_back(x[pos]);
        const std::size_t col0 = encode(rest, n) * n;
        for (std::size_t k = 0; k < n; ++k) {
            const Vector& b = alg.basis_bracket(k, x[i - 1]);
            for (std::size_t r = 0; r < n; ++r)
                if (b[r] != 0)
                    m(row0 + r, col0 + k) += sign * b[r];
        }
    }

    // sum_{i<j} (-1)^{j+1} f(x_1..x_{i-1}, [x_i,x_j], x_{i+1}..^x_j..x_{p+1})
    for (std::size_t i = 1; i <= p + 1; ++i)
        for (std::size_t j = i + 1; j <= p + 1; ++j) {
            const int sign = ((j + 1) % 2 == 0) ? 1 : -1;
            const Vector& v = alg.basis_bracket(x[i - 1], x[j - 1]);
            for (std::size_t l = 0; l < n; ++l) {
                if (v[l] == 0)
                    continue;
                std::vector<std::size_t> args;
                for (std::size_t pos = 0; pos <= p; ++pos) {
                    if (pos == j - 1)
                        continue;
                    args.push_back(pos == i - 1 ? l : x[pos]);
                }
                const std::size_t col0 = encode(args, n) * n;
                for (std::size_t k = 0; k < n; ++k)
                    m(row0 + k, col0 + k) += sign * v[l];
            }
        }
}

struct CircleTerm {
    std::size_t k;                          // 1-based position receiving b(...)
    int sign;                               // (-1)^{q(k-1)} sgn(sigma)
    std::vector<std::size_t> inner;         // output positions fed to b
    std::vector<std::size_t> outer_tail;    // output positions after b(...) in a
};

std::vector<CircleTerm> circle_plan(std::size_t p, std::size_t q)
{
    std::vector<CircleTerm> plan;
    for (std::size_t k = 1; k <= p + 1; ++k) {
        const int sign_k = (q * (k - 1)) % 2 == 0 ? 1 : -1;
        std::vector<std::size_t> rest;
        for (std::size_t pos = k; pos <= p + q; ++pos)
            rest.push_back(pos);
        for (const auto& sh : shuffles(q, p - k + 1)) {
            CircleTerm term{k, sign_k * sh.sign, {k - 1}, {}};
            for (std::size_t s = 0; s < q; ++s)
                term.inner.push_back(rest[sh.image[s]]);
            for (std::size_t s = q; s < sh.image.size(); ++s)
                term.outer_tail.push_back(rest[sh.image[s]]);
            plan.push_back(std::move(term));
        }
    }
    return plan;
}

void circle_value(const Cochain& a, const Cochain& b, const std::vector<CircleTerm>& plan, std::size_t t,
                  Cochain& out)
{
    const std::size_t n = a.algebra_dim();
    const std::vector<std::size_t> x = decode(t, n, out.arity());
    std::vector<std::size_t> inner_tuple;
    std::vector<std::size_t> outer_tuple;
    Scalar coeff;
    for (const auto& term : plan) {
        inner_tuple.clear();
        for (auto pos : term.inner)
            inner_tuple.push_back(x[pos]);
        const std::size_t bt = encode(inner_tuple, n);

        outer_tuple.assign(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(term.k - 1));
        outer_tuple.push_back(0);
        for (auto pos : term.outer_tail)
            outer_tuple.push_back(x[pos]);

        for (std::size_t l = 0; l < n; ++l) {
            const Scalar& w = b.at(bt, l);
            if (w == 0)
                continue;
            outer_tuple[term.k - 1] = l;
            const std::size_t at = encode(outer_tuple, n);
            coeff = term.sign * w;
            for (std::size_t r = 0; r < n; ++r) {
                const Scalar& av = a.at(at, r);
                if (av != 0)
                    out.at(t, r) += coeff * av;
            }
        }
    }
}

void require_circle_operands(const Cochain& a, const Cochain& b)
{
    if (a.algebra_dim() != b.algebra_dim())
        throw PreconditionError("circle: operands over different algebras");
    if (a.arity() == 0 || b.arity() == 0)
        throw PreconditionError("circle: operands must have arity >= 1");
}

void require_leibniz_operands(const Cochain& a, const Cochain& b)
{
    if (a.algebra_dim() != b.algebra_dim())
        throw PreconditionError("leibniz_term: operands over different algebras");
    if (a.arity() != 2 || b.arity() != 2)
        throw PreconditionError("leibniz_term: operands must be 2-cochains");
}

void leibniz_value(const Cochain& a, const Cochain& b, std::size_t t, Cochain& out)
{
    const std::size_t n = a.algebra_dim();
    const std::size_t x = t / (n * n);
    const std::size_t y = (t / n) % n;
    const std::size_t z = t % n;
    auto accumulate = [&](std::size_t inner, bool inner_left, std::size_t other, int sign) {
        for (std::size_t l = 0; l < n; ++l) {
            const Scalar& w = b.at(inner, l);
            if (w == 0)
                continue;
            const std::size_t at = inner_left ? l * n + other : other * n + l;
            for (std::size_t r = 0; r < n; ++r) {
                const Scalar& av = a.at(at, r);
                if (av == 0)
                    continue;
                if (sign > 0)
                    out.at(t, r) += w * av;
                else
                    out.at(t, r) -= w * av;
            }
        }
    };
    accumulate(y * n + z, false, x, 1);
    accumulate(x * n + y, true, z, -1);
    accumulate(x * n + z, true, y, 1);
}

} // namespace

Cochain leibniz_term_serial(const Cochain& a, const Cochain& b)
{
    require_leibniz_operands(a, b);
    Cochain out(a.algebra_dim(), 3);
    for (std::size_t t = 0; t < out.num_inputs(); ++t)
        leibniz_value(a, b, t, out);
    return out;
}

Cochain leibniz_term_parallel(const Cochain& a, const Cochain& b)
{
    require_leibniz_operands(a, b);
    Cochain out(a.algebra_dim(), 3);
    const auto tuples = static_cast<std::ptrdiff_t>(out.num_inputs());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t t = 0; t < tuples; ++t)
        leibniz_value(a, b, static_cast<std::size_t>(t), out);
    return out;
}

Matrix coboundary_matrix_serial(const LeibnizAlgebra& alg, std::size_t p)
{
    const std::size_t n = alg.dim();
    const std::size_t out_tuples = ipow(n, p + 1);
    Matrix m(out_tuples * n, ipow(n, p) * n);
    for (std::size_t t = 0; t < out_tuples; ++t)
        coboundary_rows(alg, p, t, m);
    return m;
}

Matrix coboundary_matrix_parallel(const LeibnizAlgebra& alg, std::size_t p)
{
    const std::size_t n = alg.dim();
    const auto out_tuples = static_cast<std::ptrdiff_t>(ipow(n, p + 1));
    Matrix m(static_cast<std::size_t>(out_tuples) * n, ipow(n, p) * n);
#pragma omp parallel for schedule(dynamic, 4)
    for (std::ptrdiff_t t = 0; t < out_tuples; ++t)
        coboundary_rows(alg, p, static_cast<std::size_t>(t), m);
    return m;
}

Cochain circle_serial(const Cochain& a, const Cochain& b)
{
    require_circle_operands(a, b);
    const std::size_t p = a.arity() - 1;
    const std::size_t q = b.arity() - 1;
    const auto plan = circle_plan(p, q);
    Cochain out(a.algebra_dim(), p + q + 1);
    for (std::size_t t = 0; t < out.num_inputs(); ++t)
        circle_value(a, b, plan, t, out);
    return out;
}

Cochain circle_parallel(const Cochain& a, const Cochain& b)
{
    require_circle_operands(a, b);
    const std::size_t p = a.arity() - 1;
    const std::size_t q = b.arity() - 1;
    const auto plan = circle_plan(p, q);
    Cochain out(a.algebra_dim(), p + q + 1);
    const auto tuples = static_cast<std::ptrdiff_t>(out.num_inputs());
#pragma omp parallel for schedule(dynamic, 8)
    for (std::ptrdiff_t t = 0; t < tuples; ++t)
        circle_value(a, b, plan, static_cast<std::size_t>(t), out);
    return out;
}

int max_threads()
{
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace leibniz::kernels
