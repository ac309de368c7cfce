#include "generators.hpp"

#include "oracles.hpp"

#include <stdexcept>

namespace leibniz::testgen {

Scalar small_scalar(Rng& rng, long bound)
{
    std::uniform_int_distribution<long> dist(-bound, bound);
    return Scalar(dist(rng));
}

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long bound)
{
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = small_scalar(rng, bound);
    return m;
}

Matrix random_low_rank_matrix(Rng& rng, std::size_t rows, std::size_t cols, std::size_t rank)
{
    return random_matrix(rng, rows, rank, 1) * random_matrix(rng, rank, cols, 1);
}

std::vector<Scalar> random_invertible(Rng& rng, std::size_t n)
{
    for (;;) {
        Matrix m = random_matrix(rng, n, n, 2);
        if (oracle::bareiss_rank(m) != n)
            continue;
        std::vector<Scalar> flat;
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                flat.push_back(m(r, c));
        return flat;
    }
}

Cochain random_cochain(Rng& rng, std::size_t n, std::size_t arity)
{
    Cochain c(n, arity);
    std::bernoulli_distribution keep(0.5);
    for (std::size_t t = 0; t < c.num_inputs(); ++t)
        for (std::size_t k = 0; k < n; ++k)
            if (keep(rng))
                c.at(t, k) = small_scalar(rng, 2);
    return c;
}

const std::vector<LeibnizAlgebra>& small_two_dim_algebras()
{
    static const std::vector<LeibnizAlgebra> all = [] {
        std::vector<LeibnizAlgebra> out;
        std::vector<int> c(8, -1);
        for (;;) {
            std::vector<LeibnizAlgebra::BasisBracket> br;
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j)
                    br.push_back({i, j, {Scalar(c[4 * i + 2 * j]), Scalar(c[4 * i + 2 * j + 1])}});
            LeibnizAlgebra alg(2, br);
            if (validate(alg).empty())
                out.push_back(alg);
            std::size_t pos = 0;
            while (pos < c.size() && c[pos] == 1)
                c[pos++] = -1;
            if (pos == c.size())
                break;
            ++c[pos];
        }
        return out;
    }();
    return all;
}

namespace {

LeibnizAlgebra make3(const std::vector<LeibnizAlgebra::BasisBracket>& br)
{
    return LeibnizAlgebra(3, br);
}

} // namespace

const std::vector<LeibnizAlgebra>& three_dim_seeds()
{
    static const std::vector<LeibnizAlgebra> seeds = [] {
        std::vector<LeibnizAlgebra> out;
        out.push_back(builtin_lambda6());
        out.push_back(make3({{0, 1, {0, 0, 1}}, {1, 0, {0, 0, -1}}}));
        out.push_back(make3({{0, 1, {0, 0, 1}},
                             {1, 0, {0, 0, -1}},
                             {2, 0, {2, 0, 0}},
                             {0, 2, {-2, 0, 0}},
                             {2, 1, {0, -2, 0}},
                             {1, 2, {0, 2, 0}}}));
        out.push_back(make3({{0, 0, {0, 1, 0}}}));
        out.push_back(make3({{1, 0, {0, 1, 0}}}));
        out.push_back(LeibnizAlgebra(3));
        for (const auto& a : out)
            if (!validate(a).empty())
                throw std::logic_error("seed algebra is not Leibniz");
        return out;
    }();
    return seeds;
}

LeibnizAlgebra non_leibniz_line()
{
    return LeibnizAlgebra(1, Brackets{{0, 0, {1}}});
}

LeibnizAlgebra random_leibniz_algebra(Rng& rng, std::size_t dim)
{
    const auto& pool = dim == 2 ? small_two_dim_algebras() : three_dim_seeds();
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    return change_basis(pool[pick(rng)], random_invertible(rng, dim));
}

} // namespace leibniz::testgen
