#include "leibniz/cochain_complex.hpp"

#include "leibniz/errors.hpp"
#include "leibniz/kernels.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace leibniz {

Cochain coboundary(const LeibnizAlgebra& alg, const Cochain& f)
{
    const std::size_t n = alg.dim();
    if (f.algebra_dim() != n)
        throw PreconditionError("coboundary: cochain dimension differs from algebra dimension");
    const std::size_t p = f.arity();
    Cochain out(n, p + 1);

    std::vector<std::size_t> sub;
    std::vector<Vector> args;
    for (std::size_t t = 0; t < out.num_inputs(); ++t) {
        const std::vector<std::size_t> x = out.decode_tuple(t);
        Vector acc = zero_vector(n);

        sub.assign(x.begin() + 1, x.end());
        Vector first = bracket_eval(alg, unit_vector(n, x[0]), f.value(sub));
        for (std::size_t k = 0; k < n; ++k)
            acc[k] += first[k];

        for (std::size_t i = 2; i <= p + 1; ++i) {
            sub.clear();
            for (std::size_t pos = 0; pos <= p; ++pos)
                if (pos != i - 1)
                    sub.push_back(x[pos]);
            Vector term = bracket_eval(alg, f.value(sub), unit_vector(n, x[i - 1]));
            for (std::size_t k = 0; k < n; ++k) {
                if (i % 2 == 0)
                    acc[k] += term[k];
                else
                    acc[k] -= term[k];
            }
        }

        for (std::size_t i = 1; i <= p + 1; ++i)
            for (std::size_t j = i + 1; j <= p + 1; ++j) {
                const Vector& inner = alg.basis_bracket(x[i - 1], x[j - 1]);
                if (is_zero(inner))
                    continue;
                args.clear();
                for (std::size_t pos = 0; pos <= p; ++pos) {
                    if (pos == j - 1)
                        continue;
                    args.push_back(pos == i - 1 ? inner : unit_vector(n, x[pos]));
                }
                Vector term = f.evaluate(args);
                for (std::size_t k = 0; k < n; ++k) {
                    if ((j + 1) % 2 == 0)
                        acc[k] += term[k];
                    else
                        acc[k] -= term[k];
                }
            }

        for (std::size_t k = 0; k < n; ++k)
            out.at(t, k) = acc[k];
    }
    return out;
}

Matrix coboundary_matrix(const LeibnizAlgebra& alg, std::size_t p)
{
    return kernels::coboundary_matrix_parallel(alg, p);
}

CohomologySpace::CohomologySpace(std::size_t algebra_dim, std::size_t degree, SubspaceBasis cocycles,
                                 SubspaceBasis coboundaries, QuotientSpace quotient)
    : algebra_dim_(algebra_dim), degree_(degree), cocycles_(std::move(cocycles)),
      coboundaries_(std::move(coboundaries)), quotient_(std::move(quotient))
{
    for (const auto& v : quotient_.representatives().vectors())
        representatives_.push_back(Cochain::from_coordinates(algebra_dim_, degree_, v));
}

bool CohomologySpace::is_cocycle(const Cochain& c) const
{
    return c.arity() == degree_ && c.algebra_dim() == algebra_dim_ && cocycles_.contains(c.coordinates());
}

bool CohomologySpace::is_coboundary(const Cochain& c) const
{
    return c.arity() == degree_ && c.algebra_dim() == algebra_dim_ && coboundaries_.contains(c.coordinates());
}

Vector CohomologySpace::project_to_classes(const Cochain& cocycle) const
{
    if (!is_cocycle(cocycle))
        throw PreconditionError("project_to_classes: argument is not a " + std::to_string(degree_) + "-cocycle");
    return quotient_.project(cocycle.coordinates());
}

Cochain CohomologySpace::representative_of(const Vector& coords) const
{
    if (coords.size() != representatives_.size())
        throw PreconditionError("representative_of: expected " + std::to_string(representatives_.size()) +
                                " class coordinates");
    Cochain out(algebra_dim_, degree_);
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (coords[i] != 0)
            out += coords[i] * representatives_[i];
    return out;
}

namespace {

struct Spaces {
    SubspaceBasis cocycles;
    SubspaceBasis coboundaries;
};

Spaces cocycles_and_coboundaries(const LeibnizAlgebra& alg, std::size_t p)
{
    if (p == 0)
        throw PreconditionError("cohomology: degree must be at least 1");
    return {kernel_basis(coboundary_matrix(alg, p)), image_basis(coboundary_matrix(alg, p - 1))};
}

} // namespace

CohomologySpace cohomology(const LeibnizAlgebra& alg, std::size_t p)
{
    Spaces s = cocycles_and_coboundaries(alg, p);
    QuotientSpace q = quotient_representatives(s.coboundaries, s.cocycles);
    return CohomologySpace(alg.dim(), p, std::move(s.cocycles), std::move(s.coboundaries), std::move(q));
}

CohomologySpace cohomology_with_representatives(const LeibnizAlgebra& alg, std::size_t p,
                                                const std::vector<Cochain>& representatives)
{
    Spaces s = cocycles_and_coboundaries(alg, p);
    const std::size_t expected = s.cocycles.size() - s.coboundaries.size();
    if (representatives.size() != expected)
        throw PreconditionError("cohomology: got " + std::to_string(representatives.size()) +
                                " representatives, dim HL^" + std::to_string(p) + " = " + std::to_string(expected));
    std::vector<Vector> coords;
    for (std::size_t i = 0; i < representatives.size(); ++i) {
        const Cochain& r = representatives[i];
        if (r.arity() != p || r.algebra_dim() != alg.dim())
            throw PreconditionError("cohomology: representative " + std::to_string(i + 1) + " has wrong shape");
        if (!s.cocycles.contains(r.coordinates()))
            throw PreconditionError("cohomology: representative " + std::to_string(i + 1) + " is not a cocycle");
        coords.push_back(r.coordinates());
    }
    QuotientSpace q = QuotientSpace::with_representatives(s.coboundaries, std::move(coords));
    return CohomologySpace(alg.dim(), p, std::move(s.cocycles), std::move(s.coboundaries), std::move(q));
}

namespace {

using LinearForm = std::vector<std::pair<Scalar, std::size_t>>;

// Returns c with a == c * b, if the two forms are proportional.
std::optional<Scalar> ratio(const LinearForm& a, const LinearForm& b)
{
    if (a.size() != b.size() || a.empty())
        return std::nullopt;
    Scalar c = a.front().first / b.front().first;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].second != b[i].second || a[i].first != c * b[i].first)
            return std::nullopt;
    return c;
}

std::string render_term(const Scalar& coeff, const std::string& name, bool leading)
{
    std::string sign;
    Scalar mag = coeff;
    if (coeff < 0) {
        sign = leading ? "-" : " - ";
        mag = -coeff;
    } else if (!leading) {
        sign = " + ";
    }
    if (mag == 1)
        return sign + name;
    return sign + to_string(mag) + "*" + name;
}

} // namespace

std::vector<CocycleRelation> cocycle_relations(const LeibnizAlgebra& alg, std::size_t p)
{
    if (p == 0)
        throw PreconditionError("cocycle_relations: degree must be at least 1");
    const std::size_t n = alg.dim();
    RrefResult r = rref(coboundary_matrix(alg, p));

    // (first pivot, relation) so zero and nonzero groups interleave by position.
    std::map<std::size_t, CocycleRelation> groups;
    std::map<std::size_t, std::size_t> zero_group_by_tuple;
    std::vector<std::size_t> nonzero_groups;

    for (std::size_t row = 0; row < r.pivots.size(); ++row) {
        const std::size_t pc = r.pivots[row];
        LinearForm rhs;
        for (std::size_t j = pc + 1; j < r.reduced.cols(); ++j)
            if (r.reduced(row, j) != 0)
                rhs.emplace_back(-r.reduced(row, j), j);

        if (rhs.empty()) {
            const std::size_t tuple = pc / n;
            auto it = zero_group_by_tuple.find(tuple);
            if (it == zero_group_by_tuple.end()) {
                zero_group_by_tuple.emplace(tuple, pc);
                groups[pc] = CocycleRelation{{{Scalar(1), pc}}, {}};
            } else {
                groups[it->second].members.emplace_back(Scalar(1), pc);
            }
            continue;
        }

        bool merged = false;
        for (auto key : nonzero_groups) {
            auto& g = groups[key];
            if (auto c = ratio(rhs, g.rhs)) {
                // c * rhs_g = a_pc  =>  (1/c) a_pc = rhs_g
                g.members.emplace_back(1 / *c, pc);
                merged = true;
                break;
            }
        }
        if (!merged) {
            groups[pc] = CocycleRelation{{{Scalar(1), pc}}, std::move(rhs)};
            nonzero_groups.push_back(pc);
        }
    }

    std::vector<CocycleRelation> out;
    for (auto& [_, g] : groups)
        out.push_back(std::move(g));
    return out;
}

std::string coordinate_name(std::size_t algebra_dim, std::size_t arity, std::size_t coordinate)
{
    const std::size_t k = coordinate % algebra_dim;
    std::size_t tuple = coordinate / algebra_dim;
    std::vector<std::size_t> idx(arity);
    for (std::size_t pos = arity; pos-- > 0;) {
        idx[pos] = tuple % algebra_dim;
        tuple /= algebra_dim;
    }
    std::string name = "a_{";
    for (std::size_t pos = 0; pos < arity; ++pos) {
        if (pos > 0)
            name += ",";
        name += std::to_string(idx[pos] + 1);
    }
    return name + "}^" + std::to_string(k + 1);
}

std::string to_string(const CocycleRelation& rel, std::size_t algebra_dim, std::size_t arity)
{
    std::string out;
    for (std::size_t i = 0; i < rel.members.size(); ++i) {
        if (i > 0)
            out += " = ";
        out += render_term(rel.members[i].first, coordinate_name(algebra_dim, arity, rel.members[i].second), true);
    }
    out += " = ";
    if (rel.rhs.empty())
        return out + "0";
    for (std::size_t i = 0; i < rel.rhs.size(); ++i)
        out += render_term(rel.rhs[i].first, coordinate_name(algebra_dim, arity, rel.rhs[i].second), i == 0);
    return out;
}

} // namespace leibniz
