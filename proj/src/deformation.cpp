#include "leibniz/deformation.hpp"

#include "leibniz/errors.hpp"
#include "leibniz/exact_linalg.hpp"
#include "leibniz/kernels.hpp"

#include <stdexcept>
#include <utility>

namespace leibniz {

using TermMap = std::map<Monomial, Cochain, MonomialOrder>;

Cochain bracket_cochain(const LeibnizAlgebra& alg)
{
    const std::size_t n = alg.dim();
    Cochain c(n, 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                c.at(i * n + j, k) = alg.constant(i, j, k);
    return c;
}

namespace {

TermMap normalize_terms(const LeibnizAlgebra& alg, const LocalBase& base, const TermMap& terms)
{
    TermMap out;
    for (const auto& [m, psi] : terms) {
        if (m.size() != base.num_generators())
            throw PreconditionError("Deformation: monomial has wrong number of exponents");
        if (total_degree(m) == 0)
            throw PreconditionError("Deformation: the unit monomial is reserved for the algebra bracket");
        if (psi.arity() != 2 || psi.algebra_dim() != alg.dim())
            throw PreconditionError("Deformation: terms must be 2-cochains on the algebra");
        for (const auto& [m2, c] : base.reduce(PolyTerms{{m, Scalar(1)}})) {
            auto [it, inserted] = out.emplace(m2, c * psi);
            if (!inserted)
                it->second += c * psi;
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

} // namespace

Deformation::Deformation(LeibnizAlgebra algebra, LocalBase base, const TermMap& terms)
    : algebra_(std::move(algebra)), base_(std::move(base)), terms_(normalize_terms(algebra_, base_, terms))
{
}

Deformation::Deformation(LeibnizAlgebra algebra, LocalBase base)
    : algebra_(std::move(algebra)), base_(std::move(base))
{
}

Cochain Deformation::term(const Monomial& m) const
{
    if (total_degree(m) == 0)
        return bracket_cochain(algebra_);
    auto it = terms_.find(m);
    return it == terms_.end() ? Cochain(algebra_.dim(), 2) : it->second;
}

TruncatedPolynomial Deformation::structure_polynomial(std::size_t i, std::size_t j, std::size_t k) const
{
    const std::size_t n = algebra_.dim();
    PolyTerms p;
    p[base_.unit()] = algebra_.constant(i, j, k);
    for (const auto& [m, psi] : terms_)
        p[m] += psi.at(i * n + j, k);
    return TruncatedPolynomial(base_, p);
}

PolyVector Deformation::basis_bracket(std::size_t i, std::size_t j) const
{
    PolyVector out;
    for (std::size_t k = 0; k < algebra_.dim(); ++k)
        out.push_back(structure_polynomial(i, j, k));
    return out;
}

Deformation Deformation::rebased(const LocalBase& base) const
{
    if (base.num_generators() != base_.num_generators())
        throw PreconditionError("Deformation::rebased: generator count differs");
    return Deformation(algebra_, base, terms_);
}

bool Deformation::operator==(const Deformation& other) const
{
    return algebra_ == other.algebra_ && base_ == other.base_ && terms_ == other.terms_;
}

PolyVector poly_vector(const LocalBase& base, const Vector& v)
{
    PolyVector out;
    for (const auto& c : v)
        out.push_back(TruncatedPolynomial::constant(base, c));
    return out;
}

PolyVector zero_poly_vector(const LocalBase& base, std::size_t n)
{
    return PolyVector(n, TruncatedPolynomial(base));
}

Deformation universal_infinitesimal(const LeibnizAlgebra& alg, const std::vector<Cochain>& reps,
                                    std::vector<std::string> generator_names)
{
    if (generator_names.empty())
        generator_names = LocalBase::default_generator_names(reps.size());
    if (generator_names.size() != reps.size())
        throw PreconditionError("universal_infinitesimal: need one generator name per representative");
    for (std::size_t i = 0; i < reps.size(); ++i) {
        if (reps[i].arity() != 2 || reps[i].algebra_dim() != alg.dim())
            throw PreconditionError("universal_infinitesimal: representative " + std::to_string(i + 1) +
                                    " is not a 2-cochain on the algebra");
        if (!coboundary(alg, reps[i]).is_zero())
            throw PreconditionError("universal_infinitesimal: representative " + std::to_string(i + 1) +
                                    " is not a cocycle");
    }
    LocalBase base(std::move(generator_names), 1);
    TermMap terms;
    for (std::size_t i = 0; i < reps.size(); ++i)
        terms.emplace(base.generator_monomial(i), reps[i]);
    return Deformation(alg, base, terms);
}

PolyVector deformation_bracket(const Deformation& d, const PolyVector& x, const PolyVector& y)
{
    const std::size_t n = d.algebra().dim();
    if (x.size() != n || y.size() != n)
        throw PreconditionError("deformation_bracket: operands have wrong length");
    for (const auto& p : x)
        if (!(p.base() == d.base()))
            throw PreconditionError("deformation_bracket: operand over a different base");
    for (const auto& p : y)
        if (!(p.base() == d.base()))
            throw PreconditionError("deformation_bracket: operand over a different base");

    PolyVector out = zero_poly_vector(d.base(), n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero())
            continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j].is_zero())
                continue;
            const TruncatedPolynomial xy = x[i] * y[j];
            if (xy.is_zero())
                continue;
            for (std::size_t k = 0; k < n; ++k) {
                TruncatedPolynomial c = d.structure_polynomial(i, j, k);
                if (!c.is_zero())
                    out[k] += xy * c;
            }
        }
    }
    return out;
}

Cochain leibniz_term(const Cochain& a, const Cochain& b)
{
    return kernels::leibniz_term_parallel(a, b);
}

namespace {

template <class Kernel>
TermMap defect_with(const Deformation& d, Kernel kernel)
{
    const LocalBase& base = d.base();
    const std::size_t n = d.algebra().dim();
    TermMap out;
    for (const auto& m : base.standard_monomials())
        out.emplace(m, Cochain(n, 3));

    std::vector<std::pair<Monomial, Cochain>> psi;
    psi.emplace_back(base.unit(), bracket_cochain(d.algebra()));
    for (const auto& [m, c] : d.terms())
        psi.emplace_back(m, c);

    for (const auto& [outer_m, outer] : psi)
        for (const auto& [inner_m, inner] : psi) {
            const Monomial prod = multiply(outer_m, inner_m);
            if (total_degree(prod) > base.order())
                continue;
            const PolyTerms nf = base.reduce(PolyTerms{{prod, Scalar(1)}});
            if (nf.empty())
                continue;
            const Cochain term = kernel(outer, inner);
            if (term.is_zero())
                continue;
            for (const auto& [m, c] : nf)
                out.at(m) += c * term;
        }
    return out;
}

} // namespace

TermMap leibniz_defect(const Deformation& d)
{
    return defect_with(d, kernels::leibniz_term_parallel);
}

TermMap leibniz_defect_serial(const Deformation& d)
{
    return defect_with(d, kernels::leibniz_term_serial);
}

bool defect_vanishes(const Deformation& d)
{
    for (const auto& [_, c] : leibniz_defect(d))
        if (!c.is_zero())
            return false;
    return true;
}

bool ObstructionReport::obstructed() const
{
    for (const auto& [_, v] : classes)
        if (!is_zero(v))
            return true;
    return false;
}

std::vector<PolyTerms> ObstructionReport::nonzero_relations() const
{
    std::vector<PolyTerms> out;
    for (const auto& r : relation_polynomials)
        if (!r.empty())
            out.push_back(r);
    return out;
}

ObstructionReport obstruction_classes(const Deformation& d, const CohomologySpace& hl3)
{
    if (hl3.degree() != 3 || hl3.algebra_dim() != d.algebra().dim())
        throw PreconditionError("obstruction_classes: expected HL^3 of the same algebra");
    if (!defect_vanishes(d))
        throw PreconditionError("obstruction_classes: the deformation does not satisfy the Leibniz identity "
                                "over its base");

    const unsigned next = d.base().order() + 1;
    const Deformation lifted = d.rebased(d.base().with_order(next));
    TermMap defect = leibniz_defect(lifted);

    ObstructionReport report;
    report.order = next;
    report.relation_polynomials.assign(hl3.dim(), PolyTerms{});
    for (const auto& m : lifted.base().standard_monomials_of_degree(next)) {
        Cochain& q = defect.at(m);
        if (!hl3.is_cocycle(q))
            throw std::logic_error("obstruction_classes: defect at " + to_string(m, d.base().generators()) +
                                   " is not a 3-cocycle");
        Vector cls = hl3.project_to_classes(q);
        for (std::size_t j = 0; j < cls.size(); ++j)
            if (cls[j] != 0)
                report.relation_polynomials[j].emplace(m, cls[j]);
        report.classes.emplace(m, std::move(cls));
        report.cocycles.emplace(m, std::move(q));
    }
    return report;
}

std::variant<Deformation, ObstructionReport> extend_to_order(const Deformation& d, const CohomologySpace& hl3)
{
    ObstructionReport report = obstruction_classes(d, hl3);
    if (report.obstructed())
        return report;

    const LeibnizAlgebra& alg = d.algebra();
    const Matrix delta2 = coboundary_matrix(alg, 2);
    TermMap terms = d.terms();
    for (const auto& [m, q] : report.cocycles) {
        if (q.is_zero())
            continue;
        Vector rhs = q.coordinates();
        for (auto& x : rhs)
            x = -x;
        std::optional<Vector> psi = solve(delta2, rhs);
        if (!psi)
            throw std::logic_error("extend_to_order: vanishing class but no primitive for the defect");
        terms.emplace(m, Cochain::from_coordinates(alg.dim(), 2, std::move(*psi)));
    }
    Deformation out(alg, d.base().with_order(report.order), terms);
    if (!defect_vanishes(out))
        throw std::logic_error("extend_to_order: extended deformation fails the Leibniz identity");
    return out;
}

BaseMap::BaseMap(LocalBase source, LocalBase target, std::vector<TruncatedPolynomial> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images))
{
    if (images_.size() != source_.num_generators())
        throw PreconditionError("BaseMap: need one image per source generator");
    if (target_.order() > source_.order())
        throw PreconditionError("BaseMap: target truncation order exceeds the source order");
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (!(images_[i].base() == target_))
            throw PreconditionError("BaseMap: image of " + source_.generators()[i] + " is over another base");
        if (images_[i].constant_term() != 0)
            throw PreconditionError("BaseMap: image of " + source_.generators()[i] +
                                    " has a nonzero constant term");
    }
    for (const auto& rel : source_.relations()) {
        TruncatedPolynomial img(target_);
        for (const auto& [m, c] : rel)
            img += c * apply(m);
        if (!img.is_zero())
            throw PreconditionError("BaseMap: relation " + to_string(rel, source_.generators()) +
                                    " is not mapped into the target ideal");
    }
}

BaseMap BaseMap::identity(const LocalBase& base)
{
    std::vector<TruncatedPolynomial> images;
    for (std::size_t i = 0; i < base.num_generators(); ++i)
        images.push_back(TruncatedPolynomial::generator(base, i));
    return BaseMap(base, base, std::move(images));
}

TruncatedPolynomial BaseMap::apply(const Monomial& m) const
{
    if (m.size() != source_.num_generators())
        throw PreconditionError("BaseMap::apply: monomial has wrong number of exponents");
    TruncatedPolynomial out = TruncatedPolynomial::constant(target_, 1);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (unsigned e = 0; e < m[i]; ++e) {
            out *= images_[i];
            if (out.is_zero())
                return out;
        }
    return out;
}

TruncatedPolynomial BaseMap::apply(const TruncatedPolynomial& p) const
{
    if (!(p.base() == source_))
        throw PreconditionError("BaseMap::apply: polynomial over another base");
    TruncatedPolynomial out(target_);
    for (const auto& [m, c] : p.terms())
        out += c * apply(m);
    return out;
}

BaseMap compose(const BaseMap& g, const BaseMap& f)
{
    if (!(f.target() == g.source()))
        throw PreconditionError("compose: target of the first map differs from the source of the second");
    std::vector<TruncatedPolynomial> images;
    for (const auto& img : f.images())
        images.push_back(g.apply(img));
    return BaseMap(f.source(), g.target(), std::move(images));
}

Deformation push_forward(const Deformation& d, const BaseMap& phi)
{
    if (!(d.base() == phi.source()))
        throw PreconditionError("push_forward: map source differs from the deformation base");
    TermMap terms;
    for (const auto& [m, psi] : d.terms()) {
        const TruncatedPolynomial image = phi.apply(m);
        for (const auto& [m2, c] : image.terms()) {
            auto [it, inserted] = terms.emplace(m2, c * psi);
            if (!inserted)
                it->second += c * psi;
        }
    }
    return Deformation(d.algebra(), phi.target(), terms);
}

BaseLinearMap identity_map(const LocalBase& base, std::size_t n)
{
    BaseLinearMap phi;
    for (std::size_t j = 0; j < n; ++j)
        phi.columns.push_back(poly_vector(base, unit_vector(n, j)));
    return phi;
}

PolyVector apply(const BaseLinearMap& phi, const PolyVector& v)
{
    if (v.size() != phi.columns.size())
        throw PreconditionError("apply: vector length differs from the map size");
    const LocalBase& base = v.empty() ? phi.columns.at(0).at(0).base() : v.front().base();
    PolyVector out = zero_poly_vector(base, v.size());
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (v[j].is_zero())
            continue;
        if (phi.columns[j].size() != v.size())
            throw PreconditionError("apply: map column has wrong length");
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!phi.columns[j][i].is_zero())
                out[i] += phi.columns[j][i] * v[j];
    }
    return out;
}

EquivalenceCheck check_equivalence(const BaseLinearMap& phi, const Deformation& d1, const Deformation& d2)
{
    if (!(d1.algebra() == d2.algebra()) || !(d1.base() == d2.base()))
        throw PreconditionError("check_equivalence: deformations over different algebras or bases");
    const std::size_t n = d1.algebra().dim();
    if (phi.columns.size() != n)
        throw PreconditionError("check_equivalence: map has wrong size");
    for (const auto& col : phi.columns) {
        if (col.size() != n)
            throw PreconditionError("check_equivalence: map column has wrong length");
        for (const auto& p : col)
            if (!(p.base() == d1.base()))
                throw PreconditionError("check_equivalence: map entries over another base");
    }

    EquivalenceCheck result;
    Matrix constant(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            constant(i, j) = phi.columns[j][i].constant_term();
    result.invertible = rank(constant) == n;
    result.augmentation = constant == Matrix::identity(n);

    result.intertwines = true;
    for (std::size_t i = 0; i < n && result.intertwines; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            PolyVector lhs = leibniz::apply(phi, d1.basis_bracket(i, j));
            PolyVector rhs = deformation_bracket(d2, phi.columns[i], phi.columns[j]);
            if (lhs != rhs) {
                result.intertwines = false;
                result.counterexample = std::make_pair(i, j);
                result.lhs = std::move(lhs);
                result.rhs = std::move(rhs);
                break;
            }
        }
    result.equivalent = result.invertible && result.augmentation && result.intertwines;
    return result;
}

VersalResult versal_construct(const LeibnizAlgebra& alg, unsigned max_order,
                              const std::optional<std::vector<Cochain>>& reps)
{
    if (max_order < 1)
        throw PreconditionError("versal_construct: max_order must be at least 1");
    const CohomologySpace hl2 = reps ? cohomology_with_representatives(alg, 2, *reps) : cohomology(alg, 2);
    Deformation d = universal_infinitesimal(alg, hl2.representatives());
    VersalResult result{d, {}, {}};
    if (max_order == 1)
        return result;

    const CohomologySpace hl3 = cohomology(alg, 3);
    for (unsigned k = 1; k < max_order; ++k) {
        ObstructionReport report = obstruction_classes(d, hl3);
        if (report.obstructed()) {
            std::vector<PolyTerms> rels = report.nonzero_relations();
            d = d.rebased(d.base().with_relations(rels));
            result.relations_by_order.emplace_back(k + 1, std::move(rels));
        }
        result.reports.push_back(std::move(report));
        auto step = extend_to_order(d, hl3);
        if (auto* next = std::get_if<Deformation>(&step))
            d = std::move(*next);
        else
            throw std::logic_error("versal_construct: obstruction persists after adding its relations");
    }
    result.deformation = std::move(d);
    return result;
}

std::vector<Cochain> lambda6_reference_representatives()
{
    Cochain mu1(3, 2);
    mu1.at(1 * 3 + 2, 0) = -1;
    Cochain mu2(3, 2);
    mu2.at(0 * 3 + 2, 0) = 1;
    return {mu1, mu2};
}

} // namespace leibniz
