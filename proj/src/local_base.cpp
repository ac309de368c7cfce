#include "leibniz/local_base.hpp"

#include "leibniz/errors.hpp"
#include "leibniz/exact_linalg.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace leibniz {

unsigned total_degree(const Monomial& m)
{
    return std::accumulate(m.begin(), m.end(), 0u);
}

Monomial multiply(const Monomial& a, const Monomial& b)
{
    if (a.size() != b.size())
        throw PreconditionError("multiply: monomials in different numbers of generators");
    Monomial out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] + b[i];
    return out;
}

bool grlex_less(const Monomial& a, const Monomial& b)
{
    const unsigned da = total_degree(a);
    const unsigned db = total_degree(b);
    if (da != db)
        return da < db;
    return a < b;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const
{
    const unsigned da = total_degree(a);
    const unsigned db = total_degree(b);
    if (da != db)
        return da < db;
    return a > b;
}

std::string to_string(const Monomial& m, const std::vector<std::string>& names)
{
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0)
            continue;
        if (!out.empty())
            out += "*";
        out += i < names.size() ? names[i] : "t" + std::to_string(i + 1);
        if (m[i] > 1)
            out += "^" + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

std::string to_string(const PolyTerms& p, const std::vector<std::string>& names)
{
    if (p.empty())
        return "0";
    std::string out;
    for (const auto& [m, c] : p) {
        const bool unit = total_degree(m) == 0;
        Scalar mag = c;
        if (out.empty()) {
            if (c < 0) {
                out += "-";
                mag = -c;
            }
        } else if (c < 0) {
            out += " - ";
            mag = -c;
        } else {
            out += " + ";
        }
        if (unit)
            out += to_string(mag);
        else if (mag == 1)
            out += to_string(m, names);
        else
            out += to_string(mag) + "*" + to_string(m, names);
    }
    return out;
}

namespace {

// Monomials of exact degree d in lex-descending order.
void monomials_of_degree(std::size_t vars, unsigned d, std::vector<Monomial>& out)
{
    Monomial cur(vars, 0);
    auto rec = [&](auto&& self, std::size_t pos, unsigned left) -> void {
        if (pos + 1 == vars) {
            cur[pos] = left;
            out.push_back(cur);
            return;
        }
        for (unsigned e = left + 1; e-- > 0;) {
            cur[pos] = e;
            self(self, pos + 1, left - e);
        }
        cur[pos] = 0;
    };
    if (vars == 0) {
        if (d == 0)
            out.emplace_back();
        return;
    }
    rec(rec, 0, d);
}

unsigned min_degree(const PolyTerms& p)
{
    return p.empty() ? 0 : total_degree(p.begin()->first);
}

} // namespace

struct LocalBase::Impl {
    std::vector<std::string> generators;
    unsigned order = 0;
    std::vector<PolyTerms> relations;
    std::vector<Monomial> standard;
    // leading monomial -> its normal form in standard monomials
    std::map<Monomial, PolyTerms, MonomialOrder> reducers;
};

LocalBase::LocalBase(std::vector<std::string> generators, unsigned order, std::vector<PolyTerms> relations)
{
    auto impl = std::make_shared<Impl>();
    impl->generators = std::move(generators);
    impl->order = order;
    const std::size_t m = impl->generators.size();

    for (auto& rel : relations) {
        PolyTerms clean;
        for (const auto& [mono, c] : rel) {
            if (mono.size() != m)
                throw PreconditionError("LocalBase: relation monomial has wrong number of exponents");
            if (c == 0)
                continue;
            if (total_degree(mono) == 0)
                throw PreconditionError("LocalBase: relation has a nonzero constant term");
            clean.emplace(mono, c);
        }
        if (!clean.empty())
            impl->relations.push_back(std::move(clean));
    }

    // Columns in descending grlex order.
    std::vector<Monomial> columns;
    for (unsigned d = order + 1; d-- > 0;)
        monomials_of_degree(m, d, columns);
    std::map<Monomial, std::size_t, MonomialOrder> column_of;
    for (std::size_t i = 0; i < columns.size(); ++i)
        column_of.emplace(columns[i], i);

    std::vector<Vector> rows;
    for (const auto& rel : impl->relations) {
        const unsigned low = min_degree(rel);
        if (low > order)
            continue;
        std::vector<Monomial> shifts;
        for (unsigned d = 0; d + low <= order; ++d)
            monomials_of_degree(m, d, shifts);
        for (const auto& u : shifts) {
            Vector row = zero_vector(columns.size());
            bool any = false;
            for (const auto& [mono, c] : rel) {
                Monomial prod = multiply(u, mono);
                if (total_degree(prod) > order)
                    continue;
                row[column_of.at(prod)] += c;
                any = true;
            }
            if (any)
                rows.push_back(std::move(row));
        }
    }

    std::vector<bool> is_pivot(columns.size(), false);
    if (!rows.empty()) {
        RrefResult r = rref(Matrix::from_rows(rows));
        for (std::size_t i = 0; i < r.pivots.size(); ++i) {
            const std::size_t pc = r.pivots[i];
            is_pivot[pc] = true;
            PolyTerms nf;
            for (std::size_t j = pc + 1; j < columns.size(); ++j)
                if (r.reduced(i, j) != 0)
                    nf.emplace(columns[j], -r.reduced(i, j));
            impl->reducers.emplace(columns[pc], std::move(nf));
        }
    }
    for (std::size_t i = columns.size(); i-- > 0;)
        if (!is_pivot[i])
            impl->standard.push_back(columns[i]);
    std::sort(impl->standard.begin(), impl->standard.end(), MonomialOrder{});
    impl_ = std::move(impl);
}

std::vector<std::string> LocalBase::default_generator_names(std::size_t h)
{
    if (h == 1)
        return {"t"};
    if (h == 2)
        return {"t", "s"};
    std::vector<std::string> out;
    for (std::size_t i = 0; i < h; ++i)
        out.push_back("t" + std::to_string(i + 1));
    return out;
}

std::size_t LocalBase::num_generators() const noexcept { return impl_->generators.size(); }
const std::vector<std::string>& LocalBase::generators() const noexcept { return impl_->generators; }
unsigned LocalBase::order() const noexcept { return impl_->order; }
const std::vector<PolyTerms>& LocalBase::relations() const noexcept { return impl_->relations; }
const std::vector<Monomial>& LocalBase::standard_monomials() const noexcept { return impl_->standard; }

std::vector<Monomial> LocalBase::standard_monomials_of_degree(unsigned d) const
{
    std::vector<Monomial> out;
    for (const auto& m : impl_->standard)
        if (total_degree(m) == d)
            out.push_back(m);
    return out;
}

std::vector<Monomial> LocalBase::leading_monomials() const
{
    std::vector<Monomial> out;
    for (const auto& [m, _] : impl_->reducers)
        out.push_back(m);
    return out;
}

bool LocalBase::is_standard(const Monomial& m) const
{
    return m.size() == num_generators() && total_degree(m) <= order() && !impl_->reducers.count(m);
}

PolyTerms LocalBase::reduce(const PolyTerms& p) const
{
    PolyTerms out;
    auto add = [&out](const Monomial& m, const Scalar& c) {
        auto [it, inserted] = out.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                out.erase(it);
        } else if (c == 0) {
            out.erase(it);
        }
    };
    for (const auto& [m, c] : p) {
        if (m.size() != num_generators())
            throw PreconditionError("LocalBase::reduce: monomial has wrong number of exponents");
        if (c == 0 || total_degree(m) > order())
            continue;
        auto it = impl_->reducers.find(m);
        if (it == impl_->reducers.end()) {
            add(m, c);
            continue;
        }
        for (const auto& [m2, c2] : it->second)
            add(m2, c * c2);
    }
    return out;
}

LocalBase LocalBase::with_order(unsigned order) const
{
    return LocalBase(generators(), order, relations());
}

LocalBase LocalBase::with_relations(const std::vector<PolyTerms>& extra) const
{
    std::vector<PolyTerms> all = relations();
    all.insert(all.end(), extra.begin(), extra.end());
    return LocalBase(generators(), order(), std::move(all));
}

Monomial LocalBase::unit() const
{
    return Monomial(num_generators(), 0);
}

Monomial LocalBase::generator_monomial(std::size_t i) const
{
    if (i >= num_generators())
        throw PreconditionError("LocalBase: generator index out of range");
    Monomial m = unit();
    m[i] = 1;
    return m;
}

std::string LocalBase::describe() const
{
    std::string out = "K[";
    for (std::size_t i = 0; i < num_generators(); ++i) {
        if (i > 0)
            out += ",";
        out += generators()[i];
    }
    out += "] / (m^" + std::to_string(order() + 1);
    if (!relations().empty()) {
        out += " + (";
        for (std::size_t i = 0; i < relations().size(); ++i) {
            if (i > 0)
                out += ", ";
            out += to_string(relations()[i], generators());
        }
        out += ")";
    }
    return out + ")";
}

bool LocalBase::operator==(const LocalBase& other) const
{
    if (impl_ == other.impl_)
        return true;
    return generators() == other.generators() && order() == other.order() &&
           impl_->reducers == other.impl_->reducers;
}

TruncatedPolynomial::TruncatedPolynomial(LocalBase base) : base_(std::move(base)) {}

TruncatedPolynomial::TruncatedPolynomial(LocalBase base, const PolyTerms& terms)
    : base_(std::move(base)), terms_(base_.reduce(terms))
{
}

TruncatedPolynomial TruncatedPolynomial::constant(LocalBase base, const Scalar& c)
{
    Monomial one = base.unit();
    return TruncatedPolynomial(std::move(base), PolyTerms{{one, c}});
}

TruncatedPolynomial TruncatedPolynomial::generator(LocalBase base, std::size_t i)
{
    Monomial g = base.generator_monomial(i);
    return TruncatedPolynomial(std::move(base), PolyTerms{{g, Scalar(1)}});
}

TruncatedPolynomial TruncatedPolynomial::monomial(LocalBase base, const Monomial& m, const Scalar& c)
{
    return TruncatedPolynomial(std::move(base), PolyTerms{{m, c}});
}

Scalar TruncatedPolynomial::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
}

Scalar TruncatedPolynomial::constant_term() const
{
    return coefficient(base_.unit());
}

void TruncatedPolynomial::require_same_base(const TruncatedPolynomial& other) const
{
    if (!(base_ == other.base_))
        throw PreconditionError("TruncatedPolynomial: operands over different bases");
}

TruncatedPolynomial& TruncatedPolynomial::operator+=(const TruncatedPolynomial& other)
{
    require_same_base(other);
    for (const auto& [m, c] : other.terms_) {
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }
    return *this;
}

TruncatedPolynomial& TruncatedPolynomial::operator-=(const TruncatedPolynomial& other)
{
    require_same_base(other);
    for (const auto& [m, c] : other.terms_) {
        auto [it, inserted] = terms_.emplace(m, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }
    return *this;
}

TruncatedPolynomial& TruncatedPolynomial::operator*=(const TruncatedPolynomial& other)
{
    require_same_base(other);
    PolyTerms prod;
    for (const auto& [a, ca] : terms_)
        for (const auto& [b, cb] : other.terms_) {
            Monomial m = multiply(a, b);
            if (total_degree(m) > base_.order())
                continue;
            prod[m] += ca * cb;
        }
    terms_ = base_.reduce(prod);
    return *this;
}

TruncatedPolynomial& TruncatedPolynomial::operator*=(const Scalar& s)
{
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [_, c] : terms_)
        c *= s;
    return *this;
}

bool TruncatedPolynomial::operator==(const TruncatedPolynomial& other) const
{
    return base_ == other.base_ && terms_ == other.terms_;
}

std::string TruncatedPolynomial::to_string() const
{
    return leibniz::to_string(terms_, base_.generators());
}

} // namespace leibniz
