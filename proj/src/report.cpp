#include "leibniz/report.hpp"

#include "leibniz/cochain_complex.hpp"
#include "leibniz/errors.hpp"
#include "leibniz/massey.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include <map>
#include <tuple>

namespace leibniz {

using ordered_json = nlohmann::ordered_json;

std::optional<ReferenceDims> lambda6_reference_dims(std::size_t degree)
{
    if (degree == 2)
        return ReferenceDims{8, 6, 2};
    if (degree == 3)
        return ReferenceDims{20, 18, 2};
    return std::nullopt;
}

namespace {

struct SignedTerm {
    bool negative;
    std::string body;
};

std::string join_terms(const std::vector<SignedTerm>& terms)
{
    if (terms.empty())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i == 0)
            out += terms[i].negative ? "-" : "";
        else
            out += terms[i].negative ? " - " : " + ";
        out += terms[i].body;
    }
    return out;
}

std::string scaled(const Scalar& mag, const std::string& body)
{
    return mag == 1 ? body : to_string(mag) + "*" + body;
}

ordered_json cochain_entries(const Cochain& c)
{
    ordered_json entries = ordered_json::array();
    const std::size_t n = c.algebra_dim();
    for (std::size_t t = 0; t < c.num_inputs(); ++t)
        for (std::size_t k = 0; k < n; ++k) {
            const Scalar& v = c.at(t, k);
            if (v == 0)
                continue;
            ordered_json inputs = ordered_json::array();
            for (auto i : c.decode_tuple(t))
                inputs.push_back(i + 1);
            entries.push_back({{"inputs", std::move(inputs)}, {"output", k + 1}, {"coeff", to_string(v)}});
        }
    return entries;
}

ordered_json scalar_array(const Vector& v)
{
    ordered_json arr = ordered_json::array();
    for (const auto& x : v)
        arr.push_back(to_string(x));
    return arr;
}

std::string render_class(const Vector& v)
{
    if (is_zero(v))
        return "0";
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0)
            out += ", ";
        out += to_string(v[i]);
    }
    return out + ")";
}

struct TermOrder {
    bool operator()(const std::pair<Monomial, std::size_t>& a, const std::pair<Monomial, std::size_t>& b) const
    {
        MonomialOrder less;
        if (less(a.first, b.first))
            return true;
        if (less(b.first, a.first))
            return false;
        return a.second < b.second;
    }
};

std::string finish(const ordered_json& doc)
{
    return doc.dump(2) + "\n";
}

std::string header(const LeibnizAlgebra& alg, const std::string& name)
{
    return fmt::format("Algebra: {} (dim {})\n", name, alg.dim());
}

} // namespace

std::string render_vector(const Vector& v, const LeibnizAlgebra& alg)
{
    std::vector<SignedTerm> terms;
    for (std::size_t k = 0; k < v.size(); ++k)
        if (v[k] != 0)
            terms.push_back({v[k] < 0, scaled(abs(v[k]), alg.label(k))});
    return join_terms(terms);
}

std::string render_cochain(const Cochain& c, const LeibnizAlgebra& alg)
{
    if (c.is_zero())
        return "0";
    std::string out;
    for (std::size_t t = 0; t < c.num_inputs(); ++t) {
        Vector v = c.value(t);
        if (is_zero(v))
            continue;
        if (!out.empty())
            out += "; ";
        out += "(";
        const auto tuple = c.decode_tuple(t);
        for (std::size_t i = 0; i < tuple.size(); ++i) {
            if (i > 0)
                out += ",";
            out += alg.label(tuple[i]);
        }
        out += ") -> " + render_vector(v, alg);
    }
    return out;
}

std::string render_poly_vector(const PolyVector& v, const LeibnizAlgebra& alg)
{
    std::map<std::pair<Monomial, std::size_t>, Scalar, TermOrder> expansion;
    std::vector<std::string> names;
    for (std::size_t k = 0; k < v.size(); ++k) {
        names = v[k].base().generators();
        for (const auto& [m, c] : v[k].terms())
            expansion.emplace(std::make_pair(m, k), c);
    }
    std::vector<SignedTerm> terms;
    for (const auto& [key, c] : expansion) {
        const auto& [m, k] = key;
        std::string body = alg.label(k);
        if (total_degree(m) > 0)
            body = to_string(m, names) + "*" + body;
        terms.push_back({c < 0, scaled(abs(c), body)});
    }
    return join_terms(terms);
}

std::string check_report(const LeibnizAlgebra& alg, const std::string& name, OutputFormat fmt)
{
    const auto violations = validate(alg);
    if (fmt == OutputFormat::json) {
        ordered_json doc;
        doc["algebra"] = name;
        doc["dim"] = alg.dim();
        doc["leibniz"] = violations.empty();
        ordered_json list = ordered_json::array();
        for (const auto& v : violations)
            list.push_back({{"triple", {v.i + 1, v.j + 1, v.k + 1}}, {"defect", scalar_array(v.defect)}});
        doc["violations"] = std::move(list);
        return finish(doc);
    }
    std::string out = header(alg, name);
    if (violations.empty())
        return out + "Leibniz identity: OK (0 violations)\n";
    out += fmt::format("Leibniz identity: FAILED ({} violations)\n", violations.size());
    for (const auto& v : violations)
        out += fmt::format("  ({},{},{}): defect {}\n", alg.label(v.i), alg.label(v.j), alg.label(v.k),
                           render_vector(v.defect, alg));
    return out;
}

std::string cohomology_report(const LeibnizAlgebra& alg, const std::string& name,
                              const CohomologyReportOptions& opts, OutputFormat fmt)
{
    const std::size_t p = opts.degree;
    if (p < 1)
        throw PreconditionError("cohomology: degree must be at least 1");
    const CohomologySpace h = opts.representatives ? cohomology_with_representatives(alg, p, *opts.representatives)
                                                   : cohomology(alg, p);
    const std::size_t prev_cochains = ipow(alg.dim(), p);
    const std::size_t prev_cocycles = kernel_basis(coboundary_matrix(alg, p - 1)).size();
    const bool euler_ok = h.dim_cocycles() - h.dim_coboundaries() == h.dim();
    const bool rank_ok = prev_cochains - prev_cocycles == h.dim_coboundaries();
    const auto relations = cocycle_relations(alg, p);

    std::vector<std::string> mismatches;
    if (opts.reference) {
        auto cmp = [&](const char* what, std::size_t computed, std::size_t reference) {
            if (computed != reference)
                mismatches.push_back(
                    fmt::format("dim {}^{} computed {}, reference {}", what, p, computed, reference));
        };
        cmp("ZL", h.dim_cocycles(), opts.reference->cocycles);
        cmp("BL", h.dim_coboundaries(), opts.reference->coboundaries);
        cmp("HL", h.dim(), opts.reference->cohomology);
    }

    if (fmt == OutputFormat::json) {
        ordered_json doc;
        doc["algebra"] = name;
        doc["dim"] = alg.dim();
        doc["degree"] = p;
        doc["dim_cochains"] = h.dim_cochains();
        doc["dim_cocycles"] = h.dim_cocycles();
        doc["dim_coboundaries"] = h.dim_coboundaries();
        doc["dim_cohomology"] = h.dim();
        doc["consistent"] = euler_ok && rank_ok;
        doc["rank_nullity"] = {{"dim_previous_cochains", prev_cochains},
                               {"dim_previous_cocycles", prev_cocycles},
                               {"holds", rank_ok}};
        if (opts.reference) {
            doc["reference"] = {{"dim_cocycles", opts.reference->cocycles},
                                {"dim_coboundaries", opts.reference->coboundaries},
                                {"dim_cohomology", opts.reference->cohomology},
                                {"matches", mismatches.empty()},
                                {"mismatches", mismatches}};
        }
        ordered_json rels = ordered_json::array();
        for (const auto& r : relations)
            rels.push_back(to_string(r, alg.dim(), p));
        doc["relations"] = std::move(rels);
        ordered_json reps = ordered_json::array();
        for (const auto& r : h.representatives())
            reps.push_back({{"entries", cochain_entries(r)}});
        doc["representatives"] = std::move(reps);
        return finish(doc);
    }

    std::string out = header(alg, name);
    out += fmt::format("Cohomology in degree {}\n", p);
    out += fmt::format("dim CL^{} = {}\n", p, h.dim_cochains());
    out += fmt::format("dim ZL^{} = {}, dim BL^{} = {}, dim HL^{} = {}\n", p, h.dim_cocycles(), p,
                       h.dim_coboundaries(), p, h.dim());
    out += fmt::format("Check: dim ZL^{0} - dim BL^{0} = dim HL^{0} ({1} - {2} = {3}): {4}\n", p, h.dim_cocycles(),
                       h.dim_coboundaries(), h.dim(), euler_ok ? "OK" : "FAILED");
    out += fmt::format("Check: dim BL^{0} = dim CL^{1} - dim ZL^{1} ({2} - {3} = {4}): {5}\n", p, p - 1,
                       prev_cochains, prev_cocycles, prev_cochains - prev_cocycles, rank_ok ? "OK" : "FAILED");
    if (opts.reference) {
        out += fmt::format("Reference: dim ZL^{0} = {1}, dim BL^{0} = {2}, dim HL^{0} = {3}: ", p,
                           opts.reference->cocycles, opts.reference->coboundaries, opts.reference->cohomology);
        if (mismatches.empty()) {
            out += "match\n";
        } else {
            out += "MISMATCH (";
            for (std::size_t i = 0; i < mismatches.size(); ++i)
                out += (i > 0 ? "; " : "") + mismatches[i];
            out += ")\n";
        }
    }
    out += fmt::format("Cocycle relations ({}):\n", relations.size());
    for (const auto& r : relations)
        out += "  " + to_string(r, alg.dim(), p) + "\n";
    out += "Representatives:\n";
    for (std::size_t i = 0; i < h.representatives().size(); ++i)
        out += fmt::format("  h_{}: {}\n", i + 1, render_cochain(h.representatives()[i], alg));
    return out;
}

std::string massey_report(const LeibnizAlgebra& alg, const std::string& name,
                          const std::optional<std::vector<Cochain>>& reps, OutputFormat fmt)
{
    const CohomologySpace hl2 = reps ? cohomology_with_representatives(alg, 2, *reps) : cohomology(alg, 2);
    const CohomologySpace hl3 = cohomology(alg, 3);
    const std::size_t h = hl2.dim();

    ordered_json doc;
    std::string out = header(alg, name);
    out += fmt::format("dim HL^2 = {}, dim HL^3 = {}\n", h, hl3.dim());
    out += "HL^2 representatives:\n";
    ordered_json reps_json = ordered_json::array();
    for (std::size_t i = 0; i < h; ++i) {
        out += fmt::format("  x_{}: {}\n", i + 1, render_cochain(hl2.representatives()[i], alg));
        reps_json.push_back({{"entries", cochain_entries(hl2.representatives()[i])}});
    }

    out += "Massey 2-brackets <[x_i],[x_j]> = class of [x_i,x_j]:\n";
    ordered_json pairs = ordered_json::array();
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < h; ++j) {
            MasseyResult r = massey2(alg, hl2, hl3, unit_vector(h, i), unit_vector(h, j));
            out += fmt::format("  <[x_{}],[x_{}]>: class {}, representative {}\n", i + 1, j + 1,
                               render_class(r.hl3_class), render_cochain(r.representative, alg));
            pairs.push_back({{"classes", {i + 1, j + 1}},
                             {"class", scalar_array(r.hl3_class)},
                             {"representative", cochain_entries(r.representative)}});
        }

    out += "Massey 3-brackets <[x_i],[x_j],[x_k]> = class of [x_ij,x_k] + [x_i,x_jk] + [x_ik,x_j]:\n";
    ordered_json triples = ordered_json::array();
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < h; ++j)
            for (std::size_t k = 0; k < h; ++k) {
                ordered_json entry = {{"classes", {i + 1, j + 1, k + 1}}};
                const std::string label = fmt::format("<[x_{}],[x_{}],[x_{}]>", i + 1, j + 1, k + 1);
                try {
                    Massey3Result r =
                        massey3(alg, hl2, hl3, unit_vector(h, i), unit_vector(h, j), unit_vector(h, k));
                    bool zero_witnesses = true;
                    ordered_json wit = ordered_json::array();
                    for (const auto& [pair, w] : r.witnesses) {
                        zero_witnesses = zero_witnesses && w.is_zero();
                        wit.push_back({{"pair", {pair.first + 1, pair.second + 1}}, {"entries", cochain_entries(w)}});
                    }
                    out += fmt::format("  {}: class {}, representative {}, witnesses {}\n", label,
                                       render_class(r.hl3_class), render_cochain(r.representative, alg),
                                       zero_witnesses ? "0" : "nonzero");
                    entry["defined"] = true;
                    entry["class"] = scalar_array(r.hl3_class);
                    entry["representative"] = cochain_entries(r.representative);
                    entry["witnesses"] = std::move(wit);
                } catch (const PreconditionError&) {
                    out += fmt::format("  {}: undefined (a pairwise bracket is not exact)\n", label);
                    entry["defined"] = false;
                }
                triples.push_back(std::move(entry));
            }

    if (fmt == OutputFormat::text)
        return out;
    doc["algebra"] = name;
    doc["dim"] = alg.dim();
    doc["dim_hl2"] = h;
    doc["dim_hl3"] = hl3.dim();
    doc["representatives"] = std::move(reps_json);
    doc["massey2"] = std::move(pairs);
    doc["massey3"] = std::move(triples);
    return finish(doc);
}

std::string deformation_report(const Deformation& d, const std::string& name, const std::string& title,
                               const std::vector<std::pair<unsigned, std::vector<PolyTerms>>>& relations_by_order,
                               OutputFormat fmt)
{
    const LeibnizAlgebra& alg = d.algebra();
    const LocalBase& base = d.base();
    const std::size_t n = alg.dim();
    const bool defect_zero = defect_vanishes(d);

    struct Row {
        std::size_t i, j;
        PolyVector value;
    };
    std::vector<Row> rows;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            PolyVector v = d.basis_bracket(i, j);
            bool zero = true;
            for (const auto& p : v)
                zero = zero && p.is_zero();
            if (!zero)
                rows.push_back({i, j, std::move(v)});
        }

    std::vector<std::string> base_relations;
    for (const auto& r : base.relations())
        base_relations.push_back(to_string(r, base.generators()));

    if (fmt == OutputFormat::json) {
        ordered_json doc;
        doc["algebra"] = name;
        doc["dim"] = n;
        doc["title"] = title;
        doc["base"] = {{"generators", base.generators()},
                       {"order", base.order()},
                       {"relations", base_relations},
                       {"description", base.describe()}};
        ordered_json by_order = ordered_json::array();
        for (const auto& [order, polys] : relations_by_order) {
            std::vector<std::string> s;
            for (const auto& p : polys)
                s.push_back(to_string(p, base.generators()));
            by_order.push_back({{"order", order}, {"polynomials", s}});
        }
        doc["relations_by_order"] = std::move(by_order);
        ordered_json brackets = ordered_json::array();
        for (const auto& row : rows) {
            ordered_json terms = ordered_json::array();
            for (std::size_t k = 0; k < n; ++k)
                for (const auto& [m, c] : row.value[k].terms())
                    terms.push_back(
                        {{"monomial", to_string(m, base.generators())}, {"basis", k + 1}, {"coeff", to_string(c)}});
            brackets.push_back({{"left", row.i + 1},
                                {"right", row.j + 1},
                                {"rendered", render_poly_vector(row.value, alg)},
                                {"terms", std::move(terms)}});
        }
        doc["brackets"] = std::move(brackets);
        doc["defect_zero"] = defect_zero;
        return finish(doc);
    }

    std::string out = header(alg, name);
    out += title + "\n";
    out += "Base: " + base.describe() + "\n";
    std::string gens;
    for (std::size_t i = 0; i < base.num_generators(); ++i)
        gens += (i > 0 ? ", " : "") + base.generators()[i];
    out += "Generators: " + (gens.empty() ? std::string("none") : gens) + "\n";
    out += fmt::format("Truncation order: {}\n", base.order());
    if (base_relations.empty()) {
        out += "Relations: none\n";
    } else {
        out += "Relations:\n";
        for (const auto& [order, polys] : relations_by_order)
            for (const auto& p : polys)
                out += fmt::format("  order {}: {}\n", order, to_string(p, base.generators()));
        if (relations_by_order.empty())
            for (const auto& r : base_relations)
                out += "  " + r + "\n";
    }
    out += "Brackets:\n";
    for (const auto& row : rows)
        out += fmt::format("  [{},{}] = {}\n", alg.label(row.i), alg.label(row.j),
                           render_poly_vector(row.value, alg));
    if (rows.empty())
        out += "  all zero\n";
    out += fmt::format("Leibniz defect: {} through order {}\n", defect_zero ? "zero" : "NONZERO", base.order());
    return out;
}

} // namespace leibniz
