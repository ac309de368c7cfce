#include "leibniz/deformation.hpp"
#include "leibniz/errors.hpp"
#include "leibniz/io.hpp"
#include "leibniz/report.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace leibniz;

namespace {

struct RunConfig {
    std::string algebra_path;
    std::size_t degree = 2;
    unsigned max_order = 3;
    std::string reps_path;
    std::string output = "text";
    std::vector<std::string> maps;
};

bool is_builtin_lambda6(const LeibnizAlgebra& alg)
{
    return alg == builtin_lambda6();
}

std::optional<std::vector<Cochain>> load_reps(const RunConfig& cfg, const LeibnizAlgebra& alg, std::size_t degree)
{
    if (cfg.reps_path.empty())
        return std::nullopt;
    if (cfg.reps_path == "paper" || cfg.reps_path == "reference") {
        if (!is_builtin_lambda6(alg) || degree != 2)
            throw PreconditionError("--reps " + cfg.reps_path + " is only available for lambda6 in degree 2");
        return lambda6_reference_representatives();
    }
    try {
        return parse_representatives_json(read_file(cfg.reps_path), alg.dim(), degree);
    } catch (const ParseError& e) {
        throw ParseError(cfg.reps_path + ": " + e.what(), e.line(), e.column());
    }
}

void require_leibniz(const LeibnizAlgebra& alg)
{
    const auto v = validate(alg);
    if (!v.empty())
        throw PreconditionError(fmt::format("algebra violates the Leibniz identity on {} basis triples", v.size()));
}

BaseMap parse_map(const std::vector<std::string>& entries, const LocalBase& base)
{
    std::vector<TruncatedPolynomial> images;
    for (std::size_t i = 0; i < base.num_generators(); ++i)
        images.push_back(TruncatedPolynomial::generator(base, i));
    for (const auto& entry : entries) {
        const auto eq = entry.find('=');
        if (eq == std::string::npos)
            throw ParseError("--map " + entry + ": expected generator=polynomial");
        const std::string gen = entry.substr(0, eq);
        std::size_t g = base.num_generators();
        for (std::size_t i = 0; i < base.num_generators(); ++i)
            if (base.generators()[i] == gen)
                g = i;
        if (g == base.num_generators())
            throw ParseError("--map " + entry + ": unknown generator \"" + gen + "\"");
        try {
            images[g] = TruncatedPolynomial(base, parse_polynomial(entry.substr(eq + 1), base.generators()));
        } catch (const ParseError& e) {
            throw ParseError("--map " + entry + ": " + e.what(), e.line(), e.column() + eq + 1);
        }
    }
    return BaseMap(base, base, std::move(images));
}

int run(const std::string& command, const RunConfig& cfg)
{
    const LeibnizAlgebra alg = load_algebra(cfg.algebra_path);
    const OutputFormat fmt = cfg.output == "json" ? OutputFormat::json : OutputFormat::text;
    const std::string& name = cfg.algebra_path;

    if (command == "check") {
        std::cout << check_report(alg, name, fmt);
        return 0;
    }
    require_leibniz(alg);

    if (command == "cohomology") {
        CohomologyReportOptions opts;
        opts.degree = cfg.degree;
        opts.representatives = load_reps(cfg, alg, cfg.degree);
        if (is_builtin_lambda6(alg))
            opts.reference = lambda6_reference_dims(cfg.degree);
        std::cout << cohomology_report(alg, name, opts, fmt);
        return 0;
    }
    if (command == "massey") {
        std::cout << massey_report(alg, name, load_reps(cfg, alg, 2), fmt);
        return 0;
    }

    const auto reps = load_reps(cfg, alg, 2);
    if (command == "infinitesimal") {
        const CohomologySpace hl2 = reps ? cohomology_with_representatives(alg, 2, *reps) : cohomology(alg, 2);
        const Deformation d = universal_infinitesimal(alg, hl2.representatives());
        std::cout << deformation_report(d, name, "Universal infinitesimal deformation", {}, fmt);
        return 0;
    }
    if (command == "versal") {
        const VersalResult v = versal_construct(alg, cfg.max_order, reps);
        std::cout << deformation_report(v.deformation, name, "Versal deformation", v.relations_by_order, fmt);
        return 0;
    }
    if (command == "pushforward") {
        const VersalResult v = versal_construct(alg, cfg.max_order, reps);
        const BaseMap phi = parse_map(cfg.maps, v.deformation.base());
        std::string title = "Push-forward of the versal deformation along";
        for (std::size_t i = 0; i < cfg.maps.size(); ++i)
            title += (i > 0 ? ", " : " ") + cfg.maps[i];
        std::cout << deformation_report(push_forward(v.deformation, phi), name, title, v.relations_by_order, fmt);
        return 0;
    }
    throw PreconditionError("unknown command " + command);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Leibniz algebra cohomology and deformation toolkit (exact rational arithmetic)"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&cfg](CLI::App* sub) {
        sub->add_option("algebra", cfg.algebra_path, "Algebra JSON file or builtin name \"lambda6\"")->required();
        sub->add_option("--output", cfg.output, "Report format")->check(CLI::IsMember({"text", "json"}));
    };
    auto add_reps = [&cfg](CLI::App* sub) {
        sub->add_option("--reps", cfg.reps_path,
                        "HL^2 representatives: \"paper\" or \"reference\" for the built-in lambda6 choice, or a JSON file");
    };

    CLI::App* check = app.add_subcommand("check", "Verify the Leibniz identity on all basis triples");
    add_common(check);

    CLI::App* coh = app.add_subcommand("cohomology", "Cocycles, coboundaries and HL^p with relations");
    add_common(coh);
    add_reps(coh);
    coh->add_option("--degree", cfg.degree, "Cohomological degree p >= 1")->check(CLI::PositiveNumber);

    CLI::App* massey = app.add_subcommand("massey", "Massey 2- and 3-brackets on the HL^2 basis");
    add_common(massey);
    add_reps(massey);

    CLI::App* inf = app.add_subcommand("infinitesimal", "Universal infinitesimal deformation");
    add_common(inf);
    add_reps(inf);

    CLI::App* versal = app.add_subcommand("versal", "Versal deformation up to a truncation order");
    add_common(versal);
    add_reps(versal);
    versal->add_option("--max-order", cfg.max_order, "Truncation order")->check(CLI::PositiveNumber);

    CLI::App* push = app.add_subcommand("pushforward", "Push the versal deformation along a base map");
    add_common(push);
    add_reps(push);
    push->add_option("--max-order", cfg.max_order, "Truncation order")->check(CLI::PositiveNumber);
    push->add_option("--map", cfg.maps, "Generator substitution, e.g. s=0 or t=t+s^2")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        return run(app.get_subcommands().front()->get_name(), cfg);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
