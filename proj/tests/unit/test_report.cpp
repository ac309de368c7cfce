#include "generators.hpp"
#include "lambda6_data.hpp"

#include "leibniz/io.hpp"
#include "leibniz/report.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

using namespace leibniz;
using nlohmann::ordered_json;

namespace {

bool contains(const std::string& haystack, const std::string& needle)
{
    return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST(Render, VectorsAndCochains)
{
    const LeibnizAlgebra l6 = builtin_lambda6();
    EXPECT_EQ(render_vector({-1, 0, Scalar(1, 2)}, l6), "-e_1 + 1/2*e_3");
    EXPECT_EQ(render_vector({0, 0, 0}, l6), "0");
    EXPECT_EQ(render_cochain(lambda6::hl2_representatives()[0], l6), "(e_2,e_3) -> -e_1");
    EXPECT_EQ(render_cochain(Cochain(3, 2), l6), "0");
}

TEST(Report, CheckText)
{
    EXPECT_TRUE(contains(check_report(builtin_lambda6(), "lambda6", OutputFormat::text), "Leibniz identity: OK (0 violations)"));
    const std::string bad = check_report(testgen::non_leibniz_line(), "bad", OutputFormat::text);
    EXPECT_TRUE(contains(bad, "FAILED"));
}

TEST(Report, CohomologyDegreeTwoMatchesReference)
{
    CohomologyReportOptions opts;
    opts.degree = 2;
    opts.reference = lambda6_reference_dims(2);
    const std::string text = cohomology_report(builtin_lambda6(), "lambda6", opts, OutputFormat::text);
    EXPECT_TRUE(contains(text, "dim ZL^2 = 8, dim BL^2 = 6, dim HL^2 = 2"));
    EXPECT_TRUE(contains(text, ": match"));
    EXPECT_FALSE(contains(text, "MISMATCH"));
}

TEST(Report, CohomologyDegreeThreeFlagsReferenceDisagreement)
{
    CohomologyReportOptions opts;
    opts.degree = 3;
    opts.reference = lambda6_reference_dims(3);
    const std::string text = cohomology_report(builtin_lambda6(), "lambda6", opts, OutputFormat::text);
    EXPECT_TRUE(contains(text, "dim ZL^3 = 21, dim BL^3 = 19, dim HL^3 = 2"));
    EXPECT_TRUE(contains(text, "MISMATCH (dim ZL^3 computed 21, reference 20; dim BL^3 computed 19, reference 18)"));

    const auto doc = ordered_json::parse(cohomology_report(builtin_lambda6(), "lambda6", opts, OutputFormat::json));
    EXPECT_FALSE(doc["reference"]["matches"].get<bool>());
    EXPECT_EQ(doc["reference"]["mismatches"].size(), 2u);
    EXPECT_TRUE(doc["consistent"].get<bool>());
    EXPECT_TRUE(doc["rank_nullity"]["holds"].get<bool>());
}

TEST(Report, JsonIsStableUnderReparse)
{
    testgen::Rng rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        const LeibnizAlgebra alg = testgen::random_leibniz_algebra(rng, 2 + trial % 2);
        CohomologyReportOptions opts;
        opts.degree = 1 + trial % 2;
        const std::string text = cohomology_report(alg, "random", opts, OutputFormat::json);
        ASSERT_EQ(ordered_json::parse(text).dump(2) + "\n", text);
    }
    const VersalResult v = versal_construct(builtin_lambda6(), 3, lambda6::hl2_representatives());
    const std::string text = deformation_report(v.deformation, "lambda6", "Versal", v.relations_by_order, OutputFormat::json);
    EXPECT_EQ(ordered_json::parse(text).dump(2) + "\n", text);
}

TEST(Report, CohomologyJsonFeedsBackAsRepresentatives)
{
    testgen::Rng rng(32);
    for (int trial = 0; trial < 20; ++trial) {
        const LeibnizAlgebra alg = testgen::random_leibniz_algebra(rng, 2 + trial % 2);
        CohomologyReportOptions opts;
        const std::string text = cohomology_report(alg, "random", opts, OutputFormat::json);
        const auto reps = parse_representatives_json(text, alg.dim(), 2);
        ASSERT_EQ(reps, cohomology(alg, 2).representatives());
    }
}

TEST(Report, VersalText)
{
    const VersalResult v = versal_construct(builtin_lambda6(), 3, lambda6::hl2_representatives());
    const std::string text = deformation_report(v.deformation, "lambda6", "Versal deformation", v.relations_by_order,
                                                OutputFormat::text);
    EXPECT_TRUE(contains(text, "Base: K[t,s] / (m^4)"));
    EXPECT_TRUE(contains(text, "[e_1,e_3] = e_2 + s*e_1"));
    EXPECT_TRUE(contains(text, "[e_2,e_3] = -t*e_1"));
    EXPECT_TRUE(contains(text, "[e_3,e_3] = e_1"));
    EXPECT_TRUE(contains(text, "Relations: none"));
    EXPECT_TRUE(contains(text, "Leibniz defect: zero through order 3"));
}

TEST(Report, MasseyText)
{
    const std::string text = massey_report(builtin_lambda6(), "lambda6", lambda6::hl2_representatives(), OutputFormat::text);
    EXPECT_TRUE(contains(text, "<[x_1],[x_2]>: class 0, representative 0"));
    EXPECT_TRUE(contains(text, "<[x_2],[x_2],[x_1]>: class 0, representative 0"));
}
