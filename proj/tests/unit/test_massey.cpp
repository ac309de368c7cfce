#include "generators.hpp"
#include "lambda6_data.hpp"

#include "leibniz/cochain_complex.hpp"
#include "leibniz/errors.hpp"
#include "leibniz/graded_lie.hpp"
#include "leibniz/massey.hpp"

#include <gtest/gtest.h>

using namespace leibniz;

namespace {

struct Lambda6Spaces {
    LeibnizAlgebra alg = builtin_lambda6();
    CohomologySpace hl2 = cohomology_with_representatives(alg, 2, lambda6::hl2_representatives());
    CohomologySpace hl3 = cohomology(alg, 3);
};

const Lambda6Spaces& l6()
{
    static const Lambda6Spaces s;
    return s;
}

const std::vector<Vector> UNITS{{1, 0}, {0, 1}};

} // namespace

TEST(Massey, Lambda6CircleProductsVanish)
{
    const auto reps = lambda6::hl2_representatives();
    const GradedElement mu1(reps[0]), mu2(reps[1]);
    EXPECT_TRUE(circle(mu1, mu1).is_zero());
    EXPECT_TRUE(circle(mu2, mu2).is_zero());
    EXPECT_TRUE(graded_bracket(mu1, mu2).is_zero());
}

TEST(Massey, Lambda6TwoBracketsAreZero)
{
    const auto& s = l6();
    for (const auto& a : UNITS)
        for (const auto& b : UNITS) {
            const MasseyResult r = massey2(s.alg, s.hl2, s.hl3, a, b);
            EXPECT_TRUE(is_zero(r.hl3_class));
            EXPECT_TRUE(r.representative.is_zero());
        }
}

TEST(Massey, Lambda6ThreeBracketsAreZero)
{
    const auto& s = l6();
    for (const auto& a : UNITS)
        for (const auto& b : UNITS)
            for (const auto& c : UNITS) {
                const Massey3Result r = massey3(s.alg, s.hl2, s.hl3, a, b, c);
                EXPECT_TRUE(is_zero(r.hl3_class));
                EXPECT_TRUE(r.representative.is_zero());
                EXPECT_EQ(r.witnesses.size(), 3u);
            }
}

TEST(Massey, TwoBracketIsClassOfGradedBracket)
{
    // Degree-two brackets of a random 3-dim algebra against a direct computation.
    testgen::Rng rng(9);
    int checked = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const LeibnizAlgebra alg = testgen::random_leibniz_algebra(rng, 2 + trial % 2);
        const CohomologySpace hl2 = cohomology(alg, 2);
        const CohomologySpace hl3 = cohomology(alg, 3);
        if (hl2.dim() == 0)
            continue;
        Vector a(hl2.dim()), b(hl2.dim());
        for (auto& e : a)
            e = testgen::small_scalar(rng);
        for (auto& e : b)
            e = testgen::small_scalar(rng);
        const MasseyResult r = massey2(alg, hl2, hl3, a, b);
        const Cochain direct =
            graded_bracket(GradedElement(hl2.representative_of(a)), GradedElement(hl2.representative_of(b))).cochain();
        ASSERT_EQ(r.representative, direct);
        ASSERT_EQ(r.hl3_class, hl3.project_to_classes(direct));
        ++checked;
    }
    EXPECT_GE(checked, 40);
}

TEST(Massey, TwoBracketClassIgnoresCoboundaryShifts)
{
    // Replacing x by x + delta(w) changes [x,y] by an exact cochain.
    testgen::Rng rng(10);
    for (int trial = 0; trial < 100; ++trial) {
        const LeibnizAlgebra alg = testgen::random_leibniz_algebra(rng, 2 + trial % 2);
        const CohomologySpace hl2 = cohomology(alg, 2);
        if (hl2.dim() == 0)
            continue;
        const CohomologySpace hl3 = cohomology(alg, 3);
        std::vector<Cochain> shifted;
        for (const auto& rep : hl2.representatives())
            shifted.push_back(rep + coboundary(alg, testgen::random_cochain(rng, alg.dim(), 1)));
        const CohomologySpace hl2b = cohomology_with_representatives(alg, 2, shifted);
        const Vector a = unit_vector(hl2.dim(), trial % hl2.dim());
        const Vector b = unit_vector(hl2.dim(), (trial / 2) % hl2.dim());
        ASSERT_EQ(massey2(alg, hl2, hl3, a, b).hl3_class, massey2(alg, hl2b, hl3, a, b).hl3_class);
    }
}

TEST(Massey, ThreeBracketClassIgnoresCoboundaryShiftOfWitnesses)
{
    const auto& s = l6();
    testgen::Rng rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        const Vector& a = UNITS[trial % 2];
        const Vector& b = UNITS[(trial / 2) % 2];
        const Vector& c = UNITS[(trial / 4) % 2];
        const Massey3Result base = massey3(s.alg, s.hl2, s.hl3, a, b, c);
        MasseyWitnesses w = base.witnesses;
        for (auto& [key, x] : w)
            x += coboundary(s.alg, testgen::random_cochain(rng, 3, 1));
        const Massey3Result shifted = massey3(s.alg, s.hl2, s.hl3, a, b, c, w);
        ASSERT_EQ(shifted.hl3_class, base.hl3_class);
        ASSERT_TRUE(s.hl3.is_cocycle(shifted.representative));
    }
}

TEST(Massey, RejectsWrongWitness)
{
    const auto& s = l6();
    MasseyWitnesses w;
    Cochain bogus(3, 2);
    bogus.at(0, 0) = 1;
    w.emplace(std::make_pair<std::size_t, std::size_t>(0, 1), bogus);
    EXPECT_THROW(massey3(s.alg, s.hl2, s.hl3, UNITS[0], UNITS[1], UNITS[0], w), PreconditionError);
}

TEST(Massey, OneDimensionalAbelianSelfBracketIsNonzero)
{
    const LeibnizAlgebra ab(1);
    const CohomologySpace hl2 = cohomology(ab, 2);
    const CohomologySpace hl3 = cohomology(ab, 3);
    const MasseyResult r = massey2(ab, hl2, hl3, {1}, {1});
    EXPECT_FALSE(is_zero(r.hl3_class));
    // <y,y> != 0, so the triple bracket is undefined.
    EXPECT_THROW(massey3(ab, hl2, hl3, {1}, {1}, {1}), PreconditionError);
}
