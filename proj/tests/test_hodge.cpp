#include <gtest/gtest.h>

#include "oracles.hpp"
#include "symcy/enumerate.hpp"
#include "symcy/hodge.hpp"

using namespace symcy;

TEST(MilnorSeries, WorkedExample) {
    WeightedType t{14, {1, 1, 2, 3, 7}};
    auto r = milnor_series(t, 42);
    EXPECT_EQ(r[0], 1);
    EXPECT_EQ(r[14], 132);
    EXPECT_EQ(r[42], 1);
    EXPECT_EQ(socle_degree(t), 42);
    EXPECT_EQ(milnor_series(t, 100).degree(), 42);
}

TEST(MilnorSeries, RejectsWeightAtLeastDegree) {
    EXPECT_THROW(milnor_series({14, {14, 1, 2, 3, 7}}, 42), InvalidTypeError);
    EXPECT_THROW(milnor_series({5, {1, 2}}, -1), ArgumentError);
}

TEST(MilnorSeries, NonPolynomialSeriesIsReported) {
    // (1 - t^2)^2 / (1 - t^4)^2
    try {
        milnor_series({6, {4, 4}}, 10);
        FAIL() << "expected an exception";
    } catch (const InvalidTypeError& e) {
        EXPECT_EQ(e.kind(), InvalidTypeError::Kind::Series);
    }
}

TEST(HodgeNumbers, Examples) {
    EXPECT_EQ(hodge_numbers_cy3({336, {7, 1, 48, 112, 168}}), (HodgeVector{1, 281, 281, 1}));
    EXPECT_EQ(hodge_numbers_cy3({14, {1, 1, 2, 3, 7}}), (HodgeVector{1, 132, 132, 1}));
    EXPECT_EQ(hodge_numbers_cy3({84, {1, 1, 12, 28, 42}}), (HodgeVector{1, 491, 491, 1}));
}

TEST(HodgeNumbers, Errors) {
    try {
        hodge_numbers_cy3({14, {2, 2, 2, 3, 7}});
        FAIL();
    } catch (const InvalidTypeError& e) {
        EXPECT_EQ(e.kind(), InvalidTypeError::Kind::CySum);
    }
    EXPECT_THROW(hodge_numbers_cy3({14, {1, 2, 3}}), InvalidTypeError);
}

TEST(Genus, Examples) {
    EXPECT_EQ(genus({14, {1, 2, 3}}), 10);
    EXPECT_EQ(genus({336, {1, 48, 112}}), 6);
    EXPECT_EQ(genus({600, {1, 24, 200}}), 24);
    EXPECT_EQ(genus({3, {1, 1, 1}}), 1); // plane cubic
    EXPECT_EQ(genus({2, {1, 1, 1}}), 0);
    EXPECT_THROW(genus({14, {1, 1, 2, 3, 7}}), InvalidTypeError);
}

TEST(Kuranishi, Examples) {
    EXPECT_EQ(kuranishi_dim({14, {1, 1, 2, 3, 7}}), 132);
    EXPECT_EQ(kuranishi_dim({22, {1, 1, 2, 7, 11}}), 214);
    EXPECT_EQ(kuranishi_dim({2, {1, 1}}), 0);
}

TEST(HodgeVector, Arithmetic) {
    HodgeVector a{1, 2, 3, 4}, b{0, 1, 1, 0};
    EXPECT_EQ(a + b, (HodgeVector{1, 3, 4, 4}));
    EXPECT_EQ(a.total(), 10);
    EXPECT_EQ(a.str(), "(1,2,3,4)");
}

namespace {

std::vector<WeightedType> enumerated_types() {
    std::vector<WeightedType> out;
    for (const auto& r : classify_fermat()) out.push_back(r.cy.weighted_type());
    for (const auto& r : search_case1()) out.push_back(r.cy.weighted_type());
    for (const auto& r : search_case2()) out.push_back(r.cy.weighted_type());
    return out;
}

} // namespace

TEST(Properties, PalindromyAndUnitEnds) {
    for (const auto& t : enumerated_types()) {
        const Int d = t.degree();
        auto r = milnor_series(t, 3 * d);
        ASSERT_EQ(r.degree(), 3 * d) << t.str();
        for (Int k = 0; k <= 3 * d; ++k) ASSERT_EQ(r[k], r[3 * d - k]) << t.str() << " k=" << k;
        auto h = hodge_numbers_cy3(t);
        EXPECT_EQ(h.h30, 1);
        EXPECT_EQ(h.h03, 1);
        EXPECT_TRUE(r.nonnegative());
    }
}

TEST(Properties, InclusionExclusionOracle) {
    for (const auto& t : enumerated_types()) {
        if (t.degree() > 60) continue;
        auto r = milnor_series(t, 3 * t.degree());
        for (Int k = 0; k <= 3 * t.degree(); ++k)
            ASSERT_EQ(r[k], oracle::jacobian_dim(t.degree(), t.weights(), k)) << t.str() << " k=" << k;
    }
}

TEST(Properties, FermatMonomialOracleUpToDegree40) {
    for (const auto& row : classify_fermat()) {
        auto t = row.cy.weighted_type();
        if (t.degree() > 40) continue;
        auto r = milnor_series(t, 3 * t.degree());
        for (Int k = 0; k <= 3 * t.degree(); ++k)
            ASSERT_EQ(r[k], oracle::fermat_monomials(t.degree(), t.weights(), k)) << t.str() << " k=" << k;
    }
}

TEST(Properties, GenusMonomialOracleUpTo100) {
    for (const auto& row : classify_fermat()) {
        auto curve = row.cy.curve_type();
        if (curve.degree() > 100) continue;
        Int alpha = amplitude(curve);
        EXPECT_EQ(genus(curve), oracle::fermat_monomials(curve.degree(), curve.weights(), alpha)) << curve.str();
    }
}
