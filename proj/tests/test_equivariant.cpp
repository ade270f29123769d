#include <gtest/gtest.h>

#include "oracles.hpp"
#include "symcy/enumerate.hpp"
#include "symcy/equivariant.hpp"

using namespace symcy;

namespace {

std::map<Int, Int> multiplicities(const IsotypicalDecomposition& dec) {
    std::map<Int, Int> out;
    for (const auto& [d, c] : dec.components)
        if (c.multiplicity) out[d] = c.multiplicity;
    return out;
}

std::vector<SymmetricCYType> all_types() {
    std::vector<SymmetricCYType> out;
    for (const auto& r : classify_fermat()) out.push_back(r.cy);
    for (const auto& r : search_case1()) out.push_back(r.cy);
    for (const auto& r : search_case2()) out.push_back(r.cy);
    return out;
}

} // namespace

TEST(EigenspaceTable, WorkedExample) {
    auto table = eigenspace_table(make_symmetric_cy(1, 2, 3, 7));
    ASSERT_EQ(table.m, 14);
    EXPECT_EQ(table.row(7), (HodgeVector{0, 10, 10, 0}));
    EXPECT_EQ(table.row(0), HodgeVector{});
    EXPECT_EQ(table.row(1).h30, 1);
    EXPECT_EQ(table.row(13).h03, 1);
    EXPECT_EQ(table.total(), (HodgeVector{1, 132, 132, 1}));
}

TEST(EigenspaceTable, ConjugationSymmetry) {
    auto table = eigenspace_table(make_symmetric_cy(7, 48, 112, 168));
    for (Int e = 0; e < table.m; ++e) {
        EXPECT_EQ(table.row(e).h21, table.row(table.m - e).h12);
        EXPECT_EQ(table.row(e).h30, table.row(table.m - e).h03);
    }
}

TEST(IsotypicalDecomposition, WorkedExample) {
    auto dec = isotypical_decomposition(make_symmetric_cy(1, 2, 3, 7));
    EXPECT_EQ(dec.at(14).hodge, (HodgeVector{1, 62, 62, 1}));
    EXPECT_EQ(dec.at(7).hodge, (HodgeVector{0, 60, 60, 0}));
    EXPECT_EQ(dec.at(2).hodge, (HodgeVector{0, 10, 10, 0}));
    EXPECT_EQ(dec.at(1).hodge, HodgeVector{});
    EXPECT_EQ(dec.at(14).multiplicity, 21);
    EXPECT_EQ(dec.at(7).multiplicity, 20);
    EXPECT_EQ(dec.at(2).multiplicity, 20);
    EXPECT_EQ(dec.at(1).multiplicity, 0);
}

TEST(IsotypicalDecomposition, UniformMultiplicity) {
    auto dec = isotypical_decomposition(make_symmetric_cy(7, 48, 112, 168));
    for (Int d : divisors(48)) EXPECT_EQ(dec.at(d).multiplicity, d == 1 ? 0 : 12) << d;
    EXPECT_EQ(rep_string(dec), "12.(48,24,16,12,8,6,4,3,2)");
}

TEST(IsotypicalDecomposition, EightyFour) {
    auto dec = isotypical_decomposition(make_symmetric_cy(1, 12, 28, 42));
    std::map<Int, Int> expect{{84, 12}, {28, 12}, {21, 12}, {14, 12}, {12, 12}, {7, 12},
                              {6, 12},  {4, 12},  {3, 12},  {2, 12},  {42, 11}};
    EXPECT_EQ(multiplicities(dec), expect);
    EXPECT_EQ(dec.total_dimension(), 2 + 2 * 491);
}

TEST(IsotypicalDecomposition, RejectsNonIntegralMultiplicity) {
    EigenspaceTable bad{4, std::vector<HodgeVector>(4)};
    bad.rows[1] = {1, 0, 0, 0};
    EXPECT_THROW(isotypical_decomposition(bad), ArithmeticError);
}

TEST(QuotientHodge, Examples) {
    auto t = make_symmetric_cy(1, 2, 3, 7);
    EXPECT_EQ(quotient_hodge(t, 2), (HodgeVector{0, 10, 10, 0}));
    EXPECT_EQ(quotient_hodge(t, 7), (HodgeVector{0, 60, 60, 0}));
    EXPECT_EQ(quotient_hodge(t, 1), HodgeVector{});
    EXPECT_THROW(quotient_hodge(t, 14), ArgumentError);
    EXPECT_THROW(quotient_hodge(t, 4), ArgumentError);
}

TEST(RepString, Examples) {
    EXPECT_EQ(rep_string(isotypical_decomposition(make_symmetric_cy(3, 24, 56, 84))), "12.(56,28,14,8,7,4,2)");
    EXPECT_EQ(rep_string(isotypical_decomposition(make_symmetric_cy(1, 1, 1, 4))), "43.(8,4)+42.(2)");
    EXPECT_EQ(rep_string(isotypical_decomposition(make_symmetric_cy(1, 2, 3, 7))), "21.(14)+20.(7,2)");
    EXPECT_EQ(rep_string(IsotypicalDecomposition{6, {{1, {}}, {2, {}}, {3, {}}, {6, {}}}}), "");
}

// The group holding m leads even when a later group has a larger multiplicity.
TEST(RepString, GroupWithOrderLeads) {
    IsotypicalDecomposition dec{12, {}};
    for (Int d : divisors(12)) dec.components[d] = {0, {}};
    dec.components[12].multiplicity = 3;
    dec.components[6].multiplicity = 5;
    dec.components[2].multiplicity = 5;
    dec.components[4].multiplicity = 1;
    EXPECT_EQ(rep_string(dec), "3.(12)+5.(6,2)+1.(4)");
}

TEST(RepString, ParseRoundTrip) {
    auto dec = isotypical_decomposition(make_symmetric_cy(1, 12, 28, 42));
    auto parsed = parse_rep_string(rep_string(dec));
    EXPECT_EQ(parsed, multiplicities(dec));
    EXPECT_THROW(parse_rep_string("12.(4,"), ArgumentError);
    EXPECT_THROW(parse_rep_string("12(4)"), ArgumentError);
    EXPECT_THROW(parse_rep_string("1.(4)+2.(4)"), ArgumentError);
    EXPECT_THROW(parse_rep_string("1.(4)+"), ArgumentError);
    EXPECT_TRUE(parse_rep_string("").empty());
}

TEST(CrossCheckH12, Examples) {
    EXPECT_TRUE(cross_check_h12(make_symmetric_cy(1, 2, 3, 7)));
    EXPECT_TRUE(cross_check_h12(make_symmetric_cy(7, 48, 112, 168)));
    EXPECT_TRUE(cross_check_h12(make_symmetric_cy(1, 4, 6, 12)));
}

TEST(Properties, FermatEigenspacesMatchMonomialBasis) {
    for (const auto& row : classify_fermat()) {
        const auto& t = row.cy;
        if (t.degree() > 200) continue;
        auto table = eigenspace_table(t);
        auto brute = oracle::fermat_eigen_h21(t.A(), t.a(), t.b(), t.c());
        for (Int e = 0; e < t.order(); ++e)
            ASSERT_EQ(table.row(e).h21, brute[static_cast<std::size_t>(e)]) << t.str() << " e=" << e;
    }
}

TEST(Properties, DecompositionInvariantsOnAllEnumeratedTypes) {
    for (const auto& t : all_types()) {
        auto table = eigenspace_table(t);
        auto dec = isotypical_decomposition(table);
        auto h = hodge_numbers_cy3(t.weighted_type());
        ASSERT_EQ(table.row(0), HodgeVector{}) << t.str();
        ASSERT_EQ(table.total(), h) << t.str();
        ASSERT_EQ(dec.total_dimension(), 2 + 2 * h.h21) << t.str();
        ASSERT_EQ(dec.at(1).multiplicity, 0) << t.str();
        for (const auto& [d, comp] : dec.components) {
            ASSERT_EQ(comp.hodge.total(), comp.multiplicity * oracle::phi(d));
            ASSERT_EQ(comp.hodge.h21, comp.hodge.h12) << t.str() << " d=" << d;
            ASSERT_EQ(comp.hodge.h30 != 0, d == t.order()) << t.str() << " d=" << d;
        }
        ASSERT_TRUE(cross_check_h12(t)) << t.str();
        ASSERT_EQ(quotient_hodge(dec, 2), (HodgeVector{0, genus(t.curve_type()), genus(t.curve_type()), 0}))
            << t.str();
    }
}

// m = p prime: only the divisors 1 and p exist, and all nontrivial
// eigenspaces fall into the single Galois orbit of size p - 1.
TEST(Properties, PrimeOrderHasTwoComponents) {
    EigenspaceTable table{7, std::vector<HodgeVector>(7)};
    for (Int e = 1; e < 7; ++e) table.rows[static_cast<std::size_t>(e)] = {0, 2, 2, 0};
    auto dec = isotypical_decomposition(table);
    ASSERT_EQ(dec.components.size(), 2u);
    EXPECT_EQ(dec.at(1).multiplicity, 0);
    EXPECT_EQ(dec.at(7).multiplicity, 4);
    EXPECT_EQ(dec.at(7).hodge, (HodgeVector{0, 12, 12, 0}));
}
