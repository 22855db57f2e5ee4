#include <gtest/gtest.h>

#include <set>

#include "hess/errors.hpp"
#include "hess/ideal.hpp"
#include "hess/weyl_type.hpp"
#include "oracles.hpp"

using namespace hess;

namespace {

std::vector<int> size_distribution(const std::vector<RootSet>& sets) {
    std::vector<int> d;
    for (const auto& s : sets) {
        if (d.size() <= s.count()) d.resize(s.count() + 1, 0);
        ++d[s.count()];
    }
    return d;
}

std::vector<std::pair<char, int>> rank_le_3() { return {{'A', 1}, {'A', 2}, {'A', 3}, {'B', 2}, {'B', 3}, {'C', 3}, {'G', 2}}; }

}  // namespace

TEST(WeylType, Definition) {
    const RootSystem rs = RootSystem::build('A', 2);
    const RootSet all = rs.all_positive();
    EXPECT_TRUE(is_weyl_type(rs, rs.empty_set(), all));
    EXPECT_TRUE(is_weyl_type(rs, all, all));
    EXPECT_FALSE(is_weyl_type(rs, RootSet(3, {rs.simple_index(0), rs.simple_index(1)}), all));
    try {
        is_weyl_type(rs, all, RootSet(3, {0}));
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotSubset);
    }
}

TEST(WeylType, A2FullFlag) {
    const RootSystem rs = RootSystem::build('A', 2);
    const auto subsets = enumerate_weyl_type_theta(rs, rs.all_positive(), ThetaSet{});
    EXPECT_EQ(subsets.size(), 6u);
    EXPECT_EQ(size_distribution(subsets), (std::vector<int>{1, 2, 2, 1}));
}

TEST(WeylType, PhiThetaAloneGivesOnlyEmptySet) {
    const RootSystem rs = RootSystem::build('B', 3);
    for (const ThetaSet& theta : oracle::all_thetas(3)) {
        const auto subsets = enumerate_weyl_type_theta(rs, rs.phi_theta_plus(theta), theta);
        ASSERT_EQ(subsets.size(), 1u);
        EXPECT_TRUE(subsets[0].empty());
    }
}

TEST(WeylType, A9Example) {
    const RootSystem rs = RootSystem::build('A', 9);
    const HessenbergIdeal hi = ideal_from_partial_hessenberg(rs, {10, {2, 4, 5, 8}, {4, 5, 5, 8, 10}});
    const auto brute = weyl_type_subsets_brute_force(rs, hi.ideal, hi.theta);
    EXPECT_EQ(size_distribution(brute), (std::vector<int>{1, 2, 4, 4, 4, 2, 1}));
    CellEnumerator cells(rs);
    const auto bij = weyl_type_subsets_by_bijection(cells, hi.ideal, hi.theta);
    EXPECT_EQ(bij.size(), 18u);
    EXPECT_EQ(std::set<RootSet>(bij.begin(), bij.end()).size(), 18u);
    EXPECT_EQ(bij, brute);
}

// Brute force over all subsets of I, with the Theta filter applied afterwards,
// matches the library enumeration along both paths.
TEST(WeylType, MatchesOracleAndFilter) {
    for (auto [f, n] : oracle::small_types()) {
        const RootSystem rs = RootSystem::build(f, n);
        CellEnumerator cells(rs);
        for (const ThetaSet& theta : oracle::all_thetas(n))
            for (const auto& I : enumerate_theta_ideals(rs, theta)) {
                auto expected = oracle::weyl_type_subsets(rs, I, theta);
                sort_by_size_then_bits(expected);
                ASSERT_EQ(enumerate_weyl_type_theta(rs, I, theta), expected);
                ASSERT_EQ(weyl_type_subsets_by_bijection(cells, I, theta), expected);
                Limits no_brute;
                no_brute.brute_force_max = -1;
                ASSERT_EQ(enumerate_weyl_type_theta(cells, I, theta, no_brute), expected);
            }
    }
}

// eta_Theta is injective on the admissible cells with image W^{I,Theta}.
TEST(WeylType, EtaIsBijection) {
    for (auto [f, n] : rank_le_3()) {
        const RootSystem rs = RootSystem::build(f, n);
        for (const ThetaSet& theta : oracle::all_thetas(n)) {
            const auto quotient = enumerate_quotient(rs, theta);
            for (const auto& I : enumerate_theta_ideals(rs, theta)) {
                std::set<RootSet> image;
                std::size_t domain = 0;
                for (const auto& w : quotient) {
                    if (!cell_condition(rs, w, I)) {
                        EXPECT_THROW(eta_theta(rs, w, I, theta), Error);
                        continue;
                    }
                    ++domain;
                    image.insert(eta_theta(rs, w, I, theta));
                }
                EXPECT_EQ(image.size(), domain);
                const auto target = oracle::weyl_type_subsets(rs, I, theta);
                EXPECT_EQ(image, std::set<RootSet>(target.begin(), target.end()));
            }
        }
    }
}

TEST(WeylType, EtaDomain) {
    const RootSystem rs = RootSystem::build('A', 2);
    const ThetaSet t1 = ThetaSet::from_indices({0});
    EXPECT_TRUE(eta_theta(rs, identity_element(rs), rs.all_positive(), t1).empty());
    try {
        eta_theta(rs, simple_reflection(rs, 0), rs.all_positive(), t1);
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::DomainViolation);
    }
}

TEST(WeylType, InversionSetsCutByIdealsAreWeylType) {
    for (auto [f, n] : rank_le_3()) {
        const RootSystem rs = RootSystem::build(f, n);
        const auto g = enumerate_weyl_group(rs).elements;
        for (const auto& I : enumerate_lower_ideals(rs))
            for (const auto& w : g) ASSERT_TRUE(is_weyl_type(rs, w.inversions & I, I));
    }
}

TEST(WeylType, BruteForceCap) {
    const RootSystem rs = RootSystem::build('A', 6);
    EXPECT_THROW(weyl_type_subsets_brute_force(rs, rs.all_positive(), ThetaSet{}, 20), CapExceeded);
    // Past the cutoff the bijection path takes over.
    EXPECT_EQ(enumerate_weyl_type_theta(rs, rs.all_positive(), ThetaSet{}).size(), 5040u);
}
