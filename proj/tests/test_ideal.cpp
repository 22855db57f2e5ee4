#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "hess/errors.hpp"
#include "hess/ideal.hpp"
#include "oracles.hpp"

using namespace hess;

namespace {

RootSet a9_example_ideal(const RootSystem& rs) {
    RootSet s = rs.empty_set();
    for (auto [i, j] : std::vector<std::pair<int, int>>{{1, 2}, {3, 4}, {6, 7}, {6, 8}, {7, 8}, {9, 10}, {1, 3},
                                                       {1, 4}, {2, 3}, {2, 4}, {3, 5}, {4, 5}})
        s.insert(type_a_root_index(rs, i, j));
    return s;
}

const ThetaSet kA9Theta = ThetaSet::from_indices({0, 2, 5, 6, 8});

}  // namespace

TEST(Ideal, A9ExampleIsThetaIdeal) {
    const RootSystem rs = RootSystem::build('A', 9);
    const RootSet I = a9_example_ideal(rs);
    EXPECT_TRUE(is_theta_ideal(rs, I, kA9Theta));
    EXPECT_TRUE(is_lower_ideal(rs, I));
    EXPECT_TRUE(oracle::theta_ideal(rs, I, kA9Theta));
}

TEST(Ideal, SmallCases) {
    const RootSystem rs = RootSystem::build('A', 2);
    const int a1 = rs.simple_index(0), a2 = rs.simple_index(1), top = 2;
    EXPECT_TRUE(is_theta_ideal(rs, rs.empty_set(), ThetaSet{}));
    EXPECT_FALSE(is_theta_ideal(rs, RootSet(3, {a1, top}), ThetaSet{}));
    EXPECT_FALSE(is_theta_ideal(rs, RootSet(3, {a1, a2}), ThetaSet::from_indices({0})));
    EXPECT_FALSE(is_theta_ideal(rs, rs.empty_set(), ThetaSet::from_indices({0})));
}

TEST(Ideal, EnumerationCounts) {
    const RootSystem a2 = RootSystem::build('A', 2);
    EXPECT_EQ(enumerate_lower_ideals(a2).size(), 5u);
    const auto t = enumerate_theta_ideals(a2, ThetaSet::from_indices({0}));
    ASSERT_EQ(t.size(), 2u);
    EXPECT_EQ(t[0], RootSet(3, {a2.simple_index(0)}));
    EXPECT_EQ(t[1], a2.all_positive());
    EXPECT_EQ(enumerate_lower_ideals(RootSystem::build('A', 3)).size(), 14u);
    EXPECT_EQ(enumerate_lower_ideals(RootSystem::build('A', 4)).size(), 42u);
}

TEST(Ideal, EnumerationMatchesBruteForce) {
    for (auto [f, n] : oracle::small_types()) {
        const RootSystem rs = RootSystem::build(f, n);
        for (const ThetaSet& theta : oracle::all_thetas(n)) {
            const auto fast = enumerate_theta_ideals(rs, theta);
            const auto slow = oracle::theta_ideals(rs, theta);
            EXPECT_EQ(fast, slow) << f << n << " theta " << theta.mask();
            for (const auto& s : fast) EXPECT_TRUE(is_theta_ideal(rs, s, theta));
        }
    }
}

TEST(Ideal, ThetaIdealEqualsCharacterization) {
    const RootSystem rs = RootSystem::build('B', 3);
    for (const ThetaSet& theta : oracle::all_thetas(3))
        for (std::uint64_t m = 0; m < (1u << rs.num_positive()); ++m) {
            RootSet s = rs.empty_set();
            for (int k = 0; k < rs.num_positive(); ++k)
                if ((m >> k) & 1u) s.insert(k);
            ASSERT_EQ(is_theta_ideal(rs, s, theta), oracle::theta_ideal(rs, s, theta));
        }
}

TEST(Ideal, EnumerationCap) {
    const RootSystem rs = RootSystem::build('A', 4);
    EXPECT_THROW(enumerate_lower_ideals(rs, 5), CapExceeded);
}

TEST(Ideal, PartialHessenbergExample) {
    const RootSystem rs = RootSystem::build('A', 9);
    const PartialHessenbergFunction f{10, {2, 4, 5, 8}, {4, 5, 5, 8, 10}};
    EXPECT_NO_THROW(f.validate());
    EXPECT_EQ(f.extended(), (std::vector<int>{4, 4, 5, 5, 5, 8, 8, 8, 10, 10}));
    EXPECT_EQ(f.theta(), kA9Theta);
    const HessenbergIdeal hi = ideal_from_partial_hessenberg(rs, f);
    EXPECT_EQ(hi.theta, kA9Theta);
    EXPECT_EQ(hi.ideal.count(), 12u);
    EXPECT_EQ(hi.ideal, a9_example_ideal(rs));
}

TEST(Ideal, PartialHessenbergValidation) {
    auto kind_of = [](const PartialHessenbergFunction& f) {
        try {
            f.validate();
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::InvalidArgs;
    };
    EXPECT_EQ(kind_of({4, {2}, {1, 4}}), ErrorKind::InvalidHessenbergFunction);     // h(2) < 2
    EXPECT_EQ(kind_of({4, {1, 2}, {2, 1, 4}}), ErrorKind::InvalidHessenbergFunction);  // decreasing
    EXPECT_EQ(kind_of({4, {2}, {3, 4}}), ErrorKind::InvalidHessenbergFunction);     // 3 not in K u {n}
    EXPECT_EQ(kind_of({4, {2}, {4, 3}}), ErrorKind::InvalidHessenbergFunction);     // h(n) != n
    EXPECT_EQ(kind_of({4, {2, 2}, {2, 2, 4}}), ErrorKind::InvalidHessenbergFunction);
    EXPECT_EQ(kind_of({4, {4}, {4, 4}}), ErrorKind::InvalidHessenbergFunction);
}

TEST(Ideal, HessenbergIdealsAreThetaIdeals) {
    for (int n = 2; n <= 6; ++n) {
        const RootSystem rs = RootSystem::build('A', n - 1);
        for (const auto& f : all_partial_hessenberg_functions(n)) {
            const HessenbergIdeal hi = ideal_from_partial_hessenberg(rs, f);
            EXPECT_TRUE(is_theta_ideal(rs, hi.ideal, hi.theta));
            // x_i - x_j with i < j <= h~(i)
            const auto h = f.extended();
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    EXPECT_EQ(hi.ideal.contains(type_a_root_index(rs, i, j)), j <= h[static_cast<std::size_t>(i - 1)]);
        }
    }
}

TEST(Ideal, HessenbergCorrespondenceIsBijective) {
    // Every Theta-ideal of A_{n-1} arises from exactly one (K, h).
    for (int n = 2; n <= 5; ++n) {
        const RootSystem rs = RootSystem::build('A', n - 1);
        std::map<std::uint64_t, std::set<RootSet>> by_theta;
        std::size_t total = 0;
        for (const auto& f : all_partial_hessenberg_functions(n)) {
            const HessenbergIdeal hi = ideal_from_partial_hessenberg(rs, f);
            EXPECT_TRUE(by_theta[hi.theta.mask()].insert(hi.ideal).second);
            ++total;
        }
        std::size_t ideals = 0;
        for (const ThetaSet& theta : oracle::all_thetas(n - 1)) {
            const auto all = enumerate_theta_ideals(rs, theta);
            ideals += all.size();
            EXPECT_EQ(std::set<RootSet>(all.begin(), all.end()), by_theta[theta.mask()]);
        }
        EXPECT_EQ(total, ideals);
    }
}

// s_beta(alpha) lies in I for alpha in I and simple beta in Theta, alpha != beta.
TEST(Ideal, ReflectionClosure) {
    for (auto [f, n] : std::vector<std::pair<char, int>>{{'A', 4}, {'B', 4}, {'C', 4}, {'D', 4}, {'F', 4}, {'G', 2}}) {
        const RootSystem rs = RootSystem::build(f, n);
        for (const ThetaSet& theta : oracle::all_thetas(n))
            for (const auto& I : enumerate_theta_ideals(rs, theta))
                for (int i : theta.indices())
                    I.for_each([&](int a) {
                        if (a == rs.simple_index(i)) return;
                        const int b = rs.reflect_index(i, a);
                        ASSERT_GE(b, 0);
                        ASSERT_TRUE(I.contains(b));
                    });
    }
}

// Downward closure under the root order equals the one-step condition
// alpha - beta in Phi+ => alpha - beta in I; upward Theta-closure equals
// the one-step condition with beta in Phi+_Theta.
TEST(Ideal, StepConditionsEquivalent) {
    for (auto [f, n] : std::vector<std::pair<char, int>>{{'A', 3}, {'B', 3}, {'C', 3}, {'G', 2}}) {
        const RootSystem rs = RootSystem::build(f, n);
        const int N = rs.num_positive();
        for (const ThetaSet& theta : oracle::all_thetas(n)) {
            const RootSet pt = rs.phi_theta_plus(theta);
            for (std::uint64_t m = 0; m < (std::uint64_t{1} << N); ++m) {
                RootSet s = rs.empty_set();
                for (int k = 0; k < N; ++k)
                    if ((m >> k) & 1u) s.insert(k);
                bool down = true, up = true;
                for (int a : s.indices())
                    for (int b = 0; b < N; ++b) {
                        const auto d = oracle::diff(rs.root(a).coeffs, rs.root(b).coeffs);
                        if (auto k = rs.index_of(d); k && !s.contains(*k)) down = false;
                        const int c = rs.sum_index(a, b);
                        if (pt.contains(b) && c >= 0 && !s.contains(c)) up = false;
                    }
                ASSERT_EQ(down, is_lower_ideal(rs, s));
                ASSERT_EQ(down && up && pt.is_subset_of(s), is_theta_ideal(rs, s, theta));
            }
        }
    }
}

TEST(Ideal, HeightDistributionNonincreasing) {
    for (auto [f, n] : std::vector<std::pair<char, int>>{{'A', 5}, {'B', 5}, {'C', 5}, {'D', 5}, {'F', 4}, {'G', 2}}) {
        const RootSystem rs = RootSystem::build(f, n);
        for (const auto& I : enumerate_lower_ideals(rs)) {
            std::vector<int> lambda;
            I.for_each([&](int k) {
                const auto h = static_cast<std::size_t>(rs.height(k));
                if (lambda.size() < h) lambda.resize(h, 0);
                ++lambda[h - 1];
            });
            ASSERT_TRUE(std::is_sorted(lambda.rbegin(), lambda.rend()));
        }
    }
}
