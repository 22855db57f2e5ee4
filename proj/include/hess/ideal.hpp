#pragma once

// Lower ideals, Theta-ideals, and the type-A dictionary with partial
// Hessenberg functions.

#include <cstddef>
#include <vector>

#include "hess/root_set.hpp"
#include "hess/root_system.hpp"

namespace hess {

inline constexpr std::size_t kDefaultIdealCap = 1'000'000;

bool is_lower_ideal(const RootSystem& rs, const RootSet& s);

// (1) downward closed under <=, (2) upward closed under <=_Theta,
// (3) contains Phi+_Theta. With theta empty this is is_lower_ideal.
bool is_theta_ideal(const RootSystem& rs, const RootSet& s, const ThetaSet& theta);

// All Theta-ideals, sorted in bit-vector order. The cap bounds the number of
// search nodes visited; CapExceeded is thrown past it.
std::vector<RootSet> enumerate_theta_ideals(const RootSystem& rs, const ThetaSet& theta,
                                            std::size_t cap = kDefaultIdealCap);

inline std::vector<RootSet> enumerate_lower_ideals(const RootSystem& rs, std::size_t cap = kDefaultIdealCap) {
    return enumerate_theta_ideals(rs, ThetaSet{}, cap);
}

// Partial Hessenberg function h : K u {n} -> K u {n} of type A_{n-1}.
// K holds k_1 < ... < k_s (1-based); values holds h(k_1), ..., h(k_s), h(n).
struct PartialHessenbergFunction {
    int n = 0;
    std::vector<int> K;
    std::vector<int> values;

    // Throws InvalidHessenbergFunction.
    void validate() const;
    // h~ : [n] -> [n], h~(j) = h(k_p) for k_{p-1} < j <= k_p.
    std::vector<int> extended() const;
    // Theta = {alpha_i : i in [n-1] \ K}
    ThetaSet theta() const;

    bool operator==(const PartialHessenbergFunction&) const = default;
};

struct HessenbergIdeal {
    ThetaSet theta;
    RootSet ideal;
    std::vector<int> extended;
};

// Index of x_i - x_j (1 <= i < j <= n) in a type A_{n-1} root system.
int type_a_root_index(const RootSystem& rs, int i, int j);

// rs must be of type A_{n-1}. I = {x_i - x_j : i < j <= h~(i)}.
HessenbergIdeal ideal_from_partial_hessenberg(const RootSystem& rs, const PartialHessenbergFunction& f);

// Every partial Hessenberg function on the given K (sorted by values).
std::vector<PartialHessenbergFunction> partial_hessenberg_functions(int n, const std::vector<int>& K);
// ... and over every K subset of [n-1].
std::vector<PartialHessenbergFunction> all_partial_hessenberg_functions(int n);

}  // namespace hess
