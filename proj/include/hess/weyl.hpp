#pragma once

// Weyl groups as integer matrices on simple-root coordinates, parabolic
// quotients W^Theta, inversion sets and the affine-cell condition.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hess/root_set.hpp"
#include "hess/root_system.hpp"

namespace hess {

inline constexpr std::size_t kDefaultMatrixCap = 1'000'000;

struct WeylElement {
    int rank = 0;
    // Row-major n x n; column j holds the coordinates of w(alpha_j).
    std::vector<std::int8_t> action;
    std::vector<std::int8_t> inverse;
    // A reduced expression w = s_{word[0]} s_{word[1]} ... (0-based indices).
    std::vector<int> word;
    RootSet inversions;

    int length() const noexcept { return static_cast<int>(word.size()); }
    int entry(int r, int c) const { return action[static_cast<std::size_t>(r * rank + c)]; }

    std::vector<int> apply(const std::vector<int>& coeffs) const;
    std::vector<int> apply_inverse(const std::vector<int>& coeffs) const;

    bool operator==(const WeylElement& o) const { return action == o.action; }
};

struct WeylGroup {
    const RootSystem* rs = nullptr;
    // Breadth-first order: grouped by length, identity first.
    std::vector<WeylElement> elements;

    std::size_t size() const noexcept { return elements.size(); }
};

WeylElement identity_element(const RootSystem& rs);
WeylElement simple_reflection(const RootSystem& rs, int i);

// Matrix product a*b with the word and inversion set recomputed.
WeylElement multiply(const RootSystem& rs, const WeylElement& a, const WeylElement& b);
WeylElement from_word(const RootSystem& rs, const std::vector<int>& word);

// N(w) = {alpha in Phi+ : w(alpha) in Phi-}, read off the matrix.
RootSet inversion_set(const RootSystem& rs, const WeylElement& w);

// Throws CapExceeded, immediately when the classical order already exceeds cap.
WeylGroup enumerate_weyl_group(const RootSystem& rs, std::size_t cap = kDefaultMatrixCap);

// W_Theta generated by the simple reflections in theta.
WeylGroup enumerate_parabolic_subgroup(const RootSystem& rs, const ThetaSet& theta,
                                       std::size_t cap = kDefaultMatrixCap);

// |W_Theta| from the exponents of Phi+_Theta.
double parabolic_order(const RootSystem& rs, const ThetaSet& theta);

// Fast path: breadth-first search by left multiplication s_i w restricted to
// N(w) n Phi+_Theta = {}. Every suffix of a minimal representative is again
// minimal, so W^Theta is reached without visiting the rest of W.
std::vector<WeylElement> enumerate_quotient(const RootSystem& rs, const ThetaSet& theta,
                                            std::size_t cap = kDefaultMatrixCap);
// Reference path: N(w) n Phi+_Theta = {} filter over a full group.
std::vector<WeylElement> enumerate_quotient(const WeylGroup& group, const ThetaSet& theta);
// Defining condition l(w) < l(w s_i) for all i in theta, lengths recomputed
// from matrices.
bool in_quotient_by_length(const RootSystem& rs, const WeylElement& w, const ThetaSet& theta);

// |N(w) n I| when w^{-1}(alpha_i) lies in (-I) u Phi+ for every simple i.
std::optional<int> cell_condition(const RootSystem& rs, const WeylElement& w, const RootSet& ideal);

// w = u v with u in W^Theta, v in W_Theta and l(w) = l(u) + l(v).
std::pair<WeylElement, WeylElement> coset_decompose(const RootSystem& rs, const WeylElement& w,
                                                    const ThetaSet& theta);

}  // namespace hess
