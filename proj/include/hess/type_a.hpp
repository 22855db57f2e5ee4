#pragma once

// Type A_{n-1} fast path: Weyl group elements as one-line permutations of
// [n]. The root x_i - x_j maps under w to x_{w(i)} - x_{w(j)}.

#include <optional>
#include <vector>

#include "hess/root_set.hpp"
#include "hess/root_system.hpp"
#include "hess/weyl.hpp"

namespace hess {

inline constexpr std::size_t kDefaultPermutationCap = 10'000'000;

// One-line notation, values 1..n.
using Permutation = std::vector<int>;

// Lookup table (i, j) -> index of x_i - x_j for 1 <= i < j <= n.
class TypeAIndex {
public:
    explicit TypeAIndex(const RootSystem& rs);

    int n() const noexcept { return n_; }
    int operator()(int i, int j) const { return idx_[static_cast<std::size_t>(i * (n_ + 1) + j)]; }

private:
    int n_;
    std::vector<int> idx_;
};

// Permutations increasing on each block k_{p-1}+1..k_p, where consecutive
// positions i, i+1 share a block iff alpha_i is in theta.
std::vector<Permutation> enumerate_type_a_quotient(int n, const ThetaSet& theta,
                                                   std::size_t cap = kDefaultPermutationCap);

RootSet permutation_inversion_set(const TypeAIndex& index, std::size_t universe, const Permutation& w);

// The general cell condition, evaluated through the root dictionary.
std::optional<int> permutation_cell_condition(const TypeAIndex& index, const Permutation& w, const RootSet& ideal);

// w^{-1}(w(j) - 1) <= h~(j) for all j, with w(0) = 0.
bool type_a_cell_condition(const Permutation& w, const std::vector<int>& extended_h);

WeylElement permutation_to_element(const RootSystem& rs, const Permutation& w);
Permutation element_to_permutation(const WeylElement& w);

}  // namespace hess
