#pragma once

// Finite crystallographic root systems in simple-root coordinates.
//
// The Cartan matrix is stored with the convention
//     cartan(i, j) = <alpha_i, alpha_j^vee>,
// so the simple reflection s_j acts by s_j(alpha_i) = alpha_i - cartan(i, j) alpha_j.
// Simple roots follow the Bourbaki numbering. All indices in this interface
// are 0-based; alpha_1 of the usual notation is simple index 0.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hess/root_set.hpp"

namespace hess {

class RootSystem;

// Subset of the simple roots, as a bitmask over 0-based simple indices.
class ThetaSet {
public:
    ThetaSet() = default;
    explicit ThetaSet(std::uint64_t mask) : mask_(mask) {}

    static ThetaSet from_indices(const std::vector<int>& zero_based);
    static ThetaSet all(int rank) {
        return ThetaSet(rank >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << rank) - 1);
    }

    bool contains(int i) const noexcept { return (mask_ >> i) & 1u; }
    bool empty() const noexcept { return mask_ == 0; }
    std::uint64_t mask() const noexcept { return mask_; }
    std::vector<int> indices() const;
    int size() const noexcept;

    // Throws InvalidArgs if some member is not a simple index of rs.
    void validate(const RootSystem& rs) const;

    bool operator==(const ThetaSet&) const = default;

private:
    std::uint64_t mask_ = 0;
};

struct Root {
    std::vector<int> coeffs;
    int height = 0;

    bool operator==(const Root& o) const { return coeffs == o.coeffs; }
};

Root make_root(std::vector<int> coeffs);

class RootSystem {
public:
    // Classical families A..G; throws UnsupportedType for invalid (family, rank).
    static RootSystem build(char family, int rank);

    char family() const noexcept { return family_; }
    int rank() const noexcept { return rank_; }
    std::string type_name() const;
    int cartan(int i, int j) const { return cartan_[static_cast<std::size_t>(i * rank_ + j)]; }
    const std::vector<int>& cartan_entries() const noexcept { return cartan_; }

    // Canonical order: height ascending, then coefficient vectors ascending.
    const std::vector<Root>& positive_roots() const noexcept { return roots_; }
    int num_positive() const noexcept { return static_cast<int>(roots_.size()); }
    const Root& root(int index) const { return roots_[static_cast<std::size_t>(index)]; }
    int height(int index) const { return roots_[static_cast<std::size_t>(index)].height; }

    std::optional<int> index_of(const std::vector<int>& coeffs) const;
    int simple_index(int i) const { return simple_idx_[static_cast<std::size_t>(i)]; }
    bool is_root(const std::vector<int>& coeffs) const;

    // Bitmask of simple indices with nonzero coefficient.
    std::uint64_t support(int index) const { return support_[static_cast<std::size_t>(index)]; }

    // s_i(alpha) = alpha - <alpha, alpha_i^vee> alpha_i. Throws NotARoot.
    Root reflect_simple(int i, const Root& alpha) const;

    // Positive-root index of s_i(root(k)), or -1 when the image is negative
    // (which happens exactly for k == simple_index(i)).
    int reflect_index(int i, int k) const {
        return reflect_[static_cast<std::size_t>(i) * roots_.size() + static_cast<std::size_t>(k)];
    }

    // Index of root(a) + root(b) if it is a positive root, otherwise -1.
    int sum_index(int a, int b) const {
        return sum_[static_cast<std::size_t>(a) * roots_.size() + static_cast<std::size_t>(b)];
    }

    // alpha <= beta (theta empty) or alpha <=_Theta beta. Reflexive.
    bool leq(const Root& alpha, const Root& beta, const ThetaSet& theta = {}) const;
    bool leq(int a, int b, const ThetaSet& theta = {}) const;

    // {gamma in Phi+ : gamma < root(k)} in the root order.
    const RootSet& strictly_below(int k) const { return below_[static_cast<std::size_t>(k)]; }

    RootSet phi_theta_plus(const ThetaSet& theta) const;
    RootSet empty_set() const { return RootSet(roots_.size()); }
    RootSet all_positive() const { return RootSet::full(roots_.size()); }

    // Classical |W| for the type; exact for every supported rank below 2^53.
    double weyl_group_order() const;

private:
    RootSystem() = default;
    void close_positive_roots();
    void build_tables();

    char family_ = 'A';
    int rank_ = 0;
    std::vector<int> cartan_;
    std::vector<Root> roots_;
    std::map<std::vector<int>, int> index_;
    std::vector<int> simple_idx_;
    std::vector<std::uint64_t> support_;
    std::vector<int> reflect_;
    std::vector<int> sum_;
    std::vector<RootSet> below_;
};

// The classical count |Phi+| for a type; throws UnsupportedType.
int classical_positive_root_count(char family, int rank);
bool is_valid_type(char family, int rank);

}  // namespace hess
