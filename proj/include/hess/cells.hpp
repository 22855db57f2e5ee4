#pragma once

// Admissible Schubert cells of a Theta-ideal: the w in W^Theta with
// w^{-1}(Delta) in (-I) u Phi+, each contributing a cell of dimension
// |N(w) n I|. Quotients are cached per Theta so that sweeping many ideals
// over one root system enumerates each W^Theta once.

#include <cstdint>
#include <map>
#include <vector>

#include "hess/ideal.hpp"
#include "hess/root_set.hpp"
#include "hess/root_system.hpp"
#include "hess/type_a.hpp"
#include "hess/weyl.hpp"

namespace hess {

struct Limits {
    std::size_t matrix_cap = kDefaultMatrixCap;
    std::size_t permutation_cap = kDefaultPermutationCap;
    std::size_t ideal_cap = kDefaultIdealCap;
    // Largest |I \ Phi+_Theta| for which Weyl-type subsets are brute forced.
    int brute_force_max = 20;
};

enum class CellPath {
    Auto,         // permutations in type A, matrices otherwise
    Matrix,
    Permutation,
};

class CellEnumerator {
public:
    explicit CellEnumerator(const RootSystem& rs, Limits limits = {}, CellPath path = CellPath::Auto);

    const RootSystem& root_system() const noexcept { return *rs_; }
    CellPath path() const noexcept { return path_; }

    // N(w) n I for every admissible w in W^Theta, in quotient enumeration
    // order. Its length is the number of cells.
    std::vector<RootSet> admissible(const RootSet& ideal, const ThetaSet& theta);

    std::size_t quotient_size(const ThetaSet& theta);

private:
    const std::vector<WeylElement>& matrix_quotient(const ThetaSet& theta);
    const std::vector<Permutation>& permutation_quotient(const ThetaSet& theta);

    const RootSystem* rs_;
    Limits limits_;
    CellPath path_;
    std::vector<TypeAIndex> type_a_index_;  // empty outside type A
    std::map<std::uint64_t, std::vector<WeylElement>> matrix_cache_;
    std::map<std::uint64_t, std::vector<Permutation>> permutation_cache_;
};

}  // namespace hess
