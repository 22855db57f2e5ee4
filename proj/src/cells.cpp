#include "hess/cells.hpp"

#include "hess/errors.hpp"

namespace hess {

CellEnumerator::CellEnumerator(const RootSystem& rs, Limits limits, CellPath path)
    : rs_(&rs), limits_(limits), path_(path) {
    if (path_ == CellPath::Auto) path_ = rs.family() == 'A' ? CellPath::Permutation : CellPath::Matrix;
    if (path_ == CellPath::Permutation) {
        if (rs.family() != 'A') throw Error(ErrorKind::InvalidArgs, "permutation path needs type A, got " + rs.type_name());
        type_a_index_.emplace_back(rs);
    }
}

const std::vector<WeylElement>& CellEnumerator::matrix_quotient(const ThetaSet& theta) {
    auto it = matrix_cache_.find(theta.mask());
    if (it == matrix_cache_.end())
        it = matrix_cache_.emplace(theta.mask(), enumerate_quotient(*rs_, theta, limits_.matrix_cap)).first;
    return it->second;
}

const std::vector<Permutation>& CellEnumerator::permutation_quotient(const ThetaSet& theta) {
    auto it = permutation_cache_.find(theta.mask());
    if (it == permutation_cache_.end())
        it = permutation_cache_
                 .emplace(theta.mask(), enumerate_type_a_quotient(rs_->rank() + 1, theta, limits_.permutation_cap))
                 .first;
    return it->second;
}

std::size_t CellEnumerator::quotient_size(const ThetaSet& theta) {
    theta.validate(*rs_);
    return path_ == CellPath::Permutation ? permutation_quotient(theta).size() : matrix_quotient(theta).size();
}

std::vector<RootSet> CellEnumerator::admissible(const RootSet& ideal, const ThetaSet& theta) {
    theta.validate(*rs_);
    std::vector<RootSet> out;
    if (path_ == CellPath::Permutation) {
        const TypeAIndex& index = type_a_index_.front();
        const std::size_t universe = static_cast<std::size_t>(rs_->num_positive());
        for (const auto& w : permutation_quotient(theta))
            if (permutation_cell_condition(index, w, ideal))
                out.push_back(permutation_inversion_set(index, universe, w) & ideal);
    } else {
        for (const auto& w : matrix_quotient(theta))
            if (cell_condition(*rs_, w, ideal)) out.push_back(w.inversions & ideal);
    }
    return out;
}

}  // namespace hess
