#pragma once

// Weyl-type subsets Y of a lower ideal I: Y and I \ Y are both closed under
// sums that land in I.

#include <vector>

#include "hess/cells.hpp"
#include "hess/root_set.hpp"
#include "hess/root_system.hpp"
#include "hess/weyl.hpp"

namespace hess {

// Throws NotSubset when Y is not contained in I.
bool is_weyl_type(const RootSystem& rs, const RootSet& y, const RootSet& ideal);

// Brute force over subsets of I \ Phi+_Theta. Throws CapExceeded past
// max_size elements.
std::vector<RootSet> weyl_type_subsets_brute_force(const RootSystem& rs, const RootSet& ideal,
                                                   const ThetaSet& theta, int max_size = 20);

// Image of eta_Theta over the admissible cells.
std::vector<RootSet> weyl_type_subsets_by_bijection(CellEnumerator& cells, const RootSet& ideal,
                                                    const ThetaSet& theta);

// W^{I,Theta}, sorted by (|Y|, bit-vector). Brute force when
// |I \ Phi+_Theta| <= limits.brute_force_max, otherwise the bijection path.
std::vector<RootSet> enumerate_weyl_type_theta(const RootSystem& rs, const RootSet& ideal, const ThetaSet& theta,
                                               const Limits& limits = {});
std::vector<RootSet> enumerate_weyl_type_theta(CellEnumerator& cells, const RootSet& ideal, const ThetaSet& theta,
                                               const Limits& limits = {});

// N(w) n I. Throws DomainViolation unless w is in W^Theta and passes the
// cell condition for I.
RootSet eta_theta(const RootSystem& rs, const WeylElement& w, const RootSet& ideal, const ThetaSet& theta = {});

void sort_by_size_then_bits(std::vector<RootSet>& sets);

}  // namespace hess
