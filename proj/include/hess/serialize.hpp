#pragma once

// Wire formats shared by the CLI and the Python module.
//   ideal        sorted list of 0-based canonical positive-root indices
//   polynomial   ascending coefficient list (integers; decimal strings past 64 bits)
//   factored     list of [k, multiplicity] pairs meaning prod [k]_q^multiplicity
//   hessenberg   {"n": n, "K": [k_1, ...], "h": [h(k_1), ..., h(n)]}

#include <map>

#include <json.hpp>

#include "hess/ideal.hpp"
#include "hess/qpolynomial.hpp"
#include "hess/root_set.hpp"
#include "hess/root_system.hpp"

namespace hess {

using Json = nlohmann::ordered_json;

Json polynomial_to_json(const QPolynomial& p);
QPolynomial polynomial_from_json(const Json& j);

Json factored_to_json(const std::map<int, int>& factors);
std::map<int, int> factored_from_json(const Json& j);

Json ideal_to_json(const RootSet& s);
// Throws InvalidArgs for indices outside Phi+ of rs.
RootSet ideal_from_indices(const RootSystem& rs, const std::vector<int>& indices);
RootSet ideal_from_json(const RootSystem& rs, const Json& j);

Json hessenberg_to_json(const PartialHessenbergFunction& f);
PartialHessenbergFunction hessenberg_from_json(const Json& j);

// 1-based simple indices, matching alpha_1 ... alpha_n.
Json theta_to_json(const ThetaSet& theta);
ThetaSet theta_from_one_based(const RootSystem& rs, const std::vector<int>& one_based);

Json root_to_json(const RootSystem& rs, int index);

}  // namespace hess
