#pragma once

// Poincare polynomials of regular nilpotent partial Hessenberg varieties,
// indexed by a Theta-ideal I. Every formula returns a polynomial in q whose
// coefficient of q^k is the 2k-th Betti number:
//
//   cells       sum over admissible w in W^Theta of q^{|N(w) n I|}
//   weyltype    sum over Y in W^{I,Theta} of q^{|Y|}
//   product     prod over I \ Phi+_Theta of [ht+1]_q / [ht]_q
//   height-dist prod_i [i+1]_q^{m_i} for the height distribution of I \ Phi+_Theta
//   qbinomial   type A only, a product of q-binomials in (K, h)

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hess/cells.hpp"
#include "hess/ideal.hpp"
#include "hess/qpolynomial.hpp"
#include "hess/root_set.hpp"
#include "hess/root_system.hpp"

namespace hess {

enum class Method { Cells, WeylType, Product, HeightDist, QBinomial };

const char* method_name(Method m);
std::optional<Method> parse_method(const std::string& name);
inline constexpr Method kAllMethods[] = {Method::Cells, Method::WeylType, Method::Product, Method::HeightDist,
                                         Method::QBinomial};

struct HeightDistribution {
    std::vector<int> lambda;  // lambda[i-1] = #roots of height i
    std::vector<int> m;       // m_i = lambda_i - lambda_{i+1}
};

HeightDistribution height_distribution(const RootSystem& rs, const RootSet& y);

// Polynomial together with its [k]_q factorization (k -> multiplicity,
// trivial factors [1]_q dropped).
struct FactoredPolynomial {
    QPolynomial value;
    std::map<int, int> factors;
};

// Throws InvalidIdeal unless I is a Theta-ideal.
void require_theta_ideal(const RootSystem& rs, const RootSet& ideal, const ThetaSet& theta);

QPolynomial poincare_cells(CellEnumerator& cells, const RootSet& ideal, const ThetaSet& theta);
QPolynomial poincare_cells(const RootSystem& rs, const RootSet& ideal, const ThetaSet& theta,
                           const Limits& limits = {});

QPolynomial poincare_weyltype(CellEnumerator& cells, const RootSet& ideal, const ThetaSet& theta,
                              const Limits& limits = {});
QPolynomial poincare_weyltype(const RootSystem& rs, const RootSet& ideal, const ThetaSet& theta,
                              const Limits& limits = {});

FactoredPolynomial poincare_product_factored(const RootSystem& rs, const RootSet& ideal, const ThetaSet& theta);
inline QPolynomial poincare_product(const RootSystem& rs, const RootSet& ideal, const ThetaSet& theta) {
    return poincare_product_factored(rs, ideal, theta).value;
}

FactoredPolynomial poincare_height_dist_factored(const RootSystem& rs, const RootSet& ideal, const ThetaSet& theta);
inline QPolynomial poincare_height_dist(const RootSystem& rs, const RootSet& ideal, const ThetaSet& theta) {
    return poincare_height_dist_factored(rs, ideal, theta).value;
}

// Throws InvalidHessenbergFunction.
QPolynomial poincare_qbinomial(const PartialHessenbergFunction& f);

// |I| - |Phi+_Theta|.
int dimension(const RootSystem& rs, const RootSet& ideal, const ThetaSet& theta);

// Dual partition of the height distribution of a lower ideal, padded with
// zeros to the rank.
std::vector<int> arrangement_exponents(const RootSystem& rs, const RootSet& ideal);

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct IdentityReport {
    std::vector<std::pair<Method, QPolynomial>> methods;
    std::map<Method, std::map<int, int>> factored;
    int dimension = 0;
    std::size_t admissible_cells = 0;
    std::vector<Check> checks;

    bool pass() const;
    const QPolynomial* method(Method m) const;
};

// Runs every applicable method (qbinomial only when f is given) and checks
// pairwise agreement, the degree law, normalization, palindromicity, the
// factorization Poin(I, {}) = Poin(Phi+_Theta, {}) Poin(I, Theta), the cell
// count against |W^{I,Theta}|, and for Theta empty the exponent law.
// Identity violations are failed checks; a malformed ideal throws InvalidIdeal.
IdentityReport verify_identity(CellEnumerator& cells, const RootSet& ideal, const ThetaSet& theta,
                               const PartialHessenbergFunction* f = nullptr, const Limits& limits = {});

struct SweepFailure {
    ThetaSet theta;
    RootSet ideal;
    std::vector<std::string> failed_checks;
};

struct SweepSummary {
    std::size_t thetas_checked = 0;
    std::size_t ideals_checked = 0;
    std::vector<SweepFailure> failures;
};

// verify_identity over every Theta-ideal, for one Theta or for every Theta.
SweepSummary verify_sweep(const RootSystem& rs, const std::optional<ThetaSet>& theta, const Limits& limits = {});

}  // namespace hess
