#include "hess/poincare.hpp"

#include <algorithm>
#include <sstream>

#include "hess/errors.hpp"
#include "hess/weyl_type.hpp"

namespace hess {

const char* method_name(Method m) {
    switch (m) {
        case Method::Cells: return "cells";
        case Method::WeylType: return "weyltype";
        case Method::Product: return "product";
        case Method::HeightDist: return "height-dist";
        case Method::QBinomial: return "qbinomial";
    }
    return "?";
}

std::optional<Method> parse_method(const std::string& name) {
    for (Method m : kAllMethods)
        if (name == method_name(m)) return m;
    return std::nullopt;
}

HeightDistribution height_distribution(const RootSystem& rs, const RootSet& y) {
    HeightDistribution d;
    y.for_each([&](int k) {
        const auto h = static_cast<std::size_t>(rs.height(k));
        if (d.lambda.size() < h) d.lambda.resize(h, 0);
        ++d.lambda[h - 1];
    });
    d.m.resize(d.lambda.size());
    for (std::size_t i = 0; i < d.lambda.size(); ++i)
        d.m[i] = d.lambda[i] - (i + 1 < d.lambda.size() ? d.lambda[i + 1] : 0);
    return d;
}

void require_theta_ideal(const RootSystem& rs, const RootSet& ideal, const ThetaSet& theta) {
    theta.validate(rs);
    if (ideal.universe() != static_cast<std::size_t>(rs.num_positive()))
        throw Error(ErrorKind::InvalidIdeal, "ideal is not over the positive roots of " + rs.type_name());
    if (!is_theta_ideal(rs, ideal, theta)) {
        throw Error(ErrorKind::InvalidIdeal, theta.empty() ? "set is not a lower ideal" : "set is not a Theta-ideal");
    }
}

static QPolynomial sum_of_powers(const std::vector<RootSet>& sets) {
    std::vector<BigInt> c;
    for (const auto& s : sets) {
        const auto k = s.count();
        if (c.size() <= k) c.resize(k + 1, 0);
        c[k] += 1;
    }
    return QPolynomial(std::move(c));
}

QPolynomial poincare_cells(CellEnumerator& cells, const RootSet& ideal, const ThetaSet& theta) {
    require_theta_ideal(cells.root_system(), ideal, theta);
    return sum_of_powers(cells.admissible(ideal, theta));
}

QPolynomial poincare_cells(const RootSystem& rs, const RootSet& ideal, const ThetaSet& theta, const Limits& limits) {
    require_theta_ideal(rs, ideal, theta);
    CellEnumerator cells(rs, limits);
    return poincare_cells(cells, ideal, theta);
}

QPolynomial poincare_weyltype(CellEnumerator& cells, const RootSet& ideal, const ThetaSet& theta,
                              const Limits& limits) {
    require_theta_ideal(cells.root_system(), ideal, theta);
    return sum_of_powers(enumerate_weyl_type_theta(cells, ideal, theta, limits));
}

QPolynomial poincare_weyltype(const RootSystem& rs, const RootSet& ideal, const ThetaSet& theta,
                              const Limits& limits) {
    require_theta_ideal(rs, ideal, theta);
    return sum_of_powers(enumerate_weyl_type_theta(rs, ideal, theta, limits));
}

static void drop_trivial(std::map<int, int>& factors) {
    for (auto it = factors.begin(); it != factors.end();) {
        if (it->first <= 1 || it->second == 0) it = factors.erase(it);
        else ++it;
    }
}

FactoredPolynomial poincare_product_factored(const RootSystem& rs, const RootSet& ideal, const ThetaSet& theta) {
    require_theta_ideal(rs, ideal, theta);
    const RootSet y = ideal - rs.phi_theta_plus(theta);
    FactoredPolynomial out;
    QPolynomial num{1}, den{1};
    y.for_each([&](int k) {
        const int h = rs.height(k);
        num *= QPolynomial::q_integer(h + 1);
        den *= QPolynomial::q_integer(h);
        ++out.factors[h + 1];
        --out.factors[h];
    });
    drop_trivial(out.factors);
    out.value = exact_div(num, den);
    return out;
}

FactoredPolynomial poincare_height_dist_factored(const RootSystem& rs, const RootSet& ideal, const ThetaSet& theta) {
    require_theta_ideal(rs, ideal, theta);
    const HeightDistribution d = height_distribution(rs, ideal - rs.phi_theta_plus(theta));
    FactoredPolynomial out;
    // 1 + q + ... + q^i = [i+1]_q
    for (std::size_t i = 0; i < d.m.size(); ++i)
        if (d.m[i] != 0) out.factors[static_cast<int>(i) + 2] = d.m[i];
    out.value = from_q_integer_factors(out.factors);
    return out;
}

QPolynomial poincare_qbinomial(const PartialHessenbergFunction& f) {
    f.validate();
    QPolynomial out{1};
    int prev = 0;
    for (std::size_t j = 0; j < f.values.size(); ++j) {
        const int k = j < f.K.size() ? f.K[j] : f.n;
        out *= qbinomial(f.values[j] - prev, k - prev);
        prev = k;
    }
    return out;
}

int dimension(const RootSystem& rs, const RootSet& ideal, const ThetaSet& theta) {
    require_theta_ideal(rs, ideal, theta);
    return static_cast<int>(ideal.count()) - static_cast<int>(rs.phi_theta_plus(theta).count());
}

std::vector<int> arrangement_exponents(const RootSystem& rs, const RootSet& ideal) {
    require_theta_ideal(rs, ideal, ThetaSet{});
    const HeightDistribution d = height_distribution(rs, ideal);
    std::vector<int> out(static_cast<std::size_t>(rs.rank()), 0);
    for (int lam : d.lambda)
        for (int j = 0; j < lam; ++j) ++out[static_cast<std::size_t>(j)];
    return out;
}

bool IdentityReport::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const QPolynomial* IdentityReport::method(Method m) const {
    for (const auto& [k, p] : methods)
        if (k == m) return &p;
    return nullptr;
}

IdentityReport verify_identity(CellEnumerator& cells, const RootSet& ideal, const ThetaSet& theta,
                               const PartialHessenbergFunction* f, const Limits& limits) {
    const RootSystem& rs = cells.root_system();
    require_theta_ideal(rs, ideal, theta);
    IdentityReport report;
    report.dimension = dimension(rs, ideal, theta);

    auto run = [&](Method m, auto&& compute) {
        try {
            report.methods.emplace_back(m, compute());
        } catch (const NonExactDivision& e) {
            report.checks.push_back({std::string(method_name(m)) + " polynomial", false, e.what()});
        }
    };

    const std::vector<RootSet> admissible = cells.admissible(ideal, theta);
    report.admissible_cells = admissible.size();
    run(Method::Cells, [&] { return sum_of_powers(admissible); });
    const std::vector<RootSet> weyl_type = enumerate_weyl_type_theta(cells, ideal, theta, limits);
    run(Method::WeylType, [&] { return sum_of_powers(weyl_type); });
    run(Method::Product, [&] {
        auto fp = poincare_product_factored(rs, ideal, theta);
        report.factored[Method::Product] = fp.factors;
        return fp.value;
    });
    run(Method::HeightDist, [&] {
        auto fp = poincare_height_dist_factored(rs, ideal, theta);
        report.factored[Method::HeightDist] = fp.factors;
        return fp.value;
    });
    if (f) run(Method::QBinomial, [&] { return poincare_qbinomial(*f); });

    for (std::size_t a = 0; a < report.methods.size(); ++a)
        for (std::size_t b = a + 1; b < report.methods.size(); ++b) {
            const auto& [ma, pa] = report.methods[a];
            const auto& [mb, pb] = report.methods[b];
            report.checks.push_back({std::string(method_name(ma)) + " = " + method_name(mb), pa == pb,
                                     pa == pb ? "" : pa.to_string() + " vs " + pb.to_string()});
        }

    for (const auto& [m, p] : report.methods) {
        const std::string tag = method_name(m);
        report.checks.push_back({tag + " degree = dimension", p.degree() == report.dimension,
                                 "degree " + std::to_string(p.degree()) + ", dimension " + std::to_string(report.dimension)});
        const bool normalized = !p.is_zero() && p.coeff(0) == 1 && p.coeffs().back() == 1;
        report.checks.push_back({tag + " constant and leading coefficient 1", normalized, p.to_string()});
        report.checks.push_back({tag + " palindromic", p.is_palindromic(), p.to_string()});
    }

    report.checks.push_back({"cell count = |W^{I,Theta}|", admissible.size() == weyl_type.size(),
                             std::to_string(admissible.size()) + " vs " + std::to_string(weyl_type.size())});

    try {
        const RootSet fiber = rs.phi_theta_plus(theta);
        const QPolynomial whole = poincare_product(rs, ideal, ThetaSet{});
        const QPolynomial split = poincare_product(rs, fiber, ThetaSet{}) * poincare_product(rs, ideal, theta);
        report.checks.push_back({"Poin(I) = Poin(Phi+_Theta) Poin(I, Theta)", whole == split,
                                 whole.to_string() + " vs " + split.to_string()});
    } catch (const NonExactDivision& e) {
        report.checks.push_back({"Poin(I) = Poin(Phi+_Theta) Poin(I, Theta)", false, e.what()});
    }

    if (theta.empty()) {
        QPolynomial prod{1};
        for (int e : arrangement_exponents(rs, ideal))
            if (e > 0) prod *= QPolynomial::q_integer(e + 1);
        const QPolynomial* product = report.method(Method::Product);
        const bool ok = product && *product == prod;
        report.checks.push_back({"prod [e_i + 1]_q over exponents = product", ok, prod.to_string()});
    }
    return report;
}

SweepSummary verify_sweep(const RootSystem& rs, const std::optional<ThetaSet>& theta, const Limits& limits) {
    SweepSummary summary;
    CellEnumerator cells(rs, limits);
    std::vector<ThetaSet> thetas;
    if (theta) {
        theta->validate(rs);
        thetas.push_back(*theta);
    } else {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << rs.rank()); ++mask) thetas.emplace_back(mask);
    }
    // Fail fast on unreachable groups before any ideal work.
    for (const auto& t : thetas) cells.quotient_size(t);
    for (const auto& t : thetas) {
        ++summary.thetas_checked;
        for (const auto& ideal : enumerate_theta_ideals(rs, t, limits.ideal_cap)) {
            ++summary.ideals_checked;
            const IdentityReport report = verify_identity(cells, ideal, t, nullptr, limits);
            if (report.pass()) continue;
            SweepFailure fail{t, ideal, {}};
            for (const auto& c : report.checks)
                if (!c.pass) fail.failed_checks.push_back(c.name + ": " + c.detail);
            summary.failures.push_back(std::move(fail));
        }
    }
    return summary;
}

}  // namespace hess
