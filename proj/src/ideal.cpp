#include "hess/ideal.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "hess/errors.hpp"

namespace hess {

bool is_lower_ideal(const RootSystem& rs, const RootSet& s) {
    if (s.universe() != static_cast<std::size_t>(rs.num_positive())) return false;
    bool ok = true;
    s.for_each([&](int k) {
        if (ok && !rs.strictly_below(k).is_subset_of(s)) ok = false;
    });
    return ok;
}

bool is_theta_ideal(const RootSystem& rs, const RootSet& s, const ThetaSet& theta) {
    if (!is_lower_ideal(rs, s)) return false;
    if (theta.empty()) return true;
    if (!rs.phi_theta_plus(theta).is_subset_of(s)) return false;
    const int N = rs.num_positive();
    bool ok = true;
    s.for_each([&](int a) {
        if (!ok) return;
        for (int g = a + 1; g < N; ++g)
            if (!s.contains(g) && rs.leq(a, g, theta)) {
                ok = false;
                return;
            }
    });
    return ok;
}

std::vector<RootSet> enumerate_theta_ideals(const RootSystem& rs, const ThetaSet& theta, std::size_t cap) {
    theta.validate(rs);
    const int N = rs.num_positive();
    const RootSet forced = rs.phi_theta_plus(theta);

    // theta_below[k]: roots strictly <=_Theta below root k. Any of them in the
    // ideal forces k in.
    std::vector<RootSet> theta_below(static_cast<std::size_t>(N), RootSet(static_cast<std::size_t>(N)));
    if (!theta.empty())
        for (int b = 0; b < N; ++b)
            for (int a = 0; a < b; ++a)
                if (rs.leq(a, b, theta)) theta_below[static_cast<std::size_t>(b)].insert(a);

    std::vector<RootSet> out;
    RootSet current(static_cast<std::size_t>(N));
    std::size_t nodes = 0;

    // Roots are decided in canonical order; every <=-predecessor of a root
    // precedes it, so each leaf reached is a valid Theta-ideal.
    std::function<void(int)> dfs = [&](int k) {
        if (++nodes > cap) throw CapExceeded("ideal enumeration exceeded cap of " + std::to_string(cap) + " search nodes", cap);
        if (k == N) {
            out.push_back(current);
            return;
        }
        const bool can_include = rs.strictly_below(k).is_subset_of(current);
        const bool must_include = forced.contains(k) || theta_below[static_cast<std::size_t>(k)].intersects(current);
        if (!must_include) dfs(k + 1);
        if (can_include) {
            current.insert(k);
            dfs(k + 1);
            current.erase(k);
        }
    };
    dfs(0);
    std::sort(out.begin(), out.end());
    return out;
}

void PartialHessenbergFunction::validate() const {
    auto fail = [](const std::string& msg) { throw Error(ErrorKind::InvalidHessenbergFunction, msg); };
    if (n < 1) fail("n must be positive");
    for (std::size_t p = 0; p < K.size(); ++p) {
        if (K[p] < 1 || K[p] > n - 1) fail("K must be a subset of [n-1]");
        if (p > 0 && K[p] <= K[p - 1]) fail("K must be strictly increasing");
    }
    if (values.size() != K.size() + 1) fail("expected s+1 values h(k_1), ..., h(k_s), h(n)");
    if (values.back() != n) fail("h(n) must equal n");
    for (std::size_t p = 0; p < values.size(); ++p) {
        const int k = p < K.size() ? K[p] : n;
        const int v = values[p];
        if (v != n && !std::binary_search(K.begin(), K.end(), v)) fail("h values must lie in K u {n}");
        if (v < k) fail("h(j) >= j violated at j = " + std::to_string(k));
        if (p > 0 && v < values[p - 1]) fail("h must be nondecreasing");
    }
}

std::vector<int> PartialHessenbergFunction::extended() const {
    std::vector<int> h(static_cast<std::size_t>(n));
    int prev = 0;
    for (std::size_t p = 0; p <= K.size(); ++p) {
        const int k = p < K.size() ? K[p] : n;
        for (int j = prev + 1; j <= k; ++j) h[static_cast<std::size_t>(j - 1)] = values[p];
        prev = k;
    }
    return h;
}

ThetaSet PartialHessenbergFunction::theta() const {
    std::uint64_t m = 0;
    for (int i = 1; i <= n - 1; ++i)
        if (!std::binary_search(K.begin(), K.end(), i)) m |= std::uint64_t{1} << (i - 1);
    return ThetaSet(m);
}

int type_a_root_index(const RootSystem& rs, int i, int j) {
    std::vector<int> c(static_cast<std::size_t>(rs.rank()), 0);
    for (int t = i; t < j; ++t) c[static_cast<std::size_t>(t - 1)] = 1;
    auto idx = rs.index_of(c);
    if (!idx) throw Error(ErrorKind::InvalidArgs, "x_" + std::to_string(i) + " - x_" + std::to_string(j) + " is not a positive root");
    return *idx;
}

HessenbergIdeal ideal_from_partial_hessenberg(const RootSystem& rs, const PartialHessenbergFunction& f) {
    f.validate();
    if (rs.family() != 'A' || rs.rank() != f.n - 1)
        throw Error(ErrorKind::InvalidArgs, "partial Hessenberg function with n = " + std::to_string(f.n) +
                                                " needs type A" + std::to_string(f.n - 1) + ", got " + rs.type_name());
    HessenbergIdeal out;
    out.theta = f.theta();
    out.extended = f.extended();
    out.ideal = rs.empty_set();
    for (int i = 1; i <= f.n; ++i)
        for (int j = i + 1; j <= out.extended[static_cast<std::size_t>(i - 1)]; ++j)
            out.ideal.insert(type_a_root_index(rs, i, j));
    return out;
}

std::vector<PartialHessenbergFunction> partial_hessenberg_functions(int n, const std::vector<int>& K) {
    std::vector<int> targets = K;
    targets.push_back(n);
    std::vector<PartialHessenbergFunction> out;
    PartialHessenbergFunction f{n, K, std::vector<int>(targets.size())};
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t p, std::size_t lo) {
        if (p == targets.size()) {
            out.push_back(f);
            return;
        }
        for (std::size_t t = lo; t < targets.size(); ++t) {
            if (targets[t] < targets[p]) continue;
            f.values[p] = targets[t];
            rec(p + 1, t);
        }
    };
    rec(0, 0);
    return out;
}

std::vector<PartialHessenbergFunction> all_partial_hessenberg_functions(int n) {
    std::vector<PartialHessenbergFunction> out;
    const int m = n - 1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        std::vector<int> K;
        for (int i = 0; i < m; ++i)
            if ((mask >> i) & 1u) K.push_back(i + 1);
        auto part = partial_hessenberg_functions(n, K);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

}  // namespace hess
