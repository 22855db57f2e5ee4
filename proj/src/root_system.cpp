#include "hess/root_system.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "hess/errors.hpp"

namespace hess {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::UnsupportedType: return "UnsupportedType";
        case ErrorKind::NotARoot: return "NotARoot";
        case ErrorKind::InvalidArgs: return "InvalidArgs";
        case ErrorKind::InvalidHessenbergFunction: return "InvalidHessenbergFunction";
        case ErrorKind::InvalidIdeal: return "InvalidIdeal";
        case ErrorKind::NotSubset: return "NotSubset";
        case ErrorKind::DomainViolation: return "DomainViolation";
        case ErrorKind::NonExactDivision: return "NonExactDivision";
        case ErrorKind::CapExceeded: return "CapExceeded";
    }
    return "Unknown";
}

ThetaSet ThetaSet::from_indices(const std::vector<int>& zero_based) {
    std::uint64_t m = 0;
    for (int i : zero_based) {
        if (i < 0 || i >= 64) throw Error(ErrorKind::InvalidArgs, "simple index out of range: " + std::to_string(i));
        m |= std::uint64_t{1} << i;
    }
    return ThetaSet(m);
}

std::vector<int> ThetaSet::indices() const {
    std::vector<int> out;
    for (int i = 0; i < 64; ++i)
        if (contains(i)) out.push_back(i);
    return out;
}

int ThetaSet::size() const noexcept { return std::popcount(mask_); }

void ThetaSet::validate(const RootSystem& rs) const {
    if (rs.rank() < 64 && (mask_ >> rs.rank()) != 0)
        throw Error(ErrorKind::InvalidArgs, "Theta contains a simple index beyond rank " + std::to_string(rs.rank()));
}

Root make_root(std::vector<int> coeffs) {
    Root r;
    r.height = std::accumulate(coeffs.begin(), coeffs.end(), 0);
    r.coeffs = std::move(coeffs);
    return r;
}

bool is_valid_type(char family, int rank) {
    if (rank < 1 || rank > 63) return false;
    switch (family) {
        case 'A': return rank >= 1;
        case 'B':
        case 'C': return rank >= 2;
        case 'D': return rank >= 3;
        case 'E': return rank >= 6 && rank <= 8;
        case 'F': return rank == 4;
        case 'G': return rank == 2;
        default: return false;
    }
}

static void require_valid(char family, int rank) {
    if (!is_valid_type(family, rank)) {
        std::ostringstream os;
        os << "unsupported root system type " << family << rank;
        throw Error(ErrorKind::UnsupportedType, os.str());
    }
}

int classical_positive_root_count(char family, int rank) {
    require_valid(family, rank);
    const int n = rank;
    switch (family) {
        case 'A': return n * (n + 1) / 2;
        case 'B':
        case 'C': return n * n;
        case 'D': return n * (n - 1);
        case 'E': return n == 6 ? 36 : n == 7 ? 63 : 120;
        case 'F': return 24;
        default: return 6;
    }
}

namespace {

std::vector<int> cartan_matrix(char family, int n) {
    std::vector<int> c(static_cast<std::size_t>(n * n), 0);
    auto at = [&](int i, int j) -> int& { return c[static_cast<std::size_t>(i * n + j)]; };
    auto link = [&](int i, int j) { at(i, j) = -1; at(j, i) = -1; };
    for (int i = 0; i < n; ++i) at(i, i) = 2;

    switch (family) {
        case 'A':
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
            break;
        case 'B':  // alpha_n short
            for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
            at(n - 2, n - 1) = -2;
            at(n - 1, n - 2) = -1;
            break;
        case 'C':  // alpha_n long
            for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
            at(n - 2, n - 1) = -1;
            at(n - 1, n - 2) = -2;
            break;
        case 'D':
            for (int i = 0; i + 3 < n; ++i) link(i, i + 1);
            link(n - 3, n - 2);
            link(n - 3, n - 1);
            break;
        case 'E':  // 1-3-4-5-6-7-8 with 2 attached to 4
            link(0, 2);
            link(1, 3);
            for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
            break;
        case 'F':  // 1-2=>3-4, alpha_3 and alpha_4 short
            link(0, 1);
            at(1, 2) = -2;
            at(2, 1) = -1;
            link(2, 3);
            break;
        case 'G':  // alpha_1 short, alpha_2 long
            at(0, 1) = -1;
            at(1, 0) = -3;
            break;
    }
    return c;
}

}  // namespace

RootSystem RootSystem::build(char family, int rank) {
    require_valid(family, rank);
    RootSystem rs;
    rs.family_ = family;
    rs.rank_ = rank;
    rs.cartan_ = cartan_matrix(family, rank);
    rs.close_positive_roots();
    rs.build_tables();
    return rs;
}

std::string RootSystem::type_name() const { return std::string(1, family_) + std::to_string(rank_); }

void RootSystem::close_positive_roots() {
    const int n = rank_;
    // Every positive root is reached from a simple root by simple reflections
    // that raise the height, so closure from Delta yields Phi+.
    std::set<std::vector<int>> seen;
    std::deque<std::vector<int>> queue;
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i)] = 1;
        seen.insert(e);
        queue.push_back(std::move(e));
    }
    while (!queue.empty()) {
        std::vector<int> a = std::move(queue.front());
        queue.pop_front();
        for (int i = 0; i < n; ++i) {
            int pairing = 0;
            for (int j = 0; j < n; ++j) pairing += a[static_cast<std::size_t>(j)] * cartan(j, i);
            if (pairing == 0) continue;
            std::vector<int> b = a;
            b[static_cast<std::size_t>(i)] -= pairing;
            if (b[static_cast<std::size_t>(i)] < 0) continue;  // only a == alpha_i reflects to a negative root
            if (seen.insert(b).second) queue.push_back(std::move(b));
        }
    }

    roots_.clear();
    for (const auto& c : seen) roots_.push_back(make_root(c));
    std::stable_sort(roots_.begin(), roots_.end(), [](const Root& x, const Root& y) {
        if (x.height != y.height) return x.height < y.height;
        return x.coeffs < y.coeffs;
    });
    index_.clear();
    for (std::size_t k = 0; k < roots_.size(); ++k) index_[roots_[k].coeffs] = static_cast<int>(k);
}

void RootSystem::build_tables() {
    const int n = rank_;
    const std::size_t N = roots_.size();

    simple_idx_.assign(static_cast<std::size_t>(n), -1);
    support_.assign(N, 0);
    for (std::size_t k = 0; k < N; ++k) {
        const auto& c = roots_[k].coeffs;
        for (int i = 0; i < n; ++i)
            if (c[static_cast<std::size_t>(i)] != 0) support_[k] |= std::uint64_t{1} << i;
        if (roots_[k].height == 1)
            for (int i = 0; i < n; ++i)
                if (c[static_cast<std::size_t>(i)] == 1) simple_idx_[static_cast<std::size_t>(i)] = static_cast<int>(k);
    }

    reflect_.assign(static_cast<std::size_t>(n) * N, -1);
    for (int i = 0; i < n; ++i)
        for (std::size_t k = 0; k < N; ++k) {
            Root image = reflect_simple(i, roots_[k]);
            if (image.height > 0) reflect_[static_cast<std::size_t>(i) * N + k] = *index_of(image.coeffs);
        }

    sum_.assign(N * N, -1);
    std::vector<int> buf(static_cast<std::size_t>(n));
    for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = 0; b < N; ++b) {
            for (int i = 0; i < n; ++i)
                buf[static_cast<std::size_t>(i)] = roots_[a].coeffs[static_cast<std::size_t>(i)] + roots_[b].coeffs[static_cast<std::size_t>(i)];
            if (auto idx = index_of(buf)) sum_[a * N + b] = *idx;
        }

    below_.assign(N, RootSet(N));
    for (std::size_t b = 0; b < N; ++b)
        for (std::size_t a = 0; a < b; ++a)  // predecessors have smaller canonical index
            if (leq(static_cast<int>(a), static_cast<int>(b))) below_[b].insert(static_cast<int>(a));
}

std::optional<int> RootSystem::index_of(const std::vector<int>& coeffs) const {
    auto it = index_.find(coeffs);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool RootSystem::is_root(const std::vector<int>& coeffs) const {
    if (coeffs.size() != static_cast<std::size_t>(rank_)) return false;
    if (index_.count(coeffs)) return true;
    std::vector<int> neg(coeffs.size());
    std::transform(coeffs.begin(), coeffs.end(), neg.begin(), [](int x) { return -x; });
    return index_.count(neg) > 0;
}

Root RootSystem::reflect_simple(int i, const Root& alpha) const {
    if (i < 0 || i >= rank_) throw Error(ErrorKind::InvalidArgs, "simple index out of range: " + std::to_string(i));
    if (!is_root(alpha.coeffs)) throw Error(ErrorKind::NotARoot, "vector is not a root of " + type_name());
    int pairing = 0;
    for (int j = 0; j < rank_; ++j) pairing += alpha.coeffs[static_cast<std::size_t>(j)] * cartan(j, i);
    std::vector<int> out = alpha.coeffs;
    out[static_cast<std::size_t>(i)] -= pairing;
    return make_root(std::move(out));
}

bool RootSystem::leq(const Root& alpha, const Root& beta, const ThetaSet& theta) const {
    for (int i = 0; i < rank_; ++i) {
        int d = beta.coeffs[static_cast<std::size_t>(i)] - alpha.coeffs[static_cast<std::size_t>(i)];
        if (d < 0) return false;
        if (d > 0 && !theta.empty() && !theta.contains(i)) return false;
    }
    return true;
}

bool RootSystem::leq(int a, int b, const ThetaSet& theta) const { return leq(root(a), root(b), theta); }

RootSet RootSystem::phi_theta_plus(const ThetaSet& theta) const {
    RootSet out(roots_.size());
    for (std::size_t k = 0; k < roots_.size(); ++k)
        if ((support_[k] & ~theta.mask()) == 0) out.insert(static_cast<int>(k));
    return out;
}

double RootSystem::weyl_group_order() const {
    auto factorial = [](int m) {
        double f = 1;
        for (int i = 2; i <= m; ++i) f *= i;
        return f;
    };
    const int n = rank_;
    switch (family_) {
        case 'A': return factorial(n + 1);
        case 'B':
        case 'C': return std::ldexp(factorial(n), n);
        case 'D': return std::ldexp(factorial(n), n - 1);
        case 'E': return n == 6 ? 51840.0 : n == 7 ? 2903040.0 : 696729600.0;
        case 'F': return 1152.0;
        default: return 12.0;
    }
}

}  // namespace hess
