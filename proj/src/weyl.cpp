#include "hess/weyl.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "hess/errors.hpp"

namespace hess {

namespace {

std::size_t at(int n, int r, int c) { return static_cast<std::size_t>(r * n + c); }

bool is_negative(const std::vector<int>& v) {
    for (int x : v)
        if (x != 0) return x < 0;
    return false;
}

// w <- s_i w, updating both the matrix and its inverse.
void left_multiply_simple(const RootSystem& rs, WeylElement& w, int i) {
    const int n = w.rank;
    for (int c = 0; c < n; ++c) {
        int pairing = 0;
        for (int j = 0; j < n; ++j) pairing += rs.cartan(j, i) * w.action[at(n, j, c)];
        w.action[at(n, i, c)] = static_cast<std::int8_t>(w.action[at(n, i, c)] - pairing);
    }
    // inverse <- inverse * s_i: column j gains -cartan(j, i) * column i.
    std::vector<int> col_i(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) col_i[static_cast<std::size_t>(r)] = w.inverse[at(n, r, i)];
    for (int j = 0; j < n; ++j) {
        const int c = rs.cartan(j, i);
        if (c == 0) continue;
        for (int r = 0; r < n; ++r)
            w.inverse[at(n, r, j)] = static_cast<std::int8_t>(w.inverse[at(n, r, j)] - c * col_i[static_cast<std::size_t>(r)]);
    }
}

std::vector<int> column(const std::vector<std::int8_t>& m, int n, int c) {
    std::vector<int> out(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) out[static_cast<std::size_t>(r)] = m[at(n, r, c)];
    return out;
}

std::vector<int> negated(std::vector<int> v) {
    for (int& x : v) x = -x;
    return v;
}

std::vector<int> reduced_word(const RootSystem& rs, WeylElement w) {
    std::vector<int> word;
    const int n = w.rank;
    for (;;) {
        int descent = -1;
        for (int i = 0; i < n && descent < 0; ++i)
            if (is_negative(column(w.inverse, n, i))) descent = i;
        if (descent < 0) break;
        left_multiply_simple(rs, w, descent);
        word.push_back(descent);
    }
    return word;
}

void finalize(const RootSystem& rs, WeylElement& w) {
    w.inversions = inversion_set(rs, w);
    w.word = reduced_word(rs, w);
}

std::string key_of(const WeylElement& w) {
    return std::string(reinterpret_cast<const char*>(w.action.data()), w.action.size());
}

void check_order_against_cap(const RootSystem& rs, std::size_t cap) {
    if (rs.weyl_group_order() > static_cast<double>(cap))
        throw CapExceeded("|W(" + rs.type_name() + ")| exceeds the element cap of " + std::to_string(cap), cap);
}

// Breadth-first search by left multiplication. A candidate s_i w is kept
// when the length goes up and the new inversion w^{-1}(alpha_i) passes keep().
template <typename Keep>
std::vector<WeylElement> left_bfs(const RootSystem& rs, std::uint64_t generators, std::size_t cap, Keep keep) {
    std::vector<WeylElement> out;
    out.push_back(identity_element(rs));
    std::unordered_set<std::string> seen{key_of(out.front())};
    std::size_t level_begin = 0;
    const int n = rs.rank();
    while (level_begin < out.size()) {
        const std::size_t level_end = out.size();
        for (std::size_t e = level_begin; e < level_end; ++e) {
            for (int i = 0; i < n; ++i) {
                if (!((generators >> i) & 1u)) continue;
                const std::vector<int> pre = column(out[e].inverse, n, i);
                if (is_negative(pre)) continue;
                const int new_inv = *rs.index_of(pre);
                if (!keep(new_inv)) continue;
                WeylElement next = out[e];
                left_multiply_simple(rs, next, i);
                if (!seen.insert(key_of(next)).second) continue;
                next.word.insert(next.word.begin(), i);
                next.inversions.insert(new_inv);
                out.push_back(std::move(next));
                if (out.size() > cap)
                    throw CapExceeded("Weyl group enumeration of " + rs.type_name() + " exceeded cap of " +
                                          std::to_string(cap) + " elements",
                                      cap);
            }
        }
        level_begin = level_end;
    }
    return out;
}

}  // namespace

std::vector<int> WeylElement::apply(const std::vector<int>& coeffs) const {
    std::vector<int> out(static_cast<std::size_t>(rank), 0);
    for (int r = 0; r < rank; ++r)
        for (int c = 0; c < rank; ++c) out[static_cast<std::size_t>(r)] += action[at(rank, r, c)] * coeffs[static_cast<std::size_t>(c)];
    return out;
}

std::vector<int> WeylElement::apply_inverse(const std::vector<int>& coeffs) const {
    std::vector<int> out(static_cast<std::size_t>(rank), 0);
    for (int r = 0; r < rank; ++r)
        for (int c = 0; c < rank; ++c) out[static_cast<std::size_t>(r)] += inverse[at(rank, r, c)] * coeffs[static_cast<std::size_t>(c)];
    return out;
}

WeylElement identity_element(const RootSystem& rs) {
    WeylElement w;
    w.rank = rs.rank();
    const int n = w.rank;
    w.action.assign(static_cast<std::size_t>(n * n), 0);
    for (int i = 0; i < n; ++i) w.action[at(n, i, i)] = 1;
    w.inverse = w.action;
    w.inversions = rs.empty_set();
    return w;
}

WeylElement simple_reflection(const RootSystem& rs, int i) {
    if (i < 0 || i >= rs.rank()) throw Error(ErrorKind::InvalidArgs, "simple index out of range: " + std::to_string(i));
    WeylElement w = identity_element(rs);
    left_multiply_simple(rs, w, i);
    finalize(rs, w);
    return w;
}

WeylElement multiply(const RootSystem& rs, const WeylElement& a, const WeylElement& b) {
    const int n = rs.rank();
    WeylElement w;
    w.rank = n;
    w.action.assign(static_cast<std::size_t>(n * n), 0);
    w.inverse.assign(static_cast<std::size_t>(n * n), 0);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            int x = 0, y = 0;
            for (int k = 0; k < n; ++k) {
                x += a.action[at(n, r, k)] * b.action[at(n, k, c)];
                y += b.inverse[at(n, r, k)] * a.inverse[at(n, k, c)];
            }
            w.action[at(n, r, c)] = static_cast<std::int8_t>(x);
            w.inverse[at(n, r, c)] = static_cast<std::int8_t>(y);
        }
    finalize(rs, w);
    return w;
}

WeylElement from_word(const RootSystem& rs, const std::vector<int>& word) {
    WeylElement w = identity_element(rs);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (*it < 0 || *it >= rs.rank()) throw Error(ErrorKind::InvalidArgs, "simple index out of range: " + std::to_string(*it));
        left_multiply_simple(rs, w, *it);
    }
    finalize(rs, w);
    return w;
}

RootSet inversion_set(const RootSystem& rs, const WeylElement& w) {
    RootSet out = rs.empty_set();
    for (int k = 0; k < rs.num_positive(); ++k)
        if (is_negative(w.apply(rs.root(k).coeffs))) out.insert(k);
    return out;
}

WeylGroup enumerate_weyl_group(const RootSystem& rs, std::size_t cap) {
    check_order_against_cap(rs, cap);
    WeylGroup g;
    g.rs = &rs;
    g.elements = left_bfs(rs, ThetaSet::all(rs.rank()).mask(), cap, [](int) { return true; });
    return g;
}

WeylGroup enumerate_parabolic_subgroup(const RootSystem& rs, const ThetaSet& theta, std::size_t cap) {
    theta.validate(rs);
    WeylGroup g;
    g.rs = &rs;
    g.elements = left_bfs(rs, theta.mask(), cap, [](int) { return true; });
    return g;
}

double parabolic_order(const RootSystem& rs, const ThetaSet& theta) {
    // |W_Theta| is the product of (e + 1) over the exponents of Phi+_Theta,
    // which are the dual partition of its height distribution.
    std::vector<int> lambda;
    rs.phi_theta_plus(theta).for_each([&](int k) {
        const auto h = static_cast<std::size_t>(rs.height(k));
        if (lambda.size() < h) lambda.resize(h, 0);
        ++lambda[h - 1];
    });
    std::vector<int> exponents(lambda.empty() ? 0 : static_cast<std::size_t>(lambda.front()), 0);
    for (int l : lambda)
        for (int j = 0; j < l; ++j) ++exponents[static_cast<std::size_t>(j)];
    double order = 1;
    for (int e : exponents) order *= e + 1;
    return order;
}

std::vector<WeylElement> enumerate_quotient(const RootSystem& rs, const ThetaSet& theta, std::size_t cap) {
    theta.validate(rs);
    if (rs.weyl_group_order() / parabolic_order(rs, theta) > static_cast<double>(cap))
        throw CapExceeded("|W^Theta| for " + rs.type_name() + " exceeds the element cap of " + std::to_string(cap), cap);
    const RootSet forbidden = rs.phi_theta_plus(theta);
    return left_bfs(rs, ThetaSet::all(rs.rank()).mask(), cap,
                    [&](int new_inversion) { return !forbidden.contains(new_inversion); });
}

std::vector<WeylElement> enumerate_quotient(const WeylGroup& group, const ThetaSet& theta) {
    theta.validate(*group.rs);
    const RootSet forbidden = group.rs->phi_theta_plus(theta);
    std::vector<WeylElement> out;
    for (const auto& w : group.elements)
        if (!w.inversions.intersects(forbidden)) out.push_back(w);
    return out;
}

bool in_quotient_by_length(const RootSystem& rs, const WeylElement& w, const ThetaSet& theta) {
    const std::size_t len = inversion_set(rs, w).count();
    for (int i : theta.indices()) {
        WeylElement ws = multiply(rs, w, simple_reflection(rs, i));
        if (!(len < inversion_set(rs, ws).count())) return false;
    }
    return true;
}

std::optional<int> cell_condition(const RootSystem& rs, const WeylElement& w, const RootSet& ideal) {
    const int n = rs.rank();
    for (int i = 0; i < n; ++i) {
        std::vector<int> pre = column(w.inverse, n, i);
        if (!is_negative(pre)) continue;
        auto idx = rs.index_of(negated(std::move(pre)));
        if (!idx || !ideal.contains(*idx)) return std::nullopt;
    }
    return static_cast<int>((w.inversions & ideal).count());
}

std::pair<WeylElement, WeylElement> coset_decompose(const RootSystem& rs, const WeylElement& w,
                                                    const ThetaSet& theta) {
    theta.validate(rs);
    // Strip right descents in theta: u <- u s_i, v <- s_i v.
    WeylElement u = w;
    std::vector<int> v_word;
    for (;;) {
        int descent = -1;
        for (int i : theta.indices())
            if (is_negative(column(u.action, rs.rank(), i))) {
                descent = i;
                break;
            }
        if (descent < 0) break;
        u = multiply(rs, u, simple_reflection(rs, descent));
        v_word.insert(v_word.begin(), descent);
    }
    return {u, from_word(rs, v_word)};
}

}  // namespace hess
