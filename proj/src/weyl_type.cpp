#include "hess/weyl_type.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "hess/errors.hpp"

namespace hess {

void sort_by_size_then_bits(std::vector<RootSet>& sets) {
    std::sort(sets.begin(), sets.end(), [](const RootSet& a, const RootSet& b) {
        const auto ca = a.count(), cb = b.count();
        if (ca != cb) return ca < cb;
        return a < b;
    });
}

bool is_weyl_type(const RootSystem& rs, const RootSet& y, const RootSet& ideal) {
    if (!y.is_subset_of(ideal)) throw Error(ErrorKind::NotSubset, "Y is not a subset of I");
    const std::vector<int> members = ideal.indices();
    for (std::size_t p = 0; p < members.size(); ++p)
        for (std::size_t r = p + 1; r < members.size(); ++r) {
            const int a = members[p], b = members[r];
            const int c = rs.sum_index(a, b);
            if (c < 0 || !ideal.contains(c)) continue;
            const bool ya = y.contains(a), yb = y.contains(b), yc = y.contains(c);
            if (ya && yb && !yc) return false;
            if (!ya && !yb && yc) return false;
        }
    return true;
}

std::vector<RootSet> weyl_type_subsets_brute_force(const RootSystem& rs, const RootSet& ideal,
                                                   const ThetaSet& theta, int max_size) {
    const RootSet free = ideal - rs.phi_theta_plus(theta);
    const std::vector<int> members = free.indices();
    const int m = static_cast<int>(members.size());
    if (m > max_size || m > 30)
        throw CapExceeded("brute force over " + std::to_string(m) + " roots exceeds the limit of " +
                              std::to_string(max_size),
                          static_cast<std::size_t>(max_size));

    // Sum triples a + b = c inside I, in local bit positions. Roots of
    // Phi+_Theta never belong to Y, so they sit at a constant "absent" bit.
    const std::vector<int> all = ideal.indices();
    std::vector<int> local(static_cast<std::size_t>(rs.num_positive()), -1);
    for (int t = 0; t < m; ++t) local[static_cast<std::size_t>(members[static_cast<std::size_t>(t)])] = t;
    struct Triple {
        std::uint32_t a, b, c;  // single-bit masks, 0 for a root of Phi+_Theta
    };
    std::vector<Triple> triples;
    auto bit = [&](int root) -> std::uint32_t {
        const int l = local[static_cast<std::size_t>(root)];
        return l < 0 ? 0u : (std::uint32_t{1} << l);
    };
    for (std::size_t p = 0; p < all.size(); ++p)
        for (std::size_t r = p + 1; r < all.size(); ++r) {
            const int c = rs.sum_index(all[p], all[r]);
            if (c >= 0 && ideal.contains(c)) triples.push_back({bit(all[p]), bit(all[r]), bit(c)});
        }

    std::vector<RootSet> out;
    const std::uint32_t limit = std::uint32_t{1} << m;
    for (std::uint32_t y = 0; y < limit; ++y) {
        bool ok = true;
        for (const auto& t : triples) {
            const bool ya = y & t.a, yb = y & t.b, yc = y & t.c;
            if ((ya && yb && !yc) || (!ya && !yb && yc)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        RootSet s = rs.empty_set();
        for (int t = 0; t < m; ++t)
            if ((y >> t) & 1u) s.insert(members[static_cast<std::size_t>(t)]);
        out.push_back(std::move(s));
    }
    sort_by_size_then_bits(out);
    return out;
}

std::vector<RootSet> weyl_type_subsets_by_bijection(CellEnumerator& cells, const RootSet& ideal,
                                                    const ThetaSet& theta) {
    std::vector<RootSet> out = cells.admissible(ideal, theta);
    sort_by_size_then_bits(out);
    return out;
}

std::vector<RootSet> enumerate_weyl_type_theta(CellEnumerator& cells, const RootSet& ideal, const ThetaSet& theta,
                                               const Limits& limits) {
    const RootSystem& rs = cells.root_system();
    const auto free = (ideal - rs.phi_theta_plus(theta)).count();
    if (static_cast<int>(free) <= limits.brute_force_max)
        return weyl_type_subsets_brute_force(rs, ideal, theta, limits.brute_force_max);
    return weyl_type_subsets_by_bijection(cells, ideal, theta);
}

std::vector<RootSet> enumerate_weyl_type_theta(const RootSystem& rs, const RootSet& ideal, const ThetaSet& theta,
                                               const Limits& limits) {
    const auto free = (ideal - rs.phi_theta_plus(theta)).count();
    if (static_cast<int>(free) <= limits.brute_force_max)
        return weyl_type_subsets_brute_force(rs, ideal, theta, limits.brute_force_max);
    CellEnumerator cells(rs, limits);
    return weyl_type_subsets_by_bijection(cells, ideal, theta);
}

RootSet eta_theta(const RootSystem& rs, const WeylElement& w, const RootSet& ideal, const ThetaSet& theta) {
    if (w.inversions.intersects(rs.phi_theta_plus(theta)))
        throw Error(ErrorKind::DomainViolation, "w is not a minimal coset representative for Theta");
    if (!cell_condition(rs, w, ideal)) throw Error(ErrorKind::DomainViolation, "w fails the cell condition for I");
    return w.inversions & ideal;
}

}  // namespace hess
