#include "hess/type_a.hpp"

#include <algorithm>
#include <string>

#include "hess/errors.hpp"
#include "hess/ideal.hpp"

namespace hess {

TypeAIndex::TypeAIndex(const RootSystem& rs) : n_(rs.rank() + 1) {
    if (rs.family() != 'A') throw Error(ErrorKind::InvalidArgs, "type A index requested for " + rs.type_name());
    idx_.assign(static_cast<std::size_t>((n_ + 1) * (n_ + 1)), -1);
    for (int i = 1; i <= n_; ++i)
        for (int j = i + 1; j <= n_; ++j) idx_[static_cast<std::size_t>(i * (n_ + 1) + j)] = type_a_root_index(rs, i, j);
}

std::vector<Permutation> enumerate_type_a_quotient(int n, const ThetaSet& theta, std::size_t cap) {
    if (n < 1) throw Error(ErrorKind::InvalidArgs, "n must be positive");
    // labels[v-1] = block receiving the value v; each block takes its values
    // in increasing order, so label sequences are in bijection with W^Theta.
    std::vector<int> block_of(static_cast<std::size_t>(n));
    std::vector<int> labels;
    int block = 0;
    for (int pos = 1; pos <= n; ++pos) {
        block_of[static_cast<std::size_t>(pos - 1)] = block;
        labels.push_back(block);
        if (pos < n && !theta.contains(pos - 1)) ++block;
    }
    std::vector<int> block_start(static_cast<std::size_t>(block + 1), -1);
    for (int pos = n; pos >= 1; --pos) block_start[static_cast<std::size_t>(block_of[static_cast<std::size_t>(pos - 1)])] = pos;

    // |W^Theta| = n! / prod (block size)!, computed as a product of binomials.
    double expected = 1;
    for (int placed = 0, b = 0; b <= block; ++b) {
        const int size = static_cast<int>(std::count(labels.begin(), labels.end(), b));
        for (int i = 1; i <= size; ++i) expected = expected * (placed + i) / i;
        placed += size;
    }
    if (expected > static_cast<double>(cap))
        throw CapExceeded("|W^Theta| for type A with n = " + std::to_string(n) + " exceeds the permutation cap of " +
                              std::to_string(cap),
                          cap);

    std::vector<Permutation> out;
    out.reserve(static_cast<std::size_t>(expected + 0.5));
    std::vector<int> cursor(block_start.size());
    do {
        if (out.size() >= cap)
            throw CapExceeded("type A quotient enumeration exceeded cap of " + std::to_string(cap) + " permutations", cap);
        std::copy(block_start.begin(), block_start.end(), cursor.begin());
        Permutation w(static_cast<std::size_t>(n));
        for (int v = 1; v <= n; ++v) {
            int& pos = cursor[static_cast<std::size_t>(labels[static_cast<std::size_t>(v - 1)])];
            w[static_cast<std::size_t>(pos - 1)] = v;
            ++pos;
        }
        out.push_back(std::move(w));
    } while (std::next_permutation(labels.begin(), labels.end()));
    return out;
}

RootSet permutation_inversion_set(const TypeAIndex& index, std::size_t universe, const Permutation& w) {
    RootSet out(universe);
    const int n = index.n();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (w[static_cast<std::size_t>(i - 1)] > w[static_cast<std::size_t>(j - 1)]) out.insert(index(i, j));
    return out;
}

std::optional<int> permutation_cell_condition(const TypeAIndex& index, const Permutation& w, const RootSet& ideal) {
    const int n = index.n();
    std::vector<int> inv(static_cast<std::size_t>(n + 1));
    for (int j = 1; j <= n; ++j) inv[static_cast<std::size_t>(w[static_cast<std::size_t>(j - 1)])] = j;
    // w^{-1}(alpha_k) = x_a - x_b with a = w^{-1}(k), b = w^{-1}(k+1).
    for (int k = 1; k < n; ++k) {
        const int a = inv[static_cast<std::size_t>(k)];
        const int b = inv[static_cast<std::size_t>(k + 1)];
        if (a > b && !ideal.contains(index(b, a))) return std::nullopt;
    }
    int dim = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (w[static_cast<std::size_t>(i - 1)] > w[static_cast<std::size_t>(j - 1)] && ideal.contains(index(i, j))) ++dim;
    return dim;
}

bool type_a_cell_condition(const Permutation& w, const std::vector<int>& extended_h) {
    const int n = static_cast<int>(w.size());
    std::vector<int> inv(static_cast<std::size_t>(n + 1), 0);  // inv[0] = 0 from w(0) = 0
    for (int j = 1; j <= n; ++j) inv[static_cast<std::size_t>(w[static_cast<std::size_t>(j - 1)])] = j;
    for (int j = 1; j <= n; ++j)
        if (inv[static_cast<std::size_t>(w[static_cast<std::size_t>(j - 1)] - 1)] > extended_h[static_cast<std::size_t>(j - 1)]) return false;
    return true;
}

WeylElement permutation_to_element(const RootSystem& rs, const Permutation& w) {
    if (rs.family() != 'A' || static_cast<int>(w.size()) != rs.rank() + 1)
        throw Error(ErrorKind::InvalidArgs, "permutation size does not match " + rs.type_name());
    // w(alpha_j) = x_{w(j)} - x_{w(j+1)}; build a word by bubble sort so the
    // matrix, inverse and inversion set all come from the general path.
    Permutation p = w;
    std::vector<int> word;  // w = s_{word[0]} ... : record right multiplications
    const int n = static_cast<int>(p.size());
    for (bool swapped = true; swapped;) {
        swapped = false;
        for (int j = 0; j + 1 < n; ++j)
            if (p[static_cast<std::size_t>(j)] > p[static_cast<std::size_t>(j + 1)]) {
                std::swap(p[static_cast<std::size_t>(j)], p[static_cast<std::size_t>(j + 1)]);
                word.push_back(j);
                swapped = true;
            }
    }
    // p = w s_{word[0]} s_{word[1]} ... = id, hence w = s_{word.back()} ... s_{word[0]}.
    std::reverse(word.begin(), word.end());
    return from_word(rs, word);
}

Permutation element_to_permutation(const WeylElement& w) {
    const int n = w.rank + 1;
    Permutation p(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) p[static_cast<std::size_t>(j - 1)] = j;
    // s_i acts on values: w = s_{a} s_{b} ... applied right to left.
    for (auto it = w.word.rbegin(); it != w.word.rend(); ++it)
        for (int& v : p) {
            if (v == *it + 1) v = *it + 2;
            else if (v == *it + 2) v = *it + 1;
        }
    return p;
}

}  // namespace hess
