#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace hess {

// Membership set over positive-root indices of one RootSystem. Used for
// lower ideals, Theta-ideals, Phi+_Theta, inversion sets and Weyl-type
// subsets alike; it carries no validity claim of its own.
class RootSet {
public:
    RootSet() = default;
    explicit RootSet(std::size_t universe)
        : size_(universe), words_((universe + 63) / 64, 0) {}
    RootSet(std::size_t universe, std::initializer_list<int> members)
        : RootSet(universe) {
        for (int m : members) insert(m);
    }

    static RootSet full(std::size_t universe) {
        RootSet s(universe);
        for (std::size_t i = 0; i < universe; ++i) s.insert(static_cast<int>(i));
        return s;
    }
    static RootSet from_indices(std::size_t universe, const std::vector<int>& idx) {
        RootSet s(universe);
        for (int i : idx) s.insert(i);
        return s;
    }

    std::size_t universe() const noexcept { return size_; }

    bool contains(int i) const noexcept {
        return (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
    }
    void insert(int i) noexcept { words_[static_cast<std::size_t>(i) >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void erase(int i) noexcept { words_[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool empty() const noexcept {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    bool is_subset_of(const RootSet& other) const noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & ~other.words_[k]) return false;
        return true;
    }
    bool intersects(const RootSet& other) const noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & other.words_[k]) return true;
        return false;
    }

    RootSet& operator|=(const RootSet& o) noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }
    RootSet& operator&=(const RootSet& o) noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }
    // set difference
    RootSet& operator-=(const RootSet& o) noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
        return *this;
    }
    friend RootSet operator|(RootSet a, const RootSet& b) { return a |= b; }
    friend RootSet operator&(RootSet a, const RootSet& b) { return a &= b; }
    friend RootSet operator-(RootSet a, const RootSet& b) { return a -= b; }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w) {
                int bit = std::countr_zero(w);
                f(static_cast<int>(k * 64 + static_cast<std::size_t>(bit)));
                w &= w - 1;
            }
        }
    }

    std::vector<int> indices() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

    const std::vector<std::uint64_t>& words() const noexcept { return words_; }

    bool operator==(const RootSet&) const = default;

    // Bit-vector order: the set is read as a binary number with index 0 as
    // the least significant bit.
    std::strong_ordering operator<=>(const RootSet& o) const noexcept {
        if (auto c = size_ <=> o.size_; c != 0) return c;
        for (std::size_t k = words_.size(); k-- > 0;)
            if (auto c = words_[k] <=> o.words_[k]; c != 0) return c;
        return std::strong_ordering::equal;
    }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

struct RootSetHash {
    std::size_t operator()(const RootSet& s) const noexcept {
        std::size_t h = s.universe();
        for (auto w : s.words()) h = h * 0x9E3779B97F4A7C15ull ^ std::hash<std::uint64_t>{}(w);
        return h;
    }
};

}  // namespace hess
