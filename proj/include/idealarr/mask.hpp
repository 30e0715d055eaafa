#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace idealarr {

/// Fixed-capacity bitset used for sets of positive roots and sets of
/// hyperplanes. 256 bits covers every root system we build (E8 has 120
/// positive roots) and every arrangement the lattice engine accepts.
class Mask {
public:
    static constexpr std::size_t kWords = 4;
    static constexpr std::size_t kCapacity = kWords * 64;

    constexpr Mask() = default;

    static Mask first_n(std::size_t n) {
        Mask m;
        for (std::size_t i = 0; i < n; ++i) m.set(i);
        return m;
    }

    constexpr void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    constexpr void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    constexpr bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }

    constexpr bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }
    constexpr bool any() const { return !empty(); }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    /// Index of the lowest set bit, or kCapacity when empty.
    std::size_t first() const {
        for (std::size_t k = 0; k < kWords; ++k)
            if (words_[k]) return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
        return kCapacity;
    }

    constexpr bool subset_of(const Mask& o) const {
        for (std::size_t k = 0; k < kWords; ++k)
            if (words_[k] & ~o.words_[k]) return false;
        return true;
    }
    constexpr bool intersects(const Mask& o) const {
        for (std::size_t k = 0; k < kWords; ++k)
            if (words_[k] & o.words_[k]) return true;
        return false;
    }

    constexpr Mask& operator|=(const Mask& o) {
        for (std::size_t k = 0; k < kWords; ++k) words_[k] |= o.words_[k];
        return *this;
    }
    constexpr Mask& operator&=(const Mask& o) {
        for (std::size_t k = 0; k < kWords; ++k) words_[k] &= o.words_[k];
        return *this;
    }
    /// Set difference.
    constexpr Mask& operator-=(const Mask& o) {
        for (std::size_t k = 0; k < kWords; ++k) words_[k] &= ~o.words_[k];
        return *this;
    }
    friend constexpr Mask operator|(Mask a, const Mask& b) { return a |= b; }
    friend constexpr Mask operator&(Mask a, const Mask& b) { return a &= b; }
    friend constexpr Mask operator-(Mask a, const Mask& b) { return a -= b; }
    friend constexpr bool operator==(const Mask&, const Mask&) = default;
    friend constexpr auto operator<=>(const Mask&, const Mask&) = default;

    /// Calls f(i) for every set bit in increasing order.
    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t k = 0; k < kWords; ++k) {
            std::uint64_t w = words_[k];
            while (w) {
                f(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<std::size_t> indices() const {
        std::vector<std::size_t> out;
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

    std::size_t hash() const {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (auto w : words_) {
            h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }

    const std::array<std::uint64_t, kWords>& words() const { return words_; }

private:
    std::array<std::uint64_t, kWords> words_{};
};

struct MaskHash {
    std::size_t operator()(const Mask& m) const noexcept { return m.hash(); }
};

}  // namespace idealarr
