#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <vector>

namespace cyclecover {

// Fixed-width set of edge indices. All cover/search machinery lives on
// these; 192 bits is enough for flower snarks up to J31.
class EdgeSet {
public:
    static constexpr int kMaxEdges = 192;

    constexpr EdgeSet() : words_{0, 0, 0} {}

    static EdgeSet of(std::initializer_list<int> edges) {
        EdgeSet s;
        for (int e : edges) s.add(e);
        return s;
    }

    void add(int e) { words_[e >> 6] |= (std::uint64_t{1} << (e & 63)); }
    void remove(int e) { words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }
    bool contains(int e) const {
        return (words_[e >> 6] >> (e & 63)) & 1;
    }

    int count() const {
        return std::popcount(words_[0]) + std::popcount(words_[1]) +
               std::popcount(words_[2]);
    }
    bool empty() const { return !(words_[0] | words_[1] | words_[2]); }

    EdgeSet operator&(const EdgeSet& o) const {
        return EdgeSet{words_[0] & o.words_[0], words_[1] & o.words_[1],
                       words_[2] & o.words_[2]};
    }
    EdgeSet operator|(const EdgeSet& o) const {
        return EdgeSet{words_[0] | o.words_[0], words_[1] | o.words_[1],
                       words_[2] | o.words_[2]};
    }
    EdgeSet operator^(const EdgeSet& o) const {
        return EdgeSet{words_[0] ^ o.words_[0], words_[1] ^ o.words_[1],
                       words_[2] ^ o.words_[2]};
    }
    EdgeSet& operator|=(const EdgeSet& o) { return *this = *this | o; }
    EdgeSet& operator&=(const EdgeSet& o) { return *this = *this & o; }
    EdgeSet& operator^=(const EdgeSet& o) { return *this = *this ^ o; }

    friend bool operator==(const EdgeSet&, const EdgeSet&) = default;
    // Lexicographic by sorted edge indices == numeric order on the bitmap
    // read from the low word up.
    friend std::strong_ordering operator<=>(const EdgeSet& a, const EdgeSet& b) {
        for (int w = 2; w >= 0; --w)
            if (a.words_[w] != b.words_[w]) return a.words_[w] <=> b.words_[w];
        return std::strong_ordering::equal;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for_each([&](int e) { out.push_back(e); });
        return out;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (int w = 0; w < 3; ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                int b = std::countr_zero(bits);
                f(w * 64 + b);
                bits &= bits - 1;
            }
        }
    }

    std::size_t hash() const {
        std::uint64_t h = 0x9e3779b97f4a7c15ull;
        for (auto w : words_) {
            h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }

private:
    constexpr EdgeSet(std::uint64_t a, std::uint64_t b, std::uint64_t c)
        : words_{a, b, c} {}
    std::array<std::uint64_t, 3> words_;
};

}  // namespace cyclecover
