#ifndef LAYERBOUND_DYNAMIC_BITSET_HPP
#define LAYERBOUND_DYNAMIC_BITSET_HPP

#include <cstdint>
#include <cstddef>
#include <vector>

namespace layerbound {

// Fixed-capacity bitset sized at runtime. Used for vertex/edge sets in the
// pathwidth and node-search state machines, where sets must be hashable.
class DynamicBitset {
public:
    DynamicBitset() = default;
    explicit DynamicBitset(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    int size() const { return nbits_; }

    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    int count() const {
        int c = 0;
        for (std::uint64_t w : words_) c += __builtin_popcountll(w);
        return c;
    }

    bool none() const {
        for (std::uint64_t w : words_)
            if (w) return false;
        return true;
    }

    bool all() const { return count() == nbits_; }

    friend bool operator==(const DynamicBitset& a, const DynamicBitset& b) {
        return a.nbits_ == b.nbits_ && a.words_ == b.words_;
    }

    std::size_t hash() const {
        std::size_t h = static_cast<std::size_t>(nbits_) * 0x9e3779b97f4a7c15ULL;
        for (std::uint64_t w : words_) {
            h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }

private:
    int nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

struct DynamicBitsetHash {
    std::size_t operator()(const DynamicBitset& b) const { return b.hash(); }
};

}  // namespace layerbound

#endif
