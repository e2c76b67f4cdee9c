#ifndef RGC_BITSET_HPP
#define RGC_BITSET_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace rgc {

// Fixed-capacity bitset sized at construction. Candidate sets in the
// homomorphism search and color sets in the EMSOL encoding are indexed by
// target-graph nodes, so the capacity is always known up front.
class Bitset {
public:
    Bitset() = default;

    explicit Bitset(int capacity, bool all_set = false) :
        size_(capacity),
        words_((capacity + 63) / 64, all_set ? ~UINT64_C(0) : 0)
    {
        if (all_set)
            trim();
    }

    int capacity() const { return size_; }

    void set(int i) { words_[i >> 6] |= UINT64_C(1) << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~(UINT64_C(1) << (i & 63)); }
    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    bool any() const
    {
        for (auto w : words_)
            if (w)
                return true;
        return false;
    }

    bool none() const { return ! any(); }

    int count() const
    {
        int n = 0;
        for (auto w : words_)
            n += std::popcount(w);
        return n;
    }

    Bitset & operator&=(const Bitset & other)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= other.words_[i];
        return *this;
    }

    // First set bit at index >= from, or -1.
    int next(int from = 0) const
    {
        if (from >= size_)
            return -1;
        std::size_t wi = from >> 6;
        std::uint64_t w = words_[wi] & (~UINT64_C(0) << (from & 63));
        while (true) {
            if (w)
                return int(wi * 64 + std::countr_zero(w));
            if (++wi >= words_.size())
                return -1;
            w = words_[wi];
        }
    }

    bool operator==(const Bitset &) const = default;

private:
    void trim()
    {
        int spare = int(words_.size() * 64) - size_;
        if (spare > 0 && ! words_.empty())
            words_.back() &= ~UINT64_C(0) >> spare;
    }

    int size_ = 0;
    std::vector<std::uint64_t> words_;
};

}

#endif
