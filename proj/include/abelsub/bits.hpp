#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "abelsub/kernels.hpp"

namespace abelsub {

// Fixed-width bit set over element indices [0, size). Comparison is
// lexicographic on the word vector, which gives the deterministic orders
// used for sorting member sets.
class Bits {
public:
    Bits() = default;
    explicit Bits(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const { return size_; }
    std::size_t word_count() const { return words_.size(); }

    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { words_[i >> 6] |= kernels::Word{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(kernels::Word{1} << (i & 63)); }

    std::size_t count() const { return kernels::active().popcount(words_.data(), words_.size()); }
    bool none() const { return count() == 0; }

    bool is_subset_of(const Bits& other) const {
        return kernels::active().is_subset(words_.data(), other.words_.data(), words_.size());
    }

    Bits& operator|=(const Bits& other) {
        kernels::active().or_into(words_.data(), other.words_.data(), words_.size());
        return *this;
    }
    Bits& operator&=(const Bits& other) {
        kernels::active().and_into(words_.data(), other.words_.data(), words_.size());
        return *this;
    }
    friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
    friend Bits operator&(Bits a, const Bits& b) { return a &= b; }

    std::size_t intersection_count(const Bits& other) const {
        return kernels::active().and_popcount(words_.data(), other.words_.data(), words_.size());
    }

    friend bool operator==(const Bits& a, const Bits& b) {
        return a.size_ == b.size_ && kernels::active().equal(a.words_.data(), b.words_.data(), a.words_.size());
    }
    friend std::strong_ordering operator<=>(const Bits& a, const Bits& b) {
        if (auto c = a.size_ <=> b.size_; c != 0) return c;
        return a.words_ <=> b.words_;
    }

    // Indices of set bits in increasing order.
    std::vector<std::size_t> indices() const {
        std::vector<std::size_t> out;
        for (std::size_t w = 0; w < words_.size(); ++w) {
            kernels::Word word = words_[w];
            while (word) {
                int b = __builtin_ctzll(word);
                out.push_back(w * 64 + static_cast<std::size_t>(b));
                word &= word - 1;
            }
        }
        return out;
    }

    const kernels::Word* data() const { return words_.data(); }
    kernels::Word* data() { return words_.data(); }

private:
    std::size_t size_ = 0;
    std::vector<kernels::Word> words_;
};

}  // namespace abelsub
