#include "abelsub/kernels.hpp"

#include <bit>

namespace abelsub::kernels {
namespace {

void or_into_scalar(Word* dst, const Word* src, std::size_t words) {
    for (std::size_t i = 0; i < words; ++i) dst[i] |= src[i];
}

void and_into_scalar(Word* dst, const Word* src, std::size_t words) {
    for (std::size_t i = 0; i < words; ++i) dst[i] &= src[i];
}

bool is_subset_scalar(const Word* a, const Word* b, std::size_t words) {
    for (std::size_t i = 0; i < words; ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

std::size_t popcount_scalar(const Word* a, std::size_t words) {
    std::size_t n = 0;
    for (std::size_t i = 0; i < words; ++i) n += std::popcount(a[i]);
    return n;
}

std::size_t and_popcount_scalar(const Word* a, const Word* b, std::size_t words) {
    std::size_t n = 0;
    for (std::size_t i = 0; i < words; ++i) n += std::popcount(a[i] & b[i]);
    return n;
}

bool equal_scalar(const Word* a, const Word* b, std::size_t words) {
    for (std::size_t i = 0; i < words; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

}  // namespace

const KernelTable& scalar_table() {
    static const KernelTable table{"scalar",          or_into_scalar,      and_into_scalar,
                                   is_subset_scalar,  popcount_scalar,     and_popcount_scalar,
                                   equal_scalar};
    return table;
}

}  // namespace abelsub::kernels
