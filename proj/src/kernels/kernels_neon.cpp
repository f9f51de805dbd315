#include "abelsub/kernels.hpp"

#include <bit>

#if defined(__aarch64__) || defined(_M_ARM64)
#include <arm_neon.h>
#define ABELSUB_HAVE_NEON_BUILD 1
#else
#define ABELSUB_HAVE_NEON_BUILD 0
#endif

namespace abelsub::kernels {

#if ABELSUB_HAVE_NEON_BUILD
namespace {

void or_into_neon(Word* dst, const Word* src, std::size_t words) {
    std::size_t i = 0;
    for (; i + 2 <= words; i += 2) vst1q_u64(dst + i, vorrq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
    for (; i < words; ++i) dst[i] |= src[i];
}

void and_into_neon(Word* dst, const Word* src, std::size_t words) {
    std::size_t i = 0;
    for (; i + 2 <= words; i += 2) vst1q_u64(dst + i, vandq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
    for (; i < words; ++i) dst[i] &= src[i];
}

bool is_subset_neon(const Word* a, const Word* b, std::size_t words) {
    std::size_t i = 0;
    for (; i + 2 <= words; i += 2) {
        uint64x2_t extra = vbicq_u64(vld1q_u64(a + i), vld1q_u64(b + i));
        if (vmaxvq_u32(vreinterpretq_u32_u64(extra)) != 0) return false;
    }
    for (; i < words; ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

std::size_t popcount_neon(const Word* a, std::size_t words) {
    std::size_t n = 0, i = 0;
    for (; i + 2 <= words; i += 2) n += vaddvq_u8(vcntq_u8(vreinterpretq_u8_u64(vld1q_u64(a + i))));
    for (; i < words; ++i) n += std::popcount(a[i]);
    return n;
}

std::size_t and_popcount_neon(const Word* a, const Word* b, std::size_t words) {
    std::size_t n = 0, i = 0;
    for (; i + 2 <= words; i += 2) {
        uint64x2_t v = vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i));
        n += vaddvq_u8(vcntq_u8(vreinterpretq_u8_u64(v)));
    }
    for (; i < words; ++i) n += std::popcount(a[i] & b[i]);
    return n;
}

bool equal_neon(const Word* a, const Word* b, std::size_t words) {
    std::size_t i = 0;
    for (; i + 2 <= words; i += 2) {
        uint64x2_t x = veorq_u64(vld1q_u64(a + i), vld1q_u64(b + i));
        if (vmaxvq_u32(vreinterpretq_u32_u64(x)) != 0) return false;
    }
    for (; i < words; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

}  // namespace

const KernelTable* neon_table() {
    static const KernelTable table{"neon",        or_into_neon,      and_into_neon, is_subset_neon,
                                   popcount_neon, and_popcount_neon, equal_neon};
    return &table;
}

#else

const KernelTable* neon_table() { return nullptr; }

#endif

}  // namespace abelsub::kernels
