#include "abelsub/kernels.hpp"

#include <bit>

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#define ABELSUB_HAVE_AVX2_BUILD 1
#else
#define ABELSUB_HAVE_AVX2_BUILD 0
#endif

namespace abelsub::kernels {

#if ABELSUB_HAVE_AVX2_BUILD
namespace {

// Four words per lane group; the tail falls back to scalar words.

__attribute__((target("avx2"))) void or_into_avx2(Word* dst, const Word* src, std::size_t words) {
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_or_si256(d, s));
    }
    for (; i < words; ++i) dst[i] |= src[i];
}

__attribute__((target("avx2"))) void and_into_avx2(Word* dst, const Word* src, std::size_t words) {
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_and_si256(d, s));
    }
    for (; i < words; ++i) dst[i] &= src[i];
}

__attribute__((target("avx2"))) bool is_subset_avx2(const Word* a, const Word* b, std::size_t words) {
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        // testc(b, a) is 1 iff (~b & a) == 0
        if (!_mm256_testc_si256(vb, va)) return false;
    }
    for (; i < words; ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

// No AVX2 popcount instruction; the nibble-lookup method sums bytes with
// vpsadbw, which is the usual trick for wide rows.
__attribute__((target("avx2"))) inline __m256i popcount_lanes(__m256i v) {
    const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                            0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    __m256i lo = _mm256_and_si256(v, low_mask);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    __m256i counts = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
    return _mm256_sad_epu8(counts, _mm256_setzero_si256());
}

__attribute__((target("avx2"))) std::size_t horizontal_sum(__m256i acc) {
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    return static_cast<std::size_t>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
}

__attribute__((target("avx2"))) std::size_t popcount_avx2(const Word* a, std::size_t words) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        acc = _mm256_add_epi64(acc, popcount_lanes(va));
    }
    std::size_t n = horizontal_sum(acc);
    for (; i < words; ++i) n += std::popcount(a[i]);
    return n;
}

__attribute__((target("avx2"))) std::size_t and_popcount_avx2(const Word* a, const Word* b,
                                                               std::size_t words) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        acc = _mm256_add_epi64(acc, popcount_lanes(_mm256_and_si256(va, vb)));
    }
    std::size_t n = horizontal_sum(acc);
    for (; i < words; ++i) n += std::popcount(a[i] & b[i]);
    return n;
}

__attribute__((target("avx2"))) bool equal_avx2(const Word* a, const Word* b, std::size_t words) {
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        __m256i x = _mm256_xor_si256(va, vb);
        if (!_mm256_testz_si256(x, x)) return false;
    }
    for (; i < words; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

}  // namespace

const KernelTable* avx2_table() {
    static const KernelTable table{"avx2",         or_into_avx2,  and_into_avx2,     is_subset_avx2,
                                   popcount_avx2,  and_popcount_avx2, equal_avx2};
    static const bool supported = __builtin_cpu_supports("avx2");
    return supported ? &table : nullptr;
}

#else

const KernelTable* avx2_table() { return nullptr; }

#endif

}  // namespace abelsub::kernels
