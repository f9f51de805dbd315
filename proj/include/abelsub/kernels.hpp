#pragma once

// Word-level bit-set kernels. Every relation matrix, member set and
// adjacency row in the library is a run of 64-bit words; these loops are
// the only data-parallel arithmetic in the project, so they come in a
// scalar reference form plus vector variants chosen once at startup.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace abelsub::kernels {

using Word = std::uint64_t;

struct KernelTable {
    std::string_view name;
    // dst |= src
    void (*or_into)(Word* dst, const Word* src, std::size_t words);
    // dst &= src
    void (*and_into)(Word* dst, const Word* src, std::size_t words);
    // (a & ~b) == 0
    bool (*is_subset)(const Word* a, const Word* b, std::size_t words);
    std::size_t (*popcount)(const Word* a, std::size_t words);
    std::size_t (*and_popcount)(const Word* a, const Word* b, std::size_t words);
    bool (*equal)(const Word* a, const Word* b, std::size_t words);
};

const KernelTable& scalar_table();

// nullptr when the variant was not compiled in or the CPU lacks it.
const KernelTable* avx2_table();
const KernelTable* neon_table();

// The table used by the library. Picks the widest supported variant unless
// ABELSUB_KERNELS=scalar|avx2|neon is set in the environment.
const KernelTable& active();

// Test hook; pass nullptr to restore automatic selection.
void force_table(const KernelTable* table);

}  // namespace abelsub::kernels
