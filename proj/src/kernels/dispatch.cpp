#include "abelsub/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string_view>

namespace abelsub::kernels {
namespace {

const KernelTable* select_automatically() {
    if (const char* env = std::getenv("ABELSUB_KERNELS")) {
        std::string_view want{env};
        if (want == "scalar") return &scalar_table();
        if (want == "avx2" && avx2_table()) return avx2_table();
        if (want == "neon" && neon_table()) return neon_table();
    }
    if (auto* t = avx2_table()) return t;
    if (auto* t = neon_table()) return t;
    return &scalar_table();
}

std::atomic<const KernelTable*> forced{nullptr};

}  // namespace

const KernelTable& active() {
    if (auto* t = forced.load(std::memory_order_acquire)) return *t;
    static const KernelTable* chosen = select_automatically();
    return *chosen;
}

void force_table(const KernelTable* table) { forced.store(table, std::memory_order_release); }

}  // namespace abelsub::kernels
