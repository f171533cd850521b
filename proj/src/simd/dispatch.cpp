#include "bgaug/simd/kernels.hpp"

#include <atomic>
#include <cstdlib>

namespace bgaug::simd {

std::string_view to_string(Isa isa) noexcept {
    switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
    }
    return "unknown";
}

bool parse_isa(std::string_view name, Isa& out) noexcept {
    for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
        if (name == to_string(isa)) {
            out = isa;
            return true;
        }
    }
    return false;
}

const KernelTable* kernels_for(Isa isa) noexcept {
    switch (isa) {
    case Isa::Scalar: return &scalar_kernels();
    case Isa::Avx2:
#if defined(BGAUG_HAVE_AVX2)
        if (__builtin_cpu_supports("avx2")) return &avx2_kernels();
#endif
        return nullptr;
    case Isa::Neon:
#if defined(BGAUG_HAVE_NEON)
        return &neon_kernels(); // baseline on AArch64
#else
        return nullptr;
#endif
    }
    return nullptr;
}

std::vector<const KernelTable*> available_kernels() {
    std::vector<const KernelTable*> out;
    for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon})
        if (const auto* k = kernels_for(isa)) out.push_back(k);
    return out;
}

namespace {

const KernelTable* select_default() noexcept {
    if (const char* env = std::getenv("BGAUG_ISA")) {
        Isa requested;
        if (parse_isa(env, requested))
            if (const auto* k = kernels_for(requested)) return k;
    }
    for (Isa isa : {Isa::Avx2, Isa::Neon})
        if (const auto* k = kernels_for(isa)) return k;
    return &scalar_kernels();
}

std::atomic<const KernelTable*>& slot() noexcept {
    static std::atomic<const KernelTable*> s{select_default()};
    return s;
}

} // namespace

const KernelTable& active() noexcept { return *slot().load(std::memory_order_acquire); }

bool force_isa(Isa isa) noexcept {
    const auto* k = kernels_for(isa);
    if (!k) return false;
    slot().store(k, std::memory_order_release);
    return true;
}

} // namespace bgaug::simd
