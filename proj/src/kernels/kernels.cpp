#include "pap/kernels.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pap::kern {

#if defined(PAP_HAVE_AVX2)
const Kernel* avx2_kernel();
#endif
#if defined(PAP_HAVE_NEON)
const Kernel* neon_kernel();
#endif

const std::vector<const Kernel*>& available_kernels() {
    static const std::vector<const Kernel*> list = [] {
        std::vector<const Kernel*> v{&scalar_kernel()};
#if defined(PAP_HAVE_AVX2)
        if (const Kernel* k = avx2_kernel()) v.push_back(k);
#endif
#if defined(PAP_HAVE_NEON)
        if (const Kernel* k = neon_kernel()) v.push_back(k);
#endif
        return v;
    }();
    return list;
}

const Kernel& active_kernel() {
    static const Kernel* chosen = [] {
        const auto& kernels = available_kernels();
        if (const char* want = std::getenv("PAP_KERNEL")) {
            for (const Kernel* k : kernels)
                if (std::string_view(k->name) == want) return k;
            throw std::invalid_argument("PAP_KERNEL names an unavailable kernel: " +
                                        std::string(want));
        }
        return kernels.back();
    }();
    return *chosen;
}

}  // namespace pap::kern
