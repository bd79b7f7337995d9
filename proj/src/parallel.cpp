#include "qcc/parallel.hpp"

#include <cstdlib>
#include <string>

namespace qcc::detail {

uint32_t resolve_workers(uint32_t requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("QCC_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<uint32_t>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

} // namespace qcc::detail
