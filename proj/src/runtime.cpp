#include "sfd/runtime.hpp"

#include <omp.h>

#include <cstdlib>

namespace sfd {

int default_thread_count() {
    if (const char* env = std::getenv("SFD_THREADS")) {
        char* end = nullptr;
        long n = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && n >= 1 && n <= 4096) return static_cast<int>(n);
    }
    return omp_get_max_threads();
}

int resolve_threads(int requested) {
    return requested > 0 ? requested : default_thread_count();
}

}  // namespace sfd
