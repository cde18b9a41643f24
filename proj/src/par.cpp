#include "sdkit/par.hpp"

#include <atomic>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sdkit::par {

namespace {
std::atomic<int> g_cap{0};

int env_cap() {
    static int cached = [] {
        const char* s = std::getenv("SDKIT_THREADS");
        if (!s) return 0;
        int v = std::atoi(s);
        return v > 0 ? v : 0;
    }();
    return cached;
}
} // namespace

int max_threads() {
#ifdef _OPENMP
    int hw = omp_get_max_threads();
#else
    int hw = 1;
#endif
    int cap = g_cap.load();
    if (cap == 0) cap = env_cap();
    if (cap > 0 && cap < hw) return cap;
    return hw;
}

void set_thread_cap(int cap) { g_cap.store(cap < 0 ? 0 : cap); }

} // namespace sdkit::par
