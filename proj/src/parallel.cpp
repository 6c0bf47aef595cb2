#include "gk/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace gk {

namespace {
std::atomic<unsigned> g_threads{1};
}

void set_threads(unsigned n) {
    g_threads.store(n == 0 ? 1 : n);
}

unsigned thread_count() {
    return g_threads.load();
}

namespace detail {

void parallel_for_impl(std::size_t begin, std::size_t end, void* ctx, void (*body)(void*, std::size_t, std::size_t)) {
    if (begin >= end) return;
    unsigned nt = thread_count();
    std::size_t span = end - begin;
    if (nt <= 1 || span < 2 * nt) {
        body(ctx, begin, end);
        return;
    }
    std::size_t chunk = (span + nt - 1) / nt;
    std::vector<std::thread> pool;
    pool.reserve(nt);
    for (unsigned t = 0; t < nt; ++t) {
        std::size_t lo = begin + t * chunk;
        if (lo >= end) break;
        std::size_t hi = std::min(end, lo + chunk);
        pool.emplace_back([=] { body(ctx, lo, hi); });
    }
    for (auto& th : pool) th.join();
}

} // namespace detail
} // namespace gk
