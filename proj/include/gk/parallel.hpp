#pragma once

#include <cstddef>

namespace gk {

// Global worker count for data-parallel loops. 1 = serial. Results are
// required to be identical for any value (static partitioning, ordered merge).
void set_threads(unsigned n);
unsigned thread_count();

namespace detail {
void parallel_for_impl(std::size_t begin, std::size_t end, void* ctx, void (*body)(void*, std::size_t, std::size_t));
}

template <class F>
void parallel_for(std::size_t begin, std::size_t end, F&& f) {
    auto thunk = [](void* ctx, std::size_t lo, std::size_t hi) {
        (*static_cast<F*>(ctx))(lo, hi);
    };
    detail::parallel_for_impl(begin, end, &f, thunk);
}

} // namespace gk
