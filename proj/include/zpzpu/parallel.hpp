#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace zpu {

namespace detail {
inline std::atomic<unsigned> thread_count{1};
}

/// Worker threads used by exhaustive scans. Results never depend on this value.
inline void set_thread_count(unsigned n) noexcept { detail::thread_count = std::max(1u, n); }
inline unsigned thread_count() noexcept { return detail::thread_count; }

/// Splits [0, total) into contiguous chunks and calls fn(begin, end, chunk) for each, possibly in
/// parallel. Returns the number of chunks; chunk k always covers the same range for a given
/// chunk count, so callers merge per-chunk results in chunk order.
template <typename Fn>
std::size_t parallel_chunks(std::uint64_t total, Fn&& fn) {
    std::size_t chunks = std::min<std::uint64_t>(thread_count(), std::max<std::uint64_t>(total, 1));
    std::uint64_t step = (total + chunks - 1) / chunks;
    if (chunks == 1) {
        fn(std::uint64_t{0}, total, std::size_t{0});
        return 1;
    }
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(chunks);
    for (std::size_t k = 0; k < chunks; ++k) {
        std::uint64_t begin = std::min(total, k * step);
        std::uint64_t end = std::min(total, begin + step);
        workers.emplace_back([&, begin, end, k] {
            try {
                fn(begin, end, k);
            } catch (...) {
                errors[k] = std::current_exception();
            }
        });
    }
    for (auto& w : workers) w.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return chunks;
}

} // namespace zpu
