#pragma once

#include <cstdint>
#include <thread>
#include <utility>
#include <vector>

namespace pdslab {

/// Worker count resolution: explicit request > PDSLAB_THREADS > hardware.
int default_thread_count();

/// Splits [0, total) into at most `threads` contiguous chunks and runs
/// fn(begin, end, chunk_index) on each, joining before returning.  Chunk
/// boundaries depend only on (total, threads), so any merge done in chunk
/// index order is deterministic.
template <class Fn>
void parallel_ranges(std::uint64_t total, int threads, Fn&& fn) {
    if (threads < 1) threads = 1;
    const std::uint64_t chunks =
        std::min<std::uint64_t>(static_cast<std::uint64_t>(threads), total ? total : 1);
    if (chunks <= 1) {
        fn(std::uint64_t{0}, total, std::size_t{0});
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(chunks);
    const std::uint64_t step = total / chunks;
    const std::uint64_t rem = total % chunks;
    std::uint64_t begin = 0;
    for (std::uint64_t c = 0; c < chunks; ++c) {
        const std::uint64_t end = begin + step + (c < rem ? 1 : 0);
        pool.emplace_back([&fn, begin, end, c] { fn(begin, end, static_cast<std::size_t>(c)); });
        begin = end;
    }
    for (auto& t : pool) t.join();
}

} // namespace pdslab
