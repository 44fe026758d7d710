#ifndef LINCODE_PARALLEL_HPP
#define LINCODE_PARALLEL_HPP

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <thread>
#include <vector>

namespace lincode {

// Upper limit on enumeration workers: LINCODE_THREADS if set (clamped to at
// least 1), otherwise the hardware concurrency.
inline std::size_t worker_limit() {
    if (const char* env = std::getenv("LINCODE_THREADS")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && v >= 1) return std::size_t(v);
        return 1;
    }
    std::size_t hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

inline std::size_t resolve_workers(std::size_t requested) {
    std::size_t limit = worker_limit();
    if (requested == 0) return limit;
    return requested < limit ? requested : limit;
}

// Splits [0, total) into contiguous chunks, applies fn(begin, end) -> Result
// concurrently and returns the results in chunk order. Merging chunk results
// in order therefore reproduces the serial left-to-right scan whatever the
// worker count. Ranges below min_chunk run inline.
template <typename Result, typename Fn>
std::vector<Result> map_chunked(std::uint64_t total, std::size_t workers, std::uint64_t min_chunk,
                                Fn&& fn) {
    std::vector<Result> results;
    if (total == 0) return results;
    std::uint64_t nchunks = std::max<std::uint64_t>(workers, 1);
    if (min_chunk > 0) nchunks = std::min<std::uint64_t>(nchunks, std::max<std::uint64_t>(total / min_chunk, 1));
    nchunks = std::min<std::uint64_t>(nchunks, total);
    results.resize(std::size_t(nchunks));
    auto bound = [&](std::uint64_t c) {
        return total / nchunks * c + std::min<std::uint64_t>(c, total % nchunks);
    };
    if (nchunks == 1) {
        results[0] = fn(std::uint64_t(0), total);
        return results;
    }
    std::vector<std::thread> pool;
    pool.reserve(std::size_t(nchunks));
    for (std::uint64_t c = 0; c < nchunks; ++c)
        pool.emplace_back([&results, &fn, &bound, c] { results[std::size_t(c)] = fn(bound(c), bound(c + 1)); });
    for (auto& t : pool) t.join();
    return results;
}

}  // namespace lincode

#endif
