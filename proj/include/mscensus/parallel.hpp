#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace mscensus {

// Splits [0, count) into contiguous chunks, runs fn(begin, end) for each on up
// to `jobs` threads, and returns the per-chunk results in chunk order.
// The first exception thrown by any chunk is rethrown after all threads join.
template <typename Result, typename Fn>
std::vector<Result> parallel_chunks(std::size_t count, unsigned jobs, Fn fn)
{
    jobs = std::max(1u, jobs);
    const std::size_t chunks = std::min<std::size_t>(count, std::size_t{jobs} * 4);
    std::vector<Result> results(chunks);
    if (chunks == 0) {
        return results;
    }
    auto bounds = [&](std::size_t c) {
        return std::pair{count * c / chunks, count * (c + 1) / chunks};
    };
    if (jobs == 1) {
        for (std::size_t c = 0; c < chunks; ++c) {
            const auto [b, e] = bounds(c);
            results[c] = fn(b, e);
        }
        return results;
    }
    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (unsigned t = 0; t < jobs; ++t) {
        threads.emplace_back([&, t] {
            try {
                for (std::size_t c = t; c < chunks; c += jobs) {
                    const auto [b, e] = bounds(c);
                    results[c] = fn(b, e);
                }
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : threads) {
        th.join();
    }
    for (const auto& err : errors) {
        if (err) {
            std::rethrow_exception(err);
        }
    }
    return results;
}

// Concatenates per-chunk vectors.
template <typename T>
std::vector<T> flatten(std::vector<std::vector<T>> parts)
{
    std::vector<T> out;
    std::size_t total = 0;
    for (const auto& p : parts) {
        total += p.size();
    }
    out.reserve(total);
    for (auto& p : parts) {
        out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
    }
    return out;
}

} // namespace mscensus
