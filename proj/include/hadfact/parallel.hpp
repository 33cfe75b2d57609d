#pragma once

#include <cmath>
#include <cstdint>
#include <exception>
#include <mutex>
#include <random>
#include <thread>
#include <vector>

namespace hadfact {

namespace rng {

// splitmix64 step; the standard seed-spreading permutation.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// Derive an independent stream seed from (seed, salt0, salt1). Work items
// are seeded by index, so results do not depend on which worker runs them.
inline std::uint64_t mix(std::uint64_t seed, std::uint64_t salt0, std::uint64_t salt1 = 0) {
    return splitmix64(splitmix64(seed ^ (0xA0761D6478BD642Full * (salt0 + 1))) ^
                      (0xE7037ED1A0B428DBull * (salt1 + 1)));
}

// Uniform double in the open interval (0,1). mt19937_64 output is fully
// specified by the standard; the mapping below avoids the
// implementation-defined std::uniform_real_distribution.
inline double uniform01(std::mt19937_64& g) {
    return (static_cast<double>(g() >> 11) + 0.5) * 0x1.0p-53;
}

// Box-Muller from the deterministic uniform above.
inline double normal(std::mt19937_64& g) {
    double u1 = uniform01(g);
    double u2 = uniform01(g);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
}

}  // namespace rng

inline int resolve_workers(int requested) {
    if (requested <= 0) return 1;
    return requested;
}

// Runs fn(i) for i in [0, count) on `workers` threads. Items are assigned
// by index (strided), so any per-item outputs written to index i are
// identical for every worker count. If items throw, the exception of the
// smallest item index is rethrown after all threads join.
template <typename Fn>
void parallel_for(std::size_t count, int workers, Fn&& fn) {
    workers = resolve_workers(workers);
    if (workers == 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::size_t nthreads = std::min<std::size_t>(static_cast<std::size_t>(workers), count);
    std::mutex error_mutex;
    std::size_t error_index = count;
    std::exception_ptr error;
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (std::size_t t = 0; t < nthreads; ++t) {
        pool.emplace_back([t, nthreads, count, &fn, &error_mutex, &error_index, &error] {
            for (std::size_t i = t; i < count; i += nthreads) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (i < error_index) {
                        error_index = i;
                        error = std::current_exception();
                    }
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace hadfact
