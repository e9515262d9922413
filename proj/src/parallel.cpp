#include "hsball/parallel.hpp"

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace hsball {

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("HS_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

void parallel_for(std::size_t count, int threads,
                  const std::function<void(std::size_t, std::size_t)>& chunk_fn) {
    threads = resolve_threads(threads);
    if (threads <= 1 || count < 2) {
        chunk_fn(0, count);
        return;
    }
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(threads), count);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (count + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(count, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&chunk_fn, begin, end] { chunk_fn(begin, end); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace hsball
