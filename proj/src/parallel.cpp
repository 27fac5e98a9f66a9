#include "steerkit/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

namespace steerkit {

int worker_count() {
    int n = static_cast<int>(std::thread::hardware_concurrency());
    if (n < 1) n = 1;
    n = std::min(n, 8);
    if (const char* env = std::getenv("STEERKIT_THREADS")) {
        const int cap = std::atoi(env);
        if (cap >= 1) n = std::min(n, cap);
    }
    return n;
}

void run_chunked(std::int64_t total, int chunks,
                 const std::function<void(std::int64_t, std::int64_t, int)>& body) {
    if (total <= 0 || chunks < 1) return;
    const int workers = std::min<int>(worker_count(), chunks);
    if (workers == 1 || total < 2 * chunks) {
        body(0, total, 0);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::int64_t step = (total + chunks - 1) / chunks;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (int slot = w; slot < chunks; slot += workers) {
                const std::int64_t begin = static_cast<std::int64_t>(slot) * step;
                const std::int64_t end = std::min<std::int64_t>(begin + step, total);
                if (begin < end) body(begin, end, slot);
            }
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace steerkit
