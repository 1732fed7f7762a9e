#pragma once

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace germlab {

// Runs fn(batch) for batch = 0..n_batches-1 across up to n_threads workers.
// Each batch must write only to its own pre-allocated slot; callers reduce the
// slots sequentially afterwards, so results do not depend on the thread count.
inline void run_batches(int n_batches, int n_threads, const std::function<void(int)>& fn) {
    if (n_threads <= 0) n_threads = static_cast<int>(std::thread::hardware_concurrency());
    if (n_threads <= 0) n_threads = 1;
    if (n_threads == 1 || n_batches <= 1) {
        for (int b = 0; b < n_batches; ++b) fn(b);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    const int workers = std::min(n_threads, n_batches);
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const int b = next.fetch_add(1);
                if (b >= n_batches) return;
                fn(b);
            }
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace germlab
