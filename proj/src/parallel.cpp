#include "mcqsim/parallel.hpp"

#include <algorithm>
#include <atomic>

namespace mcqsim {

namespace {
std::atomic<int> g_threads{0}; // 0 = use hardware concurrency
}

void set_num_threads(int k) { g_threads.store(k > 0 ? k : 0); }

int num_threads() {
    int k = g_threads.load();
    if (k > 0) return k;
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

void parallel_for_blocks(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn) {
    if (n == 0) return;
    std::size_t n_blocks = (n + kReduceBlock - 1) / kReduceBlock;
    int k = std::min<std::size_t>(static_cast<std::size_t>(num_threads()), n_blocks);
    if (k <= 1) {
        for (std::size_t b = 0; b < n_blocks; ++b)
            fn(b * kReduceBlock, std::min(n, (b + 1) * kReduceBlock));
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(k));
    for (int t = 0; t < k; ++t) {
        pool.emplace_back([&, t]() {
            for (std::size_t b = static_cast<std::size_t>(t); b < n_blocks; b += static_cast<std::size_t>(k))
                fn(b * kReduceBlock, std::min(n, (b + 1) * kReduceBlock));
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace mcqsim
