#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace mcqsim {

// Work is always split into fixed 4096-element blocks regardless of the
// thread count; threads pick blocks round-robin and reductions combine the
// per-block partials in a fixed pairwise tree. Low-order floating-point
// bits are therefore identical for any --threads value. The block size is
// part of the numeric contract: changing it changes rounding.
inline constexpr std::size_t kReduceBlock = 4096;

void set_num_threads(int k);
int num_threads();

// Invokes fn(begin, end) once per block; blocks partition [0, n).
void parallel_for_blocks(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn);

namespace detail {

// Pairwise tree over a contiguous array of partials. Shape depends only on n.
template <typename T>
T tree_sum(const T* v, std::size_t n) {
    if (n == 0) return T{};
    if (n == 1) return v[0];
    std::size_t half = n / 2;
    return tree_sum(v, half) + tree_sum(v + half, n - half);
}

} // namespace detail

// Deterministic sum of f(i) for i in [0, n); T is double or complex<double>.
template <typename T, typename F>
T block_reduce(std::size_t n, F&& f) {
    if (n == 0) return T{};
    std::size_t n_blocks = (n + kReduceBlock - 1) / kReduceBlock;
    std::vector<T> partial(n_blocks, T{});
    parallel_for_blocks(n, [&](std::size_t begin, std::size_t end) {
        T acc{};
        for (std::size_t i = begin; i < end; ++i) acc += f(i);
        partial[begin / kReduceBlock] = acc;
    });
    return detail::tree_sum(partial.data(), n_blocks);
}

} // namespace mcqsim
