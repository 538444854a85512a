#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace qhatm {

// Worker count comes from QHATM_THREADS; falls back to hardware concurrency.
inline int thread_count() {
    if (const char* env = std::getenv("QHATM_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Apply fn(i) for i in [begin, end). Each index is computed by exactly one
// worker from its own inputs, so results do not depend on the thread count.
template <typename Fn>
void parallel_for(int begin, int end, Fn&& fn) {
    int count = end - begin;
    if (count <= 0) return;
    int workers = thread_count();
    if (workers > count) workers = count;
    if (workers == 1) {
        for (int i = begin; i < end; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    int chunk = (count + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        int lo = begin + w * chunk;
        int hi = lo + chunk < end ? lo + chunk : end;
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (int i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace qhatm
