#include "innerfn/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

namespace innerfn {

int worker_count() {
    static const int n = [] {
        if (const char* env = std::getenv("INNERFN_THREADS")) {
            const int v = std::atoi(env);
            if (v >= 1) return v;
        }
        const unsigned hw = std::thread::hardware_concurrency();
        return hw > 0 ? static_cast<int>(hw) : 1;
    }();
    return n;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    const std::size_t workers = std::min<std::size_t>(worker_count(), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

double pairwise_sum(const std::vector<double>& v) {
    struct Rec {
        static double run(const double* p, std::size_t n) {
            if (n <= 8) {
                double s = 0.0;
                for (std::size_t i = 0; i < n; ++i) s += p[i];
                return s;
            }
            const std::size_t h = n / 2;
            return run(p, h) + run(p + h, n - h);
        }
    };
    return Rec::run(v.data(), v.size());
}

} // namespace innerfn
