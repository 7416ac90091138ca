#include "abreu/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace abreu {

unsigned worker_count()
{
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("ABREU_THREADS")) {
        try {
            long cap = std::stol(env);
            if (cap >= 1) hw = std::min<unsigned>(hw, static_cast<unsigned>(cap));
        } catch (...) {
        }
    }
    return hw;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body)
{
    unsigned nw = worker_count();
    if (nw <= 1 || n < 64) {
        body(0, n);
        return;
    }
    nw = static_cast<unsigned>(std::min<std::size_t>(nw, n));
    std::vector<std::thread> pool;
    std::size_t chunk = (n + nw - 1) / nw;
    for (unsigned t = 0; t < nw; ++t) {
        std::size_t b = t * chunk, e = std::min(n, b + chunk);
        if (b >= e) break;
        pool.emplace_back([&body, b, e] { body(b, e); });
    }
    for (auto& th : pool) th.join();
}

}  // namespace abreu
