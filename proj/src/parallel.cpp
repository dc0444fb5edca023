#include "lcdunkl/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace lcd {

namespace {
std::atomic<int> g_workers{1};
}

void set_workers(int n) { g_workers = std::max(1, n); }
int workers() { return g_workers; }

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
    const std::size_t nw = std::min<std::size_t>(static_cast<std::size_t>(workers()), n);
    if (nw <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::exception_ptr err;
    std::mutex err_mu;
    std::vector<std::thread> pool;
    pool.reserve(nw);
    for (std::size_t w = 0; w < nw; ++w) {
        pool.emplace_back([&, w] {
            try {
                // strided split keeps per-worker load even for triangular work
                for (std::size_t i = w; i < n; i += nw) body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lk(err_mu);
                if (!err) err = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace lcd
