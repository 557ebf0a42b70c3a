#include "clusterembed/parallel.hpp"

#include <atomic>
#include <thread>
#include <vector>

namespace clusterembed {

void parallel_for_chunks(std::int64_t n, std::int64_t chunk,
                         const std::function<void(std::int64_t, std::int64_t)>& fn) {
    if (n <= 0) return;
    if (chunk < 1) chunk = 1;
    const std::int64_t num_chunks = (n + chunk - 1) / chunk;
    const unsigned hw = std::thread::hardware_concurrency();
    const std::int64_t num_threads =
        std::min<std::int64_t>(num_chunks, hw > 0 ? static_cast<std::int64_t>(hw) : 1);

    if (num_threads <= 1) {
        for (std::int64_t c = 0; c < num_chunks; ++c)
            fn(c * chunk, std::min(n, (c + 1) * chunk));
        return;
    }

    std::atomic<std::int64_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::int64_t c = next.fetch_add(1);
            if (c >= num_chunks) break;
            fn(c * chunk, std::min(n, (c + 1) * chunk));
        }
    };
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(num_threads) - 1);
    for (std::int64_t t = 1; t < num_threads; ++t) threads.emplace_back(worker);
    worker();
    for (auto& t : threads) t.join();
}

double parallel_sum(std::int64_t n, std::int64_t chunk,
                    const std::function<double(std::int64_t)>& term) {
    if (n <= 0) return 0.0;
    if (chunk < 1) chunk = 1;
    const std::int64_t num_chunks = (n + chunk - 1) / chunk;
    std::vector<double> partial(static_cast<std::size_t>(num_chunks), 0.0);
    parallel_for_chunks(n, chunk, [&](std::int64_t begin, std::int64_t end) {
        double acc = 0.0;
        for (std::int64_t i = begin; i < end; ++i) acc += term(i);
        partial[static_cast<std::size_t>(begin / chunk)] = acc;
    });
    double total = 0.0;
    for (double p : partial) total += p;
    return total;
}

} // namespace clusterembed
