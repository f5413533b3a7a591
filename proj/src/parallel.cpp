#include "farkas/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace farkas {

unsigned worker_count()
{
    if (const char* env = std::getenv("FARKAS_THREADS")) {
        try {
            std::size_t used = 0;
            long n = std::stol(env, &used);
            if (used == std::string(env).size() && n > 0)
                return static_cast<unsigned>(n);
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t begin, std::size_t end,
                  const std::function<void(std::size_t, std::size_t)>& body,
                  std::size_t min_chunk)
{
    if (end <= begin)
        return;
    std::size_t n = end - begin;
    std::size_t workers = std::min<std::size_t>(worker_count(), (n + min_chunk - 1) / min_chunk);
    if (workers <= 1) {
        body(begin, end);
        return;
    }
    // Interleave lo/hi so triangular workloads (convolutions) stay balanced.
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    std::size_t stride = min_chunk;
    for (std::size_t w = 0; w < workers; ++w) {
        threads.emplace_back([&, w] {
            try {
                for (std::size_t lo = begin + w * stride; lo < end; lo += workers * stride)
                    body(lo, std::min(end, lo + stride));
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : threads)
        t.join();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
}

}  // namespace farkas
