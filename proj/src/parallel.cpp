#include "mprobust/parallel.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace mprobust {

void run_tasks(unsigned jobs, std::size_t task_count,
               const std::function<void(std::size_t)>& fn) {
    if (task_count == 0) {
        return;
    }
    if (jobs <= 1 || task_count == 1) {
        for (std::size_t t = 0; t < task_count; ++t) {
            fn(t);
        }
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto worker = [&] {
        for (;;) {
            std::size_t t = next.fetch_add(1);
            if (t >= task_count) {
                return;
            }
            try {
                fn(t);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
            }
        }
    };

    std::size_t thread_count = std::min<std::size_t>(jobs, task_count);
    std::vector<std::thread> threads;
    threads.reserve(thread_count);
    for (std::size_t w = 0; w < thread_count; ++w) {
        threads.emplace_back(worker);
    }
    for (auto& th : threads) {
        th.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

} // namespace mprobust
