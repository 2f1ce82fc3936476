#ifndef CROSSCOUNT_PARALLEL_HPP
#define CROSSCOUNT_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace crosscount {

// Number of workers parallel_chunks will actually use.
inline unsigned effective_jobs(std::size_t count, unsigned jobs) {
    return std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
}

// Splits [0, count) into `jobs` contiguous chunks and calls
// body(worker, begin, end) for each, on its own thread when jobs > 1.
// Worker indices are 0..jobs-1; results that each worker accumulates
// privately and the caller sums are independent of the job count.
template <typename Body>
void parallel_chunks(std::size_t count, unsigned jobs, Body&& body) {
    jobs = effective_jobs(count, jobs);
    if (jobs == 1) {
        body(0u, std::size_t{0}, count);
        return;
    }
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> threads;
        threads.reserve(jobs);
        for (unsigned w = 0; w < jobs; ++w) {
            const std::size_t begin = count * w / jobs;
            const std::size_t end = count * (w + 1) / jobs;
            threads.emplace_back([&, w, begin, end] {
                try {
                    body(w, begin, end);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            });
        }
    }
    if (failure) std::rethrow_exception(failure);
}

}  // namespace crosscount

#endif  // CROSSCOUNT_PARALLEL_HPP
