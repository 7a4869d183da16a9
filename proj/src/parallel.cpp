#include "cyfeyn/parallel.hpp"

#include <exception>
#include <thread>
#include <vector>

namespace cyfeyn {

void parallel_for(int n, int jobs, const std::function<void(int)>& fn) {
    if (n <= 0) return;
    if (jobs > n) jobs = n;
    if (jobs <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }

    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(static_cast<size_t>(jobs));
    const int base = n / jobs;
    const int extra = n % jobs;
    int lo = 0;
    for (int w = 0; w < jobs; ++w) {
        const int hi = lo + base + (w < extra ? 1 : 0);
        workers.emplace_back([&fn, &errors, w, lo, hi]() {
            try {
                for (int i = lo; i < hi; ++i) fn(i);
            } catch (...) {
                errors[static_cast<size_t>(w)] = std::current_exception();
            }
        });
        lo = hi;
    }
    for (auto& t : workers) t.join();
    for (const auto& err : errors)
        if (err) std::rethrow_exception(err);
}

} // namespace cyfeyn
