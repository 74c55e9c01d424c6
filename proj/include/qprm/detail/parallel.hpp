#pragma once

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

namespace qprm {

template <typename Body>
void parallel_blocks(Count total, unsigned workers, Body&& body) {
    workers = std::max(1U, workers);
    if (workers == 1 || total < 2) {
        body(Count{0}, total, 0U);
        return;
    }
    const Count n = std::min<Count>(workers, total);
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n));
    for (Count w = 0; w < n; ++w) {
        const Count begin = total * w / n;
        const Count end = total * (w + 1) / n;
        threads.emplace_back([&, begin, end, w] {
            try {
                body(begin, end, static_cast<unsigned>(w));
            } catch (...) {
                errors[static_cast<std::size_t>(w)] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

}  // namespace qprm
