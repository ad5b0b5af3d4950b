/*
   Copyright 2026 The qlucas Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef QLUCAS_PARALLEL_HPP
#define QLUCAS_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace qlucas {

namespace detail {
inline std::atomic<unsigned>& thread_cap() {
    static std::atomic<unsigned> cap{0};
    return cap;
}
inline bool& nested() {
    thread_local bool inside = false;
    return inside;
}
}  // namespace detail

/// Worker count for sampling loops: set_max_threads() if called, otherwise
/// QLUCAS_THREADS, otherwise the hardware concurrency.
inline unsigned max_threads() {
    if (unsigned c = detail::thread_cap().load(); c > 0) return c;
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("QLUCAS_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v >= 1) return std::min<unsigned>(hw, static_cast<unsigned>(v));
        } catch (const std::exception&) {
        }
    }
    return hw;
}

inline void set_max_threads(unsigned n) { detail::thread_cap().store(n); }

/// Runs fn(k) for k in [0, n). Callers write results by index, so the
/// outcome does not depend on scheduling. The first exception is rethrown.
/// Calls made from inside a worker run serially.
template <class Fn>
void parallel_for(std::size_t n, Fn&& fn) {
    const std::size_t workers = std::min<std::size_t>(max_threads(), n);
    if (workers <= 1 || n < 64 || detail::nested()) {
        for (std::size_t k = 0; k < n; ++k) fn(k);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    auto body = [&] {
        const bool outer = std::exchange(detail::nested(), true);
        for (std::size_t k; (k = next.fetch_add(1)) < n;) {
            try {
                fn(k);
            } catch (...) {
                std::lock_guard lock(err_mu);
                if (!err) err = std::current_exception();
                next.store(n);
            }
        }
        detail::nested() = outer;
    };
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(body);
    body();
    pool.clear();
    if (err) std::rethrow_exception(err);
}

}  // namespace qlucas

#endif
