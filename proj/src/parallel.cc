// Copyright 2026 The MagicLab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "magiclab/parallel.h"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace magiclab {

size_t thread_count() {
    size_t n = std::max(1u, std::thread::hardware_concurrency());
    if (const char *env = std::getenv("MAGICLAB_THREADS")) {
        try {
            long cap = std::stol(env);
            if (cap >= 1) {
                n = std::min(n, (size_t)cap);
            }
        } catch (const std::exception &) {
        }
    }
    return n;
}

void parallel_for(size_t n, const std::function<void(size_t, size_t)> &body) {
    size_t workers = std::min(thread_count(), n);
    if (workers <= 1) {
        if (n > 0) {
            body(0, n);
        }
        return;
    }
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(workers);
    size_t chunk = (n + workers - 1) / workers;
    for (size_t w = 0; w < workers; w++) {
        size_t begin = w * chunk, end = std::min(n, begin + chunk);
        if (begin >= end) {
            break;
        }
        threads.emplace_back([&, w, begin, end] {
            try {
                body(begin, end);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto &t : threads) {
        t.join();
    }
    for (auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

}  // namespace magiclab
