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

#ifndef MAGICLAB_PARALLEL_H
#define MAGICLAB_PARALLEL_H

#include <cstddef>
#include <functional>

namespace magiclab {

/// Worker count: hardware concurrency capped by MAGICLAB_THREADS when set.
size_t thread_count();

/// Calls body(begin, end) on disjoint contiguous chunks covering [0, n).
/// Chunk boundaries depend only on n and thread_count(), so callers that
/// write results by index get deterministic output.
void parallel_for(size_t n, const std::function<void(size_t, size_t)> &body);

}  // namespace magiclab

#endif
