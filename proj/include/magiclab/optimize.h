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

#ifndef MAGICLAB_OPTIMIZE_H
#define MAGICLAB_OPTIMIZE_H

#include <cstddef>
#include <functional>
#include <random>
#include <vector>

#include "magiclab/linalg.h"

namespace magiclab {

struct NelderMeadOptions {
    size_t max_iterations = 200;
    double initial_step = 0.05;
    /// Stop once best and worst simplex values differ by less than this.
    double tolerance = 1e-10;
    double shrink = 0.5;
};

struct NelderMeadResult {
    std::vector<double> x;
    double value;
    size_t evaluations;
};

/// Minimizes f. Non-finite values rank below every finite value, so an
/// objective can reject infeasible points by returning +inf.
NelderMeadResult nelder_mead(
    const std::function<double(const std::vector<double> &)> &f,
    std::vector<double> x0,
    const NelderMeadOptions &options = {});

/// Haar-random pure state from normalized complex Gaussians.
PureState random_state(size_t dim, std::mt19937_64 &rng);

}  // namespace magiclab

#endif
