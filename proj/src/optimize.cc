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

#include "magiclab/optimize.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace magiclab {

namespace {

double sanitize(double v) {
    return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
}

}  // namespace

NelderMeadResult nelder_mead(
    const std::function<double(const std::vector<double> &)> &f,
    std::vector<double> x0,
    const NelderMeadOptions &options) {
    size_t n = x0.size();
    size_t evals = 0;
    auto eval = [&](const std::vector<double> &x) {
        evals++;
        return sanitize(f(x));
    };

    std::vector<std::vector<double>> pts{x0};
    for (size_t k = 0; k < n; k++) {
        auto x = x0;
        x[k] += options.initial_step;
        pts.push_back(std::move(x));
    }
    std::vector<double> vals;
    for (const auto &x : pts) {
        vals.push_back(eval(x));
    }
    std::vector<size_t> idx(n + 1);

    for (size_t iter = 0; iter < options.max_iterations; iter++) {
        std::iota(idx.begin(), idx.end(), 0);
        std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
            return vals[a] < vals[b];
        });
        size_t best = idx[0], worst = idx[n], second = idx[n - 1];
        if (std::isfinite(vals[worst]) && vals[worst] - vals[best] < options.tolerance) {
            break;
        }
        std::vector<double> centroid(n, 0.0);
        for (size_t k = 0; k < n; k++) {
            for (size_t d = 0; d < n; d++) {
                centroid[d] += pts[idx[k]][d] / (double)n;
            }
        }
        auto along = [&](double t) {
            std::vector<double> x(n);
            for (size_t d = 0; d < n; d++) {
                x[d] = centroid[d] + t * (pts[worst][d] - centroid[d]);
            }
            return x;
        };
        auto xr = along(-1.0);
        double fr = eval(xr);
        if (fr < vals[best]) {
            auto xe = along(-2.0);
            double fe = eval(xe);
            if (fe < fr) {
                pts[worst] = std::move(xe);
                vals[worst] = fe;
            } else {
                pts[worst] = std::move(xr);
                vals[worst] = fr;
            }
            continue;
        }
        if (fr < vals[second]) {
            pts[worst] = std::move(xr);
            vals[worst] = fr;
            continue;
        }
        bool outside = fr < vals[worst];
        auto xc = along(outside ? -0.5 : 0.5);
        double fc = eval(xc);
        if (fc < (outside ? fr : vals[worst])) {
            pts[worst] = std::move(xc);
            vals[worst] = fc;
            continue;
        }
        for (size_t k = 1; k <= n; k++) {
            size_t j = idx[k];
            for (size_t d = 0; d < n; d++) {
                pts[j][d] = pts[best][d] + options.shrink * (pts[j][d] - pts[best][d]);
            }
            vals[j] = eval(pts[j]);
        }
    }
    size_t best = (size_t)(std::min_element(vals.begin(), vals.end()) - vals.begin());
    return {pts[best], vals[best], evals};
}

PureState random_state(size_t dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    CVector v(dim);
    for (auto &x : v) {
        double re = gauss(rng);
        double im = gauss(rng);
        x = cplx(re, im);
    }
    return PureState::from_amplitudes(std::move(v));
}

}  // namespace magiclab
