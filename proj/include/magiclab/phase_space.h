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

#ifndef MAGICLAB_PHASE_SPACE_H
#define MAGICLAB_PHASE_SPACE_H

#include <string>
#include <utility>
#include <vector>

#include "magiclab/clifford.h"
#include "magiclab/finite_field.h"
#include "magiclab/linalg.h"

namespace magiclab {

/// Entries with |W| below this count as zero for sign decisions.
inline constexpr double kNegativityThreshold = 1e-12;

struct PhasePointOperator {
    SymplecticVector chi;
    UnitaryMatrix matrix;
};

/// A_chi = D_chi A_00 D_chi^dag with A_00 = (1/p) sum_{u,v} D_(u,v).
PhasePointOperator phase_point_operator(const SymplecticVector &chi);

/// W_(u,v) stored u-major: grid[u * p + v].
class WignerFunction {
   public:
    WignerFunction(OddPrime p, std::vector<double> grid);
    OddPrime p() const noexcept {
        return p_;
    }
    double at(int u, int v) const {
        return grid_[(size_t)mod_p(u, p_.value()) * p_.dim() + (size_t)mod_p(v, p_.value())];
    }
    const std::vector<double> &grid() const noexcept {
        return grid_;
    }
    double total() const;
    double sum_negativity() const;
    double mana() const;
    /// Minimum value and its (u, v); ties go to the lexicographically first point.
    std::pair<double, std::pair<int, int>> min_entry() const;
    /// Points with W < -kNegativityThreshold, lexicographic.
    std::vector<std::pair<int, int>> negative_points() const;

    /// Header "u,v,w", one row per point in canonical order.
    std::string to_csv() const;
    /// Signed 4-decimal cells, rows v-columns. paper_layout lists u = p-1 first.
    std::string to_ascii(bool paper_layout = false) const;

   private:
    OddPrime p_;
    std::vector<double> grid_;
};

/// Validates the density matrix; the dimension must be an odd prime.
WignerFunction wigner(const DensityMatrix &rho);
WignerFunction wigner(const PureState &psi);

double sum_negativity(const DensityMatrix &rho);
double sum_negativity(const PureState &psi);
/// Natural logarithm of sum |W|.
double mana(const DensityMatrix &rho);
double mana(const PureState &psi);
std::pair<double, std::pair<int, int>> min_entry(const DensityMatrix &rho);
std::pair<double, std::pair<int, int>> min_entry(const PureState &psi);

}  // namespace magiclab

#endif
