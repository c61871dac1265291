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

#ifndef MAGICLAB_ANALYSIS_H
#define MAGICLAB_ANALYSIS_H

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "magiclab/linalg.h"
#include "magiclab/phase_space.h"

namespace magiclab {

/// cos t |0> + sin t (e^{i a} cos f |1> + e^{i b} sin f |2>).
struct QutritParameterPoint {
    double theta;
    double phi;
    double psi1;
    double psi2;

    /// theta, phi in [0, pi/2]; psi1, psi2 in [0, 2 pi). Throws BadInput.
    static QutritParameterPoint make(double theta, double phi, double psi1, double psi2);
    /// Maps arbitrary real angles to the same ray inside the ranges above.
    static QutritParameterPoint wrap(double theta, double phi, double psi1, double psi2);
    double psi_minus() const {
        return psi1 - psi2;
    }
    PureState state() const;
};

/// Wigner function from the trigonometric closed form. Valid for any real
/// angles; make() ranges are not required here.
WignerFunction qutrit_wigner_closed_form(double theta, double phi, double psi1, double psi2);
WignerFunction qutrit_wigner_closed_form(const QutritParameterPoint &pt);

/// Phase points whose entry is negative, decided from ratio inequalities in
/// the angles (division-free form, zero threshold 1e-12). Lexicographic.
std::vector<std::pair<int, int>> negativity_conditions(const QutritParameterPoint &pt);

/// Points required negative; the rest are required non-negative.
using NegativityPattern = std::vector<std::pair<int, int>>;

/// Canonical patterns: 1 {(0,0)}, 2 adds (0,1), 3 adds (1,0), 4 adds (1,1).
/// Throws InfeasiblePattern for case 5 and BadInput otherwise.
NegativityPattern case_pattern(int case_number);
/// True if three of the points lie on a common line of Z_3^2.
bool has_collinear_triple(const NegativityPattern &points);

struct SearchResult {
    PureState best_state;
    double best_value;
    /// "sum_negativity" or "mana".
    std::string objective;
    std::string classification;
    size_t evaluations;
    std::optional<QutritParameterPoint> point;
    /// Where the winning refinement started: "grid", "random", "family" or "record".
    std::string seed_kind;
    /// Distinct classifications of refined optima within 1e-8 of the best.
    std::vector<std::string> maxima_orbits;
};

struct CaseOptions {
    size_t resolution = 64;
    size_t restarts = 8;
    size_t iterations = 200;
    double shrink = 0.5;
    double tolerance = 1e-10;
};

/// Maximizes sum-negativity subject to exactly the pattern's entries being
/// negative. Grid over the four angles, then simplex refinement.
/// Throws InfeasiblePattern when no grid point satisfies the pattern.
SearchResult maximize_case(const NegativityPattern &pattern, const CaseOptions &options = {});

struct Case5Report {
    bool infeasible;
    int max_negative_count;
    bool collinear_triple_found;
    size_t points_checked;
};

/// Grid of resolution^4 points plus random_points uniform samples.
Case5Report verify_case5_infeasible(size_t resolution = 64, size_t random_points = 1000000, uint64_t seed = 0);

struct StrangeAnalogueResult {
    int p;
    bool exists;
    std::optional<PureState> witness;
    /// Via the explicit H image of each V_S eigenspace.
    bool proof_path_exists;
    /// Via intersecting H and V_S eigenspaces.
    bool brute_path_exists;
    bool paths_agree;
};

/// Simultaneous eigenvectors of every symplectic rotation. p <= 23.
StrangeAnalogueResult verify_no_strange_analogue(OddPrime p);

/// Equal mixture of the p^2 - 1 stabilizer states vanishing at the origin.
DensityMatrix symplectic_invariant_mixed_state(OddPrime p);

/// Orthonormal basis of the -1 eigenspace of V_-I; each attains min entry -1/p.
std::vector<PureState> contextuality_bound_states(OddPrime p);

struct ManaSearchOptions {
    size_t random_samples = 2000;
    size_t family_samples = 200;
    size_t refine_top = 16;
    size_t iterations = 200;
    uint64_t seed = 0;
};

/// Global max-mana search over pure states at p = 3 or 5.
SearchResult max_mana_search(OddPrime p, const ManaSearchOptions &options = {});

nlohmann::json to_json(const SearchResult &r);

}  // namespace magiclab

#endif
