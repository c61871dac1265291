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

#ifndef MAGICLAB_TWIRL_H
#define MAGICLAB_TWIRL_H

#include <string>
#include <vector>

#include "json.hpp"
#include "magiclab/clifford.h"
#include "magiclab/linalg.h"

namespace magiclab {

/// Uniform average of conjugations by a closed subgroup of the Clifford group.
class TwirlChannel {
   public:
    /// Throws BadInput if the elements are not closed under compose.
    static TwirlChannel from_elements(std::vector<CliffordElement> subgroup);
    static TwirlChannel generated_by(const std::vector<CliffordElement> &generators);

    OddPrime p() const noexcept {
        return p_;
    }
    size_t size() const noexcept {
        return elements_.size();
    }
    const std::vector<CliffordElement> &elements() const noexcept {
        return elements_;
    }
    const std::vector<UnitaryMatrix> &matrices() const noexcept {
        return matrices_;
    }

   private:
    TwirlChannel(OddPrime p, std::vector<CliffordElement> elements);
    OddPrime p_;
    std::vector<CliffordElement> elements_;
    std::vector<UnitaryMatrix> matrices_;
};

/// Group indices whose matrix maps psi to a multiple of itself (within 1e-8).
std::vector<size_t> stabilizing_subgroup(const PureState &psi, const CliffordGroup &group);

/// Throws DimensionMismatch when rho and the channel disagree on p.
DensityMatrix twirl(const DensityMatrix &rho, const TwirlChannel &channel);

/// Real dimension of the trace-one fixed points: rank of the averaged
/// superoperator minus one.
size_t fixed_point_space_dimension(const TwirlChannel &channel);

struct DepolarizeResult {
    double fidelity;
    double delta;
    double residual;
};

/// Qutrit twirl over all symplectic rotations, fitted to (1-delta)|S><S| + delta I/3.
/// Throws NonDepolarizedResidual if the fit misses by more than 1e-9.
DepolarizeResult symplectic_depolarize(const DensityMatrix &rho);

enum class TwirlScheme {
    /// p=3, <H>: (1-e1-e2)|S> + e1|H,1> + e2|H,-1>
    H2d,
    /// p=3, <N>: (1-e1-e2)|N+> + e1|0> + e2|S>
    N,
    /// p=3, <X V_S>: mixture of the three X V_S eigenstates
    XVS,
    /// p=3, all symplectic rotations: (1-delta)|S> + delta I/3
    Symplectic,
    /// p=3, <V_S>: rho(x, y, z, eps) on span{|1>, |2>} plus eps |0>
    VSDegenerate,
    /// p=3, <V_-I>: the same form on span{|0>, |N+>} plus eps |S>
    VMinusIDegenerate,
    /// p=5, <H, H'>: |H,-1>, |H,1;1,1>, |H,1;1,-1> and rho_i
    Hm5,
    /// p=5, <B, H'>: |B,-1>, rho_+ and rho_-
    Bm15,
};

std::string scheme_name(TwirlScheme s);
/// Accepts "2dH", "N", "XVS", "symplectic", "VS", "V-I", "hm5", "Bm15". Throws UnknownName.
TwirlScheme scheme_from_name(const std::string &name);
OddPrime scheme_prime(TwirlScheme s);
TwirlChannel scheme_channel(TwirlScheme s);
std::vector<std::string> scheme_parameter_names(TwirlScheme s);
/// Density matrix for the given parameters. Throws BadInput on a wrong count
/// or a non-physical result.
DensityMatrix scheme_state(TwirlScheme s, const std::vector<double> &parameters);

struct TwirledStateCoordinates {
    TwirlScheme scheme;
    std::vector<double> parameters;
    /// Max entrywise deviation of the reconstruction from the input.
    double residual;
};

/// Throws NotInFixedSpace (with the residual) if rho is not a fixed point of
/// the scheme's channel within 1e-8.
TwirledStateCoordinates post_twirl_coordinates(const DensityMatrix &rho, TwirlScheme scheme);

/// Generators listed for a registry state's stabilizing subgroup; empty when
/// none are listed.
std::vector<std::string> listed_generators(const std::string &state, OddPrime p);

struct SubgroupReport {
    std::string state;
    size_t order;
    GroupLabel label;
    /// Elements of the stabilizer with no displacement part.
    size_t symplectic_order;
    std::vector<std::string> generators;
    /// Order of the group the listed generators produce.
    size_t generated_order;
};

SubgroupReport stabilizer_report(const std::string &state, const CliffordGroup &group);
nlohmann::json to_json(const SubgroupReport &r);
nlohmann::json to_json(const TwirledStateCoordinates &c);

}  // namespace magiclab

#endif
