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

#ifndef MAGICLAB_BESTIARY_H
#define MAGICLAB_BESTIARY_H

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "magiclab/clifford.h"
#include "magiclab/linalg.h"

namespace magiclab {

inline constexpr const char *kStabilizerName = "stabilizer";
inline constexpr const char *kUnclassifiedName = "unclassified";

/// Matrix of a named operator. Composites (N, A, A', B, B^2, B^-1, V_S^2) are
/// products of their factors' matrices, so eigenvalues carry the phases of
/// the defining products. "Pauli" means X. Throws UnknownName.
Matrix named_operator_matrix(const std::string &name, OddPrime p);

/// Registry entry with the values expected from closed forms.
struct RegistryEntry {
    std::string name;
    int p;
    std::string label;
    std::string mana_expression;
    double mana_closed_form;
    double min_entry_expected;
    /// False when min_entry_expected is only a 2-decimal value.
    bool min_entry_exact;
    size_t orbit_size;
    size_t stabilizer_order;
    std::string stabilizer_group;
    /// Row of the non-degenerate eigenstate table (false for aliases).
    bool table_row;
};

/// Registry in table order, followed by alias entries (Hm1 at p=3, the other
/// eigenvectors of X V_S, |H,-i>, the B' closed forms).
const std::vector<RegistryEntry> &registry(OddPrime p);
const RegistryEntry &registry_entry(const std::string &name, OddPrime p);
std::vector<std::string> registry_names(OddPrime p);

/// Throws UnknownName.
PureState named_state(const std::string &name, OddPrime p);

/// Distinct rays {C|psi>}, deduplicated at 1e-9, in group order of first hit.
std::vector<PureState> orbit(const PureState &psi, const CliffordGroup &group);
size_t orbit_under_subgroup(const PureState &psi, const CliffordGroup &group, const std::vector<size_t> &subgroup);

/// Matches states against precomputed orbits of every registry state and the
/// stabilizer states.
class StateClassifier {
   public:
    explicit StateClassifier(const CliffordGroup &group);
    /// Registry name, "stabilizer" or "unclassified"; tol is on 1 - |<a|b>|.
    std::string classify(const PureState &psi, double tol = 1e-8) const;
    const std::vector<PureState> &orbit_of(const std::string &name) const;
    OddPrime p() const noexcept {
        return p_;
    }

   private:
    OddPrime p_;
    std::vector<std::pair<std::string, std::vector<PureState>>> orbits_;
};

/// Convenience wrapper that enumerates the group for each call.
std::string classify_state(const PureState &psi, OddPrime p);

struct EigenstateRecord {
    std::string name;
    OddPrime p;
    PureState state;
    cplx eigenvalue;
    std::string source_class;
    double mana;
    double min_entry;
    size_t orbit_size;
    bool stabilizer;
};

enum class AngleConvention {
    /// (cos t, e^{i f} sin t), t in [0, pi/2]
    FullAngle,
    /// (cos t/2, e^{i f} sin t/2), t in [0, pi]
    HalfAngle,
};

struct DegenerateFamily {
    std::string name;
    OddPrime p;
    cplx eigenvalue;
    std::string source_class;
    std::vector<PureState> basis;
    /// Vectors the angles multiply; need not be orthonormal.
    std::vector<CVector> frame;
    AngleConvention convention;

    size_t dim() const noexcept {
        return basis.size();
    }
    double theta_max() const;
    /// Normalized state from frame vectors i and j.
    PureState state(double theta, double phi, size_t i = 0, size_t j = 1) const;
};

/// Families with the frames used in the figures: p=3 "V_-I(+1)", "V_S(w^2)";
/// p=5 "V_-I(-1)", "V_-I(+1)", "V_S(w^2)", "V_S(w^3)", "H(+1)", "B^2".
DegenerateFamily named_family(const std::string &name, OddPrime p);
std::vector<std::string> named_family_names(OddPrime p);

struct ClassEigenstates {
    std::vector<EigenstateRecord> records;
    std::vector<DegenerateFamily> families;
};

ClassEigenstates eigenstates_of_class(
    const CliffordGroup &group, const ReducedConjugacyClass &cls, const StateClassifier &classifier);

struct Census {
    /// Inequivalent non-degenerate non-stabilizer eigenstates.
    std::vector<EigenstateRecord> records;
    /// Inequivalent non-degenerate stabilizer eigenstates.
    std::vector<EigenstateRecord> stabilizer_records;
    /// Clifford-inequivalent degenerate families.
    std::vector<DegenerateFamily> families;
};

Census bestiary_census(const CliffordGroup &group, const StateClassifier &classifier);

/// True if some group element maps span(a) onto span(b).
bool families_equivalent(const DegenerateFamily &a, const DegenerateFamily &b, const CliffordGroup &group);

struct SurfacePoint {
    double theta;
    double phi;
    double mana;
    PureState state;
    std::string classification;
};

struct FamilySurface {
    size_t resolution;
    double theta_max;
    /// mana[k * resolution + l] at theta_k = k theta_max / (res - 1), phi_l = 2 pi l / res.
    std::vector<double> mana;
    SurfacePoint global_max;
    /// Refined grid-local maxima, one per distinct (classification, value).
    std::vector<SurfacePoint> local_maxima;
};

FamilySurface family_mana_surface(
    const DegenerateFamily &family,
    size_t resolution,
    const StateClassifier &classifier,
    size_t i = 0,
    size_t j = 1);

struct FamilyIntersection {
    std::vector<PureState> states;
    std::vector<std::string> classifications;
    /// Number of group elements mapping one family's span onto the other.
    size_t coincident_images;
};

/// span(a) intersected with C span(b) for every group element C.
FamilyIntersection family_intersections(
    const DegenerateFamily &a, const DegenerateFamily &b, const CliffordGroup &group, const StateClassifier &classifier);

/// Names of the representative operators the state is an eigenvector of.
std::vector<std::string> eigenvector_of(const PureState &psi);

struct TableRow {
    RegistryEntry expected;
    std::string eigenvector_of;
    double mana_numeric;
    double min_entry;
    size_t orbit_size;
    bool mana_ok;
    bool min_entry_ok;
    bool orbit_ok;
    bool ok() const {
        return mana_ok && min_entry_ok && orbit_ok;
    }
};

/// One row per table registry entry; mana within 1e-9, exact min entries
/// within 1e-9, rounded ones within 5e-3, orbit sizes exact.
std::vector<TableRow> reproduce_table(const CliffordGroup &group);
nlohmann::json to_json(const std::vector<TableRow> &rows);
std::string to_csv(const std::vector<TableRow> &rows);

}  // namespace magiclab

#endif
