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

#ifndef MAGICLAB_CLIFFORD_H
#define MAGICLAB_CLIFFORD_H

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "magiclab/finite_field.h"
#include "magiclab/linalg.h"

namespace magiclab {

/// Projective Clifford unitary D_chi V_F, labelled by (chi, F).
struct CliffordElement {
    SymplecticVector chi;
    SL2Matrix F;

    static CliffordElement identity(OddPrime p);
    static CliffordElement displacement(const SymplecticVector &chi);
    static CliffordElement symplectic(const SL2Matrix &F);
    OddPrime modulus() const noexcept {
        return F.modulus();
    }
    bool is_symplectic() const noexcept {
        return chi.is_zero();
    }
    bool operator==(const CliffordElement &other) const = default;
    std::string str() const;
};

/// (chi1 + F1 chi2, F1 F2). Throws DimensionMismatch for mixed p.
CliffordElement compose(const CliffordElement &a, const CliffordElement &b);
CliffordElement inverse(const CliffordElement &a);
CliffordElement power(const CliffordElement &a, long long k);
int element_order(const CliffordElement &a);

/// w^{uv/2} X^u Z^v with X|n> = |n+1>, Z|n> = w^n |n>.
UnitaryMatrix weyl_displacement(const SymplecticVector &chi);
/// V_F from the two-branch matrix-element formula (b != 0 and b == 0).
UnitaryMatrix metaplectic(const SL2Matrix &F);
UnitaryMatrix matrix_of(const CliffordElement &e);

/// The whole group Z_p^2 x| SL(2, Z_p), indexed as sl2_index * p^2 + u p + v.
class CliffordGroup {
   public:
    static constexpr int kMaxPrime = 13;
    static constexpr int kMaxTabulatedPrime = 7;

    /// Throws TooLarge for p > 13. Matrices are tabulated for p <= 7.
    static CliffordGroup enumerate(OddPrime p);

    OddPrime p() const noexcept {
        return p_;
    }
    size_t size() const noexcept {
        return elements_.size();
    }
    const std::vector<CliffordElement> &elements() const noexcept {
        return elements_;
    }
    const CliffordElement &operator[](size_t k) const {
        return elements_[k];
    }
    size_t index_of(const CliffordElement &e) const;
    size_t multiply(size_t a, size_t b) const;
    size_t inverse_of(size_t a) const;
    size_t identity_index() const;
    /// Indices with chi = 0.
    std::vector<size_t> symplectic_indices() const;

    bool has_matrices() const noexcept {
        return !matrices_.empty();
    }
    /// Tabulated matrix; throws Unsupported when p > 7.
    const UnitaryMatrix &matrix(size_t k) const;

   private:
    explicit CliffordGroup(OddPrime p);
    OddPrime p_;
    SL2Index sl2_;
    std::vector<CliffordElement> elements_;
    std::vector<UnitaryMatrix> matrices_;
};

/// Named elements. All p: I, X, Z, H, V_S, V_S^-1, V_-I, X V_S, X V_S^-1.
/// p=3 adds V_S^2, N, N^-1, H', -H', X V_S^2. p=5 adds A, A', B, B^2, B^-1, H', K,
/// X^2 V_S, X^2 V_S^-1. H is V of (0 1; -1 0).
std::vector<std::pair<std::string, CliffordElement>> clifford_symbol_table(OddPrime p);
CliffordElement named_element(const std::string &name, OddPrime p);

struct ConjugacyClass {
    std::vector<size_t> members;
    size_t representative;
    std::optional<std::string> paper_name;
    size_t size() const noexcept {
        return members.size();
    }
};

/// Classes ordered by representative index; representative = smallest index.
std::vector<ConjugacyClass> clifford_conjugacy_classes(const CliffordGroup &group);

struct ReducedConjugacyClass {
    std::vector<size_t> member_classes;
    size_t representative;
    std::optional<std::string> paper_name;
};

/// Merges classes whose representatives' eigenprojector sets are related by a
/// Clifford conjugation. Requires tabulated matrices.
std::vector<ReducedConjugacyClass> reduced_conjugacy_classes(
    const CliffordGroup &group, const std::vector<ConjugacyClass> &classes);

/// Computational basis, then eigenbases of D_(1,v) for v = 0..p-1.
std::vector<PureState> stabilizer_states(OddPrime p);

/// Closure of the generators under compose, in breadth-first order from the
/// identity. Throws ClosureOverflow past the Clifford group order.
std::vector<CliffordElement> subgroup_generate(const std::vector<CliffordElement> &gens);
GroupLabel subgroup_label(const std::vector<CliffordElement> &elements);

nlohmann::json to_json(const CliffordElement &e);
nlohmann::json class_report_json(
    const CliffordGroup &group,
    const std::vector<ConjugacyClass> &classes,
    const std::vector<ReducedConjugacyClass> *reduced);

}  // namespace magiclab

#endif
