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

#ifndef MAGICLAB_FINITE_FIELD_H
#define MAGICLAB_FINITE_FIELD_H

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace magiclab {

bool is_odd_prime(long long n);

/// A validated odd prime modulus.
class OddPrime {
   public:
    /// Throws MagicError(NotOddPrime) unless p is an odd prime.
    explicit OddPrime(long long p);
    int value() const noexcept {
        return p_;
    }
    size_t dim() const noexcept {
        return (size_t)p_;
    }
    bool operator==(const OddPrime &other) const = default;

   private:
    friend class FpScalar;
    OddPrime(int p, int) : p_(p) {
    }
    int p_;
};

/// An element of Z_p that remembers its modulus.
class FpScalar {
   public:
    FpScalar(long long value, OddPrime p);
    int value() const noexcept {
        return value_;
    }
    OddPrime modulus() const noexcept {
        return OddPrime(p_, 0);
    }
    int p() const noexcept {
        return p_;
    }

    FpScalar operator+(const FpScalar &other) const;
    FpScalar operator-(const FpScalar &other) const;
    FpScalar operator*(const FpScalar &other) const;
    FpScalar operator-() const;
    bool operator==(const FpScalar &other) const = default;

   private:
    FpScalar(int value, int p, int) : value_(value), p_(p) {
    }
    int value_;
    int p_;
};

/// Multiplicative inverse mod p. Throws ZeroInverse for 0.
FpScalar inv_mod(const FpScalar &a);
int inv_mod(long long a, int p);
inline int mod_p(long long a, int p) {
    long long r = a % p;
    return (int)(r < 0 ? r + p : r);
}

struct SymplecticVector {
    FpScalar u;
    FpScalar v;

    static SymplecticVector make(long long u, long long v, OddPrime p);
    OddPrime modulus() const noexcept {
        return u.modulus();
    }
    bool is_zero() const noexcept {
        return u.value() == 0 && v.value() == 0;
    }
    SymplecticVector operator+(const SymplecticVector &other) const;
    SymplecticVector operator-() const;
    bool operator==(const SymplecticVector &other) const = default;
};

/// 2x2 matrix over Z_p with unit determinant: (a b; c d).
struct SL2Matrix {
    FpScalar a;
    FpScalar b;
    FpScalar c;
    FpScalar d;

    /// Throws NotSymplectic if ad - bc != 1 mod p.
    static SL2Matrix make(long long a, long long b, long long c, long long d, OddPrime p);
    static SL2Matrix identity(OddPrime p);

    OddPrime modulus() const noexcept {
        return a.modulus();
    }
    SL2Matrix operator*(const SL2Matrix &other) const;
    SymplecticVector operator*(const SymplecticVector &x) const;
    SL2Matrix inverse() const;
    SL2Matrix pow(long long k) const;
    std::array<int, 4> tuple() const {
        return {a.value(), b.value(), c.value(), d.value()};
    }
    int order() const;
    bool operator==(const SL2Matrix &other) const = default;
    bool operator<(const SL2Matrix &other) const {
        return tuple() < other.tuple();
    }
    std::string str() const;
};

/// All of SL(2, Z_p) in lexicographic (a, b, c, d) order.
std::vector<SL2Matrix> sl2_enumerate(OddPrime p);

/// Position of a matrix in sl2_enumerate order, computed without a table search.
class SL2Index {
   public:
    explicit SL2Index(OddPrime p);
    size_t size() const noexcept {
        return elements_.size();
    }
    size_t index_of(const SL2Matrix &m) const;
    const SL2Matrix &operator[](size_t k) const {
        return elements_[k];
    }
    const std::vector<SL2Matrix> &elements() const noexcept {
        return elements_;
    }

   private:
    int p_;
    std::vector<SL2Matrix> elements_;
    std::vector<int> lookup_;
};

/// Names used for SL(2, Z_p) elements: I, -I, H, S, S^2, N, N^-1 (p=3) and
/// I, -I, H, S, S^2, -S, -S^2, HS, (HS)^2 (p=5). Empty map for other p.
std::vector<std::pair<std::string, SL2Matrix>> sl2_symbol_table(OddPrime p);

struct SL2Class {
    SL2Matrix representative;
    std::vector<SL2Matrix> members;
    std::optional<std::string> paper_name;
    size_t size() const noexcept {
        return members.size();
    }
};

/// Conjugacy classes, each represented by its lexicographically smallest
/// member, listed in order of representative.
std::vector<SL2Class> sl2_conjugacy_classes(OddPrime p);

enum class GroupKind { Trivial, Cyclic, Quaternion, Dicyclic3, SL2Z3, Other };

struct GroupLabel {
    GroupKind kind;
    size_t order;
    bool operator==(const GroupLabel &other) const = default;
};

enum class LabelStyle { Z, C };

/// Identifies a small group from its element-order multiset and commutativity.
GroupLabel label_from_orders(const std::vector<int> &element_orders, bool abelian);
std::string to_string(const GroupLabel &label, LabelStyle style = LabelStyle::C);

struct SL2Subgroup {
    std::vector<SL2Matrix> elements;
    GroupLabel label;
    size_t conjugacy_class;
};

/// The 14 proper subgroups of SL(2, Z_3) with labels and conjugacy-class ids.
/// Throws Unsupported for p != 3.
std::vector<SL2Subgroup> sl2_subgroup_lattice(OddPrime p);

/// {t^2 mod p}, ascending, including 0.
std::vector<FpScalar> quadratic_residues(OddPrime p);

nlohmann::json to_json(const std::vector<SL2Class> &classes);

}  // namespace magiclab

#endif
