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

#include <map>
#include <set>

#include "doctest.h"
#include "magiclab/error.h"
#include "magiclab/finite_field.h"

using namespace magiclab;

namespace {

int brute_inverse(int a, int p) {
    for (int x = 1; x < p; x++) {
        if (a * x % p == 1) {
            return x;
        }
    }
    return -1;
}

}  // namespace

TEST_CASE("odd prime validation") {
    for (int p : {3, 5, 7, 11, 13, 23}) {
        CHECK_NOTHROW(OddPrime{p});
    }
    for (int p : {-3, 0, 1, 2, 4, 9, 15, 25}) {
        CHECK_THROWS_AS(OddPrime{p}, MagicError);
    }
}

TEST_CASE("inverse matches brute force") {
    for (int p : {3, 5, 7, 11, 13}) {
        for (int a = 1; a < p; a++) {
            CHECK(inv_mod(a, p) == brute_inverse(a, p));
            CHECK(inv_mod(a - 3 * p, p) == brute_inverse(a, p));
        }
        try {
            inv_mod(FpScalar(0, OddPrime(p)));
            FAIL("expected ZeroInverse");
        } catch (const MagicError &e) {
            CHECK(e.code() == Errc::ZeroInverse);
        }
    }
}

TEST_CASE("field arithmetic wraps negatives") {
    OddPrime p(5);
    FpScalar a(-1, p), b(7, p);
    CHECK(a.value() == 4);
    CHECK(b.value() == 2);
    CHECK((a + b).value() == 1);
    CHECK((a * b).value() == 3);
    CHECK((-b).value() == 3);
    CHECK(mod_p(-12, 5) == 3);
}

TEST_CASE("SL2 construction rejects det != 1") {
    OddPrime p(3);
    CHECK_NOTHROW(SL2Matrix::make(0, 1, -1, 0, p));
    try {
        SL2Matrix::make(1, 1, 1, 1, p);
        FAIL("expected NotSymplectic");
    } catch (const MagicError &e) {
        CHECK(e.code() == Errc::NotSymplectic);
    }
}

TEST_CASE("SL2 order is p(p^2-1) and the index is a bijection") {
    for (int q : {3, 5, 7, 11}) {
        OddPrime p(q);
        auto all = sl2_enumerate(p);
        CHECK(all.size() == (size_t)(q * (q * q - 1)));
        CHECK(std::is_sorted(all.begin(), all.end()));
        SL2Index idx(p);
        for (size_t k = 0; k < all.size(); k++) {
            REQUIRE(idx.index_of(all[k]) == k);
        }
    }
}

TEST_CASE("SL2 group axioms on samples") {
    OddPrime p(7);
    auto all = sl2_enumerate(p);
    auto id = SL2Matrix::identity(p);
    for (size_t k = 0; k < all.size(); k += 7) {
        const auto &m = all[k];
        CHECK(m * m.inverse() == id);
        CHECK(m.pow(m.order()) == id);
        CHECK(m.pow(-1) == m.inverse());
        const auto &n = all[(k * 13 + 5) % all.size()];
        auto x = SymplecticVector::make(2, 5, p);
        CHECK((m * n) * x == m * (n * x));
    }
}

TEST_CASE("SL(2,Z_3) conjugacy classes") {
    auto classes = sl2_conjugacy_classes(OddPrime(3));
    std::multiset<size_t> sizes;
    size_t total = 0;
    for (const auto &c : classes) {
        sizes.insert(c.size());
        total += c.size();
        CHECK(c.members.front() == c.representative);
    }
    CHECK(classes.size() == 7);
    CHECK(total == 24);
    CHECK(sizes == std::multiset<size_t>{1, 1, 4, 4, 4, 4, 6});
}

TEST_CASE("class count of SL(2,Z_p) is p+4") {
    for (int q : {3, 5, 7}) {
        CHECK(sl2_conjugacy_classes(OddPrime(q)).size() == (size_t)(q + 4));
    }
}

TEST_CASE("conjugacy classes are closed under conjugation") {
    OddPrime p(5);
    auto all = sl2_enumerate(p);
    for (const auto &c : sl2_conjugacy_classes(p)) {
        std::set<SL2Matrix> members(c.members.begin(), c.members.end());
        for (size_t k = 0; k < all.size(); k += 11) {
            CHECK(members.count(all[k] * c.representative * all[k].inverse()) == 1);
        }
    }
}

TEST_CASE("subgroup lattice of SL(2,Z_3)") {
    auto lattice = sl2_subgroup_lattice(OddPrime(3));
    CHECK(lattice.size() == 14);
    std::set<size_t> ids;
    std::map<size_t, size_t> by_order;
    for (const auto &s : lattice) {
        ids.insert(s.conjugacy_class);
        by_order[s.elements.size()]++;
        CHECK(24 % s.elements.size() == 0);
    }
    CHECK(ids.size() == 6);
    // 1, {+-I}, four C_3, four C_6, three C_4, Q_8.
    CHECK(by_order == std::map<size_t, size_t>{{1, 1}, {2, 1}, {3, 4}, {4, 3}, {6, 4}, {8, 1}});
    CHECK_THROWS_AS(sl2_subgroup_lattice(OddPrime(5)), MagicError);
}

TEST_CASE("group labels from order profiles") {
    CHECK(to_string(label_from_orders({1, 2, 4, 4}, true)) == "C_4");
    CHECK(to_string(label_from_orders({1, 2, 4, 4, 4, 4, 4, 4}, false)) == "Quaternion");
    CHECK(to_string(label_from_orders({1, 2, 3, 3, 6, 6, 4, 4, 4, 4, 4, 4}, false)) == "Dicyclic_3");
    // C_12 has the same order but is abelian with elements of order 12.
    auto c12 = label_from_orders({1, 2, 3, 3, 4, 4, 6, 6, 12, 12, 12, 12}, true);
    CHECK(c12.kind == GroupKind::Cyclic);
    CHECK(c12.order == 12);
    // D_6 (order 12) has seven involutions.
    auto d6 = label_from_orders({1, 2, 2, 2, 2, 2, 2, 2, 3, 3, 6, 6}, false);
    CHECK(d6.kind == GroupKind::Other);
    CHECK(to_string(label_from_orders({1, 3, 3}, true), LabelStyle::Z) == "Z_3");
}

TEST_CASE("quadratic residues") {
    auto r = quadratic_residues(OddPrime(7));
    std::vector<int> vals;
    for (const auto &x : r) {
        vals.push_back(x.value());
    }
    CHECK(vals == std::vector<int>{0, 1, 2, 4});
}
