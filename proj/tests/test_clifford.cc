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

#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "doctest.h"
#include "magiclab/clifford.h"
#include "magiclab/error.h"

using namespace magiclab;

namespace {

cplx omega(int p, long long k) {
    return std::polar(1.0, 2 * std::numbers::pi * (double)mod_p(k, p) / p);
}

// X|n> = |n+1>, Z|n> = w^n |n>, built directly.
Matrix shift_x(int p) {
    Matrix m(p, p);
    for (int n = 0; n < p; n++) {
        m((n + 1) % p, n) = 1;
    }
    return m;
}

Matrix clock_z(int p) {
    Matrix m(p, p);
    for (int n = 0; n < p; n++) {
        m(n, n) = omega(p, n);
    }
    return m;
}

Matrix mat_pow(const Matrix &m, int k) {
    Matrix out = Matrix::identity(m.rows());
    for (int i = 0; i < k; i++) {
        out = out * m;
    }
    return out;
}

// w^{uv/2} X^u Z^v from the definition.
Matrix displacement_oracle(int u, int v, int p) {
    int half = (p + 1) / 2;
    return mat_pow(shift_x(p), mod_p(u, p)) * mat_pow(clock_z(p), mod_p(v, p)) * omega(p, (long long)u * v * half);
}

Matrix dft(int p, int sign) {
    Matrix m(p, p);
    for (int j = 0; j < p; j++) {
        for (int k = 0; k < p; k++) {
            m(j, k) = omega(p, sign * j * k) / std::sqrt((double)p);
        }
    }
    return m;
}

}  // namespace

TEST_CASE("displacements match X^u Z^v with the half-phase") {
    for (int q : {3, 5, 7}) {
        OddPrime p(q);
        for (int u = 0; u < q; u++) {
            for (int v = 0; v < q; v++) {
                auto d = weyl_displacement(SymplecticVector::make(u, v, p));
                CHECK(max_abs_diff(d.matrix(), displacement_oracle(u, v, q)) < 1e-12);
            }
        }
    }
    auto x = weyl_displacement(SymplecticVector::make(1, 0, OddPrime(3)));
    CHECK(max_abs_diff(x.matrix(), shift_x(3)) < 1e-15);
}

TEST_CASE("displacement composition law") {
    // D_a D_b = w^{(v1 u2 - u1 v2)/2} D_{a+b}, from Z X = w X Z.
    int q = 5, half = 3;
    OddPrime p(q);
    for (int u1 = 0; u1 < q; u1++) {
        for (int v2 = 0; v2 < q; v2++) {
            int v1 = (u1 + 2) % q, u2 = (v2 * 3 + 1) % q;
            Matrix lhs = displacement_oracle(u1, v1, q) * displacement_oracle(u2, v2, q);
            Matrix rhs = displacement_oracle(u1 + u2, v1 + v2, q) *
                         omega(q, (long long)(v1 * u2 - u1 * v2) * half);
            CHECK(max_abs_diff(lhs, rhs) < 1e-12);
            auto lib = weyl_displacement(SymplecticVector::make(u1, v1, p)) *
                       weyl_displacement(SymplecticVector::make(u2, v2, p));
            CHECK(max_abs_diff(lib.matrix(), lhs) < 1e-12);
        }
    }
}

TEST_CASE("metaplectic unitaries conjugate displacements covariantly") {
    for (int q : {3, 5, 7}) {
        OddPrime p(q);
        auto all = sl2_enumerate(p);
        for (size_t k = 0; k < all.size(); k += (q == 7 ? 5 : 1)) {
            const auto &f = all[k];
            auto v = metaplectic(f);
            CHECK(max_abs_diff(v.matrix() * v.matrix().adjoint(), Matrix::identity(q)) < 1e-10);
            for (int u = 0; u < q; u++) {
                for (int w = 0; w < q; w++) {
                    auto chi = SymplecticVector::make(u, w, p);
                    auto img = f * chi;
                    Matrix lhs = v.matrix() * displacement_oracle(u, w, q) * v.matrix().adjoint();
                    Matrix rhs = displacement_oracle(img.u.value(), img.v.value(), q);
                    REQUIRE(max_abs_diff(lhs, rhs) < 1e-9);
                }
            }
        }
    }
}

TEST_CASE("metaplectic map is a projective homomorphism") {
    for (int q : {3, 5}) {
        OddPrime p(q);
        auto all = sl2_enumerate(p);
        size_t step = q == 3 ? 1 : 7;
        for (size_t a = 0; a < all.size(); a += step) {
            for (size_t b = 0; b < all.size(); b += step) {
                Matrix prod = metaplectic(all[a]).matrix() * metaplectic(all[b]).matrix();
                REQUIRE(projective_equal(prod, metaplectic(all[a] * all[b]).matrix(), 1e-9));
            }
        }
    }
}

TEST_CASE("H is a discrete Fourier transform up to phase") {
    for (int q : {3, 5, 7}) {
        auto h = metaplectic(SL2Matrix::make(0, 1, -1, 0, OddPrime(q))).matrix();
        CHECK((projective_equal(h, dft(q, 1), 1e-9) || projective_equal(h, dft(q, -1), 1e-9)));
    }
}

TEST_CASE("b = 0 branch is a phased permutation") {
    OddPrime p(5);
    auto v = metaplectic(SL2Matrix::make(2, 0, 1, 3, p)).matrix();
    for (int k = 0; k < 5; k++) {
        for (int j = 0; j < 5; j++) {
            double mag = std::abs(v(j, k));
            CHECK(std::abs(mag - (j == 2 * k % 5 ? 1.0 : 0.0)) < 1e-12);
        }
    }
}

TEST_CASE("group order and element arithmetic") {
    for (int q : {3, 5, 7}) {
        OddPrime p(q);
        auto g = CliffordGroup::enumerate(p);
        CHECK(g.size() == (size_t)(q * q * q * (q * q - 1)));
        CHECK(g.symplectic_indices().size() == (size_t)(q * (q * q - 1)));
        CHECK(g[g.identity_index()] == CliffordElement::identity(p));
        for (size_t k = 0; k < g.size(); k += 97) {
            CHECK(g.multiply(k, g.inverse_of(k)) == g.identity_index());
            CHECK(g.index_of(g[k]) == k);
            CHECK(power(g[k], element_order(g[k])) == CliffordElement::identity(p));
        }
    }
    CHECK_THROWS_AS(CliffordGroup::enumerate(OddPrime(17)), MagicError);
    CHECK_THROWS_AS(CliffordGroup::enumerate(OddPrime(11)).matrix(0), MagicError);
}

TEST_CASE("compose agrees with matrix products") {
    std::mt19937_64 rng(7);
    for (int q : {3, 5, 7}) {
        auto g = CliffordGroup::enumerate(OddPrime(q));
        std::uniform_int_distribution<size_t> pick(0, g.size() - 1);
        for (int t = 0; t < 300; t++) {
            size_t a = pick(rng), b = pick(rng);
            Matrix prod = matrix_of(g[a]).matrix() * matrix_of(g[b]).matrix();
            REQUIRE(projective_equal(prod, matrix_of(compose(g[a], g[b])).matrix(), 1e-9));
            REQUIRE(g.multiply(a, b) == g.index_of(compose(g[a], g[b])));
        }
    }
    CHECK_THROWS_AS(compose(CliffordElement::identity(OddPrime(3)), CliffordElement::identity(OddPrime(5))),
                    MagicError);
}

TEST_CASE("Clifford unitaries map displacements to displacements") {
    for (int q : {3, 5, 7}) {
        OddPrime p(q);
        auto g = CliffordGroup::enumerate(p);
        std::vector<Matrix> ds;
        for (int u = 0; u < q; u++) {
            for (int v = 0; v < q; v++) {
                ds.push_back(displacement_oracle(u, v, q));
            }
        }
        size_t step = q == 3 ? 1 : (q == 5 ? 13 : 101);
        for (size_t k = 0; k < g.size(); k += step) {
            const Matrix &c = g.matrix(k).matrix();
            for (const auto &d : ds) {
                Matrix img = c * d * c.adjoint();
                bool found = std::any_of(ds.begin(), ds.end(), [&](const Matrix &e) {
                    return projective_equal(img, e, 1e-9);
                });
                REQUIRE(found);
            }
        }
    }
}

TEST_CASE("conjugacy class counts") {
    auto g3 = CliffordGroup::enumerate(OddPrime(3));
    auto c3 = clifford_conjugacy_classes(g3);
    CHECK(c3.size() == 10);
    size_t total = 0;
    for (const auto &c : c3) {
        total += c.size();
        CHECK(216 % c.size() == 0);
    }
    CHECK(total == 216);
    auto g5 = CliffordGroup::enumerate(OddPrime(5));
    auto c5 = clifford_conjugacy_classes(g5);
    CHECK(c5.size() == 14);
    std::map<std::string, size_t> sizes;
    for (const auto &c : c5) {
        if (c.paper_name) {
            sizes[*c.paper_name] = c.size();
        }
    }
    CHECK(sizes["H"] == 750);
    CHECK(sizes["V_-I"] == 25);
    CHECK(sizes["X V_S"] == 120);
}

TEST_CASE("qutrit reduced classes") {
    auto g = CliffordGroup::enumerate(OddPrime(3));
    auto classes = clifford_conjugacy_classes(g);
    auto red = reduced_conjugacy_classes(g, classes);
    CHECK(red.size() == 7);
    std::set<size_t> seen;
    for (const auto &r : red) {
        for (size_t c : r.member_classes) {
            CHECK(seen.insert(c).second);
        }
    }
    CHECK(seen.size() == classes.size());
}

TEST_CASE("stabilizer states form p+1 mutually unbiased bases") {
    for (int q : {3, 5, 7}) {
        auto s = stabilizer_states(OddPrime(q));
        REQUIRE(s.size() == (size_t)(q * (q + 1)));
        for (size_t a = 0; a < s.size(); a++) {
            for (size_t b = a + 1; b < s.size(); b++) {
                double f = fidelity(s[a], s[b]);
                bool same_basis = a / q == b / q;
                CHECK(std::abs(f - (same_basis ? 0.0 : 1.0 / q)) < 1e-10);
            }
        }
    }
}

TEST_CASE("Clifford images of stabilizer states are stabilizer states") {
    OddPrime p(3);
    auto g = CliffordGroup::enumerate(p);
    auto s = stabilizer_states(p);
    for (size_t k = 0; k < g.size(); k++) {
        for (const auto &st : s) {
            auto img = PureState::from_amplitudes(g.matrix(k) * st.amplitudes());
            bool hit = std::any_of(s.begin(), s.end(), [&](const PureState &t) {
                return same_ray(img, t, 1e-9);
            });
            REQUIRE(hit);
        }
    }
}

TEST_CASE("named elements and generated subgroups") {
    OddPrime p3(3), p5(5);
    CHECK(named_element("H", p3).F == SL2Matrix::make(0, 1, -1, 0, p3));
    CHECK_THROWS_AS(named_element("nope", p3), MagicError);
    CHECK(subgroup_generate({named_element("H", p3)}).size() == 4);
    CHECK(subgroup_generate({named_element("H", p3), named_element("V_S", p3)}).size() == 24);
    CHECK(subgroup_generate({named_element("X", p3), named_element("Z", p3)}).size() == 9);
    auto bh = subgroup_generate({named_element("B", p5), named_element("H'", p5)});
    CHECK(bh.size() == 12);
    CHECK(to_string(subgroup_label(bh)) == "Dicyclic_3");
    auto hh = subgroup_generate({named_element("H", p5), named_element("H'", p5)});
    CHECK(to_string(subgroup_label(hh)) == "Quaternion");
}
