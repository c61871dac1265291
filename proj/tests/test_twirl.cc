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
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "magiclab/bestiary.h"
#include "magiclab/error.h"
#include "magiclab/optimize.h"
#include "magiclab/twirl.h"

using namespace magiclab;

namespace {

const std::vector<TwirlScheme> kSchemes{TwirlScheme::H2d,          TwirlScheme::N,
                                        TwirlScheme::XVS,          TwirlScheme::Symplectic,
                                        TwirlScheme::VSDegenerate, TwirlScheme::VMinusIDegenerate,
                                        TwirlScheme::Hm5,          TwirlScheme::Bm15};

DensityMatrix random_rho(size_t n, std::mt19937_64 &rng) {
    return DensityMatrix::mixture({0.5, 0.3, 0.2},
                                  {random_state(n, rng), random_state(n, rng), random_state(n, rng)});
}

// Average of U rho U^dag written out directly.
Matrix twirl_oracle(const DensityMatrix &rho, const TwirlChannel &ch) {
    Matrix acc(rho.dim(), rho.dim());
    for (const auto &u : ch.matrices()) {
        acc += u.matrix() * rho.matrix() * u.matrix().adjoint();
    }
    return acc * cplx(1.0 / (double)ch.size());
}

}  // namespace

TEST_CASE("twirl is the group average, idempotent and commuting") {
    std::mt19937_64 rng(2);
    for (auto s : kSchemes) {
        auto ch = scheme_channel(s);
        size_t n = scheme_prime(s).dim();
        for (int t = 0; t < 5; t++) {
            auto rho = random_rho(n, rng);
            auto once = twirl(rho, ch);
            CHECK(max_abs_diff(once.matrix(), twirl_oracle(rho, ch)) < 1e-12);
            CHECK(max_abs_diff(twirl(once, ch).matrix(), once.matrix()) < 1e-10);
            for (const auto &u : ch.matrices()) {
                CHECK(max_abs_diff(u.matrix() * once.matrix(), once.matrix() * u.matrix()) < 1e-9);
            }
        }
    }
}

TEST_CASE("fixed-point dimensions") {
    std::map<TwirlScheme, size_t> dims{{TwirlScheme::H2d, 2}, {TwirlScheme::N, 2},
                                       {TwirlScheme::XVS, 2}, {TwirlScheme::Symplectic, 1},
                                       {TwirlScheme::VSDegenerate, 4}, {TwirlScheme::VMinusIDegenerate, 4},
                                       {TwirlScheme::Hm5, 3}, {TwirlScheme::Bm15, 2}};
    for (auto s : kSchemes) {
        auto ch = scheme_channel(s);
        CHECK_MESSAGE(fixed_point_space_dimension(ch) == dims[s], scheme_name(s));
        CHECK(scheme_parameter_names(s).size() == dims[s]);
    }
}

TEST_CASE("coordinates round-trip through scheme states") {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> small(0.0, 0.1);
    for (auto s : kSchemes) {
        size_t k = scheme_parameter_names(s).size();
        if (s == TwirlScheme::VSDegenerate || s == TwirlScheme::VMinusIDegenerate) {
            continue;  // Bloch coordinates are covered below.
        }
        std::vector<double> params(k);
        for (auto &x : params) {
            x = small(rng);
        }
        auto rho = scheme_state(s, params);
        auto c = post_twirl_coordinates(rho, s);
        REQUIRE(c.parameters.size() == k);
        for (size_t i = 0; i < k; i++) {
            CHECK(std::abs(c.parameters[i] - params[i]) < 1e-9);
        }
        CHECK(c.residual < 1e-9);
    }
    for (auto s : {TwirlScheme::VSDegenerate, TwirlScheme::VMinusIDegenerate}) {
        std::vector<double> params{0.1, -0.2, 0.3, 0.05};
        auto c = post_twirl_coordinates(scheme_state(s, params), s);
        for (size_t i = 0; i < 4; i++) {
            CHECK(std::abs(c.parameters[i] - params[i]) < 1e-9);
        }
    }
}

TEST_CASE("twirled random states always have coordinates") {
    std::mt19937_64 rng(6);
    for (auto s : kSchemes) {
        auto ch = scheme_channel(s);
        auto rho = twirl(random_rho(scheme_prime(s).dim(), rng), ch);
        auto c = post_twirl_coordinates(rho, s);
        CHECK(c.residual < 1e-8);
        CHECK(max_abs_diff(scheme_state(s, c.parameters).matrix(), rho.matrix()) < 1e-8);
    }
}

TEST_CASE("states outside the fixed space are rejected") {
    auto rho = DensityMatrix::from_state(PureState::from_amplitudes({1, 1, 0}));
    try {
        post_twirl_coordinates(rho, TwirlScheme::H2d);
        FAIL("expected NotInFixedSpace");
    } catch (const MagicError &e) {
        CHECK(e.code() == Errc::NotInFixedSpace);
    }
    CHECK_THROWS_AS(scheme_state(TwirlScheme::H2d, {0.1}), MagicError);
    CHECK_THROWS_AS(scheme_state(TwirlScheme::H2d, {0.8, 0.8}), MagicError);
    CHECK_THROWS_AS(scheme_from_name("nope"), MagicError);
    CHECK_THROWS_AS(twirl(DensityMatrix::maximally_mixed(5), scheme_channel(TwirlScheme::H2d)), MagicError);
}

TEST_CASE("symplectic twirl depolarizes towards the strange state") {
    OddPrime p(3);
    auto s = PureState::from_amplitudes({0, 1, -1});
    auto d0 = symplectic_depolarize(DensityMatrix::from_state(s));
    CHECK(std::abs(d0.delta) < 1e-12);
    CHECK(std::abs(d0.fidelity - 1) < 1e-12);
    CHECK(std::abs(symplectic_depolarize(DensityMatrix::maximally_mixed(3)).delta - 1) < 1e-12);
    // Fidelity with |S> is invariant, and delta follows F = 1 - 2 delta / 3.
    std::mt19937_64 rng(8);
    for (int t = 0; t < 10; t++) {
        auto rho = random_rho(3, rng);
        auto d = symplectic_depolarize(rho);
        double f = (inner(s.amplitudes(), rho.matrix() * s.amplitudes())).real();
        CHECK(std::abs(d.fidelity - f) < 1e-10);
        CHECK(std::abs(d.delta - 1.5 * (1 - f)) < 1e-10);
    }
}

TEST_CASE("channel construction checks closure") {
    OddPrime p(3);
    CHECK_THROWS_AS(TwirlChannel::from_elements({CliffordElement::identity(p), named_element("H", p)}), MagicError);
    auto ch = TwirlChannel::generated_by({named_element("H", p)});
    CHECK(ch.size() == 4);
    CHECK(TwirlChannel::from_elements(ch.elements()).size() == 4);
}

TEST_CASE("stabilizing subgroups") {
    struct Want {
        const char *name;
        size_t order;
        const char *label;
    };
    auto g3 = CliffordGroup::enumerate(OddPrime(3));
    for (auto w : {Want{"S", 24, "SL(2,Z_3)"}, Want{"H1", 4, "C_4"}, Want{"N+", 6, "C_6"}, Want{"XVS", 3, "C_3"}}) {
        auto r = stabilizer_report(w.name, g3);
        CHECK(r.order == w.order);
        CHECK(to_string(r.label) == w.label);
        CHECK(r.generated_order == r.order);
    }
    auto g5 = CliffordGroup::enumerate(OddPrime(5));
    for (auto w : {Want{"Hi", 4, "C_4"}, Want{"Hm1", 8, "Quaternion"}, Want{"B-1", 12, "Dicyclic_3"},
                   Want{"Bw-", 6, "C_6"}, Want{"Bw+", 6, "C_6"}, Want{"A-", 10, "C_10"}, Want{"A+", 10, "C_10"},
                   Want{"XVS1", 5, "C_5"}}) {
        auto r = stabilizer_report(w.name, g5);
        CHECK_MESSAGE(r.order == w.order, w.name);
        CHECK_MESSAGE(to_string(r.label) == w.label, w.name);
        CHECK_MESSAGE(r.generated_order == r.order, w.name);
    }
}

TEST_CASE("stabilizing subgroup is a group fixing the ray") {
    auto g = CliffordGroup::enumerate(OddPrime(5));
    auto psi = named_state("B-1", OddPrime(5));
    auto idx = stabilizing_subgroup(psi, g);
    std::set<size_t> members(idx.begin(), idx.end());
    for (size_t a : idx) {
        auto img = g.matrix(a) * psi.amplitudes();
        CHECK(1 - std::abs(inner(psi.amplitudes(), img)) < 1e-8);
        for (size_t b : idx) {
            CHECK(members.count(g.multiply(a, b)) == 1);
        }
    }
}
