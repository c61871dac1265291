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
#include <numbers>
#include <random>
#include <set>

#include "doctest.h"
#include "magiclab/bestiary.h"
#include "magiclab/error.h"
#include "magiclab/phase_space.h"
#include "magiclab/twirl.h"

using namespace magiclab;

namespace {

const double kS3 = std::sqrt(3.0);
const double kS5 = std::sqrt(5.0);

// Closed-form mana values, written out independently of the registry.
std::map<std::string, double> qutrit_mana() {
    return {{"S", std::log(5.0 / 3)},
            {"H1", std::log(1.0 / 3 + 2 / kS3)},
            {"N+", std::log(5.0 / 3)},
            {"XVS", std::log((1 + 4 * std::cos(std::numbers::pi / 9)) / 3)}};
}

std::map<std::string, double> ququint_mana() {
    return {{"Hi", std::log((2 * std::sqrt(5 + 2 * kS5) + 3) / 5)},
            {"Hm1", std::log(9.0 / 5)},
            {"B-1", std::log(0.2 + 4 / kS5)},
            {"Bw-", std::asinh(3 + kS5) - std::log(5.0)},
            {"Bw+", std::log((std::sqrt(15 + 6 * kS5) + 4) / 5)},
            {"A-", std::log(1.2 + 1 / kS5)},
            {"A+", std::log(1.2 + 1 / kS5)},
            {"XVS1", std::log(1 + 2 / kS5)}};
}

struct Fixture {
    CliffordGroup g3 = CliffordGroup::enumerate(OddPrime(3));
    CliffordGroup g5 = CliffordGroup::enumerate(OddPrime(5));
    StateClassifier c3{g3};
    StateClassifier c5{g5};
};

Fixture &fx() {
    static Fixture f;
    return f;
}

}  // namespace

TEST_CASE("qutrit table values") {
    auto rows = reproduce_table(fx().g3);
    REQUIRE(rows.size() == 4);
    std::map<std::string, size_t> orbit{{"S", 9}, {"H1", 54}, {"N+", 36}, {"XVS", 72}};
    std::map<std::string, double> min{{"S", -1.0 / 3}, {"H1", 1 / (-6 - 6 * kS3)}, {"N+", -1.0 / 6}};
    for (const auto &r : rows) {
        const auto &n = r.expected.name;
        CHECK(std::abs(r.mana_numeric - qutrit_mana()[n]) < 1e-9);
        CHECK(r.orbit_size == orbit[n]);
        if (min.count(n)) {
            CHECK(std::abs(r.min_entry - min[n]) < 1e-9);
        } else {
            CHECK(std::abs(r.min_entry + 0.10) < 5e-3);
        }
        CHECK(r.ok());
    }
}

TEST_CASE("ququint table values") {
    auto rows = reproduce_table(fx().g5);
    REQUIRE(rows.size() == 8);
    std::map<std::string, size_t> orbit{{"Hi", 750}, {"Hm1", 375}, {"B-1", 250}, {"Bw-", 500},
                                        {"Bw+", 500}, {"A-", 300}, {"A+", 300}, {"XVS1", 600}};
    for (const auto &r : rows) {
        const auto &n = r.expected.name;
        CHECK(std::abs(r.mana_numeric - ququint_mana()[n]) < 1e-9);
        CHECK(r.orbit_size == orbit[n]);
        CHECK(r.ok());
    }
}

TEST_CASE("hand-built states carry the tabulated mana") {
    OddPrime p5(5);
    cplx w = std::polar(1.0, 2 * std::numbers::pi / 5);
    CHECK(std::abs(mana(PureState::from_amplitudes({0, 0, 1, -1, 0})) - ququint_mana()["A-"]) < 1e-12);
    CHECK(std::abs(mana(PureState::from_amplitudes({1 - kS5, 1, 1, 1, 1})) - ququint_mana()["Hm1"]) < 1e-12);
    CHECK(std::abs(mana(PureState::from_amplitudes({1, 1, w * w * w, 1, w * w})) - ququint_mana()["XVS1"]) < 1e-12);
    CHECK(std::abs(mana(PureState::from_amplitudes({0, 1, -1})) - qutrit_mana()["S"]) < 1e-12);
    CHECK(std::abs(mana(PureState::from_amplitudes({1, 1, 0}))) > 0.0);
    CHECK(same_ray(named_state("A-", p5), PureState::from_amplitudes({0, 0, 1, -1, 0})));
}

TEST_CASE("registry states are eigenvectors of their operators") {
    for (int q : {3, 5}) {
        OddPrime p(q);
        for (const auto &e : registry(p)) {
            auto psi = named_state(e.name, p);
            auto ops = eigenvector_of(psi);
            CHECK_MESSAGE(!ops.empty(), e.name);
            for (const auto &op : ops) {
                auto img = named_operator_matrix(op, p) * psi.amplitudes();
                CHECK(1 - std::abs(inner(psi.amplitudes(), img)) < 1e-8);
            }
        }
    }
    CHECK_THROWS_AS(named_state("nope", OddPrime(3)), MagicError);
}

TEST_CASE("orbit-stabilizer relation") {
    for (auto *g : {&fx().g3, &fx().g5}) {
        for (const auto &e : registry(g->p())) {
            auto psi = named_state(e.name, g->p());
            size_t orb = orbit(psi, *g).size();
            size_t stab = stabilizing_subgroup(psi, *g).size();
            CHECK_MESSAGE(orb * stab == g->size(), e.name);
            CHECK(g->size() % orb == 0);
        }
    }
}

TEST_CASE("aliases land in their parent orbits") {
    std::map<std::string, std::string> q3{{"Hm1", "H1"}, {"XVS'", "XVS"}, {"XVS''", "XVS"}};
    for (const auto &[alias, parent] : q3) {
        CHECK(fx().c3.classify(named_state(alias, OddPrime(3))) == parent);
    }
    std::map<std::string, std::string> q5{{"Hmi", "Hi"}, {"Bp-1", "B-1"}};
    for (const auto &[alias, parent] : q5) {
        CHECK(fx().c5.classify(named_state(alias, OddPrime(5))) == parent);
    }
}

TEST_CASE("classification is Clifford invariant") {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<size_t> pick(0, fx().g3.size() - 1);
    OddPrime p(3);
    for (const auto &e : registry(p)) {
        if (!e.table_row) {
            continue;
        }
        auto img = PureState::from_amplitudes(fx().g3.matrix(pick(rng)) * named_state(e.name, p).amplitudes());
        CHECK(fx().c3.classify(img) == e.name);
    }
    // Z|S> stays in the strange orbit.
    auto z = named_operator_matrix("Z", p);
    CHECK(fx().c3.classify(PureState::from_amplitudes(z * named_state("S", p).amplitudes())) == "S");
    CHECK(fx().c3.classify(PureState::basis(3, 0)) == kStabilizerName);
    CHECK(fx().c3.classify(PureState::from_amplitudes({1, 0.3, 0.1})) == kUnclassifiedName);
}

TEST_CASE("qutrit census") {
    auto c = bestiary_census(fx().g3, fx().c3);
    CHECK(c.records.size() == 4);
    CHECK(c.families.size() == 2);
    for (const auto &r : c.records) {
        CHECK(!r.stabilizer);
        CHECK(216 % r.orbit_size == 0);
    }
}

TEST_CASE("ququint census") {
    auto c = bestiary_census(fx().g5, fx().c5);
    CHECK(c.records.size() == 8);
    size_t one_param = 0, two_param = 0;
    for (const auto &f : c.families) {
        one_param += f.dim() == 2 ? 1 : 0;
        two_param += f.dim() == 3 ? 1 : 0;
    }
    CHECK(two_param == 1);
    CHECK(one_param == 3);
}

TEST_CASE("family states stay in the eigenspace") {
    for (int q : {3, 5}) {
        OddPrime p(q);
        for (const auto &name : named_family_names(p)) {
            auto f = named_family(name, p);
            Matrix proj = projector_onto([&] {
                std::vector<CVector> b;
                for (const auto &s : f.basis) {
                    b.push_back(s.amplitudes());
                }
                return b;
            }());
            for (double t : {0.0, 0.3, f.theta_max()}) {
                for (double ph : {0.0, 1.1, 4.0}) {
                    auto s = f.state(t, ph);
                    auto back = proj * s.amplitudes();
                    CHECK(std::abs(norm(back) - 1) < 1e-10);
                }
            }
        }
    }
}

TEST_CASE("qutrit family surfaces peak at ln(5/3)") {
    OddPrime p(3);
    auto vmi = family_mana_surface(named_family("V_-I(+1)", p), 48, fx().c3);
    CHECK(std::abs(vmi.global_max.mana - std::log(5.0 / 3)) < 1e-8);
    CHECK(vmi.global_max.classification == "N+");
    bool h1_local = std::any_of(vmi.local_maxima.begin(), vmi.local_maxima.end(), [](const SurfacePoint &s) {
        return s.classification == "H1";
    });
    CHECK(h1_local);
    auto vs = family_mana_surface(named_family("V_S(w^2)", p), 48, fx().c3);
    CHECK(std::abs(vs.global_max.mana - std::log(5.0 / 3)) < 1e-8);
    CHECK((vs.global_max.classification == "S" || vs.global_max.classification == "N+"));
}

TEST_CASE("family intersections") {
    OddPrime p3(3), p5(5);
    auto q = family_intersections(named_family("V_-I(+1)", p3), named_family("V_S(w^2)", p3), fx().g3, fx().c3);
    std::set<std::string> kinds(q.classifications.begin(), q.classifications.end());
    CHECK(kinds == std::set<std::string>{"N+", kStabilizerName});
    auto r = family_intersections(named_family("V_S(w^2)", p5), named_family("H(+1)", p5), fx().g5, fx().c5);
    std::set<std::string> kinds5(r.classifications.begin(), r.classifications.end());
    CHECK(kinds5 == std::set<std::string>{kStabilizerName});
}

TEST_CASE("table output formats") {
    auto rows = reproduce_table(fx().g3);
    auto csv = to_csv(rows);
    CHECK(csv.rfind("name,mana,min_entry,orbit\r\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
    auto j = to_json(rows);
    CHECK(j.size() == 4);
    CHECK(j[0].contains("mana_expression"));
}
