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

#include "magiclab/verify.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <set>

#include "magiclab/analysis.h"
#include "magiclab/bestiary.h"
#include "magiclab/clifford.h"
#include "magiclab/error.h"
#include "magiclab/optimize.h"
#include "magiclab/phase_space.h"
#include "magiclab/twirl.h"

namespace magiclab {

namespace {

constexpr double kPi = std::numbers::pi;

Check num(std::string name, int p, double expected, double computed, double tol) {
    bool ok = std::isfinite(computed) && std::abs(expected - computed) <= tol;
    return {std::move(name), p, expected, computed, ok, tol};
}

Check bound(std::string name, int p, double limit, double computed) {
    return {std::move(name), p, nlohmann::json{{"at_most", limit}}, computed, computed <= limit, limit};
}

Check same(std::string name, int p, const nlohmann::json &expected, const nlohmann::json &computed) {
    return {std::move(name), p, expected, computed, expected == computed, 0.0};
}

std::vector<int> primes_up_to(int hi) {
    std::vector<int> out;
    for (int q = 3; q <= hi; q += 2) {
        if (is_odd_prime(q)) {
            out.push_back(q);
        }
    }
    return out;
}

bool wants(const VerifyOptions &o, int p) {
    return !o.p || *o.p == p;
}

void strange_analogue_checks(const VerifyOptions &o, std::vector<Check> &out) {
    std::vector<int> ps = o.p ? std::vector<int>{*o.p} : primes_up_to(std::min(o.p_max, 23));
    for (int q : ps) {
        auto r = verify_no_strange_analogue(OddPrime(q));
        out.push_back(same("strange_analogue.exists", q, q == 3, r.exists));
        out.push_back(same("strange_analogue.paths_agree", q, true, r.paths_agree));
        if (q == 3) {
            bool is_s = r.witness && same_ray(*r.witness, named_state("S", OddPrime(3)), 1e-9);
            out.push_back(same("strange_analogue.witness_is_S", q, true, is_s));
        }
    }
}

void negativity_checks(const VerifyOptions &o, std::vector<Check> &out) {
    if (!wants(o, 3)) {
        return;
    }
    const double expected[4] = {1.0 / 3, 1.0 / 3, (-1 + 2 * std::cos(kPi / 9)) / 3, (std::sqrt(3.0) - 1) / 3};
    const char *names[4] = {"S", "N+", "XVS", "H1"};
    for (int c = 1; c <= 4; c++) {
        auto r = maximize_case(case_pattern(c));
        std::string tag = "negativity.case" + std::to_string(c);
        out.push_back(num(tag + ".sum_negativity", 3, expected[c - 1], r.best_value, 1e-6));
        out.push_back(same(tag + ".classification", 3, names[c - 1], r.classification));
    }
    auto c5 = verify_case5_infeasible();
    out.push_back(same("negativity.case5.infeasible", 3, true, c5.infeasible));
    out.push_back(same("negativity.case5.max_negative_count", 3, 4, c5.max_negative_count));
    out.push_back(same("negativity.no_collinear_negative_triple", 3, false, c5.collinear_triple_found));
    bool threw = false;
    try {
        maximize_case({{0, 0}, {0, 1}, {0, 2}});
    } catch (const MagicError &e) {
        threw = e.code() == Errc::InfeasiblePattern;
    }
    out.push_back(same("negativity.collinear_pattern_infeasible", 3, true, threw));

    std::mt19937_64 rng(o.seed);
    std::uniform_real_distribution<double> angle(-2 * kPi, 2 * kPi);
    double dev = 0;
    size_t mismatched = 0;
    for (int k = 0; k < 100000; k++) {
        double t = angle(rng), f = angle(rng), a = angle(rng), b = angle(rng);
        QutritParameterPoint raw{t, f, a, b};
        auto cf = qutrit_wigner_closed_form(raw);
        auto w = wigner(raw.state());
        for (size_t i = 0; i < 9; i++) {
            dev = std::max(dev, std::abs(cf.grid()[i] - w.grid()[i]));
        }
        auto pt = QutritParameterPoint::wrap(t, f, a, b);
        if (negativity_conditions(pt) != qutrit_wigner_closed_form(pt).negative_points()) {
            mismatched++;
        }
    }
    out.push_back(bound("negativity.closed_form_vs_matrix_max_dev", 3, 1e-10, dev));
    out.push_back(same("negativity.negativity_conditions_mismatches", 3, 0, mismatched));
}

void search(const VerifyOptions &o, std::vector<Check> &out) {
    ManaSearchOptions opts;
    opts.seed = o.seed;
    if (wants(o, 3)) {
        auto r = max_mana_search(OddPrime(3), opts);
        out.push_back(num("search.max_mana", 3, std::log(5.0 / 3), r.best_value, 1e-6));
    }
    if (wants(o, 5)) {
        auto r = max_mana_search(OddPrime(5), opts);
        out.push_back(num("search.max_mana", 5, std::asinh(3 + std::sqrt(5.0)) - std::log(5.0), r.best_value, 1e-6));
        out.push_back(same("search.argmax_orbit", 5, "Bw-", r.classification));
    }
}

void tables(const VerifyOptions &o, std::vector<Check> &out) {
    if (wants(o, 3)) {
        OddPrime p3(3);
        out.push_back(same("sl2.p3.order", 3, 24, sl2_enumerate(p3).size()));
        auto cls = sl2_conjugacy_classes(p3);
        std::vector<size_t> sizes;
        for (const auto &c : cls) {
            sizes.push_back(c.size());
        }
        std::sort(sizes.begin(), sizes.end());
        out.push_back(same("sl2.p3.class_sizes", 3, std::vector<size_t>{1, 1, 4, 4, 4, 4, 6}, sizes));
        auto lattice = sl2_subgroup_lattice(p3);
        std::set<size_t> ids;
        for (const auto &s : lattice) {
            ids.insert(s.conjugacy_class);
        }
        out.push_back(same("sl2.p3.proper_subgroups", 3, 14, lattice.size()));
        out.push_back(same("sl2.p3.subgroup_classes", 3, 6, ids.size()));
    }
    for (int q : {3, 5}) {
        if (!wants(o, q)) {
            continue;
        }
        OddPrime p(q);
        auto group = CliffordGroup::enumerate(p);
        auto classes = clifford_conjugacy_classes(group);
        auto reduced = reduced_conjugacy_classes(group, classes);
        out.push_back(same("clifford.order", q, q == 3 ? 216 : 3000, group.size()));
        out.push_back(same("clifford.classes", q, q == 3 ? 10 : 14, classes.size()));
        out.push_back(same("clifford.reduced_classes", q, q == 3 ? 7 : 8, reduced.size()));
        if (q == 5) {
            std::map<std::string, size_t> by_name;
            for (const auto &c : classes) {
                if (c.paper_name) {
                    by_name[*c.paper_name] = c.size();
                }
            }
            out.push_back(same("clifford.size[H]", q, 750, by_name["H"]));
            out.push_back(same("clifford.size[V_-I]", q, 25, by_name["V_-I"]));
            out.push_back(same("clifford.size[X V_S]", q, 120, by_name["X V_S"]));
        }
        for (const auto &row : reproduce_table(group)) {
            std::string tag = "table." + row.expected.name;
            out.push_back(num(tag + ".mana", q, row.expected.mana_closed_form, row.mana_numeric, 1e-9));
            out.push_back(num(tag + ".min_entry", q, row.expected.min_entry_expected, row.min_entry,
                              row.expected.min_entry_exact ? 1e-9 : 5e-3));
            out.push_back(same(tag + ".orbit", q, row.expected.orbit_size, row.orbit_size));
        }
        auto stabs = stabilizer_states(p);
        out.push_back(same("stabilizer.count", q, q * (q + 1), stabs.size()));
        double worst_mana = 0, worst_min = 0;
        for (const auto &s : stabs) {
            auto w = wigner(s);
            worst_mana = std::max(worst_mana, std::abs(w.mana()));
            worst_min = std::min(worst_min, w.min_entry().first);
        }
        out.push_back(bound("stabilizer.max_abs_mana", q, 1e-9, worst_mana));
        out.push_back(bound("stabilizer.negativity", q, 1e-12, -worst_min));
        if (q == 3) {
            auto w = wigner(named_state("S", p));
            out.push_back(same("strange.negative_points", q, nlohmann::json::array({nlohmann::json::array({0, 0})}),
                               w.negative_points()));
            out.push_back(num("strange.W00", q, -1.0 / 3, w.at(0, 0), 1e-12));
            double off = 0;
            for (int u = 0; u < 3; u++) {
                for (int v = 0; v < 3; v++) {
                    if (u || v) {
                        off = std::max(off, std::abs(w.at(u, v) - 1.0 / 6));
                    }
                }
            }
            out.push_back(bound("strange.off_origin_dev", q, 1e-12, off));
            out.push_back(same("strange.symplectic_orbit", q, 1,
                               orbit_under_subgroup(named_state("S", p), group, group.symplectic_indices())));
        }
    }
}

void twirl_suite(const VerifyOptions &o, std::vector<Check> &out) {
    for (int q : {3, 5}) {
        if (!wants(o, q)) {
            continue;
        }
        OddPrime p(q);
        auto group = CliffordGroup::enumerate(p);
        for (const auto &e : registry(p)) {
            if (!e.table_row) {
                continue;
            }
            auto r = stabilizer_report(e.name, group);
            out.push_back(same("stabilizer_subgroup." + e.name + ".order", q, e.stabilizer_order, r.order));
            out.push_back(same("stabilizer_subgroup." + e.name + ".label", q, e.stabilizer_group, to_string(r.label)));
        }
    }
    std::mt19937_64 rng(o.seed);
    for (auto s : {TwirlScheme::H2d, TwirlScheme::N, TwirlScheme::XVS, TwirlScheme::Symplectic,
                   TwirlScheme::VSDegenerate, TwirlScheme::VMinusIDegenerate, TwirlScheme::Hm5, TwirlScheme::Bm15}) {
        OddPrime p = scheme_prime(s);
        if (!wants(o, p.value())) {
            continue;
        }
        auto ch = scheme_channel(s);
        std::string tag = "twirl." + scheme_name(s);
        double idem = 0, comm = 0, recon = 0;
        for (int k = 0; k < 20; k++) {
            auto rho = DensityMatrix::from_state(random_state(p.dim(), rng));
            auto once = twirl(rho, ch);
            auto twice = twirl(once, ch);
            idem = std::max(idem, max_abs_diff(once.matrix(), twice.matrix()));
            for (const auto &u : ch.matrices()) {
                comm = std::max(comm, max_abs_diff(u.matrix() * once.matrix(), once.matrix() * u.matrix()));
            }
            recon = std::max(recon, post_twirl_coordinates(once, s).residual);
        }
        out.push_back(bound(tag + ".idempotence", p.value(), 1e-10, idem));
        out.push_back(bound(tag + ".commutation", p.value(), 1e-9, comm));
        out.push_back(bound(tag + ".reconstruction", p.value(), 1e-8, recon));
    }
    if (wants(o, 3)) {
        out.push_back(same("twirl.fixed_dim.<H>", 3, 2, fixed_point_space_dimension(scheme_channel(TwirlScheme::H2d))));
        OddPrime p3(3);
        out.push_back(num("twirl.symplectic.delta(S)", 3, 0.0,
                          symplectic_depolarize(DensityMatrix::from_state(named_state("S", p3))).delta, 1e-9));
        out.push_back(num("twirl.symplectic.delta(I/3)", 3, 1.0,
                          symplectic_depolarize(DensityMatrix::maximally_mixed(3)).delta, 1e-9));
        double eps = 0.2;
        auto rho = scheme_state(TwirlScheme::H2d, {eps / 2, eps / 2});
        out.push_back(num("twirl.symplectic.delta(rho_H)", 3, 1.5 * eps, symplectic_depolarize(rho).delta, 1e-9));
        auto mixed = scheme_state(TwirlScheme::H2d, {0.06, 0.04});
        auto c = post_twirl_coordinates(mixed, TwirlScheme::H2d);
        out.push_back(num("twirl.2dH.eps1", 3, 0.06, c.parameters[0], 1e-9));
        out.push_back(num("twirl.2dH.eps2", 3, 0.04, c.parameters[1], 1e-9));
    }
    if (wants(o, 5)) {
        out.push_back(same("twirl.fixed_dim.<H,H'>", 5, 3, fixed_point_space_dimension(scheme_channel(TwirlScheme::Hm5))));
        out.push_back(same("twirl.fixed_dim.<B,H'>", 5, 2, fixed_point_space_dimension(scheme_channel(TwirlScheme::Bm15))));
        auto c = post_twirl_coordinates(scheme_state(TwirlScheme::Hm5, {0.1, 0.1, 0.1}), TwirlScheme::Hm5);
        double dev = 0;
        for (double x : c.parameters) {
            dev = std::max(dev, std::abs(x - 0.1));
        }
        out.push_back(bound("twirl.hm5.round_trip", 5, 1e-9, dev));
    }
}

// Checks W(U rho U^dag) at F chi + a against W(rho) at chi for U = D_a V_F.
double covariance_dev(const CliffordElement &e, const UnitaryMatrix &u, const DensityMatrix &rho) {
    int q = e.modulus().value();
    auto w = wigner(rho);
    Matrix m = u.matrix() * rho.matrix() * u.matrix().adjoint();
    auto w2 = wigner(DensityMatrix::from_matrix(m, 1e-8));
    double dev = 0;
    for (int x = 0; x < q; x++) {
        for (int y = 0; y < q; y++) {
            auto chi = SymplecticVector::make(x, y, e.modulus());
            auto img = e.F * chi + e.chi;
            dev = std::max(dev, std::abs(w2.at(img.u.value(), img.v.value()) - w.at(x, y)));
        }
    }
    return dev;
}

void covariance(const VerifyOptions &o, std::vector<Check> &out) {
    std::mt19937_64 rng(o.seed);
    for (int q : {3, 5}) {
        if (!wants(o, q)) {
            continue;
        }
        OddPrime p(q);
        auto group = CliffordGroup::enumerate(p);
        std::vector<DensityMatrix> states;
        for (int k = 0; k < 3; k++) {
            states.push_back(DensityMatrix::from_state(random_state(p.dim(), rng)));
        }
        states.push_back(DensityMatrix::mixture({0.3, 0.7}, {random_state(p.dim(), rng), random_state(p.dim(), rng)}));
        double cov = 0;
        if (q == 3) {
            for (size_t k = 0; k < group.size(); k++) {
                for (const auto &rho : states) {
                    cov = std::max(cov, covariance_dev(group[k], group.matrix(k), rho));
                }
            }
        } else {
            std::uniform_int_distribution<size_t> pick(0, group.size() - 1);
            for (int k = 0; k < 200; k++) {
                size_t g = pick(rng);
                cov = std::max(cov, covariance_dev(group[g], group.matrix(g), states[(size_t)k % states.size()]));
            }
        }
        out.push_back(bound(q == 3 ? "covariance.exhaustive" : "covariance.sampled_200", q, 1e-8, cov));

        double inv_dev = 0;
        std::uniform_int_distribution<size_t> any(0, group.size() - 1);
        for (int k = 0; k < 50; k++) {
            auto psi = random_state(p.dim(), rng);
            auto w = wigner(psi);
            auto img = PureState::from_amplitudes(group.matrix(any(rng)) * psi.amplitudes());
            auto w2 = wigner(img);
            auto a = w.grid(), b = w2.grid();
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            for (size_t i = 0; i < a.size(); i++) {
                inv_dev = std::max(inv_dev, std::abs(a[i] - b[i]));
            }
            inv_dev = std::max(inv_dev, std::abs(w.mana() - w2.mana()));
        }
        out.push_back(bound("covariance.sorted_entries_and_mana", q, 1e-8, inv_dev));

        double norm_dev = 0, mana_dev = 0;
        for (int k = 0; k < 200; k++) {
            auto psi = random_state(p.dim(), rng);
            auto w = wigner(psi);
            norm_dev = std::max(norm_dev, std::abs(w.total() - 1));
            mana_dev = std::max(mana_dev, std::abs(w.mana() - std::log(2 * w.sum_negativity() + 1)));
        }
        out.push_back(bound("wigner.normalization", q, 1e-8, norm_dev));
        out.push_back(bound("mana.log(2sn+1)", q, 1e-8, mana_dev));

        std::uniform_int_distribution<size_t> pick(0, group.size() - 1);
        size_t bad = 0;
        for (int k = 0; k < 1000; k++) {
            size_t a = pick(rng), b = pick(rng);
            Matrix prod = group.matrix(a).matrix() * group.matrix(b).matrix();
            if (!projective_equal(matrix_of(compose(group[a], group[b])).matrix(), prod, 1e-8)) {
                bad++;
            }
        }
        out.push_back(same("compose.homomorphism_failures_1000", q, 0, bad));

        auto a00 = symplectic_invariant_mixed_state(p);
        double inv = 0;
        for (size_t k : group.symplectic_indices()) {
            const Matrix &u = group.matrix(k).matrix();
            inv = std::max(inv, max_abs_diff(u * a00.matrix() * u.adjoint(), a00.matrix()));
        }
        out.push_back(bound("a00.symplectic_invariance", q, 1e-9, inv));
        auto wa = wigner(a00);
        out.push_back(num("a00.W00", q, 0.0, wa.at(0, 0), 1e-9));
        out.push_back(num("a00.W11", q, 1.0 / (q * q - 1), wa.at(1, 1), 1e-9));
        out.push_back(same("a00.not_maximally_mixed", q, true,
                           max_abs_diff(a00.matrix(), DensityMatrix::maximally_mixed(p.dim()).matrix()) > 1e-6));
        double ctx = 0;
        for (const auto &s : contextuality_bound_states(p)) {
            ctx = std::max(ctx, std::abs(min_entry(s).first + 1.0 / q));
        }
        out.push_back(bound("contextuality.min_entry=-1/p", q, 1e-9, ctx));
    }
}

}  // namespace

const std::vector<std::string> &suite_names() {
    static const std::vector<std::string> names{"theorem2", "appendix", "tables", "twirl", "covariance", "all"};
    return names;
}

std::vector<Check> run_suite(const std::string &suite, const VerifyOptions &options) {
    std::vector<Check> out;
    if (options.p && !is_odd_prime(*options.p)) {
        throw MagicError(Errc::NotOddPrime, std::to_string(*options.p) + " is not an odd prime");
    }
    bool all = suite == "all";
    if (!all && std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
        throw MagicError(Errc::UnknownSuite, "no verification suite '" + suite + "'");
    }
    if (all || suite == "theorem2") strange_analogue_checks(options, out);
    if (all || suite == "appendix") {
        negativity_checks(options, out);
        search(options, out);
    }
    if (all || suite == "tables") tables(options, out);
    if (all || suite == "twirl") twirl_suite(options, out);
    if (all || suite == "covariance") covariance(options, out);
    return out;
}

bool all_pass(const std::vector<Check> &checks) {
    return std::all_of(checks.begin(), checks.end(), [](const Check &c) {
        return c.pass;
    });
}

nlohmann::json to_json(const Check &c) {
    return {{"name", c.name},       {"p", c.p},       {"expected", c.expected},
            {"computed", c.computed}, {"pass", c.pass}, {"tolerance", c.tolerance}};
}

nlohmann::json suite_report(const std::string &suite, const std::vector<Check> &checks) {
    nlohmann::json rows = nlohmann::json::array();
    size_t failed = 0;
    for (const auto &c : checks) {
        rows.push_back(to_json(c));
        failed += c.pass ? 0 : 1;
    }
    return {{"suite", suite}, {"pass", failed == 0}, {"failed", failed}, {"checks", rows}};
}

}  // namespace magiclab
