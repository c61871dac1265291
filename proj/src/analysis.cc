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

#include "magiclab/analysis.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "magiclab/bestiary.h"
#include "magiclab/clifford.h"
#include "magiclab/error.h"
#include "magiclab/optimize.h"
#include "magiclab/parallel.h"

namespace magiclab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSixth = kPi / 6;

double wrap2pi(double x) {
    x = std::fmod(x, 2 * kPi);
    if (x < 0) {
        x += 2 * kPi;
    }
    return x >= 2 * kPi ? 0.0 : x;
}

// Trig values the closed form needs, one angle at a time.
struct AngleTrig {
    double c;
    double sm;  // sin(x - pi/6)
    double sp;  // sin(x + pi/6)
    static AngleTrig of(double x) {
        return {std::cos(x), std::sin(x - kSixth), std::sin(x + kSixth)};
    }
};

// Closed-form entries in library order: grid[u * 3 + v].
std::array<double, 9> closed_form_grid(double st, double ct, double sf, double cf, const AngleTrig &a1,
                                       const AngleTrig &a2, const AngleTrig &am) {
    double s2 = st * st, c2 = ct * ct;
    double s2t = 2 * st * ct, s2f = 2 * sf * cf;
    // Tabulated form, indexed [u][v] with the conjugate phase-space convention.
    double t[3][3] = {
        {c2 + s2 * s2f * am.c, c2 + s2 * s2f * am.sm, c2 - s2 * s2f * am.sp},
        {s2 * cf * cf + s2t * sf * a2.c, s2 * cf * cf + s2t * sf * a2.sm, s2 * cf * cf - s2t * sf * a2.sp},
        {s2 * sf * sf + s2t * cf * a1.c, s2 * sf * sf - s2t * cf * a1.sp, s2 * sf * sf + s2t * cf * a1.sm},
    };
    std::array<double, 9> g{};
    for (int u = 0; u < 3; u++) {
        for (int v = 0; v < 3; v++) {
            g[(size_t)(u * 3 + (3 - v) % 3)] = t[u][v] / 3;
        }
    }
    return g;
}

std::array<double, 9> closed_form_grid(double theta, double phi, double psi1, double psi2) {
    return closed_form_grid(std::sin(theta), std::cos(theta), std::sin(phi), std::cos(phi), AngleTrig::of(psi1),
                            AngleTrig::of(psi2), AngleTrig::of(psi1 - psi2));
}

bool matches_pattern(const std::array<double, 9> &g, const std::array<bool, 9> &want, double *sn) {
    double s = 0;
    for (size_t k = 0; k < 9; k++) {
        bool neg = g[k] < -kNegativityThreshold;
        if (neg != want[k]) {
            return false;
        }
        if (neg) {
            s -= g[k];
        }
    }
    *sn = s;
    return true;
}

}  // namespace

QutritParameterPoint QutritParameterPoint::make(double theta, double phi, double psi1, double psi2) {
    auto in = [](double x, double lo, double hi) {
        return std::isfinite(x) && x >= lo && x <= hi;
    };
    if (!in(theta, 0, kPi / 2) || !in(phi, 0, kPi / 2) || !in(psi1, 0, 2 * kPi) || !in(psi2, 0, 2 * kPi) ||
        psi1 == 2 * kPi || psi2 == 2 * kPi) {
        throw MagicError(Errc::BadInput, "qutrit angles out of range");
    }
    return {theta, phi, psi1, psi2};
}

QutritParameterPoint QutritParameterPoint::wrap(double theta, double phi, double psi1, double psi2) {
    QutritParameterPoint raw{theta, phi, psi1, psi2};
    CVector a = raw.state().amplitudes();
    double r0 = std::abs(a[0]), r1 = std::abs(a[1]), r2 = std::abs(a[2]);
    double ref = r0 > 1e-12 ? std::arg(a[0]) : 0.0;
    double t = std::atan2(std::hypot(r1, r2), r0);
    double f = std::atan2(r2, r1);
    double p1 = r1 > 1e-12 ? wrap2pi(std::arg(a[1]) - ref) : 0.0;
    double p2 = r2 > 1e-12 ? wrap2pi(std::arg(a[2]) - ref) : 0.0;
    return {std::clamp(t, 0.0, kPi / 2), std::clamp(f, 0.0, kPi / 2), p1, p2};
}

PureState QutritParameterPoint::state() const {
    double st = std::sin(theta);
    return PureState::from_amplitudes(
        {std::cos(theta), std::polar(st * std::cos(phi), psi1), std::polar(st * std::sin(phi), psi2)});
}

WignerFunction qutrit_wigner_closed_form(double theta, double phi, double psi1, double psi2) {
    auto g = closed_form_grid(theta, phi, psi1, psi2);
    return WignerFunction(OddPrime(3), std::vector<double>(g.begin(), g.end()));
}

WignerFunction qutrit_wigner_closed_form(const QutritParameterPoint &pt) {
    return qutrit_wigner_closed_form(pt.theta, pt.phi, pt.psi1, pt.psi2);
}

std::vector<std::pair<int, int>> negativity_conditions(const QutritParameterPoint &pt) {
    double st = std::sin(pt.theta), ct = std::cos(pt.theta);
    double sf = std::sin(pt.phi), cf = std::cos(pt.phi);
    double eps = 3 * kNegativityThreshold;
    // Row 0: sin(2 phi) g(psi_-) > cot^2 theta, multiplied through by sin^2 theta.
    // Row 1: 2 tan phi sec phi g(psi_2) > tan theta, times sin theta cos theta cos^2 phi.
    // Row 2: 2 cot phi csc phi g(psi_1) > tan theta, times sin theta cos theta sin^2 phi.
    auto g = [](double x) {
        return std::array<double, 3>{-std::cos(x), -std::sin(x - kSixth), std::sin(x + kSixth)};
    };
    auto g_row2 = [](double x) {
        return std::array<double, 3>{-std::cos(x), std::sin(x + kSixth), -std::sin(x - kSixth)};
    };
    auto gm = g(pt.psi_minus()), g2 = g(pt.psi2), g1 = g_row2(pt.psi1);
    std::vector<std::pair<int, int>> out;
    auto push = [&](int u, int tab_v, bool neg) {
        if (neg) {
            out.push_back({u, (3 - tab_v) % 3});
        }
    };
    for (int v = 0; v < 3; v++) {
        push(0, v, st * st * 2 * sf * cf * gm[(size_t)v] - ct * ct > eps);
        push(1, v, 2 * st * ct * sf * g2[(size_t)v] - st * st * cf * cf > eps);
        push(2, v, 2 * st * ct * cf * g1[(size_t)v] - st * st * sf * sf > eps);
    }
    std::sort(out.begin(), out.end());
    return out;
}

NegativityPattern case_pattern(int case_number) {
    switch (case_number) {
        case 1:
            return {{0, 0}};
        case 2:
            return {{0, 0}, {0, 1}};
        case 3:
            return {{0, 0}, {0, 1}, {1, 0}};
        case 4:
            return {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
        case 5:
            throw MagicError(Errc::InfeasiblePattern, "five or more negative qutrit Wigner entries are infeasible");
        default:
            throw MagicError(Errc::BadInput, "case number must be 1 to 5");
    }
}

bool has_collinear_triple(const NegativityPattern &points) {
    size_t n = points.size();
    for (size_t a = 0; a < n; a++) {
        for (size_t b = a + 1; b < n; b++) {
            for (size_t c = b + 1; c < n; c++) {
                int x1 = points[b].first - points[a].first, y1 = points[b].second - points[a].second;
                int x2 = points[c].first - points[a].first, y2 = points[c].second - points[a].second;
                if (mod_p(x1 * y2 - x2 * y1, 3) == 0) {
                    return true;
                }
            }
        }
    }
    return false;
}

namespace {

struct Candidate {
    double value;
    std::vector<double> x;
    std::string kind;
};

void keep_top(std::vector<Candidate> &top, Candidate c, size_t k) {
    top.push_back(std::move(c));
    std::stable_sort(top.begin(), top.end(), [](const Candidate &a, const Candidate &b) {
        return a.value > b.value;
    });
    if (top.size() > k) {
        top.resize(k);
    }
}

// Repeated simplex runs from the previous optimum with shrinking steps.
NelderMeadResult chained_nelder_mead(const std::function<double(const std::vector<double> &)> &f,
                                     std::vector<double> x0, double step, size_t iterations, double shrink,
                                     double tolerance) {
    NelderMeadResult best{x0, f(x0), 1};
    for (int round = 0; round < 12; round++) {
        NelderMeadOptions opt;
        opt.initial_step = step;
        opt.max_iterations = iterations;
        opt.shrink = shrink;
        opt.tolerance = tolerance;
        auto r = nelder_mead(f, best.x, opt);
        size_t evals = best.evaluations + r.evaluations;
        bool improved = r.value < best.value - 1e-14;
        if (r.value <= best.value) {
            best = r;
        }
        best.evaluations = evals;
        if (!improved && step < 1e-6) {
            break;
        }
        step *= improved ? 0.5 : 0.1;
    }
    return best;
}

const StateClassifier &qutrit_classifier() {
    static const CliffordGroup group = CliffordGroup::enumerate(OddPrime(3));
    static const StateClassifier classifier(group);
    return classifier;
}

}  // namespace

SearchResult maximize_case(const NegativityPattern &pattern, const CaseOptions &options) {
    std::array<bool, 9> want{};
    for (const auto &[u, v] : pattern) {
        if (u < 0 || u > 2 || v < 0 || v > 2) {
            throw MagicError(Errc::BadInput, "pattern point outside Z_3^2");
        }
        want[(size_t)(u * 3 + v)] = true;
    }
    if (pattern.size() >= 5 || has_collinear_triple(pattern)) {
        throw MagicError(Errc::InfeasiblePattern,
                         "pattern has five or more points or three collinear points and cannot be realized");
    }
    size_t r = options.resolution;
    if (r < 2) {
        throw MagicError(Errc::BadInput, "resolution must be at least 2");
    }
    std::vector<double> half(r), full(r);
    std::vector<AngleTrig> trig(r);
    for (size_t k = 0; k < r; k++) {
        half[k] = kPi / 2 * (double)k / (double)(r - 1);
        full[k] = 2 * kPi * (double)k / (double)r;
        trig[k] = AngleTrig::of(full[k]);
    }
    std::vector<std::vector<Candidate>> tops(r * r);
    parallel_for(r * r, [&](size_t begin, size_t end) {
        for (size_t q = begin; q < end; q++) {
            double t = half[q / r], f = half[q % r];
            double st = std::sin(t), ct = std::cos(t), sf = std::sin(f), cf = std::cos(f);
            std::vector<Candidate> local;
            for (size_t i = 0; i < r; i++) {
                for (size_t j = 0; j < r; j++) {
                    auto g = closed_form_grid(st, ct, sf, cf, trig[i], trig[j], trig[(i + r - j) % r]);
                    double sn;
                    if (matches_pattern(g, want, &sn)) {
                        if (local.size() < options.restarts || sn > local.back().value) {
                            keep_top(local, {sn, {t, f, full[i], full[j]}, "grid"}, options.restarts);
                        }
                    }
                }
            }
            tops[q] = std::move(local);
        }
    });
    std::vector<Candidate> seeds;
    for (size_t q = 0; q < tops.size(); q++) {
        for (auto &c : tops[q]) {
            keep_top(seeds, std::move(c), options.restarts);
        }
    }
    if (seeds.empty()) {
        throw MagicError(Errc::InfeasiblePattern, "no grid point realizes the requested negativity pattern");
    }
    auto objective = [&](const std::vector<double> &x) {
        auto g = closed_form_grid(x[0], x[1], x[2], x[3]);
        double sn;
        return matches_pattern(g, want, &sn) ? -sn : std::numeric_limits<double>::infinity();
    };
    std::vector<NelderMeadResult> refined(seeds.size());
    parallel_for(seeds.size(), [&](size_t begin, size_t end) {
        for (size_t k = begin; k < end; k++) {
            refined[k] = chained_nelder_mead(objective, seeds[k].x, 0.05, options.iterations, options.shrink,
                                             options.tolerance);
        }
    });
    size_t evals = r * r * r * r;
    size_t best = 0;
    for (size_t k = 0; k < refined.size(); k++) {
        evals += refined[k].evaluations;
        if (refined[k].value < refined[best].value) {
            best = k;
        }
    }
    const auto &x = refined[best].x;
    auto pt = QutritParameterPoint::wrap(x[0], x[1], x[2], x[3]);
    PureState s = pt.state();
    SearchResult out{s, -refined[best].value, "sum_negativity", qutrit_classifier().classify(s, 1e-6), evals, pt,
                     "grid", {}};
    for (const auto &rr : refined) {
        if (-rr.value > out.best_value - 1e-8) {
            auto q = QutritParameterPoint::wrap(rr.x[0], rr.x[1], rr.x[2], rr.x[3]);
            std::string c = qutrit_classifier().classify(q.state(), 1e-6);
            if (std::find(out.maxima_orbits.begin(), out.maxima_orbits.end(), c) == out.maxima_orbits.end()) {
                out.maxima_orbits.push_back(c);
            }
        }
    }
    return out;
}

Case5Report verify_case5_infeasible(size_t resolution, size_t random_points, uint64_t seed) {
    size_t r = resolution;
    std::vector<double> half(r), full(r);
    std::vector<AngleTrig> trig(r);
    for (size_t k = 0; k < r; k++) {
        half[k] = r > 1 ? kPi / 2 * (double)k / (double)(r - 1) : 0.0;
        full[k] = 2 * kPi * (double)k / (double)r;
        trig[k] = AngleTrig::of(full[k]);
    }
    // Lines of Z_3^2 as bit masks over u * 3 + v.
    std::vector<int> lines;
    for (int du = 0; du < 3; du++) {
        for (int dv = 0; dv < 3; dv++) {
            if (du == 0 && dv == 0) continue;
            for (int u0 = 0; u0 < 3; u0++) {
                for (int v0 = 0; v0 < 3; v0++) {
                    int m = 0;
                    for (int t = 0; t < 3; t++) {
                        m |= 1 << ((u0 + t * du) % 3 * 3 + (v0 + t * dv) % 3);
                    }
                    if (std::find(lines.begin(), lines.end(), m) == lines.end()) {
                        lines.push_back(m);
                    }
                }
            }
        }
    }
    auto scan = [&](const std::array<double, 9> &g, int *max_count, bool *collinear) {
        int mask = 0, count = 0;
        for (size_t k = 0; k < 9; k++) {
            if (g[k] < -kNegativityThreshold) {
                mask |= 1 << k;
                count++;
            }
        }
        *max_count = std::max(*max_count, count);
        if (count >= 3) {
            for (int l : lines) {
                if ((mask & l) == l) {
                    *collinear = true;
                }
            }
        }
    };
    size_t n_grid = r * r;
    size_t chunks = n_grid + 64;
    std::vector<int> maxc(chunks, 0);
    std::vector<char> coll(chunks, 0);
    parallel_for(n_grid, [&](size_t begin, size_t end) {
        for (size_t q = begin; q < end; q++) {
            double t = half[q / r], f = half[q % r];
            double st = std::sin(t), ct = std::cos(t), sf = std::sin(f), cf = std::cos(f);
            int m = 0;
            bool c = false;
            for (size_t i = 0; i < r; i++) {
                for (size_t j = 0; j < r; j++) {
                    scan(closed_form_grid(st, ct, sf, cf, trig[i], trig[j], trig[(i + r - j) % r]), &m, &c);
                }
            }
            maxc[q] = m;
            coll[q] = c;
        }
    });
    // Random points: fixed per-block seeds keep the result independent of thread count.
    std::mt19937_64 master(seed);
    std::vector<uint64_t> block_seeds(64);
    for (auto &s : block_seeds) {
        s = master();
    }
    size_t per_block = (random_points + 63) / 64;
    parallel_for(64, [&](size_t begin, size_t end) {
        for (size_t b = begin; b < end; b++) {
            std::mt19937_64 rng(block_seeds[b]);
            std::uniform_real_distribution<double> quarter(0, kPi / 2), turn(0, 2 * kPi);
            size_t lo = b * per_block, hi = std::min(random_points, lo + per_block);
            int m = 0;
            bool c = false;
            for (size_t k = lo; k < hi; k++) {
                double t = quarter(rng), f = quarter(rng), a = turn(rng), bb = turn(rng);
                scan(closed_form_grid(t, f, a, bb), &m, &c);
            }
            maxc[n_grid + b] = m;
            coll[n_grid + b] = c;
        }
    });
    int max_count = *std::max_element(maxc.begin(), maxc.end());
    bool collinear = std::find(coll.begin(), coll.end(), 1) != coll.end();
    return {max_count < 5, max_count, collinear, r * r * r * r + random_points};
}

StrangeAnalogueResult verify_no_strange_analogue(OddPrime p) {
    int q = p.value();
    if (q > 23) {
        throw MagicError(Errc::TooLarge, "the simultaneous-eigenvector check is limited to p <= 23");
    }
    size_t d = p.dim();
    auto w = [&](long long e) {
        return std::polar(1.0, 2 * kPi * (double)mod_p(e, q) / q);
    };
    // Proof path: the Fourier image of a|t> + b|-t> is sum_j (a w^{jt} + b w^{-jt}) |j>.
    std::optional<PureState> proof_witness;
    auto fourier_of = [&](const CVector &v) {
        CVector out(d);
        for (size_t j = 0; j < d; j++) {
            for (size_t k = 0; k < d; k++) {
                out[j] += v[k] * w((long long)(j * k)) / std::sqrt((double)d);
            }
        }
        return out;
    };
    auto is_eigen = [](const CVector &v, const CVector &img) {
        return 1 - std::abs(inner(v, img)) / (norm(v) * norm(img)) < 1e-9;
    };
    if (is_eigen(PureState::basis(d, 0).amplitudes(), fourier_of(PureState::basis(d, 0).amplitudes()))) {
        proof_witness = PureState::basis(d, 0);
    }
    for (int t = 1; t <= (q - 1) / 2 && !proof_witness; t++) {
        Matrix m(d - 2, 2);
        size_t row = 0;
        for (int j = 0; j < q; j++) {
            if (j == t || j == q - t) continue;
            m(row, 0) = w((long long)j * t);
            m(row, 1) = w(-(long long)j * t);
            row++;
        }
        for (const auto &ab : null_space(m)) {
            CVector v(d);
            v[(size_t)t] = ab[0];
            v[(size_t)(q - t)] = ab[1];
            if (is_eigen(v, fourier_of(v))) {
                proof_witness = PureState::from_amplitudes(v);
            }
        }
    }
    // Brute path: intersect eigenspaces of the metaplectic H and V_S.
    auto h = eigensystem_finite_order(metaplectic(SL2Matrix::make(0, 1, -1, 0, p)));
    auto s = eigensystem_finite_order(metaplectic(SL2Matrix::make(1, 0, 1, 1, p)));
    std::optional<PureState> brute_witness;
    for (const auto &a : h.spaces) {
        for (const auto &b : s.spaces) {
            auto common = subspace_intersection(a.basis(), b.basis());
            if (!common.empty() && !brute_witness) {
                brute_witness = canonicalize(common[0]);
            }
        }
    }
    bool agree = proof_witness.has_value() == brute_witness.has_value();
    if (agree && proof_witness) {
        agree = same_ray(*proof_witness, *brute_witness, 1e-9);
    }
    std::optional<PureState> witness;
    if (proof_witness) {
        witness = canonicalize(*proof_witness);
    }
    return {q, proof_witness.has_value() && brute_witness.has_value(), witness, proof_witness.has_value(),
            brute_witness.has_value(), agree};
}

DensityMatrix symplectic_invariant_mixed_state(OddPrime p) {
    std::vector<PureState> states;
    for (const auto &s : stabilizer_states(p)) {
        if (std::abs(wigner(s).at(0, 0)) < 1e-9) {
            states.push_back(s);
        }
    }
    std::vector<double> weights(states.size(), 1.0 / (double)states.size());
    return DensityMatrix::mixture(weights, states);
}

std::vector<PureState> contextuality_bound_states(OddPrime p) {
    auto sys = eigensystem_finite_order(metaplectic(SL2Matrix::make(-1, 0, 0, -1, p)));
    std::vector<PureState> out;
    for (const auto &s : sys.spaces) {
        if (std::abs(s.eigenvalue + 1.0) < 1e-8) {
            for (const auto &v : s.basis()) {
                out.push_back(PureState::from_amplitudes(v));
            }
        }
    }
    return out;
}

SearchResult max_mana_search(OddPrime p, const ManaSearchOptions &options) {
    if (p.value() != 3 && p.value() != 5) {
        throw MagicError(Errc::Unsupported, "the max-mana search runs at p = 3 or 5");
    }
    size_t d = p.dim();
    std::mt19937_64 rng(options.seed);
    std::vector<Candidate> seeds;
    auto add = [&](const PureState &s, const char *kind) {
        std::vector<double> x;
        for (const auto &a : s.amplitudes()) {
            x.push_back(a.real());
            x.push_back(a.imag());
        }
        seeds.push_back({0.0, std::move(x), kind});
    };
    for (size_t k = 0; k < options.random_samples; k++) {
        add(random_state(d, rng), "random");
    }
    std::uniform_real_distribution<double> unit(0, 1);
    for (const auto &name : named_family_names(p)) {
        auto fam = named_family(name, p);
        for (size_t k = 0; k < options.family_samples; k++) {
            size_t i = 0, j = 1;
            if (fam.frame.size() > 2) {
                i = (size_t)(unit(rng) * 3) % 3;
                j = (i + 1 + (size_t)(unit(rng) * 2) % 2) % 3;
            }
            add(fam.state(unit(rng) * fam.theta_max(), unit(rng) * 2 * kPi, i, j), "family");
        }
    }
    for (const auto &e : registry(p)) {
        add(named_state(e.name, p), "record");
    }
    auto to_state = [&](const std::vector<double> &x) {
        CVector v(d);
        for (size_t k = 0; k < d; k++) {
            v[k] = cplx(x[2 * k], x[2 * k + 1]);
        }
        return PureState::from_amplitudes(std::move(v));
    };
    parallel_for(seeds.size(), [&](size_t begin, size_t end) {
        for (size_t k = begin; k < end; k++) {
            seeds[k].value = mana(to_state(seeds[k].x));
        }
    });
    std::vector<size_t> order(seeds.size());
    for (size_t k = 0; k < order.size(); k++) {
        order[k] = k;
    }
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return seeds[a].value > seeds[b].value;
    });
    // Top seeds overall, plus the best random seeds so the unbiased start is always refined.
    std::vector<size_t> chosen;
    auto choose = [&](size_t k) {
        if (std::find(chosen.begin(), chosen.end(), k) == chosen.end()) {
            chosen.push_back(k);
        }
    };
    for (size_t k = 0; k < order.size() && chosen.size() < options.refine_top; k++) {
        choose(order[k]);
    }
    size_t random_taken = 0;
    for (size_t k = 0; k < order.size() && random_taken < 4; k++) {
        if (seeds[order[k]].kind == std::string("random")) {
            choose(order[k]);
            random_taken++;
        }
    }
    auto objective = [&](const std::vector<double> &x) {
        double n = 0;
        for (double v : x) {
            n += v * v;
        }
        if (n < 1e-12) {
            return std::numeric_limits<double>::infinity();
        }
        return -mana(to_state(x));
    };
    std::vector<NelderMeadResult> refined(chosen.size());
    parallel_for(chosen.size(), [&](size_t begin, size_t end) {
        for (size_t k = begin; k < end; k++) {
            refined[k] = chained_nelder_mead(objective, seeds[chosen[k]].x, 0.05, options.iterations, 0.5, 1e-12);
        }
    });
    size_t best = 0;
    size_t evals = seeds.size();
    for (size_t k = 0; k < refined.size(); k++) {
        evals += refined[k].evaluations;
        if (refined[k].value < refined[best].value) {
            best = k;
        }
    }
    CliffordGroup group = CliffordGroup::enumerate(p);
    StateClassifier classifier(group);
    PureState s = to_state(refined[best].x);
    SearchResult out{s, mana(s), "mana", classifier.classify(s, 1e-6), evals, std::nullopt,
                     seeds[chosen[best]].kind, {}};
    for (const auto &r : refined) {
        if (-r.value > out.best_value - 1e-8) {
            std::string c = classifier.classify(to_state(r.x), 1e-6);
            if (std::find(out.maxima_orbits.begin(), out.maxima_orbits.end(), c) == out.maxima_orbits.end()) {
                out.maxima_orbits.push_back(c);
            }
        }
    }
    return out;
}

nlohmann::json to_json(const SearchResult &r) {
    nlohmann::json j{{"objective", r.objective},
                     {"best_value", r.best_value},
                     {"classification", r.classification},
                     {"evaluations", r.evaluations},
                     {"seed_kind", r.seed_kind},
                     {"maxima_orbits", r.maxima_orbits},
                     {"state", to_json(r.best_state)}};
    if (r.point) {
        j["point"] = {{"theta", r.point->theta}, {"phi", r.point->phi}, {"psi1", r.point->psi1}, {"psi2", r.point->psi2}};
    }
    return j;
}

}  // namespace magiclab
