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

#include "magiclab/bestiary.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include "magiclab/error.h"
#include "magiclab/optimize.h"
#include "magiclab/parallel.h"
#include "magiclab/phase_space.h"

namespace magiclab {

namespace {

constexpr double kPi = std::numbers::pi;

UnitaryMatrix element_matrix(const CliffordGroup &group, size_t k) {
    return group.has_matrices() ? group.matrix(k) : matrix_of(group[k]);
}

cplx root(double frac) {
    return std::polar(1.0, 2 * kPi * frac);
}

}  // namespace

Matrix named_operator_matrix(const std::string &name, OddPrime p) {
    auto m = [&](const char *n) {
        return matrix_of(named_element(n, p)).matrix();
    };
    int q = p.value();
    if (name == "Pauli") {
        return m("X");
    }
    if (q == 3 && (name == "N" || name == "N^-1")) {
        Matrix n = m("V_S") * m("H") * m("H");
        return name == "N" ? n : n.adjoint();
    }
    if (q == 3 && name == "V_S^2") {
        return m("V_S") * m("V_S");
    }
    if (q == 3 && name == "X V_S^2") {
        return m("X") * m("V_S") * m("V_S");
    }
    if (q == 5) {
        Matrix h2 = m("H") * m("H");
        Matrix b = m("H") * m("V_S");
        if (name == "A") {
            return m("V_S") * h2;
        }
        if (name == "A'") {
            return m("V_S") * m("V_S") * h2;
        }
        if (name == "B") {
            return b;
        }
        if (name == "B^2") {
            return b * b;
        }
        if (name == "B^-1") {
            return b.adjoint();
        }
    }
    return m(name.c_str());
}

namespace {

Matrix operator_matrix(const std::string &name, OddPrime p) {
    return named_operator_matrix(name, p);
}

bool is_eigenvector(const Matrix &u, const CVector &v, cplx *eigenvalue, double tol = 1e-8) {
    CVector w = u * v;
    cplx c = inner(v, w) / inner(v, v);
    double err = 0;
    for (size_t k = 0; k < v.size(); k++) {
        err = std::max(err, std::abs(w[k] - c * v[k]));
    }
    if (eigenvalue) {
        *eigenvalue = c;
    }
    return err < tol;
}

// "+1", "-1", "i", "-i", "w^k" (p-th roots), "w3^k", "-w3^k", else e^(2pi i k/n).
std::string eigenvalue_label(cplx lambda, int p) {
    double frac = std::arg(lambda) / (2 * kPi);
    for (int n = 1; n <= 72; n++) {
        double x = frac * n;
        long long k = std::llround(x);
        if (std::abs(x - (double)k) > 1e-6) {
            continue;
        }
        k = ((k % n) + n) % n;
        if (n == 1) {
            return "+1";
        }
        if (n == 2) {
            return "-1";
        }
        if (n == 4) {
            return k == 1 ? "i" : "-i";
        }
        if (n == p) {
            return k == 1 ? "w" : "w^" + std::to_string(k);
        }
        if (n == 3) {
            return k == 1 ? "w3" : "w3^2";
        }
        if (n == 6) {
            return ((k + 3) / 2) % 3 == 1 ? "-w3" : "-w3^2";
        }
        return "e^(2pi i " + std::to_string(k) + "/" + std::to_string(n) + ")";
    }
    std::ostringstream out;
    out << "e^(i " << std::arg(lambda) << ")";
    return out.str();
}

double wrap_angle(double x) {
    x = std::fmod(x, 2 * kPi);
    return x < 0 ? x + 2 * kPi : x;
}

RegistryEntry row(std::string name, int p, std::string label, std::string expr, double mana, double min,
                  bool exact, size_t orbit, size_t stab, std::string group, bool table = true) {
    return {std::move(name), p,    std::move(label), std::move(expr), mana,           min,
            exact,           orbit, stab,            std::move(group), table};
}

std::vector<RegistryEntry> build_registry(int p) {
    double s3 = std::sqrt(3.0), s5 = std::sqrt(5.0);
    if (p == 3) {
        double h1 = std::log(1.0 / 3 + 2 / s3);
        double xvs = std::log((1 + 4 * std::cos(kPi / 9)) / 3);
        return {
            row("S", 3, "|S>", "ln(5/3)", std::log(5.0 / 3), -1.0 / 3, true, 9, 24, "SL(2,Z_3)"),
            row("H1", 3, "|H,1>", "ln(1/3+2/sqrt3)", h1, 1 / (-6 - 6 * s3), true, 54, 4, "C_4"),
            row("N+", 3, "|N_+>", "ln(5/3)", std::log(5.0 / 3), -1.0 / 6, true, 36, 6, "C_6"),
            row("XVS", 3, "|XV_S>", "ln((1+4cos(pi/9))/3)", xvs, -0.10, false, 72, 3, "C_3"),
            row("Hm1", 3, "|H,-1>", "ln(1/3+2/sqrt3)", h1, 1 / (-6 - 6 * s3), true, 54, 4, "C_4", false),
            row("XVS'", 3, "|XV_S'>", "ln((1+4cos(pi/9))/3)", xvs, -0.10, false, 72, 3, "C_3", false),
            row("XVS''", 3, "|XV_S''>", "ln((1+4cos(pi/9))/3)", xvs, -0.10, false, 72, 3, "C_3", false),
        };
    }
    if (p == 5) {
        double hi = std::log((2 * std::sqrt(5 + 2 * s5) + 3) / 5);
        double bm1 = std::log(0.2 + 4 / s5);
        double bwm = std::asinh(3 + s5) - std::log(5.0);
        double bwp = std::log((std::sqrt(15 + 6 * s5) + 4) / 5);
        double a = std::log(1.2 + 1 / s5);
        return {
            row("Hi", 5, "|H,i>", "ln((2sqrt(5+2sqrt5)+3)/5)", hi, -0.2, true, 750, 4, "C_4"),
            row("Hm1", 5, "|H,-1>", "ln(9/5)", std::log(1.8), -0.05, true, 375, 8, "Quaternion"),
            row("B-1", 5, "|B,-1>", "ln(1/5+4/sqrt5)", bm1, -0.041202, false, 250, 12, "Dicyclic_3"),
            row("Bw-", 5, "|B,-e^(2pi i/3)>", "asinh(3+sqrt5)-ln5", bwm, -0.09278, false, 500, 6, "C_6"),
            row("Bw+", 5, "|B,e^(2pi i/3)>", "ln((sqrt(15+6sqrt5)+4)/5)", bwp, -0.2, true, 500, 6, "C_6"),
            row("A-", 5, "|A,-w^2>", "ln(6/5+1/sqrt5)", a, -0.2, true, 300, 10, "C_10"),
            row("A+", 5, "|A,w^2>", "ln(6/5+1/sqrt5)", a, -(1 + s5) / 20, true, 300, 10, "C_10"),
            row("XVS1", 5, "|XV_S,1>", "ln(1+2/sqrt5)", std::log(1 + 2 / s5), -s5 / 25, true, 600, 5, "C_5"),
            row("Hmi", 5, "|H,-i>", "ln((2sqrt(5+2sqrt5)+3)/5)", hi, -0.2, true, 750, 4, "C_4", false),
            row("Bp-1", 5, "|B',-1>", "ln(1/5+4/sqrt5)", bm1, -0.041202, false, 250, 12, "Dicyclic_3", false),
            row("Bpk+", 5, "|B',-e^(2pi i/3)>", "asinh(3+sqrt5)-ln5", bwm, -0.09278, false, 500, 6, "C_6", false),
            row("Bpk-", 5, "|B',-e^(-2pi i/3)>", "asinh(3+sqrt5)-ln5", bwm, -0.09278, false, 500, 6, "C_6", false),
            row("Bpe+", 5, "|B',e^(2pi i/3)>", "ln((sqrt(15+6sqrt5)+4)/5)", bwp, -0.2, true, 500, 6, "C_6", false),
            row("Bpe-", 5, "|B',e^(-2pi i/3)>", "ln((sqrt(15+6sqrt5)+4)/5)", bwp, -0.2, true, 500, 6, "C_6", false),
        };
    }
    return {};
}

PureState eigenvector_for(const Matrix &u, cplx lambda) {
    auto sys = eigensystem_finite_order(UnitaryMatrix::trusted(u));
    for (const auto &s : sys.spaces) {
        if (std::abs(s.eigenvalue - lambda) < 1e-8) {
            if (s.multiplicity != 1) {
                break;
            }
            return canonicalize(s.basis().at(0));
        }
    }
    throw MagicError(Errc::Unsupported, "no simple eigenvalue at the requested value");
}

PureState build_state(const std::string &name, int p) {
    OddPrime op(p);
    auto make = [](CVector v) {
        return PureState::from_amplitudes(std::move(v));
    };
    if (p == 3) {
        double th = 0.5 * std::atan(std::sqrt(2.0));
        double r = 1 / std::sqrt(2.0);
        cplx xi = root(1.0 / 9);
        if (name == "S") return make({0, 1, -1});
        if (name == "N+") return make({0, 1, 1});
        if (name == "H1") return make({std::cos(th), r * std::sin(th), r * std::sin(th)});
        if (name == "Hm1") return make({std::sin(th), -r * std::cos(th), -r * std::cos(th)});
        if (name == "XVS") return make({std::pow(xi, 5), std::pow(xi, 4), 1});
        if (name == "XVS'") return make({std::pow(xi, 8), xi, 1});
        if (name == "XVS''") return make({std::pow(xi, 2), std::pow(xi, 7), 1});
    }
    if (p == 5) {
        double s5 = std::sqrt(5.0);
        double chi = std::sqrt((5 + s5) / 10);
        double a = std::sqrt(1 + chi), b = std::sqrt(1 - chi);
        cplx w = root(1.0 / 5);
        cplx w3 = root(1.0 / 3);
        if (name == "Hi") return make({0, b, -a, a, -b});
        if (name == "Hmi") return make({0, a, b, -b, -a});
        if (name == "Hm1") return make({1 - s5, 1, 1, 1, 1});
        if (name == "A-") return make({0, 0, 1, -1, 0});
        if (name == "A+") return make({0, 0, 1, 1, 0});
        if (name == "XVS1") return make({1, 1, std::pow(w, 3), 1, std::pow(w, 2)});
        Matrix bm = operator_matrix("B", op);
        if (name == "B-1") return eigenvector_for(bm, -1.0);
        if (name == "Bw-") return eigenvector_for(bm, -w3);
        if (name == "Bw+") return eigenvector_for(bm, w3);
        if (name == "Bp-1") return make({-(3 + s5) / 2, 1, 1, 1, 1});
        for (int sg : {1, -1}) {
            std::string tag = sg > 0 ? "+" : "-";
            if (name == "Bpk" + tag) {
                double kap = 0.5 * (sg * std::sqrt(6 * (5 + s5)) - s5 - 3);
                return make({kap, -kap * kap / 4, 1, 1, -kap * kap / 4});
            }
            if (name == "Bpe" + tag) {
                double eta = -sg * std::sqrt(30 - 6 * s5) + s5 - 3;
                return make({0, eta / 4, 1, -1, -eta / 4});
            }
        }
    }
    throw MagicError(Errc::UnknownName, "no registry state '" + name + "' at p = " + std::to_string(p));
}

}  // namespace

const std::vector<RegistryEntry> &registry(OddPrime p) {
    static const std::vector<RegistryEntry> r3 = build_registry(3);
    static const std::vector<RegistryEntry> r5 = build_registry(5);
    static const std::vector<RegistryEntry> none;
    return p.value() == 3 ? r3 : p.value() == 5 ? r5 : none;
}

const RegistryEntry &registry_entry(const std::string &name, OddPrime p) {
    for (const auto &e : registry(p)) {
        if (e.name == name) {
            return e;
        }
    }
    throw MagicError(Errc::UnknownName, "no registry state '" + name + "' at p = " + std::to_string(p.value()));
}

std::vector<std::string> registry_names(OddPrime p) {
    std::vector<std::string> out;
    for (const auto &e : registry(p)) {
        out.push_back(e.name);
    }
    return out;
}

PureState named_state(const std::string &name, OddPrime p) {
    registry_entry(name, p);
    return build_state(name, p.value());
}

namespace {

std::vector<PureState> orbit_over(const PureState &psi, const CliffordGroup &group, const std::vector<size_t> &elems) {
    std::vector<CVector> images(elems.size());
    parallel_for(elems.size(), [&](size_t begin, size_t end) {
        for (size_t k = begin; k < end; k++) {
            images[k] = element_matrix(group, elems[k]) * psi.amplitudes();
        }
    });
    std::vector<PureState> out;
    for (const auto &img : images) {
        PureState s = canonicalize(img);
        bool seen = false;
        for (const auto &o : out) {
            if (same_ray(o, s, 1e-9)) {
                seen = true;
                break;
            }
        }
        if (!seen) {
            out.push_back(std::move(s));
        }
    }
    return out;
}

}  // namespace

std::vector<PureState> orbit(const PureState &psi, const CliffordGroup &group) {
    std::vector<size_t> all(group.size());
    for (size_t k = 0; k < all.size(); k++) {
        all[k] = k;
    }
    return orbit_over(psi, group, all);
}

size_t orbit_under_subgroup(const PureState &psi, const CliffordGroup &group, const std::vector<size_t> &subgroup) {
    return orbit_over(psi, group, subgroup).size();
}

StateClassifier::StateClassifier(const CliffordGroup &group) : p_(group.p()) {
    orbits_.push_back({kStabilizerName, stabilizer_states(p_)});
    for (const auto &e : registry(p_)) {
        orbits_.push_back({e.name, orbit(named_state(e.name, p_), group)});
    }
}

std::string StateClassifier::classify(const PureState &psi, double tol) const {
    if (psi.dim() != p_.dim()) {
        throw MagicError(Errc::DimensionMismatch, "state dimension differs from the classifier's p");
    }
    for (const auto &[name, states] : orbits_) {
        for (const auto &s : states) {
            if (same_ray(s, psi, tol)) {
                return name;
            }
        }
    }
    return kUnclassifiedName;
}

const std::vector<PureState> &StateClassifier::orbit_of(const std::string &name) const {
    for (const auto &[n, states] : orbits_) {
        if (n == name) {
            return states;
        }
    }
    throw MagicError(Errc::UnknownName, "classifier has no orbit named '" + name + "'");
}

std::string classify_state(const PureState &psi, OddPrime p) {
    if (registry(p).empty()) {
        for (const auto &s : stabilizer_states(p)) {
            if (same_ray(s, psi, 1e-8)) {
                return kStabilizerName;
            }
        }
        return kUnclassifiedName;
    }
    return StateClassifier(CliffordGroup::enumerate(p)).classify(psi);
}

double DegenerateFamily::theta_max() const {
    return convention == AngleConvention::FullAngle ? kPi / 2 : kPi;
}

PureState DegenerateFamily::state(double theta, double phi, size_t i, size_t j) const {
    if (i >= frame.size() || j >= frame.size() || i == j) {
        throw MagicError(Errc::BadInput, "family frame indices out of range");
    }
    double t = convention == AngleConvention::FullAngle ? theta : theta / 2;
    return PureState::from_amplitudes(std::cos(t) * frame[i] + std::polar(std::sin(t), phi) * frame[j]);
}

namespace {

DegenerateFamily family_from_frame(std::string name, OddPrime p, std::string source, cplx lambda,
                                   std::vector<CVector> frame, AngleConvention conv) {
    std::vector<PureState> basis;
    for (const auto &v : gram_schmidt(frame)) {
        basis.push_back(PureState::from_amplitudes(v));
    }
    return {std::move(name), p, lambda, std::move(source), std::move(basis), std::move(frame), conv};
}

CVector vec(std::initializer_list<cplx> xs) {
    return CVector(xs);
}

}  // namespace

std::vector<std::string> named_family_names(OddPrime p) {
    if (p.value() == 3) {
        return {"V_-I(+1)", "V_S(w^2)"};
    }
    if (p.value() == 5) {
        return {"V_-I(-1)", "V_-I(+1)", "V_S(w^2)", "V_S(w^3)", "H(+1)", "B^2(w3)"};
    }
    return {};
}

DegenerateFamily named_family(const std::string &name, OddPrime p) {
    const double r = 1 / std::sqrt(2.0);
    auto ev = [&](const std::string &op, const CVector &v) {
        cplx lambda;
        is_eigenvector(operator_matrix(op, p), v, &lambda);
        return lambda;
    };
    if (p.value() == 3) {
        if (name == "V_-I(+1)") {
            return family_from_frame(name, p, "V_-I", ev("V_-I", vec({1, 0, 0})), {vec({1, 0, 0}), vec({0, r, r})},
                                     AngleConvention::FullAngle);
        }
        if (name == "V_S(w^2)") {
            return family_from_frame(name, p, "V_S", ev("V_S", vec({0, 1, 0})), {vec({0, 1, 0}), vec({0, 0, 1})},
                                     AngleConvention::FullAngle);
        }
    }
    if (p.value() == 5) {
        auto half = AngleConvention::HalfAngle;
        if (name == "V_-I(-1)") {
            CVector a = vec({0, r, 0, 0, -r}), b = vec({0, 0, r, -r, 0});
            return family_from_frame(name, p, "V_-I", ev("V_-I", a), {a, b}, half);
        }
        if (name == "V_-I(+1)") {
            CVector a = vec({1, 0, 0, 0, 0}), b = vec({0, r, 0, 0, r}), c = vec({0, 0, r, r, 0});
            return family_from_frame(name, p, "V_-I", ev("V_-I", a), {a, b, c}, half);
        }
        if (name == "V_S(w^2)") {
            CVector a = vec({0, 0, 1, 0, 0}), b = vec({0, 0, 0, 1, 0});
            return family_from_frame(name, p, "V_S", ev("V_S", a), {a, b}, half);
        }
        if (name == "V_S(w^3)") {
            CVector a = vec({0, 1, 0, 0, 0}), b = vec({0, 0, 0, 0, 1});
            return family_from_frame(name, p, "V_S", ev("V_S", a), {a, b}, half);
        }
        if (name == "H(+1)") {
            double phi = (1 + std::sqrt(5.0)) / 2;
            CVector a = vec({phi, 1, 0, 0, 1}), b = vec({phi, 0, 1, 1, 0});
            return family_from_frame(name, p, "H", ev("H", a), {a, b}, half);
        }
        if (name == "B^2(w3)") {
            cplx w3 = root(1.0 / 3);
            auto sys = eigensystem_finite_order(UnitaryMatrix::trusted(operator_matrix("B^2", p)));
            for (const auto &s : sys.spaces) {
                if (std::abs(s.eigenvalue - w3) < 1e-8) {
                    return family_from_frame(name, p, "B^2", w3, s.basis(), half);
                }
            }
        }
    }
    throw MagicError(Errc::UnknownName, "no family '" + name + "' at p = " + std::to_string(p.value()));
}

bool families_equivalent(const DegenerateFamily &a, const DegenerateFamily &b, const CliffordGroup &group) {
    if (a.dim() != b.dim() || !(a.p == b.p)) {
        return false;
    }
    auto proj = [](const DegenerateFamily &f) {
        std::vector<CVector> vs;
        for (const auto &s : f.basis) {
            vs.push_back(s.amplitudes());
        }
        return projector_onto(vs);
    };
    Matrix pa = proj(a), pb = proj(b);
    std::atomic<bool> found{false};
    parallel_for(group.size(), [&](size_t begin, size_t end) {
        for (size_t k = begin; k < end && !found.load(std::memory_order_relaxed); k++) {
            const Matrix c = element_matrix(group, k).matrix();
            if ((c * pa * c.adjoint() - pb).frobenius() < 1e-8) {
                found = true;
            }
        }
    });
    return found;
}

namespace {

std::string class_operator_name(const ReducedConjugacyClass &cls) {
    if (!cls.paper_name) {
        return "";
    }
    return *cls.paper_name == "Pauli" ? "X" : *cls.paper_name;
}

}  // namespace

ClassEigenstates eigenstates_of_class(
    const CliffordGroup &group, const ReducedConjugacyClass &cls, const StateClassifier &classifier) {
    OddPrime p = group.p();
    std::string op = class_operator_name(cls);
    std::string source = cls.paper_name ? *cls.paper_name : "class@" + std::to_string(cls.representative);
    Matrix u = op.empty() ? element_matrix(group, cls.representative).matrix() : operator_matrix(op, p);
    auto sys = eigensystem_finite_order(UnitaryMatrix::trusted(u));

    std::vector<DegenerateFamily> named;
    for (const auto &n : named_family_names(p)) {
        named.push_back(named_family(n, p));
    }
    ClassEigenstates out;
    for (const auto &space : sys.spaces) {
        if (space.multiplicity == p.dim()) {
            continue;
        }
        auto basis = space.basis();
        if (space.multiplicity == 1) {
            PureState s = canonicalize(basis[0]);
            std::string name = classifier.classify(s);
            auto w = wigner(s);
            size_t orbit_size = name == kUnclassifiedName ? orbit(s, group).size() : classifier.orbit_of(name).size();
            out.records.push_back(
                {name, p, s, space.eigenvalue, source, w.mana(), w.min_entry().first, orbit_size, name == kStabilizerName});
            continue;
        }
        std::optional<DegenerateFamily> fam;
        for (const auto &f : named) {
            std::vector<CVector> fv;
            for (const auto &b : f.basis) {
                fv.push_back(b.amplitudes());
            }
            if (f.dim() == space.multiplicity && (projector_onto(fv) - space.projector).frobenius() < 1e-8) {
                fam = f;
                fam->eigenvalue = space.eigenvalue;
            }
        }
        if (!fam) {
            std::string name = source + "(" + eigenvalue_label(space.eigenvalue, p.value()) + ")";
            fam = family_from_frame(name, p, source, space.eigenvalue, basis,
                                    p.value() == 3 ? AngleConvention::FullAngle : AngleConvention::HalfAngle);
        }
        out.families.push_back(std::move(*fam));
    }
    return out;
}

Census bestiary_census(const CliffordGroup &group, const StateClassifier &classifier) {
    auto classes = clifford_conjugacy_classes(group);
    auto reduced = reduced_conjugacy_classes(group, classes);
    Census census;
    auto known = [](const std::vector<EigenstateRecord> &rs, const EigenstateRecord &r) {
        for (const auto &x : rs) {
            if (r.name != kUnclassifiedName && x.name == r.name) {
                return true;
            }
            if (r.name == kUnclassifiedName && x.name == kUnclassifiedName && x.orbit_size == r.orbit_size &&
                std::abs(x.mana - r.mana) < 1e-9) {
                return true;
            }
        }
        return false;
    };
    for (const auto &cls : reduced) {
        auto found = eigenstates_of_class(group, cls, classifier);
        for (auto &r : found.records) {
            auto &dest = r.stabilizer ? census.stabilizer_records : census.records;
            if (!known(dest, r)) {
                dest.push_back(std::move(r));
            }
        }
        for (auto &f : found.families) {
            bool dup = false;
            for (const auto &g : census.families) {
                if (families_equivalent(f, g, group)) {
                    dup = true;
                    break;
                }
            }
            if (!dup) {
                census.families.push_back(std::move(f));
            }
        }
    }
    return census;
}

namespace {

// Maps (theta, phi) to theta in [0, theta_max], phi in [0, 2 pi) for the same ray.
std::pair<double, double> normalize_angles(double theta, double phi, AngleConvention conv) {
    double scale = conv == AngleConvention::FullAngle ? 1.0 : 2.0;
    double t = std::fmod(theta / scale, kPi);
    if (t < 0) {
        t += kPi;
    }
    if (t > kPi / 2) {
        t = kPi - t;
        phi += kPi;
    }
    return {t * scale, wrap_angle(phi)};
}

SurfacePoint refine_max(const DegenerateFamily &f, double theta, double phi, size_t i, size_t j,
                        const StateClassifier &classifier) {
    auto objective = [&](const std::vector<double> &x) {
        return -mana(f.state(x[0], x[1], i, j));
    };
    std::vector<double> x{theta, phi};
    double step = 0.02;
    for (int round = 0; round < 6; round++) {
        NelderMeadOptions opt;
        opt.initial_step = step;
        opt.tolerance = 1e-14;
        opt.max_iterations = 400;
        x = nelder_mead(objective, x, opt).x;
        step *= 0.1;
    }
    auto [t, ph] = normalize_angles(x[0], x[1], f.convention);
    PureState s = f.state(t, ph, i, j);
    return {t, ph, mana(s), s, classifier.classify(s, 1e-6)};
}

}  // namespace

FamilySurface family_mana_surface(
    const DegenerateFamily &family,
    size_t resolution,
    const StateClassifier &classifier,
    size_t i,
    size_t j) {
    if (resolution < 3) {
        throw MagicError(Errc::BadInput, "surface resolution must be at least 3");
    }
    size_t n = resolution;
    double tmax = family.theta_max();
    auto theta_at = [&](size_t k) {
        return tmax * (double)k / (double)(n - 1);
    };
    auto phi_at = [&](size_t l) {
        return 2 * kPi * (double)l / (double)n;
    };
    std::vector<double> grid(n * n);
    parallel_for(n * n, [&](size_t begin, size_t end) {
        for (size_t q = begin; q < end; q++) {
            grid[q] = mana(family.state(theta_at(q / n), phi_at(q % n), i, j));
        }
    });

    std::vector<size_t> peaks;
    for (size_t k = 0; k < n; k++) {
        for (size_t l = 0; l < n; l++) {
            double v = grid[k * n + l];
            bool peak = v > 1e-9;
            for (int dk = -1; dk <= 1 && peak; dk++) {
                for (int dl = -1; dl <= 1 && peak; dl++) {
                    long long kk = (long long)k + dk;
                    if ((dk == 0 && dl == 0) || kk < 0 || kk >= (long long)n) {
                        continue;
                    }
                    size_t ll = (l + n + (size_t)(dl + 1) - 1) % n;
                    if (grid[(size_t)kk * n + ll] > v + 1e-12) {
                        peak = false;
                    }
                }
            }
            if (peak) {
                peaks.push_back(k * n + l);
            }
        }
    }
    std::vector<SurfacePoint> refined(peaks.size());
    parallel_for(peaks.size(), [&](size_t begin, size_t end) {
        for (size_t q = begin; q < end; q++) {
            refined[q] = refine_max(family, theta_at(peaks[q] / n), phi_at(peaks[q] % n), i, j, classifier);
        }
    });

    FamilySurface out{n, tmax, grid, {}, {}};
    size_t best = (size_t)(std::max_element(grid.begin(), grid.end()) - grid.begin());
    out.global_max = refine_max(family, theta_at(best / n), phi_at(best % n), i, j, classifier);
    for (auto &pt : refined) {
        if (pt.mana > out.global_max.mana) {
            out.global_max = pt;
        }
        bool dup = false;
        for (const auto &q : out.local_maxima) {
            if (q.classification == pt.classification && std::abs(q.mana - pt.mana) < 1e-6) {
                dup = true;
                break;
            }
        }
        if (!dup) {
            out.local_maxima.push_back(std::move(pt));
        }
    }
    std::sort(out.local_maxima.begin(), out.local_maxima.end(), [](const SurfacePoint &a, const SurfacePoint &b) {
        return a.mana > b.mana;
    });
    return out;
}

FamilyIntersection family_intersections(
    const DegenerateFamily &a, const DegenerateFamily &b, const CliffordGroup &group, const StateClassifier &classifier) {
    std::vector<CVector> sa, sb;
    for (const auto &s : a.basis) {
        sa.push_back(s.amplitudes());
    }
    for (const auto &s : b.basis) {
        sb.push_back(s.amplitudes());
    }
    std::vector<std::vector<CVector>> hits(group.size());
    parallel_for(group.size(), [&](size_t begin, size_t end) {
        for (size_t k = begin; k < end; k++) {
            const Matrix c = element_matrix(group, k).matrix();
            std::vector<CVector> img;
            for (const auto &v : sb) {
                img.push_back(c * v);
            }
            hits[k] = subspace_intersection(sa, img);
        }
    });
    FamilyIntersection out{{}, {}, 0};
    for (const auto &h : hits) {
        if (h.size() == sa.size() && sa.size() == sb.size()) {
            out.coincident_images++;
            continue;
        }
        if (h.size() != 1) {
            continue;
        }
        PureState s = canonicalize(h[0]);
        bool seen = false;
        for (const auto &t : out.states) {
            if (same_ray(s, t, 1e-9)) {
                seen = true;
                break;
            }
        }
        if (!seen) {
            out.classifications.push_back(classifier.classify(s));
            out.states.push_back(std::move(s));
        }
    }
    return out;
}

std::vector<std::string> eigenvector_of(const PureState &psi) {
    OddPrime p(static_cast<long long>(psi.dim()));
    std::vector<std::string> out;
    for (const auto &[name, e] : clifford_symbol_table(p)) {
        if (name != "I" && is_eigenvector(operator_matrix(name, p), psi.amplitudes(), nullptr)) {
            out.push_back(name);
        }
    }
    return out;
}

std::vector<TableRow> reproduce_table(const CliffordGroup &group) {
    std::vector<const RegistryEntry *> entries;
    for (const auto &e : registry(group.p())) {
        if (e.table_row) {
            entries.push_back(&e);
        }
    }
    std::vector<TableRow> rows;
    for (const auto *e : entries) {
        PureState s = named_state(e->name, group.p());
        auto w = wigner(s);
        std::string ev;
        for (const auto &n : eigenvector_of(s)) {
            ev += (ev.empty() ? "" : ";") + n;
        }
        size_t orb = orbit(s, group).size();
        double mn = w.min_entry().first;
        double min_tol = e->min_entry_exact ? 1e-9 : 5e-3;
        rows.push_back({*e, ev, w.mana(), mn, orb, std::abs(w.mana() - e->mana_closed_form) < 1e-9,
                        std::abs(mn - e->min_entry_expected) < min_tol, orb == e->orbit_size});
    }
    return rows;
}

nlohmann::json to_json(const std::vector<TableRow> &rows) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto &r : rows) {
        out.push_back({{"name", r.expected.name},
                       {"label", r.expected.label},
                       {"eigenvector_of", r.eigenvector_of},
                       {"mana_expression", r.expected.mana_expression},
                       {"mana_closed_form_value", r.expected.mana_closed_form},
                       {"mana_numeric", r.mana_numeric},
                       {"min_entry", r.min_entry},
                       {"min_entry_expected", r.expected.min_entry_expected},
                       {"orbit_size", r.orbit_size},
                       {"orbit_expected", r.expected.orbit_size},
                       {"pass", r.ok()}});
    }
    return out;
}

std::string to_csv(const std::vector<TableRow> &rows) {
    std::ostringstream out;
    out.precision(12);
    out << "name,mana,min_entry,orbit\r\n";
    for (const auto &r : rows) {
        out << r.expected.name << "," << r.mana_numeric << "," << r.min_entry << "," << r.orbit_size << "\r\n";
    }
    return out.str();
}

}  // namespace magiclab
