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

#include "magiclab/clifford.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <sstream>

#include "magiclab/error.h"
#include "magiclab/parallel.h"

namespace magiclab {

CliffordElement CliffordElement::identity(OddPrime p) {
    return {SymplecticVector::make(0, 0, p), SL2Matrix::identity(p)};
}

CliffordElement CliffordElement::displacement(const SymplecticVector &chi) {
    return {chi, SL2Matrix::identity(chi.modulus())};
}

CliffordElement CliffordElement::symplectic(const SL2Matrix &F) {
    return {SymplecticVector::make(0, 0, F.modulus()), F};
}

std::string CliffordElement::str() const {
    std::ostringstream out;
    out << "D(" << chi.u.value() << "," << chi.v.value() << ") V" << F.str();
    return out.str();
}

CliffordElement compose(const CliffordElement &a, const CliffordElement &b) {
    if (!(a.modulus() == b.modulus())) {
        throw MagicError(Errc::DimensionMismatch, "composing elements over different p");
    }
    return {a.chi + a.F * b.chi, a.F * b.F};
}

CliffordElement inverse(const CliffordElement &a) {
    SL2Matrix finv = a.F.inverse();
    return {-(finv * a.chi), finv};
}

CliffordElement power(const CliffordElement &a, long long k) {
    CliffordElement base = k < 0 ? inverse(a) : a;
    k = k < 0 ? -k : k;
    CliffordElement acc = CliffordElement::identity(a.modulus());
    while (k > 0) {
        if (k & 1) {
            acc = compose(acc, base);
        }
        base = compose(base, base);
        k >>= 1;
    }
    return acc;
}

int element_order(const CliffordElement &a) {
    CliffordElement id = CliffordElement::identity(a.modulus());
    CliffordElement acc = a;
    int n = 1;
    while (!(acc == id)) {
        acc = compose(acc, a);
        n++;
    }
    return n;
}

static cplx root_of_unity(long long e, int p) {
    return std::polar(1.0, 2 * std::numbers::pi * (double)mod_p(e, p) / (double)p);
}

UnitaryMatrix weyl_displacement(const SymplecticVector &chi) {
    int p = chi.u.p();
    long long u = chi.u.value(), v = chi.v.value();
    long long half = inv_mod(2, p);
    Matrix m((size_t)p, (size_t)p);
    for (long long k = 0; k < p; k++) {
        m((size_t)mod_p(k + u, p), (size_t)k) = root_of_unity(u * v % p * half + v * k, p);
    }
    return UnitaryMatrix::trusted(std::move(m));
}

UnitaryMatrix metaplectic(const SL2Matrix &F) {
    int p = F.a.p();
    long long a = F.a.value(), b = F.b.value(), c = F.c.value(), d = F.d.value();
    long long half = inv_mod(2, p);
    Matrix m((size_t)p, (size_t)p);
    if (b != 0) {
        long long binv = inv_mod(b, p);
        double scale = 1.0 / std::sqrt((double)p);
        for (long long j = 0; j < p; j++) {
            for (long long k = 0; k < p; k++) {
                long long q = mod_p(a * k * k - 2 * j * k + d * j * j, p);
                m((size_t)j, (size_t)k) = scale * root_of_unity(half * binv % p * q, p);
            }
        }
    } else {
        for (long long k = 0; k < p; k++) {
            m((size_t)mod_p(a * k, p), (size_t)k) = root_of_unity(half * a % p * c % p * (k * k % p), p);
        }
    }
    return UnitaryMatrix::trusted(std::move(m));
}

UnitaryMatrix matrix_of(const CliffordElement &e) {
    return weyl_displacement(e.chi) * metaplectic(e.F);
}

CliffordGroup::CliffordGroup(OddPrime p) : p_(p), sl2_(p) {
}

CliffordGroup CliffordGroup::enumerate(OddPrime p) {
    if (p.value() > kMaxPrime) {
        throw MagicError(Errc::TooLarge, "Clifford enumeration is limited to p <= 13");
    }
    CliffordGroup g(p);
    int n = p.value();
    g.elements_.reserve(g.sl2_.size() * (size_t)n * n);
    for (const auto &F : g.sl2_.elements()) {
        for (int u = 0; u < n; u++) {
            for (int v = 0; v < n; v++) {
                g.elements_.push_back({SymplecticVector::make(u, v, p), F});
            }
        }
    }
    if (n <= kMaxTabulatedPrime) {
        std::vector<UnitaryMatrix> table(g.elements_.size());
        size_t per = (size_t)n * n;
        parallel_for(g.sl2_.size(), [&](size_t begin, size_t end) {
            for (size_t s = begin; s < end; s++) {
                Matrix vf = metaplectic(g.sl2_[s]).matrix();
                for (size_t x = 0; x < per; x++) {
                    table[s * per + x] = weyl_displacement(g.elements_[s * per + x].chi) * UnitaryMatrix::trusted(vf);
                }
            }
        });
        g.matrices_ = std::move(table);
    }
    return g;
}

size_t CliffordGroup::index_of(const CliffordElement &e) const {
    size_t n = (size_t)p_.value();
    return sl2_.index_of(e.F) * n * n + (size_t)e.chi.u.value() * n + (size_t)e.chi.v.value();
}

size_t CliffordGroup::multiply(size_t a, size_t b) const {
    return index_of(compose(elements_[a], elements_[b]));
}

size_t CliffordGroup::inverse_of(size_t a) const {
    return index_of(inverse(elements_[a]));
}

size_t CliffordGroup::identity_index() const {
    return index_of(CliffordElement::identity(p_));
}

std::vector<size_t> CliffordGroup::symplectic_indices() const {
    std::vector<size_t> out;
    size_t per = (size_t)p_.value() * p_.value();
    for (size_t s = 0; s < sl2_.size(); s++) {
        out.push_back(s * per);
    }
    return out;
}

const UnitaryMatrix &CliffordGroup::matrix(size_t k) const {
    if (matrices_.empty()) {
        throw MagicError(Errc::Unsupported, "matrices are tabulated only for p <= 7");
    }
    return matrices_.at(k);
}

std::vector<std::pair<std::string, CliffordElement>> clifford_symbol_table(OddPrime p) {
    auto sym = [&](long long a, long long b, long long c, long long d) {
        return CliffordElement::symplectic(SL2Matrix::make(a, b, c, d, p));
    };
    CliffordElement x = CliffordElement::displacement(SymplecticVector::make(1, 0, p));
    CliffordElement z = CliffordElement::displacement(SymplecticVector::make(0, 1, p));
    CliffordElement h = sym(0, 1, -1, 0);
    CliffordElement vs = sym(1, 0, 1, 1);
    CliffordElement minus = sym(-1, 0, 0, -1);
    std::vector<std::pair<std::string, CliffordElement>> t{
        {"I", CliffordElement::identity(p)},
        {"X", x},
        {"Z", z},
        {"H", h},
        {"V_S", vs},
        {"V_S^-1", inverse(vs)},
        {"V_-I", minus},
        {"X V_S", compose(x, vs)},
        {"X V_S^-1", compose(x, inverse(vs))},
    };
    if (p.value() == 3) {
        CliffordElement n = compose(vs, compose(h, h));
        t.push_back({"V_S^2", compose(vs, vs)});
        t.push_back({"N", n});
        t.push_back({"N^-1", inverse(n)});
        t.push_back({"H'", sym(2, 2, 2, 1)});
        t.push_back({"-H'", sym(1, 1, 1, 2)});
        t.push_back({"X V_S^2", compose(x, compose(vs, vs))});
    }
    if (p.value() == 5) {
        CliffordElement h2 = compose(h, h);
        CliffordElement b = compose(h, vs);
        t.push_back({"A", compose(vs, h2)});
        t.push_back({"A'", compose(compose(vs, vs), h2)});
        t.push_back({"B", b});
        t.push_back({"B^2", compose(b, b)});
        t.push_back({"B^-1", inverse(b)});
        t.push_back({"H'", sym(0, 2, 2, 0)});
        t.push_back({"K", sym(1, 2, 2, 0)});
        t.push_back({"X^2 V_S", compose(compose(x, x), vs)});
        t.push_back({"X^2 V_S^-1", compose(compose(x, x), inverse(vs))});
    }
    return t;
}

CliffordElement named_element(const std::string &name, OddPrime p) {
    for (const auto &[n, e] : clifford_symbol_table(p)) {
        if (n == name) {
            return e;
        }
    }
    throw MagicError(Errc::UnknownName, "no element named '" + name + "' at p = " + std::to_string(p.value()));
}

namespace {

// (class label, element whose class gets that label)
std::vector<std::pair<std::string, std::string>> class_names(OddPrime p) {
    if (p.value() == 3) {
        return {{"I", "I"},         {"Pauli", "X"}, {"V_-I", "V_-I"},       {"H", "H"}, {"V_S", "V_S"},
                {"V_S^2", "V_S^2"}, {"X V_S", "X V_S"}, {"X V_S^2", "X V_S^2"}, {"N", "N"}, {"N^-1", "N^-1"}};
    }
    if (p.value() == 5) {
        return {{"I", "I"},         {"Pauli", "X"},         {"V_-I", "V_-I"},   {"V_S", "V_S"},
                {"V_S^-1", "V_S^-1"}, {"H", "H"},           {"A", "A"},         {"A'", "A'"},
                {"B", "B"},         {"B^2", "B^2"},         {"X V_S", "X V_S"}, {"X^2 V_S", "X^2 V_S"},
                {"X V_S^-1", "X V_S^-1"}, {"X^2 V_S^-1", "X^2 V_S^-1"}};
    }
    return {{"I", "I"}, {"Pauli", "X"}, {"V_-I", "V_-I"}, {"H", "H"}, {"V_S", "V_S"}, {"X V_S", "X V_S"}};
}

std::vector<std::string> reduced_names(OddPrime p) {
    if (p.value() == 3) {
        return {"I", "Pauli", "V_-I", "H", "V_S", "X V_S", "N"};
    }
    if (p.value() == 5) {
        return {"I", "Pauli", "V_-I", "V_S", "H", "A", "B", "B^2", "X V_S"};
    }
    return {"I", "Pauli", "V_-I", "H", "V_S", "X V_S"};
}

}  // namespace

std::vector<ConjugacyClass> clifford_conjugacy_classes(const CliffordGroup &group) {
    size_t n = group.size();
    std::vector<int> owner(n, -1);
    std::vector<size_t> inv(n);
    for (size_t k = 0; k < n; k++) {
        inv[k] = group.inverse_of(k);
    }
    std::vector<ConjugacyClass> classes;
    for (size_t g = 0; g < n; g++) {
        if (owner[g] >= 0) {
            continue;
        }
        std::vector<size_t> conj(n);
        parallel_for(n, [&](size_t begin, size_t end) {
            for (size_t h = begin; h < end; h++) {
                conj[h] = group.multiply(group.multiply(h, g), inv[h]);
            }
        });
        std::sort(conj.begin(), conj.end());
        conj.erase(std::unique(conj.begin(), conj.end()), conj.end());
        for (size_t m : conj) {
            owner[m] = (int)classes.size();
        }
        classes.push_back({std::move(conj), g, std::nullopt});
    }
    auto table = clifford_symbol_table(group.p());
    for (const auto &[label, elem_name] : class_names(group.p())) {
        for (const auto &[name, e] : table) {
            if (name == elem_name) {
                auto &cls = classes[owner[group.index_of(e)]];
                if (!cls.paper_name) {
                    cls.paper_name = label;
                }
            }
        }
    }
    return classes;
}

namespace {

bool projector_sets_match(const std::vector<Matrix> &a, const std::vector<Matrix> &b, double tol) {
    if (a.size() != b.size()) {
        return false;
    }
    std::vector<bool> used(b.size(), false);
    for (const auto &x : a) {
        bool hit = false;
        for (size_t j = 0; j < b.size() && !hit; j++) {
            if (!used[j] && (x - b[j]).frobenius() < tol) {
                used[j] = true;
                hit = true;
            }
        }
        if (!hit) {
            return false;
        }
    }
    return true;
}

size_t find_root(std::vector<size_t> &parent, size_t x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

}  // namespace

std::vector<ReducedConjugacyClass> reduced_conjugacy_classes(
    const CliffordGroup &group, const std::vector<ConjugacyClass> &classes) {
    size_t nc = classes.size();
    std::vector<std::vector<Matrix>> projectors(nc);
    std::vector<std::vector<size_t>> mults(nc);
    for (size_t c = 0; c < nc; c++) {
        auto sys = eigensystem_finite_order(group.matrix(classes[c].representative));
        for (auto &s : sys.spaces) {
            projectors[c].push_back(s.projector);
            mults[c].push_back(s.multiplicity);
        }
        std::sort(mults[c].begin(), mults[c].end());
    }
    std::vector<size_t> parent(nc);
    std::iota(parent.begin(), parent.end(), 0);
    for (size_t a = 0; a < nc; a++) {
        for (size_t b = a + 1; b < nc; b++) {
            if (find_root(parent, a) == find_root(parent, b) || mults[a] != mults[b]) {
                continue;
            }
            std::vector<char> hit(group.size(), 0);
            parallel_for(group.size(), [&](size_t begin, size_t end) {
                for (size_t k = begin; k < end; k++) {
                    const Matrix &cm = group.matrix(k).matrix();
                    Matrix cd = cm.adjoint();
                    std::vector<Matrix> moved;
                    for (const auto &p : projectors[a]) {
                        moved.push_back(cm * p * cd);
                    }
                    if (projector_sets_match(moved, projectors[b], 1e-8)) {
                        hit[k] = 1;
                        return;
                    }
                }
            });
            if (std::find(hit.begin(), hit.end(), 1) != hit.end()) {
                parent[find_root(parent, b)] = find_root(parent, a);
            }
        }
    }
    std::vector<ReducedConjugacyClass> out;
    std::vector<int> slot(nc, -1);
    for (size_t c = 0; c < nc; c++) {
        size_t r = find_root(parent, c);
        if (slot[r] < 0) {
            slot[r] = (int)out.size();
            out.push_back({{}, classes[c].representative, std::nullopt});
        }
        out[slot[r]].member_classes.push_back(c);
    }
    std::vector<int> owner(group.size(), -1);
    for (size_t c = 0; c < nc; c++) {
        for (size_t m : classes[c].members) {
            owner[m] = slot[find_root(parent, c)];
        }
    }
    for (const auto &name : reduced_names(group.p())) {
        std::string elem = name == "Pauli" ? "X" : name;
        auto &red = out[owner[group.index_of(named_element(elem, group.p()))]];
        if (!red.paper_name) {
            red.paper_name = name;
            for (size_t c : red.member_classes) {
                if (classes[c].paper_name == name) {
                    red.representative = classes[c].representative;
                }
            }
        }
    }
    return out;
}

std::vector<PureState> stabilizer_states(OddPrime p) {
    std::vector<PureState> out;
    for (size_t k = 0; k < p.dim(); k++) {
        out.push_back(PureState::basis(p.dim(), k));
    }
    for (int v = 0; v < p.value(); v++) {
        auto sys = eigensystem_finite_order(weyl_displacement(SymplecticVector::make(1, v, p)));
        for (const auto &space : sys.spaces) {
            out.push_back(canonicalize(space.basis().at(0)));
        }
    }
    return out;
}

std::vector<CliffordElement> subgroup_generate(const std::vector<CliffordElement> &gens) {
    if (gens.empty()) {
        throw MagicError(Errc::BadInput, "subgroup_generate needs at least one generator");
    }
    OddPrime p = gens[0].modulus();
    long long n = p.value();
    size_t bound = (size_t)(n * n * n * (n * n - 1));
    auto key = [](const CliffordElement &e) {
        return std::array<int, 6>{e.F.a.value(), e.F.b.value(), e.F.c.value(), e.F.d.value(), e.chi.u.value(),
                                  e.chi.v.value()};
    };
    std::vector<CliffordElement> elems{CliffordElement::identity(p)};
    std::set<std::array<int, 6>> seen{key(elems[0])};
    for (size_t k = 0; k < elems.size(); k++) {
        for (const auto &g : gens) {
            CliffordElement next = compose(elems[k], g);
            if (seen.insert(key(next)).second) {
                elems.push_back(next);
                if (elems.size() > bound) {
                    throw MagicError(Errc::ClosureOverflow, "closure exceeded the Clifford group order");
                }
            }
        }
    }
    return elems;
}

GroupLabel subgroup_label(const std::vector<CliffordElement> &elements) {
    std::vector<int> orders;
    bool abelian = true;
    for (const auto &x : elements) {
        orders.push_back(element_order(x));
        for (const auto &y : elements) {
            if (abelian && !(compose(x, y) == compose(y, x))) {
                abelian = false;
            }
        }
    }
    return label_from_orders(orders, abelian);
}

nlohmann::json to_json(const CliffordElement &e) {
    auto t = e.F.tuple();
    return {{"chi", {e.chi.u.value(), e.chi.v.value()}}, {"F", {t[0], t[1], t[2], t[3]}}};
}

nlohmann::json class_report_json(
    const CliffordGroup &group,
    const std::vector<ConjugacyClass> &classes,
    const std::vector<ReducedConjugacyClass> *reduced) {
    nlohmann::json out;
    out["p"] = group.p().value();
    out["order"] = group.size();
    nlohmann::json rows = nlohmann::json::array();
    for (const auto &cls : classes) {
        nlohmann::json row{{"representative", to_json(group[cls.representative])}, {"size", cls.size()}};
        if (cls.paper_name) {
            row["paper_name"] = *cls.paper_name;
        }
        rows.push_back(row);
    }
    out["classes"] = rows;
    if (reduced) {
        nlohmann::json red = nlohmann::json::array();
        for (const auto &r : *reduced) {
            nlohmann::json row{{"representative", to_json(group[r.representative])}, {"member_classes", r.member_classes}};
            size_t total = 0;
            for (size_t c : r.member_classes) {
                total += classes[c].size();
            }
            row["total_size"] = total;
            if (r.paper_name) {
                row["paper_name"] = *r.paper_name;
            }
            red.push_back(row);
        }
        out["reduced"] = red;
    }
    return out;
}

}  // namespace magiclab
