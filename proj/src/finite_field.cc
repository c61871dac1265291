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

#include "magiclab/finite_field.h"

#include <algorithm>
#include <set>
#include <sstream>

#include "magiclab/error.h"

namespace magiclab {

bool is_odd_prime(long long n) {
    if (n < 3 || n % 2 == 0) {
        return false;
    }
    for (long long k = 3; k * k <= n; k += 2) {
        if (n % k == 0) {
            return false;
        }
    }
    return true;
}

OddPrime::OddPrime(long long p) : p_((int)p) {
    if (!is_odd_prime(p) || p > 1000003) {
        throw MagicError(Errc::NotOddPrime, std::to_string(p) + " is not an odd prime");
    }
}

FpScalar::FpScalar(long long value, OddPrime p) : value_(mod_p(value, p.value())), p_(p.value()) {
}

static void require_same(int p, int q) {
    if (p != q) {
        throw MagicError(Errc::DimensionMismatch, "mixed moduli " + std::to_string(p) + " and " + std::to_string(q));
    }
}

FpScalar FpScalar::operator+(const FpScalar &other) const {
    require_same(p_, other.p_);
    return FpScalar(mod_p((long long)value_ + other.value_, p_), p_, 0);
}

FpScalar FpScalar::operator-(const FpScalar &other) const {
    require_same(p_, other.p_);
    return FpScalar(mod_p((long long)value_ - other.value_, p_), p_, 0);
}

FpScalar FpScalar::operator*(const FpScalar &other) const {
    require_same(p_, other.p_);
    return FpScalar(mod_p((long long)value_ * other.value_, p_), p_, 0);
}

FpScalar FpScalar::operator-() const {
    return FpScalar(mod_p(-(long long)value_, p_), p_, 0);
}

int inv_mod(long long a, int p) {
    long long r0 = p, r1 = mod_p(a, p);
    if (r1 == 0) {
        throw MagicError(Errc::ZeroInverse, "0 has no inverse mod " + std::to_string(p));
    }
    long long t0 = 0, t1 = 1;
    while (r1 != 0) {
        long long q = r0 / r1;
        std::swap(r0, r1);
        r1 -= q * r0;
        std::swap(t0, t1);
        t1 -= q * t0;
    }
    return mod_p(t0, p);
}

FpScalar inv_mod(const FpScalar &a) {
    return FpScalar(inv_mod(a.value(), a.p()), a.modulus());
}

SymplecticVector SymplecticVector::make(long long u, long long v, OddPrime p) {
    return {FpScalar(u, p), FpScalar(v, p)};
}

SymplecticVector SymplecticVector::operator+(const SymplecticVector &other) const {
    return {u + other.u, v + other.v};
}

SymplecticVector SymplecticVector::operator-() const {
    return {-u, -v};
}

SL2Matrix SL2Matrix::make(long long a, long long b, long long c, long long d, OddPrime p) {
    SL2Matrix m{FpScalar(a, p), FpScalar(b, p), FpScalar(c, p), FpScalar(d, p)};
    if ((m.a * m.d - m.b * m.c).value() != 1) {
        throw MagicError(Errc::NotSymplectic, "determinant of " + m.str() + " is not 1");
    }
    return m;
}

SL2Matrix SL2Matrix::identity(OddPrime p) {
    return make(1, 0, 0, 1, p);
}

SL2Matrix SL2Matrix::operator*(const SL2Matrix &o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

SymplecticVector SL2Matrix::operator*(const SymplecticVector &x) const {
    return {a * x.u + b * x.v, c * x.u + d * x.v};
}

SL2Matrix SL2Matrix::inverse() const {
    return {d, -b, -c, a};
}

SL2Matrix SL2Matrix::pow(long long k) const {
    SL2Matrix base = k < 0 ? inverse() : *this;
    if (k < 0) {
        k = -k;
    }
    SL2Matrix acc = identity(modulus());
    while (k > 0) {
        if (k & 1) {
            acc = acc * base;
        }
        base = base * base;
        k >>= 1;
    }
    return acc;
}

int SL2Matrix::order() const {
    SL2Matrix id = identity(modulus());
    SL2Matrix acc = *this;
    int n = 1;
    while (!(acc == id)) {
        acc = acc * *this;
        n++;
    }
    return n;
}

std::string SL2Matrix::str() const {
    std::ostringstream out;
    out << "(" << a.value() << " " << b.value() << "; " << c.value() << " " << d.value() << ")";
    return out.str();
}

std::vector<SL2Matrix> sl2_enumerate(OddPrime p) {
    int n = p.value();
    std::vector<SL2Matrix> out;
    out.reserve((size_t)n * ((size_t)n * n - 1));
    for (int a = 0; a < n; a++) {
        for (int b = 0; b < n; b++) {
            for (int c = 0; c < n; c++) {
                for (int d = 0; d < n; d++) {
                    if (mod_p((long long)a * d - (long long)b * c, n) == 1) {
                        out.push_back({FpScalar(a, p), FpScalar(b, p), FpScalar(c, p), FpScalar(d, p)});
                    }
                }
            }
        }
    }
    return out;
}

SL2Index::SL2Index(OddPrime p) : p_(p.value()), elements_(sl2_enumerate(p)) {
    size_t n = (size_t)p_;
    lookup_.assign(n * n * n * n, -1);
    for (size_t k = 0; k < elements_.size(); k++) {
        auto t = elements_[k].tuple();
        lookup_[((t[0] * n + t[1]) * n + t[2]) * n + t[3]] = (int)k;
    }
}

size_t SL2Index::index_of(const SL2Matrix &m) const {
    size_t n = (size_t)p_;
    auto t = m.tuple();
    return (size_t)lookup_[((t[0] * n + t[1]) * n + t[2]) * n + t[3]];
}

std::vector<std::pair<std::string, SL2Matrix>> sl2_symbol_table(OddPrime p) {
    SL2Matrix id = SL2Matrix::identity(p);
    SL2Matrix h = SL2Matrix::make(0, 1, -1, 0, p);
    SL2Matrix s = SL2Matrix::make(1, 0, 1, 1, p);
    SL2Matrix minus = SL2Matrix::make(-1, 0, 0, -1, p);
    if (p.value() == 3) {
        SL2Matrix n = s * h * h;
        return {{"I", id}, {"-I", minus}, {"H", h}, {"S", s}, {"S^2", s * s}, {"N", n}, {"N^-1", n.inverse()}};
    }
    if (p.value() == 5) {
        SL2Matrix b = h * s;
        return {{"I", id},           {"-I", minus},         {"H", h},   {"S", s},           {"S^2", s * s},
                {"-S", minus * s}, {"-S^2", minus * s * s}, {"HS", b}, {"(HS)^2", b * b}};
    }
    return {};
}

std::vector<SL2Class> sl2_conjugacy_classes(OddPrime p) {
    SL2Index index(p);
    const auto &g = index.elements();
    std::vector<int> owner(g.size(), -1);
    std::vector<SL2Class> classes;
    for (size_t k = 0; k < g.size(); k++) {
        if (owner[k] >= 0) {
            continue;
        }
        std::set<size_t> members;
        for (const auto &h : g) {
            members.insert(index.index_of(h * g[k] * h.inverse()));
        }
        SL2Class cls{g[*members.begin()], {}, std::nullopt};
        for (size_t m : members) {
            owner[m] = (int)classes.size();
            cls.members.push_back(g[m]);
        }
        classes.push_back(std::move(cls));
    }
    for (const auto &[name, m] : sl2_symbol_table(p)) {
        auto &cls = classes[owner[index.index_of(m)]];
        if (!cls.paper_name) {
            cls.paper_name = name;
        }
    }
    return classes;
}

GroupLabel label_from_orders(const std::vector<int> &element_orders, bool abelian) {
    size_t n = element_orders.size();
    std::map<int, size_t> profile;
    for (int o : element_orders) {
        profile[o]++;
    }
    auto count = [&](int o) {
        auto it = profile.find(o);
        return it == profile.end() ? (size_t)0 : it->second;
    };
    if (n == 1) {
        return {GroupKind::Trivial, 1};
    }
    if (abelian && count((int)n) > 0) {
        return {GroupKind::Cyclic, n};
    }
    if (!abelian && n == 8 && count(2) == 1 && count(4) == 6) {
        return {GroupKind::Quaternion, 8};
    }
    if (!abelian && n == 12 && count(2) == 1 && count(3) == 2 && count(4) == 6 && count(6) == 2) {
        return {GroupKind::Dicyclic3, 12};
    }
    if (!abelian && n == 24 && count(2) == 1 && count(3) == 8 && count(4) == 6 && count(6) == 8) {
        return {GroupKind::SL2Z3, 24};
    }
    return {GroupKind::Other, n};
}

std::string to_string(const GroupLabel &label, LabelStyle style) {
    switch (label.kind) {
        case GroupKind::Trivial:
            return "trivial";
        case GroupKind::Cyclic:
            return std::string(style == LabelStyle::Z ? "Z_" : "C_") + std::to_string(label.order);
        case GroupKind::Quaternion:
            return "Quaternion";
        case GroupKind::Dicyclic3:
            return "Dicyclic_3";
        case GroupKind::SL2Z3:
            return "SL(2,Z_3)";
        case GroupKind::Other:
            break;
    }
    return "order-" + std::to_string(label.order);
}

namespace {

std::vector<size_t> close_sl2(const SL2Index &index, const std::vector<size_t> &gens) {
    std::vector<size_t> elems{index.index_of(SL2Matrix::identity(index[0].modulus()))};
    std::vector<bool> seen(index.size(), false);
    seen[elems[0]] = true;
    for (size_t k = 0; k < elems.size(); k++) {
        for (size_t g : gens) {
            size_t next = index.index_of(index[elems[k]] * index[g]);
            if (!seen[next]) {
                seen[next] = true;
                elems.push_back(next);
            }
        }
    }
    std::sort(elems.begin(), elems.end());
    return elems;
}

}  // namespace

std::vector<SL2Subgroup> sl2_subgroup_lattice(OddPrime p) {
    if (p.value() != 3) {
        throw MagicError(Errc::Unsupported, "subgroup lattice is catalogued only for p = 3");
    }
    SL2Index index(p);
    size_t n = index.size();
    std::set<std::vector<size_t>> found;
    for (size_t i = 0; i < n; i++) {
        for (size_t j = i; j < n; j++) {
            auto sub = close_sl2(index, {i, j});
            if (sub.size() < n) {
                found.insert(sub);
            }
        }
    }
    std::vector<std::vector<size_t>> subs(found.begin(), found.end());
    std::stable_sort(subs.begin(), subs.end(), [](const auto &x, const auto &y) {
        return x.size() < y.size();
    });

    std::vector<SL2Subgroup> out;
    std::vector<std::vector<size_t>> class_reps;
    for (const auto &sub : subs) {
        std::vector<int> orders;
        bool abelian = true;
        for (size_t x : sub) {
            orders.push_back(index[x].order());
            for (size_t y : sub) {
                if (!(index[x] * index[y] == index[y] * index[x])) {
                    abelian = false;
                }
            }
        }
        size_t cls = class_reps.size();
        for (size_t c = 0; c < class_reps.size() && cls == class_reps.size(); c++) {
            if (class_reps[c].size() != sub.size()) {
                continue;
            }
            for (const auto &h : index.elements()) {
                std::vector<size_t> conj;
                for (size_t x : class_reps[c]) {
                    conj.push_back(index.index_of(h * index[x] * h.inverse()));
                }
                std::sort(conj.begin(), conj.end());
                if (conj == sub) {
                    cls = c;
                    break;
                }
            }
        }
        if (cls == class_reps.size()) {
            class_reps.push_back(sub);
        }
        SL2Subgroup out_sub{{}, label_from_orders(orders, abelian), cls};
        for (size_t x : sub) {
            out_sub.elements.push_back(index[x]);
        }
        out.push_back(std::move(out_sub));
    }
    return out;
}

std::vector<FpScalar> quadratic_residues(OddPrime p) {
    std::set<int> r;
    for (int t = 0; t < p.value(); t++) {
        r.insert(mod_p((long long)t * t, p.value()));
    }
    std::vector<FpScalar> out;
    for (int x : r) {
        out.emplace_back(x, p);
    }
    return out;
}

nlohmann::json to_json(const std::vector<SL2Class> &classes) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto &cls : classes) {
        nlohmann::json row;
        auto t = cls.representative.tuple();
        row["representative"] = {t[0], t[1], t[2], t[3]};
        row["size"] = cls.size();
        if (cls.paper_name) {
            row["paper_name"] = *cls.paper_name;
        }
        out.push_back(row);
    }
    return out;
}

}  // namespace magiclab
