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

#include "magiclab/phase_space.h"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "magiclab/error.h"

namespace magiclab {

PhasePointOperator phase_point_operator(const SymplecticVector &chi) {
    OddPrime p = chi.modulus();
    Matrix a00(p.dim(), p.dim());
    for (int u = 0; u < p.value(); u++) {
        for (int v = 0; v < p.value(); v++) {
            a00 += weyl_displacement(SymplecticVector::make(u, v, p)).matrix();
        }
    }
    a00 = a00 * cplx(1.0 / p.value());
    UnitaryMatrix d = weyl_displacement(chi);
    return {chi, UnitaryMatrix::trusted(d.matrix() * a00 * d.matrix().adjoint())};
}

WignerFunction::WignerFunction(OddPrime p, std::vector<double> grid) : p_(p), grid_(std::move(grid)) {
    if (grid_.size() != p.dim() * p.dim()) {
        throw MagicError(Errc::DimensionMismatch, "Wigner grid must have p^2 entries");
    }
}

double WignerFunction::total() const {
    double s = 0;
    for (double w : grid_) {
        s += w;
    }
    return s;
}

double WignerFunction::sum_negativity() const {
    double s = 0;
    for (double w : grid_) {
        if (w < -kNegativityThreshold) {
            s -= w;
        }
    }
    return s;
}

double WignerFunction::mana() const {
    double s = 0;
    for (double w : grid_) {
        s += std::abs(w);
    }
    return std::log(s);
}

std::pair<double, std::pair<int, int>> WignerFunction::min_entry() const {
    size_t best = 0;
    for (size_t k = 1; k < grid_.size(); k++) {
        if (grid_[k] < grid_[best]) {
            best = k;
        }
    }
    int p = p_.value();
    return {grid_[best], {(int)best / p, (int)best % p}};
}

std::vector<std::pair<int, int>> WignerFunction::negative_points() const {
    std::vector<std::pair<int, int>> out;
    int p = p_.value();
    for (size_t k = 0; k < grid_.size(); k++) {
        if (grid_[k] < -kNegativityThreshold) {
            out.push_back({(int)k / p, (int)k % p});
        }
    }
    return out;
}

std::string WignerFunction::to_csv() const {
    std::ostringstream out;
    out.precision(17);
    out << "u,v,w\r\n";
    int p = p_.value();
    for (int u = 0; u < p; u++) {
        for (int v = 0; v < p; v++) {
            out << u << "," << v << "," << at(u, v) << "\r\n";
        }
    }
    return out.str();
}

std::string WignerFunction::to_ascii(bool paper_layout) const {
    std::ostringstream out;
    int p = p_.value();
    out << "u\\v ";
    for (int v = 0; v < p; v++) {
        char head[16];
        std::snprintf(head, sizeof(head), " %8d", v);
        out << head;
    }
    out << "\n";
    for (int r = 0; r < p; r++) {
        int u = paper_layout ? p - 1 - r : r;
        char cell[32];
        std::snprintf(cell, sizeof(cell), "%3d ", u);
        out << cell;
        for (int v = 0; v < p; v++) {
            double w = at(u, v);
            if (std::abs(w) < 5e-5) {
                w = 0;
            }
            std::snprintf(cell, sizeof(cell), " %+8.4f", w);
            out << cell;
        }
        out << "\n";
    }
    return out.str();
}

// A_chi acts as |k> -> w^{2v(u-k)} |2u-k>, so tr(rho A_chi) only touches the
// anti-diagonal rho_{k, 2u-k}.
WignerFunction wigner(const DensityMatrix &rho) {
    size_t dim = rho.dim();
    if (!is_odd_prime((long long)dim)) {
        throw MagicError(Errc::NotOddPrime, "Wigner functions need odd prime dimension");
    }
    OddPrime p((long long)dim);
    int n = p.value();
    const Matrix &m = rho.matrix();
    std::vector<cplx> roots(dim);
    for (int k = 0; k < n; k++) {
        roots[(size_t)k] = std::polar(1.0, 2 * std::numbers::pi * k / n);
    }
    std::vector<double> grid(dim * dim);
    for (int u = 0; u < n; u++) {
        for (int v = 0; v < n; v++) {
            cplx s = 0;
            for (int k = 0; k < n; k++) {
                s += m((size_t)k, (size_t)mod_p(2 * u - k, n)) * roots[(size_t)mod_p(2LL * v * (u - k), n)];
            }
            grid[(size_t)u * dim + (size_t)v] = s.real() / n;
        }
    }
    return WignerFunction(p, std::move(grid));
}

WignerFunction wigner(const PureState &psi) {
    return wigner(DensityMatrix::from_state(psi));
}

double sum_negativity(const DensityMatrix &rho) {
    return wigner(rho).sum_negativity();
}

double sum_negativity(const PureState &psi) {
    return wigner(psi).sum_negativity();
}

double mana(const DensityMatrix &rho) {
    return wigner(rho).mana();
}

double mana(const PureState &psi) {
    return wigner(psi).mana();
}

std::pair<double, std::pair<int, int>> min_entry(const DensityMatrix &rho) {
    return wigner(rho).min_entry();
}

std::pair<double, std::pair<int, int>> min_entry(const PureState &psi) {
    return wigner(psi).min_entry();
}

}  // namespace magiclab
