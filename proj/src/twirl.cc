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

#include "magiclab/twirl.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <set>

#include "magiclab/bestiary.h"
#include "magiclab/error.h"
#include "magiclab/parallel.h"

namespace magiclab {

namespace {

std::array<int, 6> key(const CliffordElement &e) {
    return {e.F.a.value(), e.F.b.value(), e.F.c.value(), e.F.d.value(), e.chi.u.value(), e.chi.v.value()};
}

}  // namespace

TwirlChannel::TwirlChannel(OddPrime p, std::vector<CliffordElement> elements)
    : p_(p), elements_(std::move(elements)) {
    for (const auto &e : elements_) {
        matrices_.push_back(matrix_of(e));
    }
}

TwirlChannel TwirlChannel::from_elements(std::vector<CliffordElement> subgroup) {
    if (subgroup.empty()) {
        throw MagicError(Errc::BadInput, "a twirl channel needs at least the identity");
    }
    OddPrime p = subgroup[0].modulus();
    std::set<std::array<int, 6>> keys;
    for (const auto &e : subgroup) {
        if (!(e.modulus() == p)) {
            throw MagicError(Errc::DimensionMismatch, "subgroup elements over different p");
        }
        keys.insert(key(e));
    }
    if (keys.size() != subgroup.size()) {
        throw MagicError(Errc::BadInput, "subgroup lists an element twice");
    }
    for (const auto &a : subgroup) {
        for (const auto &b : subgroup) {
            if (!keys.count(key(compose(a, b)))) {
                throw MagicError(Errc::BadInput, "elements are not closed under composition");
            }
        }
    }
    return TwirlChannel(p, std::move(subgroup));
}

TwirlChannel TwirlChannel::generated_by(const std::vector<CliffordElement> &generators) {
    auto elems = subgroup_generate(generators);
    OddPrime p = elems[0].modulus();
    return TwirlChannel(p, std::move(elems));
}

std::vector<size_t> stabilizing_subgroup(const PureState &psi, const CliffordGroup &group) {
    if (psi.dim() != group.p().dim()) {
        throw MagicError(Errc::DimensionMismatch, "state dimension differs from the group's p");
    }
    std::vector<char> keep(group.size(), 0);
    parallel_for(group.size(), [&](size_t begin, size_t end) {
        for (size_t k = begin; k < end; k++) {
            CVector w = group.has_matrices() ? group.matrix(k) * psi.amplitudes() : matrix_of(group[k]) * psi.amplitudes();
            keep[k] = 1 - std::abs(inner(psi.amplitudes(), w)) < 1e-8 ? 1 : 0;
        }
    });
    std::vector<size_t> out;
    for (size_t k = 0; k < keep.size(); k++) {
        if (keep[k]) {
            out.push_back(k);
        }
    }
    return out;
}

DensityMatrix twirl(const DensityMatrix &rho, const TwirlChannel &channel) {
    if (rho.dim() != channel.p().dim()) {
        throw MagicError(Errc::DimensionMismatch, "density matrix dimension differs from the channel's p");
    }
    Matrix acc(rho.dim(), rho.dim());
    for (const auto &u : channel.matrices()) {
        acc += u.matrix() * rho.matrix() * u.matrix().adjoint();
    }
    acc = acc * cplx(1.0 / (double)channel.size());
    return DensityMatrix::from_matrix(std::move(acc));
}

size_t fixed_point_space_dimension(const TwirlChannel &channel) {
    size_t d = channel.p().dim();
    size_t n = d * d;
    // vec(U rho U^dag) = (U kron conj U) vec(rho) with row-major vec.
    Matrix t(n, n);
    for (const auto &um : channel.matrices()) {
        const Matrix &u = um.matrix();
        for (size_t i = 0; i < d; i++) {
            for (size_t j = 0; j < d; j++) {
                for (size_t k = 0; k < d; k++) {
                    for (size_t l = 0; l < d; l++) {
                        t(i * d + j, k * d + l) += u(i, k) * std::conj(u(j, l));
                    }
                }
            }
        }
    }
    t = t * cplx(1.0 / (double)channel.size());
    return rank(t, 1e-8) - 1;
}

namespace {

TwirlChannel symplectic_channel(OddPrime p) {
    std::vector<CliffordElement> elems;
    for (const auto &f : sl2_enumerate(p)) {
        elems.push_back(CliffordElement::symplectic(f));
    }
    return TwirlChannel::from_elements(std::move(elems));
}

}  // namespace

DepolarizeResult symplectic_depolarize(const DensityMatrix &rho) {
    OddPrime p(3);
    if (rho.dim() != 3) {
        throw MagicError(Errc::DimensionMismatch, "symplectic depolarizing needs a qutrit density matrix");
    }
    static const TwirlChannel channel = symplectic_channel(p);
    DensityMatrix out = twirl(rho, channel);
    PureState s = named_state("S", p);
    double f = inner(s.amplitudes(), out.matrix() * s.amplitudes()).real();
    double delta = 1.5 * (1 - f);
    Matrix fit = Matrix::outer(s.amplitudes(), s.amplitudes()) * cplx(1 - delta) + Matrix::identity(3) * cplx(delta / 3);
    double residual = max_abs_diff(fit, out.matrix());
    if (residual > 1e-9) {
        throw MagicError(Errc::NonDepolarizedResidual,
                         "symplectic twirl is not depolarized, residual " + std::to_string(residual));
    }
    return {f, delta, residual};
}

std::string scheme_name(TwirlScheme s) {
    switch (s) {
        case TwirlScheme::H2d:
            return "2dH";
        case TwirlScheme::N:
            return "N";
        case TwirlScheme::XVS:
            return "XVS";
        case TwirlScheme::Symplectic:
            return "symplectic";
        case TwirlScheme::VSDegenerate:
            return "VS";
        case TwirlScheme::VMinusIDegenerate:
            return "V-I";
        case TwirlScheme::Hm5:
            return "hm5";
        case TwirlScheme::Bm15:
            return "Bm15";
    }
    return "";
}

TwirlScheme scheme_from_name(const std::string &name) {
    for (auto s : {TwirlScheme::H2d, TwirlScheme::N, TwirlScheme::XVS, TwirlScheme::Symplectic,
                   TwirlScheme::VSDegenerate, TwirlScheme::VMinusIDegenerate, TwirlScheme::Hm5, TwirlScheme::Bm15}) {
        if (scheme_name(s) == name) {
            return s;
        }
    }
    throw MagicError(Errc::UnknownName, "no twirl scheme '" + name + "'");
}

OddPrime scheme_prime(TwirlScheme s) {
    return OddPrime(s == TwirlScheme::Hm5 || s == TwirlScheme::Bm15 ? 5 : 3);
}

TwirlChannel scheme_channel(TwirlScheme s) {
    OddPrime p = scheme_prime(s);
    auto g = [&](const char *n) {
        return named_element(n, p);
    };
    switch (s) {
        case TwirlScheme::H2d:
            return TwirlChannel::generated_by({g("H")});
        case TwirlScheme::N:
            return TwirlChannel::generated_by({g("N")});
        case TwirlScheme::XVS:
            return TwirlChannel::generated_by({g("X V_S")});
        case TwirlScheme::Symplectic:
            return symplectic_channel(p);
        case TwirlScheme::VSDegenerate:
            return TwirlChannel::generated_by({g("V_S")});
        case TwirlScheme::VMinusIDegenerate:
            return TwirlChannel::generated_by({g("V_-I")});
        case TwirlScheme::Hm5:
            return TwirlChannel::generated_by({g("H"), g("H'")});
        case TwirlScheme::Bm15:
            return TwirlChannel::generated_by({g("B"), g("H'")});
    }
    throw MagicError(Errc::UnknownName, "unknown twirl scheme");
}

std::vector<std::string> scheme_parameter_names(TwirlScheme s) {
    switch (s) {
        case TwirlScheme::Symplectic:
            return {"delta"};
        case TwirlScheme::VSDegenerate:
        case TwirlScheme::VMinusIDegenerate:
            return {"x", "y", "z", "eps"};
        case TwirlScheme::Hm5:
            return {"eps1", "eps2", "eps3"};
        case TwirlScheme::Bm15:
            return {"eps+", "eps-"};
        default:
            return {"eps1", "eps2"};
    }
}

namespace {

Matrix proj(const CVector &v) {
    return Matrix::outer(v, v);
}

CVector amps(const PureState &s) {
    return s.amplitudes();
}

// Mixed-state components: each scheme state is sum_i w_i M_i with M_0 the
// pure target; weights beyond the first are the parameters.
struct SimplexBasis {
    std::vector<Matrix> parts;
    /// Vectors whose overlaps give each parameter (a sum over a group).
    std::vector<std::vector<CVector>> probes;
};

cplx w3_power(int k) {
    return std::polar(1.0, 2 * std::numbers::pi * k / 3);
}

CVector b_eigenvector(cplx lambda) {
    OddPrime p(5);
    auto sys = eigensystem_finite_order(UnitaryMatrix::trusted(named_operator_matrix("B", p)));
    for (const auto &s : sys.spaces) {
        if (std::abs(s.eigenvalue - lambda) < 1e-8) {
            return s.basis().at(0);
        }
    }
    throw MagicError(Errc::Unsupported, "B has no such eigenvalue");
}

SimplexBasis simplex_basis(TwirlScheme s) {
    OddPrime p = scheme_prime(s);
    auto st = [&](const char *n) {
        return amps(named_state(n, p));
    };
    auto pure = [&](std::vector<CVector> vs) {
        SimplexBasis b;
        for (auto &v : vs) {
            b.parts.push_back(proj(v));
            b.probes.push_back({v});
        }
        return b;
    };
    auto pair_mix = [](const CVector &a, const CVector &b) {
        return (proj(a) + proj(b)) * cplx(0.5);
    };
    switch (s) {
        case TwirlScheme::H2d:
            return pure({st("S"), st("H1"), st("Hm1")});
        case TwirlScheme::N:
            return pure({st("N+"), PureState::basis(3, 0).amplitudes(), st("S")});
        case TwirlScheme::XVS:
            return pure({st("XVS"), st("XVS'"), st("XVS''")});
        case TwirlScheme::Hm5: {
            double phi = (1 + std::sqrt(5.0)) / 2;
            CVector h11 = PureState::from_amplitudes({2 * phi, 1, 1, 1, 1}).amplitudes();
            CVector h1m1 = PureState::from_amplitudes({0, 1, -1, -1, 1}).amplitudes();
            CVector hi = st("Hi"), hmi = st("Hmi");
            SimplexBasis b = pure({st("Hm1"), h11, h1m1});
            b.parts.push_back(pair_mix(hi, hmi));
            b.probes.push_back({hi, hmi});
            return b;
        }
        case TwirlScheme::Bm15: {
            CVector a = b_eigenvector(w3_power(1)), a2 = b_eigenvector(w3_power(2));
            CVector c = b_eigenvector(-w3_power(1)), c2 = b_eigenvector(-w3_power(2));
            SimplexBasis b = pure({st("B-1")});
            b.parts.push_back(pair_mix(a, a2));
            b.probes.push_back({a, a2});
            b.parts.push_back(pair_mix(c, c2));
            b.probes.push_back({c, c2});
            return b;
        }
        default:
            throw MagicError(Errc::Unsupported, "scheme has no simplex basis");
    }
}

// Orthonormal (a, b, c) for the Bloch-block schemes: block span{a, b}, plus c.
std::array<CVector, 3> bloch_frame(TwirlScheme s) {
    double r = 1 / std::sqrt(2.0);
    if (s == TwirlScheme::VSDegenerate) {
        return {CVector{0, 1, 0}, CVector{0, 0, 1}, CVector{1, 0, 0}};
    }
    return {CVector{1, 0, 0}, CVector{0, r, r}, CVector{0, r, -r}};
}

}  // namespace

DensityMatrix scheme_state(TwirlScheme s, const std::vector<double> &parameters) {
    OddPrime p = scheme_prime(s);
    if (parameters.size() != scheme_parameter_names(s).size()) {
        throw MagicError(Errc::BadInput, "scheme " + scheme_name(s) + " takes " +
                                             std::to_string(scheme_parameter_names(s).size()) + " parameters");
    }
    Matrix m(p.dim(), p.dim());
    if (s == TwirlScheme::Symplectic) {
        CVector v = named_state("S", p).amplitudes();
        double d = parameters[0];
        m = proj(v) * cplx(1 - d) + Matrix::identity(3) * cplx(d / 3);
    } else if (s == TwirlScheme::VSDegenerate || s == TwirlScheme::VMinusIDegenerate) {
        auto [a, b, c] = bloch_frame(s);
        double x = parameters[0], y = parameters[1], z = parameters[2], eps = parameters[3];
        // sigma_1 + i sigma_2 style: coefficient of |a><b| is (x - i y).
        Matrix block = (proj(a) + proj(b)) + (Matrix::outer(a, b) + Matrix::outer(b, a)) * cplx(x) +
                       (Matrix::outer(a, b) * cplx(0, -1) + Matrix::outer(b, a) * cplx(0, 1)) * cplx(y) +
                       (proj(a) - proj(b)) * cplx(z);
        m = block * cplx((1 - eps) / 2) + proj(c) * cplx(eps);
    } else {
        auto basis = simplex_basis(s);
        double rest = 1;
        for (double e : parameters) {
            rest -= e;
        }
        m = basis.parts[0] * cplx(rest);
        for (size_t k = 0; k < parameters.size(); k++) {
            m += basis.parts[k + 1] * cplx(parameters[k]);
        }
    }
    try {
        return DensityMatrix::from_matrix(std::move(m));
    } catch (const MagicError &e) {
        throw MagicError(Errc::BadInput, std::string("parameters give no valid state: ") + e.what());
    }
}

TwirledStateCoordinates post_twirl_coordinates(const DensityMatrix &rho, TwirlScheme scheme) {
    OddPrime p = scheme_prime(scheme);
    if (rho.dim() != p.dim()) {
        throw MagicError(Errc::DimensionMismatch, "scheme " + scheme_name(scheme) + " acts on p = " +
                                                      std::to_string(p.value()));
    }
    double fixed = max_abs_diff(twirl(rho, scheme_channel(scheme)).matrix(), rho.matrix());
    if (fixed > 1e-8) {
        throw MagicError(Errc::NotInFixedSpace, "state is not a fixed point of the " + scheme_name(scheme) +
                                                    " twirl, residual " + std::to_string(fixed));
    }
    const Matrix &m = rho.matrix();
    std::vector<double> params;
    if (scheme == TwirlScheme::Symplectic) {
        params.push_back(symplectic_depolarize(rho).delta);
    } else if (scheme == TwirlScheme::VSDegenerate || scheme == TwirlScheme::VMinusIDegenerate) {
        auto [a, b, c] = bloch_frame(scheme);
        double eps = inner(c, m * c).real();
        cplx ab = inner(a, m * b);
        double aa = inner(a, m * a).real(), bb = inner(b, m * b).real();
        double scale = 1 - eps;
        if (scale < 1e-12) {
            params = {0, 0, 0, eps};
        } else {
            params = {2 * ab.real() / scale, -2 * ab.imag() / scale, (aa - bb) / scale, eps};
        }
    } else {
        auto basis = simplex_basis(scheme);
        for (size_t k = 1; k < basis.probes.size(); k++) {
            double w = 0;
            for (const auto &v : basis.probes[k]) {
                w += inner(v, m * v).real();
            }
            params.push_back(w);
        }
    }
    double residual = max_abs_diff(scheme_state(scheme, params).matrix(), m);
    if (residual > 1e-8) {
        throw MagicError(Errc::NotInFixedSpace, "state is outside the " + scheme_name(scheme) +
                                                    " parameterization, residual " + std::to_string(residual));
    }
    return {scheme, params, residual};
}

std::vector<std::string> listed_generators(const std::string &state, OddPrime p) {
    if (p.value() == 3) {
        if (state == "S") return {"H", "V_S"};
        if (state == "H1" || state == "Hm1") return {"H"};
        if (state == "N+") return {"N"};
        if (state == "XVS" || state == "XVS'" || state == "XVS''") return {"X V_S"};
    }
    if (p.value() == 5) {
        if (state == "Hi" || state == "Hmi") return {"H"};
        if (state == "Hm1") return {"H", "H'"};
        if (state == "B-1") return {"B", "H'"};
        if (state == "Bw-" || state == "Bw+") return {"B"};
        if (state == "A-" || state == "A+") return {"A"};
        if (state == "XVS1") return {"X V_S"};
    }
    return {};
}

SubgroupReport stabilizer_report(const std::string &state, const CliffordGroup &group) {
    PureState psi = named_state(state, group.p());
    auto idx = stabilizing_subgroup(psi, group);
    std::vector<CliffordElement> elems;
    size_t symp = 0;
    for (size_t k : idx) {
        elems.push_back(group[k]);
        symp += group[k].is_symplectic() ? 1 : 0;
    }
    auto gens = listed_generators(state, group.p());
    size_t generated = 0;
    if (!gens.empty()) {
        std::vector<CliffordElement> ge;
        for (const auto &g : gens) {
            ge.push_back(named_element(g, group.p()));
        }
        generated = subgroup_generate(ge).size();
    }
    return {state, idx.size(), subgroup_label(elems), symp, gens, generated};
}

nlohmann::json to_json(const SubgroupReport &r) {
    return {{"state", r.state},
            {"order", r.order},
            {"group_label", to_string(r.label)},
            {"symplectic_order", r.symplectic_order},
            {"generators", r.generators},
            {"generated_order", r.generated_order}};
}

nlohmann::json to_json(const TwirledStateCoordinates &c) {
    nlohmann::json params = nlohmann::json::object();
    auto names = scheme_parameter_names(c.scheme);
    for (size_t k = 0; k < names.size(); k++) {
        params[names[k]] = c.parameters[k];
    }
    return {{"scheme", scheme_name(c.scheme)}, {"parameters", params}, {"residual", c.residual}};
}

}  // namespace magiclab
