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

#include "magiclab/linalg.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "magiclab/error.h"

namespace magiclab {

Matrix::Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
}

Matrix Matrix::identity(size_t n) {
    Matrix m(n, n);
    for (size_t k = 0; k < n; k++) {
        m(k, k) = 1;
    }
    return m;
}

Matrix Matrix::outer(const CVector &a, const CVector &b) {
    Matrix m(a.size(), b.size());
    for (size_t r = 0; r < a.size(); r++) {
        for (size_t c = 0; c < b.size(); c++) {
            m(r, c) = a[r] * std::conj(b[c]);
        }
    }
    return m;
}

Matrix Matrix::adjoint() const {
    Matrix m(cols_, rows_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            m(c, r) = std::conj((*this)(r, c));
        }
    }
    return m;
}

static void require_shape(bool ok, const char *what) {
    if (!ok) {
        throw MagicError(Errc::DimensionMismatch, what);
    }
}

Matrix Matrix::operator*(const Matrix &o) const {
    require_shape(cols_ == o.rows_, "matrix product shapes");
    Matrix m(rows_, o.cols_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t k = 0; k < cols_; k++) {
            cplx x = (*this)(r, k);
            if (x == cplx(0)) {
                continue;
            }
            for (size_t c = 0; c < o.cols_; c++) {
                m(r, c) += x * o(k, c);
            }
        }
    }
    return m;
}

CVector Matrix::operator*(const CVector &x) const {
    require_shape(cols_ == x.size(), "matrix-vector shapes");
    CVector y(rows_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            y[r] += (*this)(r, c) * x[c];
        }
    }
    return y;
}

Matrix Matrix::operator+(const Matrix &o) const {
    Matrix m = *this;
    m += o;
    return m;
}

Matrix Matrix::operator-(const Matrix &o) const {
    require_shape(rows_ == o.rows_ && cols_ == o.cols_, "matrix difference shapes");
    Matrix m = *this;
    for (size_t k = 0; k < data_.size(); k++) {
        m.data_[k] -= o.data_[k];
    }
    return m;
}

Matrix &Matrix::operator+=(const Matrix &o) {
    require_shape(rows_ == o.rows_ && cols_ == o.cols_, "matrix sum shapes");
    for (size_t k = 0; k < data_.size(); k++) {
        data_[k] += o.data_[k];
    }
    return *this;
}

Matrix Matrix::operator*(cplx s) const {
    Matrix m = *this;
    for (auto &x : m.data_) {
        x *= s;
    }
    return m;
}

cplx Matrix::trace() const {
    cplx t = 0;
    for (size_t k = 0; k < std::min(rows_, cols_); k++) {
        t += (*this)(k, k);
    }
    return t;
}

double Matrix::max_abs() const {
    double m = 0;
    for (const auto &x : data_) {
        m = std::max(m, std::abs(x));
    }
    return m;
}

double Matrix::frobenius() const {
    double s = 0;
    for (const auto &x : data_) {
        s += std::norm(x);
    }
    return std::sqrt(s);
}

double max_abs_diff(const Matrix &a, const Matrix &b) {
    return (a - b).max_abs();
}

cplx inner(const CVector &a, const CVector &b) {
    require_shape(a.size() == b.size(), "inner product lengths");
    cplx s = 0;
    for (size_t k = 0; k < a.size(); k++) {
        s += std::conj(a[k]) * b[k];
    }
    return s;
}

double norm(const CVector &a) {
    double s = 0;
    for (const auto &x : a) {
        s += std::norm(x);
    }
    return std::sqrt(s);
}

CVector operator+(const CVector &a, const CVector &b) {
    require_shape(a.size() == b.size(), "vector sum lengths");
    CVector out(a.size());
    for (size_t k = 0; k < a.size(); k++) {
        out[k] = a[k] + b[k];
    }
    return out;
}

CVector operator*(cplx s, const CVector &a) {
    CVector out(a);
    for (auto &x : out) {
        x *= s;
    }
    return out;
}

PureState PureState::from_amplitudes(CVector amplitudes) {
    double n = norm(amplitudes);
    if (amplitudes.empty() || !(n > 1e-300) || !std::isfinite(n)) {
        throw MagicError(Errc::ZeroVector, "cannot normalize a zero vector");
    }
    for (auto &x : amplitudes) {
        x /= n;
    }
    for (const auto &x : amplitudes) {
        double m = std::abs(x);
        if (m > 1e-9) {
            cplx phase = std::conj(x) / m;
            for (auto &y : amplitudes) {
                y *= phase;
            }
            break;
        }
    }
    PureState s;
    s.amps_ = std::move(amplitudes);
    return s;
}

PureState PureState::basis(size_t dim, size_t k) {
    CVector v(dim);
    v.at(k) = 1;
    return from_amplitudes(std::move(v));
}

PureState canonicalize(const PureState &s) {
    return PureState::from_amplitudes(s.amplitudes());
}

PureState canonicalize(const CVector &amplitudes) {
    return PureState::from_amplitudes(amplitudes);
}

double fidelity(const PureState &a, const PureState &b) {
    return std::norm(inner(a.amplitudes(), b.amplitudes()));
}

bool same_ray(const PureState &a, const PureState &b, double tol) {
    return a.dim() == b.dim() && 1 - std::abs(inner(a.amplitudes(), b.amplitudes())) < tol;
}

namespace {

// Cholesky on M + tol I; fails on a negative pivot.
bool positive_semidefinite(const Matrix &m, double tol) {
    size_t n = m.rows();
    Matrix l(n, n);
    for (size_t j = 0; j < n; j++) {
        double diag = m(j, j).real() + tol;
        for (size_t k = 0; k < j; k++) {
            diag -= std::norm(l(j, k));
        }
        if (diag < 0) {
            return false;
        }
        double root = std::sqrt(diag);
        l(j, j) = root;
        for (size_t i = j + 1; i < n; i++) {
            cplx s = m(i, j);
            for (size_t k = 0; k < j; k++) {
                s -= l(i, k) * std::conj(l(j, k));
            }
            l(i, j) = root > 0 ? s / root : cplx(0);
        }
    }
    return true;
}

}  // namespace

DensityMatrix DensityMatrix::from_matrix(Matrix m, double tol) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        throw MagicError(Errc::DimensionMismatch, "density matrix must be square");
    }
    if (max_abs_diff(m, m.adjoint()) > tol) {
        throw MagicError(Errc::NotHermitian, "density matrix is not Hermitian");
    }
    if (std::abs(m.trace() - cplx(1)) > tol) {
        throw MagicError(Errc::NotNormalized, "density matrix trace is not 1");
    }
    if (!positive_semidefinite(m, tol)) {
        throw MagicError(Errc::BadInput, "density matrix is not positive semidefinite");
    }
    DensityMatrix rho;
    rho.m_ = std::move(m);
    return rho;
}

DensityMatrix DensityMatrix::from_state(const PureState &s) {
    DensityMatrix rho;
    rho.m_ = Matrix::outer(s.amplitudes(), s.amplitudes());
    return rho;
}

DensityMatrix DensityMatrix::maximally_mixed(size_t dim) {
    DensityMatrix rho;
    rho.m_ = Matrix::identity(dim) * cplx(1.0 / (double)dim);
    return rho;
}

DensityMatrix DensityMatrix::mixture(const std::vector<double> &weights, const std::vector<PureState> &states) {
    if (weights.size() != states.size() || states.empty()) {
        throw MagicError(Errc::DimensionMismatch, "mixture needs one weight per state");
    }
    Matrix m(states[0].dim(), states[0].dim());
    for (size_t k = 0; k < states.size(); k++) {
        m += Matrix::outer(states[k].amplitudes(), states[k].amplitudes()) * cplx(weights[k]);
    }
    return from_matrix(std::move(m));
}

UnitaryMatrix UnitaryMatrix::from_matrix(Matrix m, double tol) {
    if (m.rows() != m.cols()) {
        throw MagicError(Errc::DimensionMismatch, "unitary must be square");
    }
    if (max_abs_diff(m.adjoint() * m, Matrix::identity(m.rows())) > tol) {
        throw MagicError(Errc::NotUnitary, "matrix is not unitary");
    }
    return trusted(std::move(m));
}

UnitaryMatrix UnitaryMatrix::trusted(Matrix m) {
    UnitaryMatrix u;
    u.m_ = std::move(m);
    return u;
}

UnitaryMatrix UnitaryMatrix::operator*(const UnitaryMatrix &other) const {
    return trusted(m_ * other.m_);
}

UnitaryMatrix UnitaryMatrix::adjoint() const {
    return trusted(m_.adjoint());
}

bool projective_equal(const Matrix &a, const Matrix &b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw MagicError(Errc::DimensionMismatch, "projective comparison shapes");
    }
    const auto &x = a.data();
    const auto &y = b.data();
    for (size_t k = 0; k < y.size(); k++) {
        if (std::abs(y[k]) > tol) {
            cplx lambda = x[k] / y[k];
            double mag = std::abs(lambda);
            if (std::abs(mag - 1) > tol) {
                return false;
            }
            lambda /= mag;
            for (size_t j = 0; j < y.size(); j++) {
                if (std::abs(x[j] - lambda * y[j]) > tol) {
                    return false;
                }
            }
            return true;
        }
    }
    return a.max_abs() < tol;
}

bool projective_equal(const UnitaryMatrix &a, const UnitaryMatrix &b, double tol) {
    return projective_equal(a.matrix(), b.matrix(), tol);
}

std::vector<CVector> Eigenspace::basis() const {
    return range_basis(projector, multiplicity);
}

Matrix EigenSystem::reconstruct() const {
    Matrix m(spaces.at(0).projector.rows(), spaces.at(0).projector.cols());
    for (const auto &s : spaces) {
        m += s.projector * s.eigenvalue;
    }
    return m;
}

size_t projective_order(const Matrix &u, size_t m_max, double tol) {
    Matrix acc = u;
    Matrix id = Matrix::identity(u.rows());
    for (size_t m = 1; m <= m_max; m++) {
        if (projective_equal(acc, id, tol)) {
            return m;
        }
        acc = acc * u;
    }
    throw MagicError(Errc::NotFiniteOrder, "no projective order <= " + std::to_string(m_max));
}

EigenSystem eigensystem_finite_order(const UnitaryMatrix &u, size_t m_max) {
    const Matrix &mat = u.matrix();
    size_t m = projective_order(mat, m_max);
    std::vector<Matrix> powers{Matrix::identity(mat.rows())};
    for (size_t k = 1; k <= m; k++) {
        powers.push_back(powers.back() * mat);
    }
    cplx phase = powers[m](0, 0);
    phase /= std::abs(phase);

    EigenSystem sys{m, phase, {}};
    double base = std::arg(phase);
    for (size_t k = 0; k < m; k++) {
        cplx lambda = std::polar(1.0, (base + 2 * std::numbers::pi * (double)k) / (double)m);
        Matrix p(mat.rows(), mat.cols());
        for (size_t j = 0; j < m; j++) {
            p += powers[j] * std::pow(std::conj(lambda), (double)j);
        }
        p = p * cplx(1.0 / (double)m);
        if (p.max_abs() < 1e-8) {
            continue;
        }
        size_t mult = (size_t)std::llround(p.trace().real());
        sys.spaces.push_back({lambda, std::move(p), mult});
    }
    return sys;
}

std::vector<CVector> gram_schmidt(const std::vector<CVector> &vectors, double tol) {
    std::vector<CVector> out;
    for (const auto &v : vectors) {
        CVector w = v;
        for (int pass = 0; pass < 2; pass++) {
            for (const auto &q : out) {
                cplx c = inner(q, w);
                for (size_t k = 0; k < w.size(); k++) {
                    w[k] -= c * q[k];
                }
            }
        }
        double n = norm(w);
        if (n > tol * std::max(1.0, norm(v))) {
            for (auto &x : w) {
                x /= n;
            }
            out.push_back(std::move(w));
        }
    }
    return out;
}

std::vector<CVector> range_basis(const Matrix &m, size_t max_rank, double tol) {
    std::vector<std::pair<double, size_t>> order;
    for (size_t c = 0; c < m.cols(); c++) {
        double s = 0;
        for (size_t r = 0; r < m.rows(); r++) {
            s += std::norm(m(r, c));
        }
        order.push_back({-s, c});
    }
    std::stable_sort(order.begin(), order.end());
    std::vector<CVector> cols;
    for (const auto &[neg, c] : order) {
        CVector v(m.rows());
        for (size_t r = 0; r < m.rows(); r++) {
            v[r] = m(r, c);
        }
        cols.push_back(std::move(v));
    }
    std::vector<CVector> out;
    for (const auto &v : cols) {
        if (out.size() >= max_rank) {
            break;
        }
        auto next = out;
        next.push_back(v);
        next = gram_schmidt(next, tol);
        if (next.size() > out.size()) {
            out = std::move(next);
        }
    }
    return out;
}

namespace {

struct Reduced {
    Matrix rref;
    std::vector<size_t> pivot_cols;
};

// Row reduction with full pivoting, tolerance relative to the largest entry.
Reduced row_reduce(const Matrix &m, double tol) {
    Matrix a = m;
    size_t rows = a.rows(), cols = a.cols();
    double scale = std::max(1.0, a.max_abs());
    std::vector<size_t> pivots;
    std::vector<bool> used_col(cols, false);
    size_t row = 0;
    while (row < rows) {
        double best = 0;
        size_t br = 0, bc = 0;
        for (size_t r = row; r < rows; r++) {
            for (size_t c = 0; c < cols; c++) {
                if (!used_col[c] && std::abs(a(r, c)) > best) {
                    best = std::abs(a(r, c));
                    br = r;
                    bc = c;
                }
            }
        }
        if (best <= tol * scale) {
            break;
        }
        for (size_t c = 0; c < cols; c++) {
            std::swap(a(row, c), a(br, c));
        }
        cplx piv = a(row, bc);
        for (size_t c = 0; c < cols; c++) {
            a(row, c) /= piv;
        }
        for (size_t r = 0; r < rows; r++) {
            if (r == row) {
                continue;
            }
            cplx f = a(r, bc);
            if (f == cplx(0)) {
                continue;
            }
            for (size_t c = 0; c < cols; c++) {
                a(r, c) -= f * a(row, c);
            }
        }
        used_col[bc] = true;
        pivots.push_back(bc);
        row++;
    }
    return {std::move(a), std::move(pivots)};
}

}  // namespace

std::vector<CVector> null_space(const Matrix &m, double tol) {
    Reduced red = row_reduce(m, tol);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : red.pivot_cols) {
        is_pivot[c] = true;
    }
    std::vector<CVector> raw;
    for (size_t free = 0; free < m.cols(); free++) {
        if (is_pivot[free]) {
            continue;
        }
        CVector x(m.cols());
        x[free] = 1;
        for (size_t r = 0; r < red.pivot_cols.size(); r++) {
            x[red.pivot_cols[r]] = -red.rref(r, free);
        }
        raw.push_back(std::move(x));
    }
    return gram_schmidt(raw);
}

size_t rank(const Matrix &m, double tol) {
    return row_reduce(m, tol).pivot_cols.size();
}

std::vector<CVector> subspace_intersection(const std::vector<CVector> &a, const std::vector<CVector> &b, double tol) {
    if (a.empty() || b.empty()) {
        return {};
    }
    size_t n = a[0].size();
    Matrix stacked(n, a.size() + b.size());
    for (size_t k = 0; k < a.size(); k++) {
        for (size_t r = 0; r < n; r++) {
            stacked(r, k) = a[k][r];
        }
    }
    for (size_t k = 0; k < b.size(); k++) {
        for (size_t r = 0; r < n; r++) {
            stacked(r, a.size() + k) = -b[k][r];
        }
    }
    std::vector<CVector> out;
    for (const auto &coef : null_space(stacked, tol)) {
        CVector v(n);
        for (size_t k = 0; k < a.size(); k++) {
            for (size_t r = 0; r < n; r++) {
                v[r] += coef[k] * a[k][r];
            }
        }
        out.push_back(std::move(v));
    }
    return gram_schmidt(out);
}

Matrix projector_onto(const std::vector<CVector> &orthonormal) {
    Matrix p(orthonormal.at(0).size(), orthonormal.at(0).size());
    for (const auto &v : orthonormal) {
        p += Matrix::outer(v, v);
    }
    return p;
}

static nlohmann::json pair_of(cplx z) {
    return nlohmann::json::array({z.real(), z.imag()});
}

static cplx parse_cplx(const nlohmann::json &j) {
    if (j.is_number()) {
        return {j.get<double>(), 0.0};
    }
    if (!j.is_array() || j.size() != 2) {
        throw MagicError(Errc::BadInput, "complex entries are [re, im] pairs");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

nlohmann::json to_json(const PureState &s) {
    nlohmann::json amps = nlohmann::json::array();
    for (const auto &z : s.amplitudes()) {
        amps.push_back(pair_of(z));
    }
    return {{"p", s.dim()}, {"amplitudes", amps}};
}

nlohmann::json to_json(const DensityMatrix &rho) {
    nlohmann::json rows = nlohmann::json::array();
    for (size_t r = 0; r < rho.dim(); r++) {
        nlohmann::json row = nlohmann::json::array();
        for (size_t c = 0; c < rho.dim(); c++) {
            row.push_back(pair_of(rho.matrix()(r, c)));
        }
        rows.push_back(row);
    }
    return {{"p", rho.dim()}, {"rows", rows}};
}

PureState state_from_json(const nlohmann::json &j) {
    try {
        size_t p = j.at("p").get<size_t>();
        const auto &amps = j.at("amplitudes");
        if (amps.size() != p) {
            throw MagicError(Errc::BadInput, "amplitude count does not match p");
        }
        CVector v;
        for (const auto &z : amps) {
            v.push_back(parse_cplx(z));
        }
        return PureState::from_amplitudes(std::move(v));
    } catch (const nlohmann::json::exception &e) {
        throw MagicError(Errc::BadInput, e.what());
    }
}

DensityMatrix density_from_json(const nlohmann::json &j) {
    if (j.contains("amplitudes")) {
        return DensityMatrix::from_state(state_from_json(j));
    }
    try {
        size_t p = j.at("p").get<size_t>();
        const auto &rows = j.at("rows");
        if (rows.size() != p) {
            throw MagicError(Errc::BadInput, "row count does not match p");
        }
        Matrix m(p, p);
        for (size_t r = 0; r < p; r++) {
            if (rows[r].size() != p) {
                throw MagicError(Errc::BadInput, "row length does not match p");
            }
            for (size_t c = 0; c < p; c++) {
                m(r, c) = parse_cplx(rows[r][c]);
            }
        }
        return DensityMatrix::from_matrix(std::move(m), 1e-6);
    } catch (const nlohmann::json::exception &e) {
        throw MagicError(Errc::BadInput, e.what());
    }
}

}  // namespace magiclab
