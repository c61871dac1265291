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

#ifndef MAGICLAB_LINALG_H
#define MAGICLAB_LINALG_H

#include <complex>
#include <cstddef>
#include <vector>

#include "json.hpp"

namespace magiclab {

using cplx = std::complex<double>;
using CVector = std::vector<cplx>;

/// Dense row-major complex matrix. Sizes here never exceed a few dozen.
class Matrix {
   public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols);
    static Matrix identity(size_t n);
    /// |a><b|
    static Matrix outer(const CVector &a, const CVector &b);

    size_t rows() const noexcept {
        return rows_;
    }
    size_t cols() const noexcept {
        return cols_;
    }
    cplx &operator()(size_t r, size_t c) {
        return data_[r * cols_ + c];
    }
    const cplx &operator()(size_t r, size_t c) const {
        return data_[r * cols_ + c];
    }
    const std::vector<cplx> &data() const noexcept {
        return data_;
    }

    Matrix adjoint() const;
    Matrix operator*(const Matrix &other) const;
    CVector operator*(const CVector &x) const;
    Matrix operator+(const Matrix &other) const;
    Matrix operator-(const Matrix &other) const;
    Matrix &operator+=(const Matrix &other);
    Matrix operator*(cplx s) const;
    cplx trace() const;
    double max_abs() const;
    double frobenius() const;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<cplx> data_;
};

/// Largest entrywise deviation. Throws DimensionMismatch on shape mismatch.
double max_abs_diff(const Matrix &a, const Matrix &b);
/// <a|b>
cplx inner(const CVector &a, const CVector &b);
double norm(const CVector &a);
CVector operator+(const CVector &a, const CVector &b);
CVector operator*(cplx s, const CVector &a);

/// Unit vector whose first non-negligible amplitude is real and positive.
class PureState {
   public:
    /// Normalizes and fixes the phase. Throws ZeroVector.
    static PureState from_amplitudes(CVector amplitudes);
    static PureState basis(size_t dim, size_t k);

    size_t dim() const noexcept {
        return amps_.size();
    }
    const CVector &amplitudes() const noexcept {
        return amps_;
    }
    const cplx &operator[](size_t k) const {
        return amps_[k];
    }

   private:
    CVector amps_;
};

PureState canonicalize(const PureState &s);
PureState canonicalize(const CVector &amplitudes);
/// |<a|b>|^2
double fidelity(const PureState &a, const PureState &b);
bool same_ray(const PureState &a, const PureState &b, double tol = 1e-9);

class DensityMatrix {
   public:
    /// Checks Hermiticity, unit trace and positivity within tol.
    static DensityMatrix from_matrix(Matrix m, double tol = 1e-9);
    static DensityMatrix from_state(const PureState &s);
    static DensityMatrix maximally_mixed(size_t dim);
    /// Convex mixture; weights must sum to 1.
    static DensityMatrix mixture(const std::vector<double> &weights, const std::vector<PureState> &states);

    size_t dim() const noexcept {
        return m_.rows();
    }
    const Matrix &matrix() const noexcept {
        return m_;
    }

   private:
    Matrix m_;
};

class UnitaryMatrix {
   public:
    /// Throws NotUnitary if U^dag U deviates from I by more than tol.
    static UnitaryMatrix from_matrix(Matrix m, double tol = 1e-9);
    /// Skips the check; for matrices unitary by construction.
    static UnitaryMatrix trusted(Matrix m);

    size_t dim() const noexcept {
        return m_.rows();
    }
    const Matrix &matrix() const noexcept {
        return m_;
    }
    UnitaryMatrix operator*(const UnitaryMatrix &other) const;
    CVector operator*(const CVector &x) const {
        return m_ * x;
    }
    UnitaryMatrix adjoint() const;

   private:
    Matrix m_;
};

/// True iff A = lambda B for some |lambda| = 1, entrywise within tol.
bool projective_equal(const Matrix &a, const Matrix &b, double tol = 1e-9);
bool projective_equal(const UnitaryMatrix &a, const UnitaryMatrix &b, double tol = 1e-9);

struct Eigenspace {
    cplx eigenvalue;
    Matrix projector;
    size_t multiplicity;
    /// Orthonormal basis of the projector's range.
    std::vector<CVector> basis() const;
};

struct EigenSystem {
    /// Smallest m with U^m proportional to I, and that proportionality constant.
    size_t order;
    cplx phase;
    std::vector<Eigenspace> spaces;

    Matrix reconstruct() const;
};

inline constexpr size_t kDefaultMaxOrder = 72;

/// Smallest m <= m_max with U^m = c I. Throws NotFiniteOrder.
size_t projective_order(const Matrix &u, size_t m_max = kDefaultMaxOrder, double tol = 1e-9);

/// Spectral projectors by averaging over the cyclic group generated by U.
EigenSystem eigensystem_finite_order(const UnitaryMatrix &u, size_t m_max = kDefaultMaxOrder);

std::vector<CVector> gram_schmidt(const std::vector<CVector> &vectors, double tol = 1e-8);
std::vector<CVector> range_basis(const Matrix &m, size_t max_rank, double tol = 1e-8);
/// Orthonormal basis for {x : M x = 0}.
std::vector<CVector> null_space(const Matrix &m, double tol = 1e-9);
size_t rank(const Matrix &m, double tol = 1e-9);
/// Orthonormal basis of span(a) intersected with span(b); inputs orthonormal.
std::vector<CVector> subspace_intersection(
    const std::vector<CVector> &a, const std::vector<CVector> &b, double tol = 1e-8);
Matrix projector_onto(const std::vector<CVector> &orthonormal);

nlohmann::json to_json(const PureState &s);
nlohmann::json to_json(const DensityMatrix &rho);
PureState state_from_json(const nlohmann::json &j);
/// Accepts either the density-matrix format or the pure-state format.
DensityMatrix density_from_json(const nlohmann::json &j);

}  // namespace magiclab

#endif
