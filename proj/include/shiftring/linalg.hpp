// (C) Copyright 2026, shiftring contributors.
//
// Licensed under the Apache License, Version 2.0; you may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0.

#ifndef SHIFTRING_LINALG_HPP
#define SHIFTRING_LINALG_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "shiftring/lattice.hpp"

namespace shiftring {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// A complex matrix acting on the qubits of `support`.
///
/// Tensor convention: ascending site label = most-significant to
/// least-significant qubit of the basis index.
struct DenseOperator {
    Region support;
    Matrix mat;

    DenseOperator() = default;
    DenseOperator(Region s, Matrix m);

    std::int64_t dim() const { return mat.rows(); }
    static DenseOperator identity(const Region& s);
    static DenseOperator zero(const Region& s);
    DenseOperator adjoint() const { return DenseOperator(support, mat.adjoint()); }

    bool is_hermitian(double tol = 1e-10) const;
    bool is_unitary(double tol = 1e-10) const;
};

/// Alias: a DenseOperator expected to be Hermitian, unit-trace, PSD.
using DensityMatrix = DenseOperator;
bool is_density_matrix(const DenseOperator& rho, double tol = 1e-9);

/// Eigendecomposition of a Hermitian matrix (ascending eigenvalues).
/// Backed by LAPACK's divide-and-conquer driver.
void hermitian_eig(const Matrix& h, Eigen::VectorXd& evals, Matrix& evecs);
Eigen::VectorXd hermitian_eigenvalues(const Matrix& h);

/// Largest singular value. Exact (dense eigensolve of A^dag A) up to
/// dimension 1024; Lanczos with full reorthogonalization above.
double operator_norm(const DenseOperator& a);
double operator_norm(const Matrix& a);

/// Normalized 2-norm: sqrt(2^{-k} tr(A^dag A)) on k qubits.
double frobenius_norm(const DenseOperator& a);

/// Sum of singular values.
double trace_norm(const DenseOperator& a);
double trace_norm(const Matrix& a);

/// Trace out `traced` (subset of the support); result lives on the rest.
DenseOperator partial_trace(const DenseOperator& a, const Region& traced);

/// Tensor with identity on target \ support, site-ordered.
DenseOperator embed(const DenseOperator& a, const Region& target);

/// acc += factor * embed(a, target).mat, without materializing the embedding.
void add_embedded(const DenseOperator& a, const Region& target, Complex factor, Matrix& acc);

/// exp(-i H t) for Hermitian H, via eigendecomposition.
DenseOperator hermitian_expm(const DenseOperator& h, double t);
Matrix hermitian_expm(const Matrix& h, double t);

/// Haar-distributed unitary: QR of a complex Ginibre matrix with the
/// R-diagonal phase fix that makes the factorization unique.
Matrix haar_unitary(std::int64_t dim, std::uint64_t seed);

/// Kronecker product in the site-ordered convention: a's support must
/// precede none of b's requirements; supports must be disjoint.
DenseOperator tensor(const DenseOperator& a, const DenseOperator& b);

/// Raw little-endian row-major complex serialization (cache files).
void save_operator(const DenseOperator& a, const std::string& path);
DenseOperator load_operator(const std::string& path, const RingLattice& lat);

}  // namespace shiftring

#endif
