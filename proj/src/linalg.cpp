// (C) Copyright 2026, shiftring contributors.
//
// Licensed under the Apache License, Version 2.0; you may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0.

#include "shiftring/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <stdexcept>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

namespace shiftring {

DenseOperator::DenseOperator(Region s, Matrix m) : support(std::move(s)), mat(std::move(m)) {
    if (mat.rows() != mat.cols() || mat.rows() != support.dim())
        throw std::domain_error("DenseOperator: matrix dimension must be 2^|support|");
}

DenseOperator DenseOperator::identity(const Region& s) {
    return DenseOperator(s, Matrix::Identity(s.dim(), s.dim()));
}

DenseOperator DenseOperator::zero(const Region& s) {
    return DenseOperator(s, Matrix::Zero(s.dim(), s.dim()));
}

bool DenseOperator::is_hermitian(double tol) const {
    return (mat - mat.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool DenseOperator::is_unitary(double tol) const {
    Matrix g = mat.adjoint() * mat;
    g -= Matrix::Identity(dim(), dim());
    return operator_norm(g) <= tol;
}

bool is_density_matrix(const DenseOperator& rho, double tol) {
    if (!rho.is_hermitian(1e-12)) return false;
    if (std::abs(rho.mat.trace() - Complex(1.0)) > tol) return false;
    Eigen::VectorXd ev = hermitian_eigenvalues(rho.mat);
    return ev.minCoeff() >= -1e-10;
}

void hermitian_eig(const Matrix& h, Eigen::VectorXd& evals, Matrix& evecs) {
    const lapack_int n = static_cast<lapack_int>(h.rows());
    evecs = h;
    evals.resize(n);
    lapack_int info = LAPACKE_zheevd(LAPACK_COL_MAJOR, 'V', 'L', n, evecs.data(), n, evals.data());
    if (info != 0) throw std::runtime_error("hermitian_eig: LAPACK zheevd failed");
}

Eigen::VectorXd hermitian_eigenvalues(const Matrix& h) {
    const lapack_int n = static_cast<lapack_int>(h.rows());
    Matrix work = h;
    Eigen::VectorXd evals(n);
    lapack_int info = LAPACKE_zheevd(LAPACK_COL_MAJOR, 'N', 'L', n, work.data(), n, evals.data());
    if (info != 0) throw std::runtime_error("hermitian_eigenvalues: LAPACK zheevd failed");
    return evals;
}

namespace {

// Largest eigenvalue of the PSD map v -> A^dag (A v) by Lanczos with full
// reorthogonalization. Deterministic start vector.
double largest_gram_eigenvalue_lanczos(const Matrix& a) {
    const Eigen::Index n = a.rows();
    const int max_iter = std::min<Eigen::Index>(n, 300);
    std::mt19937_64 rng(0x5eedULL);
    std::normal_distribution<double> gauss;
    Vector v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = Complex(gauss(rng), gauss(rng));
    v.normalize();

    std::vector<Vector> basis;
    std::vector<double> alpha, beta;  // beta[j] couples basis j and j+1
    double theta_prev = 0.0;

    for (int j = 0; j < max_iter; ++j) {
        basis.push_back(v);
        Vector w = a.adjoint() * (a * v);
        double aj = std::real(v.dot(w));
        alpha.push_back(aj);
        // full reorthogonalization, twice for stability
        for (int pass = 0; pass < 2; ++pass)
            for (const Vector& q : basis) w -= q.dot(w) * q;
        double bj = w.norm();

        // Ritz value from the tridiagonal matrix
        Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(j + 1, j + 1);
        for (int i = 0; i <= j; ++i) tri(i, i) = alpha[i];
        for (int i = 0; i + 1 <= j; ++i) tri(i, i + 1) = tri(i + 1, i) = beta[i];
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(tri, Eigen::EigenvaluesOnly);
        double theta = es.eigenvalues().maxCoeff();

        if (bj < 1e-13 || (j > 4 && std::abs(theta - theta_prev) <= 1e-13 * std::max(1.0, theta)))
            return std::max(theta, 0.0);
        theta_prev = theta;
        beta.push_back(bj);
        v = w / bj;
    }
    return std::max(theta_prev, 0.0);
}

}  // namespace

double operator_norm(const Matrix& a) {
    if (!a.allFinite()) throw std::runtime_error("operator_norm: non-finite entries");
    if (a.rows() == 0) return 0.0;
    if (a.rows() <= 1024) {
        Matrix gram = a.adjoint() * a;
        double lam = hermitian_eigenvalues(gram).maxCoeff();
        return std::sqrt(std::max(lam, 0.0));
    }
    return std::sqrt(largest_gram_eigenvalue_lanczos(a));
}

double operator_norm(const DenseOperator& a) { return operator_norm(a.mat); }

double frobenius_norm(const DenseOperator& a) {
    if (!a.mat.allFinite()) throw std::runtime_error("frobenius_norm: non-finite entries");
    return a.mat.norm() / std::sqrt(static_cast<double>(a.dim()));
}

double trace_norm(const Matrix& a) {
    if (!a.allFinite()) throw std::runtime_error("trace_norm: non-finite entries");
    Matrix gram = a.adjoint() * a;
    Eigen::VectorXd ev = hermitian_eigenvalues(gram);
    double s = 0.0;
    for (Eigen::Index i = 0; i < ev.size(); ++i) s += std::sqrt(std::max(ev(i), 0.0));
    return s;
}

double trace_norm(const DenseOperator& a) { return trace_norm(a.mat); }

namespace {

// Scatter table: support-index bits placed at their positions inside the
// enclosing region's index (MSB = lowest site label).
std::vector<std::int64_t> scatter_table(const Region& inner, const Region& outer) {
    const int m = outer.size();
    const int k = inner.size();
    std::vector<int> shift(k);
    for (int q = 0; q < k; ++q) {
        auto it = std::lower_bound(outer.sites.begin(), outer.sites.end(), inner.sites[q]);
        int pos = static_cast<int>(it - outer.sites.begin());
        shift[q] = m - 1 - pos;
    }
    std::vector<std::int64_t> table(std::int64_t{1} << k);
    for (std::int64_t a = 0; a < static_cast<std::int64_t>(table.size()); ++a) {
        std::int64_t out = 0;
        for (int q = 0; q < k; ++q)
            out |= ((a >> (k - 1 - q)) & 1) << shift[q];
        table[a] = out;
    }
    return table;
}

}  // namespace

DenseOperator partial_trace(const DenseOperator& a, const Region& traced) {
    if (!a.support.contains(traced)) throw std::domain_error("partial_trace: traced not in support");
    Region kept = a.support.set_minus(traced);
    auto kt = scatter_table(kept, a.support);
    auto tt = scatter_table(traced, a.support);
    const std::int64_t kd = kept.dim(), td = traced.dim();
    Matrix out = Matrix::Zero(kd, kd);
    for (std::int64_t j = 0; j < kd; ++j)
        for (std::int64_t i = 0; i < kd; ++i) {
            Complex s = 0.0;
            for (std::int64_t b = 0; b < td; ++b) s += a.mat(kt[i] | tt[b], kt[j] | tt[b]);
            out(i, j) = s;
        }
    return DenseOperator(kept, std::move(out));
}

DenseOperator embed(const DenseOperator& a, const Region& target) {
    if (!target.contains(a.support)) throw std::domain_error("embed: support not in target");
    if (a.support == target) return a;
    Region rest = target.set_minus(a.support);
    auto st = scatter_table(a.support, target);
    auto rt = scatter_table(rest, target);
    const std::int64_t sd = a.support.dim(), rd = rest.dim();
    Matrix out = Matrix::Zero(target.dim(), target.dim());
    for (std::int64_t j = 0; j < sd; ++j)
        for (std::int64_t i = 0; i < sd; ++i) {
            const Complex v = a.mat(i, j);
            if (v == Complex(0.0)) continue;
            for (std::int64_t b = 0; b < rd; ++b) out(st[i] | rt[b], st[j] | rt[b]) = v;
        }
    return DenseOperator(target, std::move(out));
}

void add_embedded(const DenseOperator& a, const Region& target, Complex factor, Matrix& acc) {
    if (!target.contains(a.support)) throw std::domain_error("add_embedded: support not in target");
    if (acc.rows() != target.dim() || acc.cols() != target.dim())
        throw std::domain_error("add_embedded: accumulator dimension mismatch");
    Region rest = target.set_minus(a.support);
    auto st = scatter_table(a.support, target);
    auto rt = scatter_table(rest, target);
    const std::int64_t sd = a.support.dim(), rd = rest.dim();
    for (std::int64_t j = 0; j < sd; ++j)
        for (std::int64_t i = 0; i < sd; ++i) {
            const Complex v = factor * a.mat(i, j);
            if (v == Complex(0.0)) continue;
            for (std::int64_t b = 0; b < rd; ++b) acc(st[i] | rt[b], st[j] | rt[b]) += v;
        }
}

Matrix hermitian_expm(const Matrix& h, double t) {
    if ((h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
        throw std::domain_error("hermitian_expm: input not Hermitian");
    Eigen::VectorXd evals;
    Matrix evecs;
    hermitian_eig(h, evals, evecs);
    Vector phases(evals.size());
    for (Eigen::Index i = 0; i < evals.size(); ++i)
        phases(i) = std::exp(Complex(0.0, -evals(i) * t));
    return evecs * phases.asDiagonal() * evecs.adjoint();
}

DenseOperator hermitian_expm(const DenseOperator& h, double t) {
    return DenseOperator(h.support, hermitian_expm(h.mat, t));
}

Matrix haar_unitary(std::int64_t dim, std::uint64_t seed) {
    if (dim < 1) throw std::domain_error("haar_unitary: dim must be positive");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    Matrix g(dim, dim);
    for (std::int64_t j = 0; j < dim; ++j)
        for (std::int64_t i = 0; i < dim; ++i) g(i, j) = Complex(gauss(rng), gauss(rng));
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ() * Matrix::Identity(dim, dim);
    Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    Vector phase(dim);
    for (std::int64_t i = 0; i < dim; ++i) {
        Complex d = r(i, i);
        phase(i) = (std::abs(d) > 0.0) ? d / std::abs(d) : Complex(1.0);
    }
    return q * phase.asDiagonal();
}

DenseOperator tensor(const DenseOperator& a, const DenseOperator& b) {
    if (!a.support.set_intersect(b.support).empty())
        throw std::domain_error("tensor: overlapping supports");
    Region u = a.support.set_union(b.support);
    return DenseOperator(u, embed(a, u).mat * embed(b, u).mat);
}

void save_operator(const DenseOperator& a, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("save_operator: cannot open " + path);
    std::int64_t k = a.support.size();
    f.write(reinterpret_cast<const char*>(&k), sizeof(k));
    for (int s : a.support.sites) {
        std::int64_t site = s;
        f.write(reinterpret_cast<const char*>(&site), sizeof(site));
    }
    const std::int64_t d = a.dim();
    for (std::int64_t i = 0; i < d; ++i)
        for (std::int64_t j = 0; j < d; ++j) {
            double re = a.mat(i, j).real(), im = a.mat(i, j).imag();
            f.write(reinterpret_cast<const char*>(&re), sizeof(re));
            f.write(reinterpret_cast<const char*>(&im), sizeof(im));
        }
}

DenseOperator load_operator(const std::string& path, const RingLattice& lat) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("load_operator: cannot open " + path);
    std::int64_t k = 0;
    f.read(reinterpret_cast<char*>(&k), sizeof(k));
    std::vector<long long> labels(k);
    for (auto& s : labels) f.read(reinterpret_cast<char*>(&s), sizeof(s));
    Region supp(lat, labels);
    const std::int64_t d = supp.dim();
    Matrix m(d, d);
    for (std::int64_t i = 0; i < d; ++i)
        for (std::int64_t j = 0; j < d; ++j) {
            double re = 0.0, im = 0.0;
            f.read(reinterpret_cast<char*>(&re), sizeof(re));
            f.read(reinterpret_cast<char*>(&im), sizeof(im));
            m(i, j) = Complex(re, im);
        }
    if (!f) throw std::runtime_error("load_operator: truncated file " + path);
    return DenseOperator(supp, std::move(m));
}

}  // namespace shiftring
