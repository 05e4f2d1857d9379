// (C) Copyright 2026, shiftring contributors.
//
// Licensed under the Apache License, Version 2.0; you may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0.

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <random>

#include "shiftring/linalg.hpp"

using namespace shiftring;

namespace {

Matrix pauli_x() {
    Matrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

Matrix random_matrix(std::int64_t dim, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    Matrix m(dim, dim);
    for (std::int64_t i = 0; i < dim; ++i)
        for (std::int64_t j = 0; j < dim; ++j) m(i, j) = Complex(gauss(rng), gauss(rng));
    return m;
}

}  // namespace

TEST_CASE("hermitian eigensolver against a hand 2x2") {
    Matrix h(2, 2);
    h << 1, 2, 2, 1;
    Eigen::VectorXd evals;
    Matrix evecs;
    hermitian_eig(h, evals, evecs);
    CHECK(evals(0) == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(evals(1) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK((evecs * evals.asDiagonal() * evecs.adjoint() - h).norm() < 1e-12);
    CHECK((hermitian_eigenvalues(h) - evals).norm() < 1e-12);
}

TEST_CASE("operator norm: exact dense route") {
    Matrix d = Matrix::Zero(8, 8);
    for (int i = 0; i < 8; ++i) d(i, i) = Complex(0.0, static_cast<double>(i) - 3.5);
    CHECK(operator_norm(d) == doctest::Approx(3.5).epsilon(1e-12));

    Matrix m(2, 2);  // singular values of [[1,1],[0,1]] are golden-ratio related
    m << 1, 1, 0, 1;
    const double expected = std::sqrt(1.5 + std::sqrt(1.25));
    CHECK(operator_norm(m) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("operator norm: iterative route agrees with a known spectrum") {
    // dimension above the dense cutoff, diagonal so the answer is exact
    const std::int64_t dim = 2048;
    Matrix d = Matrix::Zero(dim, dim);
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (std::int64_t i = 0; i < dim; ++i) d(i, i) = Complex(uni(rng), uni(rng));
    d(1234, 1234) = Complex(3.0, 4.0);  // dominant magnitude 5
    CHECK(operator_norm(d) == doctest::Approx(5.0).epsilon(1e-10));
}

TEST_CASE("norm definitions on small operators") {
    RingLattice lat(4);
    Region s = Region::single(lat, 0);
    DenseOperator x(s, pauli_x());
    CHECK(frobenius_norm(x) == doctest::Approx(1.0));
    CHECK(frobenius_norm(DenseOperator::identity(s)) == doctest::Approx(1.0));
    CHECK(trace_norm(x.mat) == doctest::Approx(2.0));
    CHECK(operator_norm(x) == doctest::Approx(1.0));
}

TEST_CASE("partial trace of a product state factors") {
    RingLattice lat(4);
    Region s01(lat, {0, 1});
    Matrix rho0(2, 2), rho1(2, 2);
    rho0 << 0.75, 0.1, 0.1, 0.25;
    rho1 << 0.5, Complex(0, 0.2), Complex(0, -0.2), 0.5;
    DenseOperator prod = tensor(DenseOperator(Region::single(lat, 0), rho0),
                                DenseOperator(Region::single(lat, 1), rho1));
    DenseOperator left = partial_trace(prod, Region::single(lat, 1));
    CHECK((left.mat - rho0).norm() < 1e-14);
    DenseOperator right = partial_trace(prod, Region::single(lat, 0));
    CHECK((right.mat - rho1).norm() < 1e-14);
    // tracing everything leaves the scalar trace
    DenseOperator all = partial_trace(prod, s01);
    CHECK(all.mat(0, 0).real() == doctest::Approx(1.0));
}

TEST_CASE("embedding follows the ascending-site tensor convention") {
    RingLattice lat(4);
    Region full = Region::full(lat);
    DenseOperator x2(Region::single(lat, 2), pauli_x());
    Matrix expected = Matrix::Zero(16, 16);
    // site 2 is the second-least-significant qubit
    for (std::int64_t i = 0; i < 16; ++i) expected(i ^ 2, i) = 1.0;
    CHECK((embed(x2, full).mat - expected).norm() < 1e-14);

    Matrix acc = Matrix::Zero(16, 16);
    add_embedded(x2, full, Complex(2.0), acc);
    CHECK((acc - 2.0 * expected).norm() < 1e-14);
}

TEST_CASE("tensor products agree with explicit embedding") {
    RingLattice lat(4);
    DenseOperator a(Region::single(lat, 1), random_matrix(2, 5));
    DenseOperator b(Region::single(lat, 3), random_matrix(2, 6));
    DenseOperator t = tensor(a, b);
    Region both(lat, {1, 3});
    Matrix expected = embed(a, both).mat * embed(b, both).mat;
    CHECK((t.mat - expected).norm() < 1e-13);
}

TEST_CASE("matrix exponential of a Pauli rotation") {
    RingLattice lat(4);
    DenseOperator x(Region::single(lat, 0), pauli_x());
    const double theta = 0.37;
    Matrix u = hermitian_expm(x, theta).mat;
    Matrix expected = std::cos(theta) * Matrix::Identity(2, 2) -
                      Complex(0, 1) * std::sin(theta) * pauli_x();
    CHECK((u - expected).norm() < 1e-13);
}

TEST_CASE("random unitaries are unitary and reproducible") {
    Matrix u1 = haar_unitary(16, 42);
    Matrix u2 = haar_unitary(16, 42);
    Matrix u3 = haar_unitary(16, 43);
    CHECK((u1 - u2).norm() == 0.0);
    CHECK((u1 - u3).norm() > 1e-3);
    CHECK((u1 * u1.adjoint() - Matrix::Identity(16, 16)).norm() < 1e-12);
}

TEST_CASE("hermiticity and unitarity predicates") {
    RingLattice lat(4);
    Region s = Region::single(lat, 0);
    DenseOperator x(s, pauli_x());
    CHECK(x.is_hermitian());
    CHECK(x.is_unitary());
    DenseOperator g(s, random_matrix(2, 9));
    CHECK(!g.is_unitary(1e-6));
    CHECK(is_density_matrix(DenseOperator(s, Matrix(0.5 * Matrix::Identity(2, 2)))));
}

TEST_CASE("serialization round trip") {
    RingLattice lat(4);
    Region s(lat, {0, 2});
    DenseOperator a(s, random_matrix(4, 77));
    const std::string path = "test_linalg_roundtrip.bin";
    save_operator(a, path);
    DenseOperator back = load_operator(path, lat);
    std::remove(path.c_str());
    CHECK(back.support == s);
    CHECK((back.mat - a.mat).norm() < 1e-15);
}
