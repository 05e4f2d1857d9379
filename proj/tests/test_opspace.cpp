// (C) Copyright 2026, shiftring contributors.
//
// Licensed under the Apache License, Version 2.0; you may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0.

#include <doctest.h>

#include <cmath>
#include <random>

#include "shiftring/experiments.hpp"
#include "shiftring/opspace.hpp"

using namespace shiftring;

namespace {

Matrix letter_matrix(PauliLetter l) {
    Matrix m(2, 2);
    switch (l) {
        case PauliLetter::I: m << 1, 0, 0, 1; break;
        case PauliLetter::X: m << 0, 1, 1, 0; break;
        case PauliLetter::Y: m << 0, Complex(0, -1), Complex(0, 1), 0; break;
        case PauliLetter::Z: m << 1, 0, 0, -1; break;
    }
    return m;
}

DenseOperator random_hermitian_on(const Region& s, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    Matrix m(s.dim(), s.dim());
    for (std::int64_t i = 0; i < s.dim(); ++i)
        for (std::int64_t j = 0; j < s.dim(); ++j) m(i, j) = Complex(gauss(rng), gauss(rng));
    return DenseOperator(s, Matrix(0.5 * (m + m.adjoint())));
}

CircuitApprox identity_circuit(const RingLattice& lat) {
    CircuitRegions cr = circuit_regions(lat);
    return CircuitApprox::from_blocks(lat, DenseOperator::identity(cr.left),
                                      DenseOperator::identity(cr.right),
                                      DenseOperator::identity(cr.cut_a_block),
                                      DenseOperator::identity(cr.cut_b_block));
}

}  // namespace

TEST_CASE("superoperator action: identity, isometry, and the translation") {
    RingLattice lat(4);
    Region full = Region::full(lat);
    DenseOperator a = random_hermitian_on(full, 3);
    CHECK((super_apply(DenseOperator::identity(full), a).mat - a.mat).norm() < 1e-14);

    DenseOperator u(full, haar_unitary(16, 4));
    for (int trial = 0; trial < 20; ++trial) {
        DenseOperator p = random_hermitian_on(full, 100 + trial);
        DenseOperator q = random_hermitian_on(full, 200 + trial);
        Complex before = pauli_inner(p, q);
        Complex after = pauli_inner(super_apply(u, p), super_apply(u, q));
        CHECK(std::abs(before - after) < 1e-11);
    }

    ShiftUnitary sh = build_shift(lat);
    DenseOperator x0 = PauliString::single(lat, 0, PauliLetter::X).to_dense();
    DenseOperator moved = super_apply(sh.matrix, x0);
    DenseOperator x1 = embed(PauliString::single(lat, 1, PauliLetter::X).to_dense(), full);
    CHECK((moved.mat - x1.mat).norm() < 1e-14);
}

TEST_CASE("Heisenberg deviation from the translation") {
    RingLattice lat(4);
    Region full = Region::full(lat);
    ShiftUnitary sh = build_shift(lat);
    DenseOperator z2 = PauliString::single(lat, 2, PauliLetter::Z).to_dense();
    CHECK(super_distance_on(sh.matrix, z2) < 1e-12);

    DenseOperator u(full, haar_unitary(16, 8));
    for (int x = 0; x < 4; ++x) {
        DenseOperator p = PauliString::single(lat, x, PauliLetter::Y).to_dense();
        double d = super_distance_on(u, p);
        CHECK(d <= 2.0 + 1e-12);
        CHECK(d <= 2.0 * shift_distance(u, NormMode::Frobenius) + 1e-9);
    }
    DenseOperator big(Region::single(lat, 0), Matrix(2.0 * letter_matrix(PauliLetter::X)));
    CHECK_THROWS_AS(super_distance_on(u, big), std::domain_error);
}

TEST_CASE("conjugation superoperator: hand value and unitarity") {
    RingLattice lat(4);
    Region s0 = Region::single(lat, 0);
    DenseOperator x(s0, letter_matrix(PauliLetter::X));
    Matrix mx = conjugation_superoperator(x);
    Matrix expected = Matrix::Zero(4, 4);
    expected(0, 0) = 1.0;   // I -> I
    expected(1, 1) = 1.0;   // X -> X
    expected(2, 2) = -1.0;  // Y -> -Y
    expected(3, 3) = -1.0;  // Z -> -Z
    CHECK((mx - expected).norm() < 1e-13);

    Region s(lat, {0, 1});
    DenseOperator u(s, haar_unitary(4, 12));
    Matrix m = conjugation_superoperator(u);
    CHECK((m * m.adjoint() - Matrix::Identity(16, 16)).norm() < 1e-11);
    // composition: M(uv) = M(u) M(v)
    DenseOperator v(s, haar_unitary(4, 13));
    Matrix muv = conjugation_superoperator(DenseOperator(s, Matrix(u.mat * v.mat)));
    CHECK((muv - m * conjugation_superoperator(v)).norm() < 1e-11);
}

TEST_CASE("operator-space certificate: identity blocks take exact values") {
    RingLattice lat(8);
    SuperLemmaCertificate cert = super_lemma_certificate(identity_circuit(lat));
    CHECK(cert.halfchain_value == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(cert.max_value == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
    CHECK(cert.pass);
}

TEST_CASE("operator-space certificate holds for random blocks") {
    RingLattice lat(8);
    CircuitRegions cr = circuit_regions(lat);
    for (std::uint64_t seed : {51u, 52u}) {
        CircuitApprox ca = CircuitApprox::from_blocks(
            lat, DenseOperator(cr.left, haar_unitary(16, seed)),
            DenseOperator(cr.right, haar_unitary(16, seed + 1)),
            DenseOperator(cr.cut_a_block, haar_unitary(4, seed + 2)),
            DenseOperator(cr.cut_b_block, haar_unitary(4, seed + 3)));
        SuperLemmaCertificate cert = super_lemma_certificate(ca);
        CHECK(cert.pass);
        CHECK(cert.halfchain_value >= 0.5 - 1e-9);
        CHECK(cert.halfchain_value <= 2.0 + 1e-9);
        CHECK(cert.max_value >= 0.25 - 1e-9);
        CHECK(cert.max_value <= 2.0 + 1e-9);
        CHECK(cert.halfchain_value <= 2.0 * cert.max_value + 1e-9);
        CHECK(!cert.max_pauli.is_identity_letters());
    }
}

TEST_CASE("disjoint-support commutators vanish") {
    RingLattice lat(8);
    Region s1(lat, {0, 1});
    Region s2(lat, {3, 4});
    for (int trial = 0; trial < 5; ++trial) {
        DenseOperator h = random_hermitian_on(s1, 300 + trial);
        DenseOperator a = random_hermitian_on(s2, 400 + trial);
        CHECK(liouvillian_identity_check(h, a) <= 1e-10);
    }
    DenseOperator h = random_hermitian_on(s1, 1);
    DenseOperator a = random_hermitian_on(Region(lat, {1, 2}), 2);
    CHECK_THROWS_AS(liouvillian_identity_check(h, a), std::domain_error);
}

TEST_CASE("the evolution generator is real on Hermitian observables") {
    RingLattice lat(4);
    Region s0 = Region::single(lat, 0);
    DenseOperator z(s0, letter_matrix(PauliLetter::Z));
    DenseOperator x(s0, letter_matrix(PauliLetter::X));
    CHECK(liouvillian_reality_check(z, x, x) <= 1e-12);
    DenseOperator y(s0, letter_matrix(PauliLetter::Y));
    CHECK(liouvillian_reality_check(z, y, x) <= 1e-12);

    DenseOperator zero = DenseOperator::zero(s0);
    CHECK(liouvillian_reality_check(zero, x, y) == 0.0);

    Region s(lat, {1, 2});
    for (int trial = 0; trial < 5; ++trial)
        CHECK(liouvillian_reality_check(random_hermitian_on(s, 500 + trial),
                                        random_hermitian_on(s, 600 + trial),
                                        random_hermitian_on(s, 700 + trial)) <= 1e-10);

    DenseOperator g(s0, Matrix(Matrix::Random(2, 2)));
    CHECK_THROWS_AS(liouvillian_reality_check(g, x, x), std::domain_error);
}

TEST_CASE("the cross-copy reflection is an involution that swaps copies") {
    RingLattice lat(8);
    CopySite img = inversion_map(1, CopyTag::A, lat);
    CHECK(img.site == 0);
    CHECK(img.copy == CopyTag::B);
    CopySite img2 = inversion_map(2, CopyTag::B, lat);
    CHECK(img2.site == 7);  // 1 - 2 mod 8
    CHECK(img2.copy == CopyTag::A);
    for (int x = 0; x < lat.n; ++x)
        for (CopyTag c : {CopyTag::A, CopyTag::B}) {
            CopySite once = inversion_map(x, c, lat);
            CHECK(once.copy != c);
            CopySite twice = inversion_map(once.site, once.copy, lat);
            CHECK(twice.site == x);
            CHECK(twice.copy == c);
        }
    CHECK(slot_of(3, CopyTag::B, lat) == 11);
    CHECK_THROWS_AS(slot_of(8, CopyTag::A, lat), std::domain_error);
}

TEST_CASE("the doubled shift is the tensor of the shift and its inverse") {
    RingLattice lat(4);
    ShiftUnitary sh = build_shift(lat);
    DenseOperator w = doubled_shift(lat);
    const std::int64_t d = 16;
    Matrix oracle(d * d, d * d);
    for (std::int64_t i = 0; i < d; ++i)
        for (std::int64_t k = 0; k < d; ++k)
            for (std::int64_t j = 0; j < d; ++j)
                for (std::int64_t l = 0; l < d; ++l)
                    oracle(d * i + j, d * k + l) =
                        sh.matrix.mat(i, k) * std::conj(sh.matrix.mat(l, j));
    CHECK((w.mat - oracle).norm() < 1e-13);
    CHECK(w.is_unitary(1e-13));
}

TEST_CASE("the reflection commutes with the doubled shift") {
    RingLattice lat(4);
    DenseOperator w = doubled_shift(lat);
    DenseOperator r = inversion_unitary(lat);
    CHECK((r.mat * r.mat - Matrix::Identity(256, 256)).norm() < 1e-13);
    CHECK((r.mat * w.mat * r.mat - w.mat).norm() < 1e-13);
}

TEST_CASE("swap factors decompose into the Pauli pair sum") {
    RingLattice lat(4);
    RingLattice big(8);  // the doubled register as a ring of 8 labels
    DenseOperator s = swap_permutation(lat, {{2, 7}}, 1.0);
    Matrix oracle = Matrix::Zero(256, 256);
    Region full(big, {0, 1, 2, 3, 4, 5, 6, 7});
    for (PauliLetter l : {PauliLetter::I, PauliLetter::X, PauliLetter::Y, PauliLetter::Z}) {
        DenseOperator p2(Region::single(big, 2), letter_matrix(l));
        DenseOperator p7(Region::single(big, 7), letter_matrix(l));
        oracle += 0.5 * (embed(p2, full).mat * embed(p7, full).mat);
    }
    CHECK((s.mat - oracle).norm() < 1e-13);
    CHECK_THROWS_AS(swap_permutation(lat, {{2, 2}}, 1.0), std::domain_error);
    CHECK_THROWS_AS(swap_permutation(lat, {{2, 7}, {7, 3}}, 1.0), std::domain_error);
}

TEST_CASE("the reflection-symmetric string and its shifted image") {
    TwoCopyOperator si = swap_string(1, false);
    REQUIRE(si.has_dense);
    CHECK(si.unit_slots == std::vector<int>{0, 4, 1, 5});
    CHECK(si.swap_slots == std::vector<std::pair<int, int>>{{2, 7}, {3, 6}});

    RingLattice lat(4);
    // dense form: (I/2)^4 on the unit slots times the two SWAP factors
    DenseOperator oracle = swap_permutation(lat, si.swap_slots, 1.0 / 16.0);
    CHECK((si.dense.mat - oracle.mat).norm() < 1e-14);
    CHECK(si.dense.is_hermitian(1e-14));

    // reflection symmetry: every SWAP pairs a slot with its reflection image
    for (const auto& [p, q] : si.swap_slots) {
        int site = p;  // p is a copy-A slot
        CopySite img = inversion_map(site, CopyTag::A, lat);
        CHECK(slot_of(img.site, img.copy, lat) == q);
    }
    DenseOperator r = inversion_unitary(lat);
    CHECK((r.mat * si.dense.mat * r.mat - si.dense.mat).norm() < 1e-13);

    // conjugating by the doubled shift produces exactly the shifted string
    TwoCopyOperator sf = swap_string(1, true);
    REQUIRE(sf.has_dense);
    DenseOperator w = doubled_shift(lat);
    Matrix conj = w.mat.adjoint() * si.dense.mat * w.mat;
    CHECK((conj - sf.dense.mat).norm() < 1e-12);

    CHECK_THROWS_AS(swap_string(0, false), std::domain_error);
    CHECK(!swap_string(3, false).has_dense);  // 24 qubits: no dense form
}

TEST_CASE("separability classification of two-copy models") {
    TwoCopyModel within;
    within.big_l = 1;
    within.terms = {TwoCopyTerm{{0, 1}}, TwoCopyTerm{{5, 6}}};
    CHECK(separability_check(within));

    TwoCopyModel across;
    across.big_l = 1;
    across.terms = {TwoCopyTerm{{0, 1}}, TwoCopyTerm{{3, 6}}};
    CHECK(!separability_check(across));

    TwoCopyModel empty;
    empty.big_l = 1;
    CHECK(separability_check(empty));

    TwoCopyModel untagged;
    untagged.big_l = 1;
    untagged.terms = {TwoCopyTerm{{}}};
    CHECK_THROWS_AS(separability_check(untagged), std::domain_error);

    TwoCopyModel out_of_range;
    out_of_range.big_l = 1;
    out_of_range.terms = {TwoCopyTerm{{8}}};
    CHECK_THROWS_AS(separability_check(out_of_range), std::domain_error);
}

TEST_CASE("the depth-2 swap circuit realizes the doubled shift across copies") {
    RingLattice lat(4);
    DoubledSwapCircuit c = doubled_swap_circuit(lat);
    DenseOperator l1 = swap_permutation(lat, c.layer1, 1.0);
    DenseOperator l2 = swap_permutation(lat, c.layer2, 1.0);
    DenseOperator w = doubled_shift(lat);
    CHECK((l2.mat * l1.mat - w.mat).norm() < 1e-13);
    CHECK(!separability_check(c.model));  // every gate couples the copies
    CHECK(c.model.terms.size() == 8);
}

TEST_CASE("the packaged two-copy experiment passes") {
    SptReport rep = spt_experiment();
    CHECK(rep.conjugation_error <= 1e-12);
    CHECK(rep.circuit_error <= 1e-12);
    CHECK(rep.involution_ok);
    CHECK(rep.commutes_ok);
    CHECK(!rep.circuit_separable);
    CHECK(rep.pass);
}
