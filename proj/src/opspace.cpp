// (C) Copyright 2026, shiftring contributors.
//
// Licensed under the Apache License, Version 2.0; you may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0.

#include "shiftring/opspace.hpp"

#include <cmath>
#include <stdexcept>

namespace shiftring {

DenseOperator super_apply(const DenseOperator& u, const DenseOperator& o) {
    Region s = u.support.set_union(o.support);
    Matrix ue = embed(u, s).mat;
    Matrix oe = embed(o, s).mat;
    return DenseOperator(s, ue.adjoint() * oe * ue);
}

double super_distance_on(const DenseOperator& u, const DenseOperator& o) {
    RingLattice lat(u.support.n);
    if (u.support.size() != lat.n)
        throw std::domain_error("super_distance_on: full-ring unitary expected");
    if (std::abs(operator_norm(o) - 1.0) > 1e-9)
        throw std::domain_error("super_distance_on: observable must have unit operator norm");
    Region full = Region::full(lat);
    Matrix oe = embed(o, full).mat;
    ShiftUnitary sh = build_shift(lat);
    Matrix a = u.mat.adjoint() * oe * u.mat;
    Matrix b = sh.matrix.mat.adjoint() * oe * sh.matrix.mat;
    return frobenius_norm(DenseOperator(full, a - b));
}

Matrix conjugation_superoperator(const DenseOperator& u) {
    const int k = u.support.size();
    if (k > 4) throw std::domain_error("conjugation_superoperator: supports at most 4 sites");
    std::vector<PauliString> basis = enumerate_paulis(u.support);
    const std::int64_t dim = static_cast<std::int64_t>(basis.size());
    Matrix m(dim, dim);
    for (std::int64_t q = 0; q < dim; ++q) {
        DenseOperator conj(u.support, u.mat * basis[q].to_dense().mat * u.mat.adjoint());
        auto coeffs = pauli_decompose(conj);
        for (std::int64_t p = 0; p < dim; ++p) m(p, q) = coeffs[p].second;
    }
    return m;
}

namespace {

// tr(P D P D^dag) for a sparse Pauli string: P D P has entries
// amp(a^x) amp(b) D[a^x, b^x] at (a, b).
Complex conjugated_overlap(const SparsePauli& p, const Matrix& d) {
    const std::int64_t dim = d.rows();
    Complex tr = 0.0;
    for (std::int64_t a = 0; a < dim; ++a) {
        const std::int64_t ax = a ^ p.xmask;
        const Complex ca = p.amp(ax);
        for (std::int64_t b = 0; b < dim; ++b)
            tr += ca * p.amp(b) * d(ax, b ^ p.xmask) * std::conj(d(a, b));
    }
    return tr;
}

}  // namespace

SuperLemmaCertificate super_lemma_certificate(const CircuitApprox& ca) {
    RingLattice lat(ca.assembled.support.n);
    if (lat.l != 2)
        throw std::domain_error("super_lemma_certificate: implemented for L = 2 (exact half-chain)");
    CircuitRegions cr = circuit_regions(lat);

    // Left-half witness in the explicit 256-dim operator space of the half
    // chain. The initial product observable-ensemble restricted to the left
    // half is diagonal in the Pauli basis: weight 1/16 on every string that
    // is identity on the two pure sites {1,2} (the leading base-4 digits).
    const std::int64_t sdim = 256;
    Matrix r_il = Matrix::Zero(sdim, sdim);
    for (std::int64_t idx = 0; idx < 16; ++idx) r_il(idx, idx) = 1.0 / 16.0;

    Matrix m_l = conjugation_superoperator(ca.u_l);
    Matrix a = m_l * r_il * m_l.adjoint();

    // Target side: conjugate the pure-pure factor on the cut block {0,1} by
    // the patch adjoint, trace out the site-0 qudit, tensor the rest of the
    // left half (all maximally mixed) back in.
    Matrix m_0 = conjugation_superoperator(ca.u_0.adjoint());
    Matrix e00 = Matrix::Zero(16, 16);
    e00(0, 0) = 1.0;
    Matrix kblk = m_0 * e00 * m_0.adjoint();
    Matrix g = Matrix::Zero(4, 4);
    for (int aa = 0; aa < 4; ++aa)
        for (int bb = 0; bb < 4; ++bb)
            for (int c = 0; c < 4; ++c) g(aa, bb) += kblk(4 * c + aa, 4 * c + bb);

    Matrix b = Matrix::Zero(sdim, sdim);
    for (int aa = 0; aa < 4; ++aa)
        for (int bb = 0; bb < 4; ++bb)
            for (int rest = 0; rest < 64; ++rest)
                b(64 * aa + rest, 64 * bb + rest) = g(aa, bb) / 64.0;

    SuperLemmaCertificate cert;
    Eigen::VectorXd evals = hermitian_eigenvalues(Matrix(a - b));
    cert.halfchain_value = evals.cwiseAbs().sum();

    // Exhaustive scan of the 256 Pauli strings on the mixed block:
    // || Utilde P Utilde^dag - U_sh P U_sh^dag ||_F^2
    //   = 2 - 2^{1-n} Re tr(P D P D^dag)   with D = Utilde^dag U_sh,
    // the same conjugation direction as the half-chain witness above.
    ShiftUnitary sh = build_shift(lat);
    Matrix d = ca.assembled.mat.adjoint() * sh.matrix.mat;
    Region full = Region::full(lat);
    const double scale = std::pow(2.0, 1.0 - lat.n);
    cert.max_value = -1.0;
    for (const PauliString& p : enumerate_paulis(cr.mixed_initial)) {
        SparsePauli sp = sparse_form(p.embedded(full), full);
        double val2 = 2.0 - scale * std::real(conjugated_overlap(sp, d));
        double val = std::sqrt(std::max(0.0, val2));
        if (val > cert.max_value + 1e-15) {
            cert.max_value = val;
            cert.max_pauli = p;
        }
    }
    cert.pass = cert.halfchain_value >= 0.5 - 1e-9 && cert.max_value >= 0.25 - 1e-9 &&
                cert.halfchain_value <= 2.0 * cert.max_value + 1e-9;
    return cert;
}

double liouvillian_identity_check(const DenseOperator& h_term, const DenseOperator& a) {
    if (!h_term.support.set_intersect(a.support).empty())
        throw std::domain_error("liouvillian_identity_check: supports must be disjoint");
    Region s = h_term.support.set_union(a.support);
    Matrix he = embed(h_term, s).mat;
    Matrix ae = embed(a, s).mat;
    Matrix comm = Complex(0.0, 1.0) * (he * ae - ae * he);
    return frobenius_norm(DenseOperator(s, std::move(comm)));
}

double liouvillian_reality_check(const DenseOperator& h, const DenseOperator& o1,
                                 const DenseOperator& o2) {
    if (!h.is_hermitian(1e-9) || !o1.is_hermitian(1e-9) || !o2.is_hermitian(1e-9))
        throw std::domain_error("liouvillian_reality_check: inputs must be Hermitian");
    Region s = h.support.set_union(o1.support).set_union(o2.support);
    Matrix he = embed(h, s).mat;
    Matrix o2e = embed(o2, s).mat;
    DenseOperator gen(s, Complex(0.0, 1.0) * (he * o2e - o2e * he));
    return std::abs(std::imag(pauli_inner(embed(o1, s), gen)));
}

int slot_of(int site, CopyTag copy, const RingLattice& lat) {
    if (!lat.valid_site(site)) throw std::domain_error("slot_of: site out of range");
    return copy == CopyTag::A ? site : lat.n + site;
}

CopySite inversion_map(int site, CopyTag copy, const RingLattice& lat) {
    CopySite out;
    out.site = lat.reduce(1 - static_cast<long long>(site));
    out.copy = (copy == CopyTag::A) ? CopyTag::B : CopyTag::A;
    return out;
}

namespace {

constexpr int kDenseSlotCap = 12;

Region doubled_full(const RingLattice& lat) {
    RingLattice big(2 * lat.n);
    return Region::full(big);
}

// Permutation unitary |z> -> |z'> with bit z'_{perm[u]} = z_u.
DenseOperator slot_permutation(const RingLattice& lat, const std::vector<int>& perm,
                               double scale = 1.0) {
    const int m = 2 * lat.n;
    if (m > kDenseSlotCap)
        throw std::domain_error("two-copy dense construction capped at 12 qubits");
    Region full = doubled_full(lat);
    Matrix u = Matrix::Zero(full.dim(), full.dim());
    for (std::int64_t f = 0; f < full.dim(); ++f) {
        std::int64_t g = 0;
        for (int s = 0; s < m; ++s)
            g |= ((f >> (m - 1 - s)) & 1) << (m - 1 - perm[s]);
        u(g, f) = scale;
    }
    return DenseOperator(full, std::move(u));
}

}  // namespace

Region doubled_region(const RingLattice& lat) { return doubled_full(lat); }

DenseOperator doubled_shift(const RingLattice& lat) {
    const int n = lat.n;
    // copy A: bit at slot i comes from slot i+1 (one-site shift); copy B the
    // inverse. As a slot permutation: content of slot u lands in perm[u].
    std::vector<int> perm(2 * n);
    for (int i = 0; i < n; ++i) {
        perm[i] = lat.reduce(i - 1);              // A: |z> -> |Tz>, (Tz)_i = z_{i+1}
        perm[n + i] = n + lat.reduce(i + 1);      // B: inverse shift
    }
    return slot_permutation(lat, perm);
}

DenseOperator inversion_unitary(const RingLattice& lat) {
    const int n = lat.n;
    std::vector<int> perm(2 * n);
    for (int i = 0; i < n; ++i) {
        CopySite img_a = inversion_map(i, CopyTag::A, lat);
        CopySite img_b = inversion_map(i, CopyTag::B, lat);
        perm[i] = slot_of(img_a.site, img_a.copy, lat);
        perm[n + i] = slot_of(img_b.site, img_b.copy, lat);
    }
    return slot_permutation(lat, perm);
}

DenseOperator swap_permutation(const RingLattice& lat,
                               const std::vector<std::pair<int, int>>& slot_pairs, double scale) {
    const int m = 2 * lat.n;
    std::vector<int> perm(m);
    for (int s = 0; s < m; ++s) perm[s] = s;
    for (const auto& [p, q] : slot_pairs) {
        if (p < 0 || q < 0 || p >= m || q >= m || perm[p] != p || perm[q] != q || p == q)
            throw std::domain_error("swap_permutation: pairs must be disjoint valid slots");
        perm[p] = q;
        perm[q] = p;
    }
    return slot_permutation(lat, perm, scale);
}

TwoCopyOperator swap_string(int big_l, bool shifted) {
    if (big_l < 1) throw std::domain_error("swap_string: L >= 1");
    RingLattice lat(4 * big_l);
    const int n = lat.n;
    const int d = shifted ? 1 : 0;

    TwoCopyOperator op;
    op.big_l = big_l;
    for (long long x = 1 - big_l; x <= big_l; ++x) {
        op.unit_slots.push_back(lat.reduce(x + d));
        op.unit_slots.push_back(n + lat.reduce(x - d));
    }
    for (long long x = big_l + 1; x <= 3 * big_l; ++x)
        op.swap_slots.emplace_back(lat.reduce(x + d), n + lat.reduce(1 - x - d));

    if (2 * n <= kDenseSlotCap) {
        op.has_dense = true;
        const double scale = std::pow(0.5, static_cast<double>(op.unit_slots.size()));
        op.dense = swap_permutation(lat, op.swap_slots, scale);
    }
    return op;
}

bool separability_check(const TwoCopyModel& m) {
    const int n = 4 * m.big_l;
    for (const TwoCopyTerm& t : m.terms) {
        if (t.slots.empty()) throw std::domain_error("separability_check: untagged term");
        bool in_a = false, in_b = false;
        for (int s : t.slots) {
            if (s < 0 || s >= 2 * n) throw std::domain_error("separability_check: slot out of range");
            (s < n ? in_a : in_b) = true;
        }
        if (in_a && in_b) return false;
    }
    return true;
}

DoubledSwapCircuit doubled_swap_circuit(const RingLattice& lat) {
    DoubledSwapCircuit c;
    c.model.big_l = lat.l;
    for (int x = 0; x < lat.n; ++x) {
        c.layer1.emplace_back(x, lat.n + x);
        c.layer2.emplace_back(x, lat.n + lat.reduce(x + 1));
    }
    for (const auto& layer : {c.layer1, c.layer2})
        for (const auto& [p, q] : layer) c.model.terms.push_back(TwoCopyTerm{{p, q}});
    return c;
}

}  // namespace shiftring
