// (C) Copyright 2026, shiftring contributors.
//
// Licensed under the Apache License, Version 2.0; you may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0.

#include "shiftring/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace shiftring {

namespace {

constexpr int kDenseCap = 12;

void check_cap(const RingLattice& lat) {
    if (lat.n > kDenseCap)
        throw std::length_error("dense cap exceeded: full-ring operators limited to 12 sites");
}

// Sum of the listed terms on a sub-region (all terms must fit inside it).
DenseOperator assemble_on(const std::vector<TwoSiteTerm>& terms, const Region& region) {
    Matrix acc = Matrix::Zero(region.dim(), region.dim());
    for (const auto& t : terms) add_embedded(t.op, region, Complex(1.0), acc);
    return DenseOperator(region, std::move(acc));
}

}  // namespace

DenseOperator propagate(const PropagatorPlan& plan) {
    check_cap(plan.model.lattice);
    Region full = Region::full(plan.model.lattice);
    if (plan.t_total == 0.0) return DenseOperator::identity(full);
    if (plan.t_total < 0.0) throw std::domain_error("propagate: t_total must be >= 0");
    if (plan.model.schedule.time_independent())
        return hermitian_expm(plan.model.assemble_static(), plan.t_total);
    if (plan.dt <= 0.0) throw std::domain_error("propagate: dt must be positive");
    double steps_real = plan.t_total / plan.dt;
    long long steps = std::llround(steps_real);
    if (steps < 1 || std::abs(steps_real - steps) > 1e-9)
        throw std::domain_error("propagate: t_total must be an integer number of dt steps");
    Matrix u = Matrix::Identity(full.dim(), full.dim());
    for (long long k = 0; k < steps; ++k) {
        double t_mid = (k + 0.5) * plan.dt;
        Matrix f = hermitian_expm(plan.model.assemble(t_mid).mat, plan.dt);
        if (plan.ordering == TimeOrdering::Forward)
            u = f * u;
        else
            u = u * f;
    }
    return DenseOperator(full, std::move(u));
}

DenseOperator heisenberg(const DenseOperator& u, const DenseOperator& a) {
    DenseOperator ae = embed(a, u.support);
    return DenseOperator(u.support, u.mat.adjoint() * ae.mat * u.mat);
}

DenseOperator project_region(const DenseOperator& a, const Region& s) {
    Region keep = s.set_intersect(a.support);
    Region traced = a.support.set_minus(keep);
    if (traced.empty()) return a;
    DenseOperator pt = partial_trace(a, traced);
    pt.mat /= static_cast<double>(traced.dim());
    return embed(pt, a.support);
}

DenseOperator haar_twirl_monte_carlo(const DenseOperator& a, const Region& s, int samples,
                                     std::uint64_t seed) {
    Region comp = a.support.set_minus(s.set_intersect(a.support));
    if (comp.empty()) return a;
    Matrix acc = Matrix::Zero(a.dim(), a.dim());
    for (int m = 0; m < samples; ++m) {
        DenseOperator v(comp, haar_unitary(comp.dim(), seed + static_cast<std::uint64_t>(m)));
        Matrix ve = embed(v, a.support).mat;
        acc += ve.adjoint() * a.mat * ve;
    }
    return DenseOperator(a.support, acc / static_cast<double>(samples));
}

SpectralEvolution::SpectralEvolution(const DenseOperator& h) : support(h.support) {
    if (!h.is_hermitian(1e-10)) throw std::domain_error("SpectralEvolution: non-Hermitian input");
    hermitian_eig(h.mat, evals, evecs);
}

Matrix SpectralEvolution::unitary(double t) const {
    Vector phases(evals.size());
    for (Eigen::Index i = 0; i < evals.size(); ++i) phases(i) = std::exp(Complex(0.0, -evals(i) * t));
    return evecs * phases.asDiagonal() * evecs.adjoint();
}

Matrix SpectralEvolution::to_eigenbasis(const Matrix& m) const {
    return evecs.adjoint() * m * evecs;
}

Matrix SpectralEvolution::conjugated_from_eigenbasis(const Matrix& b, double t) const {
    Vector phases(evals.size());
    for (Eigen::Index i = 0; i < evals.size(); ++i) phases(i) = std::exp(Complex(0.0, -evals(i) * t));
    Matrix y = phases.asDiagonal() * b;
    y = y * phases.conjugate().asDiagonal();
    return evecs * y * evecs.adjoint();
}

namespace {
// Gauss-Legendre nodes and the 4th-order commutator-free weights.
constexpr double kSqrt3 = 1.7320508075688772;
constexpr double kC1 = 0.5 - kSqrt3 / 6.0;
constexpr double kC2 = 0.5 + kSqrt3 / 6.0;
constexpr double kX1 = (3.0 - 2.0 * kSqrt3) / 12.0;
constexpr double kX2 = (3.0 + 2.0 * kSqrt3) / 12.0;
}  // namespace

Matrix time_ordered_exponential(const std::function<Matrix(double)>& hermitian_gen, double t_total,
                                int steps) {
    if (steps < 1) throw std::domain_error("time_ordered_exponential: steps must be >= 1");
    const double h = t_total / steps;
    Matrix a1 = hermitian_gen(kC1 * h);
    Matrix u = Matrix::Identity(a1.rows(), a1.cols());
    for (int k = 0; k < steps; ++k) {
        double t0 = k * h;
        if (k > 0) a1 = hermitian_gen(t0 + kC1 * h);
        Matrix a2 = hermitian_gen(t0 + kC2 * h);
        u = hermitian_expm(Matrix(kX1 * a1 + kX2 * a2), h) *
            (hermitian_expm(Matrix(kX2 * a1 + kX1 * a2), h) * u);
    }
    return u;
}

Matrix anti_ordered_exponential(const std::function<Matrix(double)>& hermitian_gen, double t_total,
                                int steps) {
    auto neg = [&](double t) { return Matrix(-hermitian_gen(t)); };
    return time_ordered_exponential(neg, t_total, steps).adjoint();
}

std::vector<std::vector<double>> commutator_front(const HamiltonianModel& h, const PauliString& a0,
                                                  const PauliString& b0,
                                                  const std::vector<double>& tgrid,
                                                  const std::vector<int>& xgrid) {
    check_cap(h.lattice);
    if (!h.schedule.time_independent())
        throw std::domain_error("commutator_front: time-independent schedules only");
    Region full = Region::full(h.lattice);
    SpectralEvolution se(h.assemble_static());
    Matrix b_full = embed(b0.to_dense(), full).mat;
    std::vector<std::vector<double>> table;
    for (double t : tgrid) {
        Matrix u = se.unitary(t);
        std::vector<double> row;
        for (int x : xgrid) {
            // translate the probe string to site x (letters follow their sites)
            std::vector<std::pair<int, PauliLetter>> moved;
            for (int q = 0; q < a0.support.size(); ++q)
                moved.emplace_back(h.lattice.reduce(a0.support.sites[q] + x), a0.letters[q]);
            std::sort(moved.begin(), moved.end());
            std::vector<long long> labels;
            std::vector<PauliLetter> letters;
            for (auto& [site, l] : moved) {
                labels.push_back(site);
                letters.push_back(l);
            }
            PauliString ax(Region(h.lattice, labels), std::move(letters), a0.phase);
            Matrix a_full = embed(ax.to_dense(), full).mat;
            Matrix at = u.adjoint() * a_full * u;
            row.push_back(operator_norm(Matrix(at * b_full - b_full * at)));
        }
        table.push_back(std::move(row));
    }
    return table;
}

double frobenius_leakage(const HamiltonianModel& h, const PauliString& a, int r, double t) {
    check_cap(h.lattice);
    Region s_r = a.support.expand(r);
    PropagatorPlan plan{h, t, std::min(0.01, t > 0 ? t : 0.01), TimeOrdering::Forward};
    DenseOperator u = propagate(plan);
    DenseOperator at = heisenberg(u, a.to_dense());
    DenseOperator proj = project_region(at, s_r);
    return frobenius_norm(DenseOperator(at.support, at.mat - proj.mat));
}

CutRun hhkl_cut_multi(const HamiltonianModel& h, Bond cut, double t_total,
                      const std::vector<int>& rs, double dt) {
    check_cap(h.lattice);
    if (!h.schedule.time_independent())
        throw std::domain_error("hhkl_cut_multi: time-independent schedules only");
    const RingLattice& lat = h.lattice;
    Region full = Region::full(lat);
    Region bond_sites(lat, {cut.a, cut.a + 1});

    std::vector<Region> grown;
    for (int r : rs) {
        Region s_r = bond_sites.expand(r);
        if (s_r.size() >= lat.n)
            throw std::domain_error("hhkl_cut_multi: grown region wraps the full ring");
        grown.push_back(std::move(s_r));
    }

    auto [cut_part, rest] = split_cut(h, cut, lat.n / 2 + 1);

    CutRun run;
    if (t_total == 0.0 || cut_part.terms.empty()) {
        run.u_op = (t_total == 0.0)
                       ? DenseOperator::identity(full)
                       : hermitian_expm(rest.assemble_static(), t_total);
        for (size_t i = 0; i < rs.size(); ++i)
            run.cuts.push_back({rs[i], DenseOperator::identity(grown[i]), 0.0, 0.0, 0.0});
        return run;
    }

    if (dt <= 0.0) dt = std::min(0.01, t_total);
    int steps = static_cast<int>(std::ceil(t_total / dt - 1e-9));
    const double hstep = t_total / steps;

    SpectralEvolution se_op(rest.assemble_static());
    Matrix b_cut = se_op.to_eigenbasis(cut_part.assemble_static().mat);

    struct PerR {
        Matrix omega;                 // accumulating patch unitary on S_r
        double duhamel = 0.0;
    };
    std::vector<PerR> acc(rs.size());
    for (size_t i = 0; i < rs.size(); ++i)
        acc[i].omega = Matrix::Identity(grown[i].dim(), grown[i].dim());

    for (int k = 0; k < steps; ++k) {
        const double t0 = k * hstep;
        const double tnode[2] = {t0 + kC1 * hstep, t0 + kC2 * hstep};
        std::vector<std::vector<Matrix>> node_small(2);  // [node][r]
        for (int nd = 0; nd < 2; ++nd) {
            Matrix h01_t = se_op.conjugated_from_eigenbasis(b_cut, tnode[nd]);
            DenseOperator h01(full, std::move(h01_t));
            for (size_t i = 0; i < rs.size(); ++i) {
                Region traced = full.set_minus(grown[i]);
                DenseOperator small = partial_trace(h01, traced);
                small.mat /= static_cast<double>(traced.dim());
                Matrix diff = h01.mat;
                add_embedded(small, full, Complex(-1.0), diff);
                acc[i].duhamel += 0.5 * hstep * operator_norm(diff);
                node_small[nd].push_back(std::move(small.mat));
            }
        }
        for (size_t i = 0; i < rs.size(); ++i) {
            const Matrix& a1 = node_small[0][i];
            const Matrix& a2 = node_small[1][i];
            // anti-ordering: latest factors rightmost
            acc[i].omega = acc[i].omega * hermitian_expm(Matrix(kX2 * a1 + kX1 * a2), hstep) *
                           hermitian_expm(Matrix(kX1 * a1 + kX2 * a2), hstep);
        }
    }

    run.u_op = DenseOperator(full, se_op.unitary(t_total));
    Matrix u_total = hermitian_expm(h.assemble_static(), t_total).mat;
    Matrix d = u_total * run.u_op.mat.adjoint();
    u_total.resize(0, 0);
    for (size_t i = 0; i < rs.size(); ++i) {
        DenseOperator u0(grown[i], std::move(acc[i].omega));
        Matrix diff = d;
        add_embedded(u0, full, Complex(-1.0), diff);
        double err = operator_norm(diff);
        run.cuts.push_back({rs[i], std::move(u0), err, acc[i].duhamel, 10.0 * hstep});
    }
    return run;
}

CutResult hhkl_cut(const HamiltonianModel& h, Bond cut, double t_total, int r, double dt) {
    return hhkl_cut_multi(h, cut, t_total, {r}, dt).cuts.at(0);
}

CircuitApprox CircuitApprox::from_blocks(const RingLattice& lat, DenseOperator u_l,
                                         DenseOperator u_r, DenseOperator u_0, DenseOperator u_i) {
    CircuitRegions cr = circuit_regions(lat);
    if (!(u_l.support == cr.left) || !(u_r.support == cr.right) ||
        !(u_0.support == cr.cut_a_block) || !(u_i.support == cr.cut_b_block))
        throw std::domain_error("CircuitApprox: block supports do not match the circuit geometry");
    Region full = Region::full(lat);
    Matrix assembled = embed(u_i, full).mat * embed(u_0, full).mat *
                       (embed(u_l, full).mat * embed(u_r, full).mat);
    CircuitApprox ca{std::move(u_l), std::move(u_r), std::move(u_0), std::move(u_i),
                     DenseOperator(full, std::move(assembled))};
    return ca;
}

CircuitizeReport circuitize(const HamiltonianModel& h, double t_total, const BoundParams& params,
                            int ell_override, double dt) {
    check_cap(h.lattice);
    if (!h.schedule.time_independent())
        throw std::domain_error("circuitize: time-independent schedules only");
    const RingLattice& lat = h.lattice;
    CircuitRegions cr = circuit_regions(lat);
    const int big_l = lat.l;
    Region full = Region::full(lat);

    CircuitizeReport rep;
    if (t_total == 0.0) {
        rep.ca = CircuitApprox::from_blocks(lat, DenseOperator::identity(cr.left),
                                            DenseOperator::identity(cr.right),
                                            DenseOperator::identity(cr.cut_a_block),
                                            DenseOperator::identity(cr.cut_b_block));
        return rep;
    }

    HamiltonianModel base = h;
    if (h.kind == ModelKind::PowerLaw) {
        NormMode mode = (h.alpha > 2.0) ? NormMode::Operator : NormMode::Frobenius;
        int ell = ell_rule(t_total, h.alpha, params.effective_c_alpha(h.alpha), mode);
        if (ell_override > 0) {
            rep.regime_check_bypassed = (ell > 0.1 * big_l);
            ell = ell_override;
        } else if (ell > 0.1 * big_l) {
            throw std::domain_error("circuitize: cut length exceeds 0.1 L; configuration rejected");
        }
        rep.ell = ell;
        auto [far, kept] = split_far(h, ell);
        rep.far_budget = t_total * norm_tail(far, NormMode::Operator);
        base = std::move(kept);
    }

    const int r = big_l - 2;
    CutRun cut_a = hhkl_cut_multi(base, Bond{0}, t_total, {r}, dt);
    rep.cut_a_err = cut_a.cuts[0].err;
    rep.cut_a_bound = cut_a.cuts[0].duhamel;

    HamiltonianModel mid = split_cut(base, Bond{0}, lat.n / 2 + 1).second;
    CutRun cut_b = hhkl_cut_multi(mid, Bond{2 * big_l}, t_total, {r}, dt);
    rep.cut_b_err = cut_b.cuts[0].err;
    rep.cut_b_bound = cut_b.cuts[0].duhamel;
    rep.slack = std::max(cut_a.cuts[0].slack, cut_b.cuts[0].slack);

    // half-chain blocks from the terms strictly inside each half
    HamiltonianModel inner = split_cut(mid, Bond{2 * big_l}, lat.n / 2 + 1).second;
    std::vector<TwoSiteTerm> left_terms, right_terms;
    for (const auto& t : inner.terms)
        (cr.left.contains(t.x) ? left_terms : right_terms).push_back(t);
    DenseOperator u_l = hermitian_expm(assemble_on(left_terms, cr.left), t_total);
    DenseOperator u_r = hermitian_expm(assemble_on(right_terms, cr.right), t_total);

    // sanity: the open evolution of the second cut factorizes over the halves
    Matrix lr = embed(u_l, full).mat * embed(u_r, full).mat;
    if (operator_norm(Matrix(lr - cut_b.u_op.mat)) > 1e-8)
        throw std::logic_error("circuitize: half-chain factorization failed");

    rep.ca = CircuitApprox::from_blocks(lat, std::move(u_l), std::move(u_r),
                                        std::move(cut_a.cuts[0].u0), std::move(cut_b.cuts[0].u0));
    Matrix u_full = hermitian_expm(h.assemble_static(), t_total).mat;
    rep.err_total = operator_norm(Matrix(u_full - rep.ca.assembled.mat));
    return rep;
}

}  // namespace shiftring
