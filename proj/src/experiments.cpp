// (C) Copyright 2026, shiftring contributors.
//
// Licensed under the Apache License, Version 2.0; you may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0.

#include "shiftring/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace shiftring {

namespace {

std::uint64_t sub_seed(std::uint64_t master, std::uint64_t index) {
    // splitmix-style expansion of one master seed into independent streams
    std::uint64_t z = master + 0x9e3779b97f4a7c15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

Matrix random_ginibre(std::int64_t dim, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix m(dim, dim);
    for (std::int64_t i = 0; i < dim; ++i)
        for (std::int64_t j = 0; j < dim; ++j) m(i, j) = Complex(gauss(rng), gauss(rng));
    return m;
}

DenseOperator random_hermitian(const Region& s, std::uint64_t seed) {
    Matrix g = random_ginibre(s.dim(), seed);
    return DenseOperator(s, Matrix(0.5 * (g + g.adjoint())));
}

std::vector<int> random_bits(int count, std::mt19937_64& rng) {
    std::vector<int> z(count);
    for (int& b : z) b = static_cast<int>(rng() & 1ull);
    return z;
}

}  // namespace

CircuitApprox random_circuit(const RingLattice& lat, std::uint64_t seed) {
    CircuitRegions cr = circuit_regions(lat);
    DenseOperator u_l(cr.left, haar_unitary(cr.left.dim(), sub_seed(seed, 0)));
    DenseOperator u_r(cr.right, haar_unitary(cr.right.dim(), sub_seed(seed, 1)));
    DenseOperator u_0(cr.cut_a_block, haar_unitary(cr.cut_a_block.dim(), sub_seed(seed, 2)));
    DenseOperator u_i(cr.cut_b_block, haar_unitary(cr.cut_b_block.dim(), sub_seed(seed, 3)));
    return CircuitApprox::from_blocks(lat, std::move(u_l), std::move(u_r), std::move(u_0),
                                      std::move(u_i));
}

LemmaSweepReport lemma_sweep(int big_l, int tuples, int z_per_tuple, std::uint64_t seed) {
    RingLattice lat(4 * big_l);
    LemmaSweepReport rep;
    rep.tuples = tuples;
    rep.z_per_tuple = z_per_tuple;
    rep.min_distance = 2.0;
    rep.pass = true;
    std::mt19937_64 zrng(sub_seed(seed, 999));
    for (int s = 0; s < tuples; ++s) {
        CircuitApprox ca = random_circuit(lat, sub_seed(seed, s));
        for (int k = 0; k < z_per_tuple; ++k) {
            std::vector<int> z = random_bits(2 * big_l, zrng);
            ShiftCertificate cert = shift_state_certificate(ca, z);
            rep.min_distance = std::min(rep.min_distance, cert.distance);
            rep.max_spectral_norm = std::max(rep.max_spectral_norm, cert.spectral_norm);
            rep.pass = rep.pass && cert.pass;
        }
    }
    rep.pass = rep.pass && rep.min_distance >= 0.5 - 1e-9;
    return rep;
}

SpectralSweepReport spectral_sweep(int big_l, int samples, std::uint64_t seed) {
    RingLattice lat(4 * big_l);
    CircuitRegions cr = circuit_regions(lat);
    std::vector<int> z(2 * big_l, 0);
    DensityMatrix rho_f = shifted_state(lat, hard_state(lat, z));

    SpectralSweepReport rep;
    rep.samples = samples;
    rep.limit = std::pow(2.0, -static_cast<double>(big_l) - 1.0);
    for (int s = 0; s < samples; ++s) {
        Matrix u0 = embed(DenseOperator(cr.cut_a_block,
                                        haar_unitary(cr.cut_a_block.dim(), sub_seed(seed, s))),
                          rho_f.support)
                        .mat;
        DenseOperator conj(rho_f.support, u0.adjoint() * rho_f.mat * u0);
        rep.max_norm = std::max(rep.max_norm, operator_norm(partial_trace(conj, cr.right)));
    }
    rep.pass = rep.max_norm <= rep.limit + 1e-9;
    return rep;
}

FidelitySweepReport fidelity_sweep(int tuples, std::uint64_t seed) {
    RingLattice lat(8);
    FidelitySweepReport rep;
    rep.tuples = tuples;
    rep.min_link = 2.0;
    rep.min_frob = 2.0;
    rep.pass = true;
    for (int s = 0; s < tuples; ++s) {
        FidelityChainReport r = fidelity_chain(random_circuit(lat, sub_seed(seed, s)));
        rep.min_link = std::min(rep.min_link, r.min_link);
        rep.min_frob = std::min(rep.min_frob, r.frob_from_links);
        rep.max_identity_error =
            std::max(rep.max_identity_error, std::abs(r.frob_from_links - r.frob_direct));
        rep.pass = rep.pass && r.pass;
    }
    rep.pass = rep.pass && rep.min_link >= 1.0 / 16.0 - 1e-9 && rep.min_frob >= 0.25 - 1e-9 &&
               rep.max_identity_error <= 1e-9;
    return rep;
}

SuperSweepReport super_sweep(int tuples, std::uint64_t seed) {
    RingLattice lat(8);
    SuperSweepReport rep;
    rep.tuples = tuples;
    rep.min_halfchain = 1e300;
    rep.min_max_value = 1e300;
    rep.pass = true;
    for (int s = 0; s < tuples; ++s) {
        SuperLemmaCertificate cert = super_lemma_certificate(random_circuit(lat, sub_seed(seed, s)));
        if (cert.max_value < rep.min_max_value) {
            rep.min_max_value = cert.max_value;
            rep.worst_pauli = cert.max_pauli.text();
        }
        rep.min_halfchain = std::min(rep.min_halfchain, cert.halfchain_value);
        rep.pass = rep.pass && cert.pass;
    }
    rep.pass = rep.pass && rep.min_halfchain >= 0.5 - 1e-9 && rep.min_max_value >= 0.25 - 1e-9;
    return rep;
}

LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) throw std::domain_error("linear_fit: need >= 2 points");
    const double m = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
        syy += y[i] * y[i];
    }
    LinearFit fit;
    const double den = m * sxx - sx * sx;
    if (std::abs(den) < 1e-300) throw std::domain_error("linear_fit: degenerate abscissa");
    fit.slope = (m * sxy - sx * sy) / den;
    fit.intercept = (sy - fit.slope * sx) / m;
    double ss_res = 0.0, ss_tot = 0.0;
    const double ybar = sy / m;
    for (size_t i = 0; i < x.size(); ++i) {
        const double fi = fit.intercept + fit.slope * x[i];
        ss_res += (y[i] - fi) * (y[i] - fi);
        ss_tot += (y[i] - ybar) * (y[i] - ybar);
    }
    fit.r2 = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
    return fit;
}

DecayReport hhkl_decay_experiment(int n, double t_total, const std::vector<int>& rs, double dt,
                                  std::uint64_t seed) {
    RingLattice lat(n);
    HamiltonianModel model = build_nearest_neighbor(lat, seed);
    DecayReport rep;
    rep.run = hhkl_cut_multi(model, Bond{0}, t_total, rs, dt);

    rep.strictly_decreasing = true;
    rep.duhamel_ok = true;
    std::vector<double> xs, ys;
    for (size_t i = 0; i < rep.run.cuts.size(); ++i) {
        const CutResult& c = rep.run.cuts[i];
        if (i > 0 && !(c.err < rep.run.cuts[i - 1].err)) rep.strictly_decreasing = false;
        if (!(c.err <= c.duhamel + c.slack)) rep.duhamel_ok = false;
        if (c.err > 1e-14) {
            xs.push_back(static_cast<double>(c.r));
            ys.push_back(std::log(c.err));
        }
    }
    if (xs.size() >= 2) rep.fit = linear_fit(xs, ys);
    rep.pass = rep.strictly_decreasing && rep.duhamel_ok && rep.fit.slope < 0.0 && rep.fit.r2 > 0.9;
    return rep;
}

ProjectorReport haar_projector_experiment(int n_sites, int samples, std::uint64_t seed) {
    if (n_sites < 2 || n_sites > 10)
        throw std::domain_error("haar_projector_experiment: 2 <= n <= 10");
    Region full;
    full.n = n_sites;
    for (int i = 0; i < n_sites; ++i) full.sites.push_back(i);

    ProjectorReport rep;
    rep.samples = samples;
    rep.tolerance = 5.0 * static_cast<double>(full.dim()) / std::sqrt(static_cast<double>(samples));
    std::mt19937_64 rng(sub_seed(seed, 0));
    for (int cases = 0; cases < 3; ++cases) {
        // a random kept region of n/2 sites
        std::vector<int> perm(n_sites);
        for (int i = 0; i < n_sites; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        Region kept;
        kept.n = n_sites;
        kept.sites.assign(perm.begin(), perm.begin() + n_sites / 2);
        std::sort(kept.sites.begin(), kept.sites.end());

        Matrix g = random_ginibre(full.dim(), sub_seed(seed, 100 + cases));
        DenseOperator a(full, g / operator_norm(g));
        DenseOperator exact = project_region(a, kept);
        DenseOperator mc = haar_twirl_monte_carlo(a, kept, samples, sub_seed(seed, 200 + cases));
        rep.max_deviation =
            std::max(rep.max_deviation, frobenius_norm(DenseOperator(full, mc.mat - exact.mat)));
    }
    rep.pass = rep.max_deviation <= rep.tolerance;
    return rep;
}

LiouvillianReport liouvillian_experiment(int samples, std::uint64_t seed) {
    RingLattice lat(8);
    LiouvillianReport rep;
    rep.samples = samples;
    std::mt19937_64 rng(sub_seed(seed, 0));
    for (int s = 0; s < samples; ++s) {
        // disjoint random pairs of sites
        std::vector<int> perm(lat.n);
        for (int i = 0; i < lat.n; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        Region sh(lat, {perm[0], perm[1]});
        Region sa(lat, {perm[2], perm[3]});
        DenseOperator h = random_hermitian(sh, sub_seed(seed, 2 * s));
        DenseOperator a(sa, random_ginibre(sa.dim(), sub_seed(seed, 2 * s + 1)));
        rep.max_identity = std::max(rep.max_identity, liouvillian_identity_check(h, a));

        Region so(lat, {perm[0], perm[1], perm[2]});
        DenseOperator hh = random_hermitian(so, sub_seed(seed, 1000 + 3 * s));
        DenseOperator o1 = random_hermitian(so, sub_seed(seed, 1001 + 3 * s));
        DenseOperator o2 = random_hermitian(so, sub_seed(seed, 1002 + 3 * s));
        rep.max_reality = std::max(rep.max_reality, liouvillian_reality_check(hh, o1, o2));
    }
    rep.pass = rep.max_identity <= 1e-10 && rep.max_reality <= 1e-10;
    return rep;
}

SptReport spt_experiment() {
    RingLattice lat(4);
    SptReport rep;
    DenseOperator w = doubled_shift(lat);
    TwoCopyOperator si = swap_string(1, false);
    TwoCopyOperator sf = swap_string(1, true);
    Matrix conj = w.mat.adjoint() * si.dense.mat * w.mat;
    rep.conjugation_error = (conj - sf.dense.mat).cwiseAbs().maxCoeff();

    DenseOperator r = inversion_unitary(lat);
    const std::int64_t dim = r.dim();
    rep.involution_ok =
        (r.mat * r.mat - Matrix::Identity(dim, dim)).cwiseAbs().maxCoeff() <= 1e-12;
    rep.commutes_ok = (r.mat * w.mat - w.mat * r.mat).cwiseAbs().maxCoeff() <= 1e-12;

    DoubledSwapCircuit circuit = doubled_swap_circuit(lat);
    DenseOperator layer1 = swap_permutation(lat, circuit.layer1, 1.0);
    DenseOperator layer2 = swap_permutation(lat, circuit.layer2, 1.0);
    rep.circuit_error = (layer2.mat * layer1.mat - w.mat).cwiseAbs().maxCoeff();
    rep.circuit_separable = separability_check(circuit.model);

    rep.pass = rep.conjugation_error <= 1e-12 && rep.involution_ok && rep.commutes_ok &&
               rep.circuit_error <= 1e-12 && !rep.circuit_separable;
    return rep;
}

LeakageScan leakage_scan(int n_sites, double alpha, const std::vector<double>& ts,
                         const std::vector<int>& rs, std::uint64_t seed) {
    RingLattice lat(n_sites);
    HamiltonianModel model = build_powerlaw(lat, alpha, 1.0, seed, true);
    SpectralEvolution se(model.assemble_static());

    Region full = Region::full(lat);
    PauliString a0 = PauliString::single(lat, 0, PauliLetter::X);
    Matrix b = se.to_eigenbasis(a0.embedded(full).to_dense().mat);

    LeakageScan scan;
    scan.n_sites = n_sites;
    scan.alpha = alpha;
    for (double t : ts) {
        // Heisenberg picture: A(t) = exp(+iHt) A exp(-iHt)
        Matrix at = se.conjugated_from_eigenbasis(b, -t);
        for (int r : rs) {
            Region kept = Region::single(lat, 0).expand(r);
            DenseOperator proj = project_region(DenseOperator(full, at), kept);
            Matrix diff = at - proj.mat;
            scan.op_points.push_back({t, static_cast<double>(r), operator_norm(diff)});
            scan.fb_points.push_back(
                {t, static_cast<double>(r), frobenius_norm(DenseOperator(full, diff))});
        }
    }
    return scan;
}

MajorizationReport majorization_experiment(const LeakageScan& scan) {
    MajorizationReport rep;
    rep.alpha = scan.alpha;
    rep.fitted = BoundParams{};
    rep.fitted.source = ParamSource::Fitted;

    // operator envelope: keep the default velocity/softening, inflate the
    // prefactor to the worst in-window ratio
    BoundParams unit;
    unit.c_lr = 1.0;
    double worst = 0.0;
    for (const ScanPoint& pt : scan.op_points) {
        auto shape = lr_leakage_bound(pt.t, pt.r, scan.alpha, unit);
        if (shape && *shape > 0.0) worst = std::max(worst, pt.value / *shape);
    }
    if (worst <= 0.0) throw std::runtime_error("majorization_experiment: no in-window points");
    rep.fitted.c_lr = worst * (1.0 + 1e-9);

    FitReport fb_fit = fit_front(scan.fb_points, FrontModel::PowerLawFront, scan.alpha);
    rep.fitted.c_fb = fb_fit.params.c_fb;

    rep.worst_op_ratio = 0.0;
    for (const ScanPoint& pt : scan.op_points) {
        auto bound = lr_leakage_bound(pt.t, pt.r, scan.alpha, rep.fitted);
        if (bound) rep.worst_op_ratio = std::max(rep.worst_op_ratio, pt.value / *bound);
    }
    rep.worst_fb_ratio = 0.0;
    for (const ScanPoint& pt : scan.fb_points)
        rep.worst_fb_ratio = std::max(
            rep.worst_fb_ratio, pt.value / frobenius_leakage_bound(pt.t, pt.r, scan.alpha, rep.fitted));

    rep.fb_le_op = true;
    for (size_t i = 0; i < scan.fb_points.size(); ++i)
        if (scan.fb_points[i].value > scan.op_points[i].value + 1e-9) rep.fb_le_op = false;

    rep.pass = rep.worst_op_ratio <= 1.0 + 1e-9 && rep.worst_fb_ratio <= 1.0 + 1e-9 && rep.fb_le_op;
    return rep;
}

std::vector<ThresholdRow> bounds_table(const std::vector<double>& alphas,
                                       const std::vector<int>& ls, double eps,
                                       const BoundParams& p) {
    const std::pair<ThresholdSource, const char*> sources[] = {
        {ThresholdSource::Main, "main"},
        {ThresholdSource::OperatorRoute, "operator"},
        {ThresholdSource::FrobeniusRoute, "frobenius"},
    };
    std::vector<ThresholdRow> rows;
    for (double alpha : alphas)
        for (int l : ls)
            for (const auto& [src, name] : sources) {
                if (src == ThresholdSource::OperatorRoute && alpha <= 2.0) continue;
                rows.push_back({alpha, l, name, time_threshold(alpha, l, eps, p, src)});
            }
    return rows;
}

NormOrderReport norm_order_experiment(int samples, std::uint64_t seed) {
    RingLattice lat(4);
    Region full = Region::full(lat);
    NormOrderReport rep;
    rep.samples = samples;
    const double dim = static_cast<double>(full.dim());
    for (int s = 0; s < samples; ++s) {
        DenseOperator a(full, random_ginibre(full.dim(), sub_seed(seed, 2 * s)));
        DenseOperator b(full, random_ginibre(full.dim(), sub_seed(seed, 2 * s + 1)));
        const double fa = frobenius_norm(a), oa = operator_norm(a), ta = trace_norm(a);
        const double fb = frobenius_norm(b), tb = trace_norm(b);
        rep.max_violation = std::max(rep.max_violation, fa - oa);
        rep.max_violation = std::max(rep.max_violation, oa - ta);
        const double pairing = std::abs((a.mat.adjoint() * b.mat).trace());
        rep.max_violation = std::max(rep.max_violation, pairing - oa * tb);    // Hoelder
        rep.max_violation = std::max(rep.max_violation, pairing / dim - fa * fb);  // Cauchy-Schwarz
    }
    rep.pass = rep.max_violation <= 1e-9;
    return rep;
}

EndToEndSuite end_to_end_suite(std::uint64_t seed) {
    RingLattice lat(8);
    BoundParams params;
    EndToEndSuite suite;
    suite.pass = true;
    HamiltonianModel nn = build_nearest_neighbor(lat, sub_seed(seed, 0));
    for (double t : {0.0, 0.25, 0.5}) suite.verdicts.push_back(end_to_end(nn, t, params));
    HamiltonianModel pl = build_powerlaw(lat, 3.0, 1.0, sub_seed(seed, 1), true);
    suite.verdicts.push_back(end_to_end(pl, 0.25, params));
    for (const EndToEndVerdict& v : suite.verdicts)
        suite.pass = suite.pass && v.pass && v.triangle_ok;
    return suite;
}

}  // namespace shiftring
