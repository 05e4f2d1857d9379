// (C) Copyright 2026, shiftring contributors.
//
// Licensed under the Apache License, Version 2.0; you may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0.

#include "shiftring/hamiltonian.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include <json.hpp>

namespace shiftring {

double Schedule::multiplier(int term, double t) const {
    if (time_independent()) return 1.0;
    auto it = std::upper_bound(boundaries.begin(), boundaries.end(), t);
    int interval = static_cast<int>(it - boundaries.begin()) - 1;
    interval = std::clamp(interval, 0, static_cast<int>(multipliers.size()) - 1);
    return multipliers[interval][term];
}

namespace {

// Random traceless Hermitian coupling on {x, y} rescaled to target_norm.
TwoSiteTerm random_term(const RingLattice& lat, int x, int y, double target_norm,
                        std::mt19937_64& rng) {
    Region supp(lat, {x, y});
    auto basis = enumerate_paulis(supp);  // index 0 is the identity string
    std::normal_distribution<double> gauss;
    std::vector<double> coeffs(15);
    for (double& c : coeffs) c = gauss(rng);
    std::vector<std::pair<PauliString, Complex>> expansion;
    for (int i = 0; i < 15; ++i) expansion.emplace_back(basis[i + 1], Complex(coeffs[i]));
    DenseOperator op = pauli_reconstruct(expansion, supp);
    double nrm = operator_norm(op);
    if (nrm <= 0.0) throw std::runtime_error("random_term: degenerate draw");
    double scale = target_norm / nrm;
    for (double& c : coeffs) c *= scale;
    op.mat *= scale;
    TwoSiteTerm term;
    term.x = supp.sites[0];
    term.y = supp.sites[1];
    term.coeffs = std::move(coeffs);
    term.op = std::move(op);
    return term;
}

}  // namespace

DenseOperator HamiltonianModel::assemble(double t) const {
    Region full = Region::full(lattice);
    Matrix acc = Matrix::Zero(full.dim(), full.dim());
    for (size_t i = 0; i < terms.size(); ++i) {
        double m = schedule.multiplier(static_cast<int>(i), t);
        if (m != 0.0) add_embedded(terms[i].op, full, Complex(m), acc);
    }
    return DenseOperator(full, std::move(acc));
}

DenseOperator HamiltonianModel::assemble_static() const {
    Region full = Region::full(lattice);
    Matrix acc = Matrix::Zero(full.dim(), full.dim());
    for (const auto& term : terms) add_embedded(term.op, full, Complex(1.0), acc);
    return DenseOperator(full, std::move(acc));
}

HamiltonianModel build_powerlaw(const RingLattice& lat, double alpha, double k,
                                std::uint64_t seed, bool saturate) {
    if (alpha <= 1.0) throw std::domain_error("build_powerlaw: requires alpha > 1");
    if (k <= 0.0) throw std::domain_error("build_powerlaw: requires k > 0");
    HamiltonianModel model;
    model.lattice = lat;
    model.kind = ModelKind::PowerLaw;
    model.alpha = alpha;
    model.strength = k;
    model.seed = seed;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int x = 0; x < lat.n; ++x)
        for (int y = x + 1; y < lat.n; ++y) {
            double budget = k * std::pow(ring_distance(x, y, lat), -alpha);
            if (!saturate) budget *= unif(rng);
            model.terms.push_back(random_term(lat, x, y, budget, rng));
        }
    return model;
}

HamiltonianModel build_nearest_neighbor(const RingLattice& lat, std::uint64_t seed) {
    HamiltonianModel model;
    model.lattice = lat;
    model.kind = ModelKind::NearestNeighbor;
    model.seed = seed;
    std::mt19937_64 rng(seed);
    for (int x = 0; x < lat.n; ++x)
        model.terms.push_back(random_term(lat, x, lat.reduce(x + 1), 1.0, rng));
    return model;
}

namespace {

HamiltonianModel like(const HamiltonianModel& h) {
    HamiltonianModel out;
    out.lattice = h.lattice;
    out.kind = h.kind;
    out.alpha = h.alpha;
    out.strength = h.strength;
    out.seed = h.seed;
    out.schedule = h.schedule;
    return out;
}

// Partition the terms; the schedule multipliers follow their terms.
std::pair<HamiltonianModel, HamiltonianModel> partition(
    const HamiltonianModel& h, const std::vector<bool>& in_first) {
    auto a = like(h);
    auto b = like(h);
    std::vector<std::vector<double>> ma(h.schedule.multipliers.size()),
        mb(h.schedule.multipliers.size());
    for (size_t i = 0; i < h.terms.size(); ++i) {
        auto& dst = in_first[i] ? a : b;
        dst.terms.push_back(h.terms[i]);
        for (size_t s = 0; s < h.schedule.multipliers.size(); ++s)
            (in_first[i] ? ma : mb)[s].push_back(h.schedule.multipliers[s][i]);
    }
    if (!h.schedule.time_independent()) {
        a.schedule.multipliers = std::move(ma);
        b.schedule.multipliers = std::move(mb);
    }
    return {std::move(a), std::move(b)};
}

}  // namespace

std::pair<HamiltonianModel, HamiltonianModel> split_far(const HamiltonianModel& h, int ell) {
    if (ell <= 0) throw std::domain_error("split_far: ell must be positive");
    CircuitRegions cr = circuit_regions(h.lattice);
    std::vector<bool> far(h.terms.size());
    for (size_t i = 0; i < h.terms.size(); ++i) {
        const auto& t = h.terms[i];
        bool crosses = cr.left.contains(t.x) != cr.left.contains(t.y);
        far[i] = crosses && ring_distance(t.x, t.y, h.lattice) >= ell;
    }
    return partition(h, far);
}

int through_bond_length(int x, int y, Bond cut, const RingLattice& lat) {
    auto fwd = [&](int from, int to) { return lat.reduce(to - from); };
    int a = lat.reduce(cut.a), b = lat.reduce(cut.a + 1);
    int len_xy = fwd(x, a) + 1 + fwd(b, y);
    int len_yx = fwd(y, a) + 1 + fwd(b, x);
    return std::min(len_xy, len_yx);
}

std::pair<HamiltonianModel, HamiltonianModel> split_cut(const HamiltonianModel& h, Bond cut,
                                                        int ell) {
    if (ell <= 0) throw std::domain_error("split_cut: ell must be positive");
    if (!h.lattice.valid_site(h.lattice.reduce(cut.a))) throw std::domain_error("split_cut: bad bond");
    std::vector<bool> straddles(h.terms.size());
    for (size_t i = 0; i < h.terms.size(); ++i)
        straddles[i] = through_bond_length(h.terms[i].x, h.terms[i].y, cut, h.lattice) < ell;
    return partition(h, straddles);
}

int ell_rule(double t_total, double alpha, double c_alpha, NormMode mode) {
    if (t_total <= 0.0) throw std::domain_error("ell_rule: requires T > 0");
    double expo;
    if (mode == NormMode::Operator) {
        if (alpha <= 2.0) throw std::domain_error("ell_rule: operator mode requires alpha > 2");
        expo = 1.0 / (alpha - 2.0);
    } else {
        if (alpha <= 1.0) throw std::domain_error("ell_rule: frobenius mode requires alpha > 1");
        expo = 1.0 / (alpha - 1.0);
    }
    double v = std::pow(16.0 * c_alpha * t_total, expo);
    int ell = static_cast<int>(std::ceil(v - 1e-12));
    return std::max(ell, 1);
}

double norm_tail(const HamiltonianModel& h, NormMode mode) {
    if (mode == NormMode::Operator) {
        double s = 0.0;
        for (const auto& t : h.terms) s += operator_norm(t.op);
        return s;
    }
    double s2 = 0.0;
    for (const auto& t : h.terms) {
        double f = frobenius_norm(t.op);
        s2 += f * f;
    }
    return std::sqrt(s2);
}

double tail_constant(double alpha) {
    if (alpha <= 1.0) throw std::domain_error("tail_constant: requires alpha > 1");
    const long long cap = 1000000;
    double s = 0.0;
    for (long long r = cap; r >= 1; --r) s += std::pow(static_cast<double>(r), 1.0 - alpha);
    if (alpha > 2.0) s += std::pow(static_cast<double>(cap), 2.0 - alpha) / (alpha - 2.0);
    return 2.0 * s;
}

std::string model_to_json(const HamiltonianModel& h) {
    nlohmann::json j;
    j["n"] = h.lattice.n;
    j["kind"] = (h.kind == ModelKind::PowerLaw) ? "power-law" : "nearest-neighbor";
    j["alpha"] = h.alpha;
    j["strength"] = h.strength;
    j["seed"] = h.seed;
    j["terms"] = nlohmann::json::array();
    for (const auto& t : h.terms)
        j["terms"].push_back({{"x", t.x}, {"y", t.y}, {"coeffs", t.coeffs}});
    j["schedule"] = {{"boundaries", h.schedule.boundaries},
                     {"multipliers", h.schedule.multipliers}};
    return j.dump(2);
}

HamiltonianModel model_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    HamiltonianModel h;
    h.lattice = RingLattice(j.at("n").get<int>());
    h.kind = (j.at("kind").get<std::string>() == "power-law") ? ModelKind::PowerLaw
                                                              : ModelKind::NearestNeighbor;
    h.alpha = j.at("alpha").get<double>();
    h.strength = j.at("strength").get<double>();
    h.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& jt : j.at("terms")) {
        TwoSiteTerm t;
        t.x = jt.at("x").get<int>();
        t.y = jt.at("y").get<int>();
        t.coeffs = jt.at("coeffs").get<std::vector<double>>();
        Region supp(h.lattice, {t.x, t.y});
        auto basis = enumerate_paulis(supp);
        std::vector<std::pair<PauliString, Complex>> expansion;
        for (int i = 0; i < 15; ++i) expansion.emplace_back(basis[i + 1], Complex(t.coeffs[i]));
        t.op = pauli_reconstruct(expansion, supp);
        h.terms.push_back(std::move(t));
    }
    h.schedule.boundaries = j.at("schedule").at("boundaries").get<std::vector<double>>();
    h.schedule.multipliers =
        j.at("schedule").at("multipliers").get<std::vector<std::vector<double>>>();
    return h;
}

}  // namespace shiftring
