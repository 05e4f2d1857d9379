// (C) Copyright 2026, shiftring contributors.
//
// Licensed under the Apache License, Version 2.0; you may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0.

#ifndef SHIFTRING_EXPERIMENTS_HPP
#define SHIFTRING_EXPERIMENTS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "shiftring/opspace.hpp"

namespace shiftring {

/// Four-block circuit with independent Haar blocks on the standard geometry.
CircuitApprox random_circuit(const RingLattice& lat, std::uint64_t seed);

/// Hard-state trace-distance certificate over random block tuples and
/// random z strings: the distance must be >= 1/2 for every tuple.
struct LemmaSweepReport {
    int tuples = 0, z_per_tuple = 0;
    double min_distance = 0.0;
    double max_spectral_norm = 0.0;  // max ||tr_R(U_0^dag rho_f U_0)||
    bool pass = false;
};
LemmaSweepReport lemma_sweep(int big_l, int tuples, int z_per_tuple, std::uint64_t seed);

/// The spectral ingredient alone: ||tr_R(U_0^dag rho_f U_0)|| <= 2^{-L-1}
/// over random patch unitaries.
struct SpectralSweepReport {
    int samples = 0;
    double max_norm = 0.0, limit = 0.0;
    bool pass = false;
};
SpectralSweepReport spectral_sweep(int big_l, int samples, std::uint64_t seed);

/// Per-z fidelity links and the assembled Frobenius distance (L = 2).
struct FidelitySweepReport {
    int tuples = 0;
    double min_link = 0.0;      // min over tuples and z of 2(1 - |f_z|)
    double min_frob = 0.0;      // min assembled ||Utilde - U_sh||_F
    double max_identity_error = 0.0;  // trace identity vs direct norm
    bool pass = false;
};
FidelitySweepReport fidelity_sweep(int tuples, std::uint64_t seed);

/// Operator-space certificates over random block tuples (L = 2).
struct SuperSweepReport {
    int tuples = 0;
    double min_halfchain = 0.0, min_max_value = 0.0;
    std::string worst_pauli;
    bool pass = false;
};
SuperSweepReport super_sweep(int tuples, std::uint64_t seed);

struct LinearFit {
    double slope = 0.0, intercept = 0.0, r2 = 0.0;
};
LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y);

/// Interaction-picture cut error decay in r for a nearest-neighbor model.
struct DecayReport {
    CutRun run;
    LinearFit fit;  // log err vs r
    bool strictly_decreasing = false, duhamel_ok = false, pass = false;
};
DecayReport hhkl_decay_experiment(int n, double t_total, const std::vector<int>& rs, double dt,
                                  std::uint64_t seed);

/// Monte Carlo Haar twirl vs the exact partial-trace projector.
struct ProjectorReport {
    int samples = 0;
    double max_deviation = 0.0, tolerance = 0.0;
    bool pass = false;
};
ProjectorReport haar_projector_experiment(int n_sites, int samples, std::uint64_t seed);

/// Disjoint-support commutators and generator reality on random inputs.
struct LiouvillianReport {
    int samples = 0;
    double max_identity = 0.0, max_reality = 0.0;
    bool pass = false;
};
LiouvillianReport liouvillian_experiment(int samples, std::uint64_t seed);

/// Two-copy checks at L = 1: conjugation of the swap string by the doubled
/// shift, reflection involution and symmetry, depth-2 circuit identity and
/// its (non-)separability.
struct SptReport {
    double conjugation_error = 0.0;  // max entrywise
    double circuit_error = 0.0;      // depth-2 product vs doubled shift
    bool involution_ok = false, commutes_ok = false;
    bool circuit_separable = true;   // must come out false
    bool pass = false;
};
SptReport spt_experiment();

/// Measured leakage ||A(t) - P_r A(t)|| of a single-site operator under a
/// saturated power-law model, in both norms, on a (t, r) grid.
struct LeakageScan {
    int n_sites = 0;
    double alpha = 0.0;
    std::vector<ScanPoint> op_points, fb_points;
};
LeakageScan leakage_scan(int n_sites, double alpha, const std::vector<double>& ts,
                         const std::vector<int>& rs, std::uint64_t seed);

/// Fit-and-inflate the envelope constants on a scan, then confirm pointwise
/// dominance and the Frobenius <= operator ordering.
struct MajorizationReport {
    double alpha = 0.0;
    BoundParams fitted;
    double worst_op_ratio = 0.0, worst_fb_ratio = 0.0;  // <= 1 after fitting
    bool fb_le_op = false;
    bool pass = false;
};
MajorizationReport majorization_experiment(const LeakageScan& scan);

struct ThresholdRow {
    double alpha = 0.0;
    int big_l = 0;
    std::string source;
    double value = 0.0;
};
std::vector<ThresholdRow> bounds_table(const std::vector<double>& alphas,
                                       const std::vector<int>& ls, double eps,
                                       const BoundParams& p);

/// Norm orderings (Frobenius <= operator <= trace) and Hoelder-type
/// inequalities on random matrices.
struct NormOrderReport {
    int samples = 0;
    double max_violation = 0.0;
    bool pass = false;
};
NormOrderReport norm_order_experiment(int samples, std::uint64_t seed);

/// The standard small-scale end-to-end cases: nearest-neighbor n = 8 at
/// T in {0, 0.25, 0.5} and saturated power-law alpha = 3 at T = 0.25.
struct EndToEndSuite {
    std::vector<EndToEndVerdict> verdicts;
    bool pass = false;
};
EndToEndSuite end_to_end_suite(std::uint64_t seed);

}  // namespace shiftring

#endif
