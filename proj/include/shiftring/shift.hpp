// (C) Copyright 2026, shiftring contributors.
//
// Licensed under the Apache License, Version 2.0; you may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0.

#ifndef SHIFTRING_SHIFT_HPP
#define SHIFTRING_SHIFT_HPP

#include <vector>

#include "shiftring/evolution.hpp"

namespace shiftring {

/// The one-site translation: a basis permutation with
/// U^dag A_x U = A_{x+1} for every single-site operator A.
struct ShiftUnitary {
    RingLattice lattice{4};
    DenseOperator matrix;
};

ShiftUnitary build_shift(const RingLattice& lat);

/// Product state: |z_x><z_x| on the pure block straddling the origin
/// (sites 1-L..L, i.e. z[j] sits on site 1-L+j mod n), maximally mixed
/// elsewhere.
struct HardState {
    std::vector<int> z;
    DensityMatrix rho;
};

HardState hard_state(const RingLattice& lat, const std::vector<int>& z);

/// The shifted target state U_sh rho U_sh^dag.
DensityMatrix shifted_state(const RingLattice& lat, const HardState& state);

/// Exact certificate that the four-block circuit cannot shift the hard
/// state: trace distance >= 1/2 for ANY blocks.
struct ShiftCertificate {
    double distance = 0.0;         // || Utilde rho_i(z) Utilde^dag - rho_f(z) ||_1
    double halfchain_lower = 0.0;  // left-half witness, <= distance
    double spectral_norm = 0.0;    // || tr_R(U_0^dag rho_f U_0) || <= 2^{-L-1}
    bool pass = false;             // distance >= 1/2 - 1e-9
};

ShiftCertificate shift_state_certificate(const CircuitApprox& ca, const std::vector<int>& z);

/// Spectrum of U_L rho_{i,L} U_L^dag (must be 2^L copies of 2^{-L}, rest 0)
/// and the sign-unitary diagonal-sum lower bound evaluated with u_0.
struct JBasisWitness {
    Eigen::VectorXd eigenvalues;     // descending
    double diag_lower_bound = 0.0;   // sum_{j<=2^L} (2^{-L} - M_jj) >= 1/2
};

JBasisWitness jbasis_witness(const DenseOperator& u_l, const DenseOperator& u_0,
                             const RingLattice& lat);

/// || U - U_sh || in the requested norm. Frobenius mode evaluates the trace
/// identity sqrt(2 - 2^{1-n} Re tr(U_sh^dag U)) and cross-checks the direct
/// norm to 1e-9.
double shift_distance(const DenseOperator& u, NormMode mode);

/// Per-z fidelity links f_z = 2^{-2L} tr((I (x) |z><z|) U_sh^dag Utilde)
/// and the assembled Frobenius distance. Requires L = 2.
struct FidelityChainReport {
    std::vector<double> distance;     // trace-distance certificate per z
    std::vector<Complex> fidelity;    // f_z per z
    double min_link = 0.0;            // min_z 2(1 - |f_z|)
    double frob_from_links = 0.0;     // sqrt(2 * 2^{-2L} sum_z (1 - Re f_z))
    double frob_direct = 0.0;         // frobenius_norm(Utilde - U_sh)
    bool pass = false;                // every link >= 1/16 and frob >= 1/4
};

FidelityChainReport fidelity_chain(const CircuitApprox& ca);

/// Full pipeline: propagate, circuitize, state certificates, fidelity
/// chain, triangle assembly of the final distance to the shift.
struct EndToEndVerdict {
    CircuitizeReport circuit;
    double err_circuit = 0.0;       // measured ||U - Utilde||
    double tilde_dist_frob = 0.0;   // ||Utilde - U_sh||_F
    double tilde_dist_op = 0.0;     // ||Utilde - U_sh||
    double final_dist = 0.0;        // measured ||U - U_sh||
    double min_state_distance = 0.0;
    bool triangle_ok = false;       // final >= tilde_op - err (exact)
    bool pass = false;              // final >= 1/8 - 1e-9 whenever err <= 1/8
};

EndToEndVerdict end_to_end(const HamiltonianModel& model, double t_total,
                           const BoundParams& params);

}  // namespace shiftring

#endif
