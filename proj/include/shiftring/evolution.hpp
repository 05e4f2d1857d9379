// (C) Copyright 2026, shiftring contributors.
//
// Licensed under the Apache License, Version 2.0; you may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0.

#ifndef SHIFTRING_EVOLUTION_HPP
#define SHIFTRING_EVOLUTION_HPP

#include <functional>
#include <vector>

#include "shiftring/bounds.hpp"
#include "shiftring/hamiltonian.hpp"
#include "shiftring/pauli.hpp"

namespace shiftring {

enum class TimeOrdering { Forward, Anti };

struct PropagatorPlan {
    HamiltonianModel model;
    double t_total = 0.0;
    double dt = 0.01;
    TimeOrdering ordering = TimeOrdering::Forward;
};

/// Time-ordered propagator on the full ring. Time-independent schedules use
/// a single exponential; otherwise a midpoint product over the dt grid.
DenseOperator propagate(const PropagatorPlan& plan);

/// U^dag embed(A) U on U's support.
DenseOperator heisenberg(const DenseOperator& u, const DenseOperator& a);

/// Keep the part of A supported inside S: normalized partial trace over the
/// complement, tensored back with identity. Equals the Haar twirl over S^c.
DenseOperator project_region(const DenseOperator& a, const Region& s);

/// Monte Carlo version of project_region: average of V^dag A V over Haar
/// unitaries on the complement of S (oracle for tests).
DenseOperator haar_twirl_monte_carlo(const DenseOperator& a, const Region& s, int samples,
                                     std::uint64_t seed);

/// Eigendecomposition cache for a time-independent Hamiltonian: cheap
/// propagators and Heisenberg conjugations at many times.
struct SpectralEvolution {
    Region support;
    Eigen::VectorXd evals;
    Matrix evecs;

    explicit SpectralEvolution(const DenseOperator& h);
    Matrix unitary(double t) const;                    // exp(-i H t)
    Matrix to_eigenbasis(const Matrix& m) const;       // V^dag M V
    /// exp(-iHt) M exp(+iHt) given B = V^dag M V.
    Matrix conjugated_from_eigenbasis(const Matrix& b, double t) const;
};

/// 4th-order commutator-free integrator (two exponentials per step, Gauss
/// nodes). Solves the usual ordering: latest factors leftmost.
Matrix time_ordered_exponential(const std::function<Matrix(double)>& hermitian_gen, double t_total,
                                int steps);
/// Anti-ordering: earliest factors leftmost. Adjoint of the above with the
/// generator negated.
Matrix anti_ordered_exponential(const std::function<Matrix(double)>& hermitian_gen, double t_total,
                                int steps);

/// Commutator light-cone table: C[ti][xi] = ||[A_x(t), B_0]|| with A_x the
/// input string translated to site x. Time-independent schedules only.
std::vector<std::vector<double>> commutator_front(const HamiltonianModel& h, const PauliString& a0,
                                                  const PauliString& b0,
                                                  const std::vector<double>& tgrid,
                                                  const std::vector<int>& xgrid);

/// ||A(t) - P_r A(t)||_F with the region grown distance r from supp(A).
double frobenius_leakage(const HamiltonianModel& h, const PauliString& a, int r, double t);

/// One interaction-picture cut at a bond, approximated within distance r.
struct CutResult {
    int r = 0;
    DenseOperator u0;       // patch unitary on the grown region S_r
    double err = 0.0;       // measured ||U u_op^dag - embed(u0)||
    double duhamel = 0.0;   // integrated leakage bound (quadrature)
    double slack = 0.0;     // discretization allowance, 10*dt
};

struct CutRun {
    DenseOperator u_op;     // evolution with the bond-crossing terms removed
    std::vector<CutResult> cuts;  // one per requested r, shared u_op
};

/// Cut the evolution of `h` at `cut` for each r in rs. The patch unitary is
/// the anti-ordered exponential of the projected interaction-picture cut
/// Hamiltonian; dt is the integrator step (dt <= 0 picks min(0.01, T/4)).
/// Time-independent schedules only.
CutRun hhkl_cut_multi(const HamiltonianModel& h, Bond cut, double t_total,
                      const std::vector<int>& rs, double dt = -1.0);

/// Single-r convenience wrapper.
CutResult hhkl_cut(const HamiltonianModel& h, Bond cut, double t_total, int r, double dt = -1.0);

/// The four-block circuit: assembled = (u_i (x) u_0) (u_l (x) u_r).
struct CircuitApprox {
    DenseOperator u_l, u_r, u_0, u_i;
    DenseOperator assembled;

    static CircuitApprox from_blocks(const RingLattice& lat, DenseOperator u_l, DenseOperator u_r,
                                     DenseOperator u_0, DenseOperator u_i);
};

struct CircuitizeReport {
    CircuitApprox ca;
    double err_total = 0.0;      // measured ||U - assembled||
    double far_budget = 0.0;     // T * operator tail of the dropped far terms
    double cut_a_err = 0.0, cut_b_err = 0.0;
    double cut_a_bound = 0.0, cut_b_bound = 0.0;
    double slack = 0.0;
    int ell = 0;
    bool regime_check_bypassed = false;
};

/// Build the four-block approximation of exp(-i T H): drop far couplings
/// (power-law), cut at bonds (0,1) and (2L,2L+1), keep the half-chain
/// blocks exact. ell_override > 0 skips the ell <= 0.1 L regime check,
/// which rejects otherwise. Time-independent schedules only.
CircuitizeReport circuitize(const HamiltonianModel& h, double t_total, const BoundParams& params,
                            int ell_override = -1, double dt = -1.0);

}  // namespace shiftring

#endif
