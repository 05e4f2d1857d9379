// (C) Copyright 2026, shiftring contributors.
//
// Licensed under the Apache License, Version 2.0; you may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0.

#ifndef SHIFTRING_HAMILTONIAN_HPP
#define SHIFTRING_HAMILTONIAN_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "shiftring/linalg.hpp"
#include "shiftring/pauli.hpp"

namespace shiftring {

/// A traceless Hermitian coupling between two sites, stored as the 15 real
/// coefficients on the non-identity two-site Pauli strings plus the dense
/// 4x4 it expands to (lower site label = most significant qubit).
struct TwoSiteTerm {
    int x = 0, y = 0;                // x < y, site labels
    std::vector<double> coeffs;      // 15 Pauli coefficients
    DenseOperator op;                // 4x4 on Region {x, y}

    int other(int site) const { return site == x ? y : x; }
};

/// Piecewise-constant time dependence: multiplier(term, t) is constant on
/// each interval [boundaries[i], boundaries[i+1]). Empty = constant 1.
struct Schedule {
    std::vector<double> boundaries;                 // ascending, size m+1
    std::vector<std::vector<double>> multipliers;   // [interval][term]

    bool time_independent() const { return multipliers.empty(); }
    double multiplier(int term, double t) const;
};

enum class ModelKind { NearestNeighbor, PowerLaw };

struct HamiltonianModel {
    RingLattice lattice{4};
    ModelKind kind = ModelKind::NearestNeighbor;
    double alpha = 0.0;      // power-law exponent (PowerLaw only)
    double strength = 1.0;   // the norm-budget prefactor K
    std::uint64_t seed = 0;
    std::vector<TwoSiteTerm> terms;
    Schedule schedule;

    /// Dense H(t) on the full ring.
    DenseOperator assemble(double t = 0.0) const;
    /// Dense sum of the terms only, schedule ignored.
    DenseOperator assemble_static() const;
};

/// One random traceless term per unordered pair, with operator norm exactly
/// K d(x,y)^{-alpha} (saturate) or a uniform random fraction of it.
HamiltonianModel build_powerlaw(const RingLattice& lat, double alpha, double k,
                                std::uint64_t seed, bool saturate = true);

/// Random traceless terms on adjacent pairs, operator norm exactly 1.
HamiltonianModel build_nearest_neighbor(const RingLattice& lat, std::uint64_t seed);

/// Terms coupling the two half-chains at ring distance >= ell, and the rest.
std::pair<HamiltonianModel, HamiltonianModel> split_far(const HamiltonianModel& h, int ell);

/// A bond is the edge between site `a` and site `a+1 mod n`.
struct Bond {
    int a = 0;
    int b(const RingLattice& lat) const { return lat.reduce(a + 1); }
};

/// Walking length from x to y along the arc that crosses the bond.
int through_bond_length(int x, int y, Bond cut, const RingLattice& lat);

/// Terms straddling the bond with through-bond length < ell, and the rest.
std::pair<HamiltonianModel, HamiltonianModel> split_cut(const HamiltonianModel& h, Bond cut,
                                                        int ell);

enum class NormMode { Operator, Frobenius };

/// Cut-length rule: ceil((16 c_alpha T)^(1/(alpha-2))) in operator mode,
/// exponent 1/(alpha-1) in frobenius mode; clamped to >= 1.
int ell_rule(double t_total, double alpha, double c_alpha, NormMode mode);

/// Operator mode: sum of term operator norms. Frobenius mode: root sum of
/// squared term Frobenius norms (valid by term orthogonality).
double norm_tail(const HamiltonianModel& h, NormMode mode);

/// Default tail constant 2 * sum_{r>=1} r^(1-alpha), truncated at 1e6 with
/// an integral remainder bound added for alpha > 2.
double tail_constant(double alpha);

std::string model_to_json(const HamiltonianModel& h);
HamiltonianModel model_from_json(const std::string& text);

}  // namespace shiftring

#endif
