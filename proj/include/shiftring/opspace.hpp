// (C) Copyright 2026, shiftring contributors.
//
// Licensed under the Apache License, Version 2.0; you may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0.

#ifndef SHIFTRING_OPSPACE_HPP
#define SHIFTRING_OPSPACE_HPP

#include <utility>
#include <vector>

#include "shiftring/evolution.hpp"
#include "shiftring/shift.hpp"

namespace shiftring {

/// Heisenberg superoperator action: |O) -> |U^dag O U), embedded on the
/// union of the two supports. Preserves pauli_inner pairs.
DenseOperator super_apply(const DenseOperator& u, const DenseOperator& o);

/// frobenius_norm(U^dag O U - U_sh^dag O U_sh) for a full-ring unitary U and
/// an observable with operator_norm(O) = 1 (checked to 1e-9). Always at most
/// 2 * shift_distance(U, frobenius).
double super_distance_on(const DenseOperator& u, const DenseOperator& o);

/// Matrix of the conjugation map O -> U O U^dag in the enumerate_paulis
/// basis of u.support: M[p][q] = (P_p | U P_q U^dag). Unitary. Requires
/// |support| <= 4 (4^k-dimensional).
Matrix conjugation_superoperator(const DenseOperator& u);

/// Exact operator-space certificate for the four-block circuit at L = 2.
///
/// halfchain_value is the left-half trace-norm witness evaluated in the
/// explicit 256-dimensional operator space of the half chain (each qubit's
/// operator algebra treated as a 4-level system); it is >= 1/2 for any
/// blocks. max_pauli/max_value scan all 256 Pauli strings on the mixed
/// block for the largest Frobenius deviation of the circuit's Heisenberg
/// action from the shift's; the chain 1/2 <= halfchain <= 2 max forces
/// max_value >= 1/4.
struct SuperLemmaCertificate {
    double halfchain_value = 0.0;
    PauliString max_pauli;
    double max_value = 0.0;
    bool pass = false;
};

SuperLemmaCertificate super_lemma_certificate(const CircuitApprox& ca);

/// frobenius_norm(i [H_term, A]) for H_term and A with disjoint supports;
/// always <= 1e-10 (commutators cannot grow an operator into untouched
/// sites). Overlapping supports are a domain error.
double liouvillian_identity_check(const DenseOperator& h_term, const DenseOperator& a);

/// |Im (O1 | i[H, O2])| for Hermitian H, O1, O2; always <= 1e-10 (the
/// generator of Heisenberg evolution is a real matrix on Hermitian
/// operators). Non-Hermitian inputs are a domain error.
double liouvillian_reality_check(const DenseOperator& h, const DenseOperator& o1,
                                 const DenseOperator& o2);

// ---------------------------------------------------------------------------
// Two-copy constructions: two rings of n = 4L qubits, slots 0..2n-1 with all
// of copy A ascending (slots 0..n-1), then copy B ascending (slots n..2n-1).
// ---------------------------------------------------------------------------

enum class CopyTag { A, B };

struct CopySite {
    int site = 0;
    CopyTag copy = CopyTag::A;
};

/// Slot of a (site, copy) pair in the doubled register.
int slot_of(int site, CopyTag copy, const RingLattice& lat);

/// Cross-copy bond-centered reflection: [x]_A <-> [1-x mod n]_B. An
/// involution that commutes with the doubled shift.
CopySite inversion_map(int site, CopyTag copy, const RingLattice& lat);

/// The 2n-qubit register as a region (dense cap 2n <= 12).
Region doubled_region(const RingLattice& lat);

/// U_sh (x) U_sh^{-1}: shift copy A one site down, copy B one site up.
DenseOperator doubled_shift(const RingLattice& lat);

/// Permutation unitary of inversion_map on the doubled register.
DenseOperator inversion_unitary(const RingLattice& lat);

/// Dense product of disjoint SWAP factors between the given slot pairs,
/// scaled by `scale`.
DenseOperator swap_permutation(const RingLattice& lat,
                               const std::vector<std::pair<int, int>>& slot_pairs, double scale);

/// A string observable on the doubled register: normalized identities I/2 on
/// unit_slots, SWAP factors between the slot pairs, identity elsewhere.
struct TwoCopyOperator {
    int big_l = 1;
    std::vector<std::pair<int, int>> swap_slots;
    std::vector<int> unit_slots;
    bool has_dense = false;
    DenseOperator dense;
};

/// The reflection-symmetric string observable of length 2L (shifted = the
/// image under conjugation by the doubled shift: copy-A labels +1, copy-B
/// labels -1). Dense form only at L = 1 (8 qubits).
TwoCopyOperator swap_string(int big_l, bool shifted);

/// A two-copy interaction term: the slots it acts on (non-empty).
struct TwoCopyTerm {
    std::vector<int> slots;
};

struct TwoCopyModel {
    int big_l = 1;
    std::vector<TwoCopyTerm> terms;
};

/// True iff every term lives entirely in copy A or entirely in copy B.
bool separability_check(const TwoCopyModel& m);

/// The depth-2 SWAP circuit implementing the doubled shift: layer 1 swaps
/// [x]_A <-> [x]_B, layer 2 swaps [x]_A <-> [x+1]_B. Every gate couples the
/// copies, so separability_check rejects it.
struct DoubledSwapCircuit {
    TwoCopyModel model;
    std::vector<std::pair<int, int>> layer1, layer2;
};

DoubledSwapCircuit doubled_swap_circuit(const RingLattice& lat);

}  // namespace shiftring

#endif
