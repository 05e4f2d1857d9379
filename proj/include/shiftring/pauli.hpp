// (C) Copyright 2026, shiftring contributors.
//
// Licensed under the Apache License, Version 2.0; you may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0.

#ifndef SHIFTRING_PAULI_HPP
#define SHIFTRING_PAULI_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "shiftring/linalg.hpp"

namespace shiftring {

enum class PauliLetter : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

/// A tensor product of single-site Pauli matrices with an overall phase in
/// {+1, -1, +i, -i}. letters[q] acts on support.sites[q].
struct PauliString {
    Region support;
    std::vector<PauliLetter> letters;
    Complex phase{1.0, 0.0};

    PauliString() = default;
    PauliString(Region s, std::vector<PauliLetter> l, Complex ph = Complex(1.0));
    static PauliString identity(const Region& s);
    static PauliString single(const RingLattice& lat, long long site, PauliLetter letter);

    bool is_identity_letters() const;
    DenseOperator to_dense() const;
    /// Same string viewed on a larger region (identity elsewhere).
    PauliString embedded(const Region& target) const;

    /// Text form "X0 Z3" (identity letters omitted; "I" if all identity).
    std::string text() const;
    static PauliString parse(const std::string& text, const RingLattice& lat);
};

/// Bit-mask form of a Pauli string on an enclosing region: the string maps
/// basis state |i> to amp(i) |i XOR xmask>.
struct SparsePauli {
    std::int64_t xmask = 0;   // X and Y letters flip these bits
    std::int64_t zymask = 0;  // Z and Y letters contribute (-1)^bit
    int num_y = 0;
    Complex phase{1.0, 0.0};
    int bits = 0;

    Complex amp(std::int64_t i) const;
};
SparsePauli sparse_form(const PauliString& p, const Region& enclosing);

/// Normalized Hilbert-Schmidt inner product 2^{-k} tr(O1^dag O2).
Complex pauli_inner(const DenseOperator& o1, const DenseOperator& o2);

/// Product with composed phase (supports must coincide).
PauliString pauli_mul(const PauliString& a, const PauliString& b);

/// All 4^k phase-one strings on the region, lexicographic in (I,X,Y,Z)
/// with the lowest site label most significant. Requires k <= 8.
std::vector<PauliString> enumerate_paulis(const Region& region);

/// Coefficients of A in the Pauli basis, in enumerate_paulis order.
/// Requires |support| <= 8. Parseval: sum |c|^2 = frobenius_norm(A)^2.
std::vector<std::pair<PauliString, Complex>> pauli_decompose(const DenseOperator& a);
DenseOperator pauli_reconstruct(const std::vector<std::pair<PauliString, Complex>>& terms,
                                const Region& support);

}  // namespace shiftring

#endif
