// (C) Copyright 2026, shiftring contributors.
//
// Licensed under the Apache License, Version 2.0; you may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0.

#include "shiftring/pauli.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace shiftring {

namespace {
constexpr char kLetterChar[4] = {'I', 'X', 'Y', 'Z'};

PauliLetter letter_from_char(char c) {
    switch (c) {
        case 'I': return PauliLetter::I;
        case 'X': return PauliLetter::X;
        case 'Y': return PauliLetter::Y;
        case 'Z': return PauliLetter::Z;
        default: throw std::domain_error("PauliString::parse: bad letter");
    }
}

bool valid_phase(Complex ph) {
    auto near = [](Complex a, Complex b) { return std::abs(a - b) < 1e-12; };
    return near(ph, {1, 0}) || near(ph, {-1, 0}) || near(ph, {0, 1}) || near(ph, {0, -1});
}
}  // namespace

PauliString::PauliString(Region s, std::vector<PauliLetter> l, Complex ph)
    : support(std::move(s)), letters(std::move(l)), phase(ph) {
    if (static_cast<int>(letters.size()) != support.size())
        throw std::domain_error("PauliString: one letter per support site");
    if (!valid_phase(phase)) throw std::domain_error("PauliString: phase must be a 4th root of unity");
}

PauliString PauliString::identity(const Region& s) {
    return PauliString(s, std::vector<PauliLetter>(s.size(), PauliLetter::I));
}

PauliString PauliString::single(const RingLattice& lat, long long site, PauliLetter letter) {
    return PauliString(Region::single(lat, site), {letter});
}

bool PauliString::is_identity_letters() const {
    for (PauliLetter l : letters)
        if (l != PauliLetter::I) return false;
    return true;
}

Complex SparsePauli::amp(std::int64_t i) const {
    static const Complex ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    Complex a = phase * ipow[num_y & 3];
    if (std::popcount(static_cast<std::uint64_t>(i & zymask)) & 1) a = -a;
    return a;
}

SparsePauli sparse_form(const PauliString& p, const Region& enclosing) {
    if (!enclosing.contains(p.support)) throw std::domain_error("sparse_form: support not enclosed");
    SparsePauli sp;
    sp.bits = enclosing.size();
    sp.phase = p.phase;
    for (int q = 0; q < p.support.size(); ++q) {
        int site = p.support.sites[q];
        auto it = std::lower_bound(enclosing.sites.begin(), enclosing.sites.end(), site);
        int bitpos = sp.bits - 1 - static_cast<int>(it - enclosing.sites.begin());
        std::int64_t bit = std::int64_t{1} << bitpos;
        switch (p.letters[q]) {
            case PauliLetter::I: break;
            case PauliLetter::X: sp.xmask |= bit; break;
            case PauliLetter::Y: sp.xmask |= bit; sp.zymask |= bit; ++sp.num_y; break;
            case PauliLetter::Z: sp.zymask |= bit; break;
        }
    }
    return sp;
}

DenseOperator PauliString::to_dense() const {
    SparsePauli sp = sparse_form(*this, support);
    const std::int64_t d = support.dim();
    Matrix m = Matrix::Zero(d, d);
    for (std::int64_t i = 0; i < d; ++i) m(i ^ sp.xmask, i) = sp.amp(i);
    return DenseOperator(support, std::move(m));
}

PauliString PauliString::embedded(const Region& target) const {
    if (!target.contains(support)) throw std::domain_error("PauliString::embedded: bad target");
    std::vector<PauliLetter> out(target.size(), PauliLetter::I);
    for (int q = 0; q < support.size(); ++q) {
        auto it = std::lower_bound(target.sites.begin(), target.sites.end(), support.sites[q]);
        out[it - target.sites.begin()] = letters[q];
    }
    return PauliString(target, std::move(out), phase);
}

std::string PauliString::text() const {
    std::ostringstream os;
    bool first = true;
    for (int q = 0; q < support.size(); ++q) {
        if (letters[q] == PauliLetter::I) continue;
        if (!first) os << ' ';
        os << kLetterChar[static_cast<int>(letters[q])] << support.sites[q];
        first = false;
    }
    if (first) return "I";
    return os.str();
}

PauliString PauliString::parse(const std::string& text, const RingLattice& lat) {
    std::vector<long long> sites;
    std::vector<PauliLetter> letters_by_site;
    std::istringstream is(text);
    std::string tok;
    std::vector<std::pair<int, PauliLetter>> entries;
    while (is >> tok) {
        if (tok == "I") continue;
        PauliLetter l = letter_from_char(tok[0]);
        int site = lat.reduce(std::stoll(tok.substr(1)));
        entries.emplace_back(site, l);
    }
    std::sort(entries.begin(), entries.end());
    std::vector<long long> labels;
    std::vector<PauliLetter> letters;
    for (auto& [s, l] : entries) {
        labels.push_back(s);
        letters.push_back(l);
    }
    if (labels.empty()) return PauliString::identity(Region::single(lat, 0));
    return PauliString(Region(lat, labels), std::move(letters));
}

Complex pauli_inner(const DenseOperator& o1, const DenseOperator& o2) {
    if (!(o1.support == o2.support)) throw std::domain_error("pauli_inner: support mismatch");
    return (o1.mat.adjoint() * o2.mat).trace() / static_cast<double>(o1.dim());
}

PauliString pauli_mul(const PauliString& a, const PauliString& b) {
    if (!(a.support == b.support)) throw std::domain_error("pauli_mul: support mismatch");
    // single-site products: sigma_a sigma_b = phase * sigma_c
    static const int prod_letter[4][4] = {
        {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const Complex prod_phase[4][4] = {
        {{1, 0}, {1, 0}, {1, 0}, {1, 0}},
        {{1, 0}, {1, 0}, {0, 1}, {0, -1}},
        {{1, 0}, {0, -1}, {1, 0}, {0, 1}},
        {{1, 0}, {0, 1}, {0, -1}, {1, 0}}};
    std::vector<PauliLetter> out(a.letters.size());
    Complex ph = a.phase * b.phase;
    for (size_t q = 0; q < out.size(); ++q) {
        int ia = static_cast<int>(a.letters[q]), ib = static_cast<int>(b.letters[q]);
        out[q] = static_cast<PauliLetter>(prod_letter[ia][ib]);
        ph *= prod_phase[ia][ib];
    }
    return PauliString(a.support, std::move(out), ph);
}

std::vector<PauliString> enumerate_paulis(const Region& region) {
    const int k = region.size();
    if (k > 8) throw std::length_error("enumerate_paulis: region larger than 8 sites");
    const std::int64_t count = std::int64_t{1} << (2 * k);
    std::vector<PauliString> out;
    out.reserve(count);
    for (std::int64_t idx = 0; idx < count; ++idx) {
        std::vector<PauliLetter> letters(k);
        for (int q = 0; q < k; ++q)
            letters[q] = static_cast<PauliLetter>((idx >> (2 * (k - 1 - q))) & 3);
        out.emplace_back(region, std::move(letters));
    }
    return out;
}

std::vector<std::pair<PauliString, Complex>> pauli_decompose(const DenseOperator& a) {
    const int k = a.support.size();
    if (k > 8) throw std::length_error("pauli_decompose: support larger than 8 sites");
    const std::int64_t d = a.dim();
    std::vector<std::pair<PauliString, Complex>> out;
    for (PauliString& p : enumerate_paulis(a.support)) {
        SparsePauli sp = sparse_form(p, a.support);
        Complex tr = 0.0;
        for (std::int64_t i = 0; i < d; ++i) tr += std::conj(sp.amp(i)) * a.mat(i ^ sp.xmask, i);
        out.emplace_back(std::move(p), tr / static_cast<double>(d));
    }
    return out;
}

DenseOperator pauli_reconstruct(const std::vector<std::pair<PauliString, Complex>>& terms,
                                const Region& support) {
    const std::int64_t d = support.dim();
    Matrix m = Matrix::Zero(d, d);
    for (const auto& [p, c] : terms) {
        if (c == Complex(0.0)) continue;
        SparsePauli sp = sparse_form(p, support);
        for (std::int64_t i = 0; i < d; ++i) m(i ^ sp.xmask, i) += c * sp.amp(i);
    }
    return DenseOperator(support, std::move(m));
}

}  // namespace shiftring
