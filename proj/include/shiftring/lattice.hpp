// (C) Copyright 2026, shiftring contributors.
//
// Licensed under the Apache License, Version 2.0; you may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0.

#ifndef SHIFTRING_LATTICE_HPP
#define SHIFTRING_LATTICE_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace shiftring {

/// Ring of n = 4*l qubits with sites labeled 0..n-1, arithmetic mod n.
///
/// Label conventions that include negative values (such as 1-l) are reduced
/// mod n at the boundary of every public operation; internally all sites are
/// 0-based.
struct RingLattice {
    int n = 0;  ///< number of sites, n = 4*l
    int l = 0;  ///< quarter-ring length

    explicit RingLattice(int n_sites) : n(n_sites), l(n_sites / 4) {
        if (n_sites < 4 || n_sites % 4 != 0)
            throw std::invalid_argument("RingLattice requires n = 4*l with n >= 4");
    }
    static RingLattice from_quarter(int quarter) { return RingLattice(4 * quarter); }

    /// Reduce an arbitrary (possibly negative) label mod n.
    int reduce(long long label) const {
        long long r = label % n;
        return static_cast<int>(r < 0 ? r + n : r);
    }
    bool valid_site(int x) const { return x >= 0 && x < n; }
};

/// min(|y-x|, n-|y-x|)
int ring_distance(int x, int y, const RingLattice& lat);

/// An ordered (sorted, duplicate-free) set of sites on a ring.
struct Region {
    int n = 0;                ///< ring size the labels live on
    std::vector<int> sites;   ///< sorted, unique, all in 0..n-1

    Region() = default;
    Region(const RingLattice& lat, std::vector<long long> labels);
    static Region range(const RingLattice& lat, long long first, long long last);
    static Region full(const RingLattice& lat);
    static Region single(const RingLattice& lat, long long site);

    int size() const { return static_cast<int>(sites.size()); }
    bool empty() const { return sites.empty(); }
    std::int64_t dim() const { return std::int64_t{1} << sites.size(); }
    bool contains(int site) const;
    bool contains(const Region& other) const;

    Region complement() const;
    Region set_union(const Region& other) const;
    Region set_minus(const Region& other) const;
    Region set_intersect(const Region& other) const;
    /// All sites within ring distance r of this region.
    Region expand(int r) const;

    bool operator==(const Region& other) const { return n == other.n && sites == other.sites; }
};

int set_distance(const Region& a, const Region& b);

/// The named regions of the four-block circuit geometry on an n = 4L ring.
///
/// left/right are the two half chains split at site 2L; cut_a_block and
/// cut_b_block are the supports of the two patch unitaries straddling bonds
/// (0,1) and (2L,2L+1); pure/mixed blocks describe the hard product states
/// before and after a one-site shift.
struct CircuitRegions {
    Region left;           // {1..2L}
    Region right;          // {2L+1..4L}
    Region cut_a_block;    // {2-L..L-1}, straddles bond (0,1)
    Region cut_b_block;    // {L+2..3L-1}, straddles bond (2L,2L+1)
    Region pure_initial;   // {1-L..L}
    Region mixed_initial;  // {L+1..3L}
    Region pure_final;     // {-L..L-1}
    Region mixed_final;    // {L..3L-1}

    std::map<std::string, Region> as_map() const;
};

/// Requires l >= 2 (the cut blocks are empty at l = 1).
CircuitRegions circuit_regions(const RingLattice& lat);

}  // namespace shiftring

#endif
