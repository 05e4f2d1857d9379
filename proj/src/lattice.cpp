// (C) Copyright 2026, shiftring contributors.
//
// Licensed under the Apache License, Version 2.0; you may obtain a copy at
// http://www.apache.org/licenses/LICENSE-2.0.

#include "shiftring/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace shiftring {

int ring_distance(int x, int y, const RingLattice& lat) {
    if (!lat.valid_site(x) || !lat.valid_site(y))
        throw std::domain_error("ring_distance: invalid site label");
    int d = std::abs(y - x);
    return std::min(d, lat.n - d);
}

Region::Region(const RingLattice& lat, std::vector<long long> labels) : n(lat.n) {
    std::set<int> uniq;
    for (long long s : labels) uniq.insert(lat.reduce(s));
    sites.assign(uniq.begin(), uniq.end());
}

Region Region::range(const RingLattice& lat, long long first, long long last) {
    std::vector<long long> labels;
    for (long long s = first; s <= last; ++s) labels.push_back(s);
    return Region(lat, std::move(labels));
}

Region Region::full(const RingLattice& lat) { return range(lat, 0, lat.n - 1); }

Region Region::single(const RingLattice& lat, long long site) { return Region(lat, {site}); }

bool Region::contains(int site) const {
    return std::binary_search(sites.begin(), sites.end(), site);
}

bool Region::contains(const Region& other) const {
    return std::includes(sites.begin(), sites.end(), other.sites.begin(), other.sites.end());
}

Region Region::complement() const {
    Region out;
    out.n = n;
    for (int s = 0; s < n; ++s)
        if (!contains(s)) out.sites.push_back(s);
    return out;
}

Region Region::set_union(const Region& other) const {
    Region out;
    out.n = n;
    std::set_union(sites.begin(), sites.end(), other.sites.begin(), other.sites.end(),
                   std::back_inserter(out.sites));
    return out;
}

Region Region::set_minus(const Region& other) const {
    Region out;
    out.n = n;
    std::set_difference(sites.begin(), sites.end(), other.sites.begin(), other.sites.end(),
                        std::back_inserter(out.sites));
    return out;
}

Region Region::set_intersect(const Region& other) const {
    Region out;
    out.n = n;
    std::set_intersection(sites.begin(), sites.end(), other.sites.begin(), other.sites.end(),
                          std::back_inserter(out.sites));
    return out;
}

Region Region::expand(int r) const {
    RingLattice lat(n);
    std::set<int> grown;
    for (int s : sites)
        for (int k = -r; k <= r; ++k) grown.insert(lat.reduce(s + k));
    Region out;
    out.n = n;
    out.sites.assign(grown.begin(), grown.end());
    return out;
}

int set_distance(const Region& a, const Region& b) {
    if (a.empty() || b.empty()) throw std::domain_error("set_distance: empty region");
    RingLattice lat(a.n);
    int best = a.n;
    for (int x : a.sites)
        for (int y : b.sites) best = std::min(best, ring_distance(x, y, lat));
    return best;
}

CircuitRegions circuit_regions(const RingLattice& lat) {
    if (lat.l < 2)
        throw std::domain_error("circuit_regions: patch blocks degenerate for l < 2");
    const int L = lat.l;
    CircuitRegions cr;
    cr.left = Region::range(lat, 1, 2 * L);
    cr.right = Region::range(lat, 2 * L + 1, 4 * L);
    cr.cut_a_block = Region::range(lat, 2 - L, L - 1);
    cr.cut_b_block = Region::range(lat, L + 2, 3 * L - 1);
    cr.pure_initial = Region::range(lat, 1 - L, L);
    cr.mixed_initial = Region::range(lat, L + 1, 3 * L);
    cr.pure_final = Region::range(lat, -L, L - 1);
    cr.mixed_final = Region::range(lat, L, 3 * L - 1);
    return cr;
}

std::map<std::string, Region> CircuitRegions::as_map() const {
    return {
        {"left", left},
        {"right", right},
        {"cut_a_block", cut_a_block},
        {"cut_b_block", cut_b_block},
        {"pure_initial", pure_initial},
        {"mixed_initial", mixed_initial},
        {"pure_final", pure_final},
        {"mixed_final", mixed_final},
    };
}

}  // namespace shiftring
