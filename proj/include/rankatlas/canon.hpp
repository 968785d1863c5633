// Canonicalization of rank vectors under the hypercube automorphism group and
// aggregation of the full enumeration into invariant landscape classes.
//
// The canonical form is the lexicographically minimal rank vector of the orbit
// (sequence order, node 0 first). Class IDs are indices in the lexicographic
// order of canonical forms.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rankatlas/hypercube.hpp"
#include "rankatlas/rankspace.hpp"

namespace rankatlas {

struct OrbitInfo {
    std::uint32_t orbit_size = 0;       // distinct rank vectors in the class
    std::uint32_t stabilizer_order = 0; // automorphisms fixing the vector

    friend bool operator==(const OrbitInfo&, const OrbitInfo&) = default;
};

struct CanonicalForm {
    RankVector rv;

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

// Relabels nodes: result at node x = rv at node apply(a, x). Preserves the
// partition exactly (same lambda, not just as a multiset).
RankVector transform(const Automorphism& a, const RankVector& rv);

// Lexicographic minimum over the orbit plus orbit/stabilizer sizes.
// orbit_size * stabilizer_order = 2^n * n! always (orbit-stabilizer identity,
// asserted internally). Throws capacity_error above the enumeration cap.
std::pair<CanonicalForm, OrbitInfo> canonicalize(const RankVector& rv,
                                                 int cap = kDefaultEnumerationCap);

struct ClassEntry {
    RankVector canonical;
    OrbitInfo orbit;
};

// Consumes the full rank-vector enumeration and returns one entry per
// invariant landscape class, sorted lexicographically by canonical form (the
// index in this order is the class ID). Sum of orbit sizes over entries equals
// count_rankings(n). Each entry's orbit size is cross-checked against the
// number of enumerated members that canonicalized to it.
std::vector<ClassEntry> classify_all(int n, int cap = kDefaultEnumerationCap);

// (2^n - 1)! / n! exactly: the number of classes of injective functions.
BigCount count_injective_classes(int n);

}  // namespace rankatlas
