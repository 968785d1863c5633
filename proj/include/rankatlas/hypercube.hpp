// n-dimensional Boolean hypercube: nodes, 1-flip neighborhood, and the full
// automorphism group of translations (XOR masks) and rotations (coordinate
// permutations), 2^n * n! elements in total.
//
// Bit convention: a node index is read as an n-bit string whose least
// significant bit is the rightmost printed character, so node 1 prints as
// "0...01". All transformation tables are bit-exact under this convention.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rankatlas {

using Node = std::uint32_t;

// Full enumeration (all rank vectors, canonicalization, atlas builds) is
// refused above this dimension; pure counting has no cap.
inline constexpr int kDefaultEnumerationCap = 3;

// Validates n >= 1 (throws domain_error) and returns n.
int check_dimension(int n);

// Validates 1 <= n <= cap (throws capacity_error above cap) and returns n.
int check_enumeration_dimension(int n, int cap = kDefaultEnumerationCap);

// 2^n nodes; requires n <= 31 to fit the index type.
std::uint32_t num_nodes(int n);

// 2^n * n! as a plain integer; valid for the small n where materializing the
// group makes sense (n <= 12 keeps it inside 64 bits by a wide margin).
std::uint64_t group_order(int n);

// Bitstring of x, most significant coordinate first ("010" for x=2, n=3).
std::string node_string(Node x, int n);

// The n Hamming-distance-1 neighbors of x, in bit-position order (bit 0 flip first).
std::vector<Node> neighbors(Node x, int n);

// Hypercube automorphism: first permute coordinates, then XOR-translate.
// rotation[i] gives the source bit gathered into result bit i, so the action is
//   apply(a, x) = gather(x, rotation) XOR translation.
struct Automorphism {
    std::uint32_t translation = 0;        // XOR mask z
    std::vector<std::uint8_t> rotation;   // sigma: result bit i = source bit sigma[i]

    int n() const { return static_cast<int>(rotation.size()); }
};

Automorphism identity_automorphism(int n);

// r_sigma(x) XOR z. Throws domain_error on an out-of-range node.
Node apply(const Automorphism& a, Node x);

// Group law chosen so that apply(compose(a, b), x) = apply(a, apply(b, x)).
Automorphism compose(const Automorphism& a, const Automorphism& b);

// Inverse element: compose(inverse(a), a) = compose(a, inverse(a)) = identity.
Automorphism inverse(const Automorphism& a);

// All 2^n * n! automorphisms (identity first, then deterministic order).
// Throws capacity_error above the enumeration cap.
std::vector<Automorphism> all_automorphisms(int n, int cap = kDefaultEnumerationCap);

// Materialized action table: entry x is apply(a, x). Size 2^n.
std::vector<Node> action_table(const Automorphism& a);

// Shared per-dimension cache of all action tables, built on first use.
const std::vector<std::vector<Node>>& all_action_tables(int n, int cap = kDefaultEnumerationCap);

}  // namespace rankatlas
