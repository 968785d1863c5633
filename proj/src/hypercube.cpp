#include "rankatlas/hypercube.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <numeric>

#include "rankatlas/errors.hpp"

namespace rankatlas {

int check_dimension(int n) {
    if (n < 1) throw domain_error("dimension must be >= 1, got " + std::to_string(n));
    return n;
}

int check_enumeration_dimension(int n, int cap) {
    check_dimension(n);
    if (n > cap) {
        throw capacity_error("full enumeration is capped at n <= " + std::to_string(cap) +
                             " (requested n = " + std::to_string(n) + ")");
    }
    return n;
}

std::uint32_t num_nodes(int n) {
    check_dimension(n);
    if (n > 31) throw domain_error("node indices require n <= 31");
    return std::uint32_t{1} << n;
}

std::uint64_t group_order(int n) {
    check_dimension(n);
    if (n > 12) throw domain_error("group order materialization requires n <= 12");
    std::uint64_t order = std::uint64_t{1} << n;
    for (int i = 2; i <= n; ++i) order *= static_cast<std::uint64_t>(i);
    return order;
}

namespace {

void check_node(Node x, int n) {
    if (x >= num_nodes(n)) {
        throw domain_error("node index " + std::to_string(x) + " out of range for n = " +
                           std::to_string(n));
    }
}

}  // namespace

std::string node_string(Node x, int n) {
    check_node(x, n);
    std::string s(static_cast<std::size_t>(n), '0');
    for (int i = 0; i < n; ++i) {
        if ((x >> i) & 1u) s[static_cast<std::size_t>(n - 1 - i)] = '1';
    }
    return s;
}

std::vector<Node> neighbors(Node x, int n) {
    check_node(x, n);
    std::vector<Node> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out.push_back(x ^ (Node{1} << i));
    return out;
}

Automorphism identity_automorphism(int n) {
    check_dimension(n);
    Automorphism a;
    a.rotation.resize(static_cast<std::size_t>(n));
    std::iota(a.rotation.begin(), a.rotation.end(), std::uint8_t{0});
    return a;
}

Node apply(const Automorphism& a, Node x) {
    const int n = a.n();
    check_node(x, n);
    Node rotated = 0;
    for (int i = 0; i < n; ++i) {
        if ((x >> a.rotation[static_cast<std::size_t>(i)]) & 1u) rotated |= Node{1} << i;
    }
    return rotated ^ a.translation;
}

Automorphism compose(const Automorphism& a, const Automorphism& b) {
    if (a.n() != b.n()) throw domain_error("cannot compose automorphisms of different dimensions");
    const int n = a.n();
    Automorphism c;
    c.rotation.resize(static_cast<std::size_t>(n));
    // apply(a, apply(b, x)) bit i = x bit sigma_b(sigma_a(i)) XOR z_b bit sigma_a(i) XOR z_a bit i
    Node zc = 0;
    for (int i = 0; i < n; ++i) {
        const std::uint8_t via = a.rotation[static_cast<std::size_t>(i)];
        c.rotation[static_cast<std::size_t>(i)] = b.rotation[via];
        if ((b.translation >> via) & 1u) zc |= Node{1} << i;
    }
    c.translation = zc ^ a.translation;
    return c;
}

Automorphism inverse(const Automorphism& a) {
    const int n = a.n();
    Automorphism inv;
    inv.rotation.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        inv.rotation[a.rotation[static_cast<std::size_t>(i)]] = static_cast<std::uint8_t>(i);
    }
    // solve compose(inv, a) = identity for the translation part
    Node z = 0;
    for (int i = 0; i < n; ++i) {
        if ((a.translation >> inv.rotation[static_cast<std::size_t>(i)]) & 1u) z |= Node{1} << i;
    }
    inv.translation = z;
    return inv;
}

std::vector<Automorphism> all_automorphisms(int n, int cap) {
    check_enumeration_dimension(n, cap);
    const std::uint32_t size = num_nodes(n);
    std::vector<std::uint8_t> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), std::uint8_t{0});

    std::vector<Automorphism> group;
    group.reserve(group_order(n));
    // identity first (perm starts sorted, z = 0 first)
    do {
        for (std::uint32_t z = 0; z < size; ++z) {
            Automorphism a;
            a.translation = z;
            a.rotation = perm;
            group.push_back(std::move(a));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return group;
}

std::vector<Node> action_table(const Automorphism& a) {
    const std::uint32_t size = num_nodes(a.n());
    std::vector<Node> table(size);
    for (Node x = 0; x < size; ++x) table[x] = apply(a, x);
    return table;
}

const std::vector<std::vector<Node>>& all_action_tables(int n, int cap) {
    check_enumeration_dimension(n, cap);
    static std::mutex mutex;
    static std::map<int, std::vector<std::vector<Node>>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) {
        std::vector<std::vector<Node>> tables;
        for (const Automorphism& a : all_automorphisms(n, cap)) tables.push_back(action_table(a));
        it = cache.emplace(n, std::move(tables)).first;
    }
    return it->second;
}

}  // namespace rankatlas
