#include "rankatlas/canon.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "rankatlas/errors.hpp"

namespace rankatlas {

namespace {

// Nibble packing supports 2^n <= 16 entries with ranks <= 15; the hard cap
// below keeps every packed rank vector at n <= 3 (8 nibbles, ranks <= 8).
constexpr int kMaxPackedDimension = 3;

void check_packable(int n, int cap) {
    check_enumeration_dimension(n, std::min(cap, kMaxPackedDimension));
}

// Packs a rank vector into one 64-bit key with node 0 in the most significant
// nibble, so unsigned comparison of keys equals lexicographic comparison of
// rank sequences.
std::uint64_t pack_key(const std::vector<Rank>& ranks) {
    std::uint64_t key = 0;
    for (Rank r : ranks) key = (key << 4) | static_cast<std::uint64_t>(r);
    return key;
}

std::vector<Rank> unpack_key(std::uint64_t key, std::uint32_t size) {
    std::vector<Rank> ranks(size);
    for (std::uint32_t i = 0; i < size; ++i) {
        ranks[size - 1 - i] = static_cast<Rank>(key & 0xF);
        key >>= 4;
    }
    return ranks;
}

}  // namespace

RankVector transform(const Automorphism& a, const RankVector& rv) {
    if (a.n() != rv.n) throw domain_error("automorphism and rank vector dimensions differ");
    check_rank_vector(rv);
    RankVector out;
    out.n = rv.n;
    out.ranks.resize(rv.ranks.size());
    const std::uint32_t size = num_nodes(rv.n);
    for (Node x = 0; x < size; ++x) out.ranks[x] = rv.ranks[apply(a, x)];
    return out;
}

std::pair<CanonicalForm, OrbitInfo> canonicalize(const RankVector& rv, int cap) {
    check_packable(rv.n, cap);
    check_rank_vector(rv);
    const auto& tables = all_action_tables(rv.n, cap);
    const std::uint32_t size = num_nodes(rv.n);

    const std::uint64_t self = pack_key(rv.ranks);
    std::uint64_t best = ~std::uint64_t{0};
    std::uint32_t stabilizer = 0;
    std::vector<std::uint64_t> orbit_keys;
    orbit_keys.reserve(tables.size());
    for (const auto& table : tables) {
        std::uint64_t key = 0;
        for (Node x = 0; x < size; ++x) {
            key = (key << 4) | static_cast<std::uint64_t>(rv.ranks[table[x]]);
        }
        orbit_keys.push_back(key);
        best = std::min(best, key);
        if (key == self) ++stabilizer;
    }
    std::sort(orbit_keys.begin(), orbit_keys.end());
    orbit_keys.erase(std::unique(orbit_keys.begin(), orbit_keys.end()), orbit_keys.end());

    OrbitInfo info;
    info.orbit_size = static_cast<std::uint32_t>(orbit_keys.size());
    info.stabilizer_order = stabilizer;
    if (static_cast<std::uint64_t>(info.orbit_size) * info.stabilizer_order != group_order(rv.n)) {
        throw std::logic_error("orbit-stabilizer identity violated");
    }

    CanonicalForm canon;
    canon.rv.n = rv.n;
    canon.rv.ranks = unpack_key(best, size);
    return {std::move(canon), info};
}

std::vector<ClassEntry> classify_all(int n, int cap) {
    check_packable(n, cap);
    const auto& tables = all_action_tables(n, cap);
    const std::uint32_t size = num_nodes(n);

    // enumerated-member count per canonical key; each orbit member appears in
    // the enumeration exactly once, so the count is the orbit size
    std::unordered_map<std::uint64_t, std::uint32_t> members;
    members.reserve(1u << 15);
    enumerate_all_rank_vectors(
        n,
        [&](const RankVector& rv) {
            std::uint64_t best = ~std::uint64_t{0};
            for (const auto& table : tables) {
                std::uint64_t key = 0;
                for (Node x = 0; x < size; ++x) {
                    key = (key << 4) | static_cast<std::uint64_t>(rv.ranks[table[x]]);
                }
                best = std::min(best, key);
            }
            ++members[best];
        },
        cap);

    std::vector<ClassEntry> classes;
    classes.reserve(members.size());
    for (const auto& [key, count] : members) {
        ClassEntry entry;
        entry.canonical.n = n;
        entry.canonical.ranks = unpack_key(key, size);
        auto [canon, info] = canonicalize(entry.canonical, cap);
        if (canon.rv.ranks != entry.canonical.ranks || info.orbit_size != count) {
            throw std::logic_error("class aggregation inconsistent with canonicalization");
        }
        entry.orbit = info;
        classes.push_back(std::move(entry));
    }
    std::sort(classes.begin(), classes.end(), [](const ClassEntry& a, const ClassEntry& b) {
        return a.canonical.ranks < b.canonical.ranks;
    });
    return classes;
}

BigCount count_injective_classes(int n) {
    check_dimension(n);
    const std::uint32_t size = num_nodes(n);
    mpz_class numerator, denominator;
    mpz_fac_ui(numerator.get_mpz_t(), size - 1);
    mpz_fac_ui(denominator.get_mpz_t(), static_cast<unsigned>(n));
    mpz_divexact(numerator.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
    return numerator;
}

}  // namespace rankatlas
