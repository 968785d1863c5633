#include "rankatlas/props.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "rankatlas/errors.hpp"
#include "rankatlas/hypercube.hpp"

namespace rankatlas {

const char* to_string(DeceptiveKind kind) {
    switch (kind) {
        case DeceptiveKind::none: return "none";
        case DeceptiveKind::weak: return "weak";
        case DeceptiveKind::strict: return "strict";
    }
    throw std::logic_error("unknown DeceptiveKind");
}

DeceptiveKind deceptive_kind_from_string(const std::string& text) {
    if (text == "none") return DeceptiveKind::none;
    if (text == "weak") return DeceptiveKind::weak;
    if (text == "strict") return DeceptiveKind::strict;
    throw domain_error("unknown deceptive kind: " + text);
}

std::vector<std::vector<Node>> neutral_components(const RankVector& rv) {
    check_rank_vector(rv);
    const std::uint32_t size = num_nodes(rv.n);

    // union-find over nodes joined by equal-rank edges
    std::vector<Node> parent(size);
    std::iota(parent.begin(), parent.end(), 0u);
    auto find = [&](Node x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (Node x = 0; x < size; ++x) {
        for (int bit = 0; bit < rv.n; ++bit) {
            const Node y = x ^ (Node{1} << bit);
            if (y > x && rv.ranks[x] == rv.ranks[y]) parent[find(x)] = find(y);
        }
    }

    std::vector<std::vector<Node>> buckets(size);
    for (Node x = 0; x < size; ++x) buckets[find(x)].push_back(x);

    std::vector<std::vector<Node>> components;
    for (auto& bucket : buckets) {
        if (bucket.size() >= 2) components.push_back(std::move(bucket));
    }
    return components;  // bucket index = smallest member, so order is by it
}

PropertyReport analyze(const RankVector& rv) {
    check_rank_vector(rv);
    const std::uint32_t size = num_nodes(rv.n);

    PropertyReport report;
    report.n = rv.n;
    report.k_ranks = rank_count(rv);

    std::vector<bool> local_opt(size, false);
    std::vector<bool> has_neutral_edge(size, false);
    for (Node x = 0; x < size; ++x) {
        bool improving = false;
        bool equal = false;
        for (int bit = 0; bit < rv.n; ++bit) {
            const Node y = x ^ (Node{1} << bit);
            if (rv.ranks[y] < rv.ranks[x]) improving = true;
            if (rv.ranks[y] == rv.ranks[x]) {
                equal = true;
                has_neutral_edge[x] = true;
                if (y > x) ++report.neutral_edges;
            }
        }
        local_opt[x] = !improving;
        if (rv.ranks[x] == 1) {
            ++report.global_optima;
        } else if (!improving) {
            if (equal) {
                ++report.weak_suboptima;
            } else {
                ++report.strict_suboptima;
            }
        }
    }

    for (Node x = 0; x < size; ++x) {
        if (has_neutral_edge[x]) ++report.neutral_node_count;
    }

    for (const auto& network : neutral_components(rv)) {
        ++report.neutral_networks;
        bool all_local_opt = true;
        for (const Node x : network) all_local_opt = all_local_opt && local_opt[x];
        if (!all_local_opt) continue;
        if (rv.ranks[network.front()] == 1) {
            ++report.optimal_plateaus;
        } else {
            ++report.suboptimal_plateaus;
        }
    }

    if (report.strict_suboptima >= 1) {
        report.deceptive_flag = DeceptiveKind::strict;
    } else if (report.weak_suboptima >= 1) {
        report.deceptive_flag = DeceptiveKind::weak;
    }
    report.neutral_flag = report.neutral_edges >= 1;
    report.plateau_flag = report.plateaus() >= 1;
    return report;
}

}  // namespace rankatlas
