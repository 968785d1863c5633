// Topological property report of a rank landscape: optima, suboptima,
// neutrality, neutral networks, and plateaus.
//
// Definitions (minimization; smaller rank = better):
//   global optimum    rank-1 node
//   local optimum     node with no strictly smaller-rank neighbor
//   strict suboptimum local optimum, rank != 1, all neighbors strictly worse
//   weak suboptimum   local optimum, rank != 1, >= 1 equal-rank neighbor
//   neutral edge      adjacent pair with equal rank
//   neutral network   connected component of the neutral subgraph, >= 2 nodes
//   plateau           neutral network whose nodes are all local optima;
//                     optimal if its rank is 1, else suboptimal
#pragma once

#include <cstdint>
#include <vector>

#include "rankatlas/rankspace.hpp"

namespace rankatlas {

enum class DeceptiveKind : std::uint8_t { none, weak, strict };

const char* to_string(DeceptiveKind kind);
DeceptiveKind deceptive_kind_from_string(const std::string& text);

struct PropertyReport {
    int n = 0;
    int k_ranks = 0;
    std::uint32_t global_optima = 0;
    std::uint32_t strict_suboptima = 0;
    std::uint32_t weak_suboptima = 0;
    std::uint32_t neutral_edges = 0;
    std::uint32_t neutral_node_count = 0;  // nodes incident to >= 1 neutral edge
    std::uint32_t neutral_networks = 0;
    std::uint32_t optimal_plateaus = 0;
    std::uint32_t suboptimal_plateaus = 0;
    DeceptiveKind deceptive_flag = DeceptiveKind::none;
    bool neutral_flag = false;
    bool plateau_flag = false;

    // combined trap count, the "suboptima" column of the class tables
    std::uint32_t suboptima() const { return strict_suboptima + weak_suboptima; }
    std::uint32_t plateaus() const { return optimal_plateaus + suboptimal_plateaus; }

    bool operator==(const PropertyReport&) const = default;
};

// Neutral networks of rv: connected components of the equal-rank subgraph with
// at least two nodes, each sorted ascending, ordered by smallest member.
std::vector<std::vector<Node>> neutral_components(const RankVector& rv);

PropertyReport analyze(const RankVector& rv);

}  // namespace rankatlas
