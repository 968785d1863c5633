#include <doctest.h>

#include <vector>

#include "rankatlas/canon.hpp"
#include "rankatlas/props.hpp"
#include "rankatlas/rankspace.hpp"

using namespace rankatlas;

namespace {

RankVector make_rv(int n, std::vector<Rank> ranks) {
    RankVector rv;
    rv.n = n;
    rv.ranks = std::move(ranks);
    check_rank_vector(rv);
    return rv;
}

}  // namespace

TEST_CASE("single-optimum smooth landscape") {
    const PropertyReport r = analyze(make_rv(2, {3, 2, 2, 1}));
    CHECK(r.k_ranks == 3);
    CHECK(r.global_optima == 1);
    CHECK(r.strict_suboptima == 0);
    CHECK(r.weak_suboptima == 0);
    CHECK(r.suboptima() == 0);
    CHECK(r.neutral_edges == 0);  // the two rank-B nodes are not adjacent
    CHECK(r.neutral_node_count == 0);
    CHECK(r.neutral_networks == 0);
    CHECK(r.deceptive_flag == DeceptiveKind::none);
    CHECK_FALSE(r.neutral_flag);
    CHECK_FALSE(r.plateau_flag);
}

TEST_CASE("strict suboptimum makes the landscape strictly deceptive") {
    const PropertyReport r = analyze(make_rv(2, {2, 3, 4, 1}));
    CHECK(r.k_ranks == 4);
    CHECK(r.global_optima == 1);
    CHECK(r.strict_suboptima == 1);  // node 00 beats both neighbors
    CHECK(r.weak_suboptima == 0);
    CHECK(r.deceptive_flag == DeceptiveKind::strict);
    CHECK(r.neutral_edges == 0);
    CHECK_FALSE(r.plateau_flag);
}

TEST_CASE("constant landscape is one optimal plateau") {
    const PropertyReport r = analyze(make_rv(2, {1, 1, 1, 1}));
    CHECK(r.k_ranks == 1);
    CHECK(r.global_optima == 4);
    CHECK(r.suboptima() == 0);
    CHECK(r.neutral_edges == 4);  // the four square edges
    CHECK(r.neutral_node_count == 4);
    CHECK(r.neutral_networks == 1);
    CHECK(r.optimal_plateaus == 1);
    CHECK(r.suboptimal_plateaus == 0);
    CHECK(r.neutral_flag);
    CHECK(r.plateau_flag);
    CHECK(r.deceptive_flag == DeceptiveKind::none);
}

TEST_CASE("weak suboptimum: equal-rank escape exists but no strict improvement") {
    // node 11 has neighbors 01 and 10, both rank B like itself; node 00 is A
    const PropertyReport r = analyze(make_rv(2, {1, 2, 2, 2}));
    CHECK(r.global_optima == 1);
    CHECK(r.strict_suboptima == 0);
    CHECK(r.weak_suboptima == 1);
    CHECK(r.deceptive_flag == DeceptiveKind::weak);
    CHECK(r.neutral_edges == 2);
    CHECK(r.neutral_node_count == 3);
    CHECK(r.neutral_networks == 1);
    // the B-network contains non-optima (01 and 10 see 00), so no plateau
    CHECK(r.optimal_plateaus == 0);
    CHECK(r.suboptimal_plateaus == 0);
    CHECK(r.neutral_flag);
    CHECK_FALSE(r.plateau_flag);

    const auto nets = neutral_components(make_rv(2, {1, 2, 2, 2}));
    REQUIRE(nets.size() == 1);
    CHECK(nets[0] == std::vector<Node>{1, 2, 3});
}

TEST_CASE("suboptimal plateau on the cube") {
    // B-pair 000-001 adjacent, every exit strictly worse; A hides at 111.
    // the rank-C mass forms a second network that touches the B-pair, so it
    // is neutral but not a plateau
    const PropertyReport r = analyze(make_rv(3, {2, 2, 3, 3, 3, 3, 3, 1}));
    CHECK(r.k_ranks == 3);
    CHECK(r.global_optima == 1);
    CHECK(r.strict_suboptima == 0);
    CHECK(r.weak_suboptima == 2);
    CHECK(r.neutral_edges == 5);
    CHECK(r.neutral_node_count == 7);
    CHECK(r.neutral_networks == 2);
    CHECK(r.optimal_plateaus == 0);
    CHECK(r.suboptimal_plateaus == 1);
    CHECK(r.plateau_flag);
    CHECK(r.deceptive_flag == DeceptiveKind::weak);

    // no 4-node landscape has room for a suboptimal plateau: its exits must
    // all be worse, yet rank 1 must live somewhere
    enumerate_all_rank_vectors(2, [](const RankVector& rv) {
        CHECK(analyze(rv).suboptimal_plateaus == 0);
    });
}

TEST_CASE("neutral node count equals total network membership") {
    int checked = 0;
    enumerate_all_rank_vectors(2, [&](const RankVector& rv) {
        const PropertyReport r = analyze(rv);
        const auto nets = neutral_components(rv);
        CHECK(nets.size() == r.neutral_networks);
        std::size_t members = 0;
        for (const auto& net : nets) members += net.size();
        CHECK(members == r.neutral_node_count);
        CHECK(r.neutral_flag == (r.neutral_edges > 0));
        if (r.plateau_flag) CHECK(r.neutral_flag);  // plateau implies neutrality
        CHECK(r.global_optima >= 1);
        ++checked;
    });
    CHECK(checked == 75);
}

TEST_CASE("two-dimensional class aggregates") {
    const auto classes = classify_all(2);
    REQUIRE(classes.size() == 14);
    int neutral = 0, plateau = 0, strict = 0, weak = 0, both = 0;
    for (const auto& entry : classes) {
        const PropertyReport r = analyze(entry.canonical);
        if (r.neutral_flag) ++neutral;
        if (r.plateau_flag) ++plateau;
        if (r.deceptive_flag == DeceptiveKind::strict) ++strict;
        if (r.deceptive_flag == DeceptiveKind::weak) ++weak;
        if (r.plateau_flag && r.deceptive_flag != DeceptiveKind::none) ++both;
    }
    CHECK(neutral == 7);
    CHECK(plateau == 4);
    CHECK(strict == 2);
    CHECK(weak == 2);
    CHECK(both == 0);  // on the square no deceptive class carries a plateau
}

TEST_CASE("deceptive kind names round-trip") {
    for (DeceptiveKind kind :
         {DeceptiveKind::none, DeceptiveKind::weak, DeceptiveKind::strict}) {
        CHECK(deceptive_kind_from_string(to_string(kind)) == kind);
    }
}
