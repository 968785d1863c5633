#include <doctest.h>

#include <cmath>
#include <vector>

#include "rankatlas/canon.hpp"
#include "rankatlas/climb.hpp"
#include "rankatlas/format.hpp"
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

TEST_CASE("best-improvement on the injective gradient square") {
    const ClimbReport r = analyze_best(make_rv(2, {1, 2, 3, 4}));
    CHECK(r.success_rate == 1);
    CHECK_FALSE(r.has_fail);
    CHECK(r.exp_steps_success == 1);
    CHECK(r.exp_evals_success == 5);
    CHECK(r.multistart_ert == 5);
}

TEST_CASE("best-improvement with a strict trap") {
    // node 00 is a strict suboptimum: 1/4 of starts are absorbed there
    const ClimbReport r = analyze_best(make_rv(2, {2, 3, 4, 1}));
    CHECK(r.success_rate == Rational(3, 4));
    CHECK(r.has_fail);
    CHECK(r.exp_steps_success == Rational(2, 3));
    CHECK(r.exp_evals_success == Rational(13, 3));
    CHECK(r.exp_steps_fail == 0);
    CHECK(r.exp_evals_fail == 3);
    CHECK(r.multistart_ert == Rational(16, 3));
}

TEST_CASE("constant landscape: every start already succeeds") {
    for (ClimbPolicy policy :
         {ClimbPolicy::best_improvement, ClimbPolicy::first_improvement}) {
        const ClimbReport r = analyze_climber(make_rv(2, {1, 1, 1, 1}), policy);
        CHECK(r.success_rate == 1);
        CHECK(r.exp_steps_success == 0);
        CHECK(r.exp_evals_success == 3);  // initial + one terminal scan
        CHECK(r.multistart_ert == 3);
    }
}

TEST_CASE("first-improvement partial scans") {
    // gradient square: one improving neighbor costs 3/2 expected evals
    const ClimbReport grad = analyze_first(make_rv(2, {1, 2, 3, 4}));
    CHECK(grad.success_rate == 1);
    CHECK(grad.exp_steps_success == 1);
    CHECK(grad.exp_evals_success == Rational(35, 8));

    // path landscape ABDC: the worst node forks toward a detour half the time
    const ClimbReport path = analyze_first(make_rv(2, {1, 2, 4, 3}));
    CHECK(path.success_rate == 1);
    CHECK(path.exp_steps_success == Rational(5, 4));
    CHECK(path.exp_evals_success == Rational(19, 4));

    // the trap landscape: the two middle nodes fall into the trap half the time
    const ClimbReport trap = analyze_first(make_rv(2, {2, 3, 4, 1}));
    CHECK(trap.success_rate == Rational(1, 2));
    CHECK(trap.exp_steps_success == Rational(1, 2));
    CHECK(trap.exp_evals_success == Rational(7, 2));
    CHECK(trap.has_fail);
    CHECK(trap.exp_evals_fail == Rational(7, 2));
    CHECK(trap.multistart_ert == 7);
}

TEST_CASE("best-improvement evaluation identity over the cube inventory") {
    // total evals = 1 + n * (steps + 1) holds exactly on both absorption sides
    const auto classes = classify_all(3);
    const Rational n = 3;
    std::size_t stride = 97;  // prime stride keeps the sweep cheap but varied
    for (std::size_t id = 0; id < classes.size(); id += stride) {
        const ClimbReport r = analyze_best(classes[id].canonical);
        CHECK(r.exp_evals_success == 1 + n * (r.exp_steps_success + 1));
        if (r.has_fail) CHECK(r.exp_evals_fail == 1 + n * (r.exp_steps_fail + 1));
    }
}

TEST_CASE("square inventory invariants") {
    const auto classes = classify_all(2);
    REQUIRE(classes.size() == 14);
    int best_success_wins = 0, first_success_wins = 0;
    for (const auto& entry : classes) {
        const ClimbReport best = analyze_best(entry.canonical);
        const ClimbReport first = analyze_first(entry.canonical);

        // a uniform start lands on a global optimum with probability >= 1/2^n
        CHECK(best.success_rate >= Rational(1, 4));
        CHECK(first.success_rate >= Rational(1, 4));
        CHECK(best.has_fail == (best.success_rate != 1));
        if (!best.has_fail) CHECK(best.multistart_ert == best.exp_evals_success);
        if (!first.has_fail) CHECK(first.multistart_ert == first.exp_evals_success);

        const ClimbComparison cmp = compare(best, first);
        if (cmp.success == Advantage::best) ++best_success_wins;
        if (cmp.success == Advantage::first) ++first_success_wins;
    }
    // on the square, first improvement never wins on success rate
    CHECK(best_success_wins == 3);
    CHECK(first_success_wins == 0);
}

TEST_CASE("comparison of a report with itself is a tie") {
    const ClimbReport r = analyze_best(make_rv(2, {2, 3, 4, 1}));
    const ClimbComparison cmp = compare(r, r);
    CHECK(cmp.success == Advantage::tie);
    CHECK(cmp.ert == Advantage::tie);
}

TEST_CASE("simulation oracle agrees with the exact analysis") {
    const std::uint64_t runs = 200000;
    const std::vector<RankVector> cases = {
        make_rv(2, {2, 3, 4, 1}),
        make_rv(3, {2, 2, 3, 3, 3, 3, 3, 1}),
        make_rv(3, {1, 2, 3, 4, 5, 6, 7, 8}),
    };
    for (const RankVector& rv : cases) {
        for (ClimbPolicy policy :
             {ClimbPolicy::best_improvement, ClimbPolicy::first_improvement}) {
            const ClimbReport exact = analyze_climber(rv, policy);
            const SimulationSummary sim = simulate_climber(rv, policy, runs, 987654321);
            const double p = to_double(exact.success_rate);
            CHECK(std::abs(sim.success_rate - p) <= 3.0 * sim.success_se + 1e-12);
            CHECK(std::abs(sim.mean_evals_success - to_double(exact.exp_evals_success)) <
                  0.1);
            if (exact.has_fail) {
                CHECK(std::abs(sim.mean_evals_fail - to_double(exact.exp_evals_fail)) <
                      0.1);
            }
        }
    }
}
