#include "rankatlas/climb.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "rankatlas/hypercube.hpp"

namespace rankatlas {

namespace {

// improving (strictly smaller-rank) neighbors of x; best-improvement keeps
// only those achieving the minimum neighbor rank
std::vector<Node> successor_set(const RankVector& rv, Node x, ClimbPolicy policy,
                                int* improving_count) {
    std::vector<Node> improving;
    Rank best_rank = rv.ranks[x];
    for (int bit = 0; bit < rv.n; ++bit) {
        const Node y = x ^ (Node{1} << bit);
        if (rv.ranks[y] < rv.ranks[x]) {
            improving.push_back(y);
            best_rank = std::min(best_rank, rv.ranks[y]);
        }
    }
    *improving_count = static_cast<int>(improving.size());
    if (policy == ClimbPolicy::best_improvement) {
        std::erase_if(improving, [&](Node y) { return rv.ranks[y] != best_rank; });
    }
    return improving;
}

}  // namespace

ClimbReport analyze_climber(const RankVector& rv, ClimbPolicy policy) {
    check_rank_vector(rv);
    const std::uint32_t size = num_nodes(rv.n);
    const int n = rv.n;

    // process nodes in ascending rank order so successors (strictly smaller
    // rank) are always finished first
    std::vector<Node> order(size);
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(),
              [&](Node a, Node b) { return rv.ranks[a] != rv.ranks[b] ? rv.ranks[a] < rv.ranks[b] : a < b; });

    // per-node success probability and success/fail-weighted expected steps
    // and scan evaluations (the initial evaluation is added at aggregation)
    std::vector<Rational> s(size), steps_s(size), steps_f(size), evals_s(size), evals_f(size);
    for (const Node x : order) {
        int improving_count = 0;
        const std::vector<Node> successors = successor_set(rv, x, policy, &improving_count);
        if (successors.empty()) {
            const bool win = rv.ranks[x] == 1;
            s[x] = win ? 1 : 0;
            (win ? evals_s : evals_f)[x] = n;  // terminal full scan
            continue;
        }
        for (const Node y : successors) {
            if (rv.ranks[y] >= rv.ranks[x]) throw std::logic_error("non-improving move edge");
        }
        Rational cost;
        if (policy == ClimbPolicy::best_improvement) {
            cost = n;
        } else {
            cost = Rational(n + 1, improving_count + 1);
            cost.canonicalize();
        }
        const unsigned long m = successors.size();
        for (const Node y : successors) {
            s[x] += s[y];
            steps_s[x] += steps_s[y];
            steps_f[x] += steps_f[y];
            evals_s[x] += evals_s[y];
            evals_f[x] += evals_f[y];
        }
        s[x] /= m;
        steps_s[x] = steps_s[x] / m + s[x];
        steps_f[x] = steps_f[x] / m + (1 - s[x]);
        evals_s[x] = evals_s[x] / m + cost * s[x];
        evals_f[x] = evals_f[x] / m + cost * (1 - s[x]);
    }

    Rational p, mean_steps_s, mean_steps_f, mean_evals_s, mean_evals_f;
    for (Node x = 0; x < size; ++x) {
        p += s[x];
        mean_steps_s += steps_s[x];
        mean_steps_f += steps_f[x];
        mean_evals_s += evals_s[x] + s[x];        // + initial evaluation
        mean_evals_f += evals_f[x] + (1 - s[x]);  //
    }
    p /= size;
    mean_steps_s /= size;
    mean_steps_f /= size;
    mean_evals_s /= size;
    mean_evals_f /= size;

    if (p * size < 1) throw std::logic_error("success rate below 1/2^n");

    ClimbReport report;
    report.success_rate = p;
    report.exp_steps_success = mean_steps_s / p;
    report.exp_evals_success = mean_evals_s / p;
    if (p < 1) {
        const Rational q = 1 - p;
        report.has_fail = true;
        report.exp_steps_fail = mean_steps_f / q;
        report.exp_evals_fail = mean_evals_f / q;
        report.multistart_ert = report.exp_evals_success + (q / p) * report.exp_evals_fail;
    } else {
        report.multistart_ert = report.exp_evals_success;
    }
    return report;
}

ClimbReport analyze_best(const RankVector& rv) {
    return analyze_climber(rv, ClimbPolicy::best_improvement);
}

ClimbReport analyze_first(const RankVector& rv) {
    return analyze_climber(rv, ClimbPolicy::first_improvement);
}

ClimbComparison compare(const ClimbReport& best, const ClimbReport& first) {
    ClimbComparison result;
    const int by_success = cmp(best.success_rate, first.success_rate);
    if (by_success > 0) result.success = Advantage::best;
    if (by_success < 0) result.success = Advantage::first;
    const int by_ert = cmp(best.multistart_ert, first.multistart_ert);
    if (by_ert < 0) result.ert = Advantage::best;
    if (by_ert > 0) result.ert = Advantage::first;
    return result;
}

SimulationSummary simulate_climber(const RankVector& rv, ClimbPolicy policy,
                                   std::uint64_t runs, std::uint64_t seed) {
    check_rank_vector(rv);
    const std::uint32_t size = num_nodes(rv.n);
    const int n = rv.n;

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> start_dist(0, size - 1);
    std::vector<int> scan_order(static_cast<std::size_t>(n));
    std::iota(scan_order.begin(), scan_order.end(), 0);

    SimulationSummary sum;
    sum.runs = runs;
    double steps_success = 0, evals_success = 0, steps_fail = 0, evals_fail = 0;
    for (std::uint64_t run = 0; run < runs; ++run) {
        Node x = start_dist(rng);
        std::uint64_t steps = 0, evals = 1;
        for (;;) {
            if (policy == ClimbPolicy::best_improvement) {
                evals += static_cast<std::uint64_t>(n);
                std::vector<Node> best_set;
                Rank best_rank = rv.ranks[x];
                for (int bit = 0; bit < n; ++bit) {
                    const Node y = x ^ (Node{1} << bit);
                    if (rv.ranks[y] < best_rank) {
                        best_rank = rv.ranks[y];
                        best_set.assign(1, y);
                    } else if (rv.ranks[y] == best_rank && best_rank < rv.ranks[x]) {
                        best_set.push_back(y);
                    }
                }
                if (best_set.empty()) break;
                std::uniform_int_distribution<std::size_t> pick(0, best_set.size() - 1);
                x = best_set[pick(rng)];
            } else {
                std::shuffle(scan_order.begin(), scan_order.end(), rng);
                Node next = x;
                for (const int bit : scan_order) {
                    ++evals;
                    const Node y = x ^ (Node{1} << bit);
                    if (rv.ranks[y] < rv.ranks[x]) {
                        next = y;
                        break;
                    }
                }
                if (next == x) break;
                x = next;
            }
            ++steps;
        }
        if (rv.ranks[x] == 1) {
            ++sum.successes;
            steps_success += static_cast<double>(steps);
            evals_success += static_cast<double>(evals);
        } else {
            steps_fail += static_cast<double>(steps);
            evals_fail += static_cast<double>(evals);
        }
    }

    const double r = static_cast<double>(runs);
    const double wins = static_cast<double>(sum.successes);
    const double losses = r - wins;
    sum.success_rate = wins / r;
    sum.success_se = std::sqrt(sum.success_rate * (1.0 - sum.success_rate) / r);
    if (sum.successes > 0) {
        sum.mean_steps_success = steps_success / wins;
        sum.mean_evals_success = evals_success / wins;
    }
    if (losses > 0) {
        sum.mean_steps_fail = steps_fail / losses;
        sum.mean_evals_fail = evals_fail / losses;
    }
    return sum;
}

}  // namespace rankatlas
