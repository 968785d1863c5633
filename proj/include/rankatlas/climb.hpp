// Exact analysis of best-improvement and first-improvement hill climbers on a
// rank landscape, in exact rational arithmetic. Every move strictly improves
// rank, so the move graph is acyclic and a single dynamic-programming pass
// over nodes sorted by rank yields exact absorption probabilities and
// expected step/evaluation counts.
//
// Evaluation accounting (reproduces the 2D reference performance tables):
//   - 1 evaluation for the initial solution;
//   - best-improvement: n evaluations per neighborhood scan, including the
//     terminal scan, so total evals = 1 + n * (steps + 1);
//   - first-improvement: neighbors are scanned in uniformly random order and
//     the scan stops at the first improving one, costing (n+1)/(m+1) expected
//     evaluations at a node with m improving neighbors; terminal scans cost n.
//
// Multi-start ERT = E_s + ((1-p)/p) * E_f with independent uniform restarts.
#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "rankatlas/rankspace.hpp"

namespace rankatlas {

using Rational = mpq_class;

enum class ClimbPolicy : std::uint8_t { best_improvement, first_improvement };

struct ClimbReport {
    Rational success_rate;       // p, over a uniform random start
    Rational exp_steps_success;  // conditional on success
    Rational exp_evals_success;
    bool has_fail = false;       // p < 1; fail-side metrics valid only then
    Rational exp_steps_fail;
    Rational exp_evals_fail;
    Rational multistart_ert;

    bool operator==(const ClimbReport&) const = default;
};

ClimbReport analyze_climber(const RankVector& rv, ClimbPolicy policy);
ClimbReport analyze_best(const RankVector& rv);
ClimbReport analyze_first(const RankVector& rv);

// Which climber wins a metric: higher success rate, lower multi-start ERT.
enum class Advantage : std::uint8_t { best, first, tie };

struct ClimbComparison {
    Advantage success = Advantage::tie;
    Advantage ert = Advantage::tie;
};

ClimbComparison compare(const ClimbReport& best, const ClimbReport& first);

// Monte-Carlo oracle for the exact analysis, same move and accounting model.
struct SimulationSummary {
    std::uint64_t runs = 0;
    std::uint64_t successes = 0;
    double success_rate = 0.0;
    double success_se = 0.0;          // binomial standard error of success_rate
    double mean_steps_success = 0.0;  // 0 when the side is empty
    double mean_evals_success = 0.0;
    double mean_steps_fail = 0.0;
    double mean_evals_fail = 0.0;
};

SimulationSummary simulate_climber(const RankVector& rv, ClimbPolicy policy,
                                   std::uint64_t runs, std::uint64_t seed);

}  // namespace rankatlas
