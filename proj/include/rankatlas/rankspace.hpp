// Rank vectors over the hypercube, partition and rank-vector enumeration, and
// exact closed-form counting of rank-invariant functions for arbitrary n.
//
// A rank vector assigns each node the position of its fitness value among the
// sorted distinct values (1 = best under minimization, displayed as letter A).
// Surjectivity onto {1..k} is an invariant of the type.
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "rankatlas/hypercube.hpp"

namespace rankatlas {

// Exact arbitrary-precision count.
using BigCount = mpz_class;

using Rank = std::uint16_t;

struct RankVector {
    int n = 0;
    std::vector<Rank> ranks;  // size 2^n, values 1..k, every value in 1..k present

    friend bool operator==(const RankVector&, const RankVector&) = default;
};

// Number of distinct ranks k = max entry.
Rank rank_count(const RankVector& rv);

// Throws domain_error unless rv has 2^n entries forming a surjection onto {1..k}.
void check_rank_vector(const RankVector& rv);

// Letter display: rank 1 -> 'A', 2 -> 'B', ... ("CADB" for ranks (3,1,4,2)).
std::string rank_letters(const RankVector& rv);

// lambda_i = number of nodes with rank i; sum = 2^n, every part >= 1.
struct Partition {
    std::vector<std::uint32_t> parts;

    std::uint32_t total() const;
    int k() const { return static_cast<int>(parts.size()); }
    friend bool operator==(const Partition&, const Partition&) = default;
};

// Ranks fitness values for minimization: entry i = 1 + #distinct values strictly
// below fitness[i]. Ties must be bit-equal (exact comparison; any tolerance is
// applied by the caller before ranking). Throws domain_error on wrong length or
// non-finite entries.
RankVector rank_of(const std::vector<double>& fitness, int n);

Partition partition_of(const RankVector& rv);

// All C(2^n - 1, k - 1) partitions of 2^n into exactly k ordered parts, in the
// deterministic order of the iterative next(v) process: v is a nondecreasing
// vector of 2^n - k part indices (the units above the mandatory one per part),
// advanced lexicographically; lambda_j = 1 + multiplicity of j in v.
std::vector<Partition> enumerate_partitions(int n, int k);

// (2^n)! / prod(lambda_j!) exactly.
BigCount count_rank_functions(const Partition& lambda, int n);

struct RankingCounts {
    BigCount total_rankings;               // sum over k of rankings_per_k
    BigCount total_partitions;             // 2^(2^n - 1)
    std::vector<BigCount> rankings_per_k;  // index k-1, k = 1..2^n
    std::vector<BigCount> partitions_per_k;
};

// Closed-form counts for any n >= 1 (pure big-integer arithmetic, no cap).
// rankings_per_k is computed by inclusion-exclusion over surjections, which
// equals the sum of count_rank_functions over all k-part partitions.
RankingCounts count_rankings(int n);

// Ordered Bell (Fubini) number of m elements via the recurrence
// a(m) = sum_{j=1..m} C(m, j) a(m - j), a(0) = 1. Independent counting oracle.
BigCount ordered_bell(unsigned m);

// Streams all F_lambda distinct rank vectors with the given partition in
// lexicographic order (multiset permutations). Throws capacity_error above cap.
void enumerate_rank_vectors(const Partition& lambda, int n,
                            const std::function<void(const RankVector&)>& sink,
                            int cap = kDefaultEnumerationCap);

// Streams every rank vector of dimension n in the global deterministic order:
// partitions by k = 1..2^n, next(v) order within k, lexicographic within a
// partition. Visits count_rankings(n).total_rankings vectors.
void enumerate_all_rank_vectors(int n, const std::function<void(const RankVector&)>& sink,
                                int cap = kDefaultEnumerationCap);

}  // namespace rankatlas
