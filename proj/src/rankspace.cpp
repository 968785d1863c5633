#include "rankatlas/rankspace.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rankatlas/errors.hpp"

namespace rankatlas {

Rank rank_count(const RankVector& rv) {
    Rank k = 0;
    for (Rank r : rv.ranks) k = std::max(k, r);
    return k;
}

void check_rank_vector(const RankVector& rv) {
    check_dimension(rv.n);
    const std::uint32_t size = num_nodes(rv.n);
    if (rv.ranks.size() != size) {
        throw domain_error("rank vector has " + std::to_string(rv.ranks.size()) +
                           " entries, expected " + std::to_string(size));
    }
    const Rank k = rank_count(rv);
    if (k < 1 || k > size) throw domain_error("rank count out of range");
    std::vector<bool> seen(static_cast<std::size_t>(k) + 1, false);
    for (Rank r : rv.ranks) {
        if (r < 1 || r > k) throw domain_error("rank value out of range");
        seen[r] = true;
    }
    for (Rank r = 1; r <= k; ++r) {
        if (!seen[r]) throw domain_error("ranks must be surjective onto 1..k; missing " +
                                         std::to_string(r));
    }
}

std::string rank_letters(const RankVector& rv) {
    std::string s;
    s.reserve(rv.ranks.size());
    for (Rank r : rv.ranks) {
        if (r <= 26) {
            s.push_back(static_cast<char>('A' + r - 1));
        } else {
            s += "R" + std::to_string(r);  // beyond 'Z': explicit rank number
        }
    }
    return s;
}

std::uint32_t Partition::total() const {
    std::uint32_t sum = 0;
    for (std::uint32_t part : parts) sum += part;
    return sum;
}

RankVector rank_of(const std::vector<double>& fitness, int n) {
    const std::uint32_t size = num_nodes(n);
    if (fitness.size() != size) {
        throw domain_error("fitness table has " + std::to_string(fitness.size()) +
                           " entries, expected " + std::to_string(size));
    }
    for (double v : fitness) {
        if (!std::isfinite(v)) throw domain_error("fitness values must be finite");
    }
    std::vector<double> distinct(fitness);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

    RankVector rv;
    rv.n = n;
    rv.ranks.reserve(size);
    for (double v : fitness) {
        const auto pos = std::lower_bound(distinct.begin(), distinct.end(), v) - distinct.begin();
        rv.ranks.push_back(static_cast<Rank>(pos + 1));
    }
    return rv;
}

Partition partition_of(const RankVector& rv) {
    check_rank_vector(rv);
    Partition lambda;
    lambda.parts.assign(rank_count(rv), 0);
    for (Rank r : rv.ranks) ++lambda.parts[static_cast<std::size_t>(r) - 1];
    return lambda;
}

std::vector<Partition> enumerate_partitions(int n, int k) {
    const std::uint32_t size = num_nodes(n);
    if (k < 1 || static_cast<std::uint32_t>(k) > size) {
        throw domain_error("partition part count must be in 1..2^n");
    }
    const std::uint32_t units = size - static_cast<std::uint32_t>(k);

    std::vector<Partition> out;
    // v holds the part index (1-based) receiving each of the extra units,
    // kept nondecreasing; advancing the rightmost incrementable position and
    // resetting the suffix to its new value walks all multisets exactly once.
    std::vector<std::uint32_t> v(units, 1);
    while (true) {
        Partition lambda;
        lambda.parts.assign(static_cast<std::size_t>(k), 1);
        for (std::uint32_t part : v) ++lambda.parts[part - 1];
        out.push_back(std::move(lambda));

        std::size_t pos = v.size();
        while (pos > 0 && v[pos - 1] == static_cast<std::uint32_t>(k)) --pos;
        if (pos == 0) break;
        const std::uint32_t next = v[pos - 1] + 1;
        for (std::size_t i = pos - 1; i < v.size(); ++i) v[i] = next;
    }
    return out;
}

BigCount count_rank_functions(const Partition& lambda, int n) {
    const std::uint32_t size = num_nodes(n);
    if (lambda.total() != size) {
        throw domain_error("partition sums to " + std::to_string(lambda.total()) +
                           ", expected " + std::to_string(size));
    }
    for (std::uint32_t part : lambda.parts) {
        if (part < 1) throw domain_error("partition parts must be >= 1");
    }
    mpz_class result;
    mpz_fac_ui(result.get_mpz_t(), size);
    mpz_class factorial;
    for (std::uint32_t part : lambda.parts) {
        mpz_fac_ui(factorial.get_mpz_t(), part);
        mpz_divexact(result.get_mpz_t(), result.get_mpz_t(), factorial.get_mpz_t());
    }
    return result;
}

RankingCounts count_rankings(int n) {
    check_dimension(n);
    const std::uint32_t size = num_nodes(n);
    RankingCounts counts;
    counts.rankings_per_k.reserve(size);
    counts.partitions_per_k.reserve(size);
    counts.total_rankings = 0;
    mpz_class binom, power, term;
    for (std::uint32_t k = 1; k <= size; ++k) {
        mpz_bin_uiui(binom.get_mpz_t(), size - 1, k - 1);
        counts.partitions_per_k.push_back(binom);

        // Surjections from 2^n nodes onto k ranks by inclusion-exclusion:
        // sum_j (-1)^j C(k, j) (k - j)^(2^n). Equals sum of F_lambda over
        // k-part partitions.
        mpz_class surjections = 0;
        for (std::uint32_t j = 0; j < k; ++j) {
            mpz_bin_uiui(binom.get_mpz_t(), k, j);
            mpz_ui_pow_ui(power.get_mpz_t(), k - j, size);
            term = binom * power;
            if (j % 2 == 0) {
                surjections += term;
            } else {
                surjections -= term;
            }
        }
        counts.total_rankings += surjections;
        counts.rankings_per_k.push_back(std::move(surjections));
    }
    mpz_ui_pow_ui(counts.total_partitions.get_mpz_t(), 2, size - 1);
    return counts;
}

BigCount ordered_bell(unsigned m) {
    std::vector<mpz_class> a(m + 1);
    a[0] = 1;
    mpz_class binom;
    for (unsigned i = 1; i <= m; ++i) {
        a[i] = 0;
        for (unsigned j = 1; j <= i; ++j) {
            mpz_bin_uiui(binom.get_mpz_t(), i, j);
            a[i] += binom * a[i - j];
        }
    }
    return a[m];
}

void enumerate_rank_vectors(const Partition& lambda, int n,
                            const std::function<void(const RankVector&)>& sink, int cap) {
    check_enumeration_dimension(n, cap);
    const std::uint32_t size = num_nodes(n);
    if (lambda.total() != size) throw domain_error("partition does not sum to 2^n");

    RankVector rv;
    rv.n = n;
    rv.ranks.reserve(size);
    for (std::size_t i = 0; i < lambda.parts.size(); ++i) {
        for (std::uint32_t c = 0; c < lambda.parts[i]; ++c) {
            rv.ranks.push_back(static_cast<Rank>(i + 1));
        }
    }
    // sorted start + next_permutation = multiset permutations in lexicographic order
    do {
        sink(rv);
    } while (std::next_permutation(rv.ranks.begin(), rv.ranks.end()));
}

void enumerate_all_rank_vectors(int n, const std::function<void(const RankVector&)>& sink,
                                int cap) {
    check_enumeration_dimension(n, cap);
    const std::uint32_t size = num_nodes(n);
    for (std::uint32_t k = 1; k <= size; ++k) {
        for (const Partition& lambda : enumerate_partitions(n, static_cast<int>(k))) {
            enumerate_rank_vectors(lambda, n, sink, cap);
        }
    }
}

}  // namespace rankatlas
