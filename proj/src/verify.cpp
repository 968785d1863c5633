#include "rankatlas/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <iterator>
#include <random>
#include <sstream>

#include "rankatlas/atlas.hpp"
#include "rankatlas/canon.hpp"
#include "rankatlas/climb.hpp"
#include "rankatlas/format.hpp"
#include "rankatlas/hypercube.hpp"
#include "rankatlas/props.hpp"
#include "rankatlas/rankspace.hpp"

namespace rankatlas {

namespace {

// ----- reference values (published inventory tables) -----

const std::array<const char*, 8> kRankingsPerK3 = {
    "1", "254", "5796", "40824", "126000", "191520", "141120", "40320"};

const std::array<const char*, 16> kRankingsPerK4 = {
    "1", "65534", "42850116", "4123173624", "131542866000", "1969147121760",
    "16540688324160", "86355926616960", "297846188640000", "703098107712000",
    "1155068769254400", "1320663933388800", "1031319184896000",
    "524813313024000", "156920924160000", "20922789888000"};

const std::array<std::uint32_t, 14> kOrbitSizes2 = {8, 8, 8, 8, 8, 8, 4,
                                                    4, 4, 4, 4, 4, 2, 1};

// (global optima, suboptima, neutral networks, optimal plateaus,
//  suboptimal plateaus, neutral degree) rows of the 2D property table
using PropsRow = std::array<std::uint32_t, 6>;
const std::array<PropsRow, 14> kPropsRows2 = {{
    {1, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, {1, 1, 0, 0, 0, 0},
    {2, 0, 1, 1, 0, 2}, {2, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0},
    {1, 1, 1, 0, 0, 2}, {1, 0, 1, 0, 0, 2}, {1, 1, 0, 0, 0, 0},
    {3, 0, 1, 1, 0, 3}, {2, 0, 2, 1, 0, 4}, {2, 0, 0, 0, 0, 0},
    {1, 1, 1, 0, 0, 3}, {4, 0, 1, 1, 0, 4},
}};

// (success, steps ok, evals ok, steps fail, evals fail, ERT): exact rationals
// plus the decimals printed in the reference tables; "-" marks an undefined
// fail side (success rate 1)
struct PerfRow {
    std::array<const char*, 6> exact;
    std::array<const char*, 6> printed;
};

const std::array<PerfRow, 14> kBestRows2 = {{
    {{"1", "1", "5", "-", "-", "5"}, {"1.000", "1.000", "5.000", "-", "-", "5.000"}},
    {{"1", "1", "5", "-", "-", "5"}, {"1.000", "1.000", "5.000", "-", "-", "5.000"}},
    {{"3/4", "2/3", "13/3", "0", "3", "16/3"},
     {"0.750", "0.667", "4.333", "0.000", "3.000", "5.333"}},
    {{"1", "1/2", "4", "-", "-", "4"}, {"1.000", "0.500", "4.000", "-", "-", "4.000"}},
    {{"1", "1/2", "4", "-", "-", "4"}, {"1.000", "0.500", "4.000", "-", "-", "4.000"}},
    {{"1", "1", "5", "-", "-", "5"}, {"1.000", "1.000", "5.000", "-", "-", "5.000"}},
    {{"3/4", "2/3", "13/3", "0", "3", "16/3"},
     {"0.750", "0.667", "4.333", "0.000", "3.000", "5.333"}},
    {{"1", "1", "5", "-", "-", "5"}, {"1.000", "1.000", "5.000", "-", "-", "5.000"}},
    {{"3/4", "2/3", "13/3", "0", "3", "16/3"},
     {"0.750", "0.667", "4.333", "0.000", "3.000", "5.333"}},
    {{"1", "1/4", "7/2", "-", "-", "7/2"},
     {"1.000", "0.250", "3.500", "-", "-", "3.500"}},
    {{"1", "1/2", "4", "-", "-", "4"}, {"1.000", "0.500", "4.000", "-", "-", "4.000"}},
    {{"1", "1/2", "4", "-", "-", "4"}, {"1.000", "0.500", "4.000", "-", "-", "4.000"}},
    {{"3/4", "2/3", "13/3", "0", "3", "16/3"},
     {"0.750", "0.667", "4.333", "0.000", "3.000", "5.333"}},
    {{"1", "0", "3", "-", "-", "3"}, {"1.000", "0.000", "3.000", "-", "-", "3.000"}},
}};

const std::array<PerfRow, 14> kFirstRows2 = {{
    {{"1", "1", "35/8", "-", "-", "35/8"},
     {"1.000", "1.000", "4.375", "-", "-", "4.375"}},
    {{"1", "5/4", "19/4", "-", "-", "19/4"},
     {"1.000", "1.250", "4.750", "-", "-", "4.750"}},
    {{"1/2", "1/2", "7/2", "1/2", "7/2", "7"},
     {"0.500", "0.500", "3.500", "0.500", "3.500", "7.000"}},
    {{"1", "5/8", "61/16", "-", "-", "61/16"},
     {"1.000", "0.625", "3.812", "-", "-", "3.812"}},
    {{"1", "1/2", "7/2", "-", "-", "7/2"},
     {"1.000", "0.500", "3.500", "-", "-", "3.500"}},
    {{"1", "1", "35/8", "-", "-", "35/8"},
     {"1.000", "1.000", "4.375", "-", "-", "4.375"}},
    {{"5/8", "3/5", "19/5", "1/3", "10/3", "29/5"},
     {"0.625", "0.600", "3.800", "0.333", "3.333", "5.800"}},
    {{"1", "1", "9/2", "-", "-", "9/2"},
     {"1.000", "1.000", "4.500", "-", "-", "4.500"}},
    {{"1/2", "1/2", "7/2", "1/2", "7/2", "7"},
     {"0.500", "0.500", "3.500", "0.500", "3.500", "7.000"}},
    {{"1", "1/4", "13/4", "-", "-", "13/4"},
     {"1.000", "0.250", "3.250", "-", "-", "3.250"}},
    {{"1", "1/2", "15/4", "-", "-", "15/4"},
     {"1.000", "0.500", "3.750", "-", "-", "3.750"}},
    {{"1", "1/2", "7/2", "-", "-", "7/2"},
     {"1.000", "0.500", "3.500", "-", "-", "3.500"}},
    {{"3/4", "2/3", "4", "0", "3", "5"},
     {"0.750", "0.667", "4.000", "0.000", "3.000", "5.000"}},
    {{"1", "0", "3", "-", "-", "3"}, {"1.000", "0.000", "3.000", "-", "-", "3.000"}},
}};

const std::array<std::uint32_t, 6> kCrosstab3 = {1233, 3175, 1098,
                                                 4130, 1130, 1225};

const Tally kSuccessTally3 = {7268, 653, 4070};
// reference ERT split, ordered (best faster, first faster, tie)
const Tally kErtTallyReference3 = {4916, 7064, 11};

// ----- helpers -----

struct Checker {
    std::vector<CheckResult> results;

    void add(int criterion, const std::string& name, bool pass,
             const std::string& detail, bool documented = false) {
        results.push_back({criterion, name, pass, documented, detail});
    }
};

std::string tally_string(const Tally& tally) {
    return "best " + std::to_string(tally.best) + " / first " +
           std::to_string(tally.first) + " / tie " + std::to_string(tally.tie);
}

std::array<std::string, 6> report_tuple(const ClimbReport& report) {
    return {rational_to_string(report.success_rate),
            rational_to_string(report.exp_steps_success),
            rational_to_string(report.exp_evals_success),
            report.has_fail ? rational_to_string(report.exp_steps_fail) : "-",
            report.has_fail ? rational_to_string(report.exp_evals_fail) : "-",
            rational_to_string(report.multistart_ert)};
}

std::array<std::string, 6> report_decimals(const ClimbReport& report) {
    return {decimal_string(report.success_rate, 3),
            decimal_string(report.exp_steps_success, 3),
            decimal_string(report.exp_evals_success, 3),
            report.has_fail ? decimal_string(report.exp_steps_fail, 3) : "-",
            report.has_fail ? decimal_string(report.exp_evals_fail, 3) : "-",
            decimal_string(report.multistart_ert, 3)};
}

PropsRow props_tuple(const PropertyReport& props) {
    return {props.global_optima,     props.suboptima(),
            props.neutral_networks,  props.optimal_plateaus,
            props.suboptimal_plateaus, props.neutral_node_count};
}

template <typename T>
std::string join(const T& items) {
    std::ostringstream out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0) out << ", ";
        out << items[i];
    }
    return out.str();
}

// random surjective rank vector drawn through a random fitness table
RankVector random_rank_vector(int n, std::mt19937_64& rng) {
    const std::uint32_t size = num_nodes(n);
    std::uniform_int_distribution<int> value(0, static_cast<int>(2 * size) - 1);
    std::vector<double> fitness(size);
    for (auto& v : fitness) v = value(rng);
    return rank_of(fitness, n);
}

// random strictly increasing remapping of the distinct values of a table
std::vector<double> monotone_remap(const std::vector<double>& fitness,
                                   std::mt19937_64& rng) {
    std::vector<double> distinct(fitness);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::uniform_real_distribution<double> gap(0.125, 4.0);
    std::vector<double> image(distinct.size());
    double level = gap(rng) - 100.0;
    for (std::size_t i = 0; i < image.size(); ++i) {
        image[i] = level;
        level += gap(rng);
    }
    std::vector<double> out(fitness.size());
    for (std::size_t i = 0; i < fitness.size(); ++i) {
        const auto at = std::lower_bound(distinct.begin(), distinct.end(), fitness[i]);
        out[i] = image[static_cast<std::size_t>(at - distinct.begin())];
    }
    return out;
}

// ----- check groups -----

void check_counting(Checker& check) {
    std::ostringstream diff;
    bool pass = true;
    auto expect = [&](bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            diff << (diff.str().empty() ? "" : "; ") << what;
        }
    };

    const RankingCounts counts1 = count_rankings(1);
    const RankingCounts counts2 = count_rankings(2);
    const RankingCounts counts3 = count_rankings(3);
    const RankingCounts counts4 = count_rankings(4);

    expect(counts1.total_rankings == 3, "n=1 total != 3");
    expect(counts2.total_rankings == 75, "n=2 total != 75");
    expect(counts3.total_rankings == 545835, "n=3 total != 545835");
    expect(counts2.total_partitions == 8, "n=2 partitions != 8");
    expect(counts3.total_partitions == 128, "n=3 partitions != 128");
    expect(counts4.total_partitions == 32768, "n=4 partitions != 32768");

    for (std::size_t k = 1; k <= 8; ++k) {
        expect(counts3.rankings_per_k[k - 1] == BigCount(kRankingsPerK3[k - 1]),
               "n=3 k=" + std::to_string(k) + " rankings: got " +
                   counts3.rankings_per_k[k - 1].get_str() + ", want " + kRankingsPerK3[k - 1]);
    }
    for (std::size_t k = 1; k <= 16; ++k) {
        expect(counts4.rankings_per_k[k - 1] == BigCount(kRankingsPerK4[k - 1]),
               "n=4 k=" + std::to_string(k) + " rankings: got " +
                   counts4.rankings_per_k[k - 1].get_str() + ", want " + kRankingsPerK4[k - 1]);
    }
    expect(counts4.rankings_per_k[15] == BigCount("20922789888000"),
           "n=4 k=16 spot value");

    // independent oracle: the total for 2^n items is the ordered Bell number
    for (int n = 1; n <= 4; ++n) {
        const RankingCounts counts = count_rankings(n);
        expect(counts.total_rankings == ordered_bell(num_nodes(n)),
               "n=" + std::to_string(n) + " total != ordered Bell");
    }

    check.add(1, "counting: rankings and partitions by rank count", pass,
              pass ? "totals 3 / 75 / 545835; per-k tables match; partitions 8 / 128 / 32768"
                   : diff.str());
}

void check_class_counts(Checker& check, const Atlas* atlas3) {
    std::ostringstream diff;
    bool pass = true;
    auto expect = [&](bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            diff << (diff.str().empty() ? "" : "; ") << what;
        }
    };

    const std::array<std::uint32_t, 3> expected_classes = {2, 14, 11991};
    const std::array<std::uint32_t, 3> expected_injective = {1, 3, 840};
    const int top = atlas3 ? 3 : 2;
    for (int n = 1; n <= top; ++n) {
        std::uint32_t classes = 0, injective = 0;
        BigCount orbit_sum;
        if (n == 3) {
            classes = static_cast<std::uint32_t>(atlas3->records.size());
            for (const ClassRecord& record : atlas3->records) {
                orbit_sum += record.orbit_size;
                if (record.props.k_ranks == 8) ++injective;
            }
        } else {
            const auto entries = classify_all(n);
            classes = static_cast<std::uint32_t>(entries.size());
            for (const ClassEntry& entry : entries) {
                orbit_sum += entry.orbit.orbit_size;
                if (rank_count(entry.canonical) == static_cast<int>(num_nodes(n))) ++injective;
            }
        }
        expect(classes == expected_classes[static_cast<std::size_t>(n - 1)],
               "n=" + std::to_string(n) + " classes: got " + std::to_string(classes));
        expect(injective == expected_injective[static_cast<std::size_t>(n - 1)],
               "n=" + std::to_string(n) + " injective classes: got " + std::to_string(injective));
        expect(orbit_sum == count_rankings(n).total_rankings,
               "n=" + std::to_string(n) + " orbit sizes do not sum to total rankings");
    }
    expect(count_injective_classes(4) == BigCount("54486432000"),
           "n=4 injective class formula");

    const std::string scope = atlas3 ? "2 / 14 / 11991 classes; injective 1 / 3 / 840"
                                     : "2 / 14 classes; injective 1 / 3 (fast scope)";
    check.add(2, "classification: class and injective-class counts", pass,
              pass ? scope + "; orbit sizes sum to the ranking totals" : diff.str());
}

void check_orbit_structure(Checker& check) {
    std::vector<std::uint32_t> orbit_sizes;
    for (const ClassEntry& entry : classify_all(2)) {
        orbit_sizes.push_back(entry.orbit.orbit_size);
    }
    std::sort(orbit_sizes.rbegin(), orbit_sizes.rend());
    std::vector<std::uint32_t> expected(kOrbitSizes2.begin(), kOrbitSizes2.end());
    const bool pass = orbit_sizes == expected;
    check.add(3, "n=2 orbit-size multiset", pass,
              pass ? "{8 x6, 4 x6, 2, 1}" : "got {" + join(orbit_sizes) + "}");
}

void check_properties_2d(Checker& check) {
    std::vector<PropsRow> rows;
    for (const ClassEntry& entry : classify_all(2)) {
        rows.push_back(props_tuple(analyze(entry.canonical)));
    }
    std::vector<PropsRow> expected(kPropsRows2.begin(), kPropsRows2.end());
    std::sort(rows.begin(), rows.end());
    std::sort(expected.begin(), expected.end());
    const bool pass = rows == expected;
    std::ostringstream diff;
    if (!pass) {
        diff << "computed rows:";
        for (const PropsRow& row : rows) diff << " (" << join(row) << ")";
    }
    check.add(4, "n=2 property table (multiset of 14 rows)", pass,
              pass ? "global optima / suboptima / networks / plateaus / neutral degree all match"
                   : diff.str());
}

void check_performance_2d(Checker& check) {
    std::vector<std::array<std::string, 6>> best_rows, first_rows;
    std::vector<std::array<std::string, 6>> best_decimals, first_decimals;
    for (const ClassEntry& entry : classify_all(2)) {
        best_rows.push_back(report_tuple(analyze_best(entry.canonical)));
        first_rows.push_back(report_tuple(analyze_first(entry.canonical)));
        best_decimals.push_back(report_decimals(analyze_best(entry.canonical)));
        first_decimals.push_back(report_decimals(analyze_first(entry.canonical)));
    }

    auto to_rows = [](const auto& table) {
        std::vector<std::array<std::string, 6>> exact, printed;
        for (const PerfRow& row : table) {
            std::array<std::string, 6> e, p;
            for (std::size_t i = 0; i < 6; ++i) {
                e[i] = row.exact[i];
                p[i] = row.printed[i];
            }
            // normalize the exact strings through the rational parser
            for (auto& cell : e) {
                if (cell != "-") cell = rational_to_string(rational_from_string(cell));
            }
            exact.push_back(e);
            printed.push_back(p);
        }
        return std::pair(exact, printed);
    };

    bool pass = true;
    std::ostringstream diff;
    auto check_table = [&](std::vector<std::array<std::string, 6>> got_exact,
                           std::vector<std::array<std::string, 6>> got_decimals,
                           const auto& reference, const char* label) {
        auto [expected_exact, expected_printed] = to_rows(reference);
        auto sorted_got = got_exact;
        std::sort(sorted_got.begin(), sorted_got.end());
        std::sort(expected_exact.begin(), expected_exact.end());
        if (sorted_got != expected_exact) {
            pass = false;
            diff << label << ": exact rational rows differ; computed:";
            for (const auto& row : sorted_got) diff << " (" << join(row) << ")";
            return;
        }
        // printed-decimal agreement: every reference decimal is within 5e-4
        // of our 3-decimal rendering of the matching exact row
        auto [exact_rows, printed_rows] = to_rows(reference);
        for (std::size_t r = 0; r < exact_rows.size(); ++r) {
            const auto at = std::find(got_exact.begin(), got_exact.end(), exact_rows[r]);
            const auto& ours = got_decimals[static_cast<std::size_t>(at - got_exact.begin())];
            for (std::size_t i = 0; i < 6; ++i) {
                if (printed_rows[r][i] == "-") continue;
                const double theirs = std::strtod(printed_rows[r][i].c_str(), nullptr);
                const double mine = std::strtod(ours[i].c_str(), nullptr);
                if (std::abs(mine - theirs) > 5e-4) {
                    pass = false;
                    diff << label << ": printed decimal " << ours[i] << " vs reference "
                         << printed_rows[r][i] << "; ";
                }
            }
        }
    };
    check_table(best_rows, best_decimals, kBestRows2, "best-improvement");
    check_table(first_rows, first_decimals, kFirstRows2, "first-improvement");

    check.add(5, "n=2 climber performance tables (exact rationals + decimals)", pass,
              pass ? "all 28 rows match: 13/3, 35/8, 61/16, 29/5, ... and printed decimals agree"
                   : diff.str());
}

void check_crosstab(Checker& check, const StatsSummary& stats) {
    std::array<std::uint32_t, 6> expected = kCrosstab3;
    const bool pass = stats.crosstab == expected &&
                      stats.classes == 11991;
    std::ostringstream detail;
    for (std::size_t i = 0; i < 6; ++i) {
        detail << (i ? ", " : "") << kCrosstabLabels[i] << "=" << stats.crosstab[i];
    }
    check.add(6, "n=3 deceptive x neutral x plateau cross-tab", pass,
              pass ? detail.str() + " (total 11991)"
                   : "got " + detail.str() + ", want 1233, 3175, 1098, 4130, 1130, 1225");
}

void check_tallies(Checker& check, const StatsSummary& stats) {
    const bool success_pass = stats.success_tally == kSuccessTally3;
    check.add(7, "n=3 success-rate tally (best / first / tie)", success_pass,
              success_pass ? tally_string(stats.success_tally)
                           : "got " + tally_string(stats.success_tally) + ", want " +
                                 tally_string(kSuccessTally3));

    const bool ert_pass = stats.ert_tally == kErtTallyReference3;
    std::string detail;
    if (ert_pass) {
        detail = tally_string(stats.ert_tally);
    } else {
        detail = "computed " + tally_string(stats.ert_tally) + ", reference " +
                 tally_string(kErtTallyReference3) +
                 ". Known deviation: the evaluation-accounting model reproduces every row "
                 "of both 2D performance tables exactly, yet no per-scan cost model found "
                 "by exhaustive search reproduces this three-way ERT split; see README.";
    }
    check.add(7, "n=3 ERT tally (best / first / tie)", ert_pass, detail,
              /*documented=*/true);
}

void check_headline_shares(Checker& check, const StatsSummary& stats) {
    const double injective_pct = 100.0 * stats.injective_classes / stats.classes;
    const bool injective_pass =
        stats.injective_classes == 840 && std::abs(injective_pct - 7.0) <= 0.5;
    check.add(8, "n=3 injective share (840 classes, ~7%)", injective_pass,
              std::to_string(stats.injective_classes) + " classes = " +
                  percent_string(stats.injective_classes, stats.classes) + "%");

    const double deceptive_pct = 100.0 * stats.deceptive_classes / stats.classes;
    const std::uint32_t crosstab_deceptive =
        stats.crosstab[1] + stats.crosstab[3] + stats.crosstab[5];
    const bool deceptive_pass = stats.deceptive_classes == 8530 &&
                                stats.deceptive_classes == crosstab_deceptive &&
                                std::abs(deceptive_pct - 71.1) <= 0.5;
    check.add(8, "n=3 deceptive share (8530 classes, ~71.1%)", deceptive_pass,
              std::to_string(stats.deceptive_classes) + " classes = " +
                  percent_string(stats.deceptive_classes, stats.classes) +
                  "%; cross-tab sum " + std::to_string(crosstab_deceptive));

    const double multi_pct = 100.0 * stats.multi_global_classes / stats.classes;
    const bool multi_pass = std::abs(multi_pct - 30.0) <= 0.5;
    std::ostringstream detail;
    detail << stats.multi_global_classes << " classes = "
           << percent_string(stats.multi_global_classes, stats.classes)
           << "% have >= 2 global optima (landscape-weighted: "
           << percent_string(stats.multi_global_landscapes, stats.total_landscapes)
           << "%)";
    if (!multi_pass) {
        detail << ". Known deviation: both weightings sit above the ~30% +/- 0.5 "
                  "reference figure; see README.";
    }
    check.add(8, "n=3 multiple-global-optima share (~30%)", multi_pass, detail.str(),
              /*documented=*/true);
}

void check_invariance(Checker& check, const Atlas* atlas3, std::uint64_t seed) {
    std::ostringstream diff;
    bool pass = true;
    auto expect = [&](bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            diff << (diff.str().empty() ? "" : "; ") << what;
        }
    };

    // monotone-transformation invariance of rank extraction
    std::mt19937_64 rng(seed);
    for (int n = 1; n <= 3; ++n) {
        const std::uint32_t size = num_nodes(n);
        std::uniform_int_distribution<int> value(0, static_cast<int>(2 * size) - 1);
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<double> fitness(size);
            for (auto& v : fitness) v = value(rng);
            const std::vector<double> remapped = monotone_remap(fitness, rng);
            if (!(rank_of(fitness, n) == rank_of(remapped, n))) {
                expect(false, "rank_of not invariant under a monotone remap (n=" +
                                  std::to_string(n) + ")");
                break;
            }
        }
    }

    // automorphism invariance, exhaustive for n <= 2
    for (int n = 1; n <= 2; ++n) {
        bool all_ok = true;
        enumerate_all_rank_vectors(n, [&](const RankVector& rv) {
            const auto canon = canonicalize(rv).first;
            const PropertyReport props = analyze(rv);
            const ClimbReport best = analyze_best(rv);
            const ClimbReport first = analyze_first(rv);
            for (const Automorphism& a : all_automorphisms(n)) {
                const RankVector moved = transform(a, rv);
                all_ok = all_ok && canonicalize(moved).first == canon &&
                         analyze(moved) == props && analyze_best(moved) == best &&
                         analyze_first(moved) == first;
            }
        });
        expect(all_ok, "exhaustive automorphism invariance failed (n=" +
                           std::to_string(n) + ")");
    }

    // orbit-stabilizer identity over every class (also asserted internally)
    for (int n = 1; n <= 2; ++n) {
        for (const ClassEntry& entry : classify_all(n)) {
            expect(static_cast<std::uint64_t>(entry.orbit.orbit_size) *
                           entry.orbit.stabilizer_order ==
                       group_order(n),
                   "orbit x stabilizer != group order (n=" + std::to_string(n) + ")");
        }
    }

    std::string scope = "exhaustive n <= 2";
    if (atlas3) {
        const auto& autos = all_automorphisms(3);
        std::uniform_int_distribution<std::size_t> pick(0, autos.size() - 1);
        bool sampled_ok = true;
        for (int trial = 0; trial < 1000; ++trial) {
            const RankVector rv = random_rank_vector(3, rng);
            const Automorphism& a = autos[pick(rng)];
            const RankVector moved = transform(a, rv);
            sampled_ok = sampled_ok && canonicalize(moved).first == canonicalize(rv).first &&
                         analyze(moved) == analyze(rv) &&
                         analyze_best(moved) == analyze_best(rv) &&
                         analyze_first(moved) == analyze_first(rv);
        }
        expect(sampled_ok, "sampled n=3 automorphism invariance failed");
        for (const ClassRecord& record : atlas3->records) {
            if (static_cast<std::uint64_t>(record.orbit_size) * record.stabilizer_order !=
                group_order(3)) {
                expect(false, "orbit x stabilizer != group order (n=3)");
                break;
            }
        }
        scope += "; 1000 sampled n=3 pairs; orbit identity on all 11991 classes";
    }
    check.add(9, "invariance suite (automorphisms, monotone remaps, orbits)", pass,
              pass ? scope : diff.str());
}

void check_simulation_oracle(Checker& check, const Atlas& atlas3, std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    std::vector<std::uint32_t> ids(atlas3.records.size());
    for (std::uint32_t i = 0; i < ids.size(); ++i) ids[i] = i;
    std::vector<std::uint32_t> sample;
    std::sample(ids.begin(), ids.end(), std::back_inserter(sample), 20, rng);

    constexpr std::uint64_t kRuns = 1'000'000;
    bool pass = true;
    std::ostringstream diff;
    for (const std::uint32_t id : sample) {
        const RankVector& rv = atlas3.records[id].canonical;
        for (const ClimbPolicy policy :
             {ClimbPolicy::best_improvement, ClimbPolicy::first_improvement}) {
            const ClimbReport exact = analyze_climber(rv, policy);
            const SimulationSummary sim = simulate_climber(rv, policy, kRuns, rng());
            const double p = to_double(exact.success_rate);
            const double se = std::sqrt(p * (1.0 - p) / static_cast<double>(kRuns));
            if (std::abs(sim.success_rate - p) > 3.0 * se + 1e-12) {
                pass = false;
                diff << "class " << id << ": simulated " << sim.success_rate
                     << " vs exact " << p << " (se " << se << "); ";
            }
        }
    }
    check.add(9, "Monte-Carlo oracle (20 classes x 2 climbers x 1e6 runs)", pass,
              pass ? "all simulated success rates within 3 standard errors"
                   : diff.str());
}

void check_worked_example(Checker& check, const Atlas& atlas3) {
    // landscapes whose class signature is "7 ranks with a single two-node
    // rank-B suboptimal plateau": partition (1,2,1,1,1,1,1) with exactly one
    // suboptimal plateau; the best-improvement success rate must be 1/2
    const Partition signature{{1, 2, 1, 1, 1, 1, 1}};
    std::uint32_t matches = 0, at_half = 0;
    for (const ClassRecord& record : atlas3.records) {
        if (record.partition == signature && record.props.suboptimal_plateaus == 1) {
            ++matches;
            if (record.best.success_rate == Rational(1, 2)) ++at_half;
        }
    }
    const bool plateau_pass = matches > 0 && matches == at_half;

    // companion landscape: both rank-B nodes remain, but one sits next to the
    // rank-A node, so it is no longer a local optimum; only a single strict
    // suboptimum is left and the success rate rises to 5/8
    RankVector split;
    split.n = 3;
    split.ranks = {2, 4, 5, 2, 7, 3, 6, 1};
    const ClimbReport split_best = analyze_best(split);
    const bool split_pass = split_best.success_rate == Rational(5, 8);

    std::ostringstream detail;
    detail << matches << " plateau-signature classes, " << at_half
           << " with best-improvement success 1/2; split landscape success "
           << rational_to_string(split_best.success_rate);
    check.add(10, "worked example: plateau escape probabilities (1/2 -> 5/8)",
              plateau_pass && split_pass, detail.str());
}

}  // namespace

std::vector<CheckResult> run_acceptance_checks(const VerifyOptions& options) {
    Checker check;

    check_counting(check);

    Atlas atlas3;
    StatsSummary stats3;
    const Atlas* atlas_ptr = nullptr;
    if (options.full) {
        atlas3 = build_atlas(3);
        stats3 = summarize(atlas3);
        atlas_ptr = &atlas3;
    }

    check_class_counts(check, atlas_ptr);
    check_orbit_structure(check);
    check_properties_2d(check);
    check_performance_2d(check);
    if (options.full) {
        check_crosstab(check, stats3);
        check_tallies(check, stats3);
        check_headline_shares(check, stats3);
    }
    check_invariance(check, atlas_ptr, options.seed);
    if (options.full) {
        check_simulation_oracle(check, atlas3, options.seed);
        check_worked_example(check, atlas3);
    }
    return check.results;
}

}  // namespace rankatlas
