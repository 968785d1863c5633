// Full inventory of invariant landscape classes for one dimension: canonical
// form, orbit data, property report, and exact climber performance per class,
// with line-delimited JSON persistence, a flat CSV export, fitness-table
// lookup, and aggregate statistics.
#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rankatlas/canon.hpp"
#include "rankatlas/climb.hpp"
#include "rankatlas/props.hpp"
#include "rankatlas/rankspace.hpp"

namespace rankatlas {

struct ClassRecord {
    int n = 0;
    std::uint32_t class_id = 0;  // index in lexicographic canonical order
    RankVector canonical;
    Partition partition;
    std::uint32_t orbit_size = 0;
    std::uint32_t stabilizer_order = 0;
    PropertyReport props;
    ClimbReport best;
    ClimbReport first;

    bool operator==(const ClassRecord&) const = default;
};

struct Atlas {
    int n = 0;
    BigCount total_rankings;          // sum of orbit sizes
    std::vector<ClassRecord> records; // sorted by class_id = canonical lex order
    std::string digest;               // "fnv1a64:<16 hex>" over record lines
};

// FNV-1a 64-bit digest of a byte string, as "fnv1a64:<16 hex digits>".
std::string fnv1a64_digest(const std::string& bytes);

Atlas build_atlas(int n, int cap = kDefaultEnumerationCap);

// Line-delimited JSON: a header line (format tag, n, class count, total
// rankings, digest of all record lines), then one record per line. Loading
// re-derives the digest and rejects corrupt or truncated files.
void save_atlas(const Atlas& atlas, const std::string& path);
Atlas load_atlas(const std::string& path);
std::string atlas_to_jsonl(const Atlas& atlas);
Atlas atlas_from_jsonl(const std::string& text);

// Flat one-row-per-class table, decimals only, for spreadsheet use.
void export_csv(const Atlas& atlas, const std::string& path);
std::string atlas_to_csv(const Atlas& atlas);

// rank_of -> canonicalize -> exact match on canonical ranks.
const ClassRecord& lookup(const Atlas& atlas, const std::vector<double>& fitness);
const ClassRecord& lookup_ranks(const Atlas& atlas, const RankVector& rv);

// Recomputes orbit data, properties, and performance of every record from its
// canonical ranks and throws std::logic_error on any mismatch.
void audit_atlas(const Atlas& atlas);

struct Tally {
    std::uint32_t best = 0, first = 0, tie = 0;
    bool operator==(const Tally&) const = default;
};

// x-axis value plus the number of classes at or below it
using Cdf = std::vector<std::pair<Rational, std::uint32_t>>;

struct StatsSummary {
    std::uint32_t classes = 0;
    BigCount total_landscapes;

    // (deceptive, neutral, plateau) flag combinations, in the order
    // FFF, TFF, FTF, TTF, FTT, TTT (plateau implies neutral, so 6 suffice)
    std::array<std::uint32_t, 6> crosstab{};

    std::map<int, std::uint32_t> by_k_ranks;
    std::map<std::uint32_t, std::uint32_t> by_orbit_size;
    std::map<std::uint32_t, std::uint32_t> by_global_optima;
    std::map<std::uint32_t, std::uint32_t> by_suboptima;
    std::map<std::uint32_t, std::uint32_t> by_neutral_edges;
    std::map<std::uint32_t, std::uint32_t> by_plateaus;
    std::map<std::uint32_t, std::uint32_t> by_suboptimal_plateaus;

    Tally success_tally;  // higher success rate wins
    Tally ert_tally;      // lower multi-start ERT wins

    std::uint32_t injective_classes = 0;
    std::uint32_t multi_global_classes = 0;  // >= 2 global optima
    std::uint32_t deceptive_classes = 0;
    std::uint32_t strictly_deceptive_classes = 0;
    std::uint32_t weakly_deceptive_classes = 0;
    std::uint32_t neutral_classes = 0;
    std::uint32_t plateau_classes = 0;
    BigCount multi_global_landscapes;  // orbit-weighted

    Cdf success_cdf_best, success_cdf_first;
    Cdf ert_cdf_best, ert_cdf_first;
};

extern const std::array<const char*, 6> kCrosstabLabels;  // "FFF" ... "TTT"

StatsSummary summarize(const Atlas& atlas);

}  // namespace rankatlas
