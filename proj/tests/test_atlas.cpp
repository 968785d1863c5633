#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "rankatlas/atlas.hpp"
#include "rankatlas/errors.hpp"

using namespace rankatlas;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const char* name) {
    return fs::temp_directory_path() / (std::string("rank_atlas_test_") + name);
}

struct FileGuard {
    fs::path path;
    ~FileGuard() { std::error_code ec; fs::remove(path, ec); }
};

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace

TEST_CASE("square atlas: structure and audit") {
    const Atlas atlas = build_atlas(2);
    CHECK(atlas.n == 2);
    REQUIRE(atlas.records.size() == 14);
    CHECK(atlas.total_rankings == 75);
    CHECK(atlas.digest.rfind("fnv1a64:", 0) == 0);

    BigCount orbit_sum = 0;
    for (std::size_t id = 0; id < atlas.records.size(); ++id) {
        const ClassRecord& rec = atlas.records[id];
        CHECK(rec.class_id == id);
        CHECK(rec.n == 2);
        CHECK(rec.partition == partition_of(rec.canonical));
        CHECK(static_cast<std::uint64_t>(rec.orbit_size) * rec.stabilizer_order == 8);
        orbit_sum += rec.orbit_size;
        if (id > 0)
            CHECK(atlas.records[id - 1].canonical.ranks < rec.canonical.ranks);
    }
    CHECK(orbit_sum == 75);
    CHECK_NOTHROW(audit_atlas(atlas));
}

TEST_CASE("atlas persistence round-trips bit-exactly") {
    const Atlas atlas = build_atlas(2);
    const FileGuard guard{temp_file("roundtrip.jsonl")};
    save_atlas(atlas, guard.path.string());

    const Atlas loaded = load_atlas(guard.path.string());
    CHECK(loaded.n == atlas.n);
    CHECK(loaded.total_rankings == atlas.total_rankings);
    CHECK(loaded.digest == atlas.digest);
    REQUIRE(loaded.records.size() == atlas.records.size());
    for (std::size_t id = 0; id < atlas.records.size(); ++id)
        CHECK(loaded.records[id] == atlas.records[id]);

    // serialization is deterministic
    CHECK(atlas_to_jsonl(loaded) == atlas_to_jsonl(atlas));
}

TEST_CASE("loading rejects corruption and truncation") {
    const Atlas atlas = build_atlas(1);
    const std::string text = atlas_to_jsonl(atlas);

    // flip one digit inside a record line: the digest no longer matches
    std::string corrupt = text;
    const std::size_t pos = corrupt.find("\"orbit\":2");
    REQUIRE(pos != std::string::npos);
    corrupt[pos + 8] = '1';
    CHECK_THROWS_AS(atlas_from_jsonl(corrupt), io_error);

    // drop the last record line
    std::string truncated = text;
    truncated.erase(truncated.find_last_of('\n', truncated.size() - 2) + 1);
    CHECK_THROWS_AS(atlas_from_jsonl(truncated), io_error);

    CHECK_THROWS_AS(atlas_from_jsonl("not json\n"), io_error);
    CHECK_THROWS_AS(load_atlas("/nonexistent/path/atlas.jsonl"), io_error);
}

TEST_CASE("fitness lookup is rank- and symmetry-invariant") {
    const Atlas atlas = build_atlas(2);

    const ClassRecord& a = lookup(atlas, {4.0, 1.0, 9.0, 3.0});
    const ClassRecord& b = lookup(atlas, {3.6, 2.9, 3.7, 3.1});
    CHECK(a.class_id == b.class_id);  // same ranking CADB

    // relabeling nodes by an automorphism lands in the same class
    const ClassRecord& c = lookup(atlas, {1.0, 4.0, 3.0, 9.0});
    CHECK(a.class_id == c.class_id);

    // a tie changes k and therefore the class
    const ClassRecord& tied = lookup(atlas, {3.0, 3.0, 7.0, 2.0});
    CHECK(tied.props.k_ranks == 3);
    CHECK(tied.class_id != a.class_id);

    const ClassRecord& flat = lookup(atlas, {5.0, 5.0, 5.0, 5.0});
    CHECK(flat.props.global_optima == 4);
    CHECK(flat.class_id == 0);

    CHECK_THROWS_AS(lookup(atlas, {1.0, 2.0, 3.0}), not_found_error);

    RankVector wrong_dim;
    wrong_dim.n = 1;
    wrong_dim.ranks = {1, 2};
    CHECK_THROWS_AS(lookup_ranks(atlas, wrong_dim), not_found_error);
}

TEST_CASE("csv export has one row per class") {
    const Atlas atlas = build_atlas(2);
    const std::string csv = atlas_to_csv(atlas);
    const std::size_t lines = std::count(csv.begin(), csv.end(), '\n');
    CHECK(lines == 15);  // header + 14 classes
    CHECK(csv.rfind("id,n,k,letters,partition,orbit", 0) == 0);

    const FileGuard guard{temp_file("atlas.csv")};
    export_csv(atlas, guard.path.string());
    CHECK(slurp(guard.path) == csv);
}

TEST_CASE("square statistics") {
    const StatsSummary stats = summarize(build_atlas(2));
    CHECK(stats.classes == 14);
    CHECK(stats.total_landscapes == 75);

    CHECK(stats.crosstab == std::array<std::uint32_t, 6>{5, 2, 1, 2, 4, 0});
    CHECK(stats.success_tally == Tally{3, 0, 11});
    CHECK(stats.ert_tally == Tally{3, 10, 1});

    CHECK(stats.injective_classes == 3);
    CHECK(stats.multi_global_classes == 6);
    CHECK(stats.deceptive_classes == 4);
    CHECK(stats.strictly_deceptive_classes == 2);
    CHECK(stats.weakly_deceptive_classes == 2);
    CHECK(stats.neutral_classes == 7);
    CHECK(stats.plateau_classes == 4);

    CHECK(stats.by_k_ranks == std::map<int, std::uint32_t>{{1, 1}, {2, 4}, {3, 6}, {4, 3}});

    // every class has k ranks between 1 and 4 and at least one global optimum
    std::uint32_t crosstab_total = 0;
    for (const auto cell : stats.crosstab) crosstab_total += cell;
    CHECK(crosstab_total == 14);

    // CDFs end at the full class count and are monotone in both coordinates
    for (const Cdf* cdf : {&stats.success_cdf_best, &stats.success_cdf_first,
                           &stats.ert_cdf_best, &stats.ert_cdf_first}) {
        REQUIRE_FALSE(cdf->empty());
        CHECK(cdf->back().second == 14);
        for (std::size_t i = 1; i < cdf->size(); ++i) {
            CHECK((*cdf)[i - 1].first < (*cdf)[i].first);
            CHECK((*cdf)[i - 1].second < (*cdf)[i].second);
        }
    }
}
