#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "rankatlas/cli.hpp"
#include "rankatlas/render.hpp"

using namespace rankatlas;
namespace fs = std::filesystem;

namespace {

struct CliResult {
    int code = -1;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    CliResult result;
    result.code = run_cli(args, out, err);
    result.out = out.str();
    result.err = err.str();
    return result;
}

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / "rank_atlas_cli_test") {
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    std::string file(const char* name) const { return (path / name).string(); }
};

std::string build_square_atlas(const TempDir& dir) {
    const std::string atlas_path = dir.file("atlas2.jsonl");
    const CliResult built = run({"build", "--n", "2", "--out", atlas_path});
    REQUIRE(built.code == 0);
    return atlas_path;
}

// the line "class <id> (n=...)" identifies the matched class
std::string class_line(const std::string& text) {
    const std::size_t start = text.find("class ");
    REQUIRE(start != std::string::npos);
    return text.substr(start, text.find('\n', start) - start);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace

TEST_CASE("counts reports the closed-form inventory") {
    const CliResult big = run({"counts", "--n", "3"});
    CHECK(big.code == 0);
    CHECK(big.out.find("545835") != std::string::npos);
    CHECK(big.out.find("injective rank functions: 40320") != std::string::npos);
    CHECK(big.out.find("injective landscape classes ((2^n-1)!/n!): 840") !=
          std::string::npos);

    const CliResult small = run({"counts", "--n", "1"});
    CHECK(small.code == 0);
    CHECK(small.out.find("2 nodes") != std::string::npos);

    // counting has no dimension cap
    const CliResult wide = run({"counts", "--n", "5"});
    CHECK(wide.code == 0);
}

TEST_CASE("build writes an atlas and optional csv") {
    const TempDir dir;
    const std::string atlas_path = dir.file("atlas2.jsonl");
    const std::string csv_path = dir.file("atlas2.csv");
    const CliResult built =
        run({"build", "--n", "2", "--out", atlas_path, "--csv", csv_path});
    CHECK(built.code == 0);
    CHECK(built.out.find("14 classes, 75 landscapes") != std::string::npos);
    CHECK(fs::exists(atlas_path));
    CHECK(fs::exists(csv_path));

    // dimension guards: the hard cap and the --max-n override both refuse
    CHECK(run({"build", "--n", "4", "--out", dir.file("a4.jsonl")}).code == 3);
    CHECK(run({"--max-n", "2", "build", "--n", "3", "--out", dir.file("a3.jsonl")}).code ==
          3);
}

TEST_CASE("lookup classifies fitness tables by rank structure") {
    const TempDir dir;
    const std::string atlas_path = build_square_atlas(dir);

    const CliResult a =
        run({"lookup", "--n", "2", "--fitness", "4.0,1.0,9.0,3.0", "--atlas", atlas_path});
    REQUIRE(a.code == 0);
    CHECK(a.out.find("fitness table ranks: CADB") != std::string::npos);

    const CliResult b =
        run({"lookup", "--n", "2", "--fitness", "3.6,2.9,3.7,3.1", "--atlas", atlas_path});
    REQUIRE(b.code == 0);
    CHECK(class_line(a.out) == class_line(b.out));

    // error paths: malformed number, wrong count, missing file
    CHECK(run({"lookup", "--n", "2", "--fitness", "1.0,two,3.0,4.0", "--atlas",
               atlas_path}).code == 2);
    CHECK(run({"lookup", "--n", "2", "--fitness", "1.0,2.0,3.0", "--atlas",
               atlas_path}).code == 2);
    CHECK(run({"lookup", "--n", "2", "--fitness", "1.0,2.0,3.0,4.0", "--atlas",
               dir.file("missing.jsonl")}).code == 4);
}

TEST_CASE("tie epsilon merges nearby fitness values before ranking") {
    const TempDir dir;
    const std::string atlas_path = build_square_atlas(dir);

    const CliResult exact =
        run({"lookup", "--n", "2", "--fitness", "1.0,1.2,3.0,4.0", "--atlas", atlas_path});
    const CliResult rounded = run({"--tie-epsilon", "0.5", "lookup", "--n", "2",
                                   "--fitness", "1.0,1.2,3.0,4.0", "--atlas", atlas_path});
    REQUIRE(exact.code == 0);
    REQUIRE(rounded.code == 0);
    CHECK(exact.out.find("ABCD") != std::string::npos);
    CHECK(rounded.out.find("AABC") != std::string::npos);
    CHECK(class_line(exact.out) != class_line(rounded.out));
}

TEST_CASE("render emits validated dot drawings") {
    const TempDir dir;
    const std::string atlas_path = build_square_atlas(dir);
    const std::string dot_path = dir.file("class0.dot");

    const CliResult drawn =
        run({"render", "--atlas", atlas_path, "--id", "0", "--out", dot_path});
    CHECK(drawn.code == 0);
    std::string reason;
    CHECK(validate_dot(slurp(dot_path), &reason));

    CHECK(run({"render", "--atlas", atlas_path, "--id", "99", "--out",
               dir.file("x.dot")}).code == 2);
}

TEST_CASE("stats aggregates the square atlas") {
    const TempDir dir;
    const std::string atlas_path = build_square_atlas(dir);

    const CliResult stats = run({"stats", "--atlas", atlas_path});
    REQUIRE(stats.code == 0);
    CHECK(stats.out.find("14 classes, 75 landscapes") != std::string::npos);
    CHECK(stats.out.find("2 strict + 2 weak") != std::string::npos);
    CHECK(stats.out.find("best better 3, first better 0, tie 11") != std::string::npos);
    CHECK(stats.out.find("best faster 3, first faster 10, tie 1") != std::string::npos);

    const CliResult with_cdfs =
        run({"stats", "--atlas", atlas_path, "--out-dir", dir.path.string()});
    REQUIRE(with_cdfs.code == 0);
    for (const char* name : {"success_cdf_best.csv", "success_cdf_first.csv",
                             "ert_cdf_best.csv", "ert_cdf_first.csv"}) {
        const std::string text = slurp(dir.file(name));
        CHECK(text.rfind("threshold,count", 0) == 0);
    }
}

TEST_CASE("fast self-verification passes through the cli") {
    const CliResult verify = run({"verify", "--level", "fast"});
    CHECK(verify.code == 0);
    CHECK(verify.out.find("PASS") != std::string::npos);
    CHECK(verify.out.find("FAIL") == std::string::npos);
    CHECK(verify.out.find("all checks passed (fast level)") != std::string::npos);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == 2);                        // a subcommand is required
    CHECK(run({"frobnicate"}).code == 2);            // unknown subcommand
    CHECK(run({"counts"}).code == 2);                // missing required --n
    CHECK(run({"verify", "--level", "bogus"}).code == 2);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"--help"}).out.find("Usage") != std::string::npos);
}
