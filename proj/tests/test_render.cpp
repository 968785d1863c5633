#include <doctest.h>

#include <string>
#include <vector>

#include "rankatlas/render.hpp"
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

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
    std::size_t count = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size())) {
        ++count;
    }
    return count;
}

bool valid(const std::string& dot) {
    std::string reason;
    const bool ok = validate_dot(dot, &reason);
    if (!ok) INFO("reason: ", reason);
    return ok;
}

}  // namespace

TEST_CASE("role colors: gold optimum, pink strict trap") {
    const std::string dot = render_dot(make_rv(2, {2, 3, 4, 1}), "trap");
    CHECK(dot.find("digraph \"trap\" {") == 0);
    CHECK(dot.find("\"11\" [label=\"11\\nA\", fillcolor=\"gold\"]") != std::string::npos);
    CHECK(dot.find("\"00\" [label=\"00\\nB\", fillcolor=\"lightpink\"]") !=
          std::string::npos);
    // improving edges point from worse to better
    CHECK(dot.find("\"01\" -> \"11\";") != std::string::npos);
    CHECK(dot.find("\"10\" -> \"11\";") != std::string::npos);
    CHECK(count_occurrences(dot, "dir=none") == 0);
    CHECK(valid(dot));
}

TEST_CASE("weak suboptimum renders orange") {
    const std::string dot = render_dot(make_rv(2, {1, 2, 2, 2}));
    CHECK(dot.find("\"11\" [label=\"11\\nB\", fillcolor=\"orange\"]") !=
          std::string::npos);
    CHECK(count_occurrences(dot, "dir=none") == 2);
    CHECK(valid(dot));
}

TEST_CASE("neutral edges are undirected and dashed") {
    const std::string flat = render_dot(make_rv(2, {1, 1, 1, 1}));
    CHECK(count_occurrences(flat, "dir=none, style=dashed") == 4);
    CHECK(count_occurrences(flat, "fillcolor=\"gold\"") == 4);
    CHECK(valid(flat));

    const std::string pair = render_dot(make_rv(1, {1, 1}));
    CHECK(pair.find("\"0\" -> \"1\" [dir=none, style=dashed, color=\"gray70\"];") !=
          std::string::npos);
    CHECK(valid(pair));

    const std::string slope = render_dot(make_rv(1, {1, 2}));
    CHECK(slope.find("\"1\" -> \"0\";") != std::string::npos);
    CHECK(count_occurrences(slope, "dir=none") == 0);
    CHECK(valid(slope));
}

TEST_CASE("rank shading interpolates between the blue endpoints") {
    const std::string dot = render_dot(make_rv(2, {1, 2, 3, 4}));
    // the worst rank gets the light endpoint exactly
    CHECK(dot.find("\"11\" [label=\"11\\nD\", fillcolor=\"#deebfa\"]") !=
          std::string::npos);
    // middle ranks get distinct intermediate shades
    const std::size_t b = dot.find("\"01\" [label=\"01\\nB\", fillcolor=\"#");
    const std::size_t c = dot.find("\"10\" [label=\"10\\nC\", fillcolor=\"#");
    REQUIRE(b != std::string::npos);
    REQUIRE(c != std::string::npos);
    const std::string shade_b = dot.substr(dot.find('#', b), 7);
    const std::string shade_c = dot.substr(dot.find('#', c), 7);
    CHECK(shade_b != shade_c);
    CHECK(shade_b != "#deebfa");
    CHECK(valid(dot));
}

TEST_CASE("every square landscape renders to structurally valid dot") {
    enumerate_all_rank_vectors(2, [](const RankVector& rv) {
        std::string reason;
        CHECK(validate_dot(render_dot(rv), &reason));
    });
}

TEST_CASE("the validator rejects malformed dot text") {
    std::string reason;

    CHECK_FALSE(validate_dot("graph \"g\" { \"a\"; }", &reason));
    CHECK(reason == "missing digraph keyword");

    CHECK_FALSE(validate_dot("digraph \"g\" { \"a\" }", &reason));
    CHECK(reason == "statement missing semicolon");

    CHECK_FALSE(validate_dot("digraph \"g\" { \"a\"; \"a\" -> \"b\"; }", &reason));
    CHECK(reason == "edge references undeclared node");

    CHECK_FALSE(validate_dot("digraph \"g\" { \"a\";", &reason));
    CHECK(reason == "missing closing brace");

    CHECK_FALSE(validate_dot("digraph \"g\" { \"a\"; } trailing", &reason));
    CHECK(reason == "content after closing brace");

    CHECK_FALSE(validate_dot("digraph \"g\" { }", &reason));
    CHECK(reason == "no nodes declared");
}
