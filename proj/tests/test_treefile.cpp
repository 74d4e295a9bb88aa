#include <catch2/catch_amalgamated.hpp>

#include "brauer/treefile.hpp"
#include "fixtures.hpp"

using namespace brauer;

namespace {

const char* kBranching = R"({
  "vertices": [
    {"id": "u",  "order": ["0", "1", "2"]},
    {"id": "u0", "order": ["0"]},
    {"id": "u1", "order": ["1"]},
    {"id": "u2", "mult": 2, "order": ["2", "3"]},
    {"id": "u3", "order": ["3"]}
  ],
  "edges": [
    {"id": "0", "ends": ["u", "u0"]},
    {"id": "1", "ends": ["u", "u1"]},
    {"id": "2", "ends": ["u", "u2"]},
    {"id": "3", "ends": ["u2", "u3"]}
  ],
  "W": [
    {"edge": "2", "vertex": "u"},
    {"edge": "2", "vertex": "u2"}
  ]
})";

} // namespace

TEST_CASE("parses the branching fixture") {
    auto [t, w] = parse_tree_file(kBranching);
    REQUIRE(t.tree.order == fixtures::branching_tree().tree.order);
    REQUIRE(t.tree.ends == fixtures::branching_tree().tree.ends);
    REQUIRE(t.mult == fixtures::branching_tree().mult); // default mult is 1
    REQUIRE(w == fixtures::branching_w());
}

TEST_CASE("W is optional") {
    auto [t, w] = parse_tree_file(
        R"({"vertices": [{"id": "a", "order": ["x"]}, {"id": "b", "order": ["x"]}],
            "edges": [{"id": "x", "ends": ["a", "b"]}]})");
    REQUIRE(t.tree.edge_count() == 1);
    REQUIRE(w.empty());
}

TEST_CASE("fail-closed parsing") {
    SECTION("malformed document") {
        REQUIRE_THROWS_AS(parse_tree_file("{"), ParseError);
        REQUIRE_THROWS_AS(parse_tree_file("[1,2]"), ParseError);
    }
    SECTION("unknown top-level field") {
        REQUIRE_THROWS_AS(parse_tree_file(
                              R"({"vertices": [], "edges": [], "color": "red"})"),
                          ParseError);
    }
    SECTION("unknown vertex field") {
        REQUIRE_THROWS_AS(
            parse_tree_file(
                R"({"vertices": [{"id": "a", "order": [], "label": "x"}], "edges": []})"),
            ParseError);
    }
    SECTION("missing required field") {
        REQUIRE_THROWS_AS(parse_tree_file(R"({"vertices": []})"), ParseError);
        REQUIRE_THROWS_AS(
            parse_tree_file(R"({"vertices": [{"id": "a"}], "edges": []})"), ParseError);
    }
    SECTION("wrong types") {
        REQUIRE_THROWS_AS(
            parse_tree_file(
                R"({"vertices": [{"id": 3, "order": []}], "edges": []})"),
            ParseError);
        REQUIRE_THROWS_AS(
            parse_tree_file(
                R"({"vertices": [{"id": "a", "mult": "two", "order": []}], "edges": []})"),
            ParseError);
    }
    SECTION("domain errors are not parse errors") {
        // empty but well-formed: fails tree validation, not parsing
        REQUIRE_THROWS_AS(parse_tree_file(R"({"vertices": [], "edges": []})"), EmptyTree);
        // W label that is not an incidence
        REQUIRE_THROWS_AS(
            parse_tree_file(
                R"({"vertices": [{"id": "a", "order": ["x"]}, {"id": "b", "order": ["x"]}],
                    "edges": [{"id": "x", "ends": ["a", "b"]}],
                    "W": [{"edge": "x", "vertex": "zzz"}]})"),
            LabelNotInTree);
    }
}

TEST_CASE("serialization round trip") {
    auto doc = tree_file_json(fixtures::branching_tree(), fixtures::branching_w());
    auto [t, w] = parse_tree_file(doc.dump());
    REQUIRE(t.tree.order == fixtures::branching_tree().tree.order);
    REQUIRE(t.tree.ends == fixtures::branching_tree().tree.ends);
    REQUIRE(t.mult == fixtures::branching_tree().mult);
    REQUIRE(w == fixtures::branching_w());
}
