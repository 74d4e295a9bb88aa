#include <algorithm>
#include <numeric>

#include <catch2/catch_amalgamated.hpp>

#include "brauer/oracle.hpp"
#include "brauer/orbits.hpp"
#include "brauer/walk.hpp"
#include "fixtures.hpp"

using namespace brauer;

namespace {

bool cyclically_equal(std::vector<Id> a, const std::vector<Id>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a == b) return true;
        std::rotate(a.begin(), a.begin() + 1, a.end());
    }
    return a == b;
}

} // namespace

TEST_CASE("walk of the branching fixture") {
    GreenWalk w = green_walk(fixtures::branching_tree());
    REQUIRE(w.edges == std::vector<Id>{"0", "0", "2", "3", "3", "2", "1", "1"});
    REQUIRE(w.from[0] == "u"); // canonical rotation starts at the least step
    SECTION("each edge appears exactly twice") {
        for (const auto& [e, uv] : fixtures::branching_tree().tree.ends)
            REQUIRE(std::count(w.edges.begin(), w.edges.end(), e) == 2);
    }
    SECTION("walk steps follow the predecessor rule") {
        const BrauerTree t = fixtures::branching_tree();
        for (std::size_t i = 0; i < w.size(); ++i) {
            Id arrived = w.to(i);
            REQUIRE(t.tree.incident(w.edges[i], arrived));
            REQUIRE(w.edges[(i + 1) % w.size()] ==
                    t.tree.predecessor_around(w.edges[i], arrived));
        }
    }
}

TEST_CASE("walk of a single edge") {
    GreenWalk w = green_walk(fixtures::single_edge(1));
    REQUIRE(w.edges == std::vector<Id>{"0", "0"});
}

TEST_CASE("enlarged walks match the worked examples up to rotation") {
    SECTION("branching fixture") {
        GreenWalk w = green_walk(enlarge(fixtures::branching_tree(), fixtures::branching_w()));
        REQUIRE(cyclically_equal(w.edges,
                                 {"0", "0", "(2|0)", "(2|0)", "2", "3", "3", "(2|3)",
                                  "(2|3)", "2", "1", "1"}));
    }
    SECTION("star fixture") {
        GreenWalk w = green_walk(enlarge(fixtures::star_tree(), fixtures::star_w()));
        REQUIRE(cyclically_equal(w.edges,
                                 {"(0|1)", "0", "0", "4", "4", "3", "3", "(2|3)", "(2|3)",
                                  "2", "2", "1", "1", "(0|1)"}));
    }
}

TEST_CASE("walk marks and eta") {
    SECTION("two marks at gaps 5 and 7") {
        WalkMarks wm = walk_marks(fixtures::branching_tree(), fixtures::branching_w());
        REQUIRE(wm.omega.size() == 2);
        long len = static_cast<long>(wm.walk.size());
        std::multiset<long> gaps;
        for (std::size_t i : wm.omega)
            gaps.insert(cyclic_gap(static_cast<long>(wm.eta.at(i)) - static_cast<long>(i), len));
        REQUIRE(gaps == std::multiset<long>{5, 7});
    }
    SECTION("single mark maps to itself") {
        BrauerTree t = fixtures::single_edge(1);
        SpecialSubset w{{"0", "c"}};
        WalkMarks wm = walk_marks(t, w);
        REQUIRE(wm.omega.size() == 1);
        REQUIRE(wm.eta.at(wm.omega[0]) == wm.omega[0]);
    }
    SECTION("empty W is rejected") {
        REQUIRE_THROWS_AS(walk_marks(fixtures::branching_tree(), {}), EmptyW);
    }
}

TEST_CASE("dimension reports") {
    REQUIRE(dimensions(fixtures::branching_tree(), fixtures::branching_w()) ==
            DimensionReport{Dim::of(3), Dim::of(5), Dim::infinity(), false});
    REQUIRE(dimensions(fixtures::star_tree(), fixtures::star_w()) ==
            DimensionReport{Dim::of(4), Dim::of(6), Dim::infinity(), false});
    auto [g2, w2] = make_gamma_seed(2);
    REQUIRE(dimensions(g2, w2) ==
            DimensionReport{Dim::of(2), Dim::of(2), Dim::of(2), true});
    SECTION("symmetric conventions") {
        REQUIRE(dimensions(fixtures::branching_tree(), {}) ==
                DimensionReport{Dim::infinity(), Dim::of(0), Dim::infinity(), false});
    }
    SECTION("non-special W throws") {
        REQUIRE_THROWS_AS(
            dimensions(fixtures::branching_tree(), SpecialSubset{{"2", "u"}, {"0", "u0"}}),
            NotSpecial);
    }
}

TEST_CASE("coresolution traces") {
    SECTION("branching fixture") {
        REQUIRE(coresolution_trace(fixtures::branching_tree(), fixtures::branching_w(),
                                   {"2", "u"}) ==
                std::vector<Id>{"2", "3", "3", "(2|3)"});
    }
    SECTION("star fixture") {
        auto trace = coresolution_trace(fixtures::star_tree(), fixtures::star_w(), {"2", "c"});
        REQUIRE(trace.size() == 5);
        REQUIRE(trace.back() == "(0|1)");
    }
    SECTION("single edge wraps the whole walk") {
        BrauerTree t = fixtures::single_edge(1);
        SpecialSubset w{{"0", "c"}};
        auto trace = coresolution_trace(t, w, {"0", "c"});
        // full wrap: ends back at the W injective, 2n'-1 terms
        REQUIRE(trace.size() == 3);
        REQUIRE(trace.back() == label_name(t, {"0", "c"}));
    }
    SECTION("label outside W") {
        REQUIRE_THROWS_AS(coresolution_trace(fixtures::branching_tree(),
                                             fixtures::branching_w(), {"0", "u"}),
                          LabelNotInW);
    }
}

TEST_CASE("segment bookkeeping closes the walk") {
    auto check = [](const BrauerTree& t, const SpecialSubset& w) {
        WalkMarks wm = walk_marks(t, w);
        long len = static_cast<long>(wm.walk.size());
        long total = 0;
        for (std::size_t i : wm.omega)
            total += cyclic_gap(static_cast<long>(wm.eta.at(i)) - static_cast<long>(i), len);
        REQUIRE(total == len);
    };
    check(fixtures::branching_tree(), fixtures::branching_w());
    check(fixtures::star_tree(), fixtures::star_w());
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        BrauerTree t = random_tree(6, seed);
        auto labels = h_set(t);
        SpecialSubset w{labels[seed % labels.size()]};
        check(t, w);
    }
}

TEST_CASE("direct gap formulation agrees with the enlarged walk") {
    auto check = [](const BrauerTree& t, const SpecialSubset& w) {
        DimensionReport rep = dimensions(t, w);
        auto ps = walk_positions(t, w);
        long len = 2 * static_cast<long>(t.tree.edge_count());
        long lo = len, hi = 0;
        for (std::size_t j = 0; j < ps.size(); ++j) {
            long g = cyclic_gap(static_cast<long>(ps[(j + 1) % ps.size()]) -
                                    static_cast<long>(ps[j]),
                                len);
            lo = std::min(lo, g);
            hi = std::max(hi, g);
        }
        REQUIRE(rep.domdim == Dim::of(lo));
        REQUIRE(rep.gorenstein == Dim::of(hi));
    };
    check(fixtures::branching_tree(), fixtures::branching_w());
    check(fixtures::star_tree(), fixtures::star_w());
}

TEST_CASE("dimensions ignore the exceptional multiplicity") {
    BrauerTree base = random_tree(5, 11);
    SpecialSubset w{h_set(base)[2], h_set(base)[7]};
    if (!is_special_subset(base, w)) w = {h_set(base)[2]};
    DimensionReport ref = dimensions(base, w);
    for (const auto& [v, cyc] : base.tree.order)
        for (int m = 2; m <= 4; ++m) {
            DimensionReport rep = dimensions(with_multiplicity(base, v, m), w);
            REQUIRE(rep.domdim == ref.domdim);
            REQUIRE(rep.gorenstein == ref.gorenstein);
        }
}

TEST_CASE("star dimensions agree with the resolution oracle") {
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= 2; ++m)
            for (int mask = 0; mask < (1 << n); ++mask) {
                std::set<int> pos;
                for (int i = 0; i < n; ++i)
                    if (mask >> i & 1) pos.insert(i);
                BrauerTree star = make_star(n, m);
                SpecialSubset w;
                for (int p : pos) w.insert({std::to_string(p), "c"});
                if (!is_special_subset(star, w)) continue;
                DimensionReport walk_rep = dimensions(star, w);
                DimensionReport oracle_rep = oracle_dims(gendo_kupisch(n, m, pos));
                REQUIRE(walk_rep == oracle_rep);
            }
}
