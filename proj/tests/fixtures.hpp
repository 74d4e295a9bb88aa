#pragma once

#include "brauer/tree.hpp"

namespace fixtures {

/// Four-edge tree: 3-valent vertex u with cyclic order (0,1,2); edge 2 ends
/// at the exceptional vertex u2 (mult 2, order (2,3)); 0,1,3 end at leaves.
inline brauer::BrauerTree branching_tree() {
    brauer::RawTree raw;
    raw.vertices = {
        {"u", 1, {"0", "1", "2"}},
        {"u0", 1, {"0"}},
        {"u1", 1, {"1"}},
        {"u2", 2, {"2", "3"}},
        {"u3", 1, {"3"}},
    };
    raw.edges = {
        {"0", {"u", "u0"}},
        {"1", {"u", "u1"}},
        {"2", {"u", "u2"}},
        {"3", {"u2", "u3"}},
    };
    return brauer::validate_tree(raw);
}

/// The mixed-parity special subset on the branching tree: both labels of
/// edge 2.
inline brauer::SpecialSubset branching_w() {
    return {{"2", "u"}, {"2", "u2"}};
}

/// Star with 5 edges, centre multiplicity 2, W at the centre labels of edges
/// 0 and 2 (pure parity).
inline brauer::BrauerTree star_tree() { return brauer::make_star(5, 2); }

inline brauer::SpecialSubset star_w() {
    return {{"0", "c"}, {"2", "c"}};
}

inline brauer::BrauerTree single_edge(int m = 1) { return brauer::make_star(1, m); }

} // namespace fixtures
