#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "brauer/report.hpp"
#include "brauer/tree.hpp"

namespace brauer {

/// Green's walk around a planar tree: step i traverses edges[i] from from[i]
/// to the other endpoint, and the next edge is the predecessor of edges[i]
/// around that endpoint.  Every edge is traversed exactly twice, once per
/// direction, so the walk has length 2 * |edges|.
struct GreenWalk {
    std::vector<Id> edges;
    std::vector<Id> from;

    std::size_t size() const { return edges.size(); }
    Id to(std::size_t i) const { return from[(i + 1) % size()]; }
};

/// The unique walk, in canonical rotation: starts at the lexicographically
/// least (edge, from-vertex) step.
inline GreenWalk green_walk(const BrauerTree& t) {
    // directed step = (edge, from); successor map is a single 2N-cycle
    auto next = [&](std::pair<Id, Id> step) -> std::pair<Id, Id> {
        const Id& arrived = t.tree.other_end(step.first, step.second);
        const Id& e = t.tree.predecessor_around(step.first, arrived);
        return {e, arrived};
    };

    std::pair<Id, Id> start{t.tree.ends.begin()->first, t.tree.ends.begin()->second.first};
    std::vector<std::pair<Id, Id>> cycle;
    auto cur = start;
    do {
        cycle.push_back(cur);
        cur = next(cur);
    } while (cur != start);

    auto least = std::min_element(cycle.begin(), cycle.end()) - cycle.begin();
    GreenWalk w;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        const auto& [e, v] = cycle[(i + least) % cycle.size()];
        w.edges.push_back(e);
        w.from.push_back(v);
    }
    return w;
}

/// overline(k): representative of k in {1, ..., period} modulo period.
inline long cyclic_gap(long k, long period) {
    long r = ((k % period) + period) % period;
    return r == 0 ? period : r;
}

/// Walk of the enlarged tree together with the marked index set omega
/// (0-based positions i where edges[i] = edges[i+1] is a W leaf edge) and the
/// cyclic successor function eta on it.
struct WalkMarks {
    GreenWalk walk;
    std::vector<std::size_t> omega;            // sorted
    std::map<std::size_t, std::size_t> eta;    // next mark, cyclically
    std::map<Id, std::size_t> mark_of_label;   // W leaf edge id -> its mark
};

inline WalkMarks walk_marks(const BrauerTree& t, const SpecialSubset& w) {
    if (w.empty()) throw EmptyW("walk marks need a nonempty W");
    std::set<Id> wnames;
    for (const HookLabel& h : w) wnames.insert(label_name(t, h));

    WalkMarks out;
    out.walk = green_walk(enlarge(t, w));
    std::size_t len = out.walk.size();
    for (std::size_t i = 0; i < len; ++i) {
        const Id& e = out.walk.edges[i];
        if (e == out.walk.edges[(i + 1) % len] && wnames.count(e)) {
            out.omega.push_back(i);
            out.mark_of_label[e] = i;
        }
    }
    for (std::size_t j = 0; j < out.omega.size(); ++j)
        out.eta[out.omega[j]] = out.omega[(j + 1) % out.omega.size()];
    return out;
}

/// Homological dimensions of the algebra attached to (t, W): for nonempty W,
/// Gorenstein = max gap - 2 and domdim = min gap - 2 over the cyclic gaps
/// between consecutive marks on the enlarged walk; gldim = 2|edges| exactly
/// when all multiplicities are 1 and |W| = 1, else infinite.  The symmetric
/// case W = empty reports (infinity, 0, infinity) by convention.
inline DimensionReport dimensions(const BrauerTree& t, const SpecialSubset& w) {
    for (const HookLabel& h : w) check_label(t, h);
    if (!is_special_subset(t, w))
        throw NotSpecial("W contains a hook label and its syzygy neighbour");

    DimensionReport rep;
    if (w.empty()) {
        rep.domdim = Dim::infinity();
        rep.gorenstein = Dim::of(0);
        rep.gldim = Dim::infinity();
        rep.higher_auslander = false;
        return rep;
    }

    WalkMarks wm = walk_marks(t, w);
    long period = static_cast<long>(wm.walk.size());
    long lo = period, hi = 0;
    for (std::size_t i : wm.omega) {
        long g = cyclic_gap(static_cast<long>(wm.eta.at(i)) - static_cast<long>(i), period);
        lo = std::min(lo, g);
        hi = std::max(hi, g);
    }
    rep.domdim = Dim::of(lo - 2);
    rep.gorenstein = Dim::of(hi - 2);

    bool all_mult_one = t.exceptional_multiplicity() == 1;
    if (all_mult_one && w.size() == 1)
        rep.gldim = Dim::of(2 * static_cast<long>(t.tree.edge_count()));
    else
        rep.gldim = Dim::infinity();
    rep.higher_auslander = rep.gldim.finite && rep.gldim <= rep.domdim;
    return rep;
}

/// Injective-term labels of the minimal coresolution of the projective at a W
/// vertex: the walk edges strictly between its mark and the next mark,
/// starting two steps after the mark and ending on the next W leaf edge.
inline std::vector<Id> coresolution_trace(const BrauerTree& t, const SpecialSubset& w,
                                          const HookLabel& label) {
    if (!w.count(label)) throw LabelNotInW("label is not a member of W");
    WalkMarks wm = walk_marks(t, w);
    std::size_t len = wm.walk.size();
    std::size_t i = wm.mark_of_label.at(label_name(t, label));
    long gap = cyclic_gap(static_cast<long>(wm.eta.at(i)) - static_cast<long>(i),
                          static_cast<long>(len));
    std::vector<Id> terms;
    for (long k = 2; k <= gap; ++k)
        terms.push_back(wm.walk.edges[(i + static_cast<std::size_t>(k)) % len]);
    return terms;
}

} // namespace brauer
