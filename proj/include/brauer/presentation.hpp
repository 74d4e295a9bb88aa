#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "brauer/tree.hpp"

namespace brauer {

/// Arrow x -> y of a Brauer quiver; `via` is the associating vertex of the
/// underlying (x|y), which disambiguates the two loops of a single-edge tree.
struct Arrow {
    Id src;
    Id dst;
    Id via;

    auto operator<=>(const Arrow&) const = default;
};

/// Path (x -> y -> z) declared zero; the two arrows are associated to the two
/// different endpoints of y.
struct ZeroPath {
    Id x, y, z;
    Id via_first, via_second;
};

/// rho_{x,u}^{pu} - rho_{x,v}^{pv}.  A cycle is stored as the sequence of
/// quiver vertices it passes through, starting (and implicitly ending) at x.
struct CycleEq {
    std::vector<Id> lhs_cycle;
    int lhs_power;
    std::vector<Id> rhs_cycle;
    int rhs_power;
};

/// rho^power = 0 at a quotiented vertex.
struct NilpotentCycle {
    std::vector<Id> cycle;
    int power;
};

struct QuiverPresentation {
    std::vector<Id> vertices;
    std::vector<Arrow> arrows;
    std::vector<ZeroPath> zero_paths;
    std::vector<CycleEq> cycle_eqs;
    std::vector<NilpotentCycle> nilpotents;

    int in_degree(const Id& v) const {
        int d = 0;
        for (const auto& a : arrows) d += a.dst == v;
        return d;
    }
    int out_degree(const Id& v) const {
        int d = 0;
        for (const auto& a : arrows) d += a.src == v;
        return d;
    }
};

/// The simple cycle rho_{edge,vertex}: vertices of the quiver visited by going
/// once around `vertex`, starting at `edge`.
inline std::vector<Id> cycle_at(const BrauerTree& t, const Id& edge, const Id& vertex) {
    std::vector<Id> cyc;
    Id cur = edge;
    do {
        cyc.push_back(cur);
        cur = t.tree.successor_around(cur, vertex);
    } while (cur != edge);
    return cyc;
}

namespace detail {

/// Shared builder: the Brauer quiver of `te` with the loops at the W leaves
/// removed, zero paths only between surviving arrows, cycle-power equalities
/// for `old_edges`, and one nilpotency per W label.
inline QuiverPresentation build_presentation(const BrauerTree& te,
                                             const std::vector<Id>& old_edges,
                                             const std::map<Id, Id>& w_leaf_of_edge) {
    QuiverPresentation q;
    for (const Id& e : old_edges) q.vertices.push_back(e);
    for (const auto& [e, leaf] : w_leaf_of_edge) q.vertices.push_back(e);

    auto removed = [&](const Id& edge, const Id& vertex) {
        auto it = w_leaf_of_edge.find(edge);
        return it != w_leaf_of_edge.end() && it->second == vertex;
    };

    for (const HookLabel& h : h_set(te)) {
        if (removed(h.edge, h.vertex)) continue;
        q.arrows.push_back({h.edge, successor(te, h), h.vertex});
    }

    for (const auto& [y, uv] : te.tree.ends) {
        auto add = [&](const Id& u, const Id& v) {
            const Id& x = te.tree.predecessor_around(y, u);
            const Id& z = te.tree.successor_around(y, v);
            if (removed(x, u) || removed(y, v)) return;
            q.zero_paths.push_back({x, y, z, u, v});
        };
        add(uv.first, uv.second);
        add(uv.second, uv.first);
    }

    for (const Id& x : old_edges) {
        const auto& [u, v] = te.tree.ends.at(x);
        q.cycle_eqs.push_back({cycle_at(te, x, u), te.mult.at(u),
                               cycle_at(te, x, v), te.mult.at(v)});
    }
    for (const auto& [e, leaf] : w_leaf_of_edge) {
        const Id& v = te.tree.other_end(e, leaf);
        q.nilpotents.push_back({cycle_at(te, e, v), te.mult.at(v)});
    }
    return q;
}

} // namespace detail

/// Quiver and relations of the Brauer tree algebra of t.  Arrows biject with
/// the H-set, including the loops at leaves.
inline QuiverPresentation brauer_quiver(const BrauerTree& t) {
    std::vector<Id> edges;
    for (const auto& [e, uv] : t.tree.ends) edges.push_back(e);
    return detail::build_presentation(t, edges, {});
}

/// Quiver and relations of the quotient algebra attached to (t, W): the
/// Brauer quiver of the enlarged tree with one loop per W label removed, and
/// the cycle through each W vertex declared nilpotent.
inline QuiverPresentation gamma_presentation(const BrauerTree& t, const SpecialSubset& w) {
    BrauerTree te = enlarge(t, w); // throws NotSpecial / LabelNotInTree
    std::vector<Id> old_edges;
    for (const auto& [e, uv] : t.tree.ends) old_edges.push_back(e);
    std::map<Id, Id> w_leaf;
    for (const HookLabel& h : w) {
        Id name = label_name(t, h);
        w_leaf[name] = name + "*";
    }
    return detail::build_presentation(te, old_edges, w_leaf);
}

/// Drop the loop arrows that the relations make redundant (loops at
/// multiplicity-1 leaves, when the quiver has more than one vertex), together
/// with the relations that mention them.  This matches the usual admissible
/// display of these algebras.
inline QuiverPresentation without_redundant_loops(const BrauerTree& t,
                                                  const QuiverPresentation& q) {
    if (q.vertices.size() < 2) return q;
    QuiverPresentation out;
    out.vertices = q.vertices;
    std::set<std::pair<Id, Id>> dropped; // (edge, via)
    for (const auto& a : q.arrows) {
        bool redundant = a.src == a.dst && t.tree.order.count(a.via) &&
                         t.tree.order.at(a.via).size() == 1 && t.mult.at(a.via) == 1;
        if (redundant)
            dropped.insert({a.src, a.via});
        else
            out.arrows.push_back(a);
    }
    for (const auto& zp : q.zero_paths) {
        if (dropped.count({zp.x, zp.via_first}) && zp.x == zp.y) continue;
        if (dropped.count({zp.y, zp.via_second}) && zp.y == zp.z) continue;
        out.zero_paths.push_back(zp);
    }
    for (const auto& ce : q.cycle_eqs) {
        bool lhs_loop = ce.lhs_cycle.size() == 1;
        bool rhs_loop = ce.rhs_cycle.size() == 1;
        // a cycle of length one is the loop itself; the equality just defines
        // the dropped generator
        if ((lhs_loop || rhs_loop) &&
            !(lhs_loop && rhs_loop)) // single-edge tree keeps both loops
            continue;
        out.cycle_eqs.push_back(ce);
    }
    out.nilpotents = q.nilpotents;
    return out;
}

// --- Cartan matrix ------------------------------------------------------

struct CartanMatrix {
    std::vector<Id> labels;
    std::vector<std::vector<long>> entries;

    long row_sum(std::size_t i) const {
        long s = 0;
        for (long e : entries[i]) s += e;
        return s;
    }
};

/// Composition multiplicities [P_x : S_y] from the closed Hom-dimension
/// formulas; indexed by old edges (sorted) then W labels (sorted).
inline CartanMatrix cartan(const BrauerTree& t, const SpecialSubset& w) {
    if (!is_special_subset(t, w))
        throw NotSpecial("W contains a hook label and its syzygy neighbour");
    for (const HookLabel& h : w) check_label(t, h);

    CartanMatrix c;
    std::vector<Id> old_edges;
    for (const auto& [e, uv] : t.tree.ends) old_edges.push_back(e);
    std::vector<HookLabel> wl(w.begin(), w.end());
    std::vector<Id> wnames;
    for (const HookLabel& h : wl) wnames.push_back(label_name(t, h));

    c.labels = old_edges;
    c.labels.insert(c.labels.end(), wnames.begin(), wnames.end());

    std::size_t n_old = old_edges.size(), n = c.labels.size();
    c.entries.assign(n, std::vector<long>(n, 0));

    auto shares = [&](const Id& x, const Id& y) {
        long s = 0;
        const auto& [xu, xv] = t.tree.ends.at(x);
        const auto& [yu, yv] = t.tree.ends.at(y);
        for (const Id& a : {xu, xv})
            if (a == yu || a == yv) s += t.mult.at(a);
        return s;
    };

    for (std::size_t i = 0; i < n_old; ++i)
        for (std::size_t j = 0; j < n_old; ++j) {
            if (i == j) {
                const auto& [u, v] = t.tree.ends.at(old_edges[i]);
                c.entries[i][j] = t.mult.at(u) + t.mult.at(v);
            } else {
                c.entries[i][j] = shares(old_edges[i], old_edges[j]);
            }
        }

    for (std::size_t k = 0; k < wl.size(); ++k) {
        const Id& v = wl[k].vertex;
        long mv = t.mult.at(v);
        for (std::size_t i = 0; i < n_old; ++i) {
            long e = t.tree.incident(old_edges[i], v) ? mv : 0;
            c.entries[i][n_old + k] = e;
            c.entries[n_old + k][i] = e;
        }
        for (std::size_t l = 0; l < wl.size(); ++l)
            c.entries[n_old + k][n_old + l] = wl[l].vertex == v ? mv : 0;
    }
    return c;
}

// --- Loewy layers -------------------------------------------------------

/// Radical layers of one indecomposable projective: either a single chain
/// (top..socle) or a shared top/socle with two branches.
struct LoewyDiagram {
    Id vertex;
    bool uniserial = false;
    std::vector<Id> chain;               // set when uniserial
    Id top, socle;                       // set when branching
    std::vector<Id> branch_a, branch_b;  // branch at the smaller endpoint first

    std::size_t total_factors() const {
        return uniserial ? chain.size()
                         : branch_a.size() + branch_b.size() + 2;
    }
};

namespace detail {

/// Composition factors contributed by going around `vertex` m_v times,
/// starting after `edge` and stopping before returning to it.
inline std::vector<Id> branch_factors(const BrauerTree& t, const Id& edge, const Id& vertex) {
    std::vector<Id> out;
    int rounds = t.mult.at(vertex);
    std::size_t valency = t.tree.order.at(vertex).size();
    Id cur = edge;
    for (std::size_t i = 0; i + 1 < rounds * valency; ++i) {
        cur = t.tree.successor_around(cur, vertex);
        out.push_back(cur);
    }
    return out;
}

} // namespace detail

/// Loewy layer listing of every projective of the (t, W) presentation.
inline std::vector<LoewyDiagram> loewy(const BrauerTree& t, const SpecialSubset& w) {
    BrauerTree te = enlarge(t, w);
    std::map<Id, Id> w_assoc;
    for (const HookLabel& h : w) w_assoc[label_name(t, h)] = h.vertex;

    std::vector<LoewyDiagram> out;
    for (const auto& [x, uv] : t.tree.ends) {
        LoewyDiagram d;
        d.vertex = x;
        Id u = std::min(uv.first, uv.second), v = std::max(uv.first, uv.second);
        auto a = detail::branch_factors(te, x, u);
        auto b = detail::branch_factors(te, x, v);
        if (a.empty() || b.empty()) {
            d.uniserial = true;
            d.chain.push_back(x);
            const auto& rest = a.empty() ? b : a;
            d.chain.insert(d.chain.end(), rest.begin(), rest.end());
            d.chain.push_back(x);
        } else {
            d.top = x;
            d.socle = x;
            d.branch_a = a;
            d.branch_b = b;
        }
        out.push_back(d);
    }
    for (const auto& [g, v] : w_assoc) {
        // projective of the enlarged tree with its simple socle removed
        LoewyDiagram d;
        d.vertex = g;
        d.uniserial = true;
        d.chain.push_back(g);
        auto rest = detail::branch_factors(te, g, v);
        d.chain.insert(d.chain.end(), rest.begin(), rest.end());
        out.push_back(d);
    }
    std::sort(out.begin(), out.end(),
              [](const LoewyDiagram& a, const LoewyDiagram& b) { return a.vertex < b.vertex; });
    return out;
}

// --- DOT export ---------------------------------------------------------

inline std::string to_dot(const QuiverPresentation& q) {
    std::string s = "digraph quiver {\n";
    auto cycle_str = [](const std::vector<Id>& c, int p) {
        std::string r = "(";
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) r += "->";
            r += c[i];
        }
        r += "->" + c.front() + ")^" + std::to_string(p);
        return r;
    };
    for (const auto& zp : q.zero_paths)
        s += "  // zero: " + zp.x + "->" + zp.y + "->" + zp.z + "\n";
    for (const auto& ce : q.cycle_eqs)
        s += "  // equal: " + cycle_str(ce.lhs_cycle, ce.lhs_power) + " = " +
             cycle_str(ce.rhs_cycle, ce.rhs_power) + "\n";
    for (const auto& np : q.nilpotents)
        s += "  // zero: " + cycle_str(np.cycle, np.power) + "\n";
    for (const auto& v : q.vertices) s += "  \"" + v + "\";\n";
    for (const auto& a : q.arrows)
        s += "  \"" + a.src + "\" -> \"" + a.dst + "\";\n";
    s += "}\n";
    return s;
}

} // namespace brauer
