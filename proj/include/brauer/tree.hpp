#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "brauer/errors.hpp"

namespace brauer {

using Id = std::string;

/// One incidence (edge, endpoint).  With y the successor of `edge` around
/// `vertex`, this pin-points the symbol (x|y); storing the endpoint instead of
/// the edge pair keeps single-edge trees and leaf loops unambiguous.
struct HookLabel {
    Id edge;
    Id vertex;

    auto operator<=>(const HookLabel&) const = default;
};

using SpecialSubset = std::set<HookLabel>;

/// Finite tree with a cyclic ordering of the incident edges at every vertex
/// (counter-clockwise convention).  Immutable after validation.
struct PlanarTree {
    std::map<Id, std::vector<Id>> order; // vertex -> cyclic order of incident edges
    std::map<Id, std::pair<Id, Id>> ends; // edge -> its two endpoints

    std::size_t edge_count() const { return ends.size(); }
    std::size_t vertex_count() const { return order.size(); }

    const Id& other_end(const Id& edge, const Id& vertex) const {
        const auto& [a, b] = ends.at(edge);
        return vertex == a ? b : a;
    }

    bool incident(const Id& edge, const Id& vertex) const {
        const auto& [a, b] = ends.at(edge);
        return vertex == a || vertex == b;
    }

    /// Successor of `edge` in the cyclic order around `vertex`.
    const Id& successor_around(const Id& edge, const Id& vertex) const {
        const auto& cyc = order.at(vertex);
        for (std::size_t i = 0; i < cyc.size(); ++i)
            if (cyc[i] == edge) return cyc[(i + 1) % cyc.size()];
        throw LabelNotInTree("edge " + edge + " not incident to vertex " + vertex);
    }

    const Id& predecessor_around(const Id& edge, const Id& vertex) const {
        const auto& cyc = order.at(vertex);
        for (std::size_t i = 0; i < cyc.size(); ++i)
            if (cyc[i] == edge) return cyc[(i + cyc.size() - 1) % cyc.size()];
        throw LabelNotInTree("edge " + edge + " not incident to vertex " + vertex);
    }
};

struct BrauerTree {
    PlanarTree tree;
    std::map<Id, int> mult; // every vertex present; at most one entry > 1

    /// Multiplicity of the exceptional vertex, 1 when every vertex is ordinary.
    int exceptional_multiplicity() const {
        for (const auto& [v, m] : mult)
            if (m > 1) return m;
        return 1;
    }

    /// Exceptional vertex id, or empty when mult == 1 everywhere.
    Id exceptional_vertex() const {
        for (const auto& [v, m] : mult)
            if (m > 1) return v;
        return {};
    }
};

/// Unvalidated tree description, as read from a tree file.
struct RawTree {
    struct Vertex {
        Id id;
        int mult = 1;
        std::vector<Id> order;
    };
    struct Edge {
        Id id;
        std::pair<Id, Id> ends;
    };
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
};

inline BrauerTree validate_tree(const RawTree& raw) {
    if (raw.vertices.empty() || raw.edges.empty())
        throw EmptyTree("a Brauer tree needs at least one edge");

    BrauerTree t;
    for (const auto& v : raw.vertices) {
        if (t.tree.order.count(v.id))
            throw BadCyclicOrder("duplicate vertex id " + v.id);
        if (v.mult < 1)
            throw BadParameter("multiplicity of vertex " + v.id + " must be >= 1");
        t.tree.order[v.id] = v.order;
        t.mult[v.id] = v.mult;
    }
    for (const auto& e : raw.edges) {
        if (t.tree.ends.count(e.id))
            throw NotATree("duplicate edge id " + e.id);
        if (e.ends.first == e.ends.second)
            throw NotATree("edge " + e.id + " is a loop");
        if (!t.tree.order.count(e.ends.first) || !t.tree.order.count(e.ends.second))
            throw NotATree("edge " + e.id + " references an unknown vertex");
        t.tree.ends[e.id] = e.ends;
    }

    if (t.tree.edge_count() + 1 != t.tree.vertex_count())
        throw NotATree("|edges| must equal |vertices| - 1");

    // order(v) must be a permutation of the incident edges
    std::map<Id, std::set<Id>> incident;
    for (const auto& [e, uv] : t.tree.ends) {
        incident[uv.first].insert(e);
        incident[uv.second].insert(e);
    }
    for (const auto& [v, cyc] : t.tree.order) {
        std::set<Id> seen(cyc.begin(), cyc.end());
        if (seen.size() != cyc.size())
            throw BadCyclicOrder("repeated edge in cyclic order at vertex " + v);
        if (seen != incident[v])
            throw BadCyclicOrder("cyclic order at vertex " + v +
                                 " is not a permutation of its incident edges");
    }

    // connectivity (acyclicity then follows from the edge count)
    std::set<Id> reached;
    std::queue<Id> frontier;
    frontier.push(t.tree.order.begin()->first);
    reached.insert(t.tree.order.begin()->first);
    while (!frontier.empty()) {
        Id v = frontier.front();
        frontier.pop();
        for (const Id& e : t.tree.order.at(v)) {
            const Id& w = t.tree.other_end(e, v);
            if (reached.insert(w).second) frontier.push(w);
        }
    }
    if (reached.size() != t.tree.vertex_count())
        throw NotATree("underlying graph is disconnected");

    int exceptional = 0;
    for (const auto& [v, m] : t.mult)
        if (m > 1) ++exceptional;
    if (exceptional > 1)
        throw MultipleExceptional("more than one vertex has multiplicity > 1");

    return t;
}

/// The H-set: one label per (edge, endpoint) incidence, sorted by edge id then
/// vertex id.  Length is always 2 * |edges|.
inline std::vector<HookLabel> h_set(const BrauerTree& t) {
    std::vector<HookLabel> labels;
    for (const auto& [e, uv] : t.tree.ends) {
        labels.push_back({e, std::min(uv.first, uv.second)});
        labels.push_back({e, std::max(uv.first, uv.second)});
    }
    std::sort(labels.begin(), labels.end());
    return labels;
}

inline void check_label(const BrauerTree& t, const HookLabel& h) {
    if (!t.tree.ends.count(h.edge) || !t.tree.incident(h.edge, h.vertex))
        throw LabelNotInTree("(" + h.edge + ", " + h.vertex + ") is not an incidence");
}

/// The y of (x|y): successor of h.edge around h.vertex.
inline const Id& successor(const BrauerTree& t, const HookLabel& h) {
    check_label(t, h);
    return t.tree.successor_around(h.edge, h.vertex);
}

inline const Id& predecessor(const BrauerTree& t, const HookLabel& h) {
    check_label(t, h);
    return t.tree.predecessor_around(h.edge, h.vertex);
}

/// Printable name "(x|y)" of the symbol determined by h; also used as the id
/// of the leaf edge h contributes to the enlarged tree.
inline Id label_name(const BrauerTree& t, const HookLabel& h) {
    return "(" + h.edge + "|" + successor(t, h) + ")";
}

/// Specialness straight from the definition: no (x|y),(y|z) in W whose
/// associating vertices are the two different endpoints of y.  The walk-gap
/// formulation lives in orbits.hpp; both must agree.
inline bool is_special_subset(const BrauerTree& t, const SpecialSubset& w) {
    for (const HookLabel& a : w) {
        check_label(t, a);
        const Id& y = successor(t, a);
        const Id& far = t.tree.other_end(y, a.vertex);
        if (w.count(HookLabel{y, far})) return false;
    }
    return true;
}

/// The enlarged tree G^W: one new leaf edge per label of W, attached at the
/// associating vertex and inserted between x and its successor.
inline BrauerTree enlarge(const BrauerTree& t, const SpecialSubset& w) {
    for (const HookLabel& h : w) check_label(t, h);
    if (!is_special_subset(t, w))
        throw NotSpecial("W contains a hook label and its syzygy neighbour");

    BrauerTree out = t;
    for (const HookLabel& h : w) {
        Id leaf_edge = label_name(t, h);
        Id leaf_vertex = leaf_edge + "*";
        if (out.tree.ends.count(leaf_edge) || out.tree.order.count(leaf_vertex))
            throw BadParameter("id clash with generated leaf " + leaf_edge);
        out.tree.ends[leaf_edge] = {h.vertex, leaf_vertex};
        out.tree.order[leaf_vertex] = {leaf_edge};
        out.mult[leaf_vertex] = 1;
        auto& cyc = out.tree.order.at(h.vertex);
        auto it = std::find(cyc.begin(), cyc.end(), h.edge);
        cyc.insert(it + 1, leaf_edge);
    }
    return out;
}

// --- generators ---------------------------------------------------------

/// Brauer star: n edges "0".."n-1" around a centre of multiplicity m.
inline BrauerTree make_star(int n, int m) {
    if (n < 1 || m < 1) throw BadParameter("make_star needs n >= 1, m >= 1");
    RawTree raw;
    RawTree::Vertex centre{"c", m, {}};
    for (int i = 0; i < n; ++i) {
        Id e = std::to_string(i);
        centre.order.push_back(e);
        raw.vertices.push_back({"v" + e, 1, {e}});
        raw.edges.push_back({e, {"c", "v" + e}});
    }
    raw.vertices.push_back(centre);
    return validate_tree(raw);
}

/// Brauer line: path with n edges "0".."n-1", all multiplicities 1.
inline BrauerTree make_line(int n) {
    if (n < 1) throw BadParameter("make_line needs n >= 1");
    RawTree raw;
    for (int i = 0; i <= n; ++i) {
        RawTree::Vertex v{"u" + std::to_string(i), 1, {}};
        if (i > 0) v.order.push_back(std::to_string(i - 1));
        if (i < n) v.order.push_back(std::to_string(i));
        raw.vertices.push_back(v);
    }
    for (int i = 0; i < n; ++i)
        raw.edges.push_back({std::to_string(i),
                             {"u" + std::to_string(i), "u" + std::to_string(i + 1)}});
    return validate_tree(raw);
}

/// Line with k-1 edges plus the single hook label at the far leaf; the
/// resulting quotient algebra is the k-simple algebra of the
/// Schur-block/category-O family.
inline std::pair<BrauerTree, SpecialSubset> make_gamma_seed(int k) {
    if (k < 2) throw BadParameter("make_gamma_seed needs k >= 2");
    BrauerTree t = make_line(k - 1);
    SpecialSubset w{HookLabel{"0", "u0"}};
    return {t, w};
}

/// Deterministic pseudo-random planar tree with n edges and all mult 1:
/// a seeded Pruefer-sequence decode, then a seeded shuffle of every cyclic
/// order.
inline BrauerTree random_tree(int n, std::uint64_t seed) {
    if (n < 1) throw BadParameter("random_tree needs n >= 1");
    std::mt19937_64 rng(seed);
    int nv = n + 1;

    RawTree raw;
    for (int i = 0; i < nv; ++i) raw.vertices.push_back({"u" + std::to_string(i), 1, {}});

    std::vector<std::pair<int, int>> links;
    if (nv == 2) {
        links.emplace_back(0, 1);
    } else {
        std::vector<int> pruefer(nv - 2);
        std::vector<int> degree(nv, 1);
        for (int& p : pruefer) {
            p = static_cast<int>(rng() % nv);
            ++degree[p];
        }
        std::set<int> leaves;
        for (int i = 0; i < nv; ++i)
            if (degree[i] == 1) leaves.insert(i);
        for (int p : pruefer) {
            int leaf = *leaves.begin();
            leaves.erase(leaves.begin());
            links.emplace_back(leaf, p);
            if (--degree[p] == 1) leaves.insert(p);
        }
        auto it = leaves.begin();
        int a = *it++;
        links.emplace_back(a, *it);
    }

    for (int i = 0; i < n; ++i) {
        Id e = std::to_string(i);
        raw.edges.push_back({e, {"u" + std::to_string(links[i].first),
                                 "u" + std::to_string(links[i].second)}});
        raw.vertices[links[i].first].order.push_back(e);
        raw.vertices[links[i].second].order.push_back(e);
    }
    for (auto& v : raw.vertices)
        std::shuffle(v.order.begin(), v.order.end(), rng);
    return validate_tree(raw);
}

/// Copy of t with the multiplicity of `vertex` replaced by m; re-validates,
/// so marking a second vertex throws MultipleExceptional.
inline BrauerTree with_multiplicity(const BrauerTree& t, const Id& vertex, int m) {
    if (!t.tree.order.count(vertex)) throw LabelNotInTree("unknown vertex " + vertex);
    RawTree raw;
    for (const auto& [v, cyc] : t.tree.order)
        raw.vertices.push_back({v, v == vertex ? m : t.mult.at(v), cyc});
    for (const auto& [e, uv] : t.tree.ends) raw.edges.push_back({e, uv});
    return validate_tree(raw);
}

/// True iff the distance between u and v is even.  The tree is bipartite, so
/// this is independent of the traversal.
inline bool same_parity(const BrauerTree& t, const Id& u, const Id& v) {
    if (!t.tree.order.count(u) || !t.tree.order.count(v))
        throw LabelNotInTree("unknown vertex");
    std::map<Id, int> dist{{u, 0}};
    std::queue<Id> frontier;
    frontier.push(u);
    while (!frontier.empty()) {
        Id x = frontier.front();
        frontier.pop();
        if (x == v) break;
        for (const Id& e : t.tree.order.at(x)) {
            const Id& y = t.tree.other_end(e, x);
            if (!dist.count(y)) {
                dist[y] = dist[x] + 1;
                frontier.push(y);
            }
        }
    }
    return dist.at(v) % 2 == 0;
}

} // namespace brauer
