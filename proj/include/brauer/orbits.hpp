#pragma once

#include <optional>
#include <string>
#include <vector>

#include "brauer/report.hpp"
#include "brauer/tree.hpp"
#include "brauer/walk.hpp"

namespace brauer {

/// Hook sitting at walk position p: the hook module generated by the arrow
/// (x_{p+1} | x_p), whose label is the directed step p+1 of the walk.
inline HookLabel hook_at(const GreenWalk& w, std::size_t p) {
    std::size_t q = (p + 1) % w.size();
    return {w.edges[q], w.from[q]};
}

/// Inverse of hook_at on the canonical walk of t.
inline std::size_t walk_position(const GreenWalk& w, const HookLabel& h) {
    for (std::size_t q = 0; q < w.size(); ++q)
        if (w.edges[q] == h.edge && w.from[q] == h.vertex)
            return (q + w.size() - 1) % w.size();
    throw LabelNotInTree("(" + h.edge + ", " + h.vertex + ") is not an incidence");
}

/// Omega^k on hooks: the syzygy lowers the walk position by one, so Omega^k
/// shifts the position by -k; Omega^{2n} is the identity.
inline HookLabel omega_hook(const BrauerTree& t, const HookLabel& h, long k) {
    check_label(t, h);
    GreenWalk w = green_walk(t);
    long len = static_cast<long>(w.size());
    long p = static_cast<long>(walk_position(w, h));
    long q = (((p - k) % len) + len) % len;
    return hook_at(w, static_cast<std::size_t>(q));
}

/// Stable Hom between two hooks vanishes in both directions exactly when
/// neither is the syzygy of the other.
inline bool stably_orthogonal(const BrauerTree& t, const HookLabel& h1, const HookLabel& h2) {
    return omega_hook(t, h1, 1) != h2 && omega_hook(t, h2, 1) != h1;
}

inline std::vector<std::size_t> walk_positions(const BrauerTree& t, const SpecialSubset& w) {
    GreenWalk gw = green_walk(t);
    std::vector<std::size_t> ps;
    for (const HookLabel& h : w) {
        check_label(t, h);
        ps.push_back(walk_position(gw, h));
    }
    std::sort(ps.begin(), ps.end());
    return ps;
}

/// Walk-gap formulation of specialness: all cyclic gaps between the marked
/// positions are at least 2.  Must agree with the direct definition in
/// is_special_subset and with pairwise stable orthogonality.
inline bool is_special(const BrauerTree& t, const SpecialSubset& w) {
    auto ps = walk_positions(t, w);
    if (ps.size() < 2) return true;
    long len = 2 * static_cast<long>(t.tree.edge_count());
    for (std::size_t j = 0; j < ps.size(); ++j) {
        long gap = cyclic_gap(static_cast<long>(ps[(j + 1) % ps.size()]) -
                                  static_cast<long>(ps[j]),
                              len);
        if (gap < 2) return false;
    }
    return true;
}

/// All walk positions of W share the same parity; equivalently all
/// associating vertices lie in the same part of the bipartition.
inline bool is_pure_parity(const BrauerTree& t, const SpecialSubset& w) {
    auto ps = walk_positions(t, w);
    for (std::size_t j = 1; j < ps.size(); ++j)
        if ((ps[j] - ps[0]) % 2 != 0) return false;
    return true;
}

/// Largest m such that the generator stays m-rigid: domdim - 2; infinite in
/// the symmetric case W = empty.
inline Dim rigidity_level(const BrauerTree& t, const SpecialSubset& w) {
    DimensionReport rep = dimensions(t, w);
    if (!rep.domdim.finite) return Dim::infinity();
    return Dim::of(rep.domdim.value - 2);
}

/// m with domdim = Gorenstein = m + 2 when the two coincide (all walk gaps
/// equal); nothing otherwise.
inline std::optional<long> ortho_symmetric_level(const BrauerTree& t, const SpecialSubset& w) {
    DimensionReport rep = dimensions(t, w);
    if (!rep.domdim.finite || !rep.gorenstein.finite) return std::nullopt;
    if (rep.domdim != rep.gorenstein) return std::nullopt;
    return rep.domdim.value - 2;
}

/// Equally spaced W on a Brauer star: { Omega^{i*d}(start) : 0 <= i < 2n/d }.
/// All gaps equal d, so the result is special and (d-2)-ortho-symmetric.
inline std::pair<BrauerTree, SpecialSubset> construct_ortho(int n, int mult, int d,
                                                            const HookLabel& start) {
    if (n < 1 || mult < 1) throw BadParameter("construct_ortho needs n >= 1, mult >= 1");
    if (d < 2 || (2 * n) % d != 0) throw BadDivisor("d must be >= 2 and divide 2n");
    BrauerTree star = make_star(n, mult);
    check_label(star, start);
    SpecialSubset w;
    for (int i = 0; i < 2 * n / d; ++i)
        w.insert(omega_hook(star, start, static_cast<long>(i) * d));
    return {star, w};
}

// --- derived-equivalence invariant --------------------------------------

/// Lexicographically least rotation; 'b' < 'w' in the alphabet used here.
inline std::string canonical_rotation(const std::string& word) {
    std::string best = word;
    for (std::size_t k = 1; k < word.size(); ++k) {
        std::string rot = word.substr(k) + word.substr(0, k);
        if (rot < best) best = rot;
    }
    return best;
}

/// Complete invariant of almost nu-stable derived equivalence for these
/// algebras: edge count, exceptional multiplicity, and the canonical cyclic
/// b/w word marking the W positions on the walk.
struct DerivedInvariant {
    int n = 0;
    int m = 1;
    std::string word;

    bool operator==(const DerivedInvariant&) const = default;
};

inline DerivedInvariant derived_invariant(const BrauerTree& t, const SpecialSubset& w) {
    if (!is_special_subset(t, w))
        throw NotSpecial("W contains a hook label and its syzygy neighbour");
    std::size_t len = 2 * t.tree.edge_count();
    std::string word(len, 'w');
    for (std::size_t p : walk_positions(t, w)) word[p] = 'b';
    return {static_cast<int>(t.tree.edge_count()), t.exceptional_multiplicity(),
            canonical_rotation(word)};
}

struct StarData {
    BrauerTree star;
    SpecialSubset w;
    std::vector<int> positions; // b positions of the canonical word
};

/// Canonical representative on the Brauer star: realizes each b position x of
/// the word as the hook at walk position x.  Round trip:
/// derived_invariant(star_representative(inv)) == inv.
inline StarData star_representative(const DerivedInvariant& inv) {
    if (inv.n < 1 || inv.m < 1) throw BadParameter("invariant needs n >= 1, m >= 1");
    if (inv.word.size() != 2 * static_cast<std::size_t>(inv.n))
        throw BadParameter("invariant word must have length 2n");
    for (char c : inv.word)
        if (c != 'b' && c != 'w') throw BadParameter("invariant word alphabet is {b, w}");
    if (inv.word != canonical_rotation(inv.word))
        throw BadParameter("invariant word is not in canonical rotation");

    StarData out;
    out.star = make_star(inv.n, inv.m);
    GreenWalk gw = green_walk(out.star);
    for (std::size_t p = 0; p < inv.word.size(); ++p)
        if (inv.word[p] == 'b') {
            out.positions.push_back(static_cast<int>(p));
            out.w.insert(hook_at(gw, p));
        }
    if (!is_special_subset(out.star, out.w))
        throw NotSpecial("invariant word has two cyclically adjacent b's");
    return out;
}

} // namespace brauer
