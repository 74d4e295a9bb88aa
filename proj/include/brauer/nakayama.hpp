#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "brauer/errors.hpp"

namespace brauer {

/// Cyclic list of Loewy lengths of the indecomposable projectives of a
/// connected Nakayama algebra with no simple projective.
struct KupischSeries {
    std::vector<int> c;

    int n() const { return static_cast<int>(c.size()); }
    int at(int i) const {
        int nn = n();
        return c[((i % nn) + nn) % nn];
    }

    bool self_injective() const {
        return std::adjacent_find(c.begin(), c.end(), std::not_equal_to<>()) == c.end();
    }

    bool operator==(const KupischSeries&) const = default;
};

inline KupischSeries validate_kupisch(std::vector<int> c) {
    if (c.empty()) throw BadParameter("Kupisch series must be nonempty");
    int n = static_cast<int>(c.size());
    for (int i = 0; i < n; ++i) {
        if (c[i] < 2) throw BadParameter("Kupisch entries must be >= 2");
        if (c[i] - c[(i + 1) % n] > 1)
            throw BadParameter("Kupisch condition c_i - c_{i+1} <= 1 violated");
    }
    return KupischSeries{std::move(c)};
}

/// Symmetric Nakayama algebra with n simples and Loewy length w = n*m + 1.
struct StarContext {
    int n;
    int m;
    int w; // Loewy length

    StarContext(int n_, int m_) : n(n_), m(m_), w(n_ * m_ + 1) {
        if (n < 1 || m < 1) throw BadParameter("StarContext needs n >= 1, m >= 1");
    }

    KupischSeries kupisch() const { return KupischSeries{std::vector<int>(n, w)}; }
};

/// Non-projective indecomposable L(i, ell): socle S_i, Loewy length ell.
struct StableCoord {
    int i;   // socle index mod n
    int ell; // 1 <= ell <= n*m

    auto operator<=>(const StableCoord&) const = default;
};

inline StableCoord normalize(const StarContext& ctx, StableCoord c) {
    c.i = ((c.i % ctx.n) + ctx.n) % ctx.n;
    if (c.ell < 1 || c.ell > ctx.n * ctx.m)
        throw BadParameter("coordinate length out of stable range");
    return c;
}

/// Omega^k on stable coordinates:
///   Omega(L(i,j))    = L(i+1-j, nm+1-j)
///   Omega^{-1}(L(i,j)) = L(i-j,   nm+1-j)
/// Omega^2 = tau sends L(i,j) to L(i+1,j), and Omega^{2n} = id.
inline StableCoord omega(const StarContext& ctx, StableCoord c, int k) {
    c = normalize(ctx, c);
    int period = 2 * ctx.n;
    k = ((k % period) + period) % period;
    int nm = ctx.n * ctx.m;
    // pairs of steps are tau, so collapse them first
    c.i = (c.i + k / 2) % ctx.n;
    if (k % 2) c = normalize(ctx, {c.i + 1 - c.ell, nm + 1 - c.ell});
    return c;
}

/// True iff dst lies in the forward hammock of src, i.e. the stable Hom space
/// from L(src) to L(dst) is nonzero.  Membership: some integer x with
/// x = dst.i (mod n), src.i+1-src.ell <= x <= src.i, and
/// x + src.ell - src.i <= dst.ell <= x + nm - src.i.
inline bool hammock_hom(const StarContext& ctx, StableCoord src, StableCoord dst) {
    src = normalize(ctx, src);
    dst = normalize(ctx, dst);
    int nm = ctx.n * ctx.m;
    for (int x = src.i + 1 - src.ell; x <= src.i; ++x) {
        if (((x % ctx.n) + ctx.n) % ctx.n != dst.i) continue;
        if (x + src.ell - src.i <= dst.ell && dst.ell <= x + nm - src.i) return true;
    }
    return false;
}

/// Ext^2(L, L) = 0, equivalently ell = 1 or ell = n*m.
inline bool ext2_selfvanishing(const StarContext& ctx, StableCoord c) {
    c = normalize(ctx, c);
    return c.ell == 1 || c.ell == ctx.n * ctx.m;
}

/// Kupisch series of the gendo-symmetric algebra built from the Brauer star
/// with n edges, multiplicity m, and W marked at the given edge positions:
/// n entries (n+r)m+1 with an entry (n+r)m inserted after each marked one.
/// Printed rotation starts at the projective of edge 0.
inline KupischSeries gendo_kupisch(int n, int m, const std::set<int>& positions) {
    if (n < 1 || m < 1) throw BadParameter("gendo_kupisch needs n >= 1, m >= 1");
    for (int p : positions)
        if (p < 0 || p >= n) throw BadParameter("marked position out of range");
    int r = static_cast<int>(positions.size());
    int big = (n + r) * m + 1;
    std::vector<int> c;
    for (int i = 0; i < n; ++i) {
        c.push_back(big);
        if (positions.count(i)) c.push_back(big - 1);
    }
    return validate_kupisch(std::move(c));
}

} // namespace brauer
