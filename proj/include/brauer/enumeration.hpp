#pragma once

#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "brauer/nakayama.hpp"
#include "brauer/oracle.hpp"
#include "brauer/orbits.hpp"

namespace brauer {

using BigInt = boost::multiprecision::cpp_int;

/// Cyclic words counted: Binary is the free code {w, b}; Special is the
/// circular code {w, bw}, whose cyclic words are exactly those with no two
/// cyclically adjacent b's.
enum class CodeSpec { Binary, Special };

inline long totient(long n) {
    if (n < 1) throw BadParameter("totient needs n >= 1");
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

/// Lucas numbers with the paper's offset: L_1 = 1, L_2 = 3,
/// L_{d+2} = L_{d+1} + L_d.
inline BigInt lucas(int d) {
    if (d < 1) throw BadParameter("lucas needs d >= 1");
    BigInt a = 1, b = 3; // L_1, L_2
    if (d == 1) return a;
    for (int i = 2; i < d; ++i) {
        BigInt c = a + b;
        a = b;
        b = c;
    }
    return b;
}

/// Number of length-d linear words of the code: 2^d for Binary, L_d for
/// Special.
inline BigInt code_words(CodeSpec code, int d) {
    if (code == CodeSpec::Binary) return BigInt(1) << d;
    return lucas(d);
}

/// Necklace count c_N = (1/N) * sum_{d | N} totient(N/d) * s_d.
inline BigInt count_classes(CodeSpec code, int length) {
    if (length < 1) throw BadParameter("count_classes needs length >= 1");
    BigInt sum = 0;
    for (int d = 1; d <= length; ++d) {
        if (length % d) continue;
        sum += BigInt(totient(length / d)) * code_words(code, d);
    }
    return sum / length;
}

inline constexpr int kEnumerationBound = 24;

inline bool word_in_code(CodeSpec code, const std::string& word) {
    if (code == CodeSpec::Binary) return true;
    std::size_t n = word.size();
    for (std::size_t i = 0; i < n; ++i)
        if (word[i] == 'b' && word[(i + 1) % n] == 'b') return false;
    return true;
}

/// All canonical necklaces of the given length with a conjugate in the code,
/// by exhaustive scan over 2^length words.
inline std::vector<std::string> enumerate_necklaces(CodeSpec code, int length) {
    if (length < 1) throw BadParameter("enumerate_necklaces needs length >= 1");
    if (length > kEnumerationBound)
        throw BoundExceeded("enumeration bound is " + std::to_string(kEnumerationBound));
    std::set<std::string> canon;
    for (std::uint64_t bits = 0; bits < (1ull << length); ++bits) {
        std::string word(static_cast<std::size_t>(length), 'w');
        for (int i = 0; i < length; ++i)
            if (bits >> i & 1) word[static_cast<std::size_t>(i)] = 'b';
        if (!word_in_code(code, word)) continue;
        canon.insert(canonical_rotation(word));
    }
    return {canon.begin(), canon.end()};
}

/// Coefficients s_1..s_upto of s_X(z) = z * u'(z) / (1 - u(z)) for the code's
/// generating polynomial u (Binary: 2z; Special: z + z^2), via the recurrence
/// s_n = [z^n](z u') + sum_k u_k s_{n-k}.
inline std::vector<BigInt> code_series_coefficients(CodeSpec code, int upto) {
    std::vector<BigInt> u(static_cast<std::size_t>(upto) + 1, 0);
    if (code == CodeSpec::Binary) {
        if (upto >= 1) u[1] = 2;
    } else {
        if (upto >= 1) u[1] = 1;
        if (upto >= 2) u[2] = 1;
    }
    std::vector<BigInt> s(static_cast<std::size_t>(upto) + 1, 0);
    for (int n = 1; n <= upto; ++n) {
        s[n] = BigInt(n) * u[n]; // [z^n] of z*u'(z)
        for (int k = 1; k < n; ++k) s[n] += u[k] * s[n - k];
    }
    return s;
}

// --- catalogues ---------------------------------------------------------

struct CatalogueEntry {
    std::string word;
    std::vector<int> positions;   // b positions of the canonical word
    KupischSeries kupisch;        // kind naka: the representative series
    DimensionReport dims;
};

struct ClassCatalogue {
    int n = 0;
    int m = 1;
    std::string kind; // "naka" or "tree"
    std::vector<CatalogueEntry> entries;
};

/// Canonical class representatives with their dimensions.  kind "naka": one
/// entry per Binary necklace of length n, representative = gendo_kupisch with
/// the b positions marked, dimensions from the resolution oracle.  kind
/// "tree": one entry per Special necklace of length 2n, representative = the
/// Brauer-star realization, dimensions from the walk.
inline ClassCatalogue catalogue(int n, int m, const std::string& kind) {
    if (n < 1 || m < 1) throw BadParameter("catalogue needs n >= 1, m >= 1");
    ClassCatalogue cat;
    cat.n = n;
    cat.m = m;
    cat.kind = kind;
    if (kind == "naka") {
        for (const std::string& word : enumerate_necklaces(CodeSpec::Binary, n)) {
            CatalogueEntry e;
            e.word = word;
            std::set<int> positions;
            for (int i = 0; i < n; ++i)
                if (word[static_cast<std::size_t>(i)] == 'b') {
                    positions.insert(i);
                    e.positions.push_back(i);
                }
            e.kupisch = gendo_kupisch(n, m, positions);
            e.dims = oracle_dims(e.kupisch);
            cat.entries.push_back(std::move(e));
        }
    } else if (kind == "tree") {
        for (const std::string& word : enumerate_necklaces(CodeSpec::Special, 2 * n)) {
            CatalogueEntry e;
            e.word = word;
            StarData rep = star_representative({n, m, word});
            e.positions = rep.positions;
            e.dims = dimensions(rep.star, rep.w);
            cat.entries.push_back(std::move(e));
        }
    } else {
        throw BadParameter("catalogue kind must be naka or tree");
    }
    return cat;
}

} // namespace brauer
