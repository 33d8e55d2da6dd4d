#pragma once

// Signed permutations (the hyperoctahedral group B_n), their action on the
// vertices of the n-cube, and vertex-set orbits.
//
// Conventions used throughout:
//   - vertices of Q_n are integers 0..2^n-1; coordinate i (1-based in the
//     math) is bit i-1, so XOR with (1 << (i-1)) flips coordinate i.
//   - a SignedPermutation w maps vertex x to y with
//       y_i = x_{pi(i)}        if i is positive in w,
//       y_i = 1 - x_{pi(i)}    if i is negated in w,
//     where pi is the underlying permutation.
//   - VertexSet is a bitset over vertices, stored in one 64-bit word, which
//     caps the vertex-set machinery at n <= 6. Group elements themselves
//     carry no such cap.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cubecensus {

using Vertex = std::uint32_t;

constexpr int kMaxSetDimension = 6;  // VertexSet lives in one 64-bit word

struct SignedPermutation {
    std::vector<std::uint8_t> image;  // image[i] = pi(i+1) - 1, zero-based
    std::uint32_t negated = 0;        // bit i-1 set <=> i in s(w)

    int dimension() const { return static_cast<int>(image.size()); }

    bool operator==(const SignedPermutation& o) const = default;
};

inline SignedPermutation identity_element(int n) {
    SignedPermutation w;
    w.image.resize(n);
    std::iota(w.image.begin(), w.image.end(), 0);
    return w;
}

// Build a signed permutation from 1-based cycles, e.g. {{1,3,2}} for (1,3,2).
// Coordinates listed in `negated` (1-based) get the minus sign.
inline SignedPermutation from_cycles(int n, const std::vector<std::vector<int>>& cycles,
                                     const std::vector<int>& negated = {}) {
    SignedPermutation w = identity_element(n);
    for (const auto& cyc : cycles) {
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
            if (a < 1 || a > n || b < 1 || b > n) throw std::invalid_argument("from_cycles: index out of range");
            w.image[a - 1] = static_cast<std::uint8_t>(b - 1);
        }
    }
    for (int i : negated) {
        if (i < 1 || i > n) throw std::invalid_argument("from_cycles: negated index out of range");
        w.negated |= 1u << (i - 1);
    }
    return w;
}

inline void check_same_dimension(const SignedPermutation& a, const SignedPermutation& b) {
    if (a.dimension() != b.dimension())
        throw std::invalid_argument("signed permutations have different dimensions");
}

inline Vertex apply(const SignedPermutation& w, Vertex v) {
    Vertex y = 0;
    const int n = w.dimension();
    for (int i = 0; i < n; ++i) {
        Vertex bit = (v >> w.image[i]) & 1u;
        y |= (bit ^ ((w.negated >> i) & 1u)) << i;
    }
    return y;
}

// apply(compose(w1, w2), v) == apply(w1, apply(w2, v)) for all v.
inline SignedPermutation compose(const SignedPermutation& w1, const SignedPermutation& w2) {
    check_same_dimension(w1, w2);
    const int n = w1.dimension();
    SignedPermutation r;
    r.image.resize(n);
    for (int i = 0; i < n; ++i) {
        r.image[i] = w2.image[w1.image[i]];
        std::uint32_t neg = ((w1.negated >> i) & 1u) ^ ((w2.negated >> w1.image[i]) & 1u);
        r.negated |= neg << i;
    }
    return r;
}

inline SignedPermutation inverse(const SignedPermutation& w) {
    const int n = w.dimension();
    SignedPermutation r;
    r.image.resize(n);
    for (int i = 0; i < n; ++i) {
        r.image[w.image[i]] = static_cast<std::uint8_t>(i);
        r.negated |= ((w.negated >> i) & 1u) << w.image[i];
    }
    return r;
}

// All 2^n n! elements, permutations in lexicographic order with all sign
// masks per permutation; the identity comes first.
inline std::vector<SignedPermutation> enumerate_group(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_group: n must be nonnegative");
    std::vector<std::uint8_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<SignedPermutation> out;
    std::uint64_t order = 1;
    for (int i = 1; i <= n; ++i) order *= 2ull * i;
    out.reserve(order);
    do {
        for (std::uint32_t m = 0; m < (1u << n); ++m) {
            SignedPermutation w;
            w.image = perm;
            w.negated = m;
            out.push_back(std::move(w));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// Multiset {1^{c_1}, 2^{c_2}, ...} as an ordered length -> multiplicity map.
struct CycleType {
    std::map<int, int> counts;

    int total_mass() const {
        int s = 0;
        for (auto [len, mult] : counts) s += len * mult;
        return s;
    }
    bool operator==(const CycleType& o) const = default;
};

// Cycle type of the underlying permutation, signs ignored.
inline CycleType underlying_cycle_type(const SignedPermutation& w) {
    CycleType ct;
    const int n = w.dimension();
    std::uint32_t seen = 0;
    for (int i = 0; i < n; ++i) {
        if (seen >> i & 1u) continue;
        int len = 0, j = i;
        while (!(seen >> j & 1u)) {
            seen |= 1u << j;
            j = w.image[j];
            ++len;
        }
        ++ct.counts[len];
    }
    return ct;
}

// ---------------------------------------------------------------------------
// Vertex sets

struct VertexSet {
    int dimension = 0;
    std::uint64_t bits = 0;

    static VertexSet empty(int n) {
        require_dimension(n);
        return {n, 0};
    }
    static VertexSet full(int n) {
        require_dimension(n);
        return {n, n == kMaxSetDimension ? ~0ull : (1ull << (1u << n)) - 1};
    }
    static void require_dimension(int n) {
        if (n < 0 || n > kMaxSetDimension)
            throw std::invalid_argument("VertexSet: dimension must be in [0, " +
                                        std::to_string(kMaxSetDimension) + "]");
    }

    int count() const { return std::popcount(bits); }
    bool contains(Vertex v) const { return bits >> v & 1ull; }
    void insert(Vertex v) { bits |= 1ull << v; }
    bool operator==(const VertexSet& o) const = default;
};

inline void check_same_dimension(const SignedPermutation& w, const VertexSet& s) {
    if (w.dimension() != s.dimension)
        throw std::invalid_argument("dimension mismatch between element and vertex set");
}

// Precomputed vertex maps for a list of group elements; this is what every
// hot loop (orbit dedupe, Burnside sums, brute censuses) runs on.
struct GroupAction {
    int n = 0;
    std::vector<std::array<std::uint8_t, 64>> maps;

    static GroupAction build(std::span<const SignedPermutation> elements, int n) {
        VertexSet::require_dimension(n);
        GroupAction a;
        a.n = n;
        a.maps.resize(elements.size());
        const Vertex nv = 1u << n;
        for (std::size_t e = 0; e < elements.size(); ++e) {
            if (elements[e].dimension() != n)
                throw std::invalid_argument("GroupAction: element dimension mismatch");
            for (Vertex v = 0; v < nv; ++v) a.maps[e][v] = static_cast<std::uint8_t>(apply(elements[e], v));
        }
        return a;
    }
};

inline std::uint64_t apply_mask(const std::array<std::uint8_t, 64>& map, std::uint64_t bits) {
    std::uint64_t out = 0;
    while (bits) {
        int v = std::countr_zero(bits);
        bits &= bits - 1;
        out |= 1ull << map[v];
    }
    return out;
}

inline VertexSet act_on_set(const SignedPermutation& w, const VertexSet& s) {
    check_same_dimension(w, s);
    VertexSet out{s.dimension, 0};
    std::uint64_t bits = s.bits;
    while (bits) {
        int v = std::countr_zero(bits);
        bits &= bits - 1;
        out.insert(apply(w, static_cast<Vertex>(v)));
    }
    return out;
}

// Cycle type of the permutation induced on the members of S; requires that w
// stabilizes S setwise.
inline CycleType induced_cycle_type(const SignedPermutation& w, const VertexSet& s) {
    check_same_dimension(w, s);
    if (act_on_set(w, s) != s) throw std::invalid_argument("induced_cycle_type: element does not stabilize the set");
    CycleType ct;
    std::uint64_t seen = 0;
    std::uint64_t bits = s.bits;
    while (bits) {
        int v = std::countr_zero(bits);
        bits &= bits - 1;
        if (seen >> v & 1ull) continue;
        int len = 0;
        Vertex u = static_cast<Vertex>(v);
        while (!(seen >> u & 1ull)) {
            seen |= 1ull << u;
            u = apply(w, u);
            ++len;
        }
        ++ct.counts[len];
    }
    return ct;
}

// Canonical orbit representative: the numerically smallest image mask, with
// vertex v stored as bit v. Two sets are G-equivalent iff their canonical
// forms agree.
inline std::uint64_t canonical_bits(std::uint64_t bits, const GroupAction& action) {
    std::uint64_t best = ~0ull;
    for (const auto& m : action.maps) best = std::min(best, apply_mask(m, bits));
    return best;
}

inline VertexSet canonical_set(const VertexSet& s, const GroupAction& action) {
    if (action.n != s.dimension) throw std::invalid_argument("canonical_set: dimension mismatch");
    return {s.dimension, canonical_bits(s.bits, action)};
}

inline VertexSet canonical_set(const VertexSet& s, std::span<const SignedPermutation> elements) {
    return canonical_set(s, GroupAction::build(elements, s.dimension));
}

}  // namespace cubecensus
