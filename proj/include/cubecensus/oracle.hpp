#pragma once

// Independent brute-force verification: exact affine dimension over the
// rationals (fraction-free integer elimination), exhaustive orbit censuses
// for small n, direct subset-orbit counting, and the sampled intersection
// bound check. Nothing here reuses the counting pipeline it is meant to
// check.

#include "cubecensus/group.hpp"
#include "cubecensus/numbers.hpp"

#include <cstdint>
#include <random>
#include <sstream>
#include <unordered_set>
#include <vector>

namespace cubecensus {

// Rank of an integer matrix over the rationals, by fraction-free Gaussian
// elimination (row combinations only, no division).
inline int integer_rank(std::vector<std::vector<long long>> m) {
    if (m.empty()) return 0;
    const std::size_t cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t piv = row;
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[row], m[piv]);
        for (std::size_t r = row + 1; r < m.size(); ++r) {
            if (m[r][col] == 0) continue;
            const long long a = m[row][col], b = m[r][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] = m[r][c] * a - m[row][c] * b;
        }
        ++row;
    }
    return static_cast<int>(row);
}

// Dimension of the affine hull of a nonempty vertex set; value in [0, n].
inline int affine_dimension(const VertexSet& s) {
    if (s.bits == 0) throw std::invalid_argument("affine_dimension: empty set");
    const int n = s.dimension;
    std::uint64_t bits = s.bits;
    const int base = std::countr_zero(bits);
    bits &= bits - 1;
    std::vector<std::vector<long long>> rows;
    while (bits) {
        int v = std::countr_zero(bits);
        bits &= bits - 1;
        std::vector<long long> row(n);
        for (int i = 0; i < n; ++i) row[i] = ((v >> i) & 1) - ((base >> i) & 1);
        rows.push_back(std::move(row));
    }
    return integer_rank(std::move(rows));
}

struct ClassificationRecord {
    VertexSet canonical;
    int size = 0;
    int dimension = -1;  // -1 for the empty set
    bool full_dimensional = false;
};

struct BruteCensusRow {
    int k = 0;
    Integer classes{0};
    Integer full_dimensional{0};
};

// Exhaustive classification of all 2^{2^n} vertex subsets up to the cube
// symmetries; n <= 4 (65,536 subsets at n = 4).
inline std::vector<BruteCensusRow> brute_census(int n) {
    if (n < 1 || n > 4) throw std::invalid_argument("brute_census: n must be in [1, 4]");
    auto g = enumerate_group(n);
    auto action = GroupAction::build(g, n);
    const std::uint64_t total = 1ull << (1u << n);
    std::vector<BruteCensusRow> rows(
        static_cast<std::size_t>((1u << n) + 1));
    for (std::size_t k = 0; k < rows.size(); ++k) rows[k].k = static_cast<int>(k);
    rows[0].classes = 1;  // the empty set
    for (std::uint64_t mask = 1; mask < total; ++mask) {
        // a subset is counted iff it is the canonical representative of its
        // orbit; bail out as soon as some image is smaller
        bool canonical = true;
        for (const auto& m : action.maps) {
            if (apply_mask(m, mask) < mask) {
                canonical = false;
                break;
            }
        }
        if (!canonical) continue;
        const int k = std::popcount(mask);
        rows[k].classes += 1;
        if (affine_dimension({n, mask}) == n) rows[k].full_dimensional += 1;
    }
    return rows;
}

// Number of orbits of k-subsets of S under the given element list, by
// canonical-form dedupe over explicit combinations.
inline Integer brute_subset_orbits(const VertexSet& s, std::span<const SignedPermutation> elements, int k,
                                   std::uint64_t budget = 20'000'000ull) {
    const int m = s.count();
    if (m > 24) throw std::invalid_argument("brute_subset_orbits: set too large");
    if (k < 0 || k > m) return 0;
    Integer combos = binomial(m, k);
    if (combos > budget) throw std::invalid_argument("brute_subset_orbits: combination budget exceeded");
    auto action = GroupAction::build(elements, s.dimension);
    for (const auto& map : action.maps)
        if (apply_mask(map, s.bits) != s.bits)
            throw std::invalid_argument("brute_subset_orbits: element does not stabilize the set");
    std::vector<int> members;
    for (int v = 0; v < (1 << s.dimension); ++v)
        if (s.contains(v)) members.push_back(v);

    std::unordered_set<std::uint64_t> reps;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        std::uint64_t mask = 0;
        for (int i : idx) mask |= 1ull << members[i];
        reps.insert(canonical_bits(mask, action));
        int i = k - 1;
        while (i >= 0 && idx[i] == m - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return Integer(reps.size());
}

// Sampled check that s hyperplanes with linearly independent integer normals
// never trap more than 2^{n-s} cube vertices, plus the sharpness witness
// x_1 = ... = x_s = 0.
struct BoundReport {
    int n = 0, s = 0, samples = 0;
    std::uint64_t seed = 0;
    int max_seen = 0;
    int violations = 0;
    bool sharpness_ok = false;
};

inline BoundReport verify_intersection_bound(int n, int s, int samples, std::uint64_t seed) {
    if (n < 1 || n > kMaxSetDimension || s < 1 || s > n)
        throw std::invalid_argument("verify_intersection_bound: bad (n, s)");
    BoundReport rep{n, s, samples, seed, 0, 0, false};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coef(-3, 3);
    const int bound = 1 << (n - s);
    for (int it = 0; it < samples; ++it) {
        std::vector<std::vector<long long>> a(s, std::vector<long long>(n));
        do {
            for (auto& row : a)
                for (auto& x : row) x = coef(rng);
        } while (integer_rank(a) != s);
        std::vector<long long> b(s);
        for (int i = 0; i < s; ++i) {
            long long lo = -2, hi = 2;
            for (long long x : a[i]) hi += std::max(0ll, x), lo += std::min(0ll, x);
            b[i] = std::uniform_int_distribution<long long>(lo, hi)(rng);
        }
        int hits = 0;
        for (Vertex v = 0; v < (1u << n); ++v) {
            bool ok = true;
            for (int i = 0; i < s && ok; ++i) {
                long long dot = 0;
                for (int j = 0; j < n; ++j)
                    if (v >> j & 1u) dot += a[i][j];
                ok = dot == b[i];
            }
            hits += ok;
        }
        rep.max_seen = std::max(rep.max_seen, hits);
        if (hits > bound) ++rep.violations;
    }
    // coordinate flats attain the bound exactly
    int hits = 0;
    for (Vertex v = 0; v < (1u << n); ++v)
        if ((v & ((1u << s) - 1)) == 0) ++hits;
    rep.sharpness_ok = hits == bound;
    return rep;
}

}  // namespace cubecensus
