#pragma once

// Cycle index Z_H of the stabilizer F(H) acting on the cube vertices of a
// hyperplane H, by two independent routes:
//
//   cycle_index_symbolic  - sums over tuples of block partitions: fixed-point
//                           counts (0/1-labelings of cycles), Moebius
//                           inversion into cycle counts on V_t(H), and the
//                           lcm product rule to lift through the free
//                           coordinates.
//   cycle_index_burnside  - direct averaging over the explicit stabilizer
//                           element list.
//
// The two must agree term for term; the test suites and the verification
// command check exactly that.

#include "cubecensus/cycle_index.hpp"
#include "cubecensus/group.hpp"
#include "cubecensus/hyperplanes.hpp"
#include "cubecensus/numbers.hpp"

#include <map>
#include <vector>

namespace cubecensus {

// A stabilizer conjugacy datum: per coefficient value i (1-based block
// index), the cycle type of the block permutation on the alpha_i coordinates
// with that coefficient; `negative` marks the all-minus branch, which exists
// only when delta(H) = 1.
struct BlockPartitionElement {
    std::vector<std::map<int, int>> blocks;  // blocks[i-1]: part -> multiplicity, a partition of alpha_i
    bool negative = false;
};

// Number of vertices of V_t(H) fixed by a symmetry with this block datum.
// Positive branch: each cycle is labeled 0 or 1 and a cycle of length j in
// block i contributes i*j to the hyperplane sum, so the count is
// [x^b] prod (1 + x^{ij})^{m_ij}. All-minus branch: only even cycles admit
// fixed vertices (alternating 0/1 along the cycle), two labelings per cycle,
// and the hyperplane equation holds automatically since sum a_i = 2b.
inline long long psi(const SpannedHyperplane& h, const BlockPartitionElement& elem) {
    if (elem.negative) {
        if (delta(h) == 0)
            throw std::invalid_argument("psi: all-minus branch requires delta(H) = 1");
        long long cycles = 0;
        for (const auto& block : elem.blocks)
            for (auto [part, mult] : block) {
                if (part % 2) return 0;
                cycles += mult;
            }
        return 1ll << cycles;
    }
    const int b = h.rhs;
    std::vector<long long> poly{1};
    for (std::size_t i = 0; i < elem.blocks.size(); ++i) {
        for (auto [part, mult] : elem.blocks[i]) {
            const int w = static_cast<int>(i + 1) * part;
            for (int r = 0; r < mult; ++r) {
                std::vector<long long> next(poly.size() + w, 0);
                for (std::size_t d = 0; d < poly.size(); ++d) {
                    next[d] += poly[d];
                    next[d + w] += poly[d];
                }
                poly = std::move(next);
            }
        }
    }
    return b < static_cast<int>(poly.size()) ? poly[b] : 0;
}

// Block datum of the j-th power: an s-cycle splits into gcd(s,j) cycles of
// length s/gcd(s,j); the all-minus flag survives exactly for odd j.
inline BlockPartitionElement power_block_element(const BlockPartitionElement& elem, int j) {
    BlockPartitionElement out;
    out.negative = elem.negative && (j % 2 == 1);
    out.blocks.resize(elem.blocks.size());
    for (std::size_t i = 0; i < elem.blocks.size(); ++i)
        for (auto [part, mult] : elem.blocks[i]) {
            int g = std::gcd(part, j);
            out.blocks[i][part / g] += mult * g;
        }
    return out;
}

// Cycle type induced on V_t(H), via Moebius inversion of the fixed-point
// counts of the powers.
inline CycleType induced_counts(const SpannedHyperplane& h, const BlockPartitionElement& elem) {
    long long order = 1;
    for (const auto& block : elem.blocks)
        for (auto [part, mult] : block) order = lcm_ll(order, part);
    if (elem.negative) order *= 2;
    std::map<int, long long> psis;
    for (int j = 1; j <= order; ++j) psis[j] = psi(h, power_block_element(elem, j));
    CycleType ct = mobius_cycle_counts(psis, static_cast<int>(order));
    if (ct.total_mass() != support_vertices(h).count())
        throw std::logic_error("induced_counts: cycle mass does not cover V_t(H)");
    return ct;
}

// f_pi(z_j) = prod_i (z_lcm(i,j))^{i j m_i / lcm(i,j)} from the induced cycle
// counts {1^{m_1}, 2^{m_2}, ...}.
inline Monomial f_monomial(const CycleType& counts, int j) {
    std::map<int, int> acc;
    for (auto [i, m] : counts.counts) {
        long long l = lcm_ll(i, j);
        acc[static_cast<int>(l)] += static_cast<int>(static_cast<long long>(i) * j * m / l);
    }
    Monomial out;
    for (auto [var, exp] : acc) out.factors.emplace_back(var, exp);
    return out;
}

inline std::map<int, Monomial> f_monomials(const BlockPartitionElement& elem, const SpannedHyperplane& h,
                                           int max_var) {
    CycleType counts = induced_counts(h, elem);
    std::map<int, Monomial> out;
    for (int j = 1; j <= max_var; ++j) out[j] = f_monomial(counts, j);
    return out;
}

// Z_H(z) = 2^{-delta} sum over block partition tuples of
//   prod z_{mu^i}^{-1} ( Z_{n-t}(f_mu(z)) + delta * Z_{n-t}(fbar_mu(z)) ).
inline CycleIndex cycle_index_symbolic(const SpannedHyperplane& h) {
    const int n = h.ambient, t = h.support();
    const int d = delta(h);
    const HyperplaneType type = hyperplane_type(h);
    const CycleIndex z_free = hypercube_cycle_index(n - t);
    int max_var = 0;
    for (const auto& [m, c] : z_free.terms)
        for (auto [var, exp] : m.factors) max_var = std::max(max_var, var);

    std::vector<std::vector<std::vector<int>>> parts;
    for (int a : type.alpha) parts.push_back(partitions(a));

    CycleIndex acc;
    acc.total_mass = vertices_on(h).count();
    std::vector<std::size_t> pick(parts.size(), 0);
    while (true) {
        BlockPartitionElement elem;
        elem.blocks.resize(parts.size());
        Rational weight = 1;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            for (int p : parts[i][pick[i]]) ++elem.blocks[i][p];
            weight /= Rational(partition_centralizer_order(elem.blocks[i]));
        }
        for (int neg = 0; neg <= d; ++neg) {
            elem.negative = neg != 0;
            auto subst = f_monomials(elem, h, max_var);
            CycleIndex term = substitute_monomials(z_free, subst);
            for (const auto& [m, c] : term.terms) acc.add(m, c * weight);
        }
        std::size_t i = 0;
        while (i < parts.size() && ++pick[i] == parts[i].size()) {
            pick[i] = 0;
            ++i;
        }
        if (i == parts.size()) break;
    }
    if (d) {
        CycleIndex halved;
        halved.total_mass = acc.total_mass;
        for (const auto& [m, c] : acc.terms) halved.add(m, c / 2);
        acc = std::move(halved);
    }
    if (evaluate_all_ones(acc) != 1)
        throw std::logic_error("cycle_index_symbolic: coefficients do not average to 1");
    return acc;
}

// Direct Burnside over the explicit stabilizer, the independent oracle for
// the symbolic route.
inline CycleIndex cycle_index_burnside(const SpannedHyperplane& h) {
    auto elements = stabilizer_elements(h);
    return cycle_index_of_action(elements, vertices_on(h));
}

}  // namespace cubecensus
