#pragma once

// Sparse cycle-index polynomials with exact rational coefficients, the
// two-color substitution z_i -> u1^i + u2^i, and Moebius inversion of
// fixed-point counts into cycle counts.

#include "cubecensus/group.hpp"
#include "cubecensus/numbers.hpp"

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace cubecensus {

// z_1^{e_1} z_2^{e_2} ...; factors sorted by variable index, exponents > 0.
struct Monomial {
    std::vector<std::pair<int, int>> factors;

    static Monomial variable(int var, int exp = 1) {
        Monomial m;
        if (exp > 0) m.factors.emplace_back(var, exp);
        return m;
    }
    static Monomial from_cycle_type(const CycleType& ct) {
        Monomial m;
        for (auto [len, mult] : ct.counts) m.factors.emplace_back(len, mult);
        return m;
    }

    int total_mass() const {
        int s = 0;
        for (auto [var, exp] : factors) s += var * exp;
        return s;
    }
    Monomial pow(int e) const {
        Monomial m;
        for (auto [var, exp] : factors) m.factors.emplace_back(var, exp * e);
        return m;
    }
    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        std::map<int, int> acc;
        for (auto [var, exp] : a.factors) acc[var] += exp;
        for (auto [var, exp] : b.factors) acc[var] += exp;
        Monomial m;
        for (auto [var, exp] : acc)
            if (exp) m.factors.emplace_back(var, exp);
        return m;
    }
    auto operator<=>(const Monomial&) const = default;
};

// Homogeneous polynomial in the z variables; every monomial has the same
// total mass (the size of the permuted set).
struct CycleIndex {
    std::map<Monomial, Rational> terms;
    int total_mass = 0;

    void add(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        if (terms.empty() && total_mass == 0) total_mass = m.total_mass();
        if (m.total_mass() != total_mass)
            throw std::invalid_argument("CycleIndex: mixing monomials of different total mass");
        auto it = terms.find(m);
        if (it == terms.end()) {
            terms.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }
    bool operator==(const CycleIndex& o) const { return terms == o.terms; }
};

inline Rational evaluate_all_ones(const CycleIndex& z) {
    Rational s = 0;
    for (const auto& [m, c] : z.terms) s += c;
    return s;
}

// Canonical text form: one "c * z1^a z2^b" line per monomial, sorted by
// exponent vector. Used by the CLI and by regression fixtures.
inline std::string to_text(const CycleIndex& z) {
    std::ostringstream os;
    for (const auto& [m, c] : z.terms) {
        os << numerator(c);
        if (denominator(c) != 1) os << "/" << denominator(c);
        os << " *";
        for (auto [var, exp] : m.factors) os << " z" << var << "^" << exp;
        os << "\n";
    }
    return os.str();
}

inline CycleIndex cycle_index_of_action(const GroupAction& action,
                                        std::span<const SignedPermutation> elements,
                                        const VertexSet& s) {
    if (elements.empty()) throw std::invalid_argument("cycle_index_of_action: empty element list");
    CycleIndex z;
    z.total_mass = s.count();
    const Rational w = Rational(1, static_cast<long long>(elements.size()));
    for (std::size_t e = 0; e < elements.size(); ++e) {
        if (apply_mask(action.maps[e], s.bits) != s.bits)
            throw std::invalid_argument("cycle_index_of_action: element does not stabilize the set");
        CycleType ct;
        std::uint64_t seen = 0, bits = s.bits;
        while (bits) {
            int v = std::countr_zero(bits);
            bits &= bits - 1;
            if (seen >> v & 1ull) continue;
            int len = 0;
            std::uint8_t u = static_cast<std::uint8_t>(v);
            while (!(seen >> u & 1ull)) {
                seen |= 1ull << u;
                u = action.maps[e][u];
                ++len;
            }
            ++ct.counts[len];
        }
        z.add(Monomial::from_cycle_type(ct), w);
    }
    return z;
}

inline CycleIndex cycle_index_of_action(std::span<const SignedPermutation> elements, const VertexSet& s) {
    return cycle_index_of_action(GroupAction::build(elements, s.dimension), elements, s);
}

// Cycle index of B_n acting on the 2^n cube vertices. For n = 0 this is the
// trivial group on the single empty vertex, i.e. z_1; note that B_1 on the
// two vertices of Q_1 gives (z_1^2 + z_2)/2.
inline CycleIndex hypercube_cycle_index(int n) {
    VertexSet::require_dimension(n);
    if (n == 0) {
        CycleIndex z;
        z.add(Monomial::variable(1), 1);
        return z;
    }
    auto g = enumerate_group(n);
    return cycle_index_of_action(g, VertexSet::full(n));
}

// Homogeneous bivariate polynomial of fixed degree; coefficient of
// u1^p u2^{degree-p} is stored at index p.
struct Bivariate {
    int degree = 0;
    std::vector<Rational> coeff;

    explicit Bivariate(int deg = 0) : degree(deg), coeff(deg + 1, Rational(0)) {}
};

inline Bivariate substitute_two_colors(const CycleIndex& z) {
    Bivariate out(z.total_mass);
    for (const auto& [m, c] : z.terms) {
        // expand prod_i (u1^i + u2^i)^{e_i} as a dense vector over the
        // u1-degree, then accumulate with the rational coefficient
        std::vector<Integer> poly{1};
        for (auto [var, exp] : m.factors) {
            for (int r = 0; r < exp; ++r) {
                std::vector<Integer> next(poly.size() + var, Integer(0));
                for (std::size_t d = 0; d < poly.size(); ++d) {
                    if (poly[d] == 0) continue;
                    next[d] += poly[d];
                    next[d + var] += poly[d];
                }
                poly = std::move(next);
            }
        }
        for (std::size_t d = 0; d < poly.size(); ++d)
            if (poly[d] != 0) out.coeff[d] += c * Rational(poly[d]);
    }
    return out;
}

inline Integer coefficient(const Bivariate& b, int p, int q) {
    if (p < 0 || q < 0 || p + q != b.degree) return 0;
    const Rational& r = b.coeff[p];
    if (denominator(r) != 1)
        throw std::domain_error("coefficient: value is not integral (malformed cycle index)");
    return numerator(r);
}

// Replace every variable z_j of Z by the monomial subst.at(j) and collect.
inline CycleIndex substitute_monomials(const CycleIndex& z, const std::map<int, Monomial>& subst) {
    CycleIndex out;
    for (const auto& [m, c] : z.terms) {
        Monomial target;
        for (auto [var, exp] : m.factors) {
            auto it = subst.find(var);
            if (it == subst.end())
                throw std::invalid_argument("substitute_monomials: no substitution for z" + std::to_string(var));
            target = target * it->second.pow(exp);
        }
        out.add(target, c);
    }
    return out;
}

// Cycle counts from fixed-point counts: m_i = (1/i) sum_{j|i} mu(i/j) psi(j).
// psi must be defined on every divisor of every i <= max_order.
inline CycleType mobius_cycle_counts(const std::map<int, long long>& psi, int max_order) {
    CycleType ct;
    for (int i = 1; i <= max_order; ++i) {
        long long s = 0;
        for (int j = 1; j <= i; ++j) {
            if (i % j) continue;
            auto it = psi.find(j);
            if (it == psi.end())
                throw std::invalid_argument("mobius_cycle_counts: psi missing divisor " + std::to_string(j));
            s += moebius(i / j) * it->second;
        }
        if (s % i != 0 || s < 0)
            throw std::domain_error("mobius_cycle_counts: inconsistent fixed-point counts at order " +
                                    std::to_string(i));
        if (s) ct.counts[i] = static_cast<int>(s / i);
    }
    return ct;
}

}  // namespace cubecensus
