#pragma once

// Spanned hyperplanes of Q_n: canonical representatives, enumeration by
// solving through affinely independent vertex subsets, type vectors, and the
// explicit stabilizer construction.
//
// A canonical representative is  a_1 x_1 + ... + a_t x_t = b  with
// 0 < a_1 <= ... <= a_t, gcd(a_1..a_t, b) = 1 and b <= (sum a_i) - b; the
// remaining n - t coordinates are free. Producing operations (canonicalize,
// enumerate_spanned, builtin_representatives) also guarantee the hyperplane
// is spanned, i.e. its cube vertices affinely span dimension n - 1.

#include "cubecensus/group.hpp"
#include "cubecensus/numbers.hpp"
#include "cubecensus/oracle.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace cubecensus {

struct GeneralHyperplane {
    int n = 0;
    std::vector<long long> coeffs;  // length n, any signs
    long long rhs = 0;
};

struct SpannedHyperplane {
    int ambient = 0;
    std::vector<int> coeffs;  // support coefficients, positive nondecreasing
    int rhs = 0;

    int support() const { return static_cast<int>(coeffs.size()); }
    int coefficient_sum() const { return std::accumulate(coeffs.begin(), coeffs.end(), 0); }

    GeneralHyperplane general() const {
        GeneralHyperplane g;
        g.n = ambient;
        g.coeffs.assign(ambient, 0);
        for (int i = 0; i < support(); ++i) g.coeffs[i] = coeffs[i];
        g.rhs = rhs;
        return g;
    }
    auto operator<=>(const SpannedHyperplane&) const = default;
};

inline VertexSet vertices_on(const GeneralHyperplane& h) {
    VertexSet::require_dimension(h.n);
    VertexSet out{h.n, 0};
    for (Vertex v = 0; v < (1u << h.n); ++v) {
        long long s = 0;
        for (int i = 0; i < h.n; ++i)
            if (v >> i & 1u) s += h.coeffs[i];
        if (s == h.rhs) out.insert(v);
    }
    return out;
}

inline VertexSet vertices_on(const SpannedHyperplane& h) { return vertices_on(h.general()); }

// V_t(H): the hyperplane viewed inside R^t, t = support size.
inline VertexSet support_vertices(const SpannedHyperplane& h) {
    GeneralHyperplane g;
    g.n = h.support();
    g.coeffs.assign(h.coeffs.begin(), h.coeffs.end());
    g.rhs = h.rhs;
    return vertices_on(g);
}

// Image hyperplane under w: coefficient of x_j becomes s(w,j) a_{pi(j)} and
// the right side drops sum of a_{pi(j)} over negated j.
inline GeneralHyperplane transform_hyperplane(const SignedPermutation& w, const GeneralHyperplane& h) {
    if (w.dimension() != h.n) throw std::invalid_argument("transform_hyperplane: dimension mismatch");
    GeneralHyperplane out;
    out.n = h.n;
    out.coeffs.resize(h.n);
    out.rhs = h.rhs;
    for (int j = 0; j < h.n; ++j) {
        long long a = h.coeffs[w.image[j]];
        if (w.negated >> j & 1u) {
            out.coeffs[j] = -a;
            out.rhs -= a;
        } else {
            out.coeffs[j] = a;
        }
    }
    return out;
}

// Canonical positive form of the equivalence class of h; shape-only, no
// spannedness requirement.
inline SpannedHyperplane canonical_form(const GeneralHyperplane& h) {
    long long rhs = h.rhs;
    std::vector<long long> cs = h.coeffs;
    for (auto& c : cs) {
        if (c < 0) {  // substitute x_i -> 1 - x_i
            rhs -= c;
            c = -c;
        }
    }
    std::vector<long long> support;
    for (long long c : cs)
        if (c > 0) support.push_back(c);
    if (support.empty()) throw std::invalid_argument("canonical_form: zero coefficient vector");
    std::sort(support.begin(), support.end());
    long long g = rhs < 0 ? -rhs : rhs;
    for (long long c : support) g = std::gcd(g, c);
    if (g > 1) {
        for (auto& c : support) c /= g;
        rhs /= g;
    }
    long long total = std::accumulate(support.begin(), support.end(), 0ll);
    if (rhs < 0 || rhs > total)
        throw std::invalid_argument("canonical_form: hyperplane misses the cube entirely");
    SpannedHyperplane out;
    out.ambient = h.n;
    out.coeffs.assign(support.begin(), support.end());
    out.rhs = static_cast<int>(std::min(rhs, total - rhs));
    return out;
}

// Canonical spanned representative; throws if h is not a spanned hyperplane.
inline SpannedHyperplane canonicalize(const GeneralHyperplane& h) {
    SpannedHyperplane out = canonical_form(h);
    VertexSet v = vertices_on(out);
    if (v.bits == 0 || affine_dimension(v) != h.n - 1)
        throw std::invalid_argument("canonicalize: hyperplane is not spanned");
    return out;
}

// ---------------------------------------------------------------------------
// Type vector and stabilizer

// alpha_i = multiplicity of the value i among the support coefficients.
struct HyperplaneType {
    std::vector<int> alpha;
    bool operator==(const HyperplaneType&) const = default;
};

inline HyperplaneType hyperplane_type(const SpannedHyperplane& h) {
    HyperplaneType t;
    if (!h.coeffs.empty()) t.alpha.assign(h.coeffs.back(), 0);
    for (int c : h.coeffs) ++t.alpha[c - 1];
    return t;
}

inline int delta(const SpannedHyperplane& h) { return h.coefficient_sum() == 2 * h.rhs ? 1 : 0; }

struct StabilizerDescription {
    HyperplaneType alpha;
    int delta = 0;
    int ambient = 0;
    int support = 0;

    // (n-t)! 2^{n-t+delta} prod alpha_i!
    long long order() const {
        long long o = 1;
        for (int i = 2; i <= ambient - support; ++i) o *= i;
        o <<= (ambient - support + delta);
        for (int a : alpha.alpha)
            for (int i = 2; i <= a; ++i) o *= i;
        return o;
    }
};

inline StabilizerDescription stabilizer_description(const SpannedHyperplane& h) {
    return {hyperplane_type(h), delta(h), h.ambient, h.support()};
}

// Explicit stabilizer: block permutations of equal coefficients (all-positive,
// plus all-negative copies when delta = 1) crossed with arbitrary signed
// permutations of the free coordinates.
inline std::vector<SignedPermutation> stabilizer_elements(const SpannedHyperplane& h) {
    const int n = h.ambient, t = h.support();
    // ranges of equal coefficient values (canonical form keeps them adjacent)
    std::vector<std::pair<int, int>> blocks;
    for (int i = 0; i < t;) {
        int j = i;
        while (j < t && h.coeffs[j] == h.coeffs[i]) ++j;
        blocks.emplace_back(i, j);
        i = j;
    }
    std::vector<std::vector<std::vector<std::uint8_t>>> block_perms;
    for (auto [lo, hi] : blocks) {
        std::vector<std::uint8_t> p(hi - lo);
        std::iota(p.begin(), p.end(), static_cast<std::uint8_t>(lo));
        std::vector<std::vector<std::uint8_t>> ps;
        do {
            ps.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
        block_perms.push_back(std::move(ps));
    }
    std::vector<std::uint8_t> free_perm(n - t);
    std::iota(free_perm.begin(), free_perm.end(), static_cast<std::uint8_t>(t));
    const int d = delta(h);

    std::vector<SignedPermutation> out;
    std::vector<std::size_t> pick(blocks.size(), 0);
    while (true) {
        SignedPermutation base = identity_element(n);
        for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
            auto [lo, hi] = blocks[bi];
            const auto& p = block_perms[bi][pick[bi]];
            for (int i = lo; i < hi; ++i) base.image[i] = p[i - lo];
        }
        auto fp = free_perm;
        do {
            for (std::uint32_t fm = 0; fm < (1u << (n - t)); ++fm) {
                for (int sign = 0; sign <= d; ++sign) {
                    SignedPermutation w = base;
                    for (int i = t; i < n; ++i) w.image[i] = fp[i - t];
                    w.negated = fm << t;
                    if (sign) w.negated |= (1u << t) - 1;
                    out.push_back(std::move(w));
                }
            }
        } while (std::next_permutation(fp.begin(), fp.end()));
        std::size_t bi = 0;
        while (bi < blocks.size() && ++pick[bi] == block_perms[bi].size()) {
            pick[bi] = 0;
            ++bi;
        }
        if (bi == blocks.size()) break;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace detail {

// Determinant of an n x n integer matrix (Bareiss).
inline long long bareiss_det(std::vector<std::vector<long long>> m) {
    const int n = static_cast<int>(m.size());
    long long sign = 1, prev = 1;
    for (int col = 0; col < n; ++col) {
        int piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            std::swap(m[piv], m[col]);
            sign = -sign;
        }
        for (int r = col + 1; r < n; ++r) {
            for (int c = col + 1; c < n; ++c) m[r][c] = (m[r][c] * m[col][col] - m[r][col] * m[col][c]) / prev;
            m[r][col] = 0;
        }
        prev = m[col][col];
    }
    return sign * m[n - 1][n - 1];
}

// Hyperplane through n affinely independent cube vertices, as the signed
// maximal minors of the n x (n+1) system [p | -1] (a, b)^T = 0; returns
// nothing when the vertices are affinely dependent.
inline std::optional<GeneralHyperplane> hyperplane_through(const std::vector<Vertex>& pts, int n) {
    std::vector<std::vector<long long>> rows(n, std::vector<long long>(n + 1));
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) rows[r][c] = pts[r] >> c & 1u;
        rows[r][n] = -1;
    }
    std::vector<long long> vec(n + 1);
    bool nonzero = false;
    for (int skip = 0; skip <= n; ++skip) {
        std::vector<std::vector<long long>> sub(n, std::vector<long long>(n));
        for (int r = 0; r < n; ++r)
            for (int c = 0, cc = 0; c <= n; ++c)
                if (c != skip) sub[r][cc++] = rows[r][c];
        long long d = bareiss_det(std::move(sub));
        if (skip % 2) d = -d;
        vec[skip] = d;
        nonzero |= d != 0;
    }
    if (!nonzero) return std::nullopt;
    GeneralHyperplane h;
    h.n = n;
    h.coeffs.assign(vec.begin(), vec.begin() + n);
    h.rhs = vec[n];
    return h;
}

inline void spanned_scan_range(int n, Vertex first_lo, Vertex first_hi,
                               std::map<SpannedHyperplane, std::uint64_t>& forms) {
    const Vertex nv = 1u << n;
    std::vector<Vertex> pts(n);
    std::vector<Vertex> idx(n);
    for (Vertex v0 = first_lo; v0 < first_hi; ++v0) {
        // combinations whose smallest member is v0
        for (int i = 0; i < n; ++i) idx[i] = v0 + i;
        if (idx[n - 1] >= nv) continue;
        while (true) {
            for (int i = 0; i < n; ++i) pts[i] = idx[i];
            if (auto h = hyperplane_through(pts, n)) ++forms[canonical_form(*h)];
            int i = n - 1;
            while (i >= 1 && idx[i] == nv - n + i) --i;
            if (i < 1) break;
            ++idx[i];
            for (int j = i + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
}

}  // namespace detail

// One canonical representative per equivalence class of spanned hyperplanes,
// found by solving through every affinely independent n-subset of cube
// vertices and deduping orbits via canonical vertex sets. The n = 6 scan
// walks ~7.5e7 subsets and sits behind the expensive flag.
inline std::vector<SpannedHyperplane> enumerate_spanned(int n, bool expensive = false, int threads = 0) {
    if (n < 1 || n > kMaxSetDimension) throw std::invalid_argument("enumerate_spanned: n out of range");
    if (n == 6 && !expensive)
        throw std::invalid_argument("enumerate_spanned: n = 6 requires expensive mode");

    std::map<SpannedHyperplane, std::uint64_t> forms;
    const Vertex nv = 1u << n;
    if (n == 6) {
        if (threads <= 0) threads = std::max(1u, std::thread::hardware_concurrency());
        std::vector<std::map<SpannedHyperplane, std::uint64_t>> partial(threads);
        std::vector<std::thread> pool;
        const Vertex span = nv / threads + 1;
        for (int w = 0; w < threads; ++w) {
            Vertex lo = std::min<Vertex>(nv, w * span), hi = std::min<Vertex>(nv, (w + 1) * span);
            pool.emplace_back(detail::spanned_scan_range, n, lo, hi, std::ref(partial[w]));
        }
        for (auto& th : pool) th.join();
        for (auto& p : partial)
            for (auto& [f, c] : p) forms[f] += c;
    } else {
        detail::spanned_scan_range(n, 0, nv, forms);
    }

    // group the distinct canonical forms by canonical vertex set under B_n
    auto g = enumerate_group(n);
    auto action = GroupAction::build(g, n);
    std::map<std::uint64_t, SpannedHyperplane> classes;
    for (const auto& [form, count] : forms) {
        VertexSet v = vertices_on(form);
        if (affine_dimension(v) != n - 1)
            throw std::logic_error("enumerate_spanned: solved hyperplane is not spanned");
        std::uint64_t key = canonical_bits(v.bits, action);
        auto [it, fresh] = classes.emplace(key, form);
        if (!fresh && form < it->second) it->second = form;
    }
    std::vector<SpannedHyperplane> out;
    for (auto& [key, form] : classes) out.push_back(form);
    std::sort(out.begin(), out.end(), [](const SpannedHyperplane& a, const SpannedHyperplane& b) {
        return std::tuple(a.support(), a.coeffs, a.rhs) < std::tuple(b.support(), b.coeffs, b.rhs);
    });
    return out;
}

// The Q_6 representatives used by the census: the six classes with more than
// 16 vertices, plus eight more classes reaching 13..16 vertices. Verified
// spanned at load.
inline std::vector<SpannedHyperplane> builtin_representatives(int n, int min_vertices) {
    if (n != 6 || (min_vertices != 13 && min_vertices != 17))
        throw std::invalid_argument("builtin_representatives: supported combinations are (6,17) and (6,13)");
    static const std::vector<std::pair<std::vector<int>, int>> table = {
        {{1}, 0},                  // x1 = 0                          32 vertices
        {{1, 1}, 1},               // x1 + x2 = 1                     32
        {{1, 1, 1}, 1},            // x1 + x2 + x3 = 1                24
        {{1, 1, 1, 1}, 2},         //                                 24
        {{1, 1, 1, 1, 1}, 2},      //                                 20
        {{1, 1, 1, 1, 1, 1}, 3},   //                                 20
        {{1, 1, 1, 2}, 2},         //                                 16
        {{1, 1, 1, 1}, 1},         //                                 16
        {{1, 1, 1, 1, 2}, 3},      //                                 16
        {{1, 1, 1, 1, 1, 2}, 3},   //                                 15
        {{1, 1, 1, 1, 1, 1}, 2},   //                                 15
        {{1, 1, 1, 1, 2}, 2},      //                                 14
        {{1, 1, 1, 2, 2}, 3},      //                                 14
        {{1, 1, 1, 1, 2, 2}, 4},   //                                 14
    };
    std::vector<SpannedHyperplane> out;
    for (const auto& [coeffs, rhs] : table) {
        SpannedHyperplane h{6, coeffs, rhs};
        VertexSet v = vertices_on(h);
        if (affine_dimension(v) != 5) throw std::logic_error("builtin_representatives: entry is not spanned");
        if (v.count() >= min_vertices) out.push_back(std::move(h));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Atlas file format: one line per representative,
//   n coeffs rhs alpha delta vertices stabilizer_order
// with comma-joined integer lists and '#' comment lines.

inline std::string atlas_to_text(const std::vector<SpannedHyperplane>& reps) {
    std::ostringstream os;
    os << "# hyperplane atlas: n coeffs rhs alpha delta vertices stabilizer_order\n";
    for (const auto& h : reps) {
        os << h.ambient << ' ';
        for (int i = 0; i < h.support(); ++i) os << (i ? "," : "") << h.coeffs[i];
        os << ' ' << h.rhs << ' ';
        auto t = hyperplane_type(h);
        for (std::size_t i = 0; i < t.alpha.size(); ++i) os << (i ? "," : "") << t.alpha[i];
        os << ' ' << delta(h) << ' ' << vertices_on(h).count() << ' ' << stabilizer_description(h).order()
           << '\n';
    }
    return os.str();
}

inline std::vector<SpannedHyperplane> atlas_from_text(const std::string& text) {
    std::vector<SpannedHyperplane> out;
    std::istringstream is(text);
    std::string line;
    auto parse_list = [](const std::string& s) {
        std::vector<int> v;
        std::istringstream ls(s);
        std::string tok;
        while (std::getline(ls, tok, ',')) v.push_back(std::stoi(tok));
        return v;
    };
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        int n, rhs, d, verts;
        long long order;
        std::string coeffs, alpha;
        if (!(ls >> n >> coeffs >> rhs >> alpha >> d >> verts >> order))
            throw std::invalid_argument("atlas_from_text: malformed line: " + line);
        SpannedHyperplane h{n, parse_list(coeffs), rhs};
        SpannedHyperplane check = canonicalize(h.general());
        if (check != h) throw std::invalid_argument("atlas_from_text: entry is not canonical: " + line);
        if (hyperplane_type(h).alpha != parse_list(alpha) || delta(h) != d ||
            vertices_on(h).count() != verts || stabilizer_description(h).order() != order)
            throw std::invalid_argument("atlas_from_text: derived fields do not match: " + line);
        out.push_back(std::move(h));
    }
    return out;
}

}  // namespace cubecensus
