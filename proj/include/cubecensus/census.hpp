#pragma once

// The counting pipeline for A_n(k), H_n(k), F_n(k) = A_n(k) - H_n(k):
//
//   high regime  k > 2^{n-1}       every class is full-dimensional, F = A.
//   mid regime   2^{n-2} < k <= 2^{n-1}
//                H_n(k) is the sum of per-hyperplane partial-class counts,
//                one coefficient extraction per representative.
//   low regime   2^{n-3} < k <= 2^{n-2}
//                partial counts need corrections from codimension-2 flats
//                H cap w(H), and classes shared between hyperplane classes
//                are removed by inclusion-exclusion over flat membership.
//
// Everything is exact; values are arbitrary-precision integers.

#include "cubecensus/cycle_index.hpp"
#include "cubecensus/group.hpp"
#include "cubecensus/hyperplane_cycle_index.hpp"
#include "cubecensus/hyperplanes.hpp"
#include "cubecensus/numbers.hpp"

#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace cubecensus {

enum class Regime { zero, low, mid, high, external, unknown };

inline const char* regime_name(Regime r) {
    switch (r) {
        case Regime::zero: return "zero";
        case Regime::low: return "low";
        case Regime::mid: return "mid";
        case Regime::high: return "high";
        case Regime::external: return "external";
        case Regime::unknown: return "unknown";
    }
    return "?";
}

struct CensusRow {
    int k = 0;
    Integer A{0};
    std::optional<Integer> H, F;
    Regime regime = Regime::unknown;
    std::string provenance;
};

struct CensusTable {
    int n = 0;
    std::vector<CensusRow> rows;  // indexed by k = 0..2^n
};

// A codimension-2 flat H cap w(H) (or H_i cap w(H_j)) that can hold at least
// k cube vertices, kept as its vertex set plus one witnessing symmetry.
struct IntersectionClass {
    VertexSet flat;
    SpannedHyperplane base;
    SignedPermutation witness;
    int q = 0;  // vertex count of the flat
};

struct ESets {
    std::vector<IntersectionClass> e1;  // representatives under F(H)
    std::vector<IntersectionClass> e2;  // representatives under B_n
};

class CensusBuilder {
  public:
    explicit CensusBuilder(int n, std::optional<std::vector<SpannedHyperplane>> atlas = std::nullopt)
        : n_(n) {
        VertexSet::require_dimension(n);
        if (n < 1) throw std::invalid_argument("CensusBuilder: n must be >= 1");
        group_ = enumerate_group(n);
        action_ = GroupAction::build(group_, n);
        zn_ = cycle_index_of_action(action_, group_, VertexSet::full(n));
        cn_ = substitute_two_colors(zn_);
        a_.resize((1u << n) + 1);
        for (int k = 0; k <= (1 << n); ++k) a_[k] = coefficient(cn_, k, (1 << n) - k);
        if (atlas) {
            reps_ = std::move(*atlas);
        } else if (n == 6) {
            reps_ = builtin_representatives(6, 13);
        } else {
            reps_ = enumerate_spanned(n);
        }
        for (const auto& h : reps_) {
            if (h.ambient != n) throw std::invalid_argument("CensusBuilder: representative dimension mismatch");
            rep_vertices_.push_back(vertices_on(h));
            rep_index_.push_back(cycle_index_symbolic(h));
            rep_bivariate_.push_back(substitute_two_colors(rep_index_.back()));
        }
    }

    int n() const { return n_; }
    const std::vector<SpannedHyperplane>& representatives() const { return reps_; }
    const std::vector<VertexSet>& representative_vertices() const { return rep_vertices_; }
    const CycleIndex& hypercube_index() const { return zn_; }
    const CycleIndex& representative_index(std::size_t i) const { return rep_index_[i]; }
    const std::vector<Integer>& a_table() const { return a_; }

    Integer a(int k) const {
        if (k < 0 || k > (1 << n_)) return 0;
        return a_[k];
    }

    Integer f_high(int k) const {
        if (k <= (1 << (n_ - 1)) || k > (1 << n_))
            throw std::invalid_argument("f_high: k outside the high regime");
        return a(k);
    }

    // N_H(k) in the mid regime: one coefficient of C_H.
    Integer n_partial_mid(std::size_t rep, int k) const {
        check_mid(k);
        return partial_count(rep, k);
    }

    Integer h_mid(int k) const {
        check_mid(k);
        Integer s = 0;
        for (std::size_t i = 0; i < reps_.size(); ++i)
            if (rep_vertices_[i].count() >= k) s += partial_count(i, k);
        return s;
    }

    Integer f_mid(int k) const { return a(k) - h_mid(k); }

    // E(H,k): intersections H cap w(H) with w(H) != H holding >= k vertices,
    // as representatives under F(H) (e1) and under B_n (e2).
    ESets e_sets(std::size_t rep, int k) {
        const auto& cache = rep_flats(rep);
        ESets out;
        for (const auto& [canon, ic] : cache.e1)
            if (ic.q >= k) out.e1.push_back(ic);
        for (const auto& [canon, ic] : cache.e2)
            if (ic.q >= k) out.e2.push_back(ic);
        return out;
    }

    // Local and partial cycle indices of a flat: Burnside over the
    // brute-filtered stabilizers inside F(H) and inside B_n.
    std::pair<CycleIndex, CycleIndex> intersection_cycle_indices(const IntersectionClass& ic,
                                                                 std::size_t rep) {
        CycleIndex local = local_index(rep, ic.flat.bits);
        CycleIndex partial = flat_data(ic.flat.bits).index;
        return {local, partial};
    }

    // N_H(k) in the low regime: plain extraction, minus local classes that
    // escape into flats, plus the flats' partial classes.
    Integer n_partial_low(std::size_t rep, int k) {
        check_low(k);
        const int nv = rep_vertices_[rep].count();
        Integer val = partial_count(rep, k);
        const auto& cache = rep_flats(rep);
        for (const auto& [canon, ic] : cache.e1) {
            if (ic.q < k) continue;
            Bivariate c = substitute_two_colors(local_index(rep, ic.flat.bits));
            val -= coefficient(c, k, ic.q - k);
        }
        for (const auto& [canon, ic] : cache.e2) {
            if (ic.q < k) continue;
            val += coefficient(flat_data(ic.flat.bits).bivariate, k, ic.q - k);
        }
        return val;
    }

    // |A_i cap A_j|: partial classes of the flats H_i cap w(H_j) with >= k
    // vertices, one term per B_n-class.
    Integer pair_overlap(std::size_t i, std::size_t j, int k) {
        check_low(k);
        Integer s = 0;
        for (std::uint64_t canon : pair_classes(i, j)) {
            const FlatData& fd = flat_data(canon);
            if (fd.q >= k) s += coefficient(fd.bivariate, k, fd.q - k);
        }
        return s;
    }

    // |A_{i_1} cap ... cap A_{i_m}| for m >= 2: every candidate flat comes
    // from some pairwise set (the intersections collapse to codimension 2 in
    // this regime); a flat contributes iff an image of it sits inside every
    // listed hyperplane.
    Integer higher_overlap(const std::vector<std::size_t>& indices, int k) {
        check_low(k);
        if (indices.size() < 2) throw std::invalid_argument("higher_overlap: need at least two hyperplanes");
        std::set<std::uint64_t> candidates;
        for (std::size_t a = 0; a < indices.size(); ++a)
            for (std::size_t b = a + 1; b < indices.size(); ++b)
                for (std::uint64_t canon : pair_classes(indices[a], indices[b])) candidates.insert(canon);
        Integer s = 0;
        for (std::uint64_t canon : candidates) {
            const FlatData& fd = flat_data(canon);
            if (fd.q < k) continue;
            bool all = true;
            for (std::size_t idx : indices)
                if (!flat_fits_in(canon, idx)) {
                    all = false;
                    break;
                }
            if (all) s += coefficient(fd.bivariate, k, fd.q - k);
        }
        return s;
    }

    // H_n(k) in the low regime by inclusion-exclusion over the hyperplane
    // classes. Requires the representative list to be complete down to k
    // vertices (true for n <= 5 always; for n = 6 only when k >= 13).
    Integer h_low(int k) {
        check_low(k);
        if (n_ == 6 && k < 13)
            throw std::invalid_argument("h_low: the n = 6 atlas only covers hyperplanes with >= 13 vertices");
        Integer total = 0;
        for (std::size_t i = 0; i < reps_.size(); ++i) total += n_partial_low(i, k);
        // membership sets of all pairwise flats bound the subset size
        std::size_t max_members = 0;
        for (std::size_t i = 0; i < reps_.size(); ++i)
            for (std::size_t j = i + 1; j < reps_.size(); ++j)
                for (std::uint64_t canon : pair_classes(i, j))
                    max_members = std::max(max_members, members_of(canon).size());
        int sign = -1;
        for (std::size_t m = 2; m <= max_members; ++m) {
            Integer level = 0;
            std::vector<std::size_t> idx(m);
            for (std::size_t i = 0; i < m; ++i) idx[i] = i;
            const std::size_t count = reps_.size();
            while (true) {
                level += higher_overlap(idx, k);
                std::size_t i = m;
                while (i > 0 && idx[i - 1] == count - m + (i - 1)) --i;
                if (i == 0) break;
                ++idx[i - 1];
                for (std::size_t j = i; j < m; ++j) idx[j] = idx[j - 1] + 1;
            }
            total += sign * level;
            sign = -sign;
        }
        return total;
    }

    Integer f_low(int k) { return a(k) - h_low(k); }

    // Full table; external values fill rows outside the computed regimes and
    // must agree with computed rows they overlap.
    CensusTable assemble(const std::map<int, Integer>& external = {}) {
        CensusTable table;
        table.n = n_;
        const int top = 1 << n_;
        for (int k = 0; k <= top; ++k) {
            CensusRow row;
            row.k = k;
            row.A = a(k);
            if (k <= n_) {
                row.F = 0;
                row.H = row.A;
                row.regime = Regime::zero;
                row.provenance = k == 0 ? "empty set" : "needs at least n+1 vertices";
            } else if (k > top / 2) {
                row.F = a(k);
                row.H = 0;
                row.regime = Regime::high;
                row.provenance = "all classes full-dimensional";
            } else if (k > top / 4) {
                row.H = h_mid(k);
                row.F = row.A - *row.H;
                row.regime = Regime::mid;
                row.provenance = "hyperplane partial-class sum";
            } else if (k > top / 8 && (n_ < 5 || (n_ == 6 && k >= 13))) {
                row.H = h_low(k);
                row.F = row.A - *row.H;
                row.regime = Regime::low;
                row.provenance = "hyperplane inclusion-exclusion";
            } else {
                row.regime = Regime::unknown;
            }
            table.rows.push_back(std::move(row));
        }
        for (auto [k, f] : external) {
            if (k < 0 || k > top) throw std::invalid_argument("assemble: external k out of range");
            CensusRow& row = table.rows[k];
            if (row.F) {
                if (*row.F != f)
                    throw std::invalid_argument("assemble: external value conflicts with computed F(" +
                                                std::to_string(k) + ")");
                continue;
            }
            row.F = f;
            row.H = row.A - f;
            row.regime = Regime::external;
            row.provenance = "external";
        }
        for (const CensusRow& row : table.rows) {
            if (row.F && (*row.F < 0 || *row.F > row.A))
                throw std::logic_error("assemble: F outside [0, A] at k = " + std::to_string(row.k));
            if (row.F && row.H && *row.F + *row.H != row.A)
                throw std::logic_error("assemble: F + H != A at k = " + std::to_string(row.k));
        }
        return table;
    }

    std::size_t rep_index_of(const SpannedHyperplane& h) const {
        for (std::size_t i = 0; i < reps_.size(); ++i)
            if (reps_[i] == h) return i;
        throw std::invalid_argument("rep_index_of: not a representative");
    }

  private:
    struct FlatData {
        int q = 0;
        CycleIndex index;     // cycle index of the full B_n stabilizer on the flat
        Bivariate bivariate;
    };
    struct RepFlats {
        std::map<std::uint64_t, IntersectionClass> e1, e2;  // keyed by canonical mask
    };

    void check_mid(int k) const {
        if (k <= (1 << n_) / 4 || k > (1 << n_) / 2)
            throw std::invalid_argument("k outside the mid regime");
    }
    void check_low(int k) const {
        if (k <= (1 << n_) / 8 || k > (1 << n_) / 4)
            throw std::invalid_argument("k outside the low regime");
    }

    Integer partial_count(std::size_t rep, int k) const {
        const int nv = rep_vertices_[rep].count();
        if (k > nv) return 0;
        return coefficient(rep_bivariate_[rep], k, nv - k);
    }

    const std::vector<SignedPermutation>& rep_stabilizer(std::size_t rep) {
        auto it = stab_cache_.find(rep);
        if (it == stab_cache_.end()) {
            auto elems = stabilizer_elements(reps_[rep]);
            it = stab_cache_.emplace(rep, std::make_pair(GroupAction::build(elems, n_), std::move(elems))).first;
            for (const auto& m : it->second.first.maps)
                if (apply_mask(m, rep_vertices_[rep].bits) != rep_vertices_[rep].bits)
                    throw std::logic_error("stabilizer element does not fix the hyperplane vertex set");
        }
        return it->second.second;
    }
    const GroupAction& rep_stabilizer_action(std::size_t rep) {
        rep_stabilizer(rep);
        return stab_cache_.at(rep).first;
    }

    // All flats H cap w(H) with at least 2^{n-3}+1 vertices, grouped into
    // F(H)- and B_n-classes.
    const RepFlats& rep_flats(std::size_t rep) {
        auto it = eflat_cache_.find(rep);
        if (it != eflat_cache_.end()) return it->second;
        const int kmin = (1 << n_) / 8 + 1;
        const std::uint64_t v = rep_vertices_[rep].bits;
        std::map<std::uint64_t, std::size_t> flats;  // mask -> witness element index
        for (std::size_t e = 0; e < action_.maps.size(); ++e) {
            std::uint64_t img = apply_mask(action_.maps[e], v);
            if (img == v) continue;
            std::uint64_t t = v & img;
            if (std::popcount(t) >= kmin) flats.emplace(t, e);
        }
        RepFlats rf;
        const GroupAction& stab_action = rep_stabilizer_action(rep);
        for (const auto& [mask, witness] : flats) {
            IntersectionClass ic{VertexSet{n_, mask}, reps_[rep], group_[witness],
                                 std::popcount(mask)};
            if (affine_dimension(ic.flat) != n_ - 2)
                throw std::logic_error("e_sets: intersection is not of codimension 2");
            rf.e1.emplace(canonical_bits(mask, stab_action), ic);
            rf.e2.emplace(canonical_of(mask), ic);
        }
        return eflat_cache_.emplace(rep, std::move(rf)).first->second;
    }

    CycleIndex local_index(std::size_t rep, std::uint64_t flat) {
        auto key = std::make_pair(rep, flat);
        auto it = local_cache_.find(key);
        if (it != local_cache_.end()) return it->second;
        const auto& elems = rep_stabilizer(rep);
        const GroupAction& act = rep_stabilizer_action(rep);
        std::vector<SignedPermutation> keep;
        for (std::size_t e = 0; e < elems.size(); ++e)
            if (apply_mask(act.maps[e], flat) == flat) keep.push_back(elems[e]);
        CycleIndex z = cycle_index_of_action(keep, VertexSet{n_, flat});
        return local_cache_.emplace(key, std::move(z)).first->second;
    }

    // memoized canonical form of a flat mask under the full group
    std::uint64_t canonical_of(std::uint64_t mask) {
        auto it = canon_memo_.find(mask);
        if (it != canon_memo_.end()) return it->second;
        std::uint64_t c = canonical_bits(mask, action_);
        canon_memo_.emplace(mask, c);
        return c;
    }

    const FlatData& flat_data(std::uint64_t mask) {
        std::uint64_t canon = canonical_of(mask);
        auto it = flat_cache_.find(canon);
        if (it != flat_cache_.end()) return it->second;
        std::vector<SignedPermutation> keep;
        for (std::size_t e = 0; e < action_.maps.size(); ++e)
            if (apply_mask(action_.maps[e], canon) == canon) keep.push_back(group_[e]);
        FlatData fd;
        fd.q = std::popcount(canon);
        fd.index = cycle_index_of_action(keep, VertexSet{n_, canon});
        fd.bivariate = substitute_two_colors(fd.index);
        return flat_cache_.emplace(canon, std::move(fd)).first->second;
    }

    // Canonical masks of the B_n-classes of H_i cap w(H_j) flats with at
    // least 2^{n-3}+1 vertices.
    const std::vector<std::uint64_t>& pair_classes(std::size_t i, std::size_t j) {
        if (i > j) std::swap(i, j);
        auto key = std::make_pair(i, j);
        auto it = pair_cache_.find(key);
        if (it != pair_cache_.end()) return it->second;
        const int kmin = (1 << n_) / 8 + 1;
        const std::uint64_t vi = rep_vertices_[i].bits, vj = rep_vertices_[j].bits;
        std::set<std::uint64_t> masks;
        for (const auto& m : action_.maps) {
            std::uint64_t t = vi & apply_mask(m, vj);
            if (std::popcount(t) >= kmin) masks.insert(t);
        }
        std::set<std::uint64_t> classes;
        for (std::uint64_t t : masks) classes.insert(canonical_of(t));
        return pair_cache_.emplace(key, std::vector<std::uint64_t>(classes.begin(), classes.end()))
            .first->second;
    }

    // Indices of representatives that contain an image of the flat.
    const std::vector<std::size_t>& members_of(std::uint64_t canon) {
        auto it = members_cache_.find(canon);
        if (it != members_cache_.end()) return it->second;
        std::vector<std::size_t> mem;
        for (std::size_t i = 0; i < reps_.size(); ++i)
            if (flat_fits_in(canon, i)) mem.push_back(i);
        return members_cache_.emplace(canon, std::move(mem)).first->second;
    }

    bool flat_fits_in(std::uint64_t canon, std::size_t rep) {
        auto key = std::make_pair(canon, rep);
        auto it = fits_cache_.find(key);
        if (it != fits_cache_.end()) return it->second;
        const std::uint64_t v = rep_vertices_[rep].bits;
        bool ok = false;
        for (const auto& m : action_.maps)
            if ((apply_mask(m, canon) & ~v) == 0) {
                ok = true;
                break;
            }
        fits_cache_.emplace(key, ok);
        return ok;
    }

    int n_;
    std::vector<SignedPermutation> group_;
    GroupAction action_;
    CycleIndex zn_;
    Bivariate cn_;
    std::vector<Integer> a_;
    std::vector<SpannedHyperplane> reps_;
    std::vector<VertexSet> rep_vertices_;
    std::vector<CycleIndex> rep_index_;
    std::vector<Bivariate> rep_bivariate_;

    std::map<std::size_t, std::pair<GroupAction, std::vector<SignedPermutation>>> stab_cache_;
    std::map<std::size_t, RepFlats> eflat_cache_;
    std::map<std::pair<std::size_t, std::uint64_t>, CycleIndex> local_cache_;
    std::map<std::uint64_t, FlatData> flat_cache_;
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::uint64_t>> pair_cache_;
    std::map<std::uint64_t, std::vector<std::size_t>> members_cache_;
    std::map<std::pair<std::uint64_t, std::size_t>, bool> fits_cache_;
    std::map<std::uint64_t, std::uint64_t> canon_memo_;
};

// ---------------------------------------------------------------------------
// Serialization

inline std::string to_csv(const CensusTable& t) {
    std::ostringstream os;
    os << "n,k,A,H,F,regime,provenance\n";
    for (const auto& r : t.rows) {
        os << t.n << ',' << r.k << ',' << r.A << ',';
        if (r.H) os << *r.H;
        os << ',';
        if (r.F) os << *r.F;
        os << ',' << regime_name(r.regime) << ',' << r.provenance << '\n';
    }
    return os.str();
}

inline std::string to_text(const CensusTable& t) {
    std::ostringstream os;
    os << "k\tA_" << t.n << "(k)\tH_" << t.n << "(k)\tF_" << t.n << "(k)\tregime\n";
    for (const auto& r : t.rows) {
        os << r.k << '\t' << r.A << '\t';
        if (r.H) os << *r.H; else os << '?';
        os << '\t';
        if (r.F) os << *r.F; else os << '?';
        os << '\t' << regime_name(r.regime) << '\n';
    }
    return os.str();
}

}  // namespace cubecensus
