#pragma once

// Exact arithmetic aliases and small number-theory helpers shared by the
// counting code. Everything is integer or rational; no floating point.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace cubecensus {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline long long lcm_ll(long long a, long long b) {
    return a / std::gcd(a, b) * b;
}

// Classical number-theoretic Moebius function.
inline int moebius(long long x) {
    if (x < 1) throw std::invalid_argument("moebius: argument must be positive");
    int r = 1;
    for (long long d = 2; d * d <= x; ++d) {
        if (x % d == 0) {
            x /= d;
            if (x % d == 0) return 0;
            r = -r;
        }
    }
    if (x > 1) r = -r;
    return r;
}

inline Integer binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Integer r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

// Integer partitions of m as descending part lists, largest part first:
// partitions(4) = [4], [3,1], [2,2], [2,1,1], [1,1,1,1].
inline std::vector<std::vector<int>> partitions(int m) {
    if (m < 0) throw std::invalid_argument("partitions: negative argument");
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rem, int mx) -> void {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rem, mx); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    rec(rec, m, m == 0 ? 1 : m);
    return out;
}

// z_lambda = 1^{m_1} m_1! 2^{m_2} m_2! ... for a partition given as a
// part -> multiplicity map.
inline Integer partition_centralizer_order(const std::map<int, int>& parts) {
    Integer z = 1;
    for (auto [part, mult] : parts) {
        for (int i = 0; i < mult; ++i) z *= part;
        for (int i = 2; i <= mult; ++i) z *= i;
    }
    return z;
}

}  // namespace cubecensus
