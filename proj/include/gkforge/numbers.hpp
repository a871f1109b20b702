#pragma once

// Small integer helpers shared by the group and graph layers.  Everything here
// works on element orders and group orders, which stay well inside int64.

#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace gkforge {

using i64 = long long;

inline i64 lcm_i64(i64 a, i64 b) { return std::lcm(a, b); }

// Ascending prime factors of n, without multiplicity.  n >= 1.
inline std::vector<i64> prime_factors(i64 n) {
    std::vector<i64> out;
    for (i64 p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

inline bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

// True when every prime factor of n lies in pi.  n=1 is a pi-number for any pi.
inline bool is_pi_number(i64 n, const std::set<i64>& pi) {
    for (i64 p : prime_factors(n))
        if (!pi.count(p)) return false;
    return true;
}

// True when no prime factor of n lies in pi.
inline bool is_pi_prime_number(i64 n, const std::set<i64>& pi) {
    for (i64 p : prime_factors(n))
        if (pi.count(p)) return false;
    return true;
}

} // namespace gkforge
