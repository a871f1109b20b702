#pragma once

// Permutations on {0, ..., degree-1}, stored as image vectors.  The product
// a * b means "apply a first, then b", i.e. (a*b)[x] == b[a[x]].  Points are
// 0-based internally; the cycle text format is 1-based.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "gkforge/numbers.hpp"

namespace gkforge {

class Perm {
public:
    Perm() = default;
    explicit Perm(int degree);                    // identity
    explicit Perm(std::vector<int> images);       // throws MalformedPermutation

    int degree() const { return static_cast<int>(images_.size()); }
    int operator[](int point) const { return images_[static_cast<size_t>(point)]; }
    const std::vector<int>& images() const { return images_; }

    bool is_identity() const;
    Perm operator*(const Perm& rhs) const;        // this first, then rhs
    Perm inverse() const;
    Perm conjugated_by(const Perm& g) const;      // g^-1 * this * g
    i64 order() const;                            // lcm of cycle lengths

    friend bool operator==(const Perm& a, const Perm& b) = default;
    friend auto operator<=>(const Perm& a, const Perm& b) { return a.images_ <=> b.images_; }

    // 1-based disjoint-cycle text, e.g. "(1 2 3)(4 5)"; identity prints "()".
    std::string cycle_string() const;
    static Perm parse_cycles(const std::string& text, int degree); // throws ParseError

private:
    std::vector<int> images_;
};

// Commutator a^-1 * b^-1 * a * b.
Perm commutator(const Perm& a, const Perm& b);

struct PermHash {
    size_t operator()(const Perm& p) const {
        size_t h = 1469598103934665603ull;
        for (int x : p.images()) {
            h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

} // namespace gkforge
