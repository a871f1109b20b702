#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gkforge/gk.hpp"
#include "gkforge/group.hpp"

namespace gkforge {

// ---------------------------------------------------------------------------
// Frobenius structure
// ---------------------------------------------------------------------------

struct FrobeniusWitness {
    SubgroupHandle kernel;
    i64 complement_order = 0;
};

// True when `kernel` is a proper nontrivial normal subgroup of coprime index
// such that every element outside it acts fixed-point-freely on the
// nonidentity kernel elements (equivalently, centralizers of nonidentity
// kernel elements stay inside the kernel).
bool frobenius_with_kernel(const GroupPtr& g, const SubgroupHandle& kernel);

std::optional<FrobeniusWitness> is_frobenius(const GroupPtr& g);

// 2-Frobenius: F2 = preimage of Fitting(G/F1) with F1 = Fitting(G); the group
// is 2-Frobenius when F2 is Frobenius with kernel F1 and G/F1 is Frobenius
// with kernel F2/F1.  The witness also records the classification flags for
// such groups (upper kernel F2/F1 cyclic of odd order, G/F2 cyclic, F1 not
// cyclic); structural detection does not require them.
struct TwoFrobeniusWitness {
    SubgroupHandle f1;
    SubgroupHandle f2;
    bool upper_kernel_cyclic = false;
    bool upper_kernel_odd = false;
    bool top_cyclic = false;
    bool f1_noncyclic = false;

    bool classification_flags() const {
        return upper_kernel_cyclic && upper_kernel_odd && top_cyclic && f1_noncyclic;
    }
};

std::optional<TwoFrobeniusWitness> is_2frobenius(const GroupPtr& g);

// ---------------------------------------------------------------------------
// sigma-length
// ---------------------------------------------------------------------------

// Upper alternating series 1 <= O_{sigma'}(G) <= O_{sigma',sigma}(G) <= ...
// chain[0] is trivial, chain.back() is G; the factor chain[i+1]/chain[i] is a
// sigma'-group for even i and a sigma-group for odd i (possibly trivial).
struct SigmaSeries {
    std::set<i64> sigma;
    std::vector<SubgroupHandle> chain;

    int sigma_factor_count() const;
};

SigmaSeries sigma_series_upper(const GroupPtr& g, const std::set<i64>& sigma);
// Errors: NotSolvable when the series stalls below G.

int sigma_length(const GroupPtr& g, const std::set<i64>& sigma);

// Independent brute-force value: minimum number of sigma-factors over all
// chains of normal subgroups whose factors are sigma- or sigma'-groups.
// Guarded: order <= 400 and at most 40 normal subgroups, else BoundExceeded.
int sigma_length_bruteforce(const GroupPtr& g, const std::set<i64>& sigma);

// ---------------------------------------------------------------------------
// Order-48 exceptional quotient
// ---------------------------------------------------------------------------

SubgroupHandle odd_core(const GroupPtr& g); // largest normal odd-order subgroup

// The binary octahedral group: order 48 with a unique involution, center of
// order 2, and central quotient isomorphic to S4.  (GL(2,3), the other
// familiar order-48 extension of S4, has many involutions.)
bool is_2s4_minus(const GroupPtr& g);

// ---------------------------------------------------------------------------
// Normal-series certificates for cut sets
// ---------------------------------------------------------------------------

// Witness for the structure theorem: a normal series
//   1 <= G0 <= G1 <= G2 <= G3 <= G
// where G0 and G2/G1 are sigma-groups, G1/G0 is a nilpotent pi1-group,
// G3/G2 is a nilpotent pi2-group, and G/G3 is nilpotent unless 2 lies in pi2
// and G/O(G) is the binary octahedral group, in which case G/G3 has Fitting
// length 2.
struct SeriesCertificate {
    SubgroupHandle g0, g1, g2, g3;
    PiPartition partition;
    std::array<std::string, 4> factor_classes; // human-readable factor tags
    std::string top_class;                     // "nilpotent" or "exceptional"
    bool exceptional = false;
    int fitting_length_top = 0;
    bool two_s4_minus = false; // is_2s4_minus(G / O(G))
};

// Deterministic search over the normal-subgroup lattice (sorted by order,
// then members); returns the first chain satisfying all factor conditions,
// or nullopt when none exists.
std::optional<SeriesCertificate> find_series_certificate(const GroupPtr& g,
                                                         const std::set<i64>& sigma);
// Errors: NotACutSet / MoreThanTwoComponents (via pi_partition), BoundExceeded.

// Re-checks every claim in the certificate from scratch against g.
// Returns "" when valid, otherwise a description of the first failure.
std::string revalidate_series_certificate(const GroupPtr& g, const SeriesCertificate& cert);

// Wire format used in certificate dumps (series/factor/top lines).
std::string certificate_to_text(const GroupPtr& g, const SeriesCertificate& cert);

// ---------------------------------------------------------------------------
// Length bounds for cut sets
// ---------------------------------------------------------------------------

struct LengthBoundReport {
    int sigma_len = 0;
    bool sigma_bound_ok = false; // sigma_len <= 3
    bool cut_vertex_case = false; // |sigma| == 1
    int fitting_len = 0;          // only filled in the cut-vertex case
    bool fitting_bound_ok = true; // <= 5, or == 6 with the order-48 exception
    bool exceptional_used = false;
    std::string detail;

    bool pass() const { return sigma_bound_ok && fitting_bound_ok; }
};

LengthBoundReport check_length_bounds(const GroupPtr& g, const std::set<i64>& sigma);
// Errors: NotACutSet / MoreThanTwoComponents.

} // namespace gkforge
