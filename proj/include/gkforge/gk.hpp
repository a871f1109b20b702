#pragma once

#include <set>
#include <string>
#include <vector>

#include "gkforge/graph.hpp"
#include "gkforge/group.hpp"

namespace gkforge {

// Prime graph (Gruenberg-Kegel graph) of a group: vertices are the primes
// dividing the order, p and q are adjacent iff some element order is
// divisible by p*q.
Graph prime_graph(const GroupPtr& g);

std::string prime_label(i64 p);
std::set<i64> labels_to_primes(const std::vector<std::string>& labels);

// A set of primes sigma cuts the prime graph when removing sigma's vertices
// leaves at least two components.  Members of sigma outside the vertex set
// are ignored, so for a disconnected graph the empty set qualifies.
bool is_prime_cut_set(const Graph& gamma, const std::set<i64>& sigma);

// The two sides of the prime graph after removing a cut set.  pi1 is the side
// whose primes meet the Fitting subgroup of G/O_sigma(G); when that Fitting
// subgroup is a sigma-group the side holding the smallest remaining prime is
// labeled pi1 and fallback_used is set.
struct PiPartition {
    std::set<i64> sigma;
    std::set<i64> pi1;
    std::set<i64> pi2;
    bool fallback_used = false;
};

PiPartition pi_partition(const GroupPtr& g, const std::set<i64>& sigma);
// Errors: NotACutSet; MoreThanTwoComponents.

// For a solvable group with disconnected prime graph: exactly two components,
// both complete, and the group carries a Frobenius or 2-Frobenius witness.
struct GruenbergKegelReport {
    std::vector<std::vector<std::string>> component_vertices;
    bool two_components = false;
    bool both_complete = false;
    std::string witness_kind; // "frobenius", "2frobenius", or "" when absent
    std::string detail;

    bool pass() const { return two_components && both_complete && !witness_kind.empty(); }
};

GruenbergKegelReport check_gruenberg_kegel(const GroupPtr& g);
// Errors: NotDisconnected.

// Three-primes property: among any three primes of a solvable group, two are
// adjacent; equivalently the complement of the prime graph is triangle-free.
bool check_lucido(const GroupPtr& g);

} // namespace gkforge
