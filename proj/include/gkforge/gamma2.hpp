#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gkforge/graph.hpp"

namespace gkforge {

// Two-sided cut structure: pi1 and pi2 are complete blocks, sigma1 is joined
// to all of pi1 and sigma2 to all of pi2, the bijection contributes the edges
// p-bij(p) for p outside the overlap, and the sigma part carries the declared
// internal edges.  The overlap rho = sigma1 ∩ sigma2 controls the shape of
// the sigma part: a single optional edge when sigma1 = sigma2, a 3-cycle when
// they share one vertex, a 4-cycle through both bijection edges when
// disjoint.
struct Gamma2Descriptor {
    std::vector<std::string> pi1;    // sorted, may be empty
    std::vector<std::string> pi2;    // sorted, may be empty
    std::vector<std::string> sigma1; // exactly two labels, sorted
    std::vector<std::string> sigma2; // exactly two labels, sorted
    std::map<std::string, std::string> bij; // sigma1 -> sigma2, fixes overlap
    std::vector<std::pair<std::string, std::string>> sigma_internal_edges; // normalized, sorted

    std::set<std::string> rho() const;        // sigma1 ∩ sigma2
    std::set<std::string> sigma_core() const; // sigma1 ∪ sigma2

    friend bool operator==(const Gamma2Descriptor&, const Gamma2Descriptor&) = default;
};

// Throws InvalidDescriptor naming the violated invariant.
void validate_descriptor(const Gamma2Descriptor& d);

Graph gamma2_generate(const Gamma2Descriptor& d); // InvalidDescriptor

// Bit-exact serialization: pi1/pi2/sigma1/sigma2/bij/sigma_edges lines in
// sorted order; parse accepts exactly that shape (ParseError with line
// numbers).
std::string gamma2_descriptor_to_text(const Gamma2Descriptor& d);
Gamma2Descriptor parse_gamma2_descriptor(const std::string& text);

// Deterministic search over sigma cores of size 2, 3, 4 and bipartitions of
// the remainder; returns the first descriptor (in search order) whose
// generated graph equals gamma label-for-label, or nullopt.  Empty pi sides
// are only admitted for disjoint sigma pairs, the one degenerate case the
// theory produces; in particular a wedge of two complete graphs is never
// recognized.
std::optional<Gamma2Descriptor> gamma2_recognize(const Graph& gamma);
// Errors: NotConnected; BoundExceeded beyond 12 vertices.

// Same search restricted to witnesses whose sigma core contains `cut`.
std::optional<Gamma2Descriptor> gamma2_recognize_with_cut(const Graph& gamma,
                                                          const std::set<std::string>& cut);

// Shape of a connected graph around its cut vertices: a wedge of two complete
// blocks sharing the unique cut vertex, two complete blocks joined by a
// single edge whose endpoints are the two cut vertices, or nonconforming.
struct CutVertexShape {
    enum class Kind { Wedge, Bridge, Nonconforming };
    Kind kind = Kind::Nonconforming;
    std::vector<std::string> cut_vertices;
    std::vector<std::vector<std::string>> blocks; // sorted, ordered by least vertex
    std::string detail;
};

std::string to_string(CutVertexShape::Kind kind); // "WEDGE" | "BRIDGE" | "NONCONFORMING"

CutVertexShape classify_cut_vertex_shape(const Graph& gamma);
// Errors: NotConnected; NoCutVertex.

// A graph is the prime graph of some finite solvable group iff its complement
// is both triangle-free and 3-colorable.
bool recognize_solvable_prime_graph(const Graph& gamma);
// Errors: BoundExceeded beyond 14 vertices.

// Counts of minimal cut sets by size, for every size 1..kmax (zeroes kept).
std::map<int, int> census_minimal_cut_sets(const Graph& gamma, int kmax = 3);
// Errors: NotConnected; BoundExceeded (from cut-set enumeration).

} // namespace gkforge
