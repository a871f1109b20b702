#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gkforge/errors.hpp"

namespace gkforge {

// Total order on vertex labels: labels consisting entirely of digits compare
// numerically, everything else lexicographically.  All graph output (vertex
// lists, edge lists, text and DOT serializations) follows this order.
bool label_less(const std::string& a, const std::string& b);

// Simple undirected graph on string-labeled vertices.  No self-loops, no
// multi-edges.
class Graph {
public:
    Graph() = default;

    void add_vertex(std::string v);
    void add_edge(const std::string& a, const std::string& b); // vertices must exist

    bool has_vertex(const std::string& v) const;
    bool has_edge(const std::string& a, const std::string& b) const;

    size_t vertex_count() const { return adj_.size(); }
    size_t edge_count() const;

    std::vector<std::string> vertices() const;                      // label order
    std::vector<std::pair<std::string, std::string>> edges() const; // normalized, label order
    std::vector<std::string> neighbors(const std::string& v) const; // label order; UnknownVertex

    bool operator==(const Graph&) const = default;

private:
    std::map<std::string, std::set<std::string>> adj_;
};

// Induced subgraph on the vertices outside `drop` (UnknownVertex if `drop`
// mentions a vertex the graph lacks).
Graph remove_vertices(const Graph& g, const std::set<std::string>& drop);

// Connected components; each component in label order, components ordered by
// their least vertex.
std::vector<std::vector<std::string>> components(const Graph& g);

// A graph with at most one component (in particular the empty graph) counts
// as connected.
bool is_connected(const Graph& g);

bool is_complete(const Graph& g);
bool is_complete_on(const Graph& g, const std::vector<std::string>& subset); // UnknownVertex

Graph complement_graph(const Graph& g);

bool is_triangle_free(const Graph& g);

// Exact k-colorability by backtracking.
bool colorable(const Graph& g, int k);

// sigma is a cut set of a connected graph when removing it leaves at least
// two components.  NotConnected if g is disconnected, UnknownVertex if sigma
// mentions a vertex the graph lacks.
bool is_cut_set(const Graph& g, const std::set<std::string>& sigma);

// All inclusion-minimal cut sets, ordered by (size, vertex labels).
// NotConnected if g is disconnected; BoundExceeded beyond 14 vertices.
std::vector<std::set<std::string>> minimal_cut_sets(const Graph& g);

// Vertices whose removal disconnects the graph, in label order.
// NotConnected if g is disconnected.
std::vector<std::string> cut_vertices(const Graph& g);

// Isomorphism test with optional witness (vertex map a -> b).  BoundExceeded
// beyond 12 vertices.
bool graph_isomorphic(const Graph& a, const Graph& b,
                      std::map<std::string, std::string>* witness = nullptr);

// Line-oriented text format:
//   vertices: 2 3 5
//   edge: 2 3
// '#' starts a comment; blank lines are ignored; edges may only mention
// vertices already declared.  ParseError carries a 1-based line number.
Graph parse_graph(const std::string& text);
std::string graph_to_text(const Graph& g);

// Graphviz serialization, deterministically ordered.
std::string graph_to_dot(const Graph& g);

} // namespace gkforge
