#include "gkforge/graph.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <deque>
#include <functional>
#include <sstream>

namespace gkforge {

bool label_less(const std::string& a, const std::string& b) {
    auto numeric = [](const std::string& s) {
        if (s.empty()) return false;
        return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
    };
    if (numeric(a) && numeric(b)) {
        if (a.size() != b.size()) return a.size() < b.size();
    }
    return a < b;
}

void Graph::add_vertex(std::string v) { adj_.try_emplace(std::move(v)); }

void Graph::add_edge(const std::string& a, const std::string& b) {
    if (!has_vertex(a)) throw UnknownVertex("edge endpoint '" + a + "' is not a vertex");
    if (!has_vertex(b)) throw UnknownVertex("edge endpoint '" + b + "' is not a vertex");
    if (a == b) throw Error("self-loop on vertex '" + a + "' is not allowed");
    adj_[a].insert(b);
    adj_[b].insert(a);
}

bool Graph::has_vertex(const std::string& v) const { return adj_.count(v) > 0; }

bool Graph::has_edge(const std::string& a, const std::string& b) const {
    auto it = adj_.find(a);
    return it != adj_.end() && it->second.count(b) > 0;
}

size_t Graph::edge_count() const {
    size_t twice = 0;
    for (const auto& [v, nb] : adj_) twice += nb.size();
    return twice / 2;
}

std::vector<std::string> Graph::vertices() const {
    std::vector<std::string> out;
    for (const auto& [v, nb] : adj_) out.push_back(v);
    std::sort(out.begin(), out.end(), label_less);
    return out;
}

std::vector<std::pair<std::string, std::string>> Graph::edges() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [v, nb] : adj_)
        for (const auto& w : nb)
            if (label_less(v, w)) out.emplace_back(v, w);
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        if (x.first != y.first) return label_less(x.first, y.first);
        return label_less(x.second, y.second);
    });
    return out;
}

std::vector<std::string> Graph::neighbors(const std::string& v) const {
    auto it = adj_.find(v);
    if (it == adj_.end()) throw UnknownVertex("no vertex '" + v + "'");
    std::vector<std::string> out(it->second.begin(), it->second.end());
    std::sort(out.begin(), out.end(), label_less);
    return out;
}

Graph remove_vertices(const Graph& g, const std::set<std::string>& drop) {
    for (const auto& v : drop)
        if (!g.has_vertex(v)) throw UnknownVertex("cannot remove unknown vertex '" + v + "'");
    Graph out;
    for (const auto& v : g.vertices())
        if (!drop.count(v)) out.add_vertex(v);
    for (const auto& [a, b] : g.edges())
        if (!drop.count(a) && !drop.count(b)) out.add_edge(a, b);
    return out;
}

std::vector<std::vector<std::string>> components(const Graph& g) {
    std::vector<std::vector<std::string>> comps;
    std::set<std::string> seen;
    for (const auto& v : g.vertices()) {
        if (seen.count(v)) continue;
        std::vector<std::string> comp;
        std::deque<std::string> queue{v};
        seen.insert(v);
        while (!queue.empty()) {
            std::string cur = queue.front();
            queue.pop_front();
            comp.push_back(cur);
            for (const auto& w : g.neighbors(cur))
                if (seen.insert(w).second) queue.push_back(w);
        }
        std::sort(comp.begin(), comp.end(), label_less);
        comps.push_back(std::move(comp));
    }
    // visiting vertices in label order makes components come out ordered by
    // their least vertex already, but keep it explicit
    std::sort(comps.begin(), comps.end(),
              [](const auto& a, const auto& b) { return label_less(a.front(), b.front()); });
    return comps;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

bool is_complete(const Graph& g) {
    return g.edge_count() * 2 == g.vertex_count() * (g.vertex_count() - 1) ||
           g.vertex_count() <= 1;
}

bool is_complete_on(const Graph& g, const std::vector<std::string>& subset) {
    for (const auto& v : subset)
        if (!g.has_vertex(v)) throw UnknownVertex("no vertex '" + v + "'");
    for (size_t i = 0; i < subset.size(); ++i)
        for (size_t j = i + 1; j < subset.size(); ++j)
            if (subset[i] != subset[j] && !g.has_edge(subset[i], subset[j])) return false;
    return true;
}

Graph complement_graph(const Graph& g) {
    Graph out;
    auto verts = g.vertices();
    for (const auto& v : verts) out.add_vertex(v);
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (!g.has_edge(verts[i], verts[j])) out.add_edge(verts[i], verts[j]);
    return out;
}

bool is_triangle_free(const Graph& g) {
    auto verts = g.vertices();
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j) {
            if (!g.has_edge(verts[i], verts[j])) continue;
            for (size_t k = j + 1; k < verts.size(); ++k)
                if (g.has_edge(verts[i], verts[k]) && g.has_edge(verts[j], verts[k])) return false;
        }
    return true;
}

bool colorable(const Graph& g, int k) {
    if (k < 0) throw Error("color count must be nonnegative");
    auto verts = g.vertices();
    if (verts.empty()) return true;
    if (k == 0) return false;
    const int n = static_cast<int>(verts.size());
    std::map<std::string, int> pos;
    for (int i = 0; i < n; ++i) pos[verts[static_cast<size_t>(i)]] = i;
    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    for (const auto& [a, b] : g.edges()) {
        adj[static_cast<size_t>(pos[a])].push_back(pos[b]);
        adj[static_cast<size_t>(pos[b])].push_back(pos[a]);
    }
    std::vector<int> color(static_cast<size_t>(n), -1);
    std::function<bool(int)> place = [&](int v) -> bool {
        if (v == n) return true;
        int max_color = -1;
        for (int u = 0; u < v; ++u) max_color = std::max(max_color, color[static_cast<size_t>(u)]);
        // allow at most one fresh color beyond those used so far
        int tries = std::min(k - 1, max_color + 1);
        for (int c = 0; c <= tries; ++c) {
            bool ok = true;
            for (int u : adj[static_cast<size_t>(v)])
                if (color[static_cast<size_t>(u)] == c) {
                    ok = false;
                    break;
                }
            if (ok) {
                color[static_cast<size_t>(v)] = c;
                if (place(v + 1)) return true;
                color[static_cast<size_t>(v)] = -1;
            }
        }
        return false;
    };
    return place(0);
}

namespace {

struct BitGraph {
    std::vector<std::string> verts;
    std::vector<uint32_t> adj; // adjacency bitmask per vertex
    uint32_t full = 0;

    explicit BitGraph(const Graph& g) : verts(g.vertices()) {
        adj.assign(verts.size(), 0);
        std::map<std::string, int> pos;
        for (size_t i = 0; i < verts.size(); ++i) pos[verts[i]] = static_cast<int>(i);
        for (const auto& [a, b] : g.edges()) {
            adj[static_cast<size_t>(pos[a])] |= 1u << pos[b];
            adj[static_cast<size_t>(pos[b])] |= 1u << pos[a];
        }
        if (!verts.empty()) full = (1u << verts.size()) - 1;
    }

    // number of connected components of the induced subgraph on `mask`
    int component_count(uint32_t mask) const {
        int count = 0;
        uint32_t left = mask;
        while (left) {
            ++count;
            uint32_t comp = left & (~left + 1); // lowest remaining vertex
            for (;;) {
                uint32_t grown = comp;
                uint32_t scan = comp;
                while (scan) {
                    int v = std::countr_zero(scan);
                    scan &= scan - 1;
                    grown |= adj[static_cast<size_t>(v)] & mask;
                }
                if (grown == comp) break;
                comp = grown;
            }
            left &= ~comp;
        }
        return count;
    }
};

} // namespace

bool is_cut_set(const Graph& g, const std::set<std::string>& sigma) {
    for (const auto& v : sigma)
        if (!g.has_vertex(v)) throw UnknownVertex("cut-set member '" + v + "' is not a vertex");
    if (!is_connected(g)) throw NotConnected("cut sets are defined for connected graphs");
    return components(remove_vertices(g, sigma)).size() >= 2;
}

std::vector<std::set<std::string>> minimal_cut_sets(const Graph& g) {
    if (!is_connected(g)) throw NotConnected("cut sets are defined for connected graphs");
    if (g.vertex_count() > 14)
        throw BoundExceeded("minimal cut-set enumeration supports at most 14 vertices, got " +
                            std::to_string(g.vertex_count()));
    BitGraph bg(g);
    const uint32_t full = bg.full;
    const size_t total = static_cast<size_t>(full) + 1;
    std::vector<char> cut(total, 0);
    for (uint32_t mask = 1; mask < total; ++mask) {
        uint32_t rest = full & ~mask;
        if (!rest) continue;
        cut[mask] = bg.component_count(rest) >= 2;
    }
    std::vector<uint32_t> minimal;
    for (uint32_t mask = 1; mask < total; ++mask) {
        if (!cut[mask]) continue;
        bool dominated = false;
        for (uint32_t sub = (mask - 1) & mask; sub; sub = (sub - 1) & mask)
            if (cut[sub]) {
                dominated = true;
                break;
            }
        if (!dominated) minimal.push_back(mask);
    }
    std::vector<std::vector<std::string>> as_lists;
    for (uint32_t mask : minimal) {
        std::vector<std::string> lst;
        for (size_t i = 0; i < bg.verts.size(); ++i)
            if (mask & (1u << i)) lst.push_back(bg.verts[i]);
        as_lists.push_back(std::move(lst));
    }
    std::sort(as_lists.begin(), as_lists.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), label_less);
    });
    std::vector<std::set<std::string>> out;
    for (auto& lst : as_lists) out.emplace_back(lst.begin(), lst.end());
    return out;
}

std::vector<std::string> cut_vertices(const Graph& g) {
    if (!is_connected(g)) throw NotConnected("cut vertices are defined for connected graphs");
    std::vector<std::string> out;
    for (const auto& v : g.vertices())
        if (components(remove_vertices(g, {v})).size() >= 2) out.push_back(v);
    return out;
}

bool graph_isomorphic(const Graph& a, const Graph& b, std::map<std::string, std::string>* witness) {
    if (a.vertex_count() > 12 || b.vertex_count() > 12)
        throw BoundExceeded("graph isomorphism supports at most 12 vertices");
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;

    auto va = a.vertices();
    auto vb = b.vertices();
    auto deg = [](const Graph& g, const std::string& v) { return g.neighbors(v).size(); };
    std::vector<size_t> da, db;
    for (const auto& v : va) da.push_back(deg(a, v));
    for (const auto& v : vb) db.push_back(deg(b, v));
    {
        auto sa = da, sb = db;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }

    const size_t n = va.size();
    std::vector<int> image(n, -1);
    std::vector<char> used(n, 0);
    std::function<bool(size_t)> place = [&](size_t i) -> bool {
        if (i == n) return true;
        for (size_t j = 0; j < n; ++j) {
            if (used[j] || da[i] != db[j]) continue;
            bool ok = true;
            for (size_t p = 0; p < i && ok; ++p)
                if (a.has_edge(va[i], va[p]) != b.has_edge(vb[j], vb[static_cast<size_t>(image[p])]))
                    ok = false;
            if (!ok) continue;
            image[i] = static_cast<int>(j);
            used[j] = 1;
            if (place(i + 1)) return true;
            image[i] = -1;
            used[j] = 0;
        }
        return false;
    };
    if (!place(0)) return false;
    if (witness) {
        witness->clear();
        for (size_t i = 0; i < n; ++i) (*witness)[va[i]] = vb[static_cast<size_t>(image[i])];
    }
    return true;
}

Graph parse_graph(const std::string& text) {
    Graph g;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& what) {
        throw ParseError("line " + std::to_string(lineno) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        if (head == "vertices:") {
            std::string v;
            while (ls >> v) g.add_vertex(v);
        } else if (head == "edge:") {
            std::string x, y, extra;
            if (!(ls >> x >> y)) fail("edge line needs two endpoints");
            if (ls >> extra) fail("edge line has trailing tokens");
            if (!g.has_vertex(x)) fail("edge endpoint '" + x + "' not declared");
            if (!g.has_vertex(y)) fail("edge endpoint '" + y + "' not declared");
            if (x == y) fail("self-loops are not allowed");
            g.add_edge(x, y);
        } else {
            fail("unknown directive '" + head + "'");
        }
    }
    return g;
}

std::string graph_to_text(const Graph& g) {
    std::ostringstream os;
    os << "vertices:";
    for (const auto& v : g.vertices()) os << ' ' << v;
    os << '\n';
    for (const auto& [a, b] : g.edges()) os << "edge: " << a << ' ' << b << '\n';
    return os.str();
}

std::string graph_to_dot(const Graph& g) {
    std::ostringstream os;
    os << "graph G {\n";
    for (const auto& v : g.vertices()) os << "  \"" << v << "\";\n";
    for (const auto& [a, b] : g.edges()) os << "  \"" << a << "\" -- \"" << b << "\";\n";
    os << "}\n";
    return os.str();
}

} // namespace gkforge
