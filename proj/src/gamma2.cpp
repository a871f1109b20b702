#include "gkforge/gamma2.hpp"

#include <algorithm>
#include <sstream>

namespace gkforge {

std::set<std::string> Gamma2Descriptor::rho() const {
    std::set<std::string> out;
    for (const auto& v : sigma1)
        if (std::find(sigma2.begin(), sigma2.end(), v) != sigma2.end()) out.insert(v);
    return out;
}

std::set<std::string> Gamma2Descriptor::sigma_core() const {
    std::set<std::string> out(sigma1.begin(), sigma1.end());
    out.insert(sigma2.begin(), sigma2.end());
    return out;
}

namespace {

using Edge = std::pair<std::string, std::string>;

Edge normalized(const std::string& a, const std::string& b) {
    return label_less(a, b) ? Edge{a, b} : Edge{b, a};
}

bool sorted_distinct(const std::vector<std::string>& vs) {
    for (size_t i = 0; i + 1 < vs.size(); ++i)
        if (!label_less(vs[i], vs[i + 1])) return false;
    return true;
}

// The sigma part of the generated graph: bijection edges plus declared
// internal edges orientiert as a set of normalized pairs.
std::set<Edge> sigma_part_edges(const Gamma2Descriptor& d) {
    std::set<Edge> edges;
    std::set<std::string> overlap = d.rho();
    for (const auto& [from, to] : d.bij)
        if (!overlap.count(from)) edges.insert(normalized(from, to));
    for (const auto& e : d.sigma_internal_edges) edges.insert(e);
    return edges;
}

} // namespace

void validate_descriptor(const Gamma2Descriptor& d) {
    if (d.sigma1.size() != 2 || d.sigma1[0] == d.sigma1[1] || !sorted_distinct(d.sigma1))
        throw InvalidDescriptor("sigma1 must list exactly two distinct vertices in order");
    if (d.sigma2.size() != 2 || d.sigma2[0] == d.sigma2[1] || !sorted_distinct(d.sigma2))
        throw InvalidDescriptor("sigma2 must list exactly two distinct vertices in order");
    if (!sorted_distinct(d.pi1)) throw InvalidDescriptor("pi1 must be sorted without repeats");
    if (!sorted_distinct(d.pi2)) throw InvalidDescriptor("pi2 must be sorted without repeats");

    std::set<std::string> core = d.sigma_core();
    std::set<std::string> pi1_set(d.pi1.begin(), d.pi1.end());
    for (const auto& v : d.pi2)
        if (pi1_set.count(v)) throw InvalidDescriptor("pi1 and pi2 must be disjoint");
    for (const auto& v : d.pi1)
        if (core.count(v)) throw InvalidDescriptor("pi1 must avoid the sigma core");
    for (const auto& v : d.pi2)
        if (core.count(v)) throw InvalidDescriptor("pi2 must avoid the sigma core");

    // The bijection must map sigma1 onto sigma2 and fix the overlap.
    if (d.bij.size() != 2) throw InvalidDescriptor("bij must have exactly two entries");
    std::set<std::string> image;
    for (const auto& [from, to] : d.bij) {
        if (std::find(d.sigma1.begin(), d.sigma1.end(), from) == d.sigma1.end())
            throw InvalidDescriptor("bij domain must be sigma1");
        if (std::find(d.sigma2.begin(), d.sigma2.end(), to) == d.sigma2.end())
            throw InvalidDescriptor("bij image must lie in sigma2");
        image.insert(to);
    }
    if (image.size() != 2) throw InvalidDescriptor("bij must be injective");
    std::set<std::string> overlap = d.rho();
    for (const auto& v : overlap) {
        auto it = d.bij.find(v);
        if (it == d.bij.end() || it->second != v)
            throw InvalidDescriptor("bij must fix the shared sigma vertices");
    }

    // Internal sigma edges: normalized, sorted, inside the core, distinct
    // from the bijection edges.
    std::set<Edge> bij_edges;
    for (const auto& [from, to] : d.bij)
        if (!overlap.count(from)) bij_edges.insert(normalized(from, to));
    const auto& internal = d.sigma_internal_edges;
    for (size_t i = 0; i < internal.size(); ++i) {
        const auto& [a, b] = internal[i];
        if (a == b) throw InvalidDescriptor("sigma edges must join two distinct vertices");
        if (!label_less(a, b))
            throw InvalidDescriptor("sigma edges must be stored with endpoints in order");
        if (!core.count(a) || !core.count(b))
            throw InvalidDescriptor("sigma edge endpoints must lie in the sigma core");
        if (i > 0 && !(internal[i - 1] < internal[i]))
            throw InvalidDescriptor("sigma edges must be sorted without repeats");
        if (bij_edges.count(internal[i]))
            throw InvalidDescriptor("sigma edges must not duplicate a bijection edge");
    }

    // Shape of the sigma part by overlap size.
    std::set<Edge> part = sigma_part_edges(d);
    if (overlap.size() == 2) {
        if (d.sigma1 != d.sigma2)
            throw InvalidDescriptor("a two-vertex overlap forces sigma1 = sigma2");
        if (!part.empty() && part != std::set<Edge>{normalized(d.sigma1[0], d.sigma1[1])})
            throw InvalidDescriptor(
                "with sigma1 = sigma2 the only internal edge joins the two sigma vertices");
    } else if (overlap.size() == 1) {
        if (core.size() != 3 || part.size() != 3)
            throw InvalidDescriptor("a one-vertex overlap requires a 3-cycle on the sigma part");
        // Three distinct normalized edges on three vertices form the 3-cycle.
    } else {
        // Disjoint sigma pair: the four sigma vertices must carry a 4-cycle
        // through both bijection edges (opposite sides).
        if (core.size() != 4 || part.size() != 4)
            throw InvalidDescriptor("a disjoint sigma pair requires a 4-cycle on the sigma part");
        std::map<std::string, int> degree;
        for (const auto& [a, b] : part) {
            ++degree[a];
            ++degree[b];
        }
        for (const auto& v : core)
            if (degree[v] != 2)
                throw InvalidDescriptor(
                    "a disjoint sigma pair requires a 4-cycle on the sigma part");
        // Degree-2 everywhere on 4 vertices with 4 edges is a 4-cycle or two
        // parallel edges doubled; edges are distinct, so only the 4-cycle and
        // a pair of disjoint 2-cycles remain, and 2-cycles need repeats.
        // Connectivity rules out two disjoint edges counted twice.
        std::set<std::string> seen;
        std::vector<std::string> stack{*core.begin()};
        while (!stack.empty()) {
            std::string v = stack.back();
            stack.pop_back();
            if (!seen.insert(v).second) continue;
            for (const auto& [a, b] : part) {
                if (a == v) stack.push_back(b);
                if (b == v) stack.push_back(a);
            }
        }
        if (seen.size() != 4)
            throw InvalidDescriptor("a disjoint sigma pair requires a 4-cycle on the sigma part");
    }
}

Graph gamma2_generate(const Gamma2Descriptor& d) {
    validate_descriptor(d);
    Graph g;
    for (const auto& v : d.pi1) g.add_vertex(v);
    for (const auto& v : d.pi2) g.add_vertex(v);
    for (const auto& v : d.sigma_core()) g.add_vertex(v);

    for (size_t i = 0; i < d.pi1.size(); ++i)
        for (size_t j = i + 1; j < d.pi1.size(); ++j) g.add_edge(d.pi1[i], d.pi1[j]);
    for (size_t i = 0; i < d.pi2.size(); ++i)
        for (size_t j = i + 1; j < d.pi2.size(); ++j) g.add_edge(d.pi2[i], d.pi2[j]);
    for (const auto& s : d.sigma1)
        for (const auto& v : d.pi1) g.add_edge(s, v);
    for (const auto& s : d.sigma2)
        for (const auto& v : d.pi2) g.add_edge(s, v);
    for (const auto& [a, b] : sigma_part_edges(d)) g.add_edge(a, b);
    return g;
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

std::string gamma2_descriptor_to_text(const Gamma2Descriptor& d) {
    std::ostringstream out;
    auto emit_list = [&out](const char* key, const std::vector<std::string>& vs) {
        out << key << ":";
        for (const auto& v : vs) out << " " << v;
        out << "\n";
    };
    emit_list("pi1", d.pi1);
    emit_list("pi2", d.pi2);
    emit_list("sigma1", d.sigma1);
    emit_list("sigma2", d.sigma2);
    out << "bij:";
    for (const auto& [from, to] : d.bij) out << " " << from << "->" << to;
    out << "\n";
    out << "sigma_edges:";
    for (size_t i = 0; i < d.sigma_internal_edges.size(); ++i) {
        const auto& [a, b] = d.sigma_internal_edges[i];
        out << (i == 0 ? " " : "; ") << a << " " << b;
    }
    out << "\n";
    return out.str();
}

namespace {

std::vector<std::string> split_tokens(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

} // namespace

Gamma2Descriptor parse_gamma2_descriptor(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) lines.push_back(cur);

    const char* keys[6] = {"pi1", "pi2", "sigma1", "sigma2", "bij", "sigma_edges"};
    if (lines.size() != 6)
        throw ParseError("descriptor must have exactly 6 lines, got " +
                         std::to_string(lines.size()));

    Gamma2Descriptor d;
    for (int i = 0; i < 6; ++i) {
        const std::string& line = lines[static_cast<size_t>(i)];
        std::string prefix = std::string(keys[i]) + ":";
        if (line.compare(0, prefix.size(), prefix) != 0)
            throw ParseError("line " + std::to_string(i + 1) + ": expected '" + prefix + "'");
        std::string rest = line.substr(prefix.size());
        if (i < 4) {
            std::vector<std::string> toks = split_tokens(rest);
            if (i == 0) d.pi1 = toks;
            if (i == 1) d.pi2 = toks;
            if (i == 2) d.sigma1 = toks;
            if (i == 3) d.sigma2 = toks;
        } else if (i == 4) {
            for (const std::string& tok : split_tokens(rest)) {
                size_t arrow = tok.find("->");
                if (arrow == std::string::npos || arrow == 0 || arrow + 2 >= tok.size())
                    throw ParseError("line 5: malformed bijection token '" + tok + "'");
                std::string from = tok.substr(0, arrow);
                std::string to = tok.substr(arrow + 2);
                if (d.bij.count(from))
                    throw ParseError("line 5: repeated bijection source '" + from + "'");
                d.bij[from] = to;
            }
        } else {
            // "a b; c d" — split on ';' then on spaces.
            std::string chunk;
            std::vector<std::string> chunks;
            for (char c : rest) {
                if (c == ';') {
                    chunks.push_back(chunk);
                    chunk.clear();
                } else {
                    chunk += c;
                }
            }
            if (!split_tokens(chunk).empty() || !chunks.empty()) chunks.push_back(chunk);
            for (const std::string& e : chunks) {
                std::vector<std::string> ends = split_tokens(e);
                if (ends.size() != 2)
                    throw ParseError("line 6: each sigma edge needs exactly two endpoints");
                d.sigma_internal_edges.emplace_back(ends[0], ends[1]);
            }
        }
    }
    return d;
}

// ---------------------------------------------------------------------------
// Recognition
// ---------------------------------------------------------------------------

namespace {

std::optional<Gamma2Descriptor> recognize_impl(const Graph& gamma,
                                               const std::set<std::string>* cut) {
    if (!is_connected(gamma))
        throw NotConnected("recognition requires a connected graph");
    if (gamma.vertex_count() > 12)
        throw BoundExceeded("recognition is limited to 12 vertices");

    std::vector<std::string> verts = gamma.vertices();
    size_t n = verts.size();
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

    for (size_t core_size = 2; core_size <= 4; ++core_size) {
        for (const auto& [a1, b1] : pairs) {
            std::vector<std::string> sigma1 = {verts[a1], verts[b1]};
            if (cut != nullptr && cut->size() > core_size) break;
            for (const auto& [a2, b2] : pairs) {
                std::vector<std::string> sigma2 = {verts[a2], verts[b2]};
                std::set<std::string> core(sigma1.begin(), sigma1.end());
                core.insert(sigma2.begin(), sigma2.end());
                if (core.size() != core_size) continue;
                if (cut != nullptr) {
                    bool contained = true;
                    for (const auto& v : *cut)
                        if (!core.count(v)) contained = false;
                    if (!contained) continue;
                }
                std::set<std::string> overlap;
                for (const auto& v : sigma1)
                    if (v == sigma2[0] || v == sigma2[1]) overlap.insert(v);

                // Candidate bijections sigma1 -> sigma2 fixing the overlap.
                std::vector<std::map<std::string, std::string>> bijections;
                if (overlap.size() == 2) {
                    bijections.push_back({{sigma1[0], sigma1[0]}, {sigma1[1], sigma1[1]}});
                } else if (overlap.size() == 1) {
                    std::string shared = *overlap.begin();
                    std::string from = sigma1[0] == shared ? sigma1[1] : sigma1[0];
                    std::string to = sigma2[0] == shared ? sigma2[1] : sigma2[0];
                    bijections.push_back({{shared, shared}, {from, to}});
                } else {
                    bijections.push_back({{sigma1[0], sigma2[0]}, {sigma1[1], sigma2[1]}});
                    bijections.push_back({{sigma1[0], sigma2[1]}, {sigma1[1], sigma2[0]}});
                }

                for (const auto& bij : bijections) {
                    // Every bijection edge must already be present.
                    bool edges_present = true;
                    for (const auto& [from, to] : bij)
                        if (!overlap.count(from) && !gamma.has_edge(from, to))
                            edges_present = false;
                    if (!edges_present) continue;

                    // Internal sigma edges are whatever the graph carries on
                    // the core beyond the bijection edges.
                    std::vector<Edge> internal;
                    for (auto it = core.begin(); it != core.end(); ++it)
                        for (auto jt = std::next(it); jt != core.end(); ++jt) {
                            if (!gamma.has_edge(*it, *jt)) continue;
                            Edge e = normalized(*it, *jt);
                            bool is_bij = false;
                            for (const auto& [from, to] : bij)
                                if (!overlap.count(from) && normalized(from, to) == e)
                                    is_bij = true;
                            if (!is_bij) internal.push_back(e);
                        }
                    std::sort(internal.begin(), internal.end());

                    std::vector<std::vector<std::string>> comps =
                        components(remove_vertices(gamma, core));
                    if (comps.size() > 2) continue;

                    for (unsigned mask = 0; mask < (1u << comps.size()); ++mask) {
                        std::vector<std::string> pi1, pi2;
                        for (size_t c = 0; c < comps.size(); ++c) {
                            auto& side = (mask >> c) & 1u ? pi1 : pi2;
                            side.insert(side.end(), comps[c].begin(), comps[c].end());
                        }
                        std::sort(pi1.begin(), pi1.end(), label_less);
                        std::sort(pi2.begin(), pi2.end(), label_less);
                        if ((pi1.empty() || pi2.empty()) && !overlap.empty()) continue;

                        Gamma2Descriptor d;
                        d.pi1 = std::move(pi1);
                        d.pi2 = std::move(pi2);
                        d.sigma1 = sigma1;
                        d.sigma2 = sigma2;
                        d.bij = bij;
                        d.sigma_internal_edges = internal;
                        try {
                            if (gamma2_generate(d) == gamma) return d;
                        } catch (const InvalidDescriptor&) {
                        }
                    }
                }
            }
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<Gamma2Descriptor> gamma2_recognize(const Graph& gamma) {
    return recognize_impl(gamma, nullptr);
}

std::optional<Gamma2Descriptor> gamma2_recognize_with_cut(const Graph& gamma,
                                                          const std::set<std::string>& cut) {
    return recognize_impl(gamma, &cut);
}

// ---------------------------------------------------------------------------
// Cut-vertex shapes
// ---------------------------------------------------------------------------

std::string to_string(CutVertexShape::Kind kind) {
    switch (kind) {
        case CutVertexShape::Kind::Wedge: return "WEDGE";
        case CutVertexShape::Kind::Bridge: return "BRIDGE";
        case CutVertexShape::Kind::Nonconforming: return "NONCONFORMING";
    }
    return "NONCONFORMING";
}

namespace {

std::vector<std::string> sorted_block(std::vector<std::string> block) {
    std::sort(block.begin(), block.end(), label_less);
    return block;
}

} // namespace

CutVertexShape classify_cut_vertex_shape(const Graph& gamma) {
    std::vector<std::string> cv = cut_vertices(gamma);
    if (cv.empty()) throw NoCutVertex("graph has no cut vertex");

    CutVertexShape shape;
    shape.cut_vertices = cv;

    if (cv.size() == 1) {
        const std::string& v = cv[0];
        auto comps = components(remove_vertices(gamma, {v}));
        if (comps.size() != 2) {
            shape.detail = "removing the cut vertex leaves " + std::to_string(comps.size()) +
                           " components";
            return shape;
        }
        std::vector<std::vector<std::string>> blocks;
        for (auto& comp : comps) {
            comp.push_back(v);
            blocks.push_back(sorted_block(comp));
        }
        for (const auto& block : blocks) {
            if (!is_complete_on(gamma, block)) {
                shape.blocks = blocks;
                shape.detail = "a block through the cut vertex is not complete";
                return shape;
            }
        }
        shape.kind = CutVertexShape::Kind::Wedge;
        shape.blocks = blocks;
        shape.detail = "wedge at " + v;
        return shape;
    }

    if (cv.size() == 2) {
        const std::string& a = cv[0];
        const std::string& b = cv[1];
        if (!gamma.has_edge(a, b)) {
            shape.detail = "the two cut vertices are not adjacent";
            return shape;
        }
        auto comps = components(remove_vertices(gamma, {a}));
        if (comps.size() != 2) {
            shape.detail = "removing one cut vertex leaves " + std::to_string(comps.size()) +
                           " components";
            return shape;
        }
        std::vector<std::string> block_b, block_a;
        for (auto& comp : comps) {
            bool holds_b = std::find(comp.begin(), comp.end(), b) != comp.end();
            if (holds_b) {
                block_b = comp;
            } else {
                block_a = comp;
                block_a.push_back(a);
            }
        }
        if (block_b.empty() || block_a.empty()) {
            shape.detail = "cut vertices do not separate two blocks";
            return shape;
        }
        std::vector<std::vector<std::string>> blocks = {sorted_block(block_a),
                                                        sorted_block(block_b)};
        std::sort(blocks.begin(), blocks.end(),
                  [](const auto& x, const auto& y) { return label_less(x[0], y[0]); });
        shape.blocks = blocks;
        for (const auto& block : blocks) {
            if (!is_complete_on(gamma, block)) {
                shape.detail = "a block beside the bridge is not complete";
                return shape;
            }
        }
        int cross = 0;
        for (const auto& x : blocks[0])
            for (const auto& y : blocks[1])
                if (gamma.has_edge(x, y)) ++cross;
        if (cross != 1) {
            shape.detail = "blocks are joined by " + std::to_string(cross) +
                           " edges instead of one";
            return shape;
        }
        shape.kind = CutVertexShape::Kind::Bridge;
        shape.detail = "bridge " + a + "-" + b;
        return shape;
    }

    shape.detail = std::to_string(cv.size()) + " cut vertices";
    return shape;
}

// ---------------------------------------------------------------------------
// Solvable prime-graph recognition and cut-set census
// ---------------------------------------------------------------------------

bool recognize_solvable_prime_graph(const Graph& gamma) {
    if (gamma.vertex_count() > 14)
        throw BoundExceeded("solvable prime-graph recognition is limited to 14 vertices");
    Graph comp = complement_graph(gamma);
    return is_triangle_free(comp) && colorable(comp, 3);
}

std::map<int, int> census_minimal_cut_sets(const Graph& gamma, int kmax) {
    std::vector<std::set<std::string>> cuts = minimal_cut_sets(gamma);
    std::map<int, int> out;
    for (int k = 1; k <= kmax; ++k) out[k] = 0;
    for (const auto& c : cuts) {
        int size = static_cast<int>(c.size());
        if (size <= kmax) ++out[size];
    }
    return out;
}

} // namespace gkforge
