// Copyright 2026 The qgfft Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qgfft/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "qgfft/error.hpp"

namespace qg {

namespace {

std::pair<VertexId, VertexId> ordered(VertexId a, VertexId b) { return {std::min(a, b), std::max(a, b)}; }

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

bool parse_size(std::string_view tok, std::size_t &out) {
    if (tok.empty() || tok.front() == '-' || tok.front() == '+') return false;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return ec == std::errc() && p == tok.data() + tok.size();
}

}  // namespace

MetricGraph::MetricGraph(std::size_t vertex_count, std::vector<MetricEdge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
    if (vertex_count_ == 0) throw Error(ErrorCode::graph, "graph has no vertices");
    std::set<std::pair<VertexId, VertexId>> seen;
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        const auto &ed = edges_[e];
        if (ed.u >= vertex_count_ || ed.v >= vertex_count_)
            throw Error(ErrorCode::graph, "edge " + std::to_string(e) + " references a vertex outside 0.." +
                                              std::to_string(vertex_count_ - 1));
        if (ed.u == ed.v) throw Error(ErrorCode::graph, "edge " + std::to_string(e) + " is a self-loop at vertex " +
                                                            std::to_string(ed.u));
        if (ed.length == 0) throw Error(ErrorCode::graph, "edge " + std::to_string(e) + " has zero length");
        if (!seen.insert(ordered(ed.u, ed.v)).second)
            throw Error(ErrorCode::graph, "duplicate edge between vertices " + std::to_string(ed.u) + " and " +
                                              std::to_string(ed.v));
    }
    // Connectivity by union-find.
    std::vector<std::size_t> parent(vertex_count_);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t components = vertex_count_;
    for (const auto &ed : edges_) {
        auto a = find(ed.u), b = find(ed.v);
        if (a != b) {
            parent[a] = b;
            --components;
        }
    }
    if (components != 1)
        throw Error(ErrorCode::graph, "graph is disconnected (" + std::to_string(components) + " components)");
}

std::vector<std::size_t> MetricGraph::degrees() const {
    std::vector<std::size_t> deg(vertex_count_, 0);
    for (const auto &e : edges_) {
        ++deg[e.u];
        ++deg[e.v];
    }
    return deg;
}

std::size_t MetricGraph::total_length() const {
    std::size_t total = 0;
    for (const auto &e : edges_) total += e.length;
    return total;
}

MetricGraph parse_graph(std::string_view text) {
    std::size_t line_no = 0;
    bool have_header = false;
    std::size_t nv = 0;
    std::vector<MetricEdge> edges;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        auto toks = split_ws(line);
        if (toks.empty()) continue;
        auto fail = [&](const std::string &why) -> Error {
            return Error(ErrorCode::parse, "line " + std::to_string(line_no) + ": " + why);
        };
        if (!have_header) {
            if (toks.size() != 2 || toks[0] != "nv" || !parse_size(toks[1], nv))
                throw fail("expected `nv <vertex_count>`");
            have_header = true;
            continue;
        }
        MetricEdge e;
        if (toks.size() != 3 || !parse_size(toks[0], e.u) || !parse_size(toks[1], e.v) ||
            !parse_size(toks[2], e.length))
            throw fail("expected `u v length` with nonnegative integers");
        if (e.length == 0) throw fail("edge length must be positive");
        if (e.u == e.v) throw fail("self-loop at vertex " + std::to_string(e.u));
        if (e.u >= nv || e.v >= nv) throw fail("vertex id out of range for nv = " + std::to_string(nv));
        edges.push_back(e);
    }
    if (!have_header) throw Error(ErrorCode::parse, "missing `nv <vertex_count>` header");
    return MetricGraph(nv, std::move(edges));
}

MetricGraph load_graph(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::io, "cannot open graph file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parse_graph(ss.str());
    } catch (const Error &err) {
        throw Error(err.code(), path + ": " + err.what());
    }
}

std::string serialize_graph(const MetricGraph &g) {
    std::vector<MetricEdge> sorted = g.edges();
    for (auto &e : sorted) std::tie(e.u, e.v) = ordered(e.u, e.v);
    std::sort(sorted.begin(), sorted.end(),
              [](const MetricEdge &a, const MetricEdge &b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
    std::ostringstream out;
    out << "nv " << g.vertex_count() << '\n';
    for (const auto &e : sorted) out << e.u << ' ' << e.v << ' ' << e.length << '\n';
    return out.str();
}

std::size_t EquilateralGraph::min_degree() const {
    return degree_.empty() ? 0 : *std::min_element(degree_.begin(), degree_.end());
}

bool EquilateralGraph::bipartite() const {
    std::vector<std::vector<VertexId>> adj(vertex_count_);
    for (const auto &e : edges_) {
        adj[e.tail].push_back(e.head);
        adj[e.head].push_back(e.tail);
    }
    std::vector<int> colour(vertex_count_, -1);
    std::queue<VertexId> q;
    colour[0] = 0;
    q.push(0);
    while (!q.empty()) {
        auto v = q.front();
        q.pop();
        for (auto w : adj[v]) {
            if (colour[w] < 0) {
                colour[w] = 1 - colour[v];
                q.push(w);
            } else if (colour[w] == colour[v]) {
                return false;
            }
        }
    }
    return true;
}

EdgeIndex EquilateralGraph::find_edge(VertexId a, VertexId b) const {
    const auto key = ordered(a, b);
    auto it = std::lower_bound(lookup_.begin(), lookup_.end(), key,
                               [](const auto &entry, const auto &k) { return entry.first < k; });
    return (it != lookup_.end() && it->first == key) ? it->second : npos;
}

void EquilateralGraph::require_min_degree_two() const {
    for (std::size_t v = 0; v < degree_.size(); ++v)
        if (degree_[v] < 2)
            throw Error(ErrorCode::precondition,
                        "vertex " + std::to_string(v) + " has degree " + std::to_string(degree_[v]) +
                            "; the eigenfunction construction requires every vertex to have degree at least 2"
                            " (double the graph at its leaves first)");
}

EquilateralGraph subdivide(const MetricGraph &g) {
    EquilateralGraph eq;
    eq.original_vertex_count_ = g.vertex_count();
    std::size_t next = g.vertex_count();
    for (std::size_t me = 0; me < g.edge_count(); ++me) {
        const auto &e = g.edge(me);
        auto [lo, hi] = ordered(e.u, e.v);
        std::vector<VertexId> chain;
        chain.reserve(e.length + 1);
        chain.push_back(lo);
        for (std::size_t j = 1; j < e.length; ++j) chain.push_back(next++);
        chain.push_back(hi);
        std::vector<EdgeIndex> segs;
        for (std::size_t j = 0; j < e.length; ++j) {
            UnitEdge ue;
            ue.metric_edge = me;
            ue.position = j;
            ue.reversed = chain[j] > chain[j + 1];
            ue.tail = std::min(chain[j], chain[j + 1]);
            ue.head = std::max(chain[j], chain[j + 1]);
            segs.push_back(eq.edges_.size());
            eq.edges_.push_back(ue);
        }
        eq.chains_.push_back(std::move(chain));
        eq.segments_.push_back(std::move(segs));
    }
    eq.vertex_count_ = next;
    eq.degree_.assign(next, 0);
    for (std::size_t e = 0; e < eq.edges_.size(); ++e) {
        ++eq.degree_[eq.edges_[e].tail];
        ++eq.degree_[eq.edges_[e].head];
        eq.lookup_.push_back({{eq.edges_[e].tail, eq.edges_[e].head}, e});
    }
    std::sort(eq.lookup_.begin(), eq.lookup_.end());
    return eq;
}

DoubledGraph double_at_leaves(const MetricGraph &g) {
    const auto deg = g.degrees();
    const std::size_t nv = g.vertex_count();
    DoubledGraph out;
    out.vertex_mirror.resize(nv);
    std::size_t next = nv;
    bool any_leaf = false;
    for (std::size_t v = 0; v < nv; ++v) {
        if (deg[v] == 1) {
            any_leaf = true;
            out.vertex_mirror[v] = v;
        } else {
            out.vertex_mirror[v] = next++;
        }
    }
    if (!any_leaf) throw Error(ErrorCode::precondition, "graph has no degree-1 vertices; doubling is unnecessary");
    for (const auto &e : g.edges())
        if (deg[e.u] == 1 && deg[e.v] == 1)
            throw Error(ErrorCode::precondition, "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                                     " joins two leaves, so its mirror would be a parallel edge; "
                                                     "insert a vertex in its middle first");
    const std::size_t total = next;
    out.vertex_mirror.resize(total);
    for (std::size_t v = 0; v < nv; ++v)
        if (deg[v] != 1) out.vertex_mirror[out.vertex_mirror[v]] = v;

    std::vector<MetricEdge> edges = g.edges();
    const std::size_t ne = edges.size();
    out.edge_mirror.resize(2 * ne);
    for (std::size_t e = 0; e < ne; ++e) {
        MetricEdge m{out.vertex_mirror[edges[e].u], out.vertex_mirror[edges[e].v], edges[e].length};
        // Local coordinates run min -> max on both edges; the mirror is
        // flipped when the image of the original's min endpoint is the max.
        VertexId lo = std::min(edges[e].u, edges[e].v);
        bool flipped = out.vertex_mirror[lo] != std::min(m.u, m.v);
        edges.push_back(m);
        out.edge_mirror[e] = {ne + e, flipped};
        out.edge_mirror[ne + e] = {e, flipped};
    }
    out.graph = MetricGraph(total, std::move(edges));
    return out;
}

std::vector<MirrorEdge> mirror_unit_edges(const EquilateralGraph &eq, const DoubledGraph &doubled) {
    if (eq.metric_edge_count() != doubled.edge_mirror.size())
        throw Error(ErrorCode::dimension, "equilateral graph does not match the doubled graph");
    std::vector<MirrorEdge> out(eq.edge_count());
    for (std::size_t me = 0; me < eq.metric_edge_count(); ++me) {
        const auto [image, metric_flip] = doubled.edge_mirror[me];
        const auto &segs = eq.segments(me);
        const auto &img_segs = eq.segments(image);
        const std::size_t len = segs.size();
        for (std::size_t j = 0; j < len; ++j) {
            const std::size_t jj = metric_flip ? len - 1 - j : j;
            const auto &a = eq.edge(segs[j]);
            const auto &b = eq.edge(img_segs[jj]);
            // Piece orientation relative to chain, composed with the chain flip.
            bool flipped = (a.reversed != b.reversed) != metric_flip;
            out[segs[j]] = {img_segs[jj], flipped};
        }
    }
    return out;
}

EdgePath path_trace(const EquilateralGraph &g, const std::vector<VertexId> &vertices) {
    if (vertices.size() < 2) throw Error(ErrorCode::invalid_argument, "a path needs at least two vertices");
    EdgePath path;
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
        const auto a = vertices[i], b = vertices[i + 1];
        const auto e = (a < g.vertex_count() && b < g.vertex_count()) ? g.find_edge(a, b) : EquilateralGraph::npos;
        if (e == EquilateralGraph::npos)
            throw Error(ErrorCode::invalid_argument,
                        "vertices " + std::to_string(a) + " and " + std::to_string(b) + " are not adjacent");
        path.push_back({e, g.edge(e).tail != a});
    }
    return path;
}

EdgePath path_trace_metric(const EquilateralGraph &g, const std::vector<VertexId> &vertices) {
    if (vertices.size() < 2) throw Error(ErrorCode::invalid_argument, "a path needs at least two vertices");
    std::vector<VertexId> expanded{vertices.front()};
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
        const auto a = vertices[i], b = vertices[i + 1];
        std::size_t found = g.metric_edge_count();
        for (std::size_t me = 0; me < g.metric_edge_count(); ++me) {
            const auto &c = g.chain(me);
            if ((c.front() == a && c.back() == b) || (c.front() == b && c.back() == a)) {
                found = me;
                break;
            }
        }
        if (found == g.metric_edge_count())
            throw Error(ErrorCode::invalid_argument,
                        "vertices " + std::to_string(a) + " and " + std::to_string(b) + " are not joined by an edge");
        auto c = g.chain(found);
        if (c.front() != a) std::reverse(c.begin(), c.end());
        expanded.insert(expanded.end(), c.begin() + 1, c.end());
    }
    return path_trace(g, expanded);
}

}  // namespace qg
