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

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qg {

using VertexId = std::size_t;
using EdgeIndex = std::size_t;

struct MetricEdge {
    VertexId u = 0;
    VertexId v = 0;
    std::size_t length = 1;

    bool operator==(const MetricEdge &) const = default;
};

/// Connected simple graph whose edges carry positive integer lengths.
/// Edge indices follow input order; serialization sorts them.
class MetricGraph {
public:
    MetricGraph() = default;
    /// Validates connectivity, simplicity and positive lengths.
    MetricGraph(std::size_t vertex_count, std::vector<MetricEdge> edges);

    std::size_t vertex_count() const { return vertex_count_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<MetricEdge> &edges() const { return edges_; }
    const MetricEdge &edge(EdgeIndex e) const { return edges_.at(e); }
    std::vector<std::size_t> degrees() const;
    std::size_t total_length() const;

    bool operator==(const MetricGraph &) const = default;

private:
    std::size_t vertex_count_ = 0;
    std::vector<MetricEdge> edges_;
};

MetricGraph parse_graph(std::string_view text);
MetricGraph load_graph(const std::string &path);
/// `nv <n>` followed by `min max length` lines sorted by (min, max).
std::string serialize_graph(const MetricGraph &g);

/// Unit edge, always stored with tail < head.
struct UnitEdge {
    VertexId tail = 0;
    VertexId head = 0;
    EdgeIndex metric_edge = 0;
    /// Position of this piece along the chain running min(u,v) -> max(u,v).
    std::size_t position = 0;
    /// True when tail -> head runs against the chain direction.
    bool reversed = false;

    bool operator==(const UnitEdge &) const = default;
};

/// Unit-length graph produced by subdivision; the computational domain.
class EquilateralGraph {
public:
    EquilateralGraph() = default;

    std::size_t vertex_count() const { return vertex_count_; }
    std::size_t original_vertex_count() const { return original_vertex_count_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<UnitEdge> &edges() const { return edges_; }
    const UnitEdge &edge(EdgeIndex e) const { return edges_.at(e); }
    std::size_t degree(VertexId v) const { return degree_.at(v); }
    const std::vector<std::size_t> &degrees() const { return degree_; }
    std::size_t min_degree() const;
    bool bipartite() const;

    /// Chain of vertices for a metric edge, from min(u,v) to max(u,v).
    const std::vector<VertexId> &chain(EdgeIndex metric_edge) const { return chains_.at(metric_edge); }
    /// Unit edges of a metric edge in chain order.
    const std::vector<EdgeIndex> &segments(EdgeIndex metric_edge) const { return segments_.at(metric_edge); }
    std::size_t metric_edge_count() const { return chains_.size(); }

    /// Index of the unit edge joining a and b, or npos.
    EdgeIndex find_edge(VertexId a, VertexId b) const;
    static constexpr EdgeIndex npos = static_cast<EdgeIndex>(-1);

    /// Throws qg::Error(precondition) naming a vertex of degree < 2.
    void require_min_degree_two() const;

    bool operator==(const EquilateralGraph &) const = default;

private:
    friend EquilateralGraph subdivide(const MetricGraph &g);

    std::size_t vertex_count_ = 0;
    std::size_t original_vertex_count_ = 0;
    std::vector<UnitEdge> edges_;
    std::vector<std::size_t> degree_;
    std::vector<std::vector<VertexId>> chains_;
    std::vector<std::vector<EdgeIndex>> segments_;
    std::vector<std::pair<std::pair<VertexId, VertexId>, EdgeIndex>> lookup_;
};

/// Replaces each edge of length L with L unit edges. Inserted vertices are
/// numbered after the original ones, in edge order then chain order.
EquilateralGraph subdivide(const MetricGraph &g);

/// Edge correspondence between a graph and its mirror image. `flipped` means
/// the mirror edge runs in the opposite local direction, so x maps to 1 - x.
struct MirrorEdge {
    EdgeIndex edge = 0;
    bool flipped = false;

    bool operator==(const MirrorEdge &) const = default;
};

struct DoubledGraph {
    MetricGraph graph;
    /// Vertex involution; leaves are fixed points.
    std::vector<VertexId> vertex_mirror;
    /// Edge involution over all 2|E| edges.
    std::vector<MirrorEdge> edge_mirror;
};

/// Glues a mirror copy of g along its degree-1 vertices. Original edges keep
/// their indices; the copy of edge e is e + |E|. Copies of non-leaf vertices
/// are numbered from |V| in ascending order of the original id.
DoubledGraph double_at_leaves(const MetricGraph &g);

/// Lifts a metric-level mirror to the unit edges of `eq = subdivide(doubled.graph)`.
std::vector<MirrorEdge> mirror_unit_edges(const EquilateralGraph &eq, const DoubledGraph &doubled);

struct PathSegment {
    EdgeIndex edge = 0;
    bool reversed = false;  // walk goes head -> tail

    bool operator==(const PathSegment &) const = default;
};

using EdgePath = std::vector<PathSegment>;

/// Consecutive vertices must be adjacent in the equilateral graph.
EdgePath path_trace(const EquilateralGraph &g, const std::vector<VertexId> &vertices);

/// Like path_trace, but consecutive entries are original vertices joined by
/// a metric edge; each metric edge is expanded to its chain of unit edges.
EdgePath path_trace_metric(const EquilateralGraph &g, const std::vector<VertexId> &vertices);

}  // namespace qg
