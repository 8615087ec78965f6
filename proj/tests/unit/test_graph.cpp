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

#include <gtest/gtest.h>

#include <set>

#include "qgfft/error.hpp"
#include "qgfft/graph.hpp"
#include "test_support.hpp"

using namespace qg;

namespace {

ErrorCode code_of(const std::function<void()> &fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.code();
    }
    ADD_FAILURE() << "expected qg::Error";
    return ErrorCode::invalid_argument;
}

}  // namespace

TEST(ParseGraph, Triangle) {
    const auto g = parse_graph("nv 3\n0 1 1\n1 2 1\n0 2 1\n");
    EXPECT_EQ(g.vertex_count(), 3u);
    EXPECT_EQ(g.edge_count(), 3u);
    EXPECT_EQ(g.total_length(), 3u);
    EXPECT_EQ(g.degrees(), (std::vector<std::size_t>{2, 2, 2}));
}

TEST(ParseGraph, CommentsAndBlankLines) {
    const auto g = parse_graph("# header\n\nnv 2   # two\n0 1 5 # long\n");
    ASSERT_EQ(g.edge_count(), 1u);
    EXPECT_EQ(g.edge(0).length, 5u);
}

TEST(ParseGraph, CubeFixture) {
    const auto g = load_graph(qgtest::graph_path("cube.graph"));
    EXPECT_EQ(g.vertex_count(), 8u);
    EXPECT_EQ(g.edge_count(), 12u);
    for (auto d : g.degrees()) EXPECT_EQ(d, 3u);
}

TEST(ParseGraph, Rejections) {
    EXPECT_EQ(code_of([] { parse_graph("nv 2\n0 1 0\n"); }), ErrorCode::parse);
    EXPECT_EQ(code_of([] { parse_graph("0 1 1\n"); }), ErrorCode::parse);
    EXPECT_EQ(code_of([] { parse_graph("nv 2\n0 0 1\n"); }), ErrorCode::parse);
    EXPECT_EQ(code_of([] { parse_graph("nv 2\n0 2 1\n"); }), ErrorCode::parse);
    EXPECT_EQ(code_of([] { parse_graph("nv 2\n0 1\n"); }), ErrorCode::parse);
    EXPECT_EQ(code_of([] { parse_graph("nv 2\n0 1 -1\n"); }), ErrorCode::parse);
    EXPECT_EQ(code_of([] { parse_graph("nv 3\n0 1 1\n1 0 2\n1 2 1\n"); }), ErrorCode::graph);
    EXPECT_EQ(code_of([] { parse_graph("nv 4\n0 1 1\n2 3 1\n"); }), ErrorCode::graph);
    EXPECT_EQ(code_of([] { load_graph("/nonexistent/graph"); }), ErrorCode::io);
}

TEST(ParseGraph, ErrorNamesLine) {
    try {
        parse_graph("nv 3\n0 1 1\n1 2 0\n");
        FAIL();
    } catch (const Error &e) {
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
    }
}

TEST(ParseGraph, SerializeRoundTrip) {
    const auto g = load_graph(qgtest::graph_path("bridge.graph"));
    const auto text = serialize_graph(g);
    const auto h = parse_graph(text);
    EXPECT_EQ(h.vertex_count(), g.vertex_count());
    EXPECT_EQ(serialize_graph(h), text);
    std::multiset<std::tuple<VertexId, VertexId, std::size_t>> a, b;
    for (auto e : g.edges()) a.insert({std::min(e.u, e.v), std::max(e.u, e.v), e.length});
    for (auto e : h.edges()) b.insert({std::min(e.u, e.v), std::max(e.u, e.v), e.length});
    EXPECT_EQ(a, b);
}

TEST(Subdivide, SingleLongEdge) {
    const auto eq = subdivide(parse_graph("nv 2\n0 1 3\n"));
    EXPECT_EQ(eq.vertex_count(), 4u);
    EXPECT_EQ(eq.edge_count(), 3u);
    EXPECT_EQ(eq.degree(2), 2u);
    EXPECT_EQ(eq.degree(3), 2u);
    EXPECT_EQ(eq.chain(0), (std::vector<VertexId>{0, 2, 3, 1}));
    for (const auto &e : eq.edges()) EXPECT_LT(e.tail, e.head);
}

TEST(Subdivide, FigureEightCount) {
    const auto eq = subdivide(load_graph(qgtest::graph_path("fig8.graph")));
    EXPECT_EQ(eq.edge_count(), 14u + 14u + 4u);
    EXPECT_EQ(eq.original_vertex_count(), 5u);
    EXPECT_EQ(eq.degree(0), 4u);
    EXPECT_EQ(eq.min_degree(), 2u);
}

TEST(Subdivide, UnitGraphIsIdentity) {
    const auto g = load_graph(qgtest::graph_path("cube.graph"));
    const auto eq = subdivide(g);
    ASSERT_EQ(eq.edge_count(), g.edge_count());
    EXPECT_EQ(eq.vertex_count(), g.vertex_count());
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        EXPECT_EQ(eq.edge(e).tail, std::min(g.edge(e).u, g.edge(e).v));
        EXPECT_EQ(eq.edge(e).head, std::max(g.edge(e).u, g.edge(e).v));
    }
}

TEST(Subdivide, ChainsAreContiguous) {
    const auto g = load_graph(qgtest::graph_path("bridge.graph"));
    const auto eq = subdivide(g);
    for (std::size_t me = 0; me < g.edge_count(); ++me) {
        const auto &chain = eq.chain(me);
        const auto &segs = eq.segments(me);
        ASSERT_EQ(chain.size(), g.edge(me).length + 1);
        ASSERT_EQ(segs.size(), g.edge(me).length);
        for (std::size_t i = 0; i < segs.size(); ++i) {
            const auto &ue = eq.edge(segs[i]);
            const VertexId from = ue.reversed ? ue.head : ue.tail;
            const VertexId to = ue.reversed ? ue.tail : ue.head;
            EXPECT_EQ(from, chain[i]);
            EXPECT_EQ(to, chain[i + 1]);
            EXPECT_EQ(ue.position, i);
            EXPECT_EQ(eq.find_edge(chain[i], chain[i + 1]), segs[i]);
            EXPECT_EQ(eq.find_edge(chain[i + 1], chain[i]), segs[i]);
        }
    }
    EXPECT_EQ(eq.find_edge(0, 2), EquilateralGraph::npos);
}

TEST(Subdivide, Bipartite) {
    EXPECT_FALSE(subdivide(load_graph(qgtest::graph_path("triangle.graph"))).bipartite());
    EXPECT_TRUE(subdivide(load_graph(qgtest::graph_path("cube.graph"))).bipartite());
    EXPECT_FALSE(subdivide(load_graph(qgtest::graph_path("petersen.graph"))).bipartite());
    // Subdividing every edge of the triangle into two makes a 6-cycle.
    EXPECT_TRUE(subdivide(parse_graph("nv 3\n0 1 2\n1 2 2\n2 0 2\n")).bipartite());
}

TEST(Subdivide, MinDegreePrecondition) {
    const auto eq = subdivide(load_graph(qgtest::graph_path("edge.graph")));
    try {
        eq.require_min_degree_two();
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::precondition);
        EXPECT_NE(std::string(e.what()).find("degree"), std::string::npos);
    }
    EXPECT_NO_THROW(subdivide(load_graph(qgtest::graph_path("triangle.graph"))).require_min_degree_two());
}

TEST(DoubleAtLeaves, PathBecomesCycle) {
    const auto d = double_at_leaves(parse_graph("nv 3\n0 1 1\n1 2 1\n"));
    EXPECT_EQ(d.graph.edge_count(), 4u);
    EXPECT_EQ(d.graph.vertex_count(), 4u);
    for (auto deg : d.graph.degrees()) EXPECT_EQ(deg, 2u);
    EXPECT_EQ(d.vertex_mirror[0], 0u);
    EXPECT_EQ(d.vertex_mirror[2], 2u);
    EXPECT_EQ(d.vertex_mirror[1], 3u);
    EXPECT_EQ(d.vertex_mirror[3], 1u);
}

TEST(DoubleAtLeaves, StarHandEnumerated) {
    // K_{1,3}: centre 0, leaves 1..3. Mirror centre is 4; the doubled edge set
    // is {0-1, 0-2, 0-3, 4-1, 4-2, 4-3}.
    const auto d = double_at_leaves(parse_graph("nv 4\n0 1 1\n0 2 1\n0 3 1\n"));
    std::set<std::pair<VertexId, VertexId>> got;
    for (const auto &e : d.graph.edges()) got.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
    const std::set<std::pair<VertexId, VertexId>> want{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}};
    EXPECT_EQ(got, want);
    const auto deg = d.graph.degrees();
    EXPECT_EQ(deg[0], 3u);
    EXPECT_EQ(deg[4], 3u);
    for (VertexId v : {1, 2, 3}) EXPECT_EQ(deg[v], 2u);
}

TEST(DoubleAtLeaves, EdgeMirrorIsInvolution) {
    const auto g = load_graph(qgtest::graph_path("star.graph"));
    const auto d = double_at_leaves(g);
    const std::size_t ne = g.edge_count();
    ASSERT_EQ(d.edge_mirror.size(), 2 * ne);
    for (std::size_t e = 0; e < 2 * ne; ++e) {
        const auto m = d.edge_mirror[e];
        EXPECT_EQ(d.edge_mirror[m.edge].edge, e);
        EXPECT_EQ(d.edge_mirror[m.edge].flipped, m.flipped);
        const auto &a = d.graph.edge(e);
        const auto &b = d.graph.edge(m.edge);
        std::set<VertexId> imaged{d.vertex_mirror[a.u], d.vertex_mirror[a.v]};
        EXPECT_EQ(imaged, (std::set<VertexId>{b.u, b.v}));
        EXPECT_EQ(a.length, b.length);
    }
}

TEST(DoubleAtLeaves, Rejections) {
    EXPECT_EQ(code_of([] { double_at_leaves(parse_graph("nv 3\n0 1 1\n1 2 1\n2 0 1\n")); }),
              ErrorCode::precondition);
    EXPECT_EQ(code_of([] { double_at_leaves(parse_graph("nv 2\n0 1 1\n")); }), ErrorCode::precondition);
}

TEST(DoubleAtLeaves, UnitMirrorMapsPositions) {
    // The star has edges of length 2 and 3, so pieces must map in reverse
    // order exactly when the mirror runs the other way.
    const auto g = load_graph(qgtest::graph_path("star.graph"));
    const auto d = double_at_leaves(g);
    const auto eq = subdivide(d.graph);
    const auto mirror = mirror_unit_edges(eq, d);
    ASSERT_EQ(mirror.size(), eq.edge_count());
    for (std::size_t e = 0; e < eq.edge_count(); ++e) {
        const auto &a = eq.edge(e);
        const auto &b = eq.edge(mirror[e].edge);
        EXPECT_EQ(mirror[mirror[e].edge].edge, e);
        // x on a maps to x (or 1 - x) on b: compare endpoint images.
        auto image = [&](VertexId v) -> VertexId {
            // Inserted vertices: locate through the chains.
            if (v < d.graph.vertex_count()) return d.vertex_mirror[v];
            for (std::size_t me = 0; me < eq.metric_edge_count(); ++me) {
                const auto &ch = eq.chain(me);
                for (std::size_t i = 1; i + 1 < ch.size(); ++i)
                    if (ch[i] == v) {
                        const auto target = d.edge_mirror[me];
                        const auto &tch = eq.chain(target.edge);
                        return target.flipped ? tch[tch.size() - 1 - i] : tch[i];
                    }
            }
            ADD_FAILURE();
            return v;
        };
        const VertexId at0 = image(a.tail), at1 = image(a.head);
        if (mirror[e].flipped) {
            EXPECT_EQ(at0, b.head);
            EXPECT_EQ(at1, b.tail);
        } else {
            EXPECT_EQ(at0, b.tail);
            EXPECT_EQ(at1, b.head);
        }
    }
}

TEST(PathTrace, TriangleExamples) {
    const auto eq = subdivide(load_graph(qgtest::graph_path("triangle.graph")));
    const auto fwd = path_trace(eq, {0, 1});
    ASSERT_EQ(fwd.size(), 1u);
    EXPECT_FALSE(fwd[0].reversed);
    const auto rev = path_trace(eq, {1, 0});
    ASSERT_EQ(rev.size(), 1u);
    EXPECT_EQ(rev[0].edge, fwd[0].edge);
    EXPECT_TRUE(rev[0].reversed);
    const auto loop = path_trace(eq, {0, 1, 2, 0});
    ASSERT_EQ(loop.size(), 3u);
    std::set<EdgeIndex> used;
    for (auto s : loop) used.insert(s.edge);
    EXPECT_EQ(used.size(), 3u);
}

TEST(PathTrace, Rejections) {
    const auto eq = subdivide(load_graph(qgtest::graph_path("cube.graph")));
    EXPECT_EQ(code_of([&] { path_trace(eq, {0}); }), ErrorCode::invalid_argument);
    EXPECT_EQ(code_of([&] { path_trace(eq, {0, 7}); }), ErrorCode::invalid_argument);
}

TEST(PathTrace, MetricExpansion) {
    const auto eq = subdivide(load_graph(qgtest::graph_path("bridge.graph")));
    const auto p = path_trace_metric(eq, {0, 1, 2});
    ASSERT_EQ(p.size(), 8u);
    // Walk the path and check consecutive segments share a vertex.
    VertexId at = 0;
    for (const auto &s : p) {
        const auto &ue = eq.edge(s.edge);
        const VertexId from = s.reversed ? ue.head : ue.tail;
        const VertexId to = s.reversed ? ue.tail : ue.head;
        EXPECT_EQ(from, at);
        at = to;
    }
    EXPECT_EQ(at, 2u);
    const auto back = path_trace_metric(eq, {2, 3});
    ASSERT_EQ(back.size(), 5u);
    EXPECT_EQ(code_of([&] { path_trace_metric(eq, {0, 2}); }), ErrorCode::invalid_argument);
}
