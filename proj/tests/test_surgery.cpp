#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace sphere_arbor;

namespace {

std::array<std::int64_t, 3> fv(const Graph& g)
{
    auto f = f_vector(g, 2);
    return {f[0], f[1], f[2]};
}

void expect_sphere(const Graph& g)
{
    EXPECT_TRUE(is_two_manifold(g));
    EXPECT_TRUE(is_two_sphere(g));
    EXPECT_TRUE(dehn_sommerville(f_vector(g, 2)));
}

} // namespace

TEST(Generators, NamedGraphs)
{
    EXPECT_TRUE(oracle::isomorphic(prism(4), octahedron()));
    EXPECT_TRUE(oracle::isomorphic(generate("prism", {4}), octahedron()));
    EXPECT_TRUE(oracle::isomorphic(generate("cycle", {3}), complete_graph(3)));
    Graph t = generate("torus_grid", {4, 4});
    EXPECT_EQ(fv(t), (std::array<std::int64_t, 3>{16, 48, 32}));
    EXPECT_EQ(euler_characteristic(t), 0);
    EXPECT_TRUE(oracle::isomorphic(prism(7), zykov_join(cycle_graph(7), zero_sphere())));
    EXPECT_EQ(fv(icosahedron()), (std::array<std::int64_t, 3>{12, 30, 20}));
}

TEST(Generators, RejectsBadParameters)
{
    EXPECT_THROW(prism(3), InvalidInput);
    EXPECT_THROW(cycle_graph(2), InvalidInput);
    EXPECT_THROW(torus_grid(3, 4), InvalidInput);
    EXPECT_THROW(generate("dodecahedron", {}), InvalidInput);
    EXPECT_THROW(generate("prism", {}), InvalidInput);
}

TEST(EdgeRefine, OctahedronEdge)
{
    Graph o = octahedron();
    for (auto [a, b] : o.edges()) {
        auto r = edge_refine(o, a, b);
        EXPECT_EQ(fv(r.graph), (std::array<std::int64_t, 3>{7, 15, 10}));
        ASSERT_EQ(r.step.created.size(), 1u);
        EXPECT_EQ(r.graph.degree(r.step.created[0]), 4u);
        EXPECT_FALSE(r.graph.has_edge(a, b));
        expect_sphere(r.graph);
    }
}

TEST(EdgeRefine, PrismEquatorGivesLargerPrism)
{
    for (int n = 4; n <= 8; ++n) {
        Graph p = prism(n);
        auto r = edge_refine(p, 0, 1);
        EXPECT_TRUE(isomorphic(r.graph, prism(n + 1))) << n;
        if (n + 3 <= 9)
            EXPECT_TRUE(oracle::isomorphic(r.graph, prism(n + 1)));
    }
}

TEST(EdgeRefine, PoleEdgeGivesAlmostPrism)
{
    Graph p = prism(6);
    auto r = edge_refine(p, 0, 6);
    expect_sphere(r.graph);
    EXPECT_FALSE(is_prism(r.graph).has_value());
}

TEST(EdgeRefine, RejectsNonEdge)
{
    Graph o = octahedron();
    EXPECT_THROW(edge_refine(o, 0, 1), InvalidInput); // antipodes
    // An edge in no triangle.
    EXPECT_THROW(edge_refine(Graph::from_edges(std::vector<Edge>{{0, 1}, {1, 2}}), 0, 1), InvalidInput);
}

TEST(EdgeCollapse, InvertsEdgeRefine)
{
    Graph g = icosahedron();
    for (auto [a, b] : g.edges()) {
        auto r = edge_refine(g, a, b);
        Vertex w = r.step.created[0];
        auto back = edge_collapse(r.graph, w, a, b);
        EXPECT_EQ(back.graph.edges(), g.edges());
        EXPECT_EQ(fv(r.graph)[0] - fv(g)[0], 1);
        EXPECT_EQ(fv(r.graph)[1] - fv(g)[1], 3);
        EXPECT_EQ(fv(r.graph)[2] - fv(g)[2], 2);
    }
}

TEST(EdgeCollapse, NoLegalCollapseOnPlatonicSpheres)
{
    Graph ico = icosahedron();
    for (Vertex v : ico.vertices())
        EXPECT_THROW(edge_collapse(ico, v), Refusal);
    Graph o = octahedron();
    for (Vertex v : o.vertices()) {
        EXPECT_THROW(edge_collapse(o, v), Refusal);
        auto cyc = *link_cycle(o, v);
        EXPECT_FALSE(edge_collapse_obstruction(o, v, cyc[0], cyc[2]).empty());
    }
}

TEST(EdgeCollapse, ClassicalGuard)
{
    // An edge with both ends of degree >= 6 and tips of degree >= 5: refining it
    // gives a degree-4 vertex whose neighbors all have degree >= 6.
    Graph g;
    Vertex a = -1, b = -1;
    for (std::uint64_t s = 1; s <= 50 && a < 0; ++s) {
        g = random_sphere(80, s);
        for (auto [u, v] : g.edges())
            if (g.degree(u) >= 6 && g.degree(v) >= 6) {
                auto c = common_neighbors(g, u, v);
                if (g.degree(c[0]) >= 5 && g.degree(c[1]) >= 5) {
                    a = u;
                    b = v;
                    break;
                }
            }
    }
    ASSERT_GE(a, 0);
    auto r = edge_refine(g, a, b);
    Vertex w = r.step.created[0];
    bool guard = true;
    for (Vertex x : r.graph.neighbors(w))
        guard = guard && r.graph.degree(x) >= 6;
    if (guard) {
        auto back = edge_collapse(r.graph, w);
        expect_sphere(back.graph);
        EXPECT_EQ(back.graph.order(), g.order());
    } else {
        EXPECT_THROW(edge_collapse(r.graph, w), Refusal);
    }
}

TEST(VertexRefine, OctahedronPlacements)
{
    Graph o = octahedron();
    auto places = vertex_refine_placements(o);
    EXPECT_EQ(places.size(), 12u); // two opposite pairs in each 4-cycle
    for (auto [v, a, b] : places) {
        auto r = vertex_refine(o, v, a, b);
        expect_sphere(r.graph);
        EXPECT_EQ(r.graph.order(), 7u);
        Vertex w = r.step.created[0];
        EXPECT_EQ(r.graph.degree(w) + r.graph.degree(v), o.degree(v) + 4);
    }
}

TEST(VertexRefine, KiteCollapseInverts)
{
    Graph g = random_sphere(11, 5);
    for (auto [v, a, b] : vertex_refine_placements(g)) {
        auto r = vertex_refine(g, v, a, b);
        Vertex w = r.step.created[0];
        ASSERT_TRUE(is_kite(r.graph, v, w, a, b));
        auto back = kite_collapse(r.graph, v, w, a, b);
        EXPECT_EQ(back.graph.edges(), g.edges());
    }
}

TEST(VertexRefine, RejectsBadPairs)
{
    Graph o = octahedron();
    EXPECT_THROW(vertex_refine(o, 0, 2, 4), InvalidInput); // 2-4 adjacent
    EXPECT_THROW(vertex_refine(o, 0, 1, 2), InvalidInput); // 1 not a neighbor
}

TEST(KiteCollapse, IcosahedronKite)
{
    Graph g = icosahedron();
    int collapsed = 0;
    for (auto [c, d] : g.edges()) {
        auto tips = common_neighbors(g, c, d);
        auto r = kite_collapse(g, c, d, tips[0], tips[1]);
        expect_sphere(r.graph);
        EXPECT_EQ(fv(r.graph), (std::array<std::int64_t, 3>{11, 27, 18}));
        EXPECT_EQ(fv(g)[2] - fv(r.graph)[2], 2);
        ++collapsed;
    }
    EXPECT_EQ(collapsed, 30);
}

TEST(KiteCollapse, RefusesIllegalKites)
{
    Graph o = octahedron();
    // Tips have degree 4.
    EXPECT_THROW(kite_collapse(o, 0, 2, 4, 5), Refusal);
    // Not a kite.
    EXPECT_THROW(kite_collapse(o, 0, 1, 2, 3), Refusal);
}

TEST(KiteFold, PreservesSphere)
{
    Graph g = barycentric_refinement(icosahedron());
    int folds = 0;
    for (auto [c, d] : g.edges()) {
        auto tips = common_neighbors(g, c, d);
        if (!kite_fold_obstruction(g, c, d, tips[0], tips[1]).empty())
            continue;
        auto r = kite_fold(g, c, d, tips[0], tips[1]);
        expect_sphere(r.graph);
        EXPECT_EQ(fv(g)[2] - fv(r.graph)[2], 2);
        if (++folds == 20)
            break;
    }
    EXPECT_GT(folds, 0);
}

TEST(RandomSphere, Contract)
{
    EXPECT_TRUE(oracle::isomorphic(random_sphere(6, 123), octahedron()));
    Graph g = random_sphere(50, 1);
    EXPECT_EQ(g.order(), 50u);
    EXPECT_EQ(g.size(), 144u);
    EXPECT_TRUE(is_two_sphere(g));
    EXPECT_EQ(random_sphere(40, 9).edges(), random_sphere(40, 9).edges());
    EXPECT_NE(random_sphere(40, 9).edges(), random_sphere(40, 10).edges());
    EXPECT_THROW(random_sphere(5, 1), InvalidInput);
}

TEST(Surgery, FVectorDeltasOnRandomSpheres)
{
    for (std::uint64_t s = 1; s <= 10; ++s) {
        Graph g = random_sphere(20, s);
        auto [a, b] = g.edges()[s % g.size()];
        auto e = edge_refine(g, a, b);
        auto d1 = fv(e.graph);
        auto d0 = fv(g);
        EXPECT_EQ(d1[0] - d0[0], 1);
        EXPECT_EQ(d1[1] - d0[1], 3);
        EXPECT_EQ(d1[2] - d0[2], 2);
        auto places = vertex_refine_placements(g);
        auto [v, x, y] = places[s % places.size()];
        auto r = vertex_refine(g, v, x, y);
        Vertex w = r.step.created[0];
        auto k = kite_collapse(r.graph, v, w, x, y);
        auto dk = fv(k.graph), dr = fv(r.graph);
        EXPECT_EQ(dr[0] - dk[0], 1);
        EXPECT_EQ(dr[1] - dk[1], 3);
        EXPECT_EQ(dr[2] - dk[2], 2);
    }
}

TEST(Surgery, ApplyStepReplays)
{
    Graph g = random_sphere(15, 4);
    auto r = edge_refine(g, g.edges()[3].first, g.edges()[3].second);
    EXPECT_EQ(apply_step(g, r.step).edges(), r.graph.edges());
    auto [v, a, b] = vertex_refine_placements(g)[5];
    auto s = vertex_refine(g, v, a, b);
    EXPECT_EQ(apply_step(g, s.step).edges(), s.graph.edges());
    EXPECT_EQ(step_kind_from_string(to_string(StepKind::DiamondMerge)), StepKind::DiamondMerge);
    EXPECT_THROW(step_kind_from_string("Flip"), InvalidInput);
}
