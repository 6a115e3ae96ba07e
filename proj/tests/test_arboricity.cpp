#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace sphere_arbor;

namespace {

Graph random_subgraph(const Graph& g, std::mt19937_64& rng)
{
    Graph h;
    for (Vertex v : g.vertices())
        h.add_vertex(v);
    for (auto [u, v] : g.edges())
        if (rng() % 3)
            h.add_edge(u, v);
    return h;
}

int ceil_int(const Rational& r) { return static_cast<int>(ceil(r)); }

Graph figure_eight()
{
    // Two triangles sharing vertex 0.
    return Graph::from_edges(std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}});
}

} // namespace

TEST(Density, KnownValues)
{
    EXPECT_EQ(nash_williams_density(octahedron()), Rational(12, 5));
    EXPECT_EQ(nash_williams_density(torus_grid(4, 4)), Rational(48, 15));
    EXPECT_EQ(nash_williams_density(zykov_join(octahedron(), zero_sphere())), Rational(24, 7));
    EXPECT_EQ(nash_williams_density(octahedron(), DensityMode::ExactSmall), Rational(12, 5));
    EXPECT_EQ(nash_williams_density(torus_grid(4, 4), DensityMode::ExactSmall), Rational(48, 15));
    EXPECT_EQ(to_string(Rational(48, 15)), "16/5");
}

TEST(Density, Errors)
{
    EXPECT_THROW(nash_williams_density(complete_graph(1)), InvalidInput);
    EXPECT_THROW(nash_williams_density(disjoint_union(octahedron(), octahedron())), InvalidInput);
    EXPECT_THROW(nash_williams_density(random_sphere(21, 1), DensityMode::ExactSmall),
                 Refusal);
}

TEST(Density, ExactMatchesSubsetOracle)
{
    std::vector<Graph> gs{octahedron(), icosahedron(), prism(6), complete_graph(5), cycle_graph(7), figure_eight(),
                          random_sphere(12, 4), disjoint_union(complete_graph(4), cycle_graph(5))};
    for (const auto& g : gs)
        EXPECT_EQ(nash_williams_density(g, DensityMode::ExactSmall), oracle::density(g));
}

TEST(Density, LowerBoundOnSpheres)
{
    for (std::uint64_t s = 1; s <= 40; ++s) {
        Graph g = random_sphere(6 + static_cast<int>(s * 5), s);
        auto n = static_cast<long long>(g.order());
        Rational d = nash_williams_density(g);
        EXPECT_EQ(d, Rational(3) - Rational(3, n - 1));
        EXPECT_GT(d, Rational(2));
        EXPECT_EQ(ceil_int(d), 3);
    }
}

TEST(Oracle, KnownValues)
{
    EXPECT_EQ(arboricity_exact_small(cycle_graph(5)), 2);
    EXPECT_EQ(arboricity_exact_small(complete_graph(5)), 3);
    EXPECT_EQ(arboricity_exact_small(octahedron()), 3);
    EXPECT_EQ(arboricity_exact_small(complete_graph(6)), 3);
    EXPECT_EQ(arboricity_exact_small(complete_graph(1)), 1);
    EXPECT_EQ(arboricity_exact_small(torus_grid(4, 4)), 4);
    EXPECT_EQ(arboricity_exact_small(icosahedron()), 3);
    EXPECT_THROW(arboricity_exact_small(random_sphere(25, 1)), Refusal);
}

TEST(Oracle, AgreesWithNashWilliams)
{
    std::vector<Graph> gs;
    for (int n = 2; n <= 7; ++n)
        gs.push_back(complete_graph(n));
    for (int n = 3; n <= 8; ++n)
        gs.push_back(cycle_graph(n));
    gs.push_back(figure_eight());
    gs.push_back(octahedron());
    gs.push_back(prism(5));
    std::mt19937_64 rng(11);
    for (int i = 0; i < 20; ++i)
        gs.push_back(random_subgraph(random_sphere(8, i + 1), rng));
    for (const auto& g : gs) {
        if (g.size() == 0)
            continue;
        EXPECT_EQ(arboricity_exact_small(g), ceil_int(oracle::density(g)));
    }
}

TEST(Oracle, Monotone)
{
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        Graph g = random_subgraph(random_sphere(7 + i % 2, i + 1), rng);
        Graph h = random_subgraph(g, rng);
        if (h.size() == 0)
            continue;
        EXPECT_LE(arboricity_exact_small(h), arboricity_exact_small(g));
    }
}

TEST(Oracle, DisjointUnionTakesMaximum)
{
    std::vector<std::pair<Graph, Graph>> pairs{{cycle_graph(5), complete_graph(5)},
                                               {octahedron(), cycle_graph(4)},
                                               {complete_graph(3), complete_graph(2)}};
    for (const auto& [g, h] : pairs)
        EXPECT_EQ(arboricity_exact_small(disjoint_union(g, h)),
                  std::max(arboricity_exact_small(g), arboricity_exact_small(h)));
}

TEST(Oracle, CompleteGraphs)
{
    EXPECT_EQ(arboricity_k_n(5), 3);
    EXPECT_EQ(arboricity_k_n(1), 1);
    EXPECT_EQ(arboricity_k_n(6), 3);
    for (int n = 1; n <= 7; ++n)
        EXPECT_EQ(arboricity_k_n(n), arboricity_exact_small(complete_graph(n)));
    EXPECT_THROW(arboricity_k_n(0), InvalidInput);
}

TEST(Verify, DetectsViolations)
{
    Graph o = octahedron();
    auto p = prism_partition(o, *is_prism(o));
    EXPECT_TRUE(verify_forest_partition(o, p).ok);
    EXPECT_FALSE(p.neat);

    auto dup = p;
    dup.classes[1].push_back(dup.classes[0].front());
    auto v = verify_forest_partition(o, dup);
    EXPECT_FALSE(v.ok);
    EXPECT_FALSE(v.witness.empty());

    auto missing = p;
    missing.classes[0].pop_back();
    EXPECT_FALSE(verify_forest_partition(o, missing).ok);

    auto f = three_color_eulerian(o);
    auto d = kempe_decompose(o, f);
    ForestPartition kempe{{{}, {}, {}}, true};
    for (auto [e, k] : d.edge_class)
        kempe.classes[static_cast<int>(k)].push_back(e);
    auto bad = verify_forest_partition(o, kempe);
    EXPECT_FALSE(bad.ok);
    EXPECT_NE(bad.witness.find("cycle"), std::string::npos);
}

TEST(Verify, NeatClaimChecksTriangles)
{
    Graph o = octahedron();
    auto p = prism_partition(o, *is_prism(o));
    p.neat = true;
    EXPECT_FALSE(verify_forest_partition(o, p).ok);
}

TEST(PrismPartition, AllPrisms)
{
    for (int n = 4; n <= 12; ++n) {
        Graph g = prism(n);
        auto p = prism_partition(g, *is_prism(g));
        ASSERT_EQ(p.classes.size(), 3u);
        EXPECT_TRUE(verify_forest_partition(g, p).ok);
        std::size_t total = 0;
        for (const auto& c : p.classes) {
            EXPECT_TRUE(oracle::acyclic(c));
            total += c.size();
        }
        EXPECT_EQ(total, g.size());
    }
}

TEST(ThreeForest, IcosahedronIsNeat)
{
    Graph g = icosahedron();
    auto p = three_forest_partition(g);
    EXPECT_TRUE(p.neat);
    EXPECT_TRUE(verify_forest_partition(g, p).ok);
    for (const auto& c : p.classes)
        EXPECT_EQ(c.size(), 10u);
}

TEST(ThreeForest, PrismsUseRecipe)
{
    for (Graph g : {octahedron(), prism(9)}) {
        auto p = three_forest_partition(g);
        EXPECT_FALSE(p.neat);
        EXPECT_TRUE(verify_forest_partition(g, p).ok);
    }
    EXPECT_THROW(three_forest_partition(torus_grid(4, 4)), InvalidInput);
}

TEST(TreeCover, Octahedron)
{
    Graph o = octahedron();
    auto trees = forests_to_tree_cover(o, prism_partition(o, *is_prism(o)));
    ASSERT_EQ(trees.size(), 3u);
    std::set<Edge> covered;
    for (const auto& t : trees) {
        EXPECT_EQ(t.size(), 5u);
        EXPECT_TRUE(oracle::acyclic(t));
        covered.insert(t.begin(), t.end());
    }
    EXPECT_EQ(covered.size(), 12u);
}

TEST(TreeCover, FigureEight)
{
    Graph g = figure_eight();
    // A star at the shared vertex and the two outer edges.
    ForestPartition p{{{{0, 1}, {0, 2}, {0, 3}, {0, 4}}, {{1, 2}, {3, 4}}}, false};
    auto trees = forests_to_tree_cover(g, p);
    ASSERT_EQ(trees.size(), 2u);
    EXPECT_EQ(trees[0], p.classes[0]);
    EXPECT_EQ(trees[1].size(), 4u);
    EXPECT_TRUE(oracle::acyclic(trees[1]));
    for (auto e : p.classes[1])
        EXPECT_NE(std::find(trees[1].begin(), trees[1].end(), e), trees[1].end());
}

TEST(TreeCover, TreeIsItself)
{
    Graph t = Graph::from_edges(std::vector<Edge>{{0, 1}, {1, 2}, {1, 3}, {3, 4}});
    ForestPartition p{{t.edges()}, false};
    auto trees = forests_to_tree_cover(t, p);
    ASSERT_EQ(trees.size(), 1u);
    EXPECT_EQ(trees[0], t.edges());
    EXPECT_THROW(forests_to_tree_cover(disjoint_union(t, t), ForestPartition{{disjoint_union(t, t).edges()}, false}),
                 Refusal);
}
