#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace sphere_arbor;

namespace {

std::vector<Graph> corpus()
{
    std::vector<Graph> gs{icosahedron(), barycentric_refinement(octahedron())};
    for (std::uint64_t s = 1; s <= 30; ++s)
        gs.push_back(random_sphere(10 + static_cast<int>(s * 13 % 60), s));
    return gs;
}

// Two n-gons joined as an antiprism, each capped by a pole: every ring
// vertex has degree 5, the poles degree n.
Graph capped_antiprism(int n)
{
    std::vector<Edge> edges;
    Vertex top = 2 * n, bottom = 2 * n + 1;
    for (int i = 0; i < n; ++i) {
        int j = (i + 1) % n;
        for (Edge e : {Edge{i, j}, Edge{n + i, n + j}, Edge{i, n + i}, Edge{i, n + j}, Edge{i, top},
                       Edge{n + i, bottom}})
            edges.push_back(make_edge(e.first, e.second));
    }
    return Graph::from_edges(edges);
}

} // namespace

TEST(DegreeFour, Examples)
{
    auto ico = degree_four_structure(icosahedron());
    EXPECT_TRUE(ico.g4.empty());
    EXPECT_EQ(ico.verdict, G4Verdict::LinearForest);

    auto p = degree_four_structure(prism(8));
    EXPECT_EQ(p.verdict, G4Verdict::CycleImpliesPrism);
    EXPECT_TRUE(oracle::isomorphic(p.g4, cycle_graph(8)));

    auto o = degree_four_structure(octahedron());
    EXPECT_EQ(o.verdict, G4Verdict::TriangleOrBranchImpliesOctahedron);
    EXPECT_EQ(o.g4.edges(), octahedron().edges());
}

TEST(DegreeFour, VerdictMatchesGroundTruth)
{
    for (int n = 5; n <= 12; ++n)
        EXPECT_EQ(degree_four_structure(prism(n)).verdict, G4Verdict::CycleImpliesPrism) << n;
    EXPECT_EQ(degree_four_structure(prism(4)).verdict, G4Verdict::TriangleOrBranchImpliesOctahedron);
    for (const auto& g : corpus()) {
        auto s = degree_four_structure(g);
        bool prism_like = is_prism(g).has_value();
        EXPECT_EQ(s.verdict == G4Verdict::LinearForest, !prism_like);
    }
    for (auto& [n, gs] : enumerate_spheres(10))
        for (const auto& g : gs) {
            auto v = degree_four_structure(g).verdict;
            EXPECT_EQ(v == G4Verdict::CycleImpliesPrism, is_prism(g) && !is_octahedron(g));
            EXPECT_EQ(v == G4Verdict::TriangleOrBranchImpliesOctahedron, is_octahedron(g));
        }
}

TEST(DegreeFour, LinesArePaths)
{
    for (const auto& g : corpus()) {
        auto s = degree_four_structure(g);
        std::size_t covered = 0;
        for (const auto& line : degree_four_lines(s.g4)) {
            covered += line.size();
            for (std::size_t i = 0; i + 1 < line.size(); ++i)
                EXPECT_TRUE(g.has_edge(line[i], line[i + 1]));
        }
        EXPECT_EQ(covered, s.g4.order());
    }
}

TEST(HeawoodKites, DegreeFourWheelHasKite)
{
    for (const auto& g : corpus()) {
        auto f = four_color(g);
        auto kites = find_heawood_kites(g, f);
        for (Vertex v : g.vertices()) {
            if (g.degree(v) != 4)
                continue;
            auto cyc = *link_cycle(g, v);
            bool found = false;
            for (const auto& k : kites)
                if ((k.c == v || k.d == v) &&
                    ((f[cyc[0]] == f[cyc[2]] && std::set<Vertex>{k.a, k.b} == std::set<Vertex>{cyc[0], cyc[2]}) ||
                     (f[cyc[1]] == f[cyc[3]] && std::set<Vertex>{k.a, k.b} == std::set<Vertex>{cyc[1], cyc[3]})))
                    found = true;
            EXPECT_TRUE(found) << "vertex " << v;
        }
    }
}

TEST(HeawoodKites, ListedKitesSatisfyDefinition)
{
    Graph g = icosahedron();
    auto f = *neat_search(g).coloring;
    auto kites = find_heawood_kites(g, f);
    EXPECT_FALSE(kites.empty());
    for (const auto& k : kites) {
        EXPECT_TRUE(is_kite(g, k.c, k.d, k.a, k.b));
        EXPECT_EQ(f[k.a], f[k.b]);
        EXPECT_LT(k.c, k.d);
        EXPECT_LT(k.a, k.b);
        EXPECT_EQ(k.collapsible, kite_fold_obstruction(g, k.c, k.d, k.a, k.b).empty());
    }
    EXPECT_TRUE(std::is_sorted(kites.begin(), kites.end()));
}

TEST(HeawoodKites, EmptyWithoutEqualTips)
{
    // K4 minus an edge: a single kite whose tips get different colors.
    Graph g = complete_graph(4);
    g.remove_edge(2, 3);
    EXPECT_TRUE(find_heawood_kites(g, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}).empty());
    EXPECT_EQ(find_heawood_kites(g, {{0, 1}, {1, 2}, {2, 3}, {3, 3}}).size(), 1u);
}

TEST(HeawoodKites, ExistWhenLoopAndNoDegreeFour)
{
    int checked = 0;
    for (int n : {6, 7}) {
        Graph g = capped_antiprism(n);
        ASSERT_TRUE(is_two_sphere(g));
        ASSERT_TRUE(degree_four_structure(g).g4.empty());
        for_each_canonical_coloring(g, [&](const VertexColoring& f) {
            if (find_kempe_loop(g, f)) {
                ++checked;
                EXPECT_FALSE(find_heawood_kites(g, f).empty());
            }
            return true;
        });
    }
    EXPECT_GT(checked, 0);
}

TEST(Phi, Refusals)
{
    auto o = octahedron();
    EXPECT_THROW(phi_step(o, three_color_eulerian(o)), Refusal);
    auto p = prism(6);
    EXPECT_THROW(phi_step(p, four_color(p)), Refusal);
    auto ico = icosahedron();
    EXPECT_THROW(phi_step(ico, *neat_search(ico).coloring), Refusal);
    EXPECT_THROW(phi_step(torus_grid(4, 4), four_color(torus_grid(4, 4))), InvalidInput);
}

TEST(Phi, StepInvariants)
{
    std::map<StepKind, int> kinds;
    int stuck = 0;
    for (const auto& g0 : corpus()) {
        Graph g = g0;
        auto f = four_color(g);
        for (int i = 0; i < 200; ++i) {
            if (is_octahedron(g) || is_prism(g) || !find_kempe_loop(g, f))
                break;
            PhiResult r;
            try {
                r = phi_step(g, f);
            } catch (const PhiStuck& e) {
                EXPECT_EQ(e.graph.edges(), g.edges());
                ++stuck;
                break;
            }
            ++kinds[r.step.kind];
            EXPECT_TRUE(is_two_sphere(r.graph));
            EXPECT_TRUE(oracle::proper(r.graph, r.coloring));
            EXPECT_LE(f_vector(r.graph, 2)[2], f_vector(g, 2)[2] - 2);
            EXPECT_EQ(apply_step(g, r.step).edges(), r.graph.edges());
            for (auto [v, c] : r.coloring)
                EXPECT_EQ(c, f.at(v));
            if (r.step.kind == StepKind::DiamondMerge)
                EXPECT_EQ(f.at(r.step.merged[0].first), f.at(r.step.merged[0].second));
            if (r.step.kind == StepKind::EdgeCollapse)
                EXPECT_NE(f.at(r.step.actors[1]), f.at(r.step.actors[2]));
            if (r.step.kind == StepKind::KiteFold)
                EXPECT_EQ(f.at(r.step.actors[2]), f.at(r.step.actors[3]));
            g = std::move(r.graph);
            f = std::move(r.coloring);
        }
    }
    EXPECT_GT(kinds[StepKind::DiamondMerge] + kinds[StepKind::EdgeCollapse] + kinds[StepKind::KiteFold], 0);
}

TEST(Phi, DiamondMergeOnEqualSuspension)
{
    // Refining edge (a,b) of the icosahedron gives a lone degree-4 vertex w.
    // A coloring with f(a) = f(b), pulled back from the sphere where w is
    // removed and a, b are identified, makes {w; a, b} a Kempe diamond.
    Graph ico = icosahedron();
    int merges = 0;
    for (auto [a, b] : ico.edges()) {
        auto up = edge_refine(ico, a, b);
        Vertex w = up.step.created[0];
        Graph merged = up.graph;
        merged.remove_vertex(w);
        auto nb = merged.neighbors(b);
        merged.remove_vertex(b);
        for (Vertex x : nb)
            if (x != a)
                merged.add_edge(a, x);
        ASSERT_TRUE(is_two_sphere(merged));
        for (std::uint64_t s = 0; s < 4; ++s) {
            auto f = four_color(merged, s);
            f[b] = f[a];
            std::set<int> used;
            for (Vertex x : up.graph.neighbors(w))
                used.insert(f.at(x));
            for (int c = 1; c <= 4; ++c)
                if (!used.contains(c))
                    f[w] = c;
            ASSERT_TRUE(oracle::proper(up.graph, f));
            if (!find_kempe_loop(up.graph, f))
                continue;
            auto step = phi_step(up.graph, f);
            EXPECT_EQ(step.step.kind, StepKind::DiamondMerge);
            EXPECT_EQ(step.step.removed, std::vector<Vertex>{w});
            EXPECT_EQ(step.graph.order(), ico.order() - 1);
            ++merges;
        }
    }
    EXPECT_GT(merges, 0);
}

TEST(Descend, Terminals)
{
    Graph ico = icosahedron();
    auto neat = *neat_search(ico).coloring;
    auto r = descend(ico, neat);
    EXPECT_EQ(r.terminal, Terminal::NeatFound);
    EXPECT_EQ(r.level, 0u);

    Graph o = octahedron();
    EXPECT_EQ(descend(o, four_color(o)).terminal, Terminal::OctahedronReached);
    Graph p = prism(7);
    EXPECT_EQ(descend(p, four_color(p)).terminal, Terminal::PrismReached);
    EXPECT_THROW(descend(torus_grid(4, 4), four_color(torus_grid(4, 4))), InvalidInput);
}

TEST(Descend, LogReplaysAndAreaDecreases)
{
    for (std::uint64_t s = 1; s <= 8; ++s) {
        Graph g = random_sphere(30, s);
        auto f = four_color(g, s);
        auto r = descend(g, f, {20'000, s});
        const auto& log = r.log;
        ASSERT_EQ(log.levels.size(), log.steps.size() + 1);
        auto levels = replay(log.origin, log.steps);
        ASSERT_EQ(levels.size(), log.levels.size());
        for (std::size_t i = 0; i < levels.size(); ++i) {
            EXPECT_EQ(levels[i].edges(), log.levels[i].edges());
            EXPECT_TRUE(is_two_sphere(levels[i]));
            EXPECT_TRUE(oracle::proper(levels[i], log.colorings[i]));
            if (i > 0)
                EXPECT_LE(f_vector(levels[i], 2)[2], f_vector(levels[i - 1], 2)[2] - 2);
        }
        EXPECT_LE(static_cast<std::int64_t>(log.steps.size()), (f_vector(g, 2)[2] - 8) / 2);
        if (r.terminal == Terminal::NeatFound)
            EXPECT_TRUE(oracle::neat(log.levels[r.level], *r.neat));
        if (r.terminal == Terminal::Stuck)
            EXPECT_FALSE(r.witness.empty());
    }
}

TEST(Lift, ThroughWheelCollapse)
{
    Graph ico = icosahedron();
    auto neat = *neat_search(ico).coloring;
    for (auto [a, b] : ico.edges()) {
        auto up = edge_refine(ico, a, b);
        Vertex w = up.step.created[0];
        auto down = edge_collapse(up.graph, w, a, b);
        ASSERT_EQ(down.graph.edges(), ico.edges());
        SurgeryLog log;
        log.origin = up.graph;
        log.levels = {up.graph, down.graph};
        log.steps = {{down.step, ""}};
        log.origin_coloring = four_color(up.graph);
        log.colorings = {log.origin_coloring, neat};
        auto r = lift_coloring(log, 1, neat);
        EXPECT_TRUE(oracle::proper(up.graph, r.coloring));
        for (auto [v, c] : r.coloring)
            if (v != w && r.events[0].note.find("Kempe") == std::string::npos &&
                r.events[0].note.find("repaired") == std::string::npos)
                EXPECT_EQ(c, neat.at(v));
        EXPECT_EQ(r.neat, oracle::neat(up.graph, r.coloring));
        if (r.neat)
            EXPECT_FALSE(r.failed_level.has_value());
        else
            EXPECT_EQ(r.failed_level, std::optional<std::size_t>(0));
    }
}

TEST(Lift, ThroughKiteFold)
{
    // Kite folds taken from real descents; the lifted coloring must be proper.
    int lifted = 0;
    for (std::uint64_t s = 1; s <= 40 && lifted < 5; ++s) {
        Graph g = random_sphere(24, s);
        auto f = four_color(g, s);
        auto r = descend(g, f, {1, s});
        if (r.log.steps.empty())
            continue;
        std::size_t k = r.log.steps.size();
        auto lr = lift_coloring(r.log, k, r.log.colorings[k], {2000, s});
        EXPECT_TRUE(oracle::proper(g, lr.coloring));
        EXPECT_EQ(lr.events.size(), k);
        ++lifted;
    }
    EXPECT_GT(lifted, 0);
}

TEST(NeatSearchFlow, BudgetedAboveFourteen)
{
    Graph g = random_sphere(20, 3);
    auto r = neat_search(g, 100000, 7);
    if (r.coloring)
        EXPECT_TRUE(oracle::neat(g, *r.coloring));
    EXPECT_EQ(neat_search(g, 100000, 7).status, r.status);
}
