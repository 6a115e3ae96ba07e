#ifndef SPHERE_ARBOR_SURGERY_HPP
#define SPHERE_ARBOR_SURGERY_HPP

#include <sphere_arbor/graph.hpp>
#include <sphere_arbor/topology.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sphere_arbor {

// ---------------------------------------------------------------------------
// Generators

inline Graph cycle_graph(int n)
{
    if (n < 3)
        throw InvalidInput("cycle needs n >= 3");
    Graph g;
    for (int i = 0; i < n; ++i)
        g.add_vertex(i);
    for (int i = 0; i < n; ++i)
        g.add_edge(i, (i + 1) % n);
    return g;
}

inline Graph complete_graph(int n)
{
    if (n < 1)
        throw InvalidInput("complete graph needs n >= 1");
    Graph g;
    for (int i = 0; i < n; ++i)
        g.add_vertex(i);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            g.add_edge(i, j);
    return g;
}

/// S₀: two isolated vertices.
inline Graph zero_sphere()
{
    Graph g;
    g.add_vertex(0);
    g.add_vertex(1);
    return g;
}

/// Vertices 0..5; antipodal pairs are {0,1}, {2,3}, {4,5}.
inline Graph octahedron()
{
    Graph g;
    for (int i = 0; i < 6; ++i)
        g.add_vertex(i);
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            if (i / 2 != j / 2)
                g.add_edge(i, j);
    return g;
}

/// North pole 0, upper ring 1..5, lower ring 6..10, south pole 11.
inline Graph icosahedron()
{
    Graph g;
    for (int i = 0; i < 12; ++i)
        g.add_vertex(i);
    for (int k = 0; k < 5; ++k) {
        int up = 1 + k, up_next = 1 + (k + 1) % 5;
        int lo = 6 + k, lo_next = 6 + (k + 1) % 5;
        g.add_edge(0, up);
        g.add_edge(up, up_next);
        g.add_edge(11, lo);
        g.add_edge(lo, lo_next);
        g.add_edge(up, lo);
        g.add_edge(up, lo_next);
    }
    return g;
}

/// C_n ⊕ S₀: equator 0..n-1, poles n and n+1.
inline Graph prism(int n)
{
    if (n < 4)
        throw InvalidInput("prism needs n >= 4 (shorter equators give unit spheres of length < 4)");
    return zykov_join(cycle_graph(n), shifted(zero_sphere(), n));
}

/// m×n grid with both boundary pairs identified, each square cut along the
/// same diagonal. Vertex (i,j) has id i·n + j.
inline Graph torus_grid(int m, int n)
{
    if (m < 4 || n < 4)
        throw InvalidInput("torus_grid needs m, n >= 4");
    Graph g;
    auto id = [n](int i, int j) { return i * n + j; };
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            g.add_vertex(id(i, j));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            int i1 = (i + 1) % m, j1 = (j + 1) % n;
            g.add_edge(id(i, j), id(i1, j));
            g.add_edge(id(i, j), id(i, j1));
            g.add_edge(id(i, j), id(i1, j1));
        }
    return g;
}

/// Named generators: octahedron, icosahedron, prism n, cycle n, complete n,
/// torus m n.
inline Graph generate(std::string_view kind, const std::vector<int>& params = {})
{
    auto need = [&](std::size_t k) {
        if (params.size() != k)
            throw InvalidInput(std::string(kind) + " takes " + std::to_string(k) + " parameter(s)");
    };
    if (kind == "octahedron") {
        need(0);
        return octahedron();
    }
    if (kind == "icosahedron") {
        need(0);
        return icosahedron();
    }
    if (kind == "prism") {
        need(1);
        return prism(params[0]);
    }
    if (kind == "cycle") {
        need(1);
        return cycle_graph(params[0]);
    }
    if (kind == "complete") {
        need(1);
        return complete_graph(params[0]);
    }
    if (kind == "torus" || kind == "torus_grid") {
        need(2);
        return torus_grid(params[0], params[1]);
    }
    throw InvalidInput("unknown generator '" + std::string(kind) + "'");
}

// ---------------------------------------------------------------------------
// Surgery steps

enum class StepKind {
    EdgeRefine,   // actors {a,b}; created {w}
    EdgeCollapse, // actors {v,a,b}: v removed, diagonal (a,b) restored
    VertexRefine, // actors {v,a,b}; created {w}
    KiteCollapse, // actors {c,d,a,b}: spine (c,d) contracted into c
    DiamondMerge, // actors {a,b,c,d}; removed = center line; b merged into a
    KiteFold,     // actors {c,d,a,b}: spine edge deleted, tip b merged into a
};

inline std::string_view to_string(StepKind k)
{
    switch (k) {
    case StepKind::EdgeRefine: return "EdgeRefine";
    case StepKind::EdgeCollapse: return "EdgeCollapse";
    case StepKind::VertexRefine: return "VertexRefine";
    case StepKind::KiteCollapse: return "KiteCollapse";
    case StepKind::DiamondMerge: return "DiamondMerge";
    case StepKind::KiteFold: return "KiteFold";
    }
    return "?";
}

inline StepKind step_kind_from_string(std::string_view s)
{
    for (auto k : {StepKind::EdgeRefine, StepKind::EdgeCollapse, StepKind::VertexRefine,
                   StepKind::KiteCollapse, StepKind::DiamondMerge, StepKind::KiteFold})
        if (to_string(k) == s)
            return k;
    throw InvalidInput("unknown surgery step kind '" + std::string(s) + "'");
}

struct SurgeryStep {
    StepKind kind{};
    std::vector<Vertex> actors;
    std::vector<Vertex> created;
    std::vector<std::pair<Vertex, Vertex>> merged; // (kept, absorbed)
    std::vector<Vertex> removed;

    friend bool operator==(const SurgeryStep&, const SurgeryStep&) = default;
};

struct SurgeryResult {
    Graph graph;
    SurgeryStep step;
};

namespace detail {

/// Moves every edge of `absorbed` onto `kept` and deletes `absorbed`.
inline void merge_into(Graph& g, Vertex kept, Vertex absorbed)
{
    auto nbrs = g.neighbors(absorbed);
    g.remove_vertex(absorbed);
    for (Vertex w : nbrs)
        if (w != kept)
            g.add_edge(kept, w);
}

inline bool link_has_length(const Graph& g, Vertex v, std::size_t len)
{
    auto cyc = link_cycle(g, v);
    return cyc && cyc->size() == len && len >= 4;
}

inline std::string vname(Vertex v) { return std::to_string(v); }

} // namespace detail

/// Subdivides edge (a,b): a new vertex w joins a, b and their two common
/// neighbors, and (a,b) is removed.
inline SurgeryResult edge_refine(const Graph& g, Vertex a, Vertex b)
{
    if (!g.has_edge(a, b))
        throw InvalidInput("edge_refine: (" + detail::vname(a) + "," + detail::vname(b) + ") is not an edge");
    auto common = common_neighbors(g, a, b);
    if (common.size() != 2)
        throw InvalidInput("edge_refine: edge is not in exactly two triangles");
    Graph h = g;
    Vertex w = h.fresh_id();
    h.add_vertex(w);
    h.remove_edge(a, b);
    for (Vertex x : {a, b, common[0], common[1]})
        h.add_edge(w, x);
    return {std::move(h), SurgeryStep{StepKind::EdgeRefine, {a, b}, {w}, {}, {}}};
}

/// Refusal message, or empty when removing the degree-4 vertex v and
/// restoring diagonal (a,b) yields a 2-sphere.
inline std::string edge_collapse_obstruction(const Graph& g, Vertex v, Vertex a, Vertex b)
{
    if (!g.has_vertex(v) || g.degree(v) != 4)
        return "vertex does not have degree 4";
    auto cyc = link_cycle(g, v);
    if (!cyc)
        return "unit sphere is not a cycle";
    const auto& c = *cyc;
    std::size_t ia = std::find(c.begin(), c.end(), a) - c.begin();
    std::size_t ib = std::find(c.begin(), c.end(), b) - c.begin();
    if (ia == 4 || ib == 4 || (ia + 2) % 4 != ib)
        return "(a,b) is not a diagonal of the unit sphere";
    if (g.has_edge(a, b))
        return "diagonal endpoints are already adjacent";
    Vertex s = c[(ia + 1) % 4], t = c[(ia + 3) % 4];
    if (g.degree(s) < 5 || g.degree(t) < 5)
        return "an off-diagonal neighbor would drop below degree 4";
    auto common = common_neighbors(g, a, b);
    if (common.size() != 3)
        return "diagonal endpoints share a neighbor outside the wheel";
    return {};
}

/// Inverse of edge_refine: deletes the degree-4 vertex v and restores the
/// diagonal (a,b) of its unit sphere.
inline SurgeryResult edge_collapse(const Graph& g, Vertex v, Vertex a, Vertex b)
{
    if (auto why = edge_collapse_obstruction(g, v, a, b); !why.empty())
        throw Refusal("edge_collapse at " + detail::vname(v) + ": " + why);
    Graph h = g;
    h.remove_vertex(v);
    h.add_edge(a, b);
    return {std::move(h), SurgeryStep{StepKind::EdgeCollapse, {v, a, b}, {}, {}, {v}}};
}

/// Edge collapse with the classical guard: every neighbor of v has degree at
/// least 6. Restores the diagonal through the smallest neighbor.
inline SurgeryResult edge_collapse(const Graph& g, Vertex v)
{
    if (!g.has_vertex(v) || g.degree(v) != 4)
        throw Refusal("edge_collapse: vertex does not have degree 4");
    for (Vertex w : g.neighbors(v))
        if (g.degree(w) < 6)
            throw Refusal("edge_collapse: neighbor " + detail::vname(w) + " has degree < 6");
    auto cyc = link_cycle(g, v);
    if (!cyc)
        throw Refusal("edge_collapse: unit sphere is not a cycle");
    return edge_collapse(g, v, (*cyc)[0], (*cyc)[2]);
}

/// Splits v along the non-adjacent pair a,b of S(v). Walking the link cycle
/// (link_cycle order) forward from a, the vertices strictly between a and b
/// move to the new vertex w; v keeps the rest. Both v and w stay adjacent to
/// a and b, and v–w becomes an edge.
inline SurgeryResult vertex_refine(const Graph& g, Vertex v, Vertex a, Vertex b)
{
    if (!g.has_vertex(v))
        throw InvalidInput("vertex_refine: unknown vertex " + detail::vname(v));
    if (a == b || !g.has_edge(v, a) || !g.has_edge(v, b))
        throw InvalidInput("vertex_refine: a and b must be distinct neighbors of v");
    if (g.has_edge(a, b))
        throw InvalidInput("vertex_refine: a and b are adjacent");
    auto cyc = link_cycle(g, v);
    if (!cyc)
        throw InvalidInput("vertex_refine: unit sphere is not a cycle");
    const auto& c = *cyc;
    const std::size_t d = c.size();
    std::size_t ia = std::find(c.begin(), c.end(), a) - c.begin();
    std::vector<Vertex> arc;
    for (std::size_t k = (ia + 1) % d; c[k] != b; k = (k + 1) % d)
        arc.push_back(c[k]);
    Graph h = g;
    Vertex w = h.fresh_id();
    h.add_vertex(w);
    for (Vertex x : arc) {
        h.remove_edge(v, x);
        h.add_edge(w, x);
    }
    h.add_edge(w, v);
    h.add_edge(w, a);
    h.add_edge(w, b);
    return {std::move(h), SurgeryStep{StepKind::VertexRefine, {v, a, b}, {w}, {}, {}}};
}

inline bool is_kite(const Graph& g, Vertex c, Vertex d, Vertex a, Vertex b)
{
    for (Vertex x : {c, d, a, b})
        if (!g.has_vertex(x))
            return false;
    return g.has_edge(c, d) && g.has_edge(c, a) && g.has_edge(c, b) && g.has_edge(d, a) &&
           g.has_edge(d, b) && !g.has_edge(a, b) && a != b;
}

/// Refusal message, or empty when contracting the spine (c,d) of kite
/// (c,d;a,b) yields a 2-sphere.
inline std::string kite_collapse_obstruction(const Graph& g, Vertex c, Vertex d, Vertex a, Vertex b)
{
    if (!is_kite(g, c, d, a, b))
        return "not a kite (c,d spine; a,b non-adjacent tips)";
    if (g.degree(a) < 5 || g.degree(b) < 5)
        return "a tip has degree < 5";
    auto common = common_neighbors(g, c, d);
    if (common != std::vector<Vertex>{std::min(a, b), std::max(a, b)})
        return "spine endpoints share neighbors beyond the tips";
    Graph h = g;
    detail::merge_into(h, c, d);
    if (!detail::link_has_length(h, c, g.degree(c) + g.degree(d) - 4))
        return "merged unit sphere is not a chordless cycle (separating 4-cycle through the spine)";
    return {};
}

/// Inverse of vertex_refine: contracts the spine (c,d) of the kite (c,d;a,b)
/// into c. Both tips lose one degree.
inline SurgeryResult kite_collapse(const Graph& g, Vertex c, Vertex d, Vertex a, Vertex b)
{
    if (auto why = kite_collapse_obstruction(g, c, d, a, b); !why.empty())
        throw Refusal("kite_collapse: " + why);
    Graph h = g;
    detail::merge_into(h, c, d);
    h.inherit_ids(g);
    return {std::move(h), SurgeryStep{StepKind::KiteCollapse, {c, d, a, b}, {}, {{c, d}}, {}}};
}

/// Refusal message, or empty when deleting the spine edge of kite (c,d;a,b)
/// and identifying the tips a,b yields a 2-sphere.
inline std::string kite_fold_obstruction(const Graph& g, Vertex c, Vertex d, Vertex a, Vertex b)
{
    if (!is_kite(g, c, d, a, b))
        return "not a kite (c,d spine; a,b non-adjacent tips)";
    if (g.degree(c) < 6 || g.degree(d) < 6)
        return "a spine vertex has degree < 6";
    auto common = common_neighbors(g, a, b);
    if (common != std::vector<Vertex>{std::min(c, d), std::max(c, d)})
        return "tips share neighbors beyond the spine";
    Graph h = g;
    h.remove_edge(c, d);
    detail::merge_into(h, a, b);
    if (!detail::link_has_length(h, a, g.degree(a) + g.degree(b) - 2))
        return "merged unit sphere is not a chordless cycle";
    return {};
}

/// Deletes the spine edge (c,d) and identifies the tips, keeping a.
inline SurgeryResult kite_fold(const Graph& g, Vertex c, Vertex d, Vertex a, Vertex b)
{
    if (auto why = kite_fold_obstruction(g, c, d, a, b); !why.empty())
        throw Refusal("kite_fold: " + why);
    Graph h = g;
    h.remove_edge(c, d);
    detail::merge_into(h, a, b);
    h.inherit_ids(g);
    return {std::move(h), SurgeryStep{StepKind::KiteFold, {c, d, a, b}, {}, {{a, b}}, {}}};
}

/// Ends of a center line: the neighbors of its first/last vertex outside the
/// diamond. Empty when `line` is not a path of degree-4 vertices suspended
/// between a and b.
inline std::optional<std::pair<Vertex, Vertex>> diamond_ends(const Graph& g, Vertex a, Vertex b,
                                                             const std::vector<Vertex>& line)
{
    if (line.empty() || a == b || !g.has_vertex(a) || !g.has_vertex(b))
        return std::nullopt;
    for (std::size_t i = 0; i < line.size(); ++i) {
        Vertex q = line[i];
        if (!g.has_vertex(q) || g.degree(q) != 4 || !g.has_edge(q, a) || !g.has_edge(q, b))
            return std::nullopt;
        if (i > 0 && !g.has_edge(q, line[i - 1]))
            return std::nullopt;
    }
    auto outside = [&](Vertex q, std::initializer_list<Vertex> inside) -> std::vector<Vertex> {
        std::vector<Vertex> out;
        for (Vertex w : g.neighbors(q))
            if (std::find(inside.begin(), inside.end(), w) == inside.end())
                out.push_back(w);
        return out;
    };
    if (line.size() == 1) {
        auto rest = outside(line[0], {a, b});
        if (rest.size() != 2 || g.has_edge(rest[0], rest[1]))
            return std::nullopt;
        return std::pair{rest[0], rest[1]};
    }
    auto first = outside(line.front(), {a, b, line[1]});
    auto last = outside(line.back(), {a, b, line[line.size() - 2]});
    if (first.size() != 1 || last.size() != 1 || first[0] == last[0])
        return std::nullopt;
    return std::pair{first[0], last[0]};
}

inline std::string diamond_merge_obstruction(const Graph& g, Vertex a, Vertex b, const std::vector<Vertex>& line)
{
    auto ends = diamond_ends(g, a, b, line);
    if (!ends)
        return "center line is not a path of degree-4 vertices suspended between a and b";
    auto [c, d] = *ends;
    if (g.has_edge(a, b))
        return "suspension vertices are adjacent";
    if (g.degree(c) < 6 || g.degree(d) < 6)
        return "an end vertex of the diamond has degree < 6";
    std::vector<Vertex> expected = line;
    expected.push_back(c);
    expected.push_back(d);
    std::sort(expected.begin(), expected.end());
    if (common_neighbors(g, a, b) != expected)
        return "suspension vertices share neighbors outside the diamond";
    Graph h = g;
    for (Vertex q : line)
        h.remove_vertex(q);
    detail::merge_into(h, a, b);
    if (!detail::link_has_length(h, a, g.degree(a) + g.degree(b) - 2 * line.size() - 2))
        return "merged unit sphere is not a chordless cycle";
    return {};
}

/// Removes the center line of the Kempe diamond line + {a,b} and identifies
/// a and b (a is kept).
inline SurgeryResult diamond_merge(const Graph& g, Vertex a, Vertex b, const std::vector<Vertex>& line)
{
    if (auto why = diamond_merge_obstruction(g, a, b, line); !why.empty())
        throw Refusal("diamond_merge: " + why);
    auto [c, d] = *diamond_ends(g, a, b, line);
    Graph h = g;
    for (Vertex q : line)
        h.remove_vertex(q);
    detail::merge_into(h, a, b);
    h.inherit_ids(g);
    return {std::move(h), SurgeryStep{StepKind::DiamondMerge, {a, b, c, d}, {}, {{a, b}}, line}};
}

/// Replays a recorded step on its pre-graph.
inline Graph apply_step(const Graph& g, const SurgeryStep& s)
{
    auto need = [&](std::size_t k) {
        if (s.actors.size() != k)
            throw InvalidInput("malformed " + std::string(to_string(s.kind)) + " step");
    };
    Graph out;
    switch (s.kind) {
    case StepKind::EdgeRefine:
        need(2);
        out = edge_refine(g, s.actors[0], s.actors[1]).graph;
        break;
    case StepKind::EdgeCollapse:
        need(3);
        out = edge_collapse(g, s.actors[0], s.actors[1], s.actors[2]).graph;
        break;
    case StepKind::VertexRefine:
        need(3);
        out = vertex_refine(g, s.actors[0], s.actors[1], s.actors[2]).graph;
        break;
    case StepKind::KiteCollapse:
        need(4);
        out = kite_collapse(g, s.actors[0], s.actors[1], s.actors[2], s.actors[3]).graph;
        break;
    case StepKind::DiamondMerge:
        need(4);
        out = diamond_merge(g, s.actors[0], s.actors[1], s.removed).graph;
        break;
    case StepKind::KiteFold:
        need(4);
        out = kite_fold(g, s.actors[0], s.actors[1], s.actors[2], s.actors[3]).graph;
        break;
    }
    return out;
}

/// Every (v, a, b) with a < b non-adjacent in S(v), i.e. every distinct
/// vertex_refine placement up to swapping the roles of v and w.
inline std::vector<std::array<Vertex, 3>> vertex_refine_placements(const Graph& g)
{
    std::vector<std::array<Vertex, 3>> out;
    for (Vertex v : g.vertices()) {
        const auto& nb = g.neighbors(v);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                if (!g.has_edge(nb[i], nb[j]))
                    out.push_back({v, nb[i], nb[j]});
    }
    return out;
}

/// Deterministic random 2-sphere: starts from the octahedron and applies
/// edge refinements (70%) or vertex refinements (30%) until |V| = n.
inline Graph random_sphere(int n, std::uint64_t seed)
{
    if (n < 6)
        throw InvalidInput("random_sphere needs n >= 6: the octahedron is the smallest 2-sphere");
    std::mt19937_64 rng(seed);
    auto pick = [&rng](std::size_t k) { return static_cast<std::size_t>(rng() % k); };
    Graph g = octahedron();
    while (static_cast<int>(g.order()) < n) {
        auto vs = g.vertices();
        Vertex v = vs[pick(vs.size())];
        const auto cyc = *link_cycle(g, v);
        if (pick(10) < 7) {
            g = edge_refine(g, v, cyc[pick(cyc.size())]).graph;
        } else {
            const std::size_t d = cyc.size();
            std::size_t i = pick(d);
            std::size_t gap = 2 + pick(d - 3); // 2..d-2 keeps a,b non-adjacent
            g = vertex_refine(g, v, cyc[i], cyc[(i + gap) % d]).graph;
        }
    }
    return g;
}

} // namespace sphere_arbor

#endif // SPHERE_ARBOR_SURGERY_HPP
