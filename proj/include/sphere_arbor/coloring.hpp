#ifndef SPHERE_ARBOR_COLORING_HPP
#define SPHERE_ARBOR_COLORING_HPP

#include <sphere_arbor/forest.hpp>
#include <sphere_arbor/graph.hpp>
#include <sphere_arbor/topology.hpp>

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace sphere_arbor {

/// vertex → color in {1,2,3,4}
using VertexColoring = std::map<Vertex, int>;

/// Total, proper, and using colors 1..4 only.
inline bool is_proper(const Graph& g, const VertexColoring& f)
{
    if (f.size() != g.order())
        return false;
    for (const auto& [v, c] : f)
        if (!g.has_vertex(v) || c < 1 || c > 4)
            return false;
    for (auto [u, v] : g.edges())
        if (f.at(u) == f.at(v))
            return false;
    return true;
}

inline std::string coloring_problem(const Graph& g, const VertexColoring& f)
{
    for (Vertex v : g.vertices())
        if (!f.contains(v))
            return "vertex " + std::to_string(v) + " is uncolored";
    for (const auto& [v, c] : f) {
        if (!g.has_vertex(v))
            return "colored vertex " + std::to_string(v) + " is not in the graph";
        if (c < 1 || c > 4)
            return "vertex " + std::to_string(v) + " has color " + std::to_string(c) + " outside 1..4";
    }
    for (auto [u, v] : g.edges())
        if (f.at(u) == f.at(v))
            return "edge (" + std::to_string(u) + "," + std::to_string(v) + ") is monochromatic";
    return {};
}

// ---------------------------------------------------------------------------
// Kempe classes

enum class KempeClass { A = 0, B = 1, C = 2 };

inline char to_char(KempeClass k) { return "ABC"[static_cast<int>(k)]; }

/// Klein four-group element of a color: 1 ↦ 1, 4 ↦ A, 3 ↦ B, 2 ↦ C, encoded
/// 0..3 and multiplied by XOR. Two colors then differ by exactly their class:
/// {12,34} → C, {13,24} → B, {14,23} → A.
inline int klein_of_color(int c)
{
    static constexpr std::array<int, 5> table{-1, 0, 3, 2, 1};
    return table.at(c);
}

inline int color_of_klein(int x)
{
    static constexpr std::array<int, 4> table{1, 4, 3, 2};
    return table.at(x);
}

inline KempeClass kempe_class(int c1, int c2)
{
    if (c1 == c2 || c1 < 1 || c1 > 4 || c2 < 1 || c2 > 4)
        throw InvalidInput("kempe_class needs two distinct colors in 1..4");
    return static_cast<KempeClass>((klein_of_color(c1) ^ klein_of_color(c2)) - 1);
}

struct KempeDecomposition {
    std::map<Edge, KempeClass> edge_class;
    std::array<Graph, 3> subgraphs; // spanning: all vertices, edges of one class

    const Graph& operator[](KempeClass k) const { return subgraphs[static_cast<int>(k)]; }
};

inline KempeDecomposition kempe_decompose(const Graph& g, const VertexColoring& f)
{
    if (auto why = coloring_problem(g, f); !why.empty())
        throw InvalidInput("kempe_decompose: " + why);
    KempeDecomposition d;
    for (auto& s : d.subgraphs)
        for (Vertex v : g.vertices())
            s.add_vertex(v);
    for (auto e : g.edges()) {
        KempeClass k = kempe_class(f.at(e.first), f.at(e.second));
        d.edge_class.emplace(e, k);
        d.subgraphs[static_cast<int>(k)].add_edge(e.first, e.second);
    }
    return d;
}

struct KempeLoop {
    KempeClass cls;
    std::vector<Vertex> cycle;
};

/// Fundamental cycles of each class subgraph with respect to a DFS forest:
/// one loop per non-tree edge. Empty iff every class is a forest.
inline std::vector<KempeLoop> kempe_loops(const KempeDecomposition& d)
{
    std::vector<KempeLoop> loops;
    for (int k = 0; k < 3; ++k) {
        const Graph& s = d.subgraphs[k];
        std::map<Vertex, Vertex> parent;
        std::map<Vertex, int> depth;
        for (Vertex root : s.vertices()) {
            if (parent.contains(root))
                continue;
            parent[root] = root;
            depth[root] = 0;
            std::vector<std::pair<Vertex, std::size_t>> stack{{root, 0}};
            while (!stack.empty()) {
                auto& [v, i] = stack.back();
                const auto& nb = s.neighbors(v);
                if (i == nb.size()) {
                    stack.pop_back();
                    continue;
                }
                Vertex w = nb[i++];
                if (!parent.contains(w)) {
                    parent[w] = v;
                    depth[w] = depth[v] + 1;
                    stack.emplace_back(w, 0);
                } else if (w != parent[v] && depth[w] < depth[v]) {
                    // back edge to an ancestor
                    std::vector<Vertex> cycle;
                    for (Vertex x = v; x != w; x = parent[x])
                        cycle.push_back(x);
                    cycle.push_back(w);
                    std::reverse(cycle.begin(), cycle.end());
                    loops.push_back({static_cast<KempeClass>(k), std::move(cycle)});
                }
            }
        }
    }
    return loops;
}

/// True when consecutive vertices of `cycle` (closed) are joined by edges of
/// a single class.
inline bool is_kempe_loop(const KempeDecomposition& d, const std::vector<Vertex>& cycle)
{
    if (cycle.size() < 3)
        return false;
    for (int k = 0; k < 3; ++k) {
        bool all = true;
        for (std::size_t i = 0; i < cycle.size() && all; ++i)
            all = d.subgraphs[k].has_edge(cycle[i], cycle[(i + 1) % cycle.size()]);
        if (all)
            return true;
    }
    return false;
}

/// A Kempe loop of f, if any.
inline std::optional<KempeLoop> find_kempe_loop(const Graph& g, const VertexColoring& f)
{
    auto d = kempe_decompose(g, f);
    for (int k = 0; k < 3; ++k)
        if (auto c = find_cycle(d.subgraphs[k].edges()))
            return KempeLoop{static_cast<KempeClass>(k), *c};
    return std::nullopt;
}

/// Proper and free of Kempe loops.
inline bool is_neat(const Graph& g, const VertexColoring& f)
{
    if (!is_proper(g, f))
        return false;
    std::array<UnionFind, 3> uf;
    for (auto [u, v] : g.edges())
        if (!uf[static_cast<int>(kempe_class(f.at(u), f.at(v)))].unite(u, v))
            return false;
    return true;
}

inline std::string describe(const KempeLoop& loop)
{
    std::string s = std::string("class ") + to_char(loop.cls) + " loop";
    for (Vertex v : loop.cycle)
        s += " " + std::to_string(v);
    return s;
}

/// Kempe classes of a neat coloring as a neat partition (classes A, B, C).
inline ForestPartition forests_from_coloring(const Graph& g, const VertexColoring& f)
{
    auto d = kempe_decompose(g, f);
    for (int k = 0; k < 3; ++k)
        if (auto c = find_cycle(d.subgraphs[k].edges()))
            throw Refusal("forests_from_coloring: coloring is not neat, " +
                          describe({static_cast<KempeClass>(k), *c}));
    ForestPartition p;
    p.classes.resize(3);
    for (const auto& [e, k] : d.edge_class)
        p.classes[static_cast<int>(k)].push_back(e);
    p.neat = true;
    return p;
}

/// Klein-group labels (0 = identity, 1 = A, 2 = B, 3 = C) obtained by walking
/// a BFS tree from the smallest vertex and multiplying by each edge's class.
/// Component roots are labelled 0.
inline std::map<Vertex, int> klein_labels_from_forests(const Graph& g, const ForestPartition& p)
{
    if (p.classes.size() != 3)
        throw InvalidInput("coloring_from_forests needs exactly three classes");
    std::map<Edge, int> element;
    for (int k = 0; k < 3; ++k)
        for (auto [u, v] : p.classes[k]) {
            if (!g.has_edge(u, v))
                throw InvalidInput("partition edge (" + std::to_string(u) + "," + std::to_string(v) +
                                   ") is not in the graph");
            if (!element.emplace(make_edge(u, v), k + 1).second)
                throw InvalidInput("partition classes are not disjoint");
        }
    if (element.size() != g.size())
        throw InvalidInput("partition does not cover every edge");

    std::map<Vertex, int> label;
    std::map<Vertex, Vertex> parent;
    for (Vertex root : g.vertices()) {
        if (label.contains(root))
            continue;
        label[root] = 0;
        parent[root] = root;
        std::vector<Vertex> queue{root};
        for (std::size_t i = 0; i < queue.size(); ++i) {
            Vertex v = queue[i];
            for (Vertex w : g.neighbors(v))
                if (!label.contains(w)) {
                    label[w] = label[v] ^ element.at(make_edge(v, w));
                    parent[w] = v;
                    queue.push_back(w);
                }
        }
    }
    for (const auto& [e, x] : element) {
        if ((label[e.first] ^ label[e.second]) == x)
            continue;
        // Holonomy of the cycle: tree path e.first → lca → e.second plus e.
        std::vector<Vertex> up{e.first}, down{e.second};
        std::set<Vertex> seen{e.first};
        for (Vertex v = e.first; parent[v] != v;)
            seen.insert(v = parent[v]);
        Vertex meet = e.second;
        while (!seen.contains(meet))
            down.push_back(meet = parent[meet]);
        for (Vertex v = e.first; v != meet;)
            up.push_back(v = parent[v]);
        up.pop_back();
        std::vector<Vertex> cycle = up;
        cycle.insert(cycle.end(), down.rbegin(), down.rend());
        std::string wit;
        for (Vertex v : cycle)
            wit += " " + std::to_string(v);
        throw Refusal("coloring_from_forests: nonzero holonomy around cycle" + wit);
    }
    return label;
}

/// Gauge construction: Klein labels mapped to colors (identity ↦ 1, A ↦ 4,
/// B ↦ 3, C ↦ 2), so the Kempe classes of the result are the partition's.
inline VertexColoring coloring_from_forests(const Graph& g, const ForestPartition& p)
{
    VertexColoring f;
    for (auto [v, x] : klein_labels_from_forests(g, p))
        f[v] = color_of_klein(x);
    return f;
}

/// Global translation by a Klein element t when g = t·f, else nullopt.
inline std::optional<int> klein_translation(const VertexColoring& f, const VertexColoring& g)
{
    if (f.size() != g.size() || f.empty())
        return std::nullopt;
    int t = klein_of_color(f.begin()->second) ^ klein_of_color(g.begin()->second);
    for (const auto& [v, c] : f) {
        auto it = g.find(v);
        if (it == g.end() || (klein_of_color(c) ^ klein_of_color(it->second)) != t)
            return std::nullopt;
    }
    return t;
}

// ---------------------------------------------------------------------------
// Kempe chains on (possibly partial) colorings

/// Vertices reachable from v through vertices colored f(v) or `other`.
inline std::vector<Vertex> kempe_chain(const Graph& g, const VertexColoring& f, Vertex v, int other)
{
    int c = f.at(v);
    std::set<Vertex> seen{v};
    std::vector<Vertex> queue{v};
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (Vertex w : g.neighbors(queue[i])) {
            auto it = f.find(w);
            if (it != f.end() && (it->second == c || it->second == other) && seen.insert(w).second)
                queue.push_back(w);
        }
    return queue;
}

inline void kempe_swap(VertexColoring& f, const std::vector<Vertex>& chain, int c1, int c2)
{
    for (Vertex v : chain) {
        int& c = f.at(v);
        c = c == c1 ? c2 : c == c2 ? c1 : c;
    }
}

// ---------------------------------------------------------------------------
// Four-coloring

namespace detail {

struct Dense {
    std::vector<Vertex> ids;
    std::vector<std::vector<int>> adj;

    explicit Dense(const Graph& g)
    {
        auto [h, map] = compact(g);
        ids.resize(map.size());
        for (auto [old, nw] : map)
            ids[nw] = old;
        adj.resize(ids.size());
        for (auto [u, v] : h.edges()) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
    }

    std::size_t size() const { return ids.size(); }
};

class FourColorer {
public:
    FourColorer(const Dense& d, std::uint64_t seed) : d_(d), rng_(seed) {}

    /// DSATUR greedy with Kempe repair; false when a vertex stays blocked.
    bool greedy(std::vector<int>& color)
    {
        const std::size_t n = d_.size();
        std::vector<std::uint64_t> tie(n);
        for (auto& t : tie)
            t = rng_();
        color.assign(n, 0);
        std::vector<unsigned> seen(n, 0); // bitmask of neighbor colors
        for (std::size_t step = 0; step < n; ++step) {
            int best = -1;
            for (std::size_t v = 0; v < n; ++v) {
                if (color[v])
                    continue;
                if (best < 0) {
                    best = static_cast<int>(v);
                    continue;
                }
                auto key = [&](std::size_t x) {
                    return std::tuple(std::popcount(seen[x]), d_.adj[x].size(), tie[x]);
                };
                if (key(v) > key(best))
                    best = static_cast<int>(v);
            }
            int c = first_free(color, best);
            if (!c && !(c = kempe_repair(color, best)))
                return false;
            color[best] = c;
            refresh(color, seen);
        }
        return true;
    }

    /// Complete DSATUR backtracking.
    bool exact(std::vector<int>& color)
    {
        color.assign(d_.size(), 0);
        return backtrack(color, 0);
    }

private:
    int first_free(const std::vector<int>& color, int v) const
    {
        unsigned used = 0;
        for (int w : d_.adj[v])
            if (color[w])
                used |= 1u << color[w];
        for (int c = 1; c <= 4; ++c)
            if (!(used >> c & 1))
                return c;
        return 0;
    }

    void refresh(const std::vector<int>& color, std::vector<unsigned>& seen) const
    {
        for (std::size_t v = 0; v < d_.size(); ++v) {
            seen[v] = 0;
            for (int w : d_.adj[v])
                if (color[w])
                    seen[v] |= 1u << color[w];
        }
    }

    std::vector<int> chain(const std::vector<int>& color, int start, int c1, int c2) const
    {
        std::vector<int> out{start};
        std::vector<char> in(d_.size(), 0);
        in[start] = 1;
        for (std::size_t i = 0; i < out.size(); ++i)
            for (int w : d_.adj[out[i]])
                if (!in[w] && (color[w] == c1 || color[w] == c2)) {
                    in[w] = 1;
                    out.push_back(w);
                }
        return out;
    }

    // Frees a color at v by swapping the (i,j) chains through v's i-neighbors,
    // provided none of them reaches a j-neighbor.
    int kempe_repair(std::vector<int>& color, int v)
    {
        for (int i = 1; i <= 4; ++i)
            for (int j = 1; j <= 4; ++j) {
                if (i == j)
                    continue;
                std::vector<char> mark(d_.size(), 0);
                std::vector<int> members;
                bool blocked = false;
                for (int w : d_.adj[v]) {
                    if (color[w] != i || mark[w])
                        continue;
                    for (int x : chain(color, w, i, j)) {
                        if (!mark[x]) {
                            mark[x] = 1;
                            members.push_back(x);
                        }
                    }
                }
                for (int w : d_.adj[v])
                    if (color[w] == j && mark[w])
                        blocked = true;
                if (blocked)
                    continue;
                for (int x : members)
                    color[x] = color[x] == i ? j : i;
                return i;
            }
        return 0;
    }

    bool backtrack(std::vector<int>& color, std::size_t done)
    {
        if (done == d_.size())
            return true;
        int best = -1, best_sat = -1, best_deg = -1;
        for (std::size_t v = 0; v < d_.size(); ++v) {
            if (color[v])
                continue;
            unsigned used = 0;
            for (int w : d_.adj[v])
                if (color[w])
                    used |= 1u << color[w];
            int sat = std::popcount(used);
            int deg = static_cast<int>(d_.adj[v].size());
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = static_cast<int>(v);
                best_sat = sat;
                best_deg = deg;
            }
        }
        unsigned used = 0;
        for (int w : d_.adj[best])
            if (color[w])
                used |= 1u << color[w];
        for (int c = 1; c <= 4; ++c) {
            if (used >> c & 1)
                continue;
            color[best] = c;
            if (backtrack(color, done + 1))
                return true;
        }
        color[best] = 0;
        return false;
    }

    const Dense& d_;
    std::mt19937_64 rng_;
};

} // namespace detail

/// Proper 4-coloring by DSATUR with Kempe-chain repair at dead ends, a few
/// seeded restarts, then complete backtracking. Deterministic per seed.
inline VertexColoring four_color(const Graph& g, std::uint64_t seed = 0)
{
    detail::Dense d(g);
    detail::FourColorer colorer(d, seed);
    std::vector<int> color;
    bool ok = false;
    for (int attempt = 0; attempt < 8 && !ok; ++attempt)
        ok = colorer.greedy(color);
    if (!ok)
        ok = colorer.exact(color);
    if (!ok) {
        if (is_two_sphere(g))
            throw InternalFailure("four_color: exhaustive search failed on a 2-sphere with " +
                                  std::to_string(g.order()) + " vertices");
        throw Refusal("four_color: graph is not 4-colorable");
    }
    VertexColoring f;
    for (std::size_t i = 0; i < d.size(); ++i)
        f[d.ids[i]] = color[i];
    return f;
}

// ---------------------------------------------------------------------------
// Eulerian 3-coloring

namespace detail {

// Seed triangle through the smallest vertex, then every colored edge forces
// the color of the third vertex of each triangle on it.
inline VertexColoring propagate_three_coloring(const Graph& g, bool sphere)
{
    VertexColoring f;
    if (g.empty())
        return f;
    Vertex a = g.vertices().front();
    Vertex b = g.neighbors(a).front();
    auto common = common_neighbors(g, a, b);
    if (common.empty())
        throw InvalidInput("three-coloring: no triangle through the smallest vertex");
    f[a] = 1;
    f[b] = 2;
    f[common.front()] = 3;
    std::vector<Edge> queue{make_edge(a, b), make_edge(a, common.front()), make_edge(b, common.front())};
    std::set<Edge> seen(queue.begin(), queue.end());
    for (std::size_t i = 0; i < queue.size(); ++i) {
        auto [u, w] = queue[i];
        int c = 6 - f.at(u) - f.at(w);
        for (Vertex x : common_neighbors(g, u, w)) {
            auto it = f.try_emplace(x, c).first;
            if (it->second == c) {
                for (Edge e : {make_edge(u, x), make_edge(w, x)})
                    if (seen.insert(e).second)
                        queue.push_back(e);
            } else {
                std::string msg = "three-coloring: propagation conflict at vertex " + std::to_string(x) +
                                  " (forced " + std::to_string(c) + ", has " + std::to_string(it->second) + ")";
                if (sphere)
                    throw InternalFailure(msg);
                throw Refusal(msg + "; the triangulation has nontrivial holonomy");
            }
        }
    }
    if (f.size() != g.order())
        throw Refusal("three-coloring: triangles do not reach every vertex");
    return f;
}

} // namespace detail

/// Heawood 3-coloring of a 2-sphere with all degrees even.
inline VertexColoring three_color_eulerian(const Graph& g)
{
    if (!is_two_sphere(g))
        throw InvalidInput("three_color_eulerian: input is not a 2-sphere");
    for (Vertex v : g.vertices())
        if (g.degree(v) % 2)
            throw InvalidInput("three_color_eulerian: vertex " + std::to_string(v) + " has odd degree");
    return detail::propagate_three_coloring(g, true);
}

/// Same propagation on any 2-manifold with even degrees. On surfaces other
/// than the sphere the forced colors may disagree around essential loops,
/// which is reported as a Refusal.
inline VertexColoring three_color_eulerian_manifold(const Graph& g)
{
    if (!is_two_manifold(g))
        throw InvalidInput("three_color_eulerian_manifold: input is not a 2-manifold");
    for (Vertex v : g.vertices())
        if (g.degree(v) % 2)
            throw InvalidInput("three_color_eulerian_manifold: vertex " + std::to_string(v) + " has odd degree");
    return detail::propagate_three_coloring(g, false);
}

// ---------------------------------------------------------------------------
// Neat colorings

enum class SearchStatus { Found, Exhausted, BudgetExceeded };

inline std::string_view to_string(SearchStatus s)
{
    switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::Exhausted: return "exhausted";
    case SearchStatus::BudgetExceeded: return "budget_exceeded";
    }
    return "?";
}

struct NeatSearchResult {
    SearchStatus status = SearchStatus::BudgetExceeded;
    std::optional<VertexColoring> coloring;
    long long nodes = 0;
};

namespace detail {

/// Depth-first search over colorings in a max-adjacency vertex order. Each
/// Kempe class keeps a union-find; a color is rejected when it closes a
/// monochromatic-class cycle. Colors are introduced in order (a new color
/// must be the next unused one), which removes the 24-fold color symmetry.
class NeatSearch {
public:
    explicit NeatSearch(const Graph& g) : d_(g)
    {
        const std::size_t n = d_.size();
        std::vector<char> placed(n, 0);
        std::vector<int> weight(n, 0);
        position_.assign(n, -1);
        for (std::size_t step = 0; step < n; ++step) {
            int best = -1;
            for (std::size_t v = 0; v < n; ++v) {
                if (placed[v])
                    continue;
                if (best < 0 || weight[v] > weight[best] ||
                    (weight[v] == weight[best] && d_.adj[v].size() > d_.adj[best].size()))
                    best = static_cast<int>(v);
            }
            placed[best] = 1;
            position_[best] = static_cast<int>(order_.size());
            order_.push_back(best);
            for (int w : d_.adj[best])
                ++weight[w];
        }
        earlier_.resize(n);
        for (std::size_t i = 0; i < n; ++i)
            for (int w : d_.adj[order_[i]])
                if (position_[w] < static_cast<int>(i))
                    earlier_[i].push_back(w);
    }

    /// `rng` null: colors tried in increasing order and the run is complete
    /// when it finishes within `budget`.
    NeatSearchResult run(long long budget, std::mt19937_64* rng)
    {
        const std::size_t n = d_.size();
        color_.assign(n, 0);
        for (auto& u : uf_)
            u.reset(n);
        nodes_ = 0;
        budget_ = budget;
        rng_ = rng;
        NeatSearchResult r;
        int outcome = dfs(0, 0);
        r.nodes = nodes_;
        if (outcome == 1) {
            r.status = SearchStatus::Found;
            VertexColoring f;
            for (std::size_t v = 0; v < n; ++v)
                f[d_.ids[v]] = color_[v];
            r.coloring = std::move(f);
        } else {
            r.status = outcome == 0 ? SearchStatus::Exhausted : SearchStatus::BudgetExceeded;
        }
        return r;
    }

    std::size_t order() const { return d_.size(); }

private:
    // 1 found, 0 exhausted, -1 out of budget
    int dfs(std::size_t depth, int max_used)
    {
        if (depth == order_.size())
            return 1;
        int v = order_[depth];
        std::array<int, 4> palette{1, 2, 3, 4};
        int limit = std::min(4, max_used + 1);
        if (rng_)
            std::shuffle(palette.begin(), palette.begin() + limit, *rng_);
        bool out_of_budget = false;
        for (int k = 0; k < limit; ++k) {
            int c = palette[k];
            if (++nodes_ > budget_)
                return -1;
            std::array<std::size_t, 3> marks{uf_[0].checkpoint(), uf_[1].checkpoint(), uf_[2].checkpoint()};
            bool ok = true;
            for (int w : earlier_[depth]) {
                int cw = color_[w];
                if (cw == c) {
                    ok = false;
                    break;
                }
                int cls = (klein_of_color(c) ^ klein_of_color(cw)) - 1;
                if (!uf_[cls].unite(v, w)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                color_[v] = c;
                int r = dfs(depth + 1, std::max(max_used, c));
                if (r == 1)
                    return 1;
                color_[v] = 0;
                if (r == -1)
                    out_of_budget = true;
            }
            for (int cls = 0; cls < 3; ++cls)
                uf_[cls].rollback(marks[cls]);
            if (out_of_budget)
                return -1;
        }
        return 0;
    }

    Dense d_;
    std::vector<int> order_;
    std::vector<int> position_;
    std::vector<std::vector<int>> earlier_;
    std::vector<int> color_;
    std::array<RollbackUnionFind, 3> uf_;
    long long nodes_ = 0;
    long long budget_ = 0;
    std::mt19937_64* rng_ = nullptr;
};

} // namespace detail

/// Searches for a neat proper 4-coloring. Below 14 vertices the search is a
/// single complete run; from 14 vertices on, a few short randomized probes
/// come first and the complete run gets the rest of the budget. `nodes`
/// counts tried color assignments. Exhausted is a proof that none exists.
inline NeatSearchResult neat_search(const Graph& g, long long budget = 2'000'000, std::uint64_t seed = 0)
{
    detail::NeatSearch search(g);
    long long spent = 0;
    if (g.order() >= 14) {
        std::mt19937_64 rng(seed);
        const long long probe = std::min<long long>(budget / 8, 20'000);
        for (int i = 0; i < 4 && probe > 0; ++i) {
            auto r = search.run(probe, &rng);
            spent += r.nodes;
            if (r.status != SearchStatus::BudgetExceeded) {
                r.nodes = spent;
                return r;
            }
        }
    }
    auto r = search.run(std::max<long long>(budget - spent, 0), nullptr);
    r.nodes += spent;
    return r;
}

// ---------------------------------------------------------------------------
// Enumeration

/// Relabels colors by first appearance in increasing vertex order: the
/// lexicographically smallest coloring among the 24 color permutations.
inline VertexColoring canonical_coloring(const VertexColoring& f)
{
    std::array<int, 5> relabel{};
    int next = 1;
    VertexColoring out;
    for (const auto& [v, c] : f) {
        if (!relabel.at(c))
            relabel[c] = next++;
        out[v] = relabel[c];
    }
    return out;
}

/// Visits every proper 4-coloring in canonical form exactly once; stops
/// early when `visit` returns false.
inline void for_each_canonical_coloring(const Graph& g, const std::function<bool(const VertexColoring&)>& visit)
{
    detail::Dense d(g);
    const std::size_t n = d.size();
    std::vector<int> color(n, 0);
    VertexColoring f;
    bool stop = false;
    std::function<void(std::size_t, int)> rec = [&](std::size_t v, int max_used) {
        if (stop)
            return;
        if (v == n) {
            for (std::size_t i = 0; i < n; ++i)
                f[d.ids[i]] = color[i];
            if (!visit(f))
                stop = true;
            return;
        }
        for (int c = 1; c <= std::min(4, max_used + 1) && !stop; ++c) {
            bool ok = true;
            for (int w : d.adj[v])
                if (w < static_cast<int>(v) && color[w] == c) {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            color[v] = c;
            rec(v + 1, std::max(max_used, c));
            color[v] = 0;
        }
    };
    rec(0, 0);
}

} // namespace sphere_arbor

#endif // SPHERE_ARBOR_COLORING_HPP
