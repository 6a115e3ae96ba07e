#ifndef SPHERE_ARBOR_ARBORICITY_HPP
#define SPHERE_ARBOR_ARBORICITY_HPP

#include <sphere_arbor/coloring.hpp>
#include <sphere_arbor/forest.hpp>
#include <sphere_arbor/graph.hpp>
#include <sphere_arbor/rational.hpp>
#include <sphere_arbor/topology.hpp>

#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace sphere_arbor {

enum class DensityMode { WholeGraph, ExactSmall };

inline constexpr std::size_t exact_density_cap = 20;
inline constexpr std::size_t exhaustive_partition_cap = 24;

/// WholeGraph: |E|/(|V|−1). ExactSmall: the maximum of |E_H|/(|V_H|−1) over
/// all subgraphs H generated by at least two vertices.
inline Rational nash_williams_density(const Graph& g, DensityMode mode = DensityMode::WholeGraph)
{
    if (mode == DensityMode::WholeGraph) {
        if (g.order() < 2 || !is_connected(g))
            throw InvalidInput("nash_williams_density: needs a connected graph with at least two vertices");
        return Rational(static_cast<long long>(g.size()), static_cast<long long>(g.order() - 1));
    }
    const std::size_t n = g.order();
    if (n > exact_density_cap)
        throw Refusal("nash_williams_density: exact scan is limited to " + std::to_string(exact_density_cap) +
                      " vertices");
    if (n < 2)
        throw InvalidInput("nash_williams_density: needs at least two vertices");
    auto [h, _] = compact(g);
    std::vector<std::uint32_t> adj(n, 0);
    for (auto [u, v] : h.edges()) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    // edges[S] = edges[S without its lowest vertex] + neighbors of it inside S
    std::vector<std::uint16_t> edges(std::size_t{1} << n, 0);
    long long best_num = 0, best_den = 1;
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
        int low = std::countr_zero(s);
        std::uint32_t rest = s & (s - 1);
        edges[s] = static_cast<std::uint16_t>(edges[rest] + std::popcount(adj[low] & rest));
        int k = std::popcount(s);
        if (k < 2)
            continue;
        long long num = edges[s], den = k - 1;
        if (num * best_den > best_num * den) {
            best_num = num;
            best_den = den;
        }
    }
    return Rational(best_num, best_den);
}

struct Verification {
    bool ok = true;
    std::string witness;

    explicit operator bool() const { return ok; }
};

/// Disjoint, covering, acyclic classes; when P claims neatness, also three
/// classes with every triangle meeting each exactly once. Reports the first
/// violation found.
inline Verification verify_forest_partition(const Graph& g, const ForestPartition& p)
{
    auto fail = [](std::string w) { return Verification{false, std::move(w)}; };
    auto name = [](Edge e) { return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")"; };
    std::map<Edge, std::size_t> owner;
    for (std::size_t k = 0; k < p.classes.size(); ++k)
        for (auto raw : p.classes[k]) {
            Edge e = make_edge(raw.first, raw.second);
            if (!g.has_edge(e.first, e.second))
                return fail("edge " + name(e) + " of class " + std::to_string(k) + " is not in the graph");
            auto [it, fresh] = owner.emplace(e, k);
            if (!fresh)
                return fail("edge " + name(e) + " appears in classes " + std::to_string(it->second) + " and " +
                            std::to_string(k));
        }
    for (auto e : g.edges())
        if (!owner.contains(e))
            return fail("edge " + name(e) + " is not covered");
    for (std::size_t k = 0; k < p.classes.size(); ++k)
        if (auto c = find_cycle(p.classes[k])) {
            std::string w = "class " + std::to_string(k) + " contains the cycle";
            for (Vertex v : *c)
                w += " " + std::to_string(v);
            return fail(w);
        }
    if (p.neat) {
        if (p.classes.size() != 3)
            return fail("a neat partition needs exactly three classes");
        bool bad = false;
        std::string w;
        for_each_clique(g, 3, [&](const std::vector<Vertex>& t) {
            if (bad || t.size() != 3)
                return;
            std::set<std::size_t> hit{owner.at(make_edge(t[0], t[1])), owner.at(make_edge(t[0], t[2])),
                                      owner.at(make_edge(t[1], t[2]))};
            if (hit.size() != 3) {
                bad = true;
                w = "triangle " + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) +
                    " does not meet all three classes";
            }
        });
        if (bad)
            return fail(w);
    }
    return {};
}

/// Two pole stars and the equator, with one equator edge u–w (the
/// lexicographically smallest) traded against the pole edge p–u.
inline ForestPartition prism_partition(const Graph& g, const PrismCertificate& cert)
{
    auto [p, q] = cert.poles;
    Edge uw{std::numeric_limits<Vertex>::max(), 0};
    const auto& eq = cert.equator;
    for (std::size_t i = 0; i < eq.size(); ++i)
        uw = std::min(uw, make_edge(eq[i], eq[(i + 1) % eq.size()]));
    Vertex u = uw.first;
    ForestPartition part;
    part.classes.resize(3);
    for (Vertex x : g.neighbors(p))
        if (x != u)
            part.classes[0].push_back(make_edge(p, x));
    part.classes[0].push_back(uw);
    for (Vertex x : g.neighbors(q))
        part.classes[1].push_back(make_edge(q, x));
    for (std::size_t i = 0; i < eq.size(); ++i) {
        Edge e = make_edge(eq[i], eq[(i + 1) % eq.size()]);
        if (e != uw)
            part.classes[2].push_back(e);
    }
    part.classes[2].push_back(make_edge(p, u));
    for (auto& c : part.classes)
        std::sort(c.begin(), c.end());
    auto check = verify_forest_partition(g, part);
    if (!check)
        throw InternalFailure("prism_partition: " + check.witness);
    return part;
}

/// Completes each forest to a spanning tree, borrowing edges of other classes.
inline std::vector<std::vector<Edge>> forests_to_tree_cover(const Graph& g, const ForestPartition& p)
{
    if (!is_connected(g))
        throw Refusal("forests_to_tree_cover: graph is not connected");
    auto check = verify_forest_partition(g, ForestPartition{p.classes, false});
    if (!check)
        throw InvalidInput("forests_to_tree_cover: " + check.witness);
    std::vector<std::vector<Edge>> trees;
    for (const auto& cls : p.classes) {
        UnionFind uf;
        std::vector<Edge> tree;
        for (auto e : cls) {
            uf.unite(e.first, e.second);
            tree.push_back(make_edge(e.first, e.second));
        }
        for (auto e : g.edges())
            if (uf.unite(e.first, e.second))
                tree.push_back(e);
        std::sort(tree.begin(), tree.end());
        trees.push_back(std::move(tree));
    }
    return trees;
}

namespace detail {

/// Can the edges be split into k forests? Backtracking in BFS edge order with
/// class symmetry breaking (an edge may open at most one new class).
inline bool partition_into_forests(const Graph& g, int k)
{
    auto [h, _] = compact(g);
    std::vector<Edge> order;
    {
        std::set<Edge> seen;
        std::vector<char> visited(h.order(), 0);
        for (Vertex root : h.vertices()) {
            if (visited[root])
                continue;
            visited[root] = 1;
            std::vector<Vertex> queue{root};
            for (std::size_t i = 0; i < queue.size(); ++i)
                for (Vertex w : h.neighbors(queue[i])) {
                    if (seen.insert(make_edge(queue[i], w)).second)
                        order.push_back(make_edge(queue[i], w));
                    if (!visited[w]) {
                        visited[w] = 1;
                        queue.push_back(w);
                    }
                }
        }
    }
    std::vector<RollbackUnionFind> uf(k, RollbackUnionFind(h.order()));
    std::function<bool(std::size_t, int)> rec = [&](std::size_t i, int used) {
        if (i == order.size())
            return true;
        auto [u, v] = order[i];
        for (int c = 0; c < std::min(k, used + 1); ++c) {
            auto mark = uf[c].checkpoint();
            if (!uf[c].unite(u, v))
                continue;
            if (rec(i + 1, std::max(used, c + 1)))
                return true;
            uf[c].rollback(mark);
        }
        return false;
    };
    return rec(0, 0);
}

inline int ceil_to_int(const Rational& r) { return static_cast<int>(ceil(r)); }

} // namespace detail

/// Arboricity by exhaustive partition search (|E| ≤ 24) and by the exact
/// Nash-Williams maximum (|V| ≤ 20); when both apply they must agree. The
/// empty graph has arboricity 0 and a graph without edges has arboricity 1.
inline int arboricity_exact_small(const Graph& g)
{
    if (g.empty())
        return 0;
    if (g.size() == 0)
        return 1;
    const bool exhaustive = g.size() <= exhaustive_partition_cap;
    const bool density = g.order() <= exact_density_cap;
    if (!exhaustive && !density)
        throw Refusal("arboricity_exact_small: needs |E| <= 24 or |V| <= 20");
    std::optional<int> by_search, by_density;
    if (density)
        by_density = detail::ceil_to_int(nash_williams_density(g, DensityMode::ExactSmall));
    if (exhaustive) {
        int k = 1;
        while (!detail::partition_into_forests(g, k))
            ++k;
        by_search = k;
    }
    if (by_search && by_density && *by_search != *by_density)
        throw InternalFailure("arboricity_exact_small: partition search gives " + std::to_string(*by_search) +
                              " but Nash-Williams gives " + std::to_string(*by_density));
    return by_search ? *by_search : *by_density;
}

/// ⌈n/2⌉, with K₁ declared to have arboricity 1.
inline int arboricity_k_n(int n)
{
    if (n < 1)
        throw InvalidInput("arboricity_k_n: n must be positive");
    return n == 1 ? 1 : (n + 1) / 2;
}

} // namespace sphere_arbor

#endif // SPHERE_ARBOR_ARBORICITY_HPP
