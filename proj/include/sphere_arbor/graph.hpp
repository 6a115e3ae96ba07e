#ifndef SPHERE_ARBOR_GRAPH_HPP
#define SPHERE_ARBOR_GRAPH_HPP

#include <sphere_arbor/errors.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <iterator>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sphere_arbor {

using Vertex = int;

/// Undirected edge, always stored with first < second.
using Edge = std::pair<Vertex, Vertex>;

inline Edge make_edge(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }

/// Finite simple undirected graph with stable integer vertex identifiers.
///
/// Adjacency lists are kept sorted. The graph also remembers the highest
/// identifier ever allocated in its lineage, so that surgeries which remove
/// vertices never hand out a removed identifier again (see fresh_id()).
class Graph {
public:
    Graph() = default;

    explicit Graph(std::span<const Vertex> vertices, std::span<const Edge> edges = {})
    {
        for (Vertex v : vertices)
            add_vertex(v);
        for (auto [u, v] : edges)
            add_edge(u, v);
    }

    /// Graph whose vertex set is exactly the endpoints of `edges`.
    static Graph from_edges(std::span<const Edge> edges)
    {
        Graph g;
        for (auto [u, v] : edges) {
            g.add_vertex(u);
            g.add_vertex(v);
            g.add_edge(u, v);
        }
        return g;
    }

    void add_vertex(Vertex v)
    {
        if (v < 0)
            throw InvalidInput("vertex identifiers must be non-negative, got " + std::to_string(v));
        adj_.try_emplace(v);
        next_id_ = std::max(next_id_, v + 1);
    }

    /// Adds (u,v); both endpoints must exist. Adding an existing edge is a no-op.
    void add_edge(Vertex u, Vertex v)
    {
        if (u == v)
            throw InvalidInput("self-loop at vertex " + std::to_string(u));
        auto& nu = mutable_neighbors(u);
        auto& nv = mutable_neighbors(v);
        auto it = std::lower_bound(nu.begin(), nu.end(), v);
        if (it != nu.end() && *it == v)
            return;
        nu.insert(it, v);
        nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
        ++edge_count_;
    }

    void remove_edge(Vertex u, Vertex v)
    {
        auto& nu = mutable_neighbors(u);
        auto& nv = mutable_neighbors(v);
        auto it = std::lower_bound(nu.begin(), nu.end(), v);
        if (it == nu.end() || *it != v)
            throw InvalidInput("no edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        nu.erase(it);
        nv.erase(std::lower_bound(nv.begin(), nv.end(), u));
        --edge_count_;
    }

    void remove_vertex(Vertex v)
    {
        auto nbrs = neighbors(v);
        for (Vertex w : nbrs)
            remove_edge(v, w);
        adj_.erase(v);
    }

    bool has_vertex(Vertex v) const { return adj_.contains(v); }

    bool has_edge(Vertex u, Vertex v) const
    {
        auto it = adj_.find(u);
        if (it == adj_.end())
            return false;
        return std::binary_search(it->second.begin(), it->second.end(), v);
    }

    std::size_t order() const { return adj_.size(); }
    std::size_t size() const { return edge_count_; }
    bool empty() const { return adj_.empty(); }

    const std::vector<Vertex>& neighbors(Vertex v) const
    {
        auto it = adj_.find(v);
        if (it == adj_.end())
            throw InvalidInput("unknown vertex " + std::to_string(v));
        return it->second;
    }

    std::size_t degree(Vertex v) const { return neighbors(v).size(); }

    std::vector<Vertex> vertices() const
    {
        std::vector<Vertex> out;
        out.reserve(adj_.size());
        for (const auto& [v, _] : adj_)
            out.push_back(v);
        return out;
    }

    /// All edges, sorted lexicographically.
    std::vector<Edge> edges() const
    {
        std::vector<Edge> out;
        out.reserve(edge_count_);
        for (const auto& [v, nbrs] : adj_)
            for (Vertex w : nbrs)
                if (v < w)
                    out.emplace_back(v, w);
        return out;
    }

    const std::map<Vertex, std::vector<Vertex>>& adjacency() const { return adj_; }

    /// An identifier not used by this graph or any graph it was derived from.
    Vertex fresh_id() const { return next_id_; }

    /// Carries the identifier high-water mark of `origin` into this graph.
    void inherit_ids(const Graph& origin) { next_id_ = std::max(next_id_, origin.next_id_); }

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
    std::vector<Vertex>& mutable_neighbors(Vertex v)
    {
        auto it = adj_.find(v);
        if (it == adj_.end())
            throw InvalidInput("unknown vertex " + std::to_string(v));
        return it->second;
    }

    std::map<Vertex, std::vector<Vertex>> adj_;
    std::size_t edge_count_ = 0;
    Vertex next_id_ = 0;
};

/// Subgraph generated by `subset`: every edge of g with both ends in the set.
inline Graph induced_subgraph(const Graph& g, std::span<const Vertex> subset)
{
    Graph h;
    for (Vertex v : subset) {
        if (!g.has_vertex(v))
            throw InvalidInput("induced_subgraph: unknown vertex " + std::to_string(v));
        h.add_vertex(v);
    }
    for (Vertex v : h.vertices())
        for (Vertex w : g.neighbors(v))
            if (v < w && h.has_vertex(w))
                h.add_edge(v, w);
    return h;
}

/// S(v): the subgraph generated by the neighbors of v.
inline Graph unit_sphere(const Graph& g, Vertex v)
{
    if (!g.has_vertex(v))
        throw InvalidInput("unit_sphere: unknown vertex " + std::to_string(v));
    return induced_subgraph(g, g.neighbors(v));
}

/// Sorted common neighbors of a and b.
inline std::vector<Vertex> common_neighbors(const Graph& g, Vertex a, Vertex b)
{
    const auto& na = g.neighbors(a);
    const auto& nb = g.neighbors(b);
    std::vector<Vertex> out;
    std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(), std::back_inserter(out));
    return out;
}

/// Calls `visit` on every clique with at most `max_size` vertices (sorted
/// vertex lists, the empty clique excluded). Each clique is extended only by
/// neighbors larger than its last vertex, so every clique is seen once.
inline void for_each_clique(const Graph& g, std::size_t max_size,
                            const std::function<void(const std::vector<Vertex>&)>& visit)
{
    std::vector<Vertex> clique;
    std::function<void(const std::vector<Vertex>&)> grow = [&](const std::vector<Vertex>& candidates) {
        visit(clique);
        if (clique.size() == max_size)
            return;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            Vertex v = candidates[i];
            std::vector<Vertex> next;
            const auto& nv = g.neighbors(v);
            for (std::size_t j = i + 1; j < candidates.size(); ++j)
                if (std::binary_search(nv.begin(), nv.end(), candidates[j]))
                    next.push_back(candidates[j]);
            clique.push_back(v);
            grow(next);
            clique.pop_back();
        }
    };
    if (max_size == 0)
        return;
    for (const auto& [v, nbrs] : g.adjacency()) {
        std::vector<Vertex> higher(std::upper_bound(nbrs.begin(), nbrs.end(), v), nbrs.end());
        clique.assign(1, v);
        grow(higher);
    }
}

/// All cliques, ordered by size and then lexicographically.
inline std::vector<std::vector<Vertex>> cliques(const Graph& g)
{
    std::vector<std::vector<Vertex>> out;
    for_each_clique(g, g.order(), [&](const std::vector<Vertex>& c) { out.push_back(c); });
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

/// Clique counts by dimension: counts[k] is the number of K_{k+1} subgraphs.
struct FVector {
    std::vector<std::int64_t> counts;

    std::int64_t operator[](std::size_t k) const { return k < counts.size() ? counts[k] : 0; }
    std::size_t size() const { return counts.size(); }
    friend bool operator==(const FVector&, const FVector&) = default;
};

/// f-vector truncated (or zero-padded) to dimensions 0..max_dim.
inline FVector f_vector(const Graph& g, std::size_t max_dim)
{
    FVector f{std::vector<std::int64_t>(max_dim + 1, 0)};
    for_each_clique(g, max_dim + 1, [&](const std::vector<Vertex>& c) { ++f.counts[c.size() - 1]; });
    return f;
}

/// Full f-vector, up to the largest dimension with a non-zero count.
inline FVector f_vector(const Graph& g)
{
    FVector f;
    for_each_clique(g, g.order(), [&](const std::vector<Vertex>& c) {
        if (f.counts.size() < c.size())
            f.counts.resize(c.size(), 0);
        ++f.counts[c.size() - 1];
    });
    return f;
}

inline std::int64_t euler_characteristic(const FVector& f)
{
    std::int64_t chi = 0;
    for (std::size_t k = 0; k < f.counts.size(); ++k)
        chi += (k % 2 == 0 ? 1 : -1) * f.counts[k];
    return chi;
}

inline std::int64_t euler_characteristic(const Graph& g) { return euler_characteristic(f_vector(g)); }

inline std::vector<std::vector<Vertex>> connected_components(const Graph& g)
{
    std::vector<std::vector<Vertex>> comps;
    std::set<Vertex> seen;
    for (const auto& [start, _] : g.adjacency()) {
        if (seen.contains(start))
            continue;
        std::vector<Vertex> comp{start}, stack{start};
        seen.insert(start);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(v))
                if (seen.insert(w).second) {
                    comp.push_back(w);
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

/// Connected and non-empty.
inline bool is_connected(const Graph& g) { return connected_components(g).size() == 1; }

/// Copy of g with every identifier shifted by `offset`.
inline Graph shifted(const Graph& g, Vertex offset)
{
    Graph h;
    for (Vertex v : g.vertices())
        h.add_vertex(v + offset);
    for (auto [u, v] : g.edges())
        h.add_edge(u + offset, v + offset);
    return h;
}

namespace detail {

/// h relabelled so that its identifiers avoid those of g, if they collide.
inline Graph disjoint_copy(const Graph& g, const Graph& h)
{
    if (g.empty() || h.empty())
        return h;
    bool collide = false;
    for (Vertex v : h.vertices())
        if (g.has_vertex(v)) {
            collide = true;
            break;
        }
    if (!collide)
        return h;
    Vertex offset = g.fresh_id() - h.vertices().front();
    return shifted(h, offset);
}

} // namespace detail

/// G ⊔ H; H is relabelled when identifiers collide.
inline Graph disjoint_union(const Graph& g, const Graph& h)
{
    Graph other = detail::disjoint_copy(g, h);
    Graph out = g;
    for (Vertex v : other.vertices())
        out.add_vertex(v);
    for (auto [u, v] : other.edges())
        out.add_edge(u, v);
    return out;
}

/// Zykov join G ⊕ H: the disjoint union plus every edge between the parts.
inline Graph zykov_join(const Graph& g, const Graph& h)
{
    Graph other = detail::disjoint_copy(g, h);
    Graph out = disjoint_union(g, other);
    for (Vertex v : g.vertices())
        for (Vertex w : other.vertices())
            out.add_edge(v, w);
    return out;
}

/// Barycentric refinement together with the clique each new vertex stands for.
struct Refinement {
    Graph graph;
    std::vector<std::vector<Vertex>> cliques; // vertex i of `graph` is cliques[i]
};

inline Refinement barycentric_refinement_labelled(const Graph& g)
{
    Refinement r;
    r.cliques = cliques(g);
    std::map<std::vector<Vertex>, Vertex> index;
    for (std::size_t i = 0; i < r.cliques.size(); ++i) {
        index.emplace(r.cliques[i], static_cast<Vertex>(i));
        r.graph.add_vertex(static_cast<Vertex>(i));
    }
    // x ⊂ y strictly iff x is obtained from y by deleting at least one vertex;
    // enumerate the proper non-empty subsets of each clique.
    for (std::size_t i = 0; i < r.cliques.size(); ++i) {
        const auto& y = r.cliques[i];
        const std::size_t k = y.size();
        for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << k); ++mask) {
            std::vector<Vertex> x;
            for (std::size_t b = 0; b < k; ++b)
                if (mask >> b & 1)
                    x.push_back(y[b]);
            r.graph.add_edge(index.at(x), static_cast<Vertex>(i));
        }
    }
    return r;
}

/// Graph whose vertices are the cliques of g, joined when one strictly
/// contains the other.
inline Graph barycentric_refinement(const Graph& g) { return barycentric_refinement_labelled(g).graph; }

/// Renumbers vertices to 0..n-1 in increasing order; returns the graph and
/// the old→new map.
inline std::pair<Graph, std::map<Vertex, Vertex>> compact(const Graph& g)
{
    std::map<Vertex, Vertex> map;
    Graph h;
    for (Vertex v : g.vertices()) {
        Vertex nv = static_cast<Vertex>(map.size());
        map.emplace(v, nv);
        h.add_vertex(nv);
    }
    for (auto [u, v] : g.edges())
        h.add_edge(map.at(u), map.at(v));
    return {std::move(h), std::move(map)};
}

} // namespace sphere_arbor

#endif // SPHERE_ARBOR_GRAPH_HPP
