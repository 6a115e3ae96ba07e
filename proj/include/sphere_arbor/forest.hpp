#ifndef SPHERE_ARBOR_FOREST_HPP
#define SPHERE_ARBOR_FOREST_HPP

#include <sphere_arbor/graph.hpp>

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace sphere_arbor {

/// Disjoint sets over arbitrary vertex ids, with path halving.
class UnionFind {
public:
    Vertex find(Vertex v)
    {
        auto it = parent_.try_emplace(v, v).first;
        while (it->second != v) {
            Vertex p = it->second;
            Vertex gp = parent_.at(p);
            it->second = gp;
            v = gp;
            it = parent_.find(v);
        }
        return v;
    }

    /// False when u and v were already connected.
    bool unite(Vertex u, Vertex v)
    {
        u = find(u);
        v = find(v);
        if (u == v)
            return false;
        parent_[u] = v;
        return true;
    }

private:
    std::map<Vertex, Vertex> parent_;
};

/// Dense union-find with undo, for backtracking searches. Union by size, no
/// path compression, so every union can be reverted in O(1).
class RollbackUnionFind {
public:
    explicit RollbackUnionFind(std::size_t n = 0) { reset(n); }

    void reset(std::size_t n)
    {
        parent_.resize(n);
        size_.assign(n, 1);
        for (std::size_t i = 0; i < n; ++i)
            parent_[i] = static_cast<int>(i);
        history_.clear();
    }

    int find(int v) const
    {
        while (parent_[v] != v)
            v = parent_[v];
        return v;
    }

    bool unite(int u, int v)
    {
        u = find(u);
        v = find(v);
        if (u == v)
            return false;
        if (size_[u] < size_[v])
            std::swap(u, v);
        parent_[v] = u;
        size_[u] += size_[v];
        history_.push_back(v);
        return true;
    }

    std::size_t checkpoint() const { return history_.size(); }

    void rollback(std::size_t mark)
    {
        while (history_.size() > mark) {
            int v = history_.back();
            history_.pop_back();
            int u = parent_[v];
            size_[u] -= size_[v];
            parent_[v] = v;
        }
    }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
    std::vector<int> history_;
};

/// Edge classes partitioning E. `neat` claims that every triangle meets each
/// of three classes exactly once.
struct ForestPartition {
    std::vector<std::vector<Edge>> classes;
    bool neat = false;

    friend bool operator==(const ForestPartition&, const ForestPartition&) = default;
};

/// A cycle (closed vertex walk, first vertex not repeated) inside `edges`.
inline std::optional<std::vector<Vertex>> find_cycle(const std::vector<Edge>& edges)
{
    Graph g = Graph::from_edges(edges);
    UnionFind uf;
    for (auto [u, v] : edges) {
        if (uf.unite(u, v))
            continue;
        // u and v already joined: the tree path u → v closes the cycle.
        Graph t = g;
        t.remove_edge(u, v);
        std::map<Vertex, Vertex> from{{u, u}};
        std::vector<Vertex> queue{u};
        for (std::size_t i = 0; i < queue.size() && !from.contains(v); ++i)
            for (Vertex w : t.neighbors(queue[i]))
                if (from.try_emplace(w, queue[i]).second)
                    queue.push_back(w);
        if (!from.contains(v))
            return std::vector<Vertex>{u, v}; // the same edge listed twice
        std::vector<Vertex> cycle;
        for (Vertex x = v; x != u; x = from.at(x))
            cycle.push_back(x);
        cycle.push_back(u);
        return cycle;
    }
    return std::nullopt;
}

inline bool is_forest(const std::vector<Edge>& edges)
{
    UnionFind uf;
    for (auto [u, v] : edges)
        if (u == v || !uf.unite(u, v))
            return false;
    return true;
}

} // namespace sphere_arbor

#endif // SPHERE_ARBOR_FOREST_HPP
