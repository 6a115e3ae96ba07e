// Brute-force reference computations, written independently of the library
// algorithms they check.
#pragma once

#include <sphere_arbor.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using namespace sphere_arbor;

inline std::vector<std::vector<int>> adjacency_matrix(const Graph& g, std::vector<Vertex>& ids)
{
    ids = g.vertices();
    std::map<Vertex, int> at;
    for (std::size_t i = 0; i < ids.size(); ++i)
        at[ids[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> m(ids.size(), std::vector<int>(ids.size(), 0));
    for (auto [u, v] : g.edges())
        m[at[u]][at[v]] = m[at[v]][at[u]] = 1;
    return m;
}

/// Clique counts by testing every vertex subset.
inline std::vector<std::int64_t> clique_counts(const Graph& g)
{
    std::vector<Vertex> ids;
    auto m = adjacency_matrix(g, ids);
    const int n = static_cast<int>(ids.size());
    std::vector<std::int64_t> f;
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
        bool clique = true;
        for (int i = 0; i < n && clique; ++i)
            for (int j = i + 1; j < n && clique; ++j)
                if ((s >> i & 1) && (s >> j & 1) && !m[i][j])
                    clique = false;
        if (!clique)
            continue;
        std::size_t k = static_cast<std::size_t>(__builtin_popcount(s));
        if (f.size() < k)
            f.resize(k, 0);
        ++f[k - 1];
    }
    return f;
}

/// Isomorphism by trying every bijection (small graphs only).
inline bool isomorphic(const Graph& a, const Graph& b)
{
    if (a.order() != b.order() || a.size() != b.size())
        return false;
    std::vector<Vertex> ia, ib;
    auto ma = adjacency_matrix(a, ia);
    auto mb = adjacency_matrix(b, ib);
    const int n = static_cast<int>(ia.size());
    std::vector<int> da(n), db(n);
    for (int i = 0; i < n; ++i) {
        da[i] = std::accumulate(ma[i].begin(), ma[i].end(), 0);
        db[i] = std::accumulate(mb[i].begin(), mb[i].end(), 0);
    }
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb)
        return false;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            if (da[i] != db[perm[i]])
                ok = false;
            for (int j = i + 1; j < n && ok; ++j)
                if (ma[i][j] != mb[perm[i]][perm[j]])
                    ok = false;
        }
        if (ok)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// Number of connected components by repeated flood fill over an edge list.
inline int components(const std::vector<Vertex>& vertices, const std::vector<Edge>& edges)
{
    std::map<Vertex, int> label;
    for (Vertex v : vertices)
        label[v] = v;
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto [u, v] : edges) {
            int m = std::min(label[u], label[v]);
            if (label[u] != m || label[v] != m) {
                label[u] = label[v] = m;
                changed = true;
            }
        }
    }
    std::set<int> distinct;
    for (auto [v, l] : label)
        distinct.insert(l);
    return static_cast<int>(distinct.size());
}

/// Acyclic iff |E| = |V| − #components on the vertices it touches.
inline bool acyclic(const std::vector<Edge>& edges)
{
    std::set<Vertex> vs;
    std::set<Edge> unique;
    for (auto [u, v] : edges) {
        vs.insert(u);
        vs.insert(v);
        unique.insert(make_edge(u, v));
    }
    if (unique.size() != edges.size())
        return false;
    return static_cast<int>(edges.size()) == static_cast<int>(vs.size()) - components({vs.begin(), vs.end()}, edges);
}

/// Class of an edge from its endpoint colors, written as an explicit table.
inline char pairing(int a, int b)
{
    int lo = std::min(a, b), hi = std::max(a, b);
    if ((lo == 1 && hi == 2) || (lo == 3 && hi == 4))
        return 'C';
    if ((lo == 1 && hi == 3) || (lo == 2 && hi == 4))
        return 'B';
    return 'A';
}

inline bool proper(const Graph& g, const VertexColoring& f)
{
    for (auto [u, v] : g.edges())
        if (f.at(u) == f.at(v))
            return false;
    return f.size() == g.order();
}

inline bool neat(const Graph& g, const VertexColoring& f)
{
    if (!proper(g, f))
        return false;
    std::map<char, std::vector<Edge>> cls;
    for (auto [u, v] : g.edges())
        cls[pairing(f.at(u), f.at(v))].push_back({u, v});
    for (auto& [_, es] : cls)
        if (!acyclic(es))
            return false;
    return true;
}

/// Every proper coloring with colors 1..4, by counting through 4^n.
inline std::vector<VertexColoring> all_proper_colorings(const Graph& g)
{
    auto vs = g.vertices();
    const std::size_t n = vs.size();
    std::vector<VertexColoring> out;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i)
        total *= 4;
    for (std::uint64_t code = 0; code < total; ++code) {
        VertexColoring f;
        std::uint64_t c = code;
        for (Vertex v : vs) {
            f[v] = static_cast<int>(c % 4) + 1;
            c /= 4;
        }
        if (proper(g, f))
            out.push_back(std::move(f));
    }
    return out;
}

inline bool any_neat_coloring(const Graph& g)
{
    for (const auto& f : all_proper_colorings(g))
        if (neat(g, f))
            return true;
    return false;
}

/// max |E_H|/(|V_H|−1) over vertex subsets, recounting edges per subset.
inline Rational density(const Graph& g)
{
    std::vector<Vertex> ids;
    auto m = adjacency_matrix(g, ids);
    const int n = static_cast<int>(ids.size());
    Rational best = 0;
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
        int k = __builtin_popcount(s);
        if (k < 2)
            continue;
        long long e = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                e += (s >> i & 1) && (s >> j & 1) && m[i][j];
        best = std::max(best, Rational(e, k - 1));
    }
    return best;
}

/// S(j,i) by listing restricted-growth strings.
inline long long stirling(int j, int i)
{
    if (j == 0)
        return i == 0 ? 1 : 0;
    long long count = 0;
    std::vector<int> a(j, 0);
    std::function<void(int, int)> rec = [&](int pos, int blocks) {
        if (pos == j) {
            count += blocks == i;
            return;
        }
        for (int b = 0; b <= blocks && b < i; ++b) {
            a[pos] = b;
            rec(pos + 1, std::max(blocks, b + 1));
        }
    };
    rec(0, 0);
    return count;
}

/// Injective values for Poincaré-Hopf checks.
inline std::map<Vertex, std::uint64_t> random_injective(const Graph& g, std::uint64_t seed)
{
    auto vs = g.vertices();
    std::vector<std::uint64_t> values(vs.size());
    std::iota(values.begin(), values.end(), 0);
    std::mt19937_64 rng(seed);
    std::shuffle(values.begin(), values.end(), rng);
    std::map<Vertex, std::uint64_t> f;
    for (std::size_t i = 0; i < vs.size(); ++i)
        f[vs[i]] = values[i];
    return f;
}

} // namespace oracle
