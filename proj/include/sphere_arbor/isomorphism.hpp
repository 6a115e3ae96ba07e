#ifndef SPHERE_ARBOR_ISOMORPHISM_HPP
#define SPHERE_ARBOR_ISOMORPHISM_HPP

#include <sphere_arbor/graph.hpp>

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace sphere_arbor {

/// Isomorphism-invariant certificate: vertex count plus the upper triangle of
/// the adjacency matrix under the lexicographically smallest labelling found
/// by individualization-refinement.
struct Certificate {
    std::size_t n = 0;
    std::vector<std::uint8_t> bits;

    friend auto operator<=>(const Certificate&, const Certificate&) = default;
};

namespace detail {

class Canonizer {
public:
    explicit Canonizer(const Graph& g, std::size_t node_budget)
        : n_(g.order()), budget_(node_budget)
    {
        if (n_ > 64)
            throw Refusal("canonical form is limited to 64 vertices");
        auto [dense, _] = compact(g);
        adj_.assign(n_, 0);
        for (auto [u, v] : dense.edges()) {
            adj_[u] |= std::uint64_t{1} << v;
            adj_[v] |= std::uint64_t{1} << u;
        }
    }

    Certificate run()
    {
        std::vector<std::vector<int>> cells(1);
        for (std::size_t v = 0; v < n_; ++v)
            cells[0].push_back(static_cast<int>(v));
        if (n_ > 0) {
            refine(cells);
            search(cells);
        }
        Certificate c;
        c.n = n_;
        c.bits = best_.value_or(std::vector<std::uint8_t>{});
        return c;
    }

private:
    bool adjacent(int u, int v) const { return adj_[u] >> v & 1; }

    bool twins(int u, int w) const
    {
        std::uint64_t bu = std::uint64_t{1} << u, bw = std::uint64_t{1} << w;
        return (adj_[u] & ~bw) == (adj_[w] & ~bu);
    }

    // Equitable refinement: split every cell by the number of neighbors in each
    // splitter cell until nothing changes. New parts are ordered by count,
    // which keeps the procedure label-independent.
    void refine(std::vector<std::vector<int>>& cells) const
    {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
                std::uint64_t splitter = 0;
                for (int v : cells[s])
                    splitter |= std::uint64_t{1} << v;
                std::vector<std::vector<int>> next;
                next.reserve(cells.size() + 1);
                for (const auto& cell : cells) {
                    if (cell.size() == 1) {
                        next.push_back(cell);
                        continue;
                    }
                    std::map<int, std::vector<int>> parts;
                    for (int v : cell)
                        parts[std::popcount(adj_[v] & splitter)].push_back(v);
                    if (parts.size() > 1)
                        changed = true;
                    for (auto& [_, part] : parts)
                        next.push_back(std::move(part));
                }
                if (changed)
                    cells = std::move(next);
            }
        }
    }

    void search(const std::vector<std::vector<int>>& cells)
    {
        if (++nodes_ > budget_)
            throw Refusal("canonical form search exceeded its node budget");
        std::size_t target = cells.size();
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (cells[i].size() > 1) {
                target = i;
                break;
            }
        if (target == cells.size()) {
            std::vector<std::uint8_t> code;
            code.reserve(n_ * (n_ - 1) / 2);
            for (std::size_t i = 0; i < n_; ++i)
                for (std::size_t j = i + 1; j < n_; ++j)
                    code.push_back(adjacent(cells[i][0], cells[j][0]) ? 1 : 0);
            if (!best_ || code < *best_)
                best_ = std::move(code);
            return;
        }
        std::vector<int> tried;
        for (int v : cells[target]) {
            // Transposing two twins is an automorphism fixing the current
            // partition, so their subtrees produce identical codes.
            bool redundant = false;
            for (int t : tried)
                if (twins(t, v)) {
                    redundant = true;
                    break;
                }
            if (redundant)
                continue;
            tried.push_back(v);
            std::vector<std::vector<int>> next;
            next.reserve(cells.size() + 1);
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (i != target) {
                    next.push_back(cells[i]);
                    continue;
                }
                next.push_back({v});
                std::vector<int> rest;
                for (int w : cells[i])
                    if (w != v)
                        rest.push_back(w);
                next.push_back(std::move(rest));
            }
            refine(next);
            search(next);
        }
    }

    std::size_t n_;
    std::size_t budget_;
    std::size_t nodes_ = 0;
    std::vector<std::uint64_t> adj_;
    std::optional<std::vector<std::uint8_t>> best_;
};

} // namespace detail

inline Certificate canonical_certificate(const Graph& g, std::size_t node_budget = 2'000'000)
{
    return detail::Canonizer(g, node_budget).run();
}

inline bool isomorphic(const Graph& a, const Graph& b)
{
    if (a.order() != b.order() || a.size() != b.size())
        return false;
    return canonical_certificate(a) == canonical_certificate(b);
}

} // namespace sphere_arbor

#endif // SPHERE_ARBOR_ISOMORPHISM_HPP
