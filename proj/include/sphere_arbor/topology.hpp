#ifndef SPHERE_ARBOR_TOPOLOGY_HPP
#define SPHERE_ARBOR_TOPOLOGY_HPP

#include <sphere_arbor/graph.hpp>
#include <sphere_arbor/isomorphism.hpp>
#include <sphere_arbor/rational.hpp>

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace sphere_arbor {

/// Cyclic order of S(v) when S(v) is a single cycle, starting at its smallest
/// vertex and continuing toward the smaller of that vertex's two neighbors.
inline std::optional<std::vector<Vertex>> link_cycle(const Graph& g, Vertex v)
{
    const auto& nbrs = g.neighbors(v);
    if (nbrs.size() < 3)
        return std::nullopt;
    std::map<Vertex, std::vector<Vertex>> local;
    for (Vertex a : nbrs) {
        auto& row = local[a];
        for (Vertex b : g.neighbors(a))
            if (std::binary_search(nbrs.begin(), nbrs.end(), b))
                row.push_back(b);
        if (row.size() != 2)
            return std::nullopt;
    }
    std::vector<Vertex> cycle{nbrs.front()};
    Vertex prev = nbrs.front();
    Vertex cur = local[prev][0];
    while (cur != nbrs.front()) {
        cycle.push_back(cur);
        const auto& row = local[cur];
        Vertex next = row[0] == prev ? row[1] : row[0];
        prev = cur;
        cur = next;
    }
    if (cycle.size() != nbrs.size())
        return std::nullopt; // several disjoint cycles
    return cycle;
}

/// Every unit sphere is a cycle with at least four vertices. The empty graph
/// is not a 2-manifold.
inline bool is_two_manifold(const Graph& g)
{
    if (g.empty())
        return false;
    for (Vertex v : g.vertices()) {
        auto cyc = link_cycle(g, v);
        if (!cyc || cyc->size() < 4)
            return false;
    }
    return true;
}

/// Connected 2-manifold with Euler characteristic 2.
inline bool is_two_sphere(const Graph& g)
{
    return is_two_manifold(g) && is_connected(g) && euler_characteristic(f_vector(g, 2)) == 2;
}

/// Dehn-Sommerville relation 3·f₂ = 2·f₁.
inline bool dehn_sommerville(const FVector& f) { return 3 * f[2] == 2 * f[1]; }

/// Witness that a sphere is the suspension of a cycle.
struct PrismCertificate {
    std::pair<Vertex, Vertex> poles;
    std::vector<Vertex> equator; // cyclic order
};

/// Certificate when g ≅ C_n ⊕ S₀ (n ≥ 4). Scans non-adjacent pairs whose
/// neighborhoods are both the rest of the graph; returns the smallest pair.
inline std::optional<PrismCertificate> is_prism(const Graph& g)
{
    if (!is_two_sphere(g))
        throw InvalidInput("is_prism: input is not a 2-sphere");
    const std::size_t n = g.order();
    auto vs = g.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (g.degree(vs[i]) != n - 2)
            continue;
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            if (g.degree(vs[j]) != n - 2 || g.has_edge(vs[i], vs[j]))
                continue;
            if (g.neighbors(vs[i]) != g.neighbors(vs[j]))
                continue;
            return PrismCertificate{{vs[i], vs[j]}, *link_cycle(g, vs[i])};
        }
    }
    return std::nullopt;
}

inline bool is_octahedron(const Graph& g)
{
    if (g.order() != 6 || g.size() != 12)
        return false;
    for (Vertex v : g.vertices())
        if (g.degree(v) != 4)
            return false;
    return is_two_sphere(g);
}

enum class Verdict { Yes, No, Unknown };

namespace detail {

using ContractKey = std::vector<long long>;

inline ContractKey contract_key(const Graph& g)
{
    ContractKey key;
    if (g.order() <= 12) {
        auto cert = canonical_certificate(g);
        key.push_back(0);
        key.push_back(static_cast<long long>(cert.n));
        key.insert(key.end(), cert.bits.begin(), cert.bits.end());
    } else {
        key.push_back(1);
        for (Vertex v : g.vertices())
            key.push_back(v);
        key.push_back(-1);
        for (auto [u, v] : g.edges()) {
            key.push_back(u);
            key.push_back(v);
        }
    }
    return key;
}

inline bool is_forest_graph(const Graph& g)
{
    return g.size() + connected_components(g).size() == g.order();
}

class ContractibilitySearch {
public:
    explicit ContractibilitySearch(long long budget) : budget_(budget) {}

    Verdict eval(const Graph& g)
    {
        if (g.empty())
            return Verdict::No;
        if (g.order() == 1)
            return Verdict::Yes;
        // Contractible graphs are connected with χ = 1.
        if (!is_connected(g) || euler_characteristic(g) != 1)
            return Verdict::No;
        auto key = contract_key(g);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
        if (--budget_ < 0)
            return Verdict::Unknown;

        // Vertices whose unit sphere is a tree first.
        std::vector<std::pair<int, Vertex>> order;
        for (Vertex v : g.vertices()) {
            Graph s = unit_sphere(g, v);
            bool tree = !s.empty() && is_connected(s) && is_forest_graph(s);
            order.emplace_back(tree ? 0 : 1, v);
        }
        std::sort(order.begin(), order.end());

        bool unknown = false;
        for (auto [_, v] : order) {
            Verdict sphere = eval(unit_sphere(g, v));
            if (sphere == Verdict::No)
                continue;
            Graph rest = g;
            rest.remove_vertex(v);
            Verdict r = eval(rest);
            if (sphere == Verdict::Yes && r == Verdict::Yes) {
                memo_[key] = Verdict::Yes;
                return Verdict::Yes;
            }
            if (sphere == Verdict::Unknown || r == Verdict::Unknown)
                unknown = true;
        }
        Verdict out = unknown ? Verdict::Unknown : Verdict::No;
        if (out == Verdict::No)
            memo_[key] = out;
        return out;
    }

private:
    long long budget_;
    std::map<ContractKey, Verdict> memo_;
};

} // namespace detail

/// G is contractible if it is K₁, or some v has S(v) and G∖v contractible.
/// `budget` caps the number of distinct graphs expanded; exceeding it yields
/// Verdict::Unknown.
inline Verdict is_contractible(const Graph& g, long long budget = 10'000)
{
    return detail::ContractibilitySearch(budget).eval(g);
}

/// K(v) = 1 − deg(v)/6 on a 2-manifold.
inline Rational curvature(const Graph& g, Vertex v)
{
    if (!is_two_manifold(g))
        throw InvalidInput("curvature: input is not a 2-manifold");
    return Rational(1) - Rational(static_cast<long long>(g.degree(v)), 6);
}

/// i(v) = 1 − χ(S⁻(v)), where S⁻(v) is generated by the neighbors with a
/// smaller value of f. Equal values are ordered by vertex id.
template <class F>
std::int64_t poincare_hopf_index(const Graph& g, F&& f, Vertex v)
{
    auto fv = f(v);
    std::vector<Vertex> lower;
    for (Vertex w : g.neighbors(v)) {
        auto fw = f(w);
        if (fw < fv || (fw == fv && w < v))
            lower.push_back(w);
    }
    return 1 - euler_characteristic(induced_subgraph(g, lower));
}

} // namespace sphere_arbor

#endif // SPHERE_ARBOR_TOPOLOGY_HPP
