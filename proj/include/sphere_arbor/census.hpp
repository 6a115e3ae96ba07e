#ifndef SPHERE_ARBOR_CENSUS_HPP
#define SPHERE_ARBOR_CENSUS_HPP

#include <sphere_arbor/coloring.hpp>
#include <sphere_arbor/isomorphism.hpp>
#include <sphere_arbor/surgery.hpp>
#include <sphere_arbor/topology.hpp>

#include <limits>
#include <map>
#include <vector>

namespace sphere_arbor {

inline constexpr int census_max_order = 12;

/// All 2-spheres with 6..max_n vertices up to isomorphism, grouped by order:
/// the closure of the octahedron under vertex splits. Representatives are
/// compacted to ids 0..n-1 and sorted by certificate.
inline std::map<int, std::vector<Graph>> enumerate_spheres(int max_n)
{
    if (max_n > census_max_order)
        throw Refusal("enumerate_spheres: limited to " + std::to_string(census_max_order) + " vertices");
    std::map<int, std::vector<Graph>> out;
    if (max_n < 6)
        return out;
    std::map<Certificate, Graph> level{{canonical_certificate(octahedron()), octahedron()}};
    for (int n = 6; n <= max_n; ++n) {
        auto& bucket = out[n];
        for (const auto& [_, g] : level)
            bucket.push_back(g);
        if (n == max_n)
            break;
        std::map<Certificate, Graph> next;
        for (const auto& [_, g] : level)
            for (auto [v, a, b] : vertex_refine_placements(g)) {
                Graph h = compact(vertex_refine(g, v, a, b).graph).first;
                auto cert = canonical_certificate(h);
                next.try_emplace(std::move(cert), std::move(h));
            }
        level = std::move(next);
    }
    return out;
}

struct CensusEntry {
    Graph graph;
    bool prism = false;
    long long colorings = 0;      // proper 4-colorings up to color permutation
    long long neat_colorings = 0; // of which neat
    SearchStatus search = SearchStatus::BudgetExceeded; // neat_search verdict
};

/// Exhaustive coloring census of every sphere with at most max_n vertices.
/// `enumerate` also counts all canonical colorings (slower); otherwise only
/// the neat_search verdict is recorded.
inline std::vector<CensusEntry> coloring_census(int max_n, bool enumerate = true)
{
    std::vector<CensusEntry> out;
    for (auto& [n, spheres] : enumerate_spheres(max_n))
        for (auto& g : spheres) {
            CensusEntry e;
            e.prism = is_prism(g).has_value();
            if (enumerate)
                for_each_canonical_coloring(g, [&](const VertexColoring& f) {
                    ++e.colorings;
                    if (is_neat(g, f))
                        ++e.neat_colorings;
                    return true;
                });
            e.search = neat_search(g, std::numeric_limits<long long>::max()).status;
            e.graph = std::move(g);
            out.push_back(std::move(e));
        }
    return out;
}

} // namespace sphere_arbor

#endif // SPHERE_ARBOR_CENSUS_HPP
