#ifndef SPHERE_ARBOR_FLOW_HPP
#define SPHERE_ARBOR_FLOW_HPP

#include <sphere_arbor/coloring.hpp>
#include <sphere_arbor/surgery.hpp>
#include <sphere_arbor/topology.hpp>

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace sphere_arbor {

// ---------------------------------------------------------------------------
// Degree-4 structure

enum class G4Verdict { LinearForest, CycleImpliesPrism, TriangleOrBranchImpliesOctahedron };

inline std::string_view to_string(G4Verdict v)
{
    switch (v) {
    case G4Verdict::LinearForest: return "linear_forest";
    case G4Verdict::CycleImpliesPrism: return "cycle_implies_prism";
    case G4Verdict::TriangleOrBranchImpliesOctahedron: return "triangle_or_branch_implies_octahedron";
    }
    return "?";
}

struct DegreeFourStructure {
    Graph g4;
    G4Verdict verdict = G4Verdict::LinearForest;
};

/// G₄, the subgraph generated by the degree-4 vertices, and its shape.
inline DegreeFourStructure degree_four_structure(const Graph& g)
{
    std::vector<Vertex> four;
    for (Vertex v : g.vertices())
        if (g.degree(v) == 4)
            four.push_back(v);
    DegreeFourStructure s{induced_subgraph(g, four), G4Verdict::LinearForest};
    for (Vertex v : s.g4.vertices())
        if (s.g4.degree(v) > 2)
            s.verdict = G4Verdict::TriangleOrBranchImpliesOctahedron;
    if (s.verdict == G4Verdict::LinearForest) {
        for (const auto& comp : connected_components(s.g4)) {
            std::size_t edges = 0;
            for (Vertex v : comp)
                edges += s.g4.degree(v);
            if (edges / 2 == comp.size()) // a cycle; length 3 is a triangle
                s.verdict = comp.size() == 3 ? G4Verdict::TriangleOrBranchImpliesOctahedron
                                             : G4Verdict::CycleImpliesPrism;
        }
    }
    return s;
}

/// Components of G₄ that are paths, ordered by smallest vertex id; each path
/// starts at its endpoint with the smaller id.
inline std::vector<std::vector<Vertex>> degree_four_lines(const Graph& g4)
{
    std::vector<std::vector<Vertex>> lines;
    for (const auto& comp : connected_components(g4)) {
        std::vector<Vertex> ends;
        bool path = true;
        for (Vertex v : comp) {
            if (g4.degree(v) > 2)
                path = false;
            if (g4.degree(v) <= 1)
                ends.push_back(v);
        }
        if (!path || ends.empty())
            continue;
        std::vector<Vertex> line{ends.front()};
        Vertex prev = -1;
        while (true) {
            Vertex cur = line.back(), next = -1;
            for (Vertex w : g4.neighbors(cur))
                if (w != prev)
                    next = w;
            if (next < 0)
                break;
            prev = cur;
            line.push_back(next);
        }
        lines.push_back(std::move(line));
    }
    return lines;
}

// ---------------------------------------------------------------------------
// Heawood kites

/// Kite (c,d;a,b) whose tips carry the same color. `collapsible` records
/// whether kite_fold accepts it.
struct HeawoodKite {
    Vertex c = 0, d = 0, a = 0, b = 0;
    bool collapsible = false;

    friend auto operator<=>(const HeawoodKite&, const HeawoodKite&) = default;
};

/// All Heawood kites with c < d and a < b, in lexicographic order.
inline std::vector<HeawoodKite> find_heawood_kites(const Graph& g, const VertexColoring& f)
{
    if (auto why = coloring_problem(g, f); !why.empty())
        throw InvalidInput("find_heawood_kites: " + why);
    std::vector<HeawoodKite> out;
    for (auto [c, d] : g.edges()) {
        auto common = common_neighbors(g, c, d);
        for (std::size_t i = 0; i < common.size(); ++i)
            for (std::size_t j = i + 1; j < common.size(); ++j) {
                Vertex a = common[i], b = common[j];
                if (g.has_edge(a, b) || f.at(a) != f.at(b))
                    continue;
                out.push_back({c, d, a, b, kite_fold_obstruction(g, c, d, a, b).empty()});
            }
    }
    return out;
}

// ---------------------------------------------------------------------------
// The contraction map

/// phi_step found no applicable move.
class PhiStuck : public Refusal {
public:
    PhiStuck(const std::string& what, Graph g, VertexColoring f)
        : Refusal(what), graph(std::move(g)), coloring(std::move(f))
    {
    }

    Graph graph;
    VertexColoring coloring;
};

struct PhiResult {
    Graph graph;
    VertexColoring coloring;
    SurgeryStep step;
    std::string transport;
};

namespace detail {

inline std::string vlist(const std::vector<Vertex>& vs)
{
    std::string s;
    for (Vertex v : vs)
        s += (s.empty() ? "" : ",") + std::to_string(v);
    return s;
}

inline VertexColoring transport_down(const VertexColoring& f, const SurgeryStep& s)
{
    VertexColoring out = f;
    for (Vertex v : s.removed)
        out.erase(v);
    for (auto [kept, absorbed] : s.merged)
        out.erase(absorbed);
    return out;
}

} // namespace detail

/// One area-reducing move on a colored sphere with a Kempe loop. Degree-4
/// components are handled first (Kempe diamond merge when the suspension pair
/// shares a color, otherwise a wheel collapse whose restored diagonal has two
/// colors); when none applies, the smallest collapsible Heawood kite is folded.
inline PhiResult phi_step(const Graph& g, const VertexColoring& f)
{
    if (!is_two_sphere(g))
        throw InvalidInput("phi_step: input is not a 2-sphere");
    if (auto why = coloring_problem(g, f); !why.empty())
        throw InvalidInput("phi_step: " + why);
    if (is_octahedron(g))
        throw Refusal("phi_step: the octahedron is a fixed point");
    if (is_prism(g))
        throw Refusal("phi_step: prisms are not reduced");
    if (!find_kempe_loop(g, f))
        throw Refusal("phi_step: coloring has no Kempe loop");

    auto finish = [&](SurgeryResult r, std::string note) {
        PhiResult out{std::move(r.graph), detail::transport_down(f, r.step), std::move(r.step), std::move(note)};
        if (!is_proper(out.graph, out.coloring))
            throw InternalFailure("phi_step: transported coloring is not proper");
        if (!is_two_sphere(out.graph))
            throw InternalFailure("phi_step: result is not a 2-sphere");
        return out;
    };

    auto s4 = degree_four_structure(g);
    for (const auto& line : degree_four_lines(s4.g4)) {
        std::vector<std::pair<Vertex, Vertex>> suspensions;
        if (line.size() == 1) {
            auto cyc = *link_cycle(g, line[0]);
            suspensions = {{std::min(cyc[0], cyc[2]), std::max(cyc[0], cyc[2])},
                           {std::min(cyc[1], cyc[3]), std::max(cyc[1], cyc[3])}};
        } else {
            auto common = common_neighbors(g, line[0], line[1]);
            if (common.size() == 2)
                suspensions = {{common[0], common[1]}};
        }
        for (auto [a, b] : suspensions)
            if (f.at(a) == f.at(b) && diamond_merge_obstruction(g, a, b, line).empty())
                return finish(diamond_merge(g, a, b, line), "diamond " + detail::vlist(line) + " removed; " +
                                                                 std::to_string(b) + " takes the shared color of " +
                                                                 std::to_string(a));
        for (Vertex q : line) {
            auto cyc = *link_cycle(g, q);
            for (int i = 0; i < 2; ++i) {
                Vertex a = cyc[i], b = cyc[i + 2];
                if (f.at(a) != f.at(b) && edge_collapse_obstruction(g, q, a, b).empty())
                    return finish(edge_collapse(g, q, a, b), "wheel at " + std::to_string(q) +
                                                                 " removed; restored diagonal is two-colored");
            }
        }
    }
    for (const auto& k : find_heawood_kites(g, f))
        if (k.collapsible)
            return finish(kite_fold(g, k.c, k.d, k.a, k.b),
                          "tips " + std::to_string(k.a) + "," + std::to_string(k.b) + " share their color");

    std::string why = "phi_step: no applicable move (" + std::to_string(g.order()) + " vertices, G4 " +
                      std::string(to_string(s4.verdict)) + ", " + std::to_string(find_heawood_kites(g, f).size()) +
                      " Heawood kites, none collapsible)";
    throw PhiStuck(why, g, f);
}

// ---------------------------------------------------------------------------
// Descent

struct LogEntry {
    SurgeryStep step;
    std::string transport;
};

/// levels[i] is the graph before steps[i]; levels.back() is the last level.
struct SurgeryLog {
    Graph origin;
    VertexColoring origin_coloring;
    std::vector<LogEntry> steps;
    std::vector<Graph> levels;
    std::vector<VertexColoring> colorings; // transported coloring per level
};

/// Rebuilds every level from the origin. Throws when a step does not apply.
inline std::vector<Graph> replay(const Graph& origin, const std::vector<LogEntry>& steps)
{
    std::vector<Graph> levels{origin};
    for (const auto& e : steps)
        levels.push_back(apply_step(levels.back(), e.step));
    return levels;
}

enum class Terminal { NeatFound, PrismReached, OctahedronReached, Stuck };

inline std::string_view to_string(Terminal t)
{
    switch (t) {
    case Terminal::NeatFound: return "neat_found";
    case Terminal::PrismReached: return "prism_reached";
    case Terminal::OctahedronReached: return "octahedron_reached";
    case Terminal::Stuck: return "stuck";
    }
    return "?";
}

struct LevelReport {
    std::size_t level = 0;
    FVector f;
    std::string neat; // "input", a SearchStatus name, or "skipped"
    long long nodes = 0;
    std::optional<StepKind> move;
};

struct DescendResult {
    SurgeryLog log;
    Terminal terminal = Terminal::Stuck;
    std::size_t level = 0;
    std::optional<VertexColoring> neat; // neat coloring of the terminal level
    std::string witness;
    std::vector<LevelReport> reports;
};

struct DescendOptions {
    long long neat_budget = 2'000'000;
    std::uint64_t seed = 0;
};

/// Descends from (g,f): at each level try for a neat recoloring, otherwise
/// apply phi_step. Stops at a neat coloring, a prism, the octahedron, or when
/// phi_step is stuck.
inline DescendResult descend(const Graph& g, const VertexColoring& f, const DescendOptions& opt = {})
{
    if (!is_two_sphere(g))
        throw InvalidInput("descend: input is not a 2-sphere");
    if (auto why = coloring_problem(g, f); !why.empty())
        throw InvalidInput("descend: " + why);
    DescendResult r;
    r.log.origin = g;
    r.log.origin_coloring = f;
    r.log.levels.push_back(g);
    r.log.colorings.push_back(f);
    while (true) {
        const Graph& cur = r.log.levels.back();
        const VertexColoring& fc = r.log.colorings.back();
        LevelReport rep;
        rep.level = r.log.steps.size();
        rep.f = f_vector(cur, 2);
        r.level = rep.level;
        if (is_neat(cur, fc)) {
            rep.neat = "input";
            r.reports.push_back(rep);
            r.terminal = Terminal::NeatFound;
            r.neat = fc;
            return r;
        }
        if (is_octahedron(cur) || is_prism(cur)) {
            rep.neat = "skipped";
            r.reports.push_back(rep);
            r.terminal = is_octahedron(cur) ? Terminal::OctahedronReached : Terminal::PrismReached;
            return r;
        }
        auto search = neat_search(cur, opt.neat_budget, opt.seed);
        rep.neat = to_string(search.status);
        rep.nodes = search.nodes;
        if (search.coloring) {
            r.reports.push_back(rep);
            r.terminal = Terminal::NeatFound;
            r.neat = search.coloring;
            return r;
        }
        try {
            auto step = phi_step(cur, fc);
            rep.move = step.step.kind;
            r.reports.push_back(rep);
            r.log.steps.push_back({step.step, step.transport});
            r.log.levels.push_back(std::move(step.graph));
            r.log.colorings.push_back(std::move(step.coloring));
        } catch (const PhiStuck& e) {
            r.reports.push_back(rep);
            r.terminal = Terminal::Stuck;
            std::string edges;
            for (auto [u, v] : e.graph.edges())
                edges += " " + std::to_string(u) + "-" + std::to_string(v);
            r.witness = std::string(e.what()) + "; edges:" + edges;
            return r;
        }
    }
}

// ---------------------------------------------------------------------------
// Ascent

struct LiftOptions {
    long long repair_budget = 2'000'000;
    std::uint64_t seed = 0;
};

struct LiftEvent {
    std::size_t level = 0; // the pre-graph level the coloring was lifted to
    StepKind kind{};
    std::string note;
    bool neat = false;
};

struct LiftResult {
    VertexColoring coloring; // proper on the origin
    bool neat = false;
    std::optional<std::size_t> failed_level; // first level whose neatness was lost
    bool nonexistence_proved = false;        // that level has no neat coloring at all
    std::vector<LiftEvent> events;
};

namespace detail {

inline std::vector<Vertex> ball(const Graph& g, const std::vector<Vertex>& centers, int radius)
{
    std::set<Vertex> in;
    std::vector<Vertex> frontier;
    for (Vertex v : centers)
        if (g.has_vertex(v) && in.insert(v).second)
            frontier.push_back(v);
    for (int r = 0; r < radius; ++r) {
        std::vector<Vertex> next;
        for (Vertex v : frontier)
            for (Vertex w : g.neighbors(v))
                if (in.insert(w).second)
                    next.push_back(w);
        frontier = std::move(next);
    }
    return {in.begin(), in.end()};
}

inline std::vector<Vertex> step_vertices(const SurgeryStep& s)
{
    std::vector<Vertex> out = s.actors;
    out.insert(out.end(), s.created.begin(), s.created.end());
    out.insert(out.end(), s.removed.begin(), s.removed.end());
    for (auto [a, b] : s.merged) {
        out.push_back(a);
        out.push_back(b);
    }
    return out;
}

/// Proper colorings of `pre` extending the post-level coloring across step s.
inline std::vector<std::pair<VertexColoring, std::string>> lift_candidates(const Graph& pre, const SurgeryStep& s,
                                                                           const VertexColoring& post,
                                                                           std::uint64_t seed)
{
    std::vector<std::pair<VertexColoring, std::string>> out;
    VertexColoring base = post;
    for (auto [kept, absorbed] : s.merged)
        base[absorbed] = post.at(kept);

    auto free_colors = [&](const VertexColoring& f, Vertex v) {
        std::vector<int> cs;
        for (int c = 1; c <= 4; ++c) {
            bool used = false;
            for (Vertex w : pre.neighbors(v))
                if (auto it = f.find(w); it != f.end() && it->second == c)
                    used = true;
            if (!used)
                cs.push_back(c);
        }
        return cs;
    };

    switch (s.kind) {
    case StepKind::DiamondMerge: {
        const auto& line = s.removed;
        VertexColoring f = base;
        std::function<void(std::size_t)> rec = [&](std::size_t i) {
            if (out.size() >= 256)
                return;
            if (i == line.size()) {
                out.emplace_back(f, "both suspension vertices take the merged color; center line recolored");
                return;
            }
            for (int c : free_colors(f, line[i])) {
                f[line[i]] = c;
                rec(i + 1);
                f.erase(line[i]);
            }
        };
        rec(0);
        break;
    }
    case StepKind::EdgeCollapse: {
        Vertex v = s.actors[0];
        for (int c : free_colors(base, v)) {
            VertexColoring f = base;
            f[v] = c;
            out.emplace_back(std::move(f), "reinserted " + std::to_string(v) + " takes free color " + std::to_string(c));
        }
        if (!out.empty())
            break;
        // All four colors on the wheel: the standard Kempe interchange.
        auto cyc = *link_cycle(pre, v);
        for (int i = 0; i < 2; ++i) {
            Vertex x = cyc[i], y = cyc[i + 2];
            auto chain = kempe_chain(pre, base, x, base.at(y));
            if (std::find(chain.begin(), chain.end(), y) != chain.end())
                continue;
            VertexColoring f = base;
            int freed = f.at(x);
            kempe_swap(f, chain, f.at(x), f.at(y));
            f[v] = freed;
            out.emplace_back(std::move(f), "Kempe interchange at " + std::to_string(x) + " frees color " +
                                               std::to_string(freed) + " for " + std::to_string(v));
        }
        break;
    }
    case StepKind::KiteFold: {
        Vertex c = s.actors[0], d = s.actors[1];
        if (base.at(c) != base.at(d)) {
            out.emplace_back(base, "tips take the merged color");
            break;
        }
        Graph cut = pre;
        cut.remove_edge(c, d);
        for (Vertex x : {c, d})
            for (int other = 1; other <= 4; ++other) {
                if (other == base.at(x))
                    continue;
                auto chain = kempe_chain(cut, base, x, other);
                if (std::find(chain.begin(), chain.end(), x == c ? d : c) != chain.end())
                    continue;
                VertexColoring f = base;
                kempe_swap(f, chain, base.at(x), other);
                out.emplace_back(std::move(f), "tips take the merged color; Kempe interchange at " +
                                                   std::to_string(x) + " separates the spine colors");
            }
        if (out.empty())
            out.emplace_back(four_color(pre, seed), "spine colors could not be separated locally; fresh 4-coloring");
        break;
    }
    case StepKind::EdgeRefine:
    case StepKind::VertexRefine:
    case StepKind::KiteCollapse:
        throw InvalidInput("lift_coloring: step kind " + std::string(to_string(s.kind)) + " does not occur in a descent");
    }
    for (auto& [f, _] : out)
        if (!is_proper(pre, f))
            throw InternalFailure("lift_coloring: lifted coloring is not proper at " +
                                  std::string(to_string(s.kind)));
    return out;
}

} // namespace detail

/// Lifts a coloring of level k back to the origin. Neatness is checked after
/// every un-step and repaired when lost: first by single Kempe interchanges
/// inside the radius-2 ball of the step, then by neat_search on that level.
/// When repair fails the lift continues with a proper coloring and reports
/// the level.
inline LiftResult lift_coloring(const SurgeryLog& log, std::size_t k, const VertexColoring& g,
                                const LiftOptions& opt = {})
{
    if (k >= log.levels.size())
        throw InvalidInput("lift_coloring: level out of range");
    if (auto why = coloring_problem(log.levels[k], g); !why.empty())
        throw InvalidInput("lift_coloring: " + why);
    LiftResult r;
    VertexColoring f = g;
    bool neat = is_neat(log.levels[k], f);
    for (std::size_t i = k; i-- > 0;) {
        const Graph& pre = log.levels[i];
        const SurgeryStep& s = log.steps[i].step;
        auto candidates = detail::lift_candidates(pre, s, f, opt.seed);
        std::size_t pick = 0;
        if (neat)
            for (std::size_t j = 0; j < candidates.size(); ++j)
                if (is_neat(pre, candidates[j].first)) {
                    pick = j;
                    break;
                }
        f = std::move(candidates[pick].first);
        LiftEvent ev{i, s.kind, candidates[pick].second, false};
        if (neat && !is_neat(pre, f)) {
            bool fixed = false;
            for (Vertex v : detail::ball(pre, detail::step_vertices(s), 2)) {
                for (int other = 1; other <= 4 && !fixed; ++other) {
                    if (other == f.at(v))
                        continue;
                    VertexColoring h = f;
                    kempe_swap(h, kempe_chain(pre, f, v, other), f.at(v), other);
                    if (is_neat(pre, h)) {
                        f = std::move(h);
                        fixed = true;
                        ev.note += "; repaired by Kempe interchange at " + std::to_string(v);
                    }
                }
                if (fixed)
                    break;
            }
            if (!fixed) {
                auto search = neat_search(pre, opt.repair_budget, opt.seed);
                if (search.coloring) {
                    f = *search.coloring;
                    ev.note += "; repaired by neat_search";
                } else {
                    neat = false;
                    r.failed_level = i;
                    r.nonexistence_proved = search.status == SearchStatus::Exhausted;
                    ev.note += std::string("; neatness lost, neat_search ") + std::string(to_string(search.status));
                }
            }
        }
        ev.neat = neat && is_neat(pre, f);
        neat = ev.neat;
        r.events.push_back(std::move(ev));
    }
    r.coloring = std::move(f);
    r.neat = is_neat(log.levels.front(), r.coloring);
    if (!is_proper(log.levels.front(), r.coloring))
        throw InternalFailure("lift_coloring: origin coloring is not proper");
    return r;
}

} // namespace sphere_arbor

#endif // SPHERE_ARBOR_FLOW_HPP
