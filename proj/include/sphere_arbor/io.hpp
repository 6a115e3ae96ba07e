#ifndef SPHERE_ARBOR_IO_HPP
#define SPHERE_ARBOR_IO_HPP

#include <sphere_arbor/census.hpp>
#include <sphere_arbor/coloring.hpp>
#include <sphere_arbor/flow.hpp>
#include <sphere_arbor/pipeline.hpp>
#include <sphere_arbor/surgery.hpp>

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>

namespace sphere_arbor {

using json = nlohmann::ordered_json;

// Graph: {"vertices": [...], "edges": [[u,v], ...]}

inline json graph_to_json(const Graph& g)
{
    json edges = json::array();
    for (auto [u, v] : g.edges())
        edges.push_back({u, v});
    return {{"vertices", g.vertices()}, {"edges", std::move(edges)}};
}

inline Graph graph_from_json(const json& j)
{
    try {
        Graph g;
        if (j.contains("vertices"))
            for (const auto& v : j.at("vertices"))
                g.add_vertex(v.get<Vertex>());
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2)
                throw InvalidInput("graph JSON: every edge must be a pair");
            Vertex u = e[0].get<Vertex>(), v = e[1].get<Vertex>();
            g.add_vertex(u);
            g.add_vertex(v);
            g.add_edge(u, v);
        }
        return g;
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("graph JSON: ") + e.what());
    }
}

// Coloring: {"<vertex>": color, ...}

inline json coloring_to_json(const VertexColoring& f)
{
    json j = json::object();
    for (auto [v, c] : f)
        j[std::to_string(v)] = c;
    return j;
}

inline VertexColoring coloring_from_json(const json& j)
{
    try {
        VertexColoring f;
        for (const auto& [k, c] : j.items())
            f[std::stoi(k)] = c.get<int>();
        return f;
    } catch (const std::exception& e) {
        throw InvalidInput(std::string("coloring JSON: ") + e.what());
    }
}

inline json edges_to_json(const std::vector<Edge>& es)
{
    json a = json::array();
    for (auto [u, v] : es)
        a.push_back({u, v});
    return a;
}

inline std::vector<Edge> edges_from_json(const json& j)
{
    std::vector<Edge> es;
    for (const auto& e : j)
        es.emplace_back(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
    return es;
}

// Partition: {"classes": [[edge...], ...], "neat": bool}

inline json partition_to_json(const ForestPartition& p)
{
    json classes = json::array();
    for (const auto& c : p.classes)
        classes.push_back(edges_to_json(c));
    return {{"classes", std::move(classes)}, {"neat", p.neat}};
}

inline ForestPartition partition_from_json(const json& j)
{
    try {
        ForestPartition p;
        for (const auto& c : j.at("classes"))
            p.classes.push_back(edges_from_json(c));
        p.neat = j.value("neat", false);
        return p;
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("partition JSON: ") + e.what());
    }
}

inline json step_to_json(const SurgeryStep& s)
{
    json merged = json::array();
    for (auto [a, b] : s.merged)
        merged.push_back({a, b});
    return {{"kind", to_string(s.kind)},
            {"actors", s.actors},
            {"created", s.created},
            {"merged", std::move(merged)},
            {"removed", s.removed}};
}

inline SurgeryStep step_from_json(const json& j)
{
    try {
        SurgeryStep s;
        s.kind = step_kind_from_string(j.at("kind").get<std::string>());
        s.actors = j.at("actors").get<std::vector<Vertex>>();
        s.created = j.value("created", std::vector<Vertex>{});
        for (const auto& m : j.value("merged", json::array()))
            s.merged.emplace_back(m.at(0).get<Vertex>(), m.at(1).get<Vertex>());
        s.removed = j.value("removed", std::vector<Vertex>{});
        return s;
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("step JSON: ") + e.what());
    }
}

inline json f_vector_to_json(const FVector& f) { return f.counts; }

inline json log_to_json(const SurgeryLog& log)
{
    json steps = json::array();
    for (std::size_t i = 0; i < log.steps.size(); ++i) {
        json s = step_to_json(log.steps[i].step);
        s["transport"] = log.steps[i].transport;
        s["f_vector"] = f_vector_to_json(f_vector(log.levels.at(i + 1), 2));
        steps.push_back(std::move(s));
    }
    return {{"origin", graph_to_json(log.origin)},
            {"origin_coloring", coloring_to_json(log.origin_coloring)},
            {"steps", std::move(steps)}};
}

struct ReplayCheck {
    std::vector<Graph> levels;
    bool ok = true;
    std::string problem;
};

/// Replays a persisted log; every level must be a 2-sphere with the recorded
/// f-vector.
inline ReplayCheck replay_log(const json& j)
{
    ReplayCheck r;
    Graph origin = graph_from_json(j.at("origin"));
    std::vector<LogEntry> steps;
    for (const auto& s : j.at("steps"))
        steps.push_back({step_from_json(s), s.value("transport", std::string{})});
    r.levels = replay(origin, steps);
    for (std::size_t i = 0; i < r.levels.size() && r.ok; ++i) {
        if (!is_two_sphere(r.levels[i])) {
            r.ok = false;
            r.problem = "level " + std::to_string(i) + " is not a 2-sphere";
        } else if (i > 0 && j.at("steps")[i - 1].contains("f_vector") &&
                   j.at("steps")[i - 1].at("f_vector").get<std::vector<std::int64_t>>() !=
                       f_vector(r.levels[i], 2).counts) {
            r.ok = false;
            r.problem = "level " + std::to_string(i) + " f-vector differs from the log";
        }
    }
    return r;
}

inline json level_to_json(const LevelReport& l)
{
    json j = {{"level", l.level}, {"f_vector", f_vector_to_json(l.f)}, {"neat_search", l.neat}, {"nodes", l.nodes}};
    j["move"] = l.move ? json(to_string(*l.move)) : json(nullptr);
    return j;
}

inline json report_to_json(const RunReport& r, bool timings = true)
{
    json j;
    j["input"] = r.input;
    j["validation"] = {{"two_manifold", r.two_manifold},
                       {"connected", r.connected},
                       {"two_sphere", r.two_sphere},
                       {"euler_characteristic", r.euler},
                       {"f_vector", f_vector_to_json(r.f)}};
    if (!r.failed_check.empty())
        j["validation"]["failed_check"] = r.failed_check;
    if (r.prism)
        j["prism"] = {{"poles", {r.prism->poles.first, r.prism->poles.second}}, {"equator", r.prism->equator}};
    if (r.density)
        j["density"] = to_string(*r.density);
    if (r.coloring) {
        j["coloring"] = coloring_to_json(*r.coloring);
        j["kempe_loops"] = r.kempe_loops;
    }
    if (r.terminal) {
        json levels = json::array();
        for (const auto& l : r.levels)
            levels.push_back(level_to_json(l));
        j["descent"] = {{"terminal", to_string(*r.terminal)}, {"level", r.neat_level}, {"levels", std::move(levels)}};
    }
    if (r.lift) {
        json events = json::array();
        for (const auto& e : r.lift->events)
            events.push_back({{"level", e.level}, {"kind", to_string(e.kind)}, {"note", e.note}, {"neat", e.neat}});
        j["lift"] = {{"neat", r.lift->neat}, {"events", std::move(events)}};
        if (r.lift->failed_level) {
            j["lift"]["failed_level"] = *r.lift->failed_level;
            j["lift"]["nonexistence_proved"] = r.lift->nonexistence_proved;
        }
    }
    if (!r.witness.empty())
        j["witness"] = r.witness;
    if (r.neat_coloring)
        j["neat_coloring"] = coloring_to_json(*r.neat_coloring);
    if (r.partition) {
        j["partition"] = partition_to_json(*r.partition);
        json sizes = json::array();
        for (const auto& c : r.partition->classes)
            sizes.push_back(c.size());
        j["forest_sizes"] = std::move(sizes);
        j["verification"] = r.verification;
    }
    j["neat"] = r.neat();
    if (timings)
        j["timings_ms"] = r.timings_ms;
    j["status"] = r.status;
    j["exit_status"] = r.exit_status;
    return j;
}

// DOT export: vertex colors as fills, Kempe classes as edge colors.

inline std::string to_dot(const Graph& g, const VertexColoring* f = nullptr)
{
    static const char* fills[] = {"white", "tomato", "palegreen", "lightskyblue", "gold"};
    static const char* classes[] = {"firebrick", "forestgreen", "royalblue"};
    std::ostringstream out;
    out << "graph G {\n  node [style=filled, shape=circle];\n";
    for (Vertex v : g.vertices()) {
        out << "  " << v;
        if (f && f->contains(v))
            out << " [fillcolor=" << fills[f->at(v)] << ", label=\"" << v << ":" << f->at(v) << "\"]";
        out << ";\n";
    }
    bool classed = f && is_proper(g, *f);
    for (auto [u, v] : g.edges()) {
        out << "  " << u << " -- " << v;
        if (classed) {
            auto k = static_cast<int>(kempe_class(f->at(u), f->at(v)));
            out << " [color=" << classes[k] << ", label=\"" << "ABC"[k] << "\"]";
        }
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

inline json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InvalidInput("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw InvalidInput(path + ": " + e.what());
    }
}

inline void write_text_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path);
    if (!out)
        throw InvalidInput("cannot write " + path);
    out << text;
}

} // namespace sphere_arbor

#endif // SPHERE_ARBOR_IO_HPP
