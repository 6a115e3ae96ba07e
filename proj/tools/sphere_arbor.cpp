// sphere_arbor command-line driver.

#include <sphere_arbor.hpp>

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

using namespace sphere_arbor;

namespace {

struct Globals {
    std::uint64_t seed = 0;
    long long neat_budget = 2'000'000;
    std::string json_path;
    std::string dot_path;
    bool allow_manifold = false;
    bool no_timings = false;
};

Globals opts;

void emit(const json& j)
{
    std::string text = j.dump(2) + "\n";
    if (opts.json_path.empty())
        std::cout << text;
    else
        write_text_file(opts.json_path, text);
}

std::vector<int> parse_ints(const std::vector<std::string>& words)
{
    std::vector<int> out;
    for (const auto& w : words) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(w, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != w.size())
            throw InvalidInput("expected an integer parameter, got '" + w + "'");
        out.push_back(v);
    }
    return out;
}

// "random N", or any generate() name with its parameters.
Graph generate_from_words(const std::vector<std::string>& words, std::uint64_t seed)
{
    if (words.empty())
        throw InvalidInput("missing generator name");
    std::vector<std::string> rest(words.begin() + 1, words.end());
    if (words[0] == "random") {
        auto p = parse_ints(rest);
        if (p.size() != 1)
            throw InvalidInput("random takes one parameter (vertex count)");
        return random_sphere(p[0], seed);
    }
    return generate(words[0], parse_ints(rest));
}

// A JSON file, "-" for stdin, or "gen:<kind>[:param...]".
Graph load_graph(const std::string& spec)
{
    if (spec.rfind("gen:", 0) == 0) {
        std::vector<std::string> words;
        std::stringstream ss(spec.substr(4));
        for (std::string w; std::getline(ss, w, ':');)
            words.push_back(w);
        return generate_from_words(words, opts.seed);
    }
    if (spec == "-")
        return graph_from_json(json::parse(std::cin));
    return graph_from_json(read_json_file(spec));
}

VertexColoring coloring_for(const Graph& g, const std::string& path)
{
    if (!path.empty())
        return coloring_from_json(read_json_file(path));
    return four_color(g, opts.seed);
}

void write_dot(const Graph& g, const VertexColoring* f)
{
    if (!opts.dot_path.empty())
        write_text_file(opts.dot_path, to_dot(g, f));
}

int cmd_generate(const std::vector<std::string>& words, int n)
{
    std::vector<std::string> w = words;
    if (!w.empty() && w[0] == "random" && w.size() == 1) {
        if (n <= 0)
            throw InvalidInput("random needs --n");
        w.push_back(std::to_string(n));
    }
    Graph g = generate_from_words(w, opts.seed);
    emit(graph_to_json(g));
    write_dot(g, nullptr);
    return 0;
}

int cmd_check(const Graph& g)
{
    json j;
    j["vertices"] = g.order();
    j["edges"] = g.size();
    auto f = f_vector(g, 2);
    j["f_vector"] = f.counts;
    j["euler_characteristic"] = euler_characteristic(f);
    j["two_manifold"] = is_two_manifold(g);
    j["connected"] = is_connected(g);
    j["dehn_sommerville"] = dehn_sommerville(f);
    bool sphere = is_two_sphere(g);
    j["two_sphere"] = sphere;
    if (!sphere)
        j["failed_check"] = detail::first_failed_check(g);
    if (g.order() >= 2 && is_connected(g))
        j["density"] = to_string(nash_williams_density(g));
    if (is_two_manifold(g)) {
        Rational total = 0;
        for (Vertex v : g.vertices())
            total += curvature(g, v);
        j["curvature_sum"] = to_string(total);
    }
    if (sphere) {
        auto cert = is_prism(g);
        j["prism"] = cert ? json{{"poles", {cert->poles.first, cert->poles.second}}, {"equator", cert->equator}}
                          : json(nullptr);
        j["octahedron"] = is_octahedron(g);
        j["g4"] = to_string(degree_four_structure(g).verdict);
    }
    emit(j);
    return sphere || (opts.allow_manifold && is_two_manifold(g)) ? 0 : 1;
}

int cmd_color(const Graph& g, bool eulerian)
{
    VertexColoring f = eulerian ? three_color_eulerian(g) : four_color(g, opts.seed);
    bool proper = is_proper(g, f);
    emit({{"coloring", coloring_to_json(f)}, {"proper", proper}});
    write_dot(g, &f);
    return proper ? 0 : 1;
}

int cmd_kempe(const Graph& g, const std::string& coloring_path)
{
    VertexColoring f = coloring_for(g, coloring_path);
    auto d = kempe_decompose(g, f);
    json classes = json::object();
    for (int k = 0; k < 3; ++k)
        classes[std::string(1, "ABC"[k])] = edges_to_json(d.subgraphs[k].edges());
    json loops = json::array();
    for (const auto& l : kempe_loops(d))
        loops.push_back({{"class", std::string(1, to_char(l.cls))}, {"cycle", l.cycle}});
    bool neat = loops.empty();
    emit({{"coloring", coloring_to_json(f)}, {"classes", classes}, {"loops", loops}, {"neat", neat}});
    write_dot(g, &f);
    return 0;
}

int cmd_neat_check(const Graph& g, const std::string& coloring_path)
{
    if (!coloring_path.empty()) {
        VertexColoring f = coloring_from_json(read_json_file(coloring_path));
        auto loop = find_kempe_loop(g, f);
        json j{{"neat", !loop}};
        if (loop)
            j["witness"] = describe(*loop);
        emit(j);
        return loop ? 1 : 0;
    }
    auto r = neat_search(g, opts.neat_budget, opts.seed);
    json j{{"status", to_string(r.status)}, {"nodes", r.nodes}};
    if (r.coloring) {
        if (!is_neat(g, *r.coloring))
            throw InternalFailure("neat_search returned a coloring that is not neat");
        j["coloring"] = coloring_to_json(*r.coloring);
        write_dot(g, &*r.coloring);
    }
    emit(j);
    return r.coloring ? 0 : 1;
}

int cmd_flow(const std::string& input, const std::string& coloring_path, const std::string& replay_path,
             const std::string& log_path, bool trace)
{
    if (!replay_path.empty()) {
        auto check = replay_log(read_json_file(replay_path));
        json levels = json::array();
        for (const auto& g : check.levels)
            levels.push_back(f_vector(g, 2).counts);
        json j{{"replayed_levels", check.levels.size()}, {"f_vectors", levels}, {"ok", check.ok}};
        if (!check.ok)
            j["problem"] = check.problem;
        emit(j);
        return check.ok ? 0 : 1;
    }
    if (input.empty())
        throw InvalidInput("flow needs an input graph or --replay");
    Graph g = load_graph(input);
    VertexColoring f = coloring_for(g, coloring_path);
    auto d = descend(g, f, {opts.neat_budget, opts.seed});
    if (trace)
        for (const auto& l : d.reports)
            std::cout << level_to_json(l).dump() << "\n";
    if (!log_path.empty())
        write_text_file(log_path, log_to_json(d.log).dump(2) + "\n");
    json j{{"terminal", to_string(d.terminal)}, {"level", d.level}, {"steps", d.log.steps.size()}};
    if (d.neat) {
        j["neat_coloring"] = coloring_to_json(*d.neat);
        auto lift = lift_coloring(d.log, d.level, *d.neat, {opts.neat_budget, opts.seed});
        j["lift"] = {{"neat", lift.neat}, {"proper", is_proper(g, lift.coloring)}};
        if (lift.failed_level) {
            j["lift"]["failed_level"] = *lift.failed_level;
            j["lift"]["nonexistence_proved"] = lift.nonexistence_proved;
        }
    }
    if (!d.witness.empty())
        j["witness"] = d.witness;
    if (!trace || !opts.json_path.empty())
        emit(j);
    return d.terminal == Terminal::NeatFound ? 0 : 1;
}

int cmd_pipeline(const std::string& input)
{
    Graph g = load_graph(input);
    RunReport r = run_pipeline(g, {opts.seed, opts.neat_budget, opts.allow_manifold}, input);
    if (r.partition && !verify_forest_partition(g, *r.partition))
        throw InternalFailure("pipeline produced a partition that fails verification");
    emit(report_to_json(r, !opts.no_timings));
    if (r.neat_coloring)
        write_dot(g, &*r.neat_coloring);
    return r.exit_status;
}

int cmd_arboricity(const Graph& g, const std::string& mode, const std::string& partition_path)
{
    if (mode == "density") {
        json j{{"whole_graph", to_string(nash_williams_density(g, DensityMode::WholeGraph))}};
        if (g.order() <= exact_density_cap)
            j["exact_small"] = to_string(nash_williams_density(g, DensityMode::ExactSmall));
        emit(j);
        return 0;
    }
    if (mode == "oracle") {
        emit({{"arboricity", arboricity_exact_small(g)}});
        return 0;
    }
    if (mode == "verify") {
        if (partition_path.empty())
            throw InvalidInput("--mode verify needs --partition");
        auto v = verify_forest_partition(g, partition_from_json(read_json_file(partition_path)));
        json j{{"ok", v.ok}};
        if (!v.ok)
            j["witness"] = v.witness;
        emit(j);
        return v.ok ? 0 : 1;
    }
    if (mode == "construct") {
        auto p = three_forest_partition(g, {opts.seed, opts.neat_budget, false});
        auto v = verify_forest_partition(g, p);
        json j = partition_to_json(p);
        j["verified"] = v.ok;
        emit(j);
        return v.ok ? 0 : 1;
    }
    throw InvalidInput("unknown --mode '" + mode + "' (construct, verify, oracle, density)");
}

int cmd_limits()
{
    json rows = json::array();
    std::string constants = "{", arbor = "{";
    for (int d = 0; d <= 10; ++d) {
        json row{{"d", d}, {"max_arboricity", conjectured_max_arboricity(d)}};
        if (d >= 1) {
            auto c = to_string(limit_constant(d));
            row["c_d"] = c;
            constants += (d > 1 ? ", " : "") + c;
        }
        arbor += (d > 0 ? ", " : "") + std::to_string(conjectured_max_arboricity(d));
        rows.push_back(row);
    }
    constants += "}";
    arbor += "}";
    if (!opts.json_path.empty()) {
        emit({{"table", rows}, {"c_d", constants}, {"max_arboricity", arbor}});
        return 0;
    }
    std::cout << "d\tc_d\tmax_arboricity\n";
    for (const auto& row : rows)
        std::cout << row["d"].get<int>() << "\t" << row.value("c_d", std::string("-")) << "\t"
                  << row["max_arboricity"].get<int>() << "\n";
    std::cout << constants << "\n" << arbor << "\n";
    return 0;
}

int cmd_census(int max_n)
{
    auto entries = coloring_census(max_n);
    json list = json::array();
    bool boundary = true;
    for (const auto& e : entries) {
        bool exists = e.search == SearchStatus::Found;
        if (exists == e.prism)
            boundary = false;
        json deg = json::array();
        for (Vertex v : e.graph.vertices())
            deg.push_back(e.graph.degree(v));
        list.push_back({{"vertices", e.graph.order()},
                        {"degrees", deg},
                        {"prism", e.prism},
                        {"colorings", e.colorings},
                        {"neat_colorings", e.neat_colorings},
                        {"neat_exists", exists},
                        {"edges", edges_to_json(e.graph.edges())}});
    }
    emit({{"max_n", max_n}, {"spheres", entries.size()}, {"prisms_exactly_negative", boundary}, {"census", list}});
    return boundary ? 0 : 1;
}

int cmd_export(const Graph& g, const std::string& coloring_path, bool plain)
{
    VertexColoring f;
    if (!plain)
        f = coloring_for(g, coloring_path);
    std::string dot = to_dot(g, plain ? nullptr : &f);
    if (opts.dot_path.empty())
        std::cout << dot;
    else
        write_text_file(opts.dot_path, dot);
    return 0;
}

// Manifest lines: "<generator> [params...] [seed=S]"; blank lines and '#'
// comments are skipped.
int cmd_batch(const std::string& manifest)
{
    std::ifstream in(manifest);
    if (!in)
        throw InvalidInput("cannot open " + manifest);
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) {
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        if (line.find_first_not_of(" \t\r") != std::string::npos)
            lines.push_back(line);
    }
    std::size_t threads = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("SPHERE_ARBOR_THREADS"))
        threads = std::max(1, std::atoi(env));
    threads = std::min(threads, std::max<std::size_t>(lines.size(), 1));

    std::vector<json> results(lines.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < lines.size();) {
            std::stringstream ss(lines[i]);
            std::vector<std::string> words;
            std::uint64_t seed = opts.seed;
            for (std::string w; ss >> w;) {
                if (w.rfind("seed=", 0) == 0)
                    seed = std::stoull(w.substr(5));
                else
                    words.push_back(w);
            }
            try {
                Graph g = generate_from_words(words, seed);
                RunReport r = run_pipeline(g, {seed, opts.neat_budget, opts.allow_manifold}, lines[i]);
                results[i] = report_to_json(r, !opts.no_timings);
            } catch (const std::exception& e) {
                results[i] = {{"input", lines[i]}, {"status", "error"}, {"error", e.what()}, {"exit_status", 2}};
            }
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t)
        pool.emplace_back(worker);
    for (auto& t : pool)
        t.join();

    std::size_t passed = 0;
    json all = json::array();
    for (auto& r : results) {
        passed += r.value("exit_status", 1) == 0;
        all.push_back(std::move(r));
    }
    emit({{"lines", lines.size()}, {"passed", passed}, {"reports", all}});
    return passed == lines.size() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Discrete 2-spheres: generation, coloring, Kempe forests, arboricity"};
    app.require_subcommand(1);
    app.add_option("--seed", opts.seed, "Seed for generators and searches");
    app.add_option("--neat-budget", opts.neat_budget, "Node budget for neat-coloring searches");
    app.add_option("--json", opts.json_path, "Write JSON output to this file instead of stdout");
    app.add_option("--dot", opts.dot_path, "Also write a DOT rendering to this file");
    app.add_flag("--allow-manifold", opts.allow_manifold, "Accept 2-manifolds that are not spheres (density only)");
    app.add_flag("--no-timings", opts.no_timings, "Omit timing fields from reports");

    std::string input, coloring_path, mode = "construct", partition_path, replay_path, log_path, manifest;
    std::vector<std::string> words;
    int n = 0, max_n = 9;
    bool eulerian = false, trace = false, plain = false;

    auto* gen = app.add_subcommand("generate", "Write a named or random sphere as graph JSON");
    gen->add_option("kind", words, "octahedron | icosahedron | prism N | cycle N | complete N | torus M N | random N")
        ->required();
    gen->add_option("--n", n, "Vertex count for random");

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("input", input, "Graph JSON file, '-' for stdin, or gen:<kind>[:params]")->required();
    };
    auto* check = app.add_subcommand("check", "Validate a graph as a 2-manifold / 2-sphere");
    add_input(check);
    auto* color = app.add_subcommand("color", "Proper 4-coloring");
    add_input(color);
    color->add_flag("--eulerian", eulerian, "Heawood 3-coloring (all degrees even)");
    auto* kempe = app.add_subcommand("kempe", "Kempe edge classes and loops");
    add_input(kempe);
    kempe->add_option("--coloring", coloring_path, "Coloring JSON (default: computed)");
    auto* neat = app.add_subcommand("neat-check", "Check a coloring for neatness, or search for a neat one");
    add_input(neat);
    neat->add_option("--coloring", coloring_path, "Coloring JSON to check");
    auto* flow = app.add_subcommand("flow", "Descent by the contraction map and lift back");
    flow->add_option("input", input, "Graph JSON file or gen:<kind>[:params]");
    flow->add_option("--coloring", coloring_path, "Starting coloring JSON (default: computed)");
    flow->add_flag("--trace", trace, "Print one JSON line per level");
    flow->add_option("--log", log_path, "Persist the surgery log");
    flow->add_option("--replay", replay_path, "Replay a persisted surgery log");
    auto* pipe = app.add_subcommand("pipeline", "Color, descend, lift and build the forest partition");
    add_input(pipe);
    auto* arb = app.add_subcommand("arboricity", "Forest partitions and arboricity");
    add_input(arb);
    arb->add_option("--mode", mode, "construct | verify | oracle | density");
    arb->add_option("--partition", partition_path, "Partition JSON for --mode verify");
    auto* lim = app.add_subcommand("limits", "Barycentric limit constants and arboricity sequence");
    auto* cen = app.add_subcommand("census", "Exhaustive neat-coloring census of small spheres");
    cen->add_option("--max-n", max_n, "Largest vertex count (at most 12)");
    auto* exp = app.add_subcommand("export", "DOT rendering with vertex colors and Kempe classes");
    add_input(exp);
    exp->add_option("--coloring", coloring_path, "Coloring JSON (default: computed)");
    exp->add_flag("--plain", plain, "No coloring");
    auto* batch = app.add_subcommand("batch", "Run the pipeline on every line of a manifest");
    batch->add_option("manifest", manifest, "Lines of '<generator> [params] [seed=S]'")->required();

    for (auto* sub : app.get_subcommands({}))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed())
            return cmd_generate(words, n);
        if (check->parsed())
            return cmd_check(load_graph(input));
        if (color->parsed())
            return cmd_color(load_graph(input), eulerian);
        if (kempe->parsed())
            return cmd_kempe(load_graph(input), coloring_path);
        if (neat->parsed())
            return cmd_neat_check(load_graph(input), coloring_path);
        if (flow->parsed())
            return cmd_flow(input, coloring_path, replay_path, log_path, trace);
        if (pipe->parsed())
            return cmd_pipeline(input);
        if (arb->parsed())
            return cmd_arboricity(load_graph(input), mode, partition_path);
        if (lim->parsed())
            return cmd_limits();
        if (cen->parsed())
            return cmd_census(max_n);
        if (exp->parsed())
            return cmd_export(load_graph(input), coloring_path, plain);
        if (batch->parsed())
            return cmd_batch(manifest);
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Refusal& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
