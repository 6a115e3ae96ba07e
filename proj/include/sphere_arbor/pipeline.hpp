#ifndef SPHERE_ARBOR_PIPELINE_HPP
#define SPHERE_ARBOR_PIPELINE_HPP

#include <sphere_arbor/arboricity.hpp>
#include <sphere_arbor/coloring.hpp>
#include <sphere_arbor/flow.hpp>
#include <sphere_arbor/topology.hpp>

#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sphere_arbor {

struct PipelineOptions {
    std::uint64_t seed = 0;
    long long neat_budget = 2'000'000;
    bool allow_manifold = false;
};

struct RunReport {
    std::string input;

    bool two_manifold = false;
    bool connected = false;
    bool two_sphere = false;
    std::int64_t euler = 0;
    FVector f;
    std::string failed_check;
    std::optional<PrismCertificate> prism;
    std::optional<Rational> density;

    std::optional<VertexColoring> coloring; // the 4-coloring the pipeline started from
    std::size_t kempe_loops = 0;

    std::optional<Terminal> terminal;
    std::size_t neat_level = 0;
    std::vector<LevelReport> levels;
    std::string witness;
    std::optional<LiftResult> lift;

    std::optional<VertexColoring> neat_coloring;
    std::optional<ForestPartition> partition;
    bool partition_verified = false;
    std::string verification;

    std::map<std::string, double> timings_ms;
    std::string status;
    int exit_status = 1;

    bool neat() const { return partition && partition->neat && partition_verified; }
};

namespace detail {

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}

    double lap()
    {
        auto now = std::chrono::steady_clock::now();
        double ms = std::chrono::duration<double, std::milli>(now - start_).count();
        start_ = now;
        return ms;
    }

private:
    std::chrono::steady_clock::time_point start_;
};

inline std::string first_failed_check(const Graph& g)
{
    if (g.empty())
        return "is_two_manifold: graph is empty";
    for (Vertex v : g.vertices()) {
        auto cyc = link_cycle(g, v);
        if (!cyc)
            return "is_two_manifold: unit sphere of " + std::to_string(v) + " is not a cycle";
        if (cyc->size() < 4)
            return "is_two_manifold: unit sphere of " + std::to_string(v) + " has length " +
                   std::to_string(cyc->size());
    }
    if (!is_connected(g))
        return "is_connected: graph has " + std::to_string(connected_components(g).size()) + " components";
    return "euler_characteristic: chi = " + std::to_string(euler_characteristic(f_vector(g, 2)));
}

} // namespace detail

/// color → Kempe decomposition → (when loops exist) descent and lift →
/// forests, with every partition verified before it is reported.
inline RunReport run_pipeline(const Graph& g, const PipelineOptions& opt = {}, std::string input = {})
{
    RunReport r;
    r.input = std::move(input);
    detail::Stopwatch clock;

    r.two_manifold = is_two_manifold(g);
    r.connected = is_connected(g);
    r.f = f_vector(g, 2);
    r.euler = euler_characteristic(r.f);
    r.two_sphere = r.two_manifold && r.connected && r.euler == 2;
    if (r.connected && g.order() >= 2)
        r.density = nash_williams_density(g);
    r.timings_ms["validate"] = clock.lap();
    if (!r.two_sphere) {
        r.failed_check = detail::first_failed_check(g);
        if (opt.allow_manifold && r.two_manifold) {
            r.status = "density_only";
            r.exit_status = r.density ? 0 : 1;
        } else {
            r.status = "rejected";
            r.exit_status = 2;
        }
        return r;
    }

    r.prism = is_prism(g);
    if (r.prism) {
        r.partition = prism_partition(g, *r.prism);
        auto v = verify_forest_partition(g, *r.partition);
        r.partition_verified = v.ok;
        r.verification = v.ok ? "pass" : v.witness;
        r.timings_ms["partition"] = clock.lap();
        r.status = v.ok ? "prism_partition" : "verification_failed";
        r.exit_status = v.ok ? 0 : 1;
        return r;
    }

    VertexColoring f = four_color(g, opt.seed);
    r.coloring = f;
    r.kempe_loops = kempe_loops(kempe_decompose(g, f)).size();
    r.timings_ms["color"] = clock.lap();

    if (r.kempe_loops == 0) {
        r.neat_coloring = f;
    } else {
        auto d = descend(g, f, {opt.neat_budget, opt.seed});
        r.terminal = d.terminal;
        r.levels = d.reports;
        r.neat_level = d.level;
        r.timings_ms["descend"] = clock.lap();
        if (d.terminal != Terminal::NeatFound) {
            r.witness = d.terminal == Terminal::Stuck
                            ? d.witness
                            : std::string("descent reached ") + std::string(to_string(d.terminal)) + " at level " +
                                  std::to_string(d.level) + " without a neat coloring";
            r.status = "descent_failed";
            return r;
        }
        auto lift = lift_coloring(d.log, d.level, *d.neat, {opt.neat_budget, opt.seed});
        r.timings_ms["lift"] = clock.lap();
        if (!lift.neat) {
            r.witness = "neatness lost at level " + std::to_string(lift.failed_level.value_or(0)) +
                        (lift.nonexistence_proved ? "; that level has no neat coloring (exhaustive search)"
                                                  : "; repair budget exhausted");
            r.lift = std::move(lift);
            r.status = "lift_failed";
            return r;
        }
        r.neat_coloring = lift.coloring;
        r.lift = std::move(lift);
    }

    r.partition = forests_from_coloring(g, *r.neat_coloring);
    auto v = verify_forest_partition(g, *r.partition);
    r.partition_verified = v.ok;
    r.verification = v.ok ? "pass" : v.witness;
    r.timings_ms["partition"] = clock.lap();
    r.status = v.ok ? "neat_partition" : "verification_failed";
    r.exit_status = v.ok ? 0 : 1;
    return r;
}

/// run_pipeline could not produce a verified partition.
class PipelineFailure : public Refusal {
public:
    PipelineFailure(const std::string& what, RunReport report) : Refusal(what), report(std::move(report)) {}

    RunReport report;
};

/// Verified 3-forest partition: neat for non-prisms via the pipeline, the
/// explicit recipe for prisms.
inline ForestPartition three_forest_partition(const Graph& g, const PipelineOptions& opt = {})
{
    if (!is_two_sphere(g))
        throw InvalidInput("three_forest_partition: input is not a 2-sphere");
    RunReport r = run_pipeline(g, opt);
    if (!r.partition || !r.partition_verified)
        throw PipelineFailure("three_forest_partition: " + r.status + (r.witness.empty() ? "" : ": " + r.witness),
                              std::move(r));
    return *r.partition;
}

} // namespace sphere_arbor

#endif // SPHERE_ARBOR_PIPELINE_HPP
