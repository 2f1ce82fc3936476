#include "crosscount/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "crosscount/convex.hpp"
#include "crosscount/count.hpp"
#include "crosscount/error.hpp"
#include "crosscount/general_position.hpp"
#include "crosscount/graph_io.hpp"
#include "crosscount/hull.hpp"
#include "crosscount/layered.hpp"
#include "crosscount/oracle.hpp"
#include "crosscount/svg.hpp"

namespace crosscount::cli {

namespace {

using Clock = std::chrono::steady_clock;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InternalInconsistency: return kExitInternal;
        case ErrorKind::InvalidSpec: return kExitUsage;
        default: return kExitInvalidInput;
    }
}

GeometricGraph load(const RunConfig& config, std::istream& in) {
    if (config.input == "-") return read_graph(in);
    std::ifstream file(config.input);
    if (!file) throw Error(ErrorKind::ParseError, "cannot open " + config.input);
    return read_graph(file);
}

struct Prepared {
    GeometricGraph graph;
    bool perturbed = false;
};

// Largest exponent up to kPerturbExponent whose scaled and offset coordinates stay in bounds.
int perturb_exponent(std::span<const Point> points) {
    Coord widest = 0;
    for (const auto& p : points) widest = std::max({widest, p.x < 0 ? -p.x : p.x, p.y < 0 ? -p.y : p.y});
    int k = kPerturbExponent;
    while (k > 0 && widest * (Coord{1} << k) + (Coord{1} << (k - 1)) > kCoordLimit) --k;
    return k;
}

Prepared prepare(const RunConfig& config, std::istream& in) {
    Prepared p{load(config, in), false};
    if (config.perturb_seed) {
        const int k = perturb_exponent(p.graph.points());
        auto pts = perturb(p.graph.points(), p.graph.edges(), *config.perturb_seed, k);
        // Perturbed points are no longer layer-aligned.
        p.graph = without_layers(with_points(p.graph, std::move(pts)));
        p.perturbed = true;
    }
    return p;
}

Method resolve(Method requested, const GeometricGraph& g, bool allow_layered) {
    if (requested != Method::Auto) return requested;
    if (allow_layered && g.has_layers()) return Method::Layered;
    if (g.vertex_count() >= 3 && in_strictly_convex_position(g.points())) return Method::Convex;
    return Method::General;
}

void require_general_position(const GeometricGraph& g) {
    const auto report = validate_general_position(g.points(), g.edges());
    if (!report.ok) throw Error(ErrorKind::GeneralPositionViolation, report.summary());
}

PatternTotals count_with(Method method, const GeometricGraph& g, unsigned jobs) {
    switch (method) {
        case Method::Convex: return count_crossings_convex(g, jobs);
        case Method::Layered: return count_crossings_layered(g, jobs);
        case Method::Oracle: require_general_position(g); return oracle::patterns(g);
        default: return count_crossings(g, CountOptions{jobs});
    }
}

void write_count(const RunConfig& config, const GeometricGraph& g, Method method, const PatternTotals& t,
                 long long micros, bool perturbed, std::ostream& out) {
    switch (config.format) {
        case Format::Json: {
            nlohmann::ordered_json j;
            j["n"] = g.vertex_count();
            j["m"] = g.edge_count();
            j["method"] = to_string(method);
            j["A"] = t.a_total;
            j["B"] = t.b_total;
            j["crossings"] = t.crossings;
            j["elapsed_micros"] = micros;
            j["perturbed"] = perturbed;
            out << j.dump() << '\n';
            break;
        }
        case Format::Csv:
            out << "n,m,method,A,B,crossings,elapsed_micros,perturbed\n"
                << g.vertex_count() << ',' << g.edge_count() << ',' << to_string(method) << ',' << t.a_total << ','
                << t.b_total << ',' << t.crossings << ',' << micros << ',' << (perturbed ? "true" : "false") << '\n';
            break;
        case Format::Plain:
            out << t.crossings << '\n';
            if (perturbed) out << "perturbed: true\n";
            break;
    }
}

int cmd_count(const RunConfig& config, std::istream& in, std::ostream& out) {
    auto [g, perturbed] = prepare(config, in);
    const Method method = resolve(config.method, g, true);
    const auto start = Clock::now();
    const auto totals = count_with(method, g, config.jobs);
    const auto micros = std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start).count();
    write_count(config, g, method, totals, micros, perturbed, out);
    return kExitOk;
}

int cmd_patterns(const RunConfig& config, std::istream& in, std::ostream& out) {
    if (config.method == Method::Layered) {
        throw UsageError("patterns: the layered method only yields crossings, not pattern totals");
    }
    auto [g, perturbed] = prepare(config, in);
    const Method method = resolve(config.method, g, false);
    const auto t = count_with(method, g, config.jobs);
    switch (config.format) {
        case Format::Json: {
            nlohmann::ordered_json j;
            j["method"] = to_string(method);
            j["A"] = t.a_total;
            j["B"] = t.b_total;
            j["crossings"] = t.crossings;
            j["perturbed"] = perturbed;
            out << j.dump() << '\n';
            break;
        }
        case Format::Csv:
            out << "A,B,crossings\n" << t.a_total << ',' << t.b_total << ',' << t.crossings << '\n';
            break;
        case Format::Plain:
            out << "A=" << t.a_total << " B=" << t.b_total << " cr=" << t.crossings << '\n';
            if (perturbed) out << "perturbed: true\n";
            break;
    }
    return kExitOk;
}

int cmd_validate(const RunConfig& config, std::istream& in, std::ostream& out) {
    const auto g = load(config, in);
    const auto report = validate_general_position(g.points(), g.edges());
    if (config.format == Format::Json) {
        nlohmann::ordered_json j;
        j["ok"] = report.ok;
        j["violations"] = nlohmann::json::array();
        for (const auto& v : report.violations) {
            j["violations"].push_back({{"kind", to_string(v.kind)}, {"witnesses", v.witnesses}});
        }
        out << j.dump() << '\n';
    } else if (report.ok) {
        out << "ok\n";
    } else {
        out << report.summary() << '\n';
    }
    return report.ok ? kExitOk : kExitInvalidInput;
}

GeneratorSpec spec_from(const RunConfig& config, std::size_t n) {
    GeneratorSpec spec;
    spec.family = config.family;
    spec.n = n;
    spec.layer_sizes = config.layer_sizes;
    spec.density = config.density;
    spec.seed = config.seed;
    if (spec.family == Family::Layered && spec.layer_sizes.empty()) {
        // Four layers sharing n vertices.
        const std::size_t per = std::max<std::size_t>(1, n / 4);
        spec.layer_sizes.assign(4, per);
    }
    if (config.range) {
        spec.range = *config.range;
    } else if (spec.family == Family::Layered) {
        // Prefer some slack between x values, within the stack height the family allows.
        const auto widest = static_cast<Coord>(*std::max_element(spec.layer_sizes.begin(), spec.layer_sizes.end()));
        const Coord roomy = (kCoordLimit >> kLayeredPerturbExponent) / kLayerGapFactor /
                            static_cast<Coord>(spec.layer_sizes.size());
        spec.range = std::max(2 * widest, std::min(8 * widest, roomy));
    }
    return spec;
}

int cmd_gen(const RunConfig& config, std::ostream& out) {
    const auto g = generate(spec_from(config, config.n));
    if (config.format == Format::Json || g.has_layers()) {
        out << serialize_graph_json(g) << '\n';
    } else {
        out << serialize_graph(g);
    }
    return kExitOk;
}

int cmd_bench(const RunConfig& config, std::ostream& out) {
    std::vector<std::size_t> sizes = config.sizes;
    if (sizes.empty()) sizes = {16, 32, 64, 128};
    const unsigned repeats = std::max(1u, config.repeats);
    out << "n,m,method,elapsed_micros,crossings\n";
    for (const std::size_t n : sizes) {
        const auto g = generate(spec_from(config, n));
        const Method method = resolve(config.method, g, true);
        PatternTotals totals;
        long long total_micros = 0;
        for (unsigned r = 0; r < repeats; ++r) {
            const auto start = Clock::now();
            totals = count_with(method, g, config.jobs);
            total_micros += std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start).count();
        }
        out << g.vertex_count() << ',' << g.edge_count() << ',' << to_string(method) << ','
            << total_micros / repeats << ',' << totals.crossings << '\n';
    }
    return kExitOk;
}

int cmd_draw(const RunConfig& config, std::istream& in, std::ostream& out) {
    auto [g, perturbed] = prepare(config, in);
    (void)perturbed;
    out << render_svg(g);
    return kExitOk;
}

int dispatch(const RunConfig& config, std::istream& in, std::ostream& out) {
    switch (config.command) {
        case Command::Count: return cmd_count(config, in, out);
        case Command::Patterns: return cmd_patterns(config, in, out);
        case Command::Validate: return cmd_validate(config, in, out);
        case Command::Gen: return cmd_gen(config, out);
        case Command::Bench: return cmd_bench(config, out);
        case Command::Draw: return cmd_draw(config, in, out);
    }
    return kExitUsage;
}

}  // namespace

const char* to_string(Method method) noexcept {
    switch (method) {
        case Method::Auto: return "auto";
        case Method::General: return "general";
        case Method::Convex: return "convex";
        case Method::Layered: return "layered";
        case Method::Oracle: return "oracle";
    }
    return "?";
}

int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
    try {
        if (config.out.empty()) return dispatch(config, in, out);
        // Buffer so a failed command leaves no partial file behind.
        std::ostringstream buffer;
        const int status = dispatch(config, in, buffer);
        std::ofstream file(config.out, std::ios::binary);
        if (!file) {
            err << "error: cannot write " << config.out << '\n';
            return kExitInvalidInput;
        }
        file << buffer.str();
        return status;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.kind());
    } catch (const std::bad_alloc&) {
        err << "error: out of memory\n";
        return kExitInvalidInput;
    }
}

int main(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact crossing counts for straight-line graph drawings"};
    RunConfig config;

    const std::map<std::string, Command> commands{{"count", Command::Count}, {"patterns", Command::Patterns},
                                                  {"validate", Command::Validate}, {"gen", Command::Gen},
                                                  {"bench", Command::Bench}, {"draw", Command::Draw}};
    const std::map<std::string, Method> methods{{"auto", Method::Auto}, {"general", Method::General},
                                                {"convex", Method::Convex}, {"layered", Method::Layered},
                                                {"oracle", Method::Oracle}};
    const std::map<std::string, Format> formats{{"plain", Format::Plain}, {"json", Format::Json},
                                                {"csv", Format::Csv}};
    const std::map<std::string, Family> families{{"complete", Family::Complete}, {"random", Family::RandomEdges},
                                                 {"convex", Family::ConvexComplete}, {"layered", Family::Layered}};

    Coord range = 0;
    std::uint64_t perturb_seed = 0;
    app.add_option("command", config.command, "count | patterns | validate | gen | bench | draw")
        ->required()
        ->transform(CLI::CheckedTransformer(commands, CLI::ignore_case));
    app.add_option("input", config.input, "graph file, or - for standard input");
    app.add_option("--method", config.method, "auto | general | convex | layered | oracle")
        ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case));
    app.add_option("--format", config.format, "plain | json | csv")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    app.add_option("--seed", config.seed, "generator seed");
    app.add_option("--jobs", config.jobs, "worker threads")->check(CLI::Range(1u, 1024u));
    auto* perturb_opt = app.add_option("--perturb", perturb_seed, "count a perturbed copy of the drawing");
    app.add_option("--out", config.out, "write output to PATH");
    app.add_option("--family", config.family, "gen/bench: complete | random | convex | layered")
        ->transform(CLI::CheckedTransformer(families, CLI::ignore_case));
    app.add_option("-n,--n", config.n, "gen: vertex count")->check(CLI::PositiveNumber);
    app.add_option("--layers", config.layer_sizes, "gen/bench: layer sizes (layered family)")->delimiter(',');
    app.add_option("--density", config.density, "gen/bench: edge probability")->check(CLI::Range(0.0, 1.0));
    auto* range_opt = app.add_option("--range", range, "gen/bench: coordinate range")->check(CLI::PositiveNumber);
    app.add_option("--sizes", config.sizes, "bench: vertex counts")->delimiter(',');
    app.add_option("--repeats", config.repeats, "bench: timing repetitions")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n' << "run with --help for usage\n";
        return kExitUsage;
    }
    if (perturb_opt->count() > 0) config.perturb_seed = perturb_seed;
    if (range_opt->count() > 0) config.range = range;
    return run(config, in, out, err);
}

}  // namespace crosscount::cli
