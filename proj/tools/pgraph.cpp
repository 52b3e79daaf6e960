#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "pgraph/io.hpp"
#include "pgraph/suites.hpp"

namespace fs = std::filesystem;
using namespace pgraph;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_violation = 1;
constexpr int exit_usage = 2;

constexpr int weight_cap = 40;
constexpr int radius_cap = 5;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string surface;
    int weight_bound = 0;
    int radius = -1;
    std::string seed = "chain";
    std::string out;
    int jobs = 1;
    bool no_caps = false;
    std::string filter = "certified";
    std::string format = "dot";
    bool triangulation = false;
    std::string suite;
    std::string association_table;
    long farey_bound = 12;
    int max_word_length = 4;
    std::string counterexamples = "counterexamples.json";
};

SurfaceId parse_surface(const std::string& s) {
    int g = 0, r = 0;
    char comma = 0;
    std::istringstream in(s);
    if (!(in >> g >> comma >> r) || comma != ',' || !in.eof()) throw UsageError("surface must be written g,r: " + s);
    SurfaceId id{g, r};
    if (!is_supported(id)) throw UsageError("unsupported surface " + s);
    return id;
}

BallConfig resolve(const Options& o, SurfaceId s) {
    BallConfig c = default_config(s);
    if (o.weight_bound > 0) c.weight_bound = o.weight_bound;
    if (o.radius >= 0) c.radius = o.radius;
    if (!o.no_caps && (c.weight_bound > weight_cap || c.radius > radius_cap))
        throw UsageError("bounds exceed weight " + std::to_string(weight_cap) + " / radius " +
                         std::to_string(radius_cap) + "; pass --no-caps to override");
    if (o.seed != "chain") throw UsageError("unknown seed " + o.seed);
    return c;
}

SurfaceId required_surface(const Options& o) {
    if (o.surface.empty()) throw UsageError("--surface is required");
    return parse_surface(o.surface);
}

void emit(const Options& o, const std::string& content) {
    if (o.out.empty())
        std::cout << content;
    else
        write_atomic(o.out, content);
}

AssociationTable load_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded() || !j.contains("association_table") || !j["association_table"].is_array() ||
        j["association_table"].size() != 3)
        throw UsageError(path + ": expected {\"association_table\": [a, b, c]}");
    AssociationTable t;
    for (int i = 0; i < 3; ++i) {
        int k = j["association_table"][i].get<int>();
        if (k < 0 || k > 2) throw UsageError(path + ": association index out of range");
        t[i] = Association{k};
    }
    return t;
}

int cmd_curves(const Options& o) {
    auto c = resolve(o, required_surface(o));
    Universe u(c.surface, c.weight_bound, o.jobs);
    emit(o, dump(curves_json(u)));
    return exit_ok;
}

int cmd_ball(const Options& o) {
    auto c = resolve(o, required_surface(o));
    Universe u(c.surface, c.weight_bound, o.jobs);
    auto b = build_ball(u, standard_seed(u), c.radius);
    emit(o, dump(ball_json(u, b)));
    if (!o.out.empty()) write_atomic(fs::path(o.out).replace_extension(".dot"), ball_dot(u, b));
    return exit_ok;
}

int cmd_cells(const Options& o) {
    auto c = resolve(o, required_surface(o));
    VertexFilter f;
    if (o.filter == "certified")
        f = VertexFilter::Certified;
    else if (o.filter == "non-frontier")
        f = VertexFilter::NonFrontier;
    else if (o.filter == "all")
        f = VertexFilter::All;
    else
        throw UsageError("unknown filter " + o.filter);
    Universe u(c.surface, c.weight_bound, o.jobs);
    auto b = build_ball(u, standard_seed(u), c.radius);
    auto inv = detect_cells(b, u, f);
    emit(o, dump(inventory_json(u, b, inv)));
    return inv.failures.empty() ? exit_ok : exit_violation;
}

int cmd_export(const Options& o) {
    SurfaceId s = required_surface(o);
    if (o.triangulation) {
        emit(o, dump(triangulation_json(standard_triangulation(s))));
        return exit_ok;
    }
    auto c = resolve(o, s);
    Universe u(c.surface, c.weight_bound, o.jobs);
    auto b = build_ball(u, standard_seed(u), c.radius);
    if (o.format == "dot")
        emit(o, ball_dot(u, b));
    else if (o.format == "json")
        emit(o, dump(ball_json(u, b)));
    else
        throw UsageError("unknown format " + o.format);
    return exit_ok;
}

int cmd_verify(const Options& o) {
    std::vector<std::string> suites;
    if (o.suite == "all")
        suites = suite_names();
    else if (std::find(suite_names().begin(), suite_names().end(), o.suite) != suite_names().end())
        suites = {o.suite};
    else
        throw UsageError("unknown suite " + o.suite);

    SuiteOptions opt;
    opt.farey_bound = o.farey_bound;
    opt.max_word_length = o.max_word_length;
    if (!o.association_table.empty()) opt.table = load_table(o.association_table);

    Workspace ws(o.jobs);
    SuiteReport total;
    total.name = o.suite;
    for (const auto& name : suites) {
        std::vector<BallConfig> configs;
        if (name == "farey") {
            configs.push_back({});
        } else if (!o.surface.empty()) {
            SurfaceId s = parse_surface(o.surface);
            if (name == "charts" && !is_chart_surface(s)) {
                if (o.suite == "all") continue;
                throw UsageError("charts suite needs surface 1,1 or 0,4");
            }
            configs.push_back(resolve(o, s));
        } else {
            for (SurfaceId s : default_surfaces(name)) configs.push_back(resolve(o, s));
        }
        for (const auto& c : configs) {
            auto r = run_suite(ws, name, c, opt);
            for (const auto& l : r.lines) std::cout << l << "\n";
            std::cout << (r.ok ? "PASS " : "FAIL ") << name << (name == "farey" ? "" : " " + c.str()) << "\n";
            r.name = name + (name == "farey" ? "" : " " + c.str());
            total.merge(r);
        }
    }
    if (!o.out.empty()) write_atomic(o.out, dump(total.to_json()));
    if (!total.ok) {
        write_atomic(o.counterexamples, dump(total.to_json()));
        std::cout << "first counterexample: " << total.counterexamples.front().dump() << "\n";
        std::cout << "counterexamples written to " << o.counterexamples << "\n";
        return exit_violation;
    }
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pants graph explorer: curves, balls, cells and verification suites"};
    app.require_subcommand(1);
    app.set_config("--config", "", "TOML config file; flags on the command line win");
    Options o;

    auto common = [&](CLI::App* sub, bool ball) {
        sub->add_option("--surface", o.surface, "surface as g,r");
        sub->add_option("--weight-bound", o.weight_bound, "bound on every edge weight of the curve universe");
        if (ball) {
            sub->add_option("--radius", o.radius, "ball radius");
            sub->add_option("--seed", o.seed, "seed decomposition")->check(CLI::IsMember({"chain"}));
        }
        sub->add_option("--out", o.out, "output path (stdout when omitted)");
        sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
        sub->add_flag("--no-caps", o.no_caps, "allow weight bound above 40 and radius above 5");
    };

    auto* curves = app.add_subcommand("curves", "enumerate the curve universe as JSON");
    common(curves, false);
    auto* ball = app.add_subcommand("ball", "build a pants graph ball; --out also writes a .dot file");
    common(ball, true);
    auto* cells = app.add_subcommand("cells", "small loops and cells of a ball");
    common(cells, true);
    cells->add_option("--filter", o.filter, "certified, non-frontier or all");
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    common(verify, true);
    verify->add_option("suite", o.suite, "farey, charts, squares, pentagons, hexagons, small-loops, phi or all")
        ->required();
    verify->add_option("--association-table", o.association_table, "JSON file replacing the association table");
    verify->add_option("--farey-bound", o.farey_bound, "slope entry bound for the farey suite");
    verify->add_option("--max-word-length", o.max_word_length, "word length for the phi suite");
    verify->add_option("--counterexamples", o.counterexamples, "where to write counterexamples on failure");
    auto* exp = app.add_subcommand("export", "export a ball as DOT (or JSON), or the triangulation");
    common(exp, true);
    exp->add_option("--format", o.format, "dot or json");
    exp->add_flag("--triangulation", o.triangulation, "export the triangulation of the surface instead");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*curves) return cmd_curves(o);
        if (*ball) return cmd_ball(o);
        if (*cells) return cmd_cells(o);
        if (*verify) return cmd_verify(o);
        if (*exp) return cmd_export(o);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n" << app.help();
        return exit_usage;
    } catch (const Unsupported& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
