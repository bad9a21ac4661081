#include "cli.hpp"

#include "reeb/bottleneck.hpp"
#include "reeb/build.hpp"
#include "reeb/distortion.hpp"
#include "reeb/errors.hpp"
#include "reeb/generate.hpp"
#include "reeb/io.hpp"
#include "reeb/metric.hpp"
#include "reeb/persistence.hpp"
#include "reeb/plot.hpp"
#include "reeb/simplify.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

namespace reeb::cli {

namespace {

json read_json(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw SchemaError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw SchemaError(path + ": " + e.what());
    }
}

void write_text(const std::string& path, const std::string& text)
{
    std::ofstream out(path);
    if (!out)
        throw SchemaError("cannot write " + path);
    out << text;
}

bool ends_with(const std::string& s, const std::string& tail)
{
    return s.size() >= tail.size() && s.compare(s.size() - tail.size(), tail.size(), tail) == 0;
}

ReebGraph read_graph(const std::string& path)
{
    return reeb_from_json(read_json(path));
}

// "n<id>" for a node, "a<id>@<value>" for a point on an arc.
ReebPoint parse_point(const ReebGraph& g, const std::string& text)
{
    try {
        if (text.size() > 1 && text[0] == 'n') {
            const auto idx = g.find_node(std::stoi(text.substr(1)));
            if (!idx)
                throw UnknownNode("no node " + text);
            return ReebPoint::at_node(g, *idx);
        }
        const auto at = text.find('@');
        if (text.size() > 1 && text[0] == 'a' && at != std::string::npos) {
            const auto arc = g.find_arc(std::stoi(text.substr(1, at - 1)));
            if (!arc)
                throw SchemaError("no arc " + text);
            return ReebPoint::on_arc(g, *arc, std::stod(text.substr(at + 1)));
        }
    } catch (const std::invalid_argument&) {
    } catch (const std::out_of_range&) {
        throw SchemaError("point " + text + " is off its arc");
    }
    throw SchemaError("bad point '" + text + "' (use n<id> or a<id>@<value>)");
}

json number_or_inf(double x)
{
    return std::isinf(x) ? json("inf") : json(x);
}

json distances_json(const ClassDistances& d)
{
    return {{"ordinary0-up", d.ordinary0_up},
            {"ordinary0-down", d.ordinary0_down},
            {"essential0", d.essential0},
            {"extended1", d.extended1}};
}

PersistenceDiagram full_diagram(const ReebGraph& g)
{
    PersistenceDiagram d = ordinary0(g, Direction::up);
    for (const auto& p : ordinary0(g, Direction::down).points)
        d.points.push_back(p);
    for (const auto& p : extended1(g).points)
        d.points.push_back(p);
    return d;
}

PersistenceDiagram diagram_of(const ReebGraph& g, const std::string& cls)
{
    if (cls == "all")
        return full_diagram(g);
    return full_diagram(g).only(point_class_from_string(cls));
}

json witness_json(const ReebGraph& f, const ReebGraph& g, const DiscreteMapPair& m)
{
    auto map_json = [](const ReebGraph& src, const ReebGraph& dst, const std::vector<int>& map) {
        json out = json::array();
        for (int v = 0; v < src.node_count(); ++v)
            out.push_back({src.node(v).id, dst.node(map[v]).id});
        return out;
    };
    auto paths_json = [](const ReebGraph& src, const ReebGraph& dst, const std::vector<std::vector<int>>& paths) {
        json out = json::array();
        for (int e = 0; e < src.arc_count(); ++e) {
            json ids = json::array();
            for (int a : paths[e])
                ids.push_back(dst.arc(a).id);
            out.push_back({{"arc", src.arc(e).id}, {"path", ids}});
        }
        return out;
    };
    return {{"phi", map_json(f, g, m.phi)},
            {"psi", map_json(g, f, m.psi)},
            {"phi_paths", paths_json(f, g, m.phi_paths)},
            {"psi_paths", paths_json(g, f, m.psi_paths)}};
}

json report_json(const DistortionReport& r)
{
    json doc;
    doc["lower"] = r.lower;
    doc["lower_terms"] = distances_json(r.lower_terms);
    doc["upper"] = r.upper ? json(*r.upper) : json(nullptr);
    doc["slack"] = r.slack;
    doc["eps"] = r.eps;
    doc["complete"] = r.complete;
    doc["steps"] = r.steps;
    if (r.terms) {
        doc["terms"] = {{"function_f", r.terms->function_f},
                        {"function_g", r.terms->function_g},
                        {"round_trip_f", r.terms->round_trip_f},
                        {"round_trip_g", r.terms->round_trip_g},
                        {"node_round_trip_f", r.terms->node_round_trip_f},
                        {"node_round_trip_g", r.terms->node_round_trip_g}};
    } else {
        doc["terms"] = nullptr;
    }
    if (r.witness) {
        doc["witness"] = witness_json(*r.f_subdivided, *r.g_subdivided, *r.witness);
        doc["f_subdivided"] = to_json(*r.f_subdivided);
        doc["g_subdivided"] = to_json(*r.g_subdivided);
    } else {
        doc["witness"] = nullptr;
    }
    return doc;
}

json pair_json(const FeaturePair& p)
{
    return {{"kind", to_string(p.kind)}, {"lower", p.lower}, {"upper", p.upper}, {"persistence", p.persistence}};
}

json verification_json(const SimplificationReport& r)
{
    return {{"ok", r.ok()},
            {"distances", distances_json(r.distances)},
            {"ordinary0_up_ok", r.ordinary0_up_ok},
            {"ordinary0_down_ok", r.ordinary0_down_ok},
            {"extended1_ok", r.extended1_ok},
            {"contraction_checked", r.contraction_checked},
            {"contraction_violations", r.contraction_violations},
            {"fiber_checked", r.fiber_checked},
            {"fiber_violations", r.fiber_violations},
            {"value_violations", r.value_violations}};
}

std::string csv_number(double x)
{
    if (std::isinf(x))
        return "inf";
    std::ostringstream s;
    s << json(x).dump();
    return s.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Reeb graphs: construction, persistence, distances, simplification"};
    app.require_subcommand(1);

    std::string input;
    std::string second;
    std::string scalars;
    std::string cls = "all";
    std::string svg;
    double eps = 0.5;
    int budget = 14;
    std::size_t max_steps = 0;
    bool include_essential0 = false;
    double delta = 0.0;
    bool verify = false;
    bool until_stable = false;
    std::vector<std::string> points;
    std::uint64_t seed = 1;
    int nodes = 8;
    int cycles = 1;

    auto* build = app.add_subcommand("build", "Reeb graph of a scalar complex (JSON, or OFF with --scalars)");
    build->add_option("input", input, "complex.json or mesh.off")->required();
    build->add_option("--scalars", scalars, "one value per OFF vertex");

    auto* diagram = app.add_subcommand("diagram", "persistence diagrams of a Reeb graph");
    diagram->add_option("graph", input)->required();
    diagram->add_option("--class", cls, "ordinary0-up, ordinary0-down, essential0, extended1 or all");
    diagram->add_option("--svg", svg, "also write a plot");

    auto* basis = app.add_subcommand("basis", "thinnest cycle basis");
    basis->add_option("graph", input)->required();

    auto* bottleneck_cmd = app.add_subcommand("bottleneck", "bottleneck distance of two graphs or two diagrams");
    bottleneck_cmd->add_option("first", input)->required();
    bottleneck_cmd->add_option("second", second)->required();
    bottleneck_cmd->add_option("--class", cls, "point class, or all");

    auto* distance = app.add_subcommand("distance", "bounds on the functional distortion distance");
    distance->add_option("first", input)->required();
    distance->add_option("second", second)->required();
    distance->add_option("--eps", eps, "subdivision step");
    distance->add_option("--budget", budget, "node cap per subdivided graph");
    distance->add_option("--max-steps", max_steps, "search cap, 0 for none");
    distance->add_flag("--exclude-essential0", "leave essential0 out of the lower bound (default)");
    distance->add_flag("--include-essential0", include_essential0, "use essential0 in the lower bound");

    auto* simplify_cmd = app.add_subcommand("simplify", "remove features of persistence <= delta");
    simplify_cmd->add_option("graph", input)->required();
    simplify_cmd->add_option("--delta", delta)->required();
    simplify_cmd->add_flag("--verify", verify, "check the stability bounds");
    simplify_cmd->add_flag("--until-stable", until_stable, "repeat while small pairs remain");

    auto* metric = app.add_subcommand("metric", "path-height distances as CSV");
    metric->add_option("graph", input)->required();
    metric->add_option("--point", points, "n<id> or a<id>@<value>; default all nodes");

    auto* gen = app.add_subcommand("gen", "random Reeb graph");
    gen->add_option("--seed", seed);
    gen->add_option("--nodes", nodes);
    gen->add_option("--cycles", cycles);

    std::vector<std::string> argv(args.rbegin(), args.rend());
    if (!argv.empty())
        argv.pop_back();  // program name
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? ok : invalid_input;
    }

    try {
        if (build->parsed()) {
            ScalarComplex complex;
            if (ends_with(input, ".off")) {
                if (scalars.empty())
                    throw SchemaError("OFF input needs --scalars");
                std::ifstream off(input);
                std::ifstream values(scalars);
                if (!off || !values)
                    throw SchemaError("cannot open " + (off ? scalars : input));
                complex = complex_from_off(off, values);
            } else {
                complex = complex_from_json(read_json(input));
            }
            const ReebGraph g = build_reeb(complex);
            out << to_json(g).dump() << '\n';
            err << "reeb graph: " << g.node_count() << " nodes, " << g.arc_count() << " arcs, cycle rank "
                << g.cycle_rank() << '\n';
        } else if (diagram->parsed()) {
            const ReebGraph g = read_graph(input);
            const PersistenceDiagram d = diagram_of(g, cls);
            out << to_json(d).dump() << '\n';
            if (!svg.empty())
                write_text(svg, export_plot(d));
            err << d.points.size() << " points\n";
        } else if (basis->parsed()) {
            const ReebGraph g = read_graph(input);
            json doc = json::array();
            for (const auto& c : thinnest_basis(g).cycles) {
                json item = to_json(c);
                item["low"] = c.low;
                item["high"] = c.high;
                doc.push_back(item);
            }
            out << doc.dump() << '\n';
            err << doc.size() << " basis cycles\n";
        } else if (bottleneck_cmd->parsed()) {
            const json a = read_json(input);
            const json b = read_json(second);
            if (a.contains("points") != b.contains("points"))
                throw SchemaError("compare two diagrams or two graphs");
            PersistenceDiagram da;
            PersistenceDiagram db;
            if (a.contains("points")) {
                da = diagram_from_json(a);
                db = diagram_from_json(b);
                if (cls != "all") {
                    da = da.only(point_class_from_string(cls));
                    db = db.only(point_class_from_string(cls));
                }
            } else if (cls == "all") {
                const auto d = bottleneck_all_classes(reeb_from_json(a), reeb_from_json(b));
                out << distances_json(d).dump() << '\n';
                err << "per-class bottleneck distances\n";
                return ok;
            } else {
                da = diagram_of(reeb_from_json(a), cls);
                db = diagram_of(reeb_from_json(b), cls);
            }
            const auto r = bottleneck(da, db);
            json pairs = json::array();
            for (const auto& p : r.matching.pairs)
                pairs.push_back({{"first", p.first}, {"second", p.second}, {"cost", number_or_inf(p.cost)}});
            out << json{{"value", number_or_inf(r.value)}, {"matching", pairs}}.dump() << '\n';
            err << "bottleneck " << r.value << '\n';
        } else if (distance->parsed()) {
            const ReebGraph f = read_graph(input);
            const ReebGraph g = read_graph(second);
            const SearchLimits limits{budget, max_steps, include_essential0};
            const DistortionReport r = upper_bound_bruteforce(f, g, eps, limits);
            out << report_json(r).dump() << '\n';
            err << "lower " << r.lower << ", upper ";
            if (r.upper)
                err << *r.upper << " (+" << r.slack << ")";
            else
                err << "none";
            err << (r.complete ? "" : ", search incomplete") << '\n';
        } else if (simplify_cmd->parsed()) {
            const ReebGraph g = read_graph(input);
            const SimplifyResult r = simplify(g, delta, until_stable);
            if (verify) {
                const auto rep = verify_simplification(g, r, delta);
                json removed = json::array();
                for (const auto& p : r.removed)
                    removed.push_back(pair_json(p));
                out << json{{"graph", to_json(r.graph)}, {"removed", removed}, {"verification", verification_json(rep)}}
                           .dump()
                    << '\n';
                err << "removed " << r.removed.size() << " pairs; verification " << (rep.ok() ? "ok" : "FAILED")
                    << '\n';
                return rep.ok() ? ok : invariant_violation;
            }
            out << to_json(r.graph).dump() << '\n';
            err << "removed " << r.removed.size() << " pairs in " << r.rounds << " rounds\n";
        } else if (metric->parsed()) {
            const ReebGraph g = read_graph(input);
            std::vector<ReebPoint> sample;
            if (points.empty())
                sample = node_points(g);
            for (const auto& p : points)
                sample.push_back(parse_point(g, p));
            const Eigen::MatrixXd d = all_pairs_df(g, sample);
            out << "point";
            for (const auto& p : sample)
                out << ',' << to_string(g, p);
            out << '\n';
            for (Eigen::Index i = 0; i < d.rows(); ++i) {
                out << to_string(g, sample[static_cast<std::size_t>(i)]);
                for (Eigen::Index j = 0; j < d.cols(); ++j)
                    out << ',' << csv_number(d(i, j));
                out << '\n';
            }
            err << sample.size() << " points\n";
        } else if (gen->parsed()) {
            if (nodes < 1 || cycles < 0)
                throw SchemaError("--nodes must be positive and --cycles non-negative");
            Rng rng(seed);
            const ReebGraph g = random_reeb(rng, nodes, cycles);
            out << to_json(g).dump() << '\n';
            err << "generated " << g.node_count() << " nodes, " << g.arc_count() << " arcs\n";
        }
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << '\n';
        return budget_exceeded;
    } catch (const InvariantViolation& e) {
        err << "internal invariant violated: " << e.what() << '\n';
        return invariant_violation;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return invalid_input;
    }
    return ok;
}

}  // namespace reeb::cli
