// Command-line front end: expressions in, certificates and tables out.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "homeo/compact.hpp"
#include "homeo/errors.hpp"
#include "homeo/fixed_point.hpp"
#include "homeo/genericity.hpp"
#include "homeo/map.hpp"
#include "homeo/metric.hpp"
#include "homeo/parse.hpp"
#include "homeo/support.hpp"

using json = nlohmann::ordered_json;
using namespace homeo;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInconclusiveStrict = 2;

void emit_error(const std::string& kind, const std::string& message,
                std::optional<std::size_t> offset = std::nullopt) {
    std::cerr << "error kind=" << kind;
    if (offset) std::cerr << " offset=" << *offset;
    std::cerr << " message=\"" << message << "\"\n";
}

std::vector<double> parse_fields(const std::string& text, std::size_t count,
                                 const std::string& what) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (out.size() < count) {
        std::size_t used = 0;
        try {
            out.push_back(std::stod(text.substr(pos), &used));
        } catch (const std::exception&) {
            throw DomainError(what + ": expected " + std::to_string(count) +
                              " comma-separated numbers");
        }
        pos += used;
        if (out.size() < count) {
            if (pos >= text.size() || text[pos] != ',') {
                throw DomainError(what + ": expected " + std::to_string(count) +
                                  " comma-separated numbers");
            }
            ++pos;
        }
    }
    if (pos != text.size()) throw DomainError(what + ": trailing content");
    return out;
}

Disk parse_disk(const std::string& text) {
    const auto f = parse_fields(text, 3, "--disk");
    Disk disk{Complex{f[0], f[1]}, f[2], true};
    validate(disk);
    return disk;
}

Cell2 parse_cell(const std::string& text, const Homeo& chart) {
    const auto f = parse_fields(text, 4, "--cell");
    return make_cell(chart, Complex{f[0], f[1]}, f[2], f[3]);
}

void apply_grid_flag(MetricConfig& cfg, const std::string& text) {
    const auto x = text.find('x');
    if (x == std::string::npos) throw DomainError("--grid: expected RADIALxANGULAR, e.g. 256x256");
    try {
        cfg.radial_samples = std::stoi(text.substr(0, x));
        cfg.angular_samples = std::stoi(text.substr(x + 1));
    } catch (const std::exception&) {
        throw DomainError("--grid: expected RADIALxANGULAR, e.g. 256x256");
    }
}

json complex_json(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json disk_json(const Disk& d) {
    return json{{"center", complex_json(d.center)}, {"radius", d.radius}};
}

void print_json(const json& doc) { std::cout << doc.dump(2) << "\n"; }

// ---- converge family registry ----

struct FamilyPair {
    HomeoSequence outer;
    HomeoSequence inner; // unused in image mode
};

HomeoSequence family_tau() {
    return HomeoSequence{"tau",
                         [](int n) { return Homeo::translation(Complex{1.0 / n, 0.0}); },
                         Homeo::identity()};
}

HomeoSequence family_tau_scale() {
    return HomeoSequence{"tau-scale",
                         [](int n) {
                             return compose(Homeo::translation(Complex{1.0 / n, 0.0}),
                                            Homeo::scaling(2.0));
                         },
                         Homeo::scaling(2.0)};
}

HomeoSequence image_family(const std::string& name) {
    if (name == "tau") return family_tau();
    if (name == "tau-scale") return family_tau_scale();
    if (name == "constant") {
        return HomeoSequence{"constant", [](int) { return Homeo::scaling(2.0); },
                             Homeo::scaling(2.0)};
    }
    throw DomainError("unknown family \"" + name + "\" (expected tau, tau-scale, constant)");
}

FamilyPair composition_family(const std::string& name) {
    if (name == "tau-pair") {
        return FamilyPair{
            family_tau(),
            HomeoSequence{"tau-i",
                          [](int n) { return Homeo::translation(Complex{0.0, 1.0 / n}); },
                          Homeo::identity()}};
    }
    if (name == "scale-rot") {
        return FamilyPair{family_tau_scale(),
                          HomeoSequence{"rot", [](int n) { return Homeo::rotation(1.0 / n); },
                                        Homeo::identity()}};
    }
    if (name == "constant") {
        return FamilyPair{
            HomeoSequence{"constant", [](int) { return Homeo::scaling(2.0); },
                          Homeo::scaling(2.0)},
            HomeoSequence{"constant", [](int) { return Homeo::rotation(1.0); },
                          Homeo::rotation(1.0)}};
    }
    throw DomainError("unknown family \"" + name +
                      "\" (expected tau-pair, scale-rot, constant)");
}

// ---- subcommand bodies ----

int run_dist(const std::string& f_text, const std::string& g_text, const MetricConfig& cfg) {
    const Homeo f = parse_expr(f_text);
    const Homeo g = parse_expr(g_text);
    const double d = dist(f, g, cfg);
    std::cout << "distance " << format_double(d) << "\n";
    std::cout << "truncation_bound " << format_double(2.0 * truncation_error_bound(cfg)) << "\n";
    std::cout << "mode " << (cfg.rigorous ? "rigorous-upper-bound" : "grid-estimate") << "\n";
    return kExitOk;
}

int run_certify(const std::string& f_text, const std::string& disk_text, double spacing,
                bool strict) {
    const Homeo f = parse_expr(f_text);
    const Disk region = parse_disk(disk_text);
    const Certificate cert = certify_fixed_point_free(f, region, spacing);

    json doc;
    doc["command"] = "certify";
    doc["map"] = print_expr(f);
    doc["region"] = disk_json(region);
    doc["spacing"] = spacing;
    bool inconclusive = false;
    if (const auto* free = std::get_if<FixedPointFree>(&cert.verdict)) {
        doc["verdict"] = "fixed_point_free";
        doc["margin"] = free->margin;
    } else {
        inconclusive = true;
        doc["verdict"] = "inconclusive";
        doc["reason"] = std::get<Inconclusive>(cert.verdict).reason;
    }
    if (cert.witness) doc["witness"] = complex_json(*cert.witness);
    print_json(doc);
    if (inconclusive && strict) {
        emit_error("inconclusive", "certificate is inconclusive under --strict");
        return kExitInconclusiveStrict;
    }
    return kExitOk;
}

int run_winding(const std::string& f_text, const std::string& disk_text, int steps, bool strict) {
    const Homeo f = parse_expr(f_text);
    const Disk disk = parse_disk(disk_text);

    json doc;
    doc["command"] = "winding";
    doc["map"] = print_expr(f);
    doc["disk"] = disk_json(disk);
    try {
        const WindingResult w = winding_certificate(f, disk, steps);
        doc["index"] = w.index;
        doc["min_boundary_displacement"] = w.min_boundary_displacement;
        doc["refinements"] = w.refinements;
        doc["steps"] = w.steps;
        doc["verdict"] = w.index != 0 ? "fixed_point_exists" : "no_conclusion";
    } catch (const InconclusiveError& e) {
        doc["verdict"] = "inconclusive";
        doc["reason"] = e.what();
        print_json(doc);
        if (strict) {
            emit_error("inconclusive", e.what());
            return kExitInconclusiveStrict;
        }
        return kExitOk;
    }
    print_json(doc);
    return kExitOk;
}

int run_perturb(const std::string& f_text, double eps, const std::string& grid_path,
                const MetricConfig& cfg) {
    const Homeo f = parse_expr(f_text);
    const CompactSet grid = read_cloud_file(grid_path);
    const PerturbationReport report = avoid_fixed_points_on_grid(f, grid, eps, cfg);

    json doc;
    doc["command"] = "perturb";
    doc["map"] = print_expr(f);
    doc["epsilon"] = eps;
    doc["grid_points"] = report.grid.points.size();
    doc["translation"] = complex_json(report.translation);
    doc["dist_achieved"] = report.dist_achieved;
    doc["grid_min_displacement"] = report.grid_min_displacement;
    doc["perturbed"] = print_expr(report.perturbed);
    print_json(doc);
    return kExitOk;
}

int run_escape(const std::string& f_text, const std::string& chart_text,
               const std::string& cell_text, double eps, const MetricConfig& cfg) {
    const Homeo f = parse_expr(f_text);
    const Homeo chart = parse_expr(chart_text);
    const Cell2 cell = parse_cell(cell_text, chart);
    const EscapeReport report = nowhere_dense_escape(f, cell, eps, cfg);

    json doc;
    doc["command"] = "escape";
    doc["map"] = print_expr(f);
    doc["chart"] = print_expr(chart);
    doc["cell"] = json{{"center", complex_json(cell.center)}, {"rho", cell.rho},
                       {"eta", cell.eta}};
    doc["epsilon"] = eps;
    doc["delta"] = report.delta;
    doc["dist_to_original"] = report.dist_to_original;
    doc["witness"] = complex_json(report.escape_witness);
    doc["witness_motion"] = report.witness_motion;
    doc["composite"] = print_expr(report.composite);
    print_json(doc);
    return kExitOk;
}

int run_converge(const std::string& mode, const std::string& family, int nmax,
                 const std::string& out_path, const std::string& grid_path,
                 const MetricConfig& cfg) {
    std::ofstream out(out_path);
    if (!out) throw Error("cannot open output file: " + out_path);

    if (mode == "lemma3") {
        const HomeoSequence fam = image_family(family);
        const CompactSet k =
            grid_path.empty() ? circle_net(Complex{0.0, 0.0}, 1.0, 360) : read_cloud_file(grid_path);
        out << "n,map_distance,image_hausdorff\n";
        for (const auto& row : image_convergence_table(fam, k, nmax, cfg)) {
            out << row.index << ',' << format_double(row.map_distance) << ','
                << format_double(row.image_distance) << '\n';
        }
    } else if (mode == "lemma4") {
        const FamilyPair pair = composition_family(family);
        out << "n,outer_distance,inner_distance,composite_distance\n";
        for (const auto& row : composition_convergence_table(pair.outer, pair.inner, nmax, cfg)) {
            out << row.index << ',' << format_double(row.outer_distance) << ','
                << format_double(row.inner_distance) << ','
                << format_double(row.composite_distance) << '\n';
        }
    } else {
        throw DomainError("converge mode must be lemma3 or lemma4");
    }
    std::cout << "rows " << nmax << "\n";
    std::cout << "output " << out_path << "\n";
    return kExitOk;
}

int run_support(const std::string& f_text, const std::string& disk_text, double tol,
                double resolution, const std::string& out_path) {
    const Homeo f = parse_expr(f_text);
    const Disk region = parse_disk(disk_text);
    const auto sample = support_sample(f, region, tol, resolution);

    std::ofstream out(out_path);
    if (!out) throw Error("cannot open output file: " + out_path);
    if (sample) write_cloud(out, *sample);
    std::cout << "support_points " << (sample ? sample->points.size() : 0) << "\n";
    std::cout << "empty_support " << (sample ? "false" : "true") << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"plane homeomorphism toolkit: metrics, certificates, experiments"};
    app.require_subcommand(1);

    std::string f_text, g_text, disk_text, cell_text, grid_file, out_path, family, chart_text;
    std::string mode, grid_flag;
    double eps = 1e-3, spacing = 0.1, tol = 1e-9, resolution = 0.1;
    int nmax = 20, steps = 64;
    bool rigorous = false, strict = false;
    MetricConfig cfg;

    auto add_metric_flags = [&](CLI::App* cmd) {
        cmd->add_option("--N", cfg.truncation, "series truncation depth")->capture_default_str();
        cmd->add_option("--grid", grid_flag, "polar sampling as RADIALxANGULAR (default 256x256)");
    };

    CLI::App* dist_cmd = app.add_subcommand("dist", "metric distance between two maps");
    dist_cmd->add_option("-f", f_text, "first map expression")->required();
    dist_cmd->add_option("-g", g_text, "second map expression")->required();
    add_metric_flags(dist_cmd);
    dist_cmd->add_flag("--rigorous", rigorous, "certified upper bound instead of grid estimate");

    CLI::App* certify_cmd =
        app.add_subcommand("certify", "certify a region free of fixed points");
    certify_cmd->add_option("-f", f_text, "map expression")->required();
    certify_cmd->add_option("--disk", disk_text, "region as cx,cy,r")->default_val("0,0,10");
    certify_cmd->add_option("--spacing", spacing, "grid covering radius")->capture_default_str();
    certify_cmd->add_flag("--strict", strict, "exit 2 when inconclusive");

    CLI::App* winding_cmd = app.add_subcommand("winding", "boundary winding number of h(z)-z");
    winding_cmd->add_option("-f", f_text, "map expression")->required();
    winding_cmd->add_option("--disk", disk_text, "disk as cx,cy,r")->required();
    winding_cmd->add_option("--steps", steps, "initial boundary samples")->capture_default_str();
    winding_cmd->add_flag("--strict", strict, "exit 2 when inconclusive");

    CLI::App* perturb_cmd =
        app.add_subcommand("perturb", "translate a map off all grid fixed points");
    perturb_cmd->add_option("-f", f_text, "map expression")->required();
    perturb_cmd->add_option("--eps", eps, "metric closeness to the original")->required();
    perturb_cmd->add_option("--grid-file", grid_file, "cloud file of grid points")->required();
    add_metric_flags(perturb_cmd);

    CLI::App* escape_cmd =
        app.add_subcommand("escape", "escape the maps supported inside a cell");
    escape_cmd->add_option("-f", f_text, "map expression")->required();
    escape_cmd->add_option("--cell", cell_text, "cell as ax,ay,rho,eta")->required();
    escape_cmd->add_option("--eps", eps, "metric closeness to the original")->required();
    escape_cmd->add_option("--chart", chart_text, "chart expression (default id)")
        ->default_val("id");
    add_metric_flags(escape_cmd);

    CLI::App* converge_cmd = app.add_subcommand("converge", "convergence experiment tables");
    converge_cmd->add_option("mode", mode, "lemma3 (images) or lemma4 (composition)")->required();
    converge_cmd->add_option("--family", family, "named map family")->required();
    converge_cmd->add_option("--nmax", nmax, "sequence length")->capture_default_str();
    converge_cmd->add_option("--out", out_path, "CSV output path")->required();
    converge_cmd->add_option("--grid-file", grid_file,
                             "cloud file for the compact (lemma3; default 360-point unit circle)");
    add_metric_flags(converge_cmd);

    CLI::App* support_cmd = app.add_subcommand("support", "sample the support of a map");
    support_cmd->add_option("-f", f_text, "map expression")->required();
    support_cmd->add_option("--disk", disk_text, "region as cx,cy,r")->required();
    support_cmd->add_option("--tol", tol, "displacement threshold")->capture_default_str();
    support_cmd->add_option("--resolution", resolution, "lattice pitch")->capture_default_str();
    support_cmd->add_option("--out", out_path, "cloud output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        emit_error("usage", e.what());
        return kExitError;
    }

    try {
        if (!grid_flag.empty()) apply_grid_flag(cfg, grid_flag);
        cfg.rigorous = rigorous;
        validate(cfg);

        if (dist_cmd->parsed()) return run_dist(f_text, g_text, cfg);
        if (certify_cmd->parsed()) return run_certify(f_text, disk_text, spacing, strict);
        if (winding_cmd->parsed()) return run_winding(f_text, disk_text, steps, strict);
        if (perturb_cmd->parsed()) return run_perturb(f_text, eps, grid_file, cfg);
        if (escape_cmd->parsed()) return run_escape(f_text, chart_text, cell_text, eps, cfg);
        if (converge_cmd->parsed())
            return run_converge(mode, family, nmax, out_path, grid_file, cfg);
        if (support_cmd->parsed()) return run_support(f_text, disk_text, tol, resolution, out_path);
        emit_error("usage", "no subcommand given");
        return kExitError;
    } catch (const ParseError& e) {
        emit_error("parse", e.what(), e.offset());
        return kExitError;
    } catch (const DomainError& e) {
        emit_error("domain", e.what());
        return kExitError;
    } catch (const NoBoundError& e) {
        emit_error("nobound", e.what());
        return kExitError;
    } catch (const EvalError& e) {
        emit_error("eval", e.what());
        return kExitError;
    } catch (const InconclusiveError& e) {
        emit_error("inconclusive", e.what());
        return strict ? kExitInconclusiveStrict : kExitError;
    } catch (const Error& e) {
        emit_error("error", e.what());
        return kExitError;
    } catch (const std::exception& e) {
        emit_error("internal", e.what());
        return kExitError;
    }
}
