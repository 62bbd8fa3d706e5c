// asdsim: inhomogeneous node-deployment simulator.
//
// Subcommands: sample-ring, deploy-controlled, deploy-auto, density,
// report, plot. Each run is a pure function of its flags (a fixed default
// seed stands in when --seed is omitted) and writes a .manifest.json next
// to every output, so outputs are reproducible byte for byte.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "asd/controlled.hpp"
#include "asd/density.hpp"
#include "asd/errors.hpp"
#include "asd/io.hpp"
#include "asd/plan.hpp"
#include "asd/uncontrolled.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr std::uint64_t kDefaultSeed = 1;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitIo = 3;
constexpr int kExitInternal = 4;

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now()
                                             - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

// Fill options the user did not pass from a JSON config object, so the
// precedence is: command line > config file > built-in default.
template <typename T>
void merge_config(CLI::App* cmd, const std::string& flag, T& value,
                  const json& cfg) {
    const std::string key = flag.substr(2); // strip leading "--"
    if (cmd->count(flag) == 0 && cfg.contains(key))
        value = cfg.at(key).get<T>();
}

json load_config(CLI::App* cmd, const std::string& config_path) {
    if (cmd->count("--config") == 0) return json::object();
    json cfg;
    try {
        cfg = json::parse(asd::read_text(config_path));
    } catch (const json::parse_error& e) {
        throw asd::ParseError(config_path + ": " + e.what());
    }
    if (!cfg.is_object())
        throw asd::ParseError(config_path + ": config must be a JSON object");
    return cfg;
}

void emit_manifest(const std::string& command, const json& config,
                   std::uint64_t seed, const std::vector<std::string>& inputs,
                   const std::vector<std::string>& outputs, double wall_s) {
    asd::RunManifest m;
    m.command = command;
    m.config_json = config.dump();
    m.seed = seed;
    m.inputs = inputs;
    m.outputs = outputs;
    m.wall_time_s = wall_s;
    for (const auto& out : outputs)
        asd::write_manifest(out + ".manifest.json", m);
}

json report_to_json(const asd::DensityReport& r) {
    json j;
    j["analytical"] = r.analytical ? json(*r.analytical) : json(nullptr);
    j["empirical"] = r.empirical;
    j["n_xy"] = r.nonzero_bins;
    j["error_pct"] = r.error_pct ? json(*r.error_pct) : json(nullptr);
    j["out_of_bounds"] = r.out_of_bounds;
    return j;
}

// ---------------------------------------------------------------- sample-ring

struct SampleRingArgs {
    double l1 = 0.0, l2 = 1.0, a1 = 0.0, a2 = asd::kTwoPi;
    std::uint64_t n = 1;
    std::uint64_t seed = kDefaultSeed;
    std::string out;
    std::string config;
};

int run_sample_ring(CLI::App* cmd, SampleRingArgs& a) {
    Stopwatch clock;
    const json cfg = load_config(cmd, a.config);
    merge_config(cmd, "--l1", a.l1, cfg);
    merge_config(cmd, "--l2", a.l2, cfg);
    merge_config(cmd, "--a1", a.a1, cfg);
    merge_config(cmd, "--a2", a.a2, cfg);
    merge_config(cmd, "--n", a.n, cfg);
    merge_config(cmd, "--seed", a.seed, cfg);
    merge_config(cmd, "--out", a.out, cfg);

    if (a.n < 1) throw asd::ValidationError("--n must be at least 1");
    const asd::RingSector sector = asd::make_sector(a.l1, a.l2, a.a1, a.a2);

    asd::Deployment d;
    d.seed = a.seed;
    char meta[128];
    std::snprintf(meta, sizeof(meta), "ring:l1=%.17g,l2=%.17g,a1=%.17g,a2=%.17g",
                  sector.inner_radius, sector.outer_radius, sector.angle_lo,
                  sector.angle_hi);
    d.meta = meta;
    asd::SeededRng rng(a.seed);
    d.points.reserve(a.n);
    d.tags.assign(a.n, asd::SectorTag{0, 0});
    for (std::uint64_t i = 0; i < a.n; ++i)
        d.points.push_back(asd::sample_point(sector, rng));

    asd::write_points_csv(a.out, d);

    json resolved{{"l1", sector.inner_radius}, {"l2", sector.outer_radius},
                  {"a1", sector.angle_lo},     {"a2", sector.angle_hi},
                  {"n", a.n},                  {"seed", a.seed},
                  {"out", a.out}};
    emit_manifest("sample-ring", resolved, a.seed, {}, {a.out}, clock.seconds());
    std::printf("wrote %llu points to %s\n",
                static_cast<unsigned long long>(a.n), a.out.c_str());
    return kExitOk;
}

// ---------------------------------------------------------- deploy-controlled

struct DeployControlledArgs {
    std::string plan_path;
    std::uint64_t seed = kDefaultSeed;
    std::string out;
    std::string summary;
    std::string config;
};

int run_deploy_controlled(CLI::App* cmd, DeployControlledArgs& a) {
    Stopwatch clock;
    const json cfg = load_config(cmd, a.config);
    merge_config(cmd, "--plan", a.plan_path, cfg);
    merge_config(cmd, "--seed", a.seed, cfg);
    merge_config(cmd, "--out", a.out, cfg);
    merge_config(cmd, "--summary", a.summary, cfg);

    const asd::NetworkPlan plan = asd::load_plan(asd::read_text(a.plan_path));
    const asd::Deployment d = asd::deploy_controlled(plan, a.seed);
    asd::write_points_csv(a.out, d);

    std::vector<std::string> outputs{a.out};
    const auto sectors = asd::to_sectors(plan);
    json summary;
    summary["total_nodes"] = plan.total_nodes();
    summary["total_sectors"] = plan.total_sectors();
    summary["plan_fingerprint"] = d.meta;
    summary["sectors"] = json::array();
    for (const auto& ps : sectors) {
        const double area = asd::sector_area(ps.sector);
        summary["sectors"].push_back(
            {{"layer", ps.layer},
             {"sector", ps.slot},
             {"inner_radius", ps.sector.inner_radius},
             {"outer_radius", ps.sector.outer_radius},
             {"angle_lo", ps.sector.angle_lo},
             {"angle_hi", ps.sector.angle_hi},
             {"count", ps.count},
             {"area", area},
             {"density", static_cast<double>(ps.count) / area}});
    }
    if (!a.summary.empty()) {
        asd::write_text_atomic(a.summary, summary.dump(2) + "\n");
        outputs.push_back(a.summary);
    }

    json resolved{{"plan", a.plan_path},
                  {"seed", a.seed},
                  {"out", a.out},
                  {"summary", a.summary}};
    emit_manifest("deploy-controlled", resolved, a.seed, {a.plan_path}, outputs,
                  clock.seconds());
    std::printf("deployed %llu nodes over %zu sectors to %s\n",
                static_cast<unsigned long long>(plan.total_nodes()),
                plan.total_sectors(), a.out.c_str());
    return kExitOk;
}

// ---------------------------------------------------------------- deploy-auto

struct DeployAutoArgs {
    double radius = 1.0;
    std::uint32_t max_layers = 2;
    std::uint64_t n = 1;
    std::uint64_t seed = kDefaultSeed;
    std::string out;
    std::string summary;
    std::string config;
};

int run_deploy_auto(CLI::App* cmd, DeployAutoArgs& a) {
    Stopwatch clock;
    const json cfg = load_config(cmd, a.config);
    merge_config(cmd, "--radius", a.radius, cfg);
    merge_config(cmd, "--max-layers", a.max_layers, cfg);
    merge_config(cmd, "--n", a.n, cfg);
    merge_config(cmd, "--seed", a.seed, cfg);
    merge_config(cmd, "--out", a.out, cfg);
    merge_config(cmd, "--summary", a.summary, cfg);

    const asd::AutoConfig auto_cfg{a.radius, a.max_layers, a.n};
    for (const auto& w : asd::validate(auto_cfg).warnings)
        std::fprintf(stderr, "warning: %s\n", w.c_str());
    const asd::AutoRealization r = asd::deploy_auto(auto_cfg, a.seed);
    asd::write_points_csv(a.out, r.deployment);

    json summary;
    summary["n_layers"] = r.layer_count;
    summary["layer_radii"] = r.layer_radii;
    summary["n_in"] = r.split.inner;
    summary["n_out"] = r.split.outer;
    summary["total_nodes"] = a.n;
    std::vector<std::string> outputs{a.out};
    if (!a.summary.empty()) {
        asd::write_text_atomic(a.summary, summary.dump(2) + "\n");
        outputs.push_back(a.summary);
    }

    json resolved{{"radius", a.radius},   {"max-layers", a.max_layers},
                  {"n", a.n},             {"seed", a.seed},
                  {"out", a.out},         {"summary", a.summary}};
    emit_manifest("deploy-auto", resolved, a.seed, {}, outputs, clock.seconds());
    std::printf("deployed %llu nodes over %u layers to %s\n",
                static_cast<unsigned long long>(a.n), r.layer_count,
                a.out.c_str());
    return kExitOk;
}

// -------------------------------------------------------------------- density

struct DensityArgs {
    std::string points_path;
    std::size_t bins = 500;
    std::vector<double> bounds; // xlo xhi ylo yhi
    double l1 = 0.0, l2 = 1.0, a1 = 0.0, a2 = asd::kTwoPi;
    std::string grid_out;
    std::string report_out;
    std::string config;
};

int run_density(CLI::App* cmd, DensityArgs& a) {
    Stopwatch clock;
    const json cfg = load_config(cmd, a.config);
    merge_config(cmd, "--points", a.points_path, cfg);
    merge_config(cmd, "--bins", a.bins, cfg);
    merge_config(cmd, "--bounds", a.bounds, cfg);
    merge_config(cmd, "--l1", a.l1, cfg);
    merge_config(cmd, "--l2", a.l2, cfg);
    merge_config(cmd, "--a1", a.a1, cfg);
    merge_config(cmd, "--a2", a.a2, cfg);
    merge_config(cmd, "--grid-out", a.grid_out, cfg);
    merge_config(cmd, "--report-out", a.report_out, cfg);

    const asd::PointsFile pf = asd::read_points_csv(a.points_path);
    if (pf.points.empty())
        throw asd::ValidationError(a.points_path + ": no points to bin");

    const bool have_sector = cmd->count("--l2") > 0 || cfg.contains("l2");
    std::optional<asd::RingSector> sector;
    if (have_sector)
        sector = asd::make_sector(a.l1, a.l2, a.a1, a.a2);

    asd::BoundingBox bounds;
    if (!a.bounds.empty()) {
        if (a.bounds.size() != 4)
            throw asd::ValidationError("--bounds needs xlo xhi ylo yhi");
        bounds = {a.bounds[0], a.bounds[1], a.bounds[2], a.bounds[3]};
    } else if (sector) {
        const double l2 = sector->outer_radius;
        bounds = {-l2, l2, -l2, l2};
    } else {
        // Tight bounding square of the data, symmetric about the origin.
        double m = 0.0;
        for (const auto& p : pf.points)
            m = std::max({m, std::abs(p.x), std::abs(p.y)});
        if (m == 0.0) m = 1.0;
        bounds = {-m, m, -m, m};
    }

    const asd::PdfGrid grid =
        asd::asd_pdf_estimate(pf.points, bounds, a.bins, a.bins);

    asd::DensityReport report;
    asd::HistogramGrid hist;
    hist.bounds = grid.bounds;
    hist.nx = grid.nx;
    hist.ny = grid.ny;
    hist.counts = grid.counts;
    hist.out_of_bounds = grid.total - grid.binned;
    const asd::EmpiricalMean em = asd::empirical_mean_density(hist);
    report.empirical = em.mean;
    report.nonzero_bins = em.nonzero_bins;
    report.out_of_bounds = hist.out_of_bounds;
    if (sector) {
        report.analytical =
            asd::analytical_mean_density(*sector, pf.points.size(), a.bins);
        report.error_pct = asd::density_error_pct(*report.analytical,
                                                  report.empirical);
    }

    std::vector<std::string> outputs;
    if (!a.grid_out.empty()) {
        asd::write_grid_csv(a.grid_out, grid);
        outputs.push_back(a.grid_out);
    }
    const json jr = report_to_json(report);
    if (!a.report_out.empty()) {
        asd::write_text_atomic(a.report_out, jr.dump(2) + "\n");
        outputs.push_back(a.report_out);
    }

    json resolved{{"points", a.points_path},
                  {"bins", a.bins},
                  {"bounds", json::array({bounds.x_lo, bounds.x_hi,
                                          bounds.y_lo, bounds.y_hi})},
                  {"grid-out", a.grid_out},
                  {"report-out", a.report_out}};
    if (sector) {
        resolved["l1"] = sector->inner_radius;
        resolved["l2"] = sector->outer_radius;
        resolved["a1"] = sector->angle_lo;
        resolved["a2"] = sector->angle_hi;
    }
    emit_manifest("density", resolved, 0, {a.points_path}, outputs,
                  clock.seconds());
    std::printf("%s\n", jr.dump(2).c_str());
    return kExitOk;
}

// --------------------------------------------------------------------- report

struct ReportArgs {
    std::uint64_t samples = 1000000;
    std::size_t bins = 500;
    std::uint64_t seed = kDefaultSeed;
    bool recorded_scale = false;
    std::string out;
    std::string config;
};

int run_report(CLI::App* cmd, ReportArgs& a) {
    Stopwatch clock;
    const json cfg = load_config(cmd, a.config);
    merge_config(cmd, "--samples", a.samples, cfg);
    merge_config(cmd, "--bins", a.bins, cfg);
    merge_config(cmd, "--seed", a.seed, cfg);
    merge_config(cmd, "--recorded-scale", a.recorded_scale, cfg);
    merge_config(cmd, "--out", a.out, cfg);

    std::printf("%-24s %10s %10s %12s %12s %8s\n", "case", "area", "n_s",
                "analytical", "empirical", "err_pct");
    json rows = json::array();
    const asd::SeededRng base(a.seed);
    std::uint64_t case_index = 0;
    for (const auto& rc : asd::density_reference_cases()) {
        const std::uint64_t n = a.recorded_scale ? rc.samples : a.samples;
        asd::SeededRng rng = base.substream(case_index++);
        std::vector<asd::Point2D> pts;
        pts.reserve(n);
        for (std::uint64_t i = 0; i < n; ++i)
            pts.push_back(asd::sample_point(rc.sector, rng));

        const double l2 = rc.sector.outer_radius;
        const asd::HistogramGrid grid = asd::build_histogram(
            pts, asd::BoundingBox{-l2, l2, -l2, l2}, a.bins, a.bins);
        const double analytical =
            asd::analytical_mean_density(rc.sector, n, a.bins);
        const asd::EmpiricalMean em = asd::empirical_mean_density(grid);
        const double err = asd::density_error_pct(analytical, em.mean);

        std::printf("%-24s %10.4f %10llu %12.4f %12.4f %8.2f\n", rc.name,
                    asd::sector_area(rc.sector),
                    static_cast<unsigned long long>(n), analytical, em.mean,
                    err);
        rows.push_back({{"case", rc.name},
                        {"area", asd::sector_area(rc.sector)},
                        {"samples", n},
                        {"analytical", analytical},
                        {"empirical", em.mean},
                        {"n_xy", em.nonzero_bins},
                        {"error_pct", err}});
    }

    if (!a.out.empty()) {
        asd::write_text_atomic(a.out, rows.dump(2) + "\n");
        json resolved{{"samples", a.samples},
                      {"bins", a.bins},
                      {"seed", a.seed},
                      {"recorded-scale", a.recorded_scale},
                      {"out", a.out}};
        emit_manifest("report", resolved, a.seed, {}, {a.out}, clock.seconds());
    }
    return kExitOk;
}

// ----------------------------------------------------------------------- plot

struct PlotArgs {
    std::string in_path;
    std::string out;
    std::string config;
};

int run_plot(CLI::App* cmd, PlotArgs& a) {
    Stopwatch clock;
    const json cfg = load_config(cmd, a.config);
    merge_config(cmd, "--in", a.in_path, cfg);
    merge_config(cmd, "--out", a.out, cfg);

    const std::string schema = asd::csv_schema(a.in_path);
    const std::string png = fs::path(a.out).stem().string() + ".png";
    std::string script;
    script += "# gnuplot script generated by asdsim\n";
    script += "set datafile separator \",\"\n";
    script += "set terminal pngcairo size 900,900\n";
    script += "set output '" + png + "'\n";
    script += "set size ratio -1\n";
    if (schema == "points") {
        script += "plot '" + a.in_path
                + "' skip 1 using 1:2 with dots lc rgb 'navy' notitle\n";
    } else {
        script += "set view map\n";
        script += "plot '" + a.in_path
                + "' skip 1 using 3:4:6 with image notitle\n";
    }
    asd::write_text_atomic(a.out, script);

    json resolved{{"in", a.in_path}, {"out", a.out}, {"schema", schema}};
    emit_manifest("plot", resolved, 0, {a.in_path}, {a.out}, clock.seconds());
    std::printf("wrote %s script to %s (run: gnuplot %s)\n", schema.c_str(),
                a.out.c_str(), a.out.c_str());
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Random spatial deployment simulator for cellular lattices"};
    app.require_subcommand(1);

    SampleRingArgs ring;
    auto* c_ring = app.add_subcommand(
        "sample-ring", "Uniform random points on one ring sector");
    c_ring->add_option("--l1", ring.l1, "inner radius");
    c_ring->add_option("--l2", ring.l2, "outer radius");
    c_ring->add_option("--a1", ring.a1, "lower angle (rad)");
    c_ring->add_option("--a2", ring.a2, "upper angle (rad)");
    c_ring->add_option("--n", ring.n, "number of points");
    c_ring->add_option("--seed", ring.seed, "rng seed");
    c_ring->add_option("--out", ring.out, "points CSV path")->required();
    c_ring->add_option("--config", ring.config, "JSON config file");

    DeployControlledArgs ctl;
    auto* c_ctl = app.add_subcommand(
        "deploy-controlled", "Deploy nodes from a network plan file");
    c_ctl->add_option("--plan", ctl.plan_path, "plan JSON path")->required();
    c_ctl->add_option("--seed", ctl.seed, "rng seed");
    c_ctl->add_option("--out", ctl.out, "points CSV path")->required();
    c_ctl->add_option("--summary", ctl.summary, "per-sector summary JSON path");
    c_ctl->add_option("--config", ctl.config, "JSON config file");

    DeployAutoArgs aut;
    auto* c_aut = app.add_subcommand(
        "deploy-auto", "Automatic deployment from three scalars");
    c_aut->add_option("--radius", aut.radius, "cell radius");
    c_aut->add_option("--max-layers", aut.max_layers, "layer-count ceiling");
    c_aut->add_option("--n", aut.n, "total nodes");
    c_aut->add_option("--seed", aut.seed, "rng seed");
    c_aut->add_option("--out", aut.out, "points CSV path")->required();
    c_aut->add_option("--summary", aut.summary, "realization summary JSON path");
    c_aut->add_option("--config", aut.config, "JSON config file");

    DensityArgs den;
    auto* c_den = app.add_subcommand(
        "density", "Bivariate histogram density of a points file");
    c_den->add_option("--points", den.points_path, "points CSV path")->required();
    c_den->add_option("--bins", den.bins, "bins per axis");
    c_den->add_option("--bounds", den.bounds, "xlo xhi ylo yhi")->expected(4);
    c_den->add_option("--l1", den.l1, "reference sector inner radius");
    c_den->add_option("--l2", den.l2, "reference sector outer radius");
    c_den->add_option("--a1", den.a1, "reference sector lower angle");
    c_den->add_option("--a2", den.a2, "reference sector upper angle");
    c_den->add_option("--grid-out", den.grid_out, "grid CSV path");
    c_den->add_option("--report-out", den.report_out, "report JSON path");
    c_den->add_option("--config", den.config, "JSON config file");

    ReportArgs rep;
    auto* c_rep = app.add_subcommand(
        "report", "Density-estimation harness over the stock footprints");
    c_rep->add_option("--samples", rep.samples, "samples per case");
    c_rep->add_option("--bins", rep.bins, "bins per axis");
    c_rep->add_option("--seed", rep.seed, "rng seed");
    c_rep->add_flag("--recorded-scale", rep.recorded_scale,
                    "use each case's recorded sample count");
    c_rep->add_option("--out", rep.out, "rows JSON path");
    c_rep->add_option("--config", rep.config, "JSON config file");

    PlotArgs plot;
    auto* c_plot = app.add_subcommand(
        "plot", "Emit a gnuplot script for a points or grid CSV");
    c_plot->add_option("--in", plot.in_path, "points or grid CSV")->required();
    c_plot->add_option("--out", plot.out, "script path")->required();
    c_plot->add_option("--config", plot.config, "JSON config file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitValidation;
    }

    try {
        if (*c_ring) return run_sample_ring(c_ring, ring);
        if (*c_ctl) return run_deploy_controlled(c_ctl, ctl);
        if (*c_aut) return run_deploy_auto(c_aut, aut);
        if (*c_den) return run_density(c_den, den);
        if (*c_rep) return run_report(c_rep, rep);
        if (*c_plot) return run_plot(c_plot, plot);
    } catch (const asd::ValidationError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitValidation;
    } catch (const asd::IoError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitIo;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return kExitInternal;
    }
    return kExitInternal;
}
