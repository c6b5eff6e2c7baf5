#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bolab/errors.hpp"
#include "bolab/extension.hpp"
#include "bolab/limit_study.hpp"
#include "bolab/reports.hpp"
#include "bolab/residual.hpp"
#include "bolab/run_config.hpp"
#include "bolab/snapshot.hpp"

namespace fs = std::filesystem;
using namespace bolab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitBlowup = 2;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void spill(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ValidationError("cannot open '" + path.string() + "' for writing");
    out << text;
    if (!out) throw ValidationError("failed writing '" + path.string() + "'");
}

fs::path prepare_out_dir(const RunConfig& cfg) {
    fs::path dir(cfg.out_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec)
        throw ValidationError("cannot create output directory '" + dir.string() +
                              "': " + ec.message());
    return dir;
}

void print_warnings(const std::vector<std::string>& warnings) {
    for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";
}

int cmd_simulate(const std::string& config_path) {
    const RunConfig cfg = parse_config(slurp(config_path));
    const EquationSpec spec = equation_of(cfg);
    const Field u0 = initial_field(cfg);
    const fs::path dir = prepare_out_dir(cfg);

    const Trajectory traj = run(u0, spec, integrator_of(cfg));
    print_warnings(traj.warnings);

    spill(dir / "diagnostics.csv", diagnostics_csv(traj));
    spill(dir / "manifest.json", manifest_json(cfg));
    for (std::size_t i = 0; i < traj.snapshots.size(); ++i) {
        char name[32];
        std::snprintf(name, sizeof name, "snapshot_%06zu.bofs", i);
        write_snapshot((dir / name).string(), traj.snapshots[i]);
    }

    std::cout << "model " << spec.name() << ": " << traj.snapshots.size()
              << " snapshots -> " << dir.string() << "\n";
    if (traj.blew_up) {
        std::cerr << "run blew up at t = " << traj.blowup_time << "\n";
        return kExitBlowup;
    }
    return kExitOk;
}

int cmd_limits(const std::string& direction, const std::string& config_path) {
    const RunConfig cfg = parse_config(slurp(config_path));
    if (cfg.limit_deltas.empty())
        throw ValidationError("limits runs need the 'limits.deltas' key");
    const Field u0 = initial_field(cfg);
    const fs::path dir = prepare_out_dir(cfg);
    const IntegratorConfig icfg = integrator_of(cfg);

    const LimitStudyReport rep =
        direction == "deep"
            ? deep_water_study(u0, cfg.limit_deltas, cfg.t_final, icfg)
            : shallow_water_study(u0, cfg.limit_deltas, cfg.t_final, icfg);
    print_warnings(rep.warnings);

    spill(dir / "limit_report.json", limit_report_json(rep));

    std::cout << rep.pair << "\n";
    for (std::size_t i = 0; i < rep.deltas.size(); ++i)
        std::cout << "  delta = " << rep.deltas[i] << "  e = " << rep.errors[i] << "\n";
    if (rep.monotone_decreasing)
        std::cout << "  monotone decreasing: " << (*rep.monotone_decreasing ? "yes" : "no")
                  << "\n";
    if (rep.fitted_rate) std::cout << "  fitted rate: " << *rep.fitted_rate << "\n";
    std::cout << "  report -> " << (dir / "limit_report.json").string() << "\n";
    return rep.any_blowup ? kExitBlowup : kExitOk;
}

int cmd_probe(const std::string& config_path) {
    const RunConfig cfg = parse_config(slurp(config_path));
    if (!cfg.probe_kind)
        throw ValidationError("probe runs need the 'probe.kind' key (uc or vanishing)");
    const Field f = initial_field(cfg);
    const fs::path dir = prepare_out_dir(cfg);

    if (*cfg.probe_kind == "uc") {
        UcPartner partner = UcPartner::hilbert();
        if (cfg.probe_partner && *cfg.probe_partner == "ilw_dx")
            partner = UcPartner::ilw_dx(cfg.probe_delta);
        const UCReport rep = uc_probe(f, cfg.probe_a, cfg.probe_b, partner);
        spill(dir / "uc_report.json", uc_report_json(rep));
        std::cout << "uc probe on [" << rep.a << ", " << rep.b << "]: "
                  << (rep.verdict == UcVerdict::ViolationCandidate
                          ? "violation-candidate"
                          : "consistent-with-uniqueness")
                  << " (sup |f| = " << rep.f_sup << ", sup |partner| = " << rep.partner_sup
                  << ")\n";
        std::cout << "report -> " << (dir / "uc_report.json").string() << "\n";
    } else {
        if (cfg.probe_radii.empty())
            throw ValidationError("vanishing probes need the 'probe.radii' key");
        const VanishingOrderReport rep =
            vanishing_order_fit(f, cfg.probe_x0, cfg.probe_radii);
        spill(dir / "vanishing_report.json", vanishing_report_json(rep));
        if (rep.infinite_order)
            std::cout << "vanishing-order fit at x0 = " << rep.x0
                      << ": numerically infinite order\n";
        else
            std::cout << "vanishing-order fit at x0 = " << rep.x0
                      << ": slope = " << rep.slope << " (rms residual " << rep.fit_residual
                      << ")\n";
        std::cout << "report -> " << (dir / "vanishing_report.json").string() << "\n";
    }
    return kExitOk;
}

int cmd_residual(const std::string& snapshot_dir) {
    const fs::path dir(snapshot_dir);
    if (!fs::is_directory(dir))
        throw ValidationError("'" + snapshot_dir + "' is not a directory");

    const RunConfig cfg = config_from_manifest(slurp((dir / "manifest.json").string()));
    const EquationSpec spec = equation_of(cfg);

    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".bofs")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (files.size() < 3)
        throw ValidationError("residual needs at least 3 snapshots in '" + snapshot_dir +
                              "'");

    std::vector<SimState> snaps;
    snaps.reserve(files.size());
    for (const fs::path& p : files) snaps.push_back(read_snapshot(p.string()));
    std::sort(snaps.begin(), snaps.end(),
              [](const SimState& a, const SimState& b) { return a.t < b.t; });

    // A final partial step breaks stride uniformity; drop that one snapshot.
    if (snaps.size() >= 4) {
        const double dt0 = snaps[1].t - snaps[0].t;
        const double dtl = snaps.back().t - snaps[snaps.size() - 2].t;
        if (std::abs(dtl - dt0) > 1e-9 * std::max(1.0, std::abs(dt0))) {
            std::cerr << "note: dropping final snapshot at t = " << snaps.back().t
                      << " (partial step, breaks uniform stride)\n";
            snaps.pop_back();
        }
    }

    const double r = residual(snaps, spec);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", r);
    std::cout << "residual = " << buf << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pseudospectral lab for nonlocal dispersive equations"};
    app.require_subcommand(1);

    std::string config_path, direction, snapshot_dir;

    CLI::App* sim = app.add_subcommand("simulate", "integrate a configured model run");
    sim->add_option("config", config_path, "run configuration file")->required();

    CLI::App* lim =
        app.add_subcommand("limits", "depth-parameter sweep toward a continuum limit");
    lim->add_option("direction", direction, "deep or shallow")
        ->required()
        ->check(CLI::IsMember({"deep", "shallow"}));
    lim->add_option("config", config_path, "run configuration file")->required();

    CLI::App* prb = app.add_subcommand(
        "probe", "unique-continuation or vanishing-order probe of the initial state");
    prb->add_option("config", config_path, "run configuration file")->required();

    CLI::App* res =
        app.add_subcommand("residual", "consistency oracle over stored snapshots");
    res->add_option("snapshot-dir", snapshot_dir, "directory with .bofs snapshots")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitValidation;
    }

    try {
        if (sim->parsed()) return cmd_simulate(config_path);
        if (lim->parsed()) return cmd_limits(direction, config_path);
        if (prb->parsed()) return cmd_probe(config_path);
        if (res->parsed()) return cmd_residual(snapshot_dir);
    } catch (const BlowupError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBlowup;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitValidation;
}
