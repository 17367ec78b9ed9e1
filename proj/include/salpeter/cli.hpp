#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <iostream>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "salpeter/config.hpp"
#include "salpeter/densities.hpp"
#include "salpeter/dispersion.hpp"
#include "salpeter/grid.hpp"
#include "salpeter/io.hpp"
#include "salpeter/kernel.hpp"
#include "salpeter/lorentz.hpp"
#include "salpeter/operators.hpp"
#include "salpeter/splitmix.hpp"
#include "salpeter/superposition.hpp"

namespace salpeter::cli {

namespace detail {

/// --config is honored before regular parsing so its values become the
/// defaults that explicit flags then override.
inline RunConfig preload_config(const std::vector<std::string>& args) {
    for (size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) return load_config(args[i + 1]);
        if (args[i].rfind("--config=", 0) == 0) return load_config(args[i].substr(9));
    }
    return RunConfig{};
}

/// Commands fall back to a two-mode state when the config lists none. The
/// symmetric pair is the canonical interference example; commands that
/// difference in time need distinct mode energies, because an equal-energy
/// pair is exactly static and its residual would be roundoff over roundoff.
inline std::vector<ModeSpec> resolve_modes(const RunConfig& cfg, bool symmetric) {
    if (!cfg.modes.empty()) return cfg.modes;
    const double p0 = 0.75 * cfg.m * cfg.c;
    if (symmetric) return {{1.0, 0.0, p0}, {1.0, 0.0, -p0}};
    return {{1.0, 0.0, p0}, {1.0, 0.0, -2.0 * p0 / 3.0}};
}

inline SuperpositionState superposition_from(const std::vector<ModeSpec>& modes,
                                             const UnitSystem& units) {
    std::vector<PlaneWaveMode> pw;
    pw.reserve(modes.size());
    for (const ModeSpec& m : modes) pw.push_back({std::polar(m.amp, m.phase), m.p});
    return SuperpositionState(units, pw);
}

inline std::vector<Event> event_lattice(double x_half, double t_half, int per_side) {
    if (per_side < 2) throw std::invalid_argument("event lattice needs at least 2 per side");
    std::vector<Event> ev;
    ev.reserve(static_cast<size_t>(per_side) * static_cast<size_t>(per_side));
    for (int i = 0; i < per_side; ++i)
        for (int j = 0; j < per_side; ++j)
            ev.push_back({-x_half + 2.0 * x_half * i / (per_side - 1),
                          -t_half + 2.0 * t_half * j / (per_side - 1)});
    return ev;
}

inline void maybe_write(const std::string& path, const std::string& command,
                        const RunConfig& cfg,
                        const std::vector<std::pair<std::string, std::string>>& extra,
                        const Table& table) {
    if (!path.empty()) write_table_file(path, command, cfg, extra, table);
}

inline int finish(const ResidualReport& report, bool assert_flag, std::ostream& out) {
    report.print(out);
    return (assert_flag && !report.pass()) ? 1 : 0;
}

struct CommonOpts {
    RunConfig cfg;
    std::string out_path;
    double tol = 0.0;
    bool assert_flag = false;
};

inline int cmd_ratio_surface(const CommonOpts& o, double u_min, double u_max, int steps,
                             std::ostream& out) {
    const UnitSystem units = o.cfg.units();
    const Boost boost(o.cfg.v, units);
    const RatioSurface surface = ratio_surface(u_min, u_max, steps, boost, units);

    Table table;
    table.columns = {"u1", "u2", "ratio"};
    double lo = surface.ratio[0], hi = surface.ratio[0], diag = 0.0;
    for (int i = 0; i < steps; ++i) {
        for (int j = 0; j < steps; ++j) {
            const double r = surface.ratio[static_cast<size_t>(i) * static_cast<size_t>(steps) +
                                           static_cast<size_t>(j)];
            lo = std::min(lo, r);
            hi = std::max(hi, r);
            if (i == j) diag = std::max(diag, std::abs(r - 1.0));
            table.add_row({format_g17(surface.velocities[static_cast<size_t>(i)]),
                           format_g17(surface.velocities[static_cast<size_t>(j)]),
                           format_g17(r)});
        }
    }
    maybe_write(o.out_path, "ratio-surface", o.cfg,
                {{"u_min", format_g17(u_min)},
                 {"u_max", format_g17(u_max)},
                 {"steps", std::to_string(steps)}},
                table);

    ResidualReport report;
    report.add("min_ratio", lo);
    report.add("max_ratio", hi);
    report.check("max_diagonal_deviation", diag, o.tol);
    return finish(report, o.assert_flag, out);
}

inline int cmd_born_residual(const CommonOpts& o, double p1, double p2, double amp1,
                             double amp2, double phase1, double phase2, std::ostream& out) {
    const UnitSystem units = o.cfg.units();
    const Boost boost(o.cfg.v, units);
    const SuperpositionState state(
        units, {{std::polar(amp1, phase1), p1}, {std::polar(amp2, phase2), p2}});
    const BornTransformReport rep = born_transform_residual(state, boost, o.tol);

    Table table;
    table.columns = {"alpha_11", "alpha_22", "alpha_12", "beta_12", "ratio", "r"};
    table.add_row({format_g17(rep.alpha_11), format_g17(rep.alpha_22), format_g17(rep.alpha_12),
                   format_g17(rep.beta_12), format_g17(rep.ratio), format_g17(rep.r)});
    maybe_write(o.out_path, "born-residual", o.cfg,
                {{"p1", format_g17(p1)}, {"p2", format_g17(p2)}}, table);

    ResidualReport report;
    report.add("alpha_11", rep.alpha_11);
    report.add("alpha_22", rep.alpha_22);
    report.add("alpha_12", rep.alpha_12);
    report.add("beta_12", rep.beta_12);
    report.add("ratio", rep.ratio);
    report.add("r", rep.r);
    report.add("boosted_amp1_sq", rep.boosted_amp1_sq);
    report.add("boosted_amp2_sq", rep.boosted_amp2_sq);
    report.add("inconsistent", rep.inconsistent ? 1.0 : 0.0);
    // The per-mode scalings disagreeing (r != 0) is the expected physics; the
    // assertable identity here is that the two routes to the cross factor agree.
    report.check("beta_alpha_residual", rep.beta_12 / rep.alpha_12 - 1.0, o.tol);
    return finish(report, o.assert_flag, out);
}

inline int cmd_dirac_check(const CommonOpts& o, double x_half, double t_half, int per_side,
                           std::ostream& out) {
    const UnitSystem units = o.cfg.units();
    const Boost boost(o.cfg.v, units);
    const SuperpositionState state = superposition_from(resolve_modes(o.cfg, true), units);
    const std::vector<Event> events = event_lattice(x_half, t_half, per_side);
    const double residual = dirac_fourvector_residual(state, boost, events, units);

    Table table;
    table.columns = {"x", "t", "rho", "current"};
    for (const Event& ev : events) {
        const RhoJ pt = dirac_density_current(state, ev);
        table.add_row({format_g17(ev.x), format_g17(ev.t), format_g17(pt.rho),
                       format_g17(pt.current)});
    }
    maybe_write(o.out_path, "dirac-check", o.cfg,
                {{"x_half", format_g17(x_half)},
                 {"t_half", format_g17(t_half)},
                 {"events_per_side", std::to_string(per_side)}},
                table);

    ResidualReport report;
    report.add("events", static_cast<double>(events.size()));
    report.check("fourvector_residual", residual, o.tol);
    return finish(report, o.assert_flag, out);
}

inline int cmd_sweep_identities(const CommonOpts& o, int samples, std::ostream& out) {
    if (samples < 1) throw std::invalid_argument("samples must be positive");
    const UnitSystem units = o.cfg.units();
    const double c = units.c;
    SplitMix64 rng(o.cfg.seed);

    double mass_shell = 0.0, interval = 0.0, beta_alpha = 0.0, spinor_map = 0.0,
           composition = 0.0, diagonal = 0.0;
    const double shell_ref = units.rest_energy() * units.rest_energy();

    for (int i = 0; i < samples; ++i) {
        const double p = rng.uniform(-3.0 * units.m * c, 3.0 * units.m * c);
        const double v = rng.uniform(-0.9 * c, 0.9 * c);
        const Boost b(v, units);
        const auto bp = boost_momentum(p, b, units);
        mass_shell = std::max(mass_shell,
                              std::abs(bp.energy * bp.energy - c * c * bp.p * bp.p - shell_ref) /
                                  shell_ref);

        const Event ev{rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0)};
        const Event bev = boost_event(ev, b);
        const double s0 = c * c * ev.t * ev.t - ev.x * ev.x;
        const double s1 = c * c * bev.t * bev.t - bev.x * bev.x;
        interval = std::max(interval, std::abs(s1 - s0) / (c * c * ev.t * ev.t + ev.x * ev.x + 1.0));

        diagonal = std::max(diagonal, std::abs(consistency_ratio(p, p, b, units) - 1.0));
    }

    // Pairs whose mean velocity is within 1e-3 c of the boost speed are
    // rejected: the beta route divides by the boosted pair velocity and the
    // comparison loses digits as that difference shrinks.
    int kept = 0;
    while (kept < samples) {
        const double p1 = momentum_from_velocity(rng.uniform(-0.95 * c, 0.95 * c), units);
        const double p2 = momentum_from_velocity(rng.uniform(-0.95 * c, 0.95 * c), units);
        const double v = rng.uniform(-0.9 * c, 0.9 * c);
        if (std::abs(pair_velocity(p1, p2, units) - v) < 1e-3 * c) continue;
        ++kept;
        const Boost b(v, units);
        beta_alpha = std::max(beta_alpha, std::abs(beta_coefficient(p1, p2, b, units) /
                                                       alpha_coefficient(p1, p2, b, units) -
                                                   1.0));
    }

    for (int i = 0; i < samples; ++i) {
        const double p = rng.uniform(-2.0 * units.m * c, 2.0 * units.m * c);
        const double v = rng.uniform(-0.9 * c, 0.9 * c);
        const Boost b(v, units);
        const auto [fa, fb] = dirac_mode_spinor(p, units);
        const auto mapped = spinor_boost_matrix(b).apply(fa, fb);
        const auto [ga, gb] = dirac_mode_spinor(boost_momentum(p, b, units).p, units);
        spinor_map = std::max(spinor_map,
                              std::abs(mapped.first - ga) / std::max(1.0, std::abs(ga)));
        spinor_map = std::max(spinor_map,
                              std::abs(mapped.second - gb) / std::max(1.0, std::abs(gb)));

        const double v1 = rng.uniform(-0.9 * c, 0.9 * c);
        const double v2 = rng.uniform(-0.9 * c, 0.9 * c);
        const Mat2 two = spinor_boost_matrix(Boost(v1, units)) * spinor_boost_matrix(Boost(v2, units));
        const Mat2 one = spinor_boost_matrix(Boost(compose_velocities(v1, v2, units), units));
        composition = std::max({composition, std::abs(two.m00 - one.m00),
                                std::abs(two.m01 - one.m01), std::abs(two.m10 - one.m10),
                                std::abs(two.m11 - one.m11)});
    }

    const std::vector<std::pair<std::string, double>> results = {
        {"mass_shell_residual", mass_shell}, {"interval_residual", interval},
        {"beta_alpha_residual", beta_alpha}, {"spinor_map_residual", spinor_map},
        {"spinor_composition_residual", composition}, {"diagonal_ratio_residual", diagonal}};

    Table table;
    table.columns = {"identity", "max_residual", "samples"};
    for (const auto& kv : results)
        table.add_row({kv.first, format_g17(kv.second), std::to_string(samples)});
    maybe_write(o.out_path, "sweep-identities", o.cfg,
                {{"samples", std::to_string(samples)}}, table);

    ResidualReport report;
    for (const auto& kv : results) report.check(kv.first, kv.second, o.tol);
    return finish(report, o.assert_flag, out);
}

inline int cmd_evolve(const CommonOpts& o, double t, std::ostream& out) {
    const UnitSystem units = o.cfg.units();
    const GridSpec grid(o.cfg.n, o.cfg.length);
    const SuperpositionState snapped =
        snap_to_grid(superposition_from(resolve_modes(o.cfg, true), units), grid);
    const GridState initial = sample_on_grid(snapped, grid, 0.0);
    const GridState final_state = propagate(initial, t);

    const DensityCurrentPair born = born_pair(final_state);
    const DensityCurrentPair dirac = dirac_density_current(dirac_spinor_from_scalar(final_state), units);

    Table table;
    table.columns = {"x", "rho_born", "current_born", "rho_dirac", "current_dirac"};
    for (int i = 0; i < grid.n; ++i) {
        const auto k = static_cast<size_t>(i);
        table.add_row({format_g17(grid.position(i)), format_g17(born.rho[k]),
                       format_g17(born.current[k]), format_g17(dirac.rho[k]),
                       format_g17(dirac.current[k])});
    }
    std::vector<std::pair<std::string, std::string>> extra = {{"t", format_g17(t)}};
    for (size_t i = 0; i < snapped.modes.size(); ++i)
        extra.push_back({"snapped_p" + std::to_string(i + 1), format_g17(snapped.modes[i].p)});
    maybe_write(o.out_path, "evolve", o.cfg, extra, table);

    const double norm0 = norm_squared(initial);
    const double norm1 = norm_squared(final_state);
    const double born0 = integrate(grid, born_density(initial));
    const double born1 = integrate(grid, born.rho);
    const double dirac0 =
        integrate(grid, dirac_density_current(dirac_spinor_from_scalar(initial), units).rho);
    const double dirac1 = integrate(grid, dirac.rho);

    ResidualReport report;
    report.add("norm_initial", norm0);
    report.add("norm_final", norm1);
    report.check("norm_drift", norm1 / norm0 - 1.0, o.tol);
    report.check("born_integral_drift", born1 / born0 - 1.0, o.tol);
    report.check("dirac_integral_drift", dirac1 / dirac0 - 1.0, o.tol);
    return finish(report, o.assert_flag, out);
}

inline int cmd_continuity(const CommonOpts& o, double t, std::ostream& out) {
    const UnitSystem units = o.cfg.units();
    const GridSpec grid(o.cfg.n, o.cfg.length);
    const double dt = o.cfg.dt;
    const SuperpositionState snapped =
        snap_to_grid(superposition_from(resolve_modes(o.cfg, false), units), grid);

    std::vector<DensityCurrentPair> born, dirac;
    for (double time : {t - dt, t, t + dt}) {
        const GridState state = sample_on_grid(snapped, grid, time);
        born.push_back(born_pair(state));
        dirac.push_back(dirac_density_current(dirac_spinor_from_scalar(state), units));
    }
    const double res_born = continuity_residual(born[0], born[1], born[2], dt);
    const double res_dirac = continuity_residual(dirac[0], dirac[1], dirac[2], dt);

    Table table;
    table.columns = {"x", "rho_born", "current_born", "rho_dirac", "current_dirac"};
    for (int i = 0; i < grid.n; ++i) {
        const auto k = static_cast<size_t>(i);
        table.add_row({format_g17(grid.position(i)), format_g17(born[1].rho[k]),
                       format_g17(born[1].current[k]), format_g17(dirac[1].rho[k]),
                       format_g17(dirac[1].current[k])});
    }
    maybe_write(o.out_path, "continuity", o.cfg, {{"t", format_g17(t)}}, table);

    ResidualReport report;
    report.check("continuity_residual_born", res_born, o.tol);
    report.check("continuity_residual_dirac", res_dirac, o.tol);
    return finish(report, o.assert_flag, out);
}

inline int cmd_kernel(const CommonOpts& o, double z_min, double z_max, int steps,
                      std::ostream& out) {
    if (steps < 2) throw std::invalid_argument("kernel table needs at least 2 steps");
    if (!(z_min > 0.0) || !(z_max > z_min))
        throw std::invalid_argument("kernel range needs 0 < z-min < z-max");
    const UnitSystem units = o.cfg.units();
    const double lc = units.compton_length();

    Table table;
    table.columns = {"z_over_lc", "kernel"};
    for (int i = 0; i < steps; ++i) {
        const double w = z_min + (z_max - z_min) * i / (steps - 1);
        table.add_row({format_g17(w), format_g17(kernel_3d(w * lc, units))});
    }
    maybe_write(o.out_path, "kernel", o.cfg,
                {{"z_min", format_g17(z_min)},
                 {"z_max", format_g17(z_max)},
                 {"steps", std::to_string(steps)}},
                table);

    ResidualReport report;
    report.add("kernel_at_compton", kernel_3d(lc, units));
    report.add("first", kernel_3d(z_min * lc, units));
    report.add("last", kernel_3d(z_max * lc, units));
    return finish(report, o.assert_flag, out);
}

inline int cmd_series(const CommonOpts& o, double p, int k_max, std::ostream& out) {
    if (k_max < 0) throw std::invalid_argument("k-max must be nonnegative");
    const UnitSystem units = o.cfg.units();
    if (!(units.m > 0.0)) throw std::invalid_argument("series study needs m > 0");
    const double exact = dispersion_energy(p, units);

    Table table;
    table.columns = {"k_max", "symbol", "abs_error"};
    std::vector<double> errors(static_cast<size_t>(k_max) + 1);
    for (int k = 0; k <= k_max; ++k) {
        const double partial = truncated_series_symbol(p, units, SeriesTruncation{k});
        errors[static_cast<size_t>(k)] = std::abs(partial - exact);
        table.add_row({std::to_string(k), format_g17(partial),
                       format_g17(errors[static_cast<size_t>(k)])});
    }
    maybe_write(o.out_path, "series", o.cfg,
                {{"p", format_g17(p)}, {"k_max", std::to_string(k_max)}}, table);

    const bool inside = std::abs(p) < units.m * units.c;
    ResidualReport report;
    report.add("exact_energy", exact);
    report.add("inside_radius", inside ? 1.0 : 0.0);
    if (inside) {
        report.check("final_error", errors.back(), o.tol);
    } else {
        report.add("final_error", errors.back());
        const double mid = errors[static_cast<size_t>(k_max) / 2];
        report.add("error_growing", errors.back() > mid ? 1.0 : 0.0);
    }
    return finish(report, o.assert_flag, out);
}

}  // namespace detail

/// Parse and execute one subcommand. Returns 0 on success or a passing
/// check, 1 when --assert is given and a physics check fails, 2 on any
/// input or configuration problem.
inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
    using detail::CommonOpts;
    try {
        RunConfig cfg = detail::preload_config(args);

        CLI::App app{"Salpeter equation laboratory: densities, currents and boosts", "salpeter"};
        app.require_subcommand(1);
        std::string config_path;

        CommonOpts o;
        o.cfg = cfg;
        o.out_path = cfg.out;

        // Each subcommand gets its own tolerance slot so the defaults stay
        // independent; only the parsed subcommand's slot is consulted.
        double tol_slots[8];
        size_t tol_index = 0;
        auto add_common = [&](CLI::App* sub, double default_tol) {
            sub->add_option("--config", config_path, "config file with defaults");
            sub->add_option("--out", o.out_path, "output table path (empty: no file)")
                ->capture_default_str();
            tol_slots[tol_index] = cfg.tol.value_or(default_tol);
            sub->add_option("--tol", tol_slots[tol_index], "tolerance for checked residuals")
                ->capture_default_str();
            ++tol_index;
            sub->add_flag("--assert", o.assert_flag, "exit 1 if a checked residual fails");
        };

        auto* rs = app.add_subcommand("ratio-surface",
                                      "consistency ratio over a velocity square");
        double u_min = -0.9, u_max = 0.9;
        int steps = 181;
        rs->add_option("--v", o.cfg.v, "boost speed")->capture_default_str();
        rs->add_option("--u-min", u_min, "lowest mode speed")->capture_default_str();
        rs->add_option("--u-max", u_max, "highest mode speed")->capture_default_str();
        rs->add_option("--steps", steps, "samples per axis")->capture_default_str();

        auto* br = app.add_subcommand("born-residual",
                                      "two-mode transform report for one boost");
        const auto default_modes = detail::resolve_modes(cfg, true);
        double p1 = default_modes.size() > 0 ? default_modes[0].p : 0.75;
        double p2 = default_modes.size() > 1 ? default_modes[1].p : -0.75;
        double amp1 = default_modes.size() > 0 ? default_modes[0].amp : 1.0;
        double amp2 = default_modes.size() > 1 ? default_modes[1].amp : 1.0;
        double phase1 = default_modes.size() > 0 ? default_modes[0].phase : 0.0;
        double phase2 = default_modes.size() > 1 ? default_modes[1].phase : 0.0;
        br->add_option("--v", o.cfg.v, "boost speed")->capture_default_str();
        br->add_option("--p1", p1, "first momentum")->capture_default_str();
        br->add_option("--p2", p2, "second momentum")->capture_default_str();
        br->add_option("--amp1", amp1, "first amplitude modulus")->capture_default_str();
        br->add_option("--amp2", amp2, "second amplitude modulus")->capture_default_str();
        br->add_option("--phase1", phase1, "first phase")->capture_default_str();
        br->add_option("--phase2", phase2, "second phase")->capture_default_str();

        auto* dc = app.add_subcommand("dirac-check",
                                      "four-vector law residual for the spinor pair");
        double x_half = 4.0, t_half = 4.0;
        int per_side = 8;
        dc->add_option("--v", o.cfg.v, "boost speed")->capture_default_str();
        dc->add_option("--x-half", x_half, "event half-range in x")->capture_default_str();
        dc->add_option("--t-half", t_half, "event half-range in t")->capture_default_str();
        dc->add_option("--events-per-side", per_side, "event lattice side")->capture_default_str();

        auto* sw = app.add_subcommand("sweep-identities",
                                      "seeded random checks of the exact identities");
        int samples = 10000;
        sw->add_option("--samples", samples, "draws per identity")->capture_default_str();
        sw->add_option("--seed", o.cfg.seed, "random stream seed")->capture_default_str();

        auto* ev = app.add_subcommand("evolve", "propagate modes and tabulate densities");
        double t_evolve = 1.0;
        ev->add_option("--t", t_evolve, "evolution time")->capture_default_str();
        ev->add_option("--n", o.cfg.n, "grid points")->capture_default_str();
        ev->add_option("--length", o.cfg.length, "periodic box length")->capture_default_str();

        auto* co = app.add_subcommand("continuity",
                                      "finite-difference continuity residuals");
        double t_cont = 1.0;
        co->add_option("--t", t_cont, "center time")->capture_default_str();
        co->add_option("--dt", o.cfg.dt, "snapshot spacing")->capture_default_str();
        co->add_option("--n", o.cfg.n, "grid points")->capture_default_str();
        co->add_option("--length", o.cfg.length, "periodic box length")->capture_default_str();

        auto* ke = app.add_subcommand("kernel", "radial kernel table in Compton units");
        double z_min = 0.1, z_max = 10.0;
        int ksteps = 100;
        ke->add_option("--z-min", z_min, "smallest separation / l_c")->capture_default_str();
        ke->add_option("--z-max", z_max, "largest separation / l_c")->capture_default_str();
        ke->add_option("--steps", ksteps, "table rows")->capture_default_str();

        auto* se = app.add_subcommand("series", "square-root series truncation study");
        double p_series = 0.5 * cfg.m * cfg.c;
        int k_max = 30;
        se->add_option("--p", p_series, "momentum to expand at")->capture_default_str();
        se->add_option("--k-max", k_max, "largest truncation order")->capture_default_str();

        // Per-command residual tolerances, applied before flags override them.
        add_common(rs, 1e-12);
        add_common(br, 1e-12);
        add_common(dc, 1e-10);
        add_common(sw, 1e-12);
        add_common(ev, 1e-12);
        add_common(co, 1e-6);
        add_common(ke, 1e-12);
        add_common(se, 1e-8);

        std::vector<const char*> argv;
        argv.reserve(args.size() + 1);
        argv.push_back("salpeter");
        for (const std::string& a : args) argv.push_back(a.c_str());
        try {
            app.parse(static_cast<int>(argv.size()), argv.data());
        } catch (const CLI::ParseError& e) {
            const int code = app.exit(e, out, err);
            return code == 0 ? 0 : 2;
        }

        validate_config(o.cfg);
        CLI::App* subs[8] = {rs, br, dc, sw, ev, co, ke, se};
        size_t which = 8;
        for (size_t i = 0; i < 8; ++i)
            if (subs[i]->parsed()) which = i;
        if (which == 8) return 2;
        o.tol = tol_slots[which];

        switch (which) {
            case 0: return detail::cmd_ratio_surface(o, u_min, u_max, steps, out);
            case 1: return detail::cmd_born_residual(o, p1, p2, amp1, amp2, phase1, phase2, out);
            case 2: return detail::cmd_dirac_check(o, x_half, t_half, per_side, out);
            case 3: return detail::cmd_sweep_identities(o, samples, out);
            case 4: return detail::cmd_evolve(o, t_evolve, out);
            case 5: return detail::cmd_continuity(o, t_cont, out);
            case 6: return detail::cmd_kernel(o, z_min, z_max, ksteps, out);
            default: return detail::cmd_series(o, p_series, k_max, out);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace salpeter::cli
