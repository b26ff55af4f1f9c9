// catwig — command-line surface for the optomechanical superposition toolkit.
//
// Subcommands: visibility | wigner | negativity | decoherence | gravity |
// cooling | montecarlo | devices. Exit codes: 0 success, 2 validation/config
// error, 3 numeric non-convergence, 4 domain error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "catwig/catalog.hpp"
#include "catwig/constants.hpp"
#include "catwig/cooling.hpp"
#include "catwig/decoherence.hpp"
#include "catwig/dynamics.hpp"
#include "catwig/gravity.hpp"
#include "catwig/montecarlo.hpp"
#include "catwig/params.hpp"
#include "catwig/wigner.hpp"

namespace {

using namespace catwig;

constexpr const char* kVersion = "1.0.0";

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot open output file: " + path);
    out << content;
}

// A plain table that serializes as CSV or as a JSON array of row objects.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    std::string to_csv() const {
        std::string out;
        for (size_t i = 0; i < columns.size(); ++i)
            out += columns[i] + (i + 1 < columns.size() ? "," : "\n");
        for (const auto& row : rows)
            for (size_t i = 0; i < row.size(); ++i)
                out += row[i] + (i + 1 < row.size() ? "," : "\n");
        return out;
    }
    std::string to_json() const {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& row : rows) {
            nlohmann::json obj;
            for (size_t i = 0; i < columns.size(); ++i) obj[columns[i]] = row[i];
            arr.push_back(std::move(obj));
        }
        return arr.dump(2) + "\n";
    }
    std::string serialize(const std::string& format) const {
        return format == "json" ? to_json() : to_csv();
    }
};

struct CommonOpts {
    std::string config_path;
    std::string out_path;
    std::string format = "csv";
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool config_required) {
    auto* c = cmd->add_option("--config", opts.config_path,
                              "JSON config with the physical parameters");
    if (config_required) c->required();
    cmd->add_option("--out", opts.out_path, "output path (default stdout)");
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
}

int run_visibility(const CommonOpts& opts, int points, double periods) {
    const PhysicalParams params = params_from_json_file(opts.config_path);
    const DerivedQuantities d = derive_quantities(params);

    Table table;
    table.columns = {"omega_c_t", "v_pure", "v_thermal", "v_classical", "entropy_bits"};
    for (int i = 0; i <= points; ++i) {
        const double phase = 2.0 * constants::pi * periods * i / points;
        const double vp = visibility_pure(d.kappa, phase);
        table.rows.push_back({fmt(phase), fmt(vp),
                              fmt(visibility_thermal(d.kappa, d.n_bar, phase)),
                              fmt(visibility_classical(params, params.mode_temp_k, phase)),
                              fmt(entropy_from_visibility(vp))});
    }
    write_output(opts.out_path, table.serialize(opts.format));
    return exit_ok;
}

std::string grid_to_csv(const WignerGrid& g, double kappa, double phase, double theta,
                        double n_bar) {
    std::ostringstream out;
    out << "# x_min=" << fmt(g.spec.x_min) << " x_max=" << fmt(g.spec.x_max)
        << " nx=" << g.spec.nx << "\n";
    out << "# p_min=" << fmt(g.spec.p_min) << " p_max=" << fmt(g.spec.p_max)
        << " np=" << g.spec.np << "\n";
    out << "# kappa=" << fmt(kappa) << " omega_c_t=" << fmt(phase)
        << " theta=" << fmt(theta) << " n_bar=" << fmt(n_bar) << "\n";
    for (int ix = 0; ix < g.spec.nx; ++ix) {
        for (int ip = 0; ip < g.spec.np; ++ip)
            out << fmt(g.at(ix, ip)) << (ip + 1 < g.spec.np ? "," : "\n");
    }
    return out.str();
}

std::string grid_to_json(const WignerGrid& g, double kappa, double phase, double theta,
                         double n_bar) {
    nlohmann::json j;
    j["x_min"] = g.spec.x_min;
    j["x_max"] = g.spec.x_max;
    j["nx"] = g.spec.nx;
    j["p_min"] = g.spec.p_min;
    j["p_max"] = g.spec.p_max;
    j["np"] = g.spec.np;
    j["kappa"] = kappa;
    j["omega_c_t"] = phase;
    j["theta"] = theta;
    j["n_bar"] = n_bar;
    j["values"] = g.values;
    return j.dump() + "\n";
}

int run_wigner(const CommonOpts& opts, double kappa, double phase, double theta,
               double n_bar, int grid_n, int quad_order) {
    const GridSpec spec = default_grid(thermal_alpha_max(kappa, phase, n_bar), grid_n);
    const WignerGrid grid = wigner_thermal(kappa, phase, theta, n_bar, spec, quad_order);
    write_output(opts.out_path, opts.format == "json"
                                    ? grid_to_json(grid, kappa, phase, theta, n_bar)
                                    : grid_to_csv(grid, kappa, phase, theta, n_bar));
    return exit_ok;
}

int run_negativity(const CommonOpts& opts, const std::vector<double>& kappas,
                   const std::vector<double>& n_bars, const std::vector<double>& phases,
                   double theta, int grid_n, int quad_order) {
    Table table;
    table.columns = {"kappa", "n_bar", "omega_c_t", "negativity"};
    for (double kappa : kappas) {
        for (double n_bar : n_bars) {
            for (double phase : phases) {
                const GridSpec spec =
                    default_grid(thermal_alpha_max(kappa, phase, n_bar), grid_n);
                const WignerGrid grid =
                    wigner_thermal(kappa, phase, theta, n_bar, spec, quad_order);
                table.rows.push_back(
                    {fmt(kappa), fmt(n_bar), fmt(phase), fmt(negativity(grid))});
            }
        }
    }
    write_output(opts.out_path, table.serialize(opts.format));
    return exit_ok;
}

int run_decoherence(const CommonOpts& opts, double chi, int points, double periods) {
    const PhysicalParams params = params_from_json_file(opts.config_path);
    const DerivedQuantities d = derive_quantities(params);

    DecoherenceParams dec;
    dec.q_factor = params.q_factor;
    dec.bath_temp_k = params.bath_temp_k;
    dec.kappa = d.kappa;
    dec.omega_c_rad_s = params.omega_c_rad_s;
    dec.chi = chi;
    for (const std::string& w : markov_warnings(dec)) std::cerr << "warning: " << w << "\n";

    const auto tau = tau_dec(dec);
    const double tau_value = tau ? *tau : std::numeric_limits<double>::infinity();

    Table table;
    table.columns = {"t", "v_envelope", "v_total", "tau_dec", "t_eid"};
    const double period = 2.0 * constants::pi / params.omega_c_rad_s;
    for (int i = 0; i <= points; ++i) {
        const double t = period * periods * i / points;
        const double envelope = tau ? std::exp(-t / *tau) : 1.0;
        table.rows.push_back({fmt(t), fmt(envelope),
                              fmt(revival_visibility(d.kappa, d.n_bar, dec, t)),
                              fmt(tau_value), fmt(d.t_eid_k)});
    }
    write_output(opts.out_path, table.serialize(opts.format));
    return exit_ok;
}

int run_gravity(const CommonOpts& opts, double sphere_radius, double constituent_mass) {
    const PhysicalParams params = params_from_json_file(opts.config_path);
    const DerivedQuantities d = derive_quantities(params);
    const double period = 2.0 * constants::pi / params.omega_c_rad_s;

    GravityModel nuclei;
    nuclei.total_mass_kg = params.mass_kg;
    nuclei.constituent_mass_kg = constituent_mass;
    nuclei.sphere_radius_m = sphere_radius;
    nuclei.separation_m = std::sqrt(8.0) * d.kappa * d.x0_m;
    nuclei.model = MassModel::nuclear_sphere;

    Table table;
    table.columns = {"model", "delta_E_J", "tau_G_s", "tau_over_period"};
    const double de_n = delta_E_nuclei(nuclei);
    const double tau_n = collapse_time(de_n);
    table.rows.push_back({"nuclear-sphere", fmt(de_n), fmt(tau_n), fmt(tau_n / period)});

    const double de_w =
        delta_E_wavepacket(params.mass_kg, constituent_mass, d.x0_m, d.kappa);
    const double tau_w = collapse_time(de_w);
    table.rows.push_back({"wavepacket", fmt(de_w), fmt(tau_w), fmt(tau_w / period)});

    write_output(opts.out_path, table.serialize(opts.format));
    return exit_ok;
}

int run_cooling(const CommonOpts& opts, double alpha_max, int points, double gamma_a,
                double gamma_m, double n_th, double omega_c, double detuning,
                bool detuning_set) {
    CoolingConfig cfg;
    cfg.gamma_a_rad_s = gamma_a;
    cfg.gamma_m_rad_s = gamma_m;
    cfg.n_bar_thermal = n_th;
    cfg.omega_c_rad_s = omega_c;
    cfg.detuning_rad_s = detuning_set ? detuning : -omega_c;

    Table table;
    table.columns = {"alpha", "n_phonon", "ratio", "ratio_over_lowfield"};
    for (int i = 1; i <= points; ++i) {
        cfg.alpha = alpha_max * i / points;
        const SidebandRates rates = cooling_rates(cfg);
        const double n_f = equilibrium_phonon(cfg);
        const double r = sideband_ratio(n_f, rates);
        const double r0 = low_field_ratio(n_th, rates);
        table.rows.push_back({fmt(cfg.alpha), fmt(n_f), fmt(r), fmt(r / r0)});
    }
    write_output(opts.out_path, table.serialize(opts.format));
    return exit_ok;
}

int run_montecarlo(const CommonOpts& opts, std::uint64_t seed, std::size_t photons,
                   int theta_steps, const std::string& model, double chi, int threads,
                   int bins, const std::string& bins_out) {
    const PhysicalParams params = params_from_json_file(opts.config_path);
    const DerivedQuantities d = derive_quantities(params);

    RunConfig cfg;
    cfg.kappa = d.kappa;
    cfg.n_bar = d.n_bar;
    cfg.omega_c_rad_s = params.omega_c_rad_s;
    cfg.finesse = params.finesse;
    cfg.round_trips = params.effective_round_trips();
    cfg.theta_steps = theta_steps;
    if (model == "pure") {
        cfg.model = VisibilityModel::pure;
    } else if (model == "thermal") {
        cfg.model = VisibilityModel::thermal;
    } else {
        cfg.model = VisibilityModel::decohered;
        DecoherenceParams dec;
        dec.q_factor = params.q_factor;
        dec.bath_temp_k = params.bath_temp_k;
        dec.kappa = d.kappa;
        dec.omega_c_rad_s = params.omega_c_rad_s;
        dec.chi = chi;
        cfg.decoherence = dec;
    }

    const auto records = simulate_run(seed, photons, cfg, threads);
    write_output(opts.out_path, records_to_csv(records));

    Table table;
    table.columns = {"bin_center", "v_hat", "std_err", "count"};
    const double bin_width = 4.0 * constants::pi / bins;
    for (int i = 0; i < bins; ++i) {
        const double center = (i + 0.5) * bin_width;
        try {
            const VisibilityEstimate est = estimate_visibility(records, center, bin_width);
            table.rows.push_back(
                {fmt(center), fmt(est.v), fmt(est.std_err), std::to_string(est.count)});
        } catch (const ValidationError&) {
            // bin has too few records; omitted from the report
        }
    }
    write_output(bins_out, table.serialize(opts.format));
    return exit_ok;
}

int run_devices(const CommonOpts& opts, const std::string& catalog_path,
                double lambda_m) {
    const auto catalog = load_catalog(catalog_path);
    const auto report = rank_devices(catalog, lambda_m);

    Table table;
    table.columns = {"label", "kappa", "meets_coupling", "t_eid_k", "finesse_required"};
    for (const RankEntry& e : report) {
        table.rows.push_back(
            {e.label, e.kappa ? fmt(*e.kappa) : "null",
             e.meets_coupling ? (*e.meets_coupling ? "true" : "false") : "null",
             e.t_eid_k ? fmt(*e.t_eid_k) : "null",
             e.finesse_required ? fmt(*e.finesse_required) : "null"});
    }
    write_output(opts.out_path, table.serialize(opts.format));
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"catwig: micro-optomechanical superposition toolkit"};
    app.require_subcommand(0, 1);

    bool show_version = false;
    app.add_flag("--version", show_version, "print version and constants table hash");

    // visibility
    CommonOpts vis_opts;
    int vis_points = 200;
    double vis_periods = 1.0;
    auto* vis = app.add_subcommand("visibility", "visibility and entropy vs time");
    add_common(vis, vis_opts, true);
    vis->add_option("--points", vis_points, "samples per sweep");
    vis->add_option("--periods", vis_periods, "mechanical periods to sweep");

    // wigner
    CommonOpts wig_opts;
    double wig_kappa = 1.0 / std::sqrt(2.0), wig_phase = constants::pi, wig_theta = 0.0,
           wig_nbar = 0.0;
    int wig_n = 512, wig_quad = 20;
    auto* wig = app.add_subcommand("wigner", "projected Wigner function grid");
    add_common(wig, wig_opts, false);
    wig->add_option("--kappa", wig_kappa, "coupling constant");
    wig->add_option("--time", wig_phase, "omega_c t [rad]");
    wig->add_option("--theta", wig_theta, "projection phase [rad]");
    wig->add_option("--nbar", wig_nbar, "mean thermal occupation");
    wig->add_option("--grid-n", wig_n, "samples per axis");
    wig->add_option("--quad-order", wig_quad, "Gauss-Hermite order per beta axis");

    // negativity
    CommonOpts neg_opts;
    std::vector<double> neg_kappas{1.0 / std::sqrt(2.0)};
    std::vector<double> neg_nbars{0.0};
    std::vector<double> neg_phases{constants::pi};
    double neg_theta = 0.0;
    int neg_n = 512, neg_quad = 20;
    auto* neg = app.add_subcommand("negativity", "integrated Wigner negativity");
    add_common(neg, neg_opts, false);
    neg->add_option("--kappa", neg_kappas, "coupling constants");
    neg->add_option("--nbar", neg_nbars, "mean thermal occupations");
    neg->add_option("--time", neg_phases, "omega_c t values [rad]");
    neg->add_option("--theta", neg_theta, "projection phase [rad]");
    neg->add_option("--grid-n", neg_n, "samples per axis");
    neg->add_option("--quad-order", neg_quad, "Gauss-Hermite order per beta axis");

    // decoherence
    CommonOpts dec_opts;
    double dec_chi = 1.0, dec_periods = 2.0;
    int dec_points = 200;
    auto* dec = app.add_subcommand("decoherence", "decoherence envelope and timescale");
    add_common(dec, dec_opts, true);
    dec->add_option("--chi", dec_chi, "correction factor (1 or 8/3)");
    dec->add_option("--points", dec_points, "samples per sweep");
    dec->add_option("--periods", dec_periods, "mechanical periods to sweep");

    // gravity
    CommonOpts grav_opts;
    double grav_a = 1e-15, grav_m1 = silicon_nuclear_mass_kg;
    auto* grav = app.add_subcommand("gravity", "gravitational collapse timescales");
    add_common(grav, grav_opts, true);
    grav->add_option("--sphere-radius", grav_a, "constituent sphere radius [m]");
    grav->add_option("--constituent-mass", grav_m1, "constituent mass [kg]");

    // cooling
    CommonOpts cool_opts;
    double cool_alpha_max = 3.0, cool_gamma_a = 1.0, cool_gamma_m = 1e-7,
           cool_n_th = 1e4, cool_omega_c = 1.0, cool_detuning = 0.0;
    int cool_points = 100;
    auto* cool = app.add_subcommand("cooling", "passive cooling sweep over pump power");
    add_common(cool, cool_opts, false);
    cool->add_option("--alpha-max", cool_alpha_max, "maximum pump amplitude");
    cool->add_option("--points", cool_points, "sweep samples");
    cool->add_option("--gamma-a", cool_gamma_a, "cavity power decay [rad/s]");
    cool->add_option("--gamma-m", cool_gamma_m, "mechanical damping [rad/s]");
    cool->add_option("--n-th", cool_n_th, "bath occupation");
    cool->add_option("--omega-c", cool_omega_c, "mechanical frequency [rad/s]");
    auto* detuning_opt =
        cool->add_option("--detuning", cool_detuning, "pump detuning (default -omega_c)");

    // montecarlo
    CommonOpts mc_opts;
    std::uint64_t mc_seed = 0;
    std::size_t mc_photons = 100000;
    int mc_theta_steps = 16, mc_threads = 1, mc_bins = 24;
    double mc_chi = 1.0;
    std::string mc_model = "pure", mc_bins_out;
    auto* mc = app.add_subcommand("montecarlo", "photon-counting emulator");
    add_common(mc, mc_opts, true);
    mc->add_option("--seed", mc_seed, "64-bit run seed")->required();
    mc->add_option("--photons", mc_photons, "number of photon trials");
    mc->add_option("--theta-steps", mc_theta_steps, "theta sweep resolution");
    mc->add_option("--model", mc_model, "visibility model")
        ->check(CLI::IsMember({"pure", "thermal", "decohered"}));
    mc->add_option("--chi", mc_chi, "decoherence correction factor");
    mc->add_option("--threads", mc_threads, "worker threads");
    mc->add_option("--bins", mc_bins, "time bins over two periods");
    mc->add_option("--bins-out", mc_bins_out, "visibility-estimate output path");

    // devices
    CommonOpts dev_opts;
    std::string dev_catalog;
    double dev_lambda = 600e-9;
    auto* dev = app.add_subcommand("devices", "device catalog coupling report");
    add_common(dev, dev_opts, false);
    dev->add_option("--catalog", dev_catalog, "device catalog JSON")->required();
    dev->add_option("--lambda", dev_lambda, "optical wavelength [m]");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_validation;
    }

    try {
        if (show_version) {
            std::printf("catwig %s (constants table %016llx)\n", kVersion,
                        static_cast<unsigned long long>(constants::table_hash()));
            return exit_ok;
        }
        if (vis->parsed()) return run_visibility(vis_opts, vis_points, vis_periods);
        if (wig->parsed())
            return run_wigner(wig_opts, wig_kappa, wig_phase, wig_theta, wig_nbar, wig_n,
                              wig_quad);
        if (neg->parsed())
            return run_negativity(neg_opts, neg_kappas, neg_nbars, neg_phases, neg_theta,
                                  neg_n, neg_quad);
        if (dec->parsed()) return run_decoherence(dec_opts, dec_chi, dec_points, dec_periods);
        if (grav->parsed()) return run_gravity(grav_opts, grav_a, grav_m1);
        if (cool->parsed())
            return run_cooling(cool_opts, cool_alpha_max, cool_points, cool_gamma_a,
                               cool_gamma_m, cool_n_th, cool_omega_c, cool_detuning,
                               detuning_opt->count() > 0);
        if (mc->parsed())
            return run_montecarlo(mc_opts, mc_seed, mc_photons, mc_theta_steps, mc_model,
                                  mc_chi, mc_threads, mc_bins, mc_bins_out);
        if (dev->parsed()) return run_devices(dev_opts, dev_catalog, dev_lambda);
        std::cerr << app.help();
        return exit_validation;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_validation;
    } catch (const ConvergenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_convergence;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_domain;
    }
}
