// spirits: command-line front end for the confidence-feedback economy
// simulator. Subcommands cover per-period equilibria, fixed points and phase
// diagrams, trajectory simulation, residence-time / Arrhenius analysis,
// Kramers rates and the inflation block.

#include "spirits/config.hpp"
#include "spirits/dynamics.hpp"
#include "spirits/errors.hpp"
#include "spirits/feedback.hpp"
#include "spirits/inflation.hpp"
#include "spirits/io.hpp"
#include "spirits/micro.hpp"
#include "spirits/parallel.hpp"
#include "spirits/rare_events.hpp"
#include "spirits/rng.hpp"
#include "spirits/shocks.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

struct CliOptions {
    std::optional<std::string> config_file;
    std::vector<std::pair<std::string, std::string>> overrides;
    std::string out_dir = ".";
};

// Tracks artifacts written by a command so the manifest can record their
// hashes; everything goes through atomic_write.
class ArtifactSink {
public:
    ArtifactSink(std::string out_dir, std::string command, const spirits::RunConfig& cfg)
        : out_dir_(std::move(out_dir)), command_(std::move(command)), cfg_(cfg) {
        fs::create_directories(out_dir_);
    }

    void write(const std::string& name, const std::string& content) {
        spirits::atomic_write((fs::path(out_dir_) / name).string(), content);
        hashes_[name] = spirits::fnv1a64_hex(content);
    }

    void write_manifest() {
        ordered_json m;
        m["command"] = command_;
        m["seed"] = cfg_.master_seed;
        ordered_json conf;
        for (const auto& [k, v] : cfg_.flatten()) {
            if (k == "threads") continue; // execution detail, not part of the result
            conf[k] = v;
        }
        m["config"] = conf;
        ordered_json arts;
        for (const auto& [name, hash] : hashes_) arts[name] = hash;
        m["artifacts"] = arts;
        spirits::atomic_write((fs::path(out_dir_) / "manifest.json").string(), m.dump(2) + "\n");
    }

private:
    std::string out_dir_;
    std::string command_;
    const spirits::RunConfig& cfg_;
    std::map<std::string, std::string> hashes_;
};

std::string csv_optional(const std::optional<double>& v) {
    return v ? spirits::fmt_double(*v) : std::string();
}

int cmd_micro(const spirits::RunConfig& cfg, ArtifactSink& sink) {
    const spirits::Equilibrium eq =
        spirits::solve_equilibrium(cfg.prefs, cfg.firm, cfg.micro.f, cfg.micro.z);
    ordered_json j;
    j["f"] = cfg.micro.f;
    j["z"] = cfg.micro.z;
    j["c"] = eq.c;
    j["n"] = eq.n;
    j["u"] = eq.u;
    j["lambda_p"] = eq.lambda_p;
    sink.write("micro.json", j.dump(2) + "\n");
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_fixed_points(const spirits::RunConfig& cfg, ArtifactSink& sink) {
    const spirits::FixedPointSet fps = spirits::fixed_points(cfg.map);
    ordered_json j;
    j["phase"] = spirits::phase_name(fps.phase);
    ordered_json roots = ordered_json::array();
    for (const auto& r : fps.roots) {
        ordered_json rt;
        rt["value"] = r.value;
        rt["slope"] = r.slope;
        rt["stable"] = r.stable;
        roots.push_back(rt);
    }
    j["roots"] = roots;
    if (fps.c_low) j["c_low"] = *fps.c_low;
    if (fps.c_star) j["c_star"] = *fps.c_star;
    if (fps.c_high) j["c_high"] = *fps.c_high;
    if (fps.distance_ratio) j["distance_ratio"] = *fps.distance_ratio;
    sink.write("fixed_points.json", j.dump(2) + "\n");
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_phase_diagram(const spirits::RunConfig& cfg, ArtifactSink& sink, int threads) {
    const auto cells = spirits::phase_diagram_scan(
        cfg.map, cfg.grid.c0_lo, cfg.grid.c0_hi, cfg.grid.n_c0,
        cfg.grid.theta_lo, cfg.grid.theta_hi, cfg.grid.n_theta, threads);
    std::ostringstream csv;
    csv << "c0,theta,phase,distance_ratio\n";
    for (const auto& c : cells) {
        csv << spirits::fmt_double(c.c_0) << ',' << spirits::fmt_double(c.theta) << ','
            << spirits::phase_name(c.phase) << ',' << csv_optional(c.distance_ratio) << '\n';
    }
    sink.write("phase.csv", csv.str());
    return 0;
}

int cmd_simulate(const spirits::RunConfig& cfg, ArtifactSink& sink) {
    const spirits::Trajectory traj = spirits::simulate(cfg.sim);

    std::ostringstream tcsv;
    tcsv << "t,x,c,basin\n";
    for (std::size_t t = 0; t < traj.x.size(); ++t) {
        tcsv << t << ',' << spirits::fmt_double(traj.x[t]) << ','
             << spirits::fmt_double(std::exp(traj.x[t])) << ',';
        if (t < traj.basin.size()) {
            switch (traj.basin[t]) {
                case spirits::Basin::high: tcsv << "high"; break;
                case spirits::Basin::low: tcsv << "low"; break;
                case spirits::Basin::transit: tcsv << "transit"; break;
            }
        }
        tcsv << '\n';
    }
    sink.write("traj.csv", tcsv.str());

    std::ostringstream hcsv;
    hcsv << "bin_left,bin_right,density\n";
    for (std::size_t b = 0; b + 1 < traj.stats.hist.edges.size(); ++b) {
        hcsv << spirits::fmt_double(traj.stats.hist.edges[b]) << ','
             << spirits::fmt_double(traj.stats.hist.edges[b + 1]) << ','
             << spirits::fmt_double(traj.stats.hist.density[b]) << '\n';
    }
    sink.write("hist.csv", hcsv.str());

    ordered_json j;
    j["mean_x"] = traj.stats.mean_x;
    if (traj.stats.var_delta) j["var_delta"] = *traj.stats.var_delta;
    if (traj.stats.var_delta_predicted) j["var_delta_predicted"] = *traj.stats.var_delta_predicted;
    if (traj.stats.occupancy_high) j["occupancy_high"] = *traj.stats.occupancy_high;
    if (traj.stats.occupancy_low) j["occupancy_low"] = *traj.stats.occupancy_low;
    j["phase"] = spirits::phase_name(traj.fps.phase);
    sink.write("stats.json", j.dump(2) + "\n");
    return 0;
}

int cmd_kramers(const spirits::RunConfig& cfg, ArtifactSink& sink) {
    const spirits::PotentialProfile prof = spirits::potential(cfg.map, 100000);
    const spirits::KramersRates standard =
        spirits::kramers_rate(cfg.map, cfg.shocks.sigma, cfg.sim.ema_epsilon, false);
    const spirits::KramersRates textbook =
        spirits::kramers_rate(cfg.map, cfg.shocks.sigma, cfg.sim.ema_epsilon, true);
    ordered_json j;
    j["sigma"] = cfg.shocks.sigma;
    j["epsilon"] = cfg.sim.ema_epsilon;
    j["x_low"] = prof.x_low;
    j["x_star"] = prof.x_star;
    j["x_high"] = prof.x_high;
    j["w_high_to_low"] = prof.w_high_to_low;
    j["w_low_to_high"] = prof.w_low_to_high;
    j["rate_high_to_low"] = standard.rate_high_to_low;
    j["rate_low_to_high"] = standard.rate_low_to_high;
    j["rate_high_to_low_textbook_prefactor"] = textbook.rate_high_to_low;
    j["rate_low_to_high_textbook_prefactor"] = textbook.rate_low_to_high;
    sink.write("kramers.json", j.dump(2) + "\n");
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_rates(const spirits::RunConfig& cfg, ArtifactSink& sink, int threads) {
    const double eps = cfg.sim.ema_epsilon;
    const std::vector<double> sigmas = spirits::sigma_grid_for(
        cfg.map, eps, cfg.rates.n_sigma, cfg.rates.t_min, cfg.rates.t_max);

    std::vector<spirits::RateEstimate> estimates;
    bool any_insufficient = false;
    const std::int64_t chunk = std::clamp<std::int64_t>(
        static_cast<std::int64_t>(100.0 * cfg.rates.t_max), 1000000,
        cfg.rates.max_steps_per_sigma);
    for (std::size_t j = 0; j < sigmas.size(); ++j) {
        spirits::SimConfig sim = cfg.sim;
        sim.shocks.sigma = sigmas[j];
        sim.shocks.seed = spirits::mix64(cfg.master_seed, j);
        sim.ema_epsilon = eps;
        const auto res = spirits::residence_times(sim, cfg.rates.n_min_transitions,
                                                  cfg.rates.max_steps_per_sigma, threads, chunk);
        any_insufficient = any_insufficient || res.estimate.insufficient;
        estimates.push_back(res.estimate);
    }

    std::ostringstream csv;
    csv << "sigma,inv_sigma2,direction,mean_T,std_err_logT,n_transitions\n";
    for (const auto& e : estimates) {
        for (spirits::Direction d :
             {spirits::Direction::high_to_low, spirits::Direction::low_to_high}) {
            csv << spirits::fmt_double(e.sigma) << ','
                << spirits::fmt_double(1.0 / (e.sigma * e.sigma)) << ','
                << (d == spirits::Direction::high_to_low ? "high_to_low" : "low_to_high") << ','
                << spirits::fmt_double(e.mean_T(d)) << ','
                << spirits::fmt_double(e.std_err_logT(d)) << ',' << e.n_transitions(d) << '\n';
        }
    }
    sink.write("rates.csv", csv.str());

    const spirits::PotentialProfile prof = spirits::potential(cfg.map, 100000);
    ordered_json fits = ordered_json::array();
    bool fit_failed = false;
    for (spirits::Direction d :
         {spirits::Direction::high_to_low, spirits::Direction::low_to_high}) {
        ordered_json f;
        f["direction"] = d == spirits::Direction::high_to_low ? "high_to_low" : "low_to_high";
        const double w_kram = 2.0 *
            (d == spirits::Direction::high_to_low ? prof.w_high_to_low : prof.w_low_to_high) / eps;
        try {
            const spirits::BarrierFit fit =
                spirits::arrhenius_fit(estimates, d, cfg.rates.n_min_transitions);
            f["w_fit"] = fit.w_fit;
            f["intercept"] = fit.intercept;
            f["r_squared"] = fit.r_squared;
            f["w_kramers"] = w_kram;
            f["ratio"] = w_kram / fit.w_fit;
        } catch (const spirits::FitError& err) {
            f["error"] = err.what();
            f["w_kramers"] = w_kram;
            fit_failed = true;
        }
        fits.push_back(f);
    }
    sink.write("fit.json", fits.dump(2) + "\n");
    return (any_insufficient || fit_failed) ? 4 : 0;
}

int cmd_inflation(const spirits::RunConfig& cfg, ArtifactSink& sink) {
    const spirits::Trajectory traj = spirits::simulate(cfg.sim);
    const spirits::PolicyParams policy = spirits::make_policy(
        cfg.phi_taylor, cfg.prefs.beta, cfg.map, cfg.crisis_prob);
    const spirits::InflationPath path = spirits::inflation_path(
        traj, policy, cfg.map, cfg.shocks, cfg.inflation_truncation);

    std::ostringstream csv;
    csv << "t,pi,r\n";
    for (std::size_t t = 0; t < path.pi.size(); ++t) {
        csv << (t + 1) << ',' << spirits::fmt_double(path.pi[t]) << ','
            << spirits::fmt_double(path.r[t]) << '\n';
    }
    sink.write("inflation.csv", csv.str());

    double mean_pi = 0.0;
    for (double p : path.pi) mean_pi += p;
    if (!path.pi.empty()) mean_pi /= static_cast<double>(path.pi.size());
    ordered_json j;
    j["kappa_high"] = policy.kappa_high;
    j["delta_pi_crisis"] = path.delta_pi_crisis;
    j["mean_pi"] = mean_pi;
    sink.write("inflation_summary.json", j.dump(2) + "\n");
    return 0;
}

std::vector<std::pair<std::string, std::string>> parse_extra_overrides(
    const std::vector<std::string>& extras) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& raw : extras) {
        if (raw.rfind("--", 0) != 0)
            throw spirits::ConfigError("unrecognised argument `" + raw + "`");
        const std::string body = raw.substr(2);
        const auto eq = body.find('=');
        if (eq == std::string::npos || body.find('.') == std::string::npos || eq == 0)
            throw spirits::ConfigError(
                "unrecognised flag `" + raw + "` (overrides use --section.key=value)");
        out.emplace_back(body.substr(0, eq), body.substr(eq + 1));
    }
    return out;
}

// Splits `--section.key=value` override tokens from the argument list before
// option parsing; the dot would otherwise be taken for subcommand-option
// notation when the section shares its name with a subcommand.
bool is_override_token(const std::string& arg) {
    if (arg.rfind("--", 0) != 0) return false;
    const auto eq = arg.find('=');
    if (eq == std::string::npos || eq <= 2) return false;
    const auto dot = arg.find('.');
    return dot != std::string::npos && dot > 2 && dot < eq;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"spirits: multi-household economy simulator with confidence feedback"};
    app.require_subcommand(1);
    app.allow_extras();

    CliOptions opts;
    std::optional<std::uint64_t> seed_flag;
    std::optional<std::string> threads_flag;

    app.add_option("--config", opts.config_file, "Config file (key = value, [section] headers)");
    app.add_option("--seed", seed_flag, "Master seed (overrides config)");
    app.add_option("--threads", threads_flag, "Worker threads (positive integer or `auto`)");
    app.add_option("--out", opts.out_dir, "Output directory (default: current directory)");

    const std::vector<std::string> commands = {
        "micro", "fixed-points", "phase-diagram", "simulate", "rates", "kramers",
        "inflation", "defaults"};
    const std::map<std::string, std::string> descriptions = {
        {"micro", "Solve the per-period equilibrium for (f, z)"},
        {"fixed-points", "Roots of G(c)=c with stability and phase"},
        {"phase-diagram", "Phase scan over a (c_0, theta) grid -> phase.csv"},
        {"simulate", "Trajectory + histogram + stats for the consumption map"},
        {"rates", "Residence times, Arrhenius fits and Kramers comparison"},
        {"kramers", "Potential barriers and continuous-limit escape rates"},
        {"inflation", "Inflation path under the Taylor rule"},
        {"defaults", "Print the default configuration"},
    };
    for (const auto& name : commands) {
        auto* sub = app.add_subcommand(name, descriptions.at(name));
        sub->allow_extras();
        sub->fallthrough();
    }

    std::vector<std::string> override_tokens;
    std::vector<std::string> cli_args;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        (is_override_token(arg) ? override_tokens : cli_args).push_back(arg);
    }

    try {
        // CLI11 expects the argument list reversed, as it parses by popping.
        std::vector<std::string> reversed(cli_args.rbegin(), cli_args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : static_cast<int>(spirits::ExitCode::config_error);
    }

    const std::string command = app.get_subcommands().front()->get_name();

    try {
        if (command == "defaults") {
            std::cout << spirits::dump_defaults();
            return 0;
        }

        auto extras = app.remaining();
        const auto sub_extras = app.get_subcommands().front()->remaining();
        extras.insert(extras.end(), sub_extras.begin(), sub_extras.end());
        extras.insert(extras.end(), override_tokens.begin(), override_tokens.end());
        auto overrides = parse_extra_overrides(extras);
        if (seed_flag) overrides.emplace_back("seed", std::to_string(*seed_flag));
        if (threads_flag) overrides.emplace_back("threads", *threads_flag);

        const spirits::RunConfig cfg = spirits::parse_config(opts.config_file, overrides);
        const int threads = spirits::resolve_threads(cfg.threads);
        ArtifactSink sink(opts.out_dir, command, cfg);

        int status = 0;
        if (command == "micro") status = cmd_micro(cfg, sink);
        else if (command == "fixed-points") status = cmd_fixed_points(cfg, sink);
        else if (command == "phase-diagram") status = cmd_phase_diagram(cfg, sink, threads);
        else if (command == "simulate") status = cmd_simulate(cfg, sink);
        else if (command == "rates") status = cmd_rates(cfg, sink, threads);
        else if (command == "kramers") status = cmd_kramers(cfg, sink);
        else if (command == "inflation") status = cmd_inflation(cfg, sink);
        sink.write_manifest();
        return status;
    } catch (const spirits::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(spirits::ExitCode::config_error);
    } catch (const spirits::InsufficientTransitions& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(spirits::ExitCode::insufficient_transitions);
    } catch (const spirits::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(spirits::ExitCode::domain_error);
    } catch (const spirits::PhaseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(spirits::ExitCode::domain_error);
    } catch (const spirits::BasinError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(spirits::ExitCode::domain_error);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(spirits::ExitCode::numeric_failure);
    }
}
