#include "spirits/config.hpp"

#include "spirits/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace spirits {

namespace {

const std::vector<std::pair<std::string, std::string>>& default_table() {
    static const std::vector<std::pair<std::string, std::string>> table = {
        {"seed", "42"},
        {"threads", "auto"},
        {"map.c_min", "0.4"},
        {"map.c_max", "1.4"},
        {"map.c_0", "0.75"},
        {"map.theta", "5"},
        {"shocks.sigma", "0.6"},
        {"shocks.eta", "0.5"},
        {"micro.gamma", "1"},
        {"micro.varsigma", "1"},
        {"micro.phi", "1"},
        {"micro.beta", "0.99"},
        {"micro.alpha", "0.33333333333333333"},
        {"micro.zbar", "1"},
        {"micro.f", "1"},
        {"micro.z", "1"},
        {"policy.phi_taylor", "1.5"},
        {"policy.crisis_prob", "0"},
        {"sim.steps", "100000"},
        {"sim.burn_in", "10000"},
        {"sim.initial_c", "fixed-point-high"},
        {"sim.ema_epsilon", "1"},
        {"grid.c0_lo", "0"},
        {"grid.c0_hi", "1.6"},
        {"grid.n_c0", "200"},
        {"grid.theta_lo", "1"},
        {"grid.theta_hi", "10"},
        {"grid.n_theta", "200"},
        {"rates.n_sigma", "6"},
        {"rates.t_min", "200"},
        {"rates.t_max", "200000"},
        {"rates.n_min_transitions", "50"},
        {"rates.max_steps_per_sigma", "200000000"},
        {"inflation.truncation", "0"},
    };
    return table;
}

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

struct KvStore {
    std::map<std::string, std::string> values;
    std::vector<std::string> violations;

    bool known(const std::string& key) const { return values.count(key) > 0; }

    void set(const std::string& key, const std::string& value, const std::string& where) {
        if (!known(key)) {
            violations.push_back(where + ": unknown key `" + key + "`");
            return;
        }
        values[key] = value;
    }

    double get_double(const std::string& key) {
        const std::string& s = values.at(key);
        double v = 0.0;
        const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
        if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
            violations.push_back(key + ": `" + s + "` is not a number");
            return 0.0;
        }
        return v;
    }

    std::int64_t get_int(const std::string& key) {
        const std::string& s = values.at(key);
        std::int64_t v = 0;
        const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
        if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
            violations.push_back(key + ": `" + s + "` is not an integer");
            return 0;
        }
        return v;
    }

    std::uint64_t get_u64(const std::string& key) {
        const std::string& s = values.at(key);
        std::uint64_t v = 0;
        const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
        if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
            violations.push_back(key + ": `" + s + "` is not an unsigned integer");
            return 0;
        }
        return v;
    }

    void require(bool ok, const std::string& key, const std::string& constraint) {
        if (!ok) violations.push_back(key + ": " + constraint);
    }
};

void parse_file_into(KvStore& store, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file " + path);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const std::string where = path + ":" + std::to_string(lineno);
        if (line.front() == '[') {
            if (line.back() != ']') {
                store.violations.push_back(where + ": malformed section header");
                continue;
            }
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            store.violations.push_back(where + ": expected `key = value`");
            continue;
        }
        std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (!section.empty() && key.find('.') == std::string::npos)
            key = section + "." + key;
        store.set(key, value, where);
    }
}

} // namespace

RunConfig parse_config(const std::optional<std::string>& file_path,
                       const std::vector<std::pair<std::string, std::string>>& overrides) {
    KvStore store;
    for (const auto& [k, v] : default_table()) store.values[k] = v;

    if (file_path) parse_file_into(store, *file_path);
    for (const auto& [k, v] : overrides) store.set(k, v, "flag --" + k);

    RunConfig cfg;
    cfg.master_seed = store.get_u64("seed");

    const std::string threads = store.values.at("threads");
    if (threads == "auto") {
        cfg.threads = 0;
    } else {
        std::int64_t t = 0;
        const auto res = std::from_chars(threads.data(), threads.data() + threads.size(), t);
        if (res.ec != std::errc{} || res.ptr != threads.data() + threads.size() || t < 1)
            store.violations.push_back("threads: must be a positive integer or `auto`");
        else
            cfg.threads = static_cast<int>(t);
    }

    cfg.map.c_min = store.get_double("map.c_min");
    cfg.map.c_max = store.get_double("map.c_max");
    cfg.map.c_0 = store.get_double("map.c_0");
    cfg.map.theta = store.get_double("map.theta");
    store.require(cfg.map.c_min > 0.0, "map.c_min", "must be > 0");
    store.require(cfg.map.c_max > cfg.map.c_min, "map.c_max", "must exceed map.c_min");
    store.require(cfg.map.c_0 > 0.0, "map.c_0", "must be > 0");
    store.require(cfg.map.theta > 0.0, "map.theta", "must be > 0");

    cfg.shocks.sigma = store.get_double("shocks.sigma");
    cfg.shocks.eta = store.get_double("shocks.eta");
    store.require(cfg.shocks.sigma >= 0.0, "shocks.sigma", "must be >= 0");
    store.require(cfg.shocks.eta >= 0.0 && cfg.shocks.eta < 1.0, "shocks.eta", "must be in [0,1)");
    cfg.shocks.seed = cfg.master_seed;

    cfg.prefs.gamma = store.get_double("micro.gamma");
    cfg.prefs.varsigma = store.get_double("micro.varsigma");
    cfg.prefs.phi = store.get_double("micro.phi");
    cfg.prefs.beta = store.get_double("micro.beta");
    cfg.firm.alpha = store.get_double("micro.alpha");
    cfg.firm.zbar = store.get_double("micro.zbar");
    cfg.micro.f = store.get_double("micro.f");
    cfg.micro.z = store.get_double("micro.z");
    store.require(cfg.prefs.gamma > 0.0, "micro.gamma", "must be > 0");
    store.require(cfg.prefs.varsigma > 0.0 && cfg.prefs.varsigma <= 1.0, "micro.varsigma", "must be in (0,1]");
    store.require(cfg.prefs.phi > 0.0, "micro.phi", "must be > 0");
    store.require(cfg.prefs.beta > 0.0 && cfg.prefs.beta < 1.0, "micro.beta", "must be in (0,1)");
    store.require(cfg.firm.alpha > 0.0 && cfg.firm.alpha < 1.0, "micro.alpha", "must be in (0,1)");
    store.require(cfg.firm.zbar > 0.0, "micro.zbar", "must be > 0");
    store.require(cfg.micro.f > 0.0, "micro.f", "must be > 0");
    store.require(cfg.micro.z > 0.0, "micro.z", "must be > 0");

    cfg.phi_taylor = store.get_double("policy.phi_taylor");
    cfg.crisis_prob = store.get_double("policy.crisis_prob");
    store.require(cfg.phi_taylor > 1.0, "policy.phi_taylor", "must exceed 1");
    store.require(cfg.crisis_prob >= 0.0 && cfg.crisis_prob < 1.0, "policy.crisis_prob", "must be in [0,1)");

    cfg.sim.steps = store.get_int("sim.steps");
    cfg.sim.burn_in = store.get_int("sim.burn_in");
    cfg.sim.ema_epsilon = store.get_double("sim.ema_epsilon");
    store.require(cfg.sim.steps >= 1, "sim.steps", "must be >= 1");
    store.require(cfg.sim.burn_in >= 0 && cfg.sim.burn_in < cfg.sim.steps, "sim.burn_in",
                  "must satisfy 0 <= burn_in < steps");
    store.require(cfg.sim.ema_epsilon > 0.0 && cfg.sim.ema_epsilon <= 1.0, "sim.ema_epsilon",
                  "must be in (0,1]");

    const std::string init = store.values.at("sim.initial_c");
    if (init == "fixed-point-high") {
        cfg.sim.initial = InitialCondition::fixed_point_high;
    } else if (init == "fixed-point-low") {
        cfg.sim.initial = InitialCondition::fixed_point_low;
    } else {
        double v = 0.0;
        const auto res = std::from_chars(init.data(), init.data() + init.size(), v);
        if (res.ec != std::errc{} || res.ptr != init.data() + init.size() || !(v > 0.0))
            store.violations.push_back(
                "sim.initial_c: must be a positive number, `fixed-point-high` or `fixed-point-low`");
        cfg.sim.initial = InitialCondition::value;
        cfg.sim.initial_value = v;
    }

    cfg.grid.c0_lo = store.get_double("grid.c0_lo");
    cfg.grid.c0_hi = store.get_double("grid.c0_hi");
    cfg.grid.n_c0 = static_cast<int>(store.get_int("grid.n_c0"));
    cfg.grid.theta_lo = store.get_double("grid.theta_lo");
    cfg.grid.theta_hi = store.get_double("grid.theta_hi");
    cfg.grid.n_theta = static_cast<int>(store.get_int("grid.n_theta"));
    store.require(cfg.grid.c0_hi > cfg.grid.c0_lo && cfg.grid.c0_lo >= 0.0, "grid.c0_hi",
                  "range must be non-negative and increasing");
    store.require(cfg.grid.theta_lo > 0.0 && cfg.grid.theta_hi > cfg.grid.theta_lo, "grid.theta_hi",
                  "range must be positive and increasing");
    store.require(cfg.grid.n_c0 >= 2, "grid.n_c0", "must be >= 2");
    store.require(cfg.grid.n_theta >= 2, "grid.n_theta", "must be >= 2");

    cfg.rates.n_sigma = static_cast<int>(store.get_int("rates.n_sigma"));
    cfg.rates.t_min = store.get_double("rates.t_min");
    cfg.rates.t_max = store.get_double("rates.t_max");
    cfg.rates.n_min_transitions = store.get_int("rates.n_min_transitions");
    cfg.rates.max_steps_per_sigma = store.get_int("rates.max_steps_per_sigma");
    store.require(cfg.rates.n_sigma >= 2, "rates.n_sigma", "must be >= 2");
    store.require(cfg.rates.t_min > 1.0 && cfg.rates.t_max > 2.0 * cfg.rates.t_min, "rates.t_max",
                  "must exceed 2 * rates.t_min (> 1)");
    store.require(cfg.rates.n_min_transitions >= 1, "rates.n_min_transitions", "must be >= 1");
    store.require(cfg.rates.max_steps_per_sigma >= 1000, "rates.max_steps_per_sigma",
                  "must be >= 1000");

    cfg.inflation_truncation = static_cast<int>(store.get_int("inflation.truncation"));
    store.require(cfg.inflation_truncation >= 0, "inflation.truncation", "must be >= 0 (0 = auto)");

    if (!store.violations.empty()) {
        std::ostringstream msg;
        msg << "configuration errors:";
        for (const auto& v : store.violations) msg << "\n  - " << v;
        throw ConfigError(msg.str());
    }

    cfg.sim.map = cfg.map;
    cfg.sim.shocks = cfg.shocks;
    return cfg;
}

std::map<std::string, std::string> RunConfig::flatten() const {
    std::map<std::string, std::string> out;
    out["seed"] = std::to_string(master_seed);
    out["threads"] = threads == 0 ? "auto" : std::to_string(threads);
    out["map.c_min"] = fmt_double(map.c_min);
    out["map.c_max"] = fmt_double(map.c_max);
    out["map.c_0"] = fmt_double(map.c_0);
    out["map.theta"] = fmt_double(map.theta);
    out["shocks.sigma"] = fmt_double(shocks.sigma);
    out["shocks.eta"] = fmt_double(shocks.eta);
    out["micro.gamma"] = fmt_double(prefs.gamma);
    out["micro.varsigma"] = fmt_double(prefs.varsigma);
    out["micro.phi"] = fmt_double(prefs.phi);
    out["micro.beta"] = fmt_double(prefs.beta);
    out["micro.alpha"] = fmt_double(firm.alpha);
    out["micro.zbar"] = fmt_double(firm.zbar);
    out["micro.f"] = fmt_double(micro.f);
    out["micro.z"] = fmt_double(micro.z);
    out["policy.phi_taylor"] = fmt_double(phi_taylor);
    out["policy.crisis_prob"] = fmt_double(crisis_prob);
    out["sim.steps"] = std::to_string(sim.steps);
    out["sim.burn_in"] = std::to_string(sim.burn_in);
    switch (sim.initial) {
        case InitialCondition::fixed_point_high: out["sim.initial_c"] = "fixed-point-high"; break;
        case InitialCondition::fixed_point_low: out["sim.initial_c"] = "fixed-point-low"; break;
        case InitialCondition::value: out["sim.initial_c"] = fmt_double(sim.initial_value); break;
    }
    out["sim.ema_epsilon"] = fmt_double(sim.ema_epsilon);
    out["grid.c0_lo"] = fmt_double(grid.c0_lo);
    out["grid.c0_hi"] = fmt_double(grid.c0_hi);
    out["grid.n_c0"] = std::to_string(grid.n_c0);
    out["grid.theta_lo"] = fmt_double(grid.theta_lo);
    out["grid.theta_hi"] = fmt_double(grid.theta_hi);
    out["grid.n_theta"] = std::to_string(grid.n_theta);
    out["rates.n_sigma"] = std::to_string(rates.n_sigma);
    out["rates.t_min"] = fmt_double(rates.t_min);
    out["rates.t_max"] = fmt_double(rates.t_max);
    out["rates.n_min_transitions"] = std::to_string(rates.n_min_transitions);
    out["rates.max_steps_per_sigma"] = std::to_string(rates.max_steps_per_sigma);
    out["inflation.truncation"] = std::to_string(inflation_truncation);
    return out;
}

std::string dump_defaults() {
    std::ostringstream out;
    std::string section;
    for (const auto& [key, value] : default_table()) {
        const auto dot = key.find('.');
        const std::string sec = dot == std::string::npos ? "" : key.substr(0, dot);
        const std::string name = dot == std::string::npos ? key : key.substr(dot + 1);
        if (sec != section) {
            section = sec;
            out << "\n[" << section << "]\n";
        }
        out << name << " = " << value << "\n";
    }
    return out.str();
}

} // namespace spirits
