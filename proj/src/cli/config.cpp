#include "qoptics/cli/config.hpp"

#include <algorithm>
#include <charconv>
#include <numbers>
#include <variant>

namespace qoptics::cli {

namespace {

using IntField = std::optional<int> ScenarioConfig::*;
using RealField = std::optional<double> ScenarioConfig::*;
using SeedField = std::optional<std::uint64_t> ScenarioConfig::*;
using TextField = std::optional<std::string> ScenarioConfig::*;
using Field = std::variant<IntField, RealField, SeedField, TextField>;

struct KeySpec {
    std::string_view name;
    Field field;
};

const std::vector<KeySpec>& key_table() {
    static const std::vector<KeySpec> table = {
        {"dim", &ScenarioConfig::dim},
        {"alpha", &ScenarioConfig::alpha},
        {"n_th", &ScenarioConfig::n_th},
        {"r", &ScenarioConfig::r},
        {"theta_sq", &ScenarioConfig::theta_sq},
        {"m_filter", &ScenarioConfig::m_filter},
        {"omega", &ScenarioConfig::omega},
        {"omega0", &ScenarioConfig::omega0},
        {"g", &ScenarioConfig::g},
        {"J", &ScenarioConfig::J},
        {"kappa", &ScenarioConfig::kappa},
        {"gamma", &ScenarioConfig::gamma},
        {"theta_bs", &ScenarioConfig::theta_bs},
        {"dt", &ScenarioConfig::dt},
        {"t_max", &ScenarioConfig::t_max},
        {"n_traj", &ScenarioConfig::n_traj},
        {"master_seed", &ScenarioConfig::master_seed},
        {"out_path", &ScenarioConfig::out_path},
        {"n", &ScenarioConfig::n},
        {"m", &ScenarioConfig::m},
        {"tol", &ScenarioConfig::tol},
        {"threads", &ScenarioConfig::threads},
    };
    return table;
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(std::string_view text, const std::string& where, std::string_view key) {
    T value{};
    const char* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end || text.empty()) {
        throw ConfigError(where + ": malformed number '" + std::string(text) + "' for key '" + std::string(key) +
                          "'");
    }
    return value;
}

struct Entry {
    std::string key;
    std::string value;
    std::string where;
};

// "line N" or "flag --key=value"
Entry split_entry(std::string_view body, std::string where) {
    const auto eq = body.find('=');
    if (eq == std::string_view::npos) {
        throw ConfigError(where + ": expected key=value, got '" + std::string(body) + "'");
    }
    return {std::string(trim(body.substr(0, eq))), std::string(trim(body.substr(eq + 1))), std::move(where)};
}

void assign(ScenarioConfig& config, const Entry& e) {
    const auto& table = key_table();
    const auto it = std::find_if(table.begin(), table.end(), [&](const KeySpec& k) { return k.name == e.key; });
    if (it == table.end()) {
        throw ConfigError(e.where + ": unknown key '" + e.key + "'");
    }
    std::visit(
        [&](auto field) {
            using Member = std::remove_reference_t<decltype(config.*field)>;
            using Value = typename Member::value_type;
            if constexpr (std::is_same_v<Value, std::string>) {
                if (e.value.empty()) {
                    throw ConfigError(e.where + ": empty value for key '" + e.key + "'");
                }
                config.*field = e.value;
            } else {
                config.*field = parse_number<Value>(e.value, e.where, e.key);
            }
        },
        it->field);
    if (std::find(config.keys.begin(), config.keys.end(), e.key) == config.keys.end()) {
        config.keys.push_back(e.key);
    }
}

bool contains(const std::vector<std::string_view>& list, std::string_view key) {
    return std::find(list.begin(), list.end(), key) != list.end();
}

}  // namespace

const std::vector<ScenarioInfo>& scenario_catalog() {
    static const std::vector<ScenarioInfo> catalog = {
        {Scenario::CoherentDist, "coherent-dist", "coherent (or number-state-filtered) amplitudes and P_n",
         {"dim", "alpha"}, {"m_filter", "out_path"}},
        {Scenario::ThermalDist, "thermal-dist", "thermal photon-number distribution", {"dim", "n_th"}, {"out_path"}},
        {Scenario::G2Table, "g2-table", "<a^dag a> and g2(0) of |4>, coherent(sqrt 3), thermal(0.85)", {"dim"},
         {"out_path"}},
        {Scenario::JcRabi, "jc-rabi", "Jaynes-Cummings Rabi oscillation from |e,n>", {"dim", "g", "dt", "t_max"},
         {"n", "omega", "omega0", "out_path"}},
        {Scenario::CollapseRevival, "collapse-revival", "atomic inversion with a coherent field",
         {"dim", "alpha", "g", "dt", "t_max"}, {"omega", "omega0", "out_path"}},
        {Scenario::CoupledCavities, "coupled-cavities", "photon exchange between two coupled cavities from |1,0>",
         {"dim", "J", "dt", "t_max"}, {"omega", "out_path"}},
        {Scenario::Beamsplitter, "beamsplitter", "beam-splitter output distribution for |n,m>", {"dim", "theta_bs"},
         {"n", "m", "out_path"}},
        {Scenario::MziSweep, "mzi-sweep", "Mach-Zehnder fringe for |1,0>, phi = 0..2pi step pi/20", {"dim"},
         {"out_path"}},
        {Scenario::Lindblad, "lindblad", "master-equation decay of |e,0> (RK4)",
         {"dim", "g", "kappa", "gamma", "dt", "t_max"}, {"omega", "omega0", "out_path"}},
        {Scenario::Mcwf, "mcwf", "quantum-jump ensemble versus the master equation",
         {"dim", "g", "kappa", "gamma", "dt", "t_max", "n_traj", "master_seed"},
         {"omega", "omega0", "threads", "out_path"}},
        {Scenario::TruncationReport, "truncation-report",
         "norm deficit versus dimension for a coherent (alpha) or squeezed (r) state", {"dim"},
         {"alpha", "r", "theta_sq", "tol", "out_path"}},
    };
    return catalog;
}

const ScenarioInfo& scenario_info(Scenario s) {
    for (const ScenarioInfo& info : scenario_catalog()) {
        if (info.scenario == s) {
            return info;
        }
    }
    throw ConfigError("unknown scenario");
}

std::optional<Scenario> parse_scenario(std::string_view name) {
    for (const ScenarioInfo& info : scenario_catalog()) {
        if (info.name == name) {
            return info.scenario;
        }
    }
    return std::nullopt;
}

ScenarioConfig parse_config(std::string_view text, const std::vector<std::string>& overrides) {
    std::optional<Entry> scenario_entry;
    std::vector<Entry> entries;

    auto take = [&](Entry e) {
        if (e.key == "scenario") {
            scenario_entry = std::move(e);
        } else {
            entries.push_back(std::move(e));
        }
    };

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (!line.empty()) {
            take(split_entry(line, "line " + std::to_string(line_no)));
        }
    }
    for (const std::string& flag : overrides) {
        std::string_view body = flag;
        if (body.starts_with("--")) {
            body.remove_prefix(2);
        }
        take(split_entry(body, "flag " + flag));
    }

    if (!scenario_entry) {
        throw ConfigError("missing required key 'scenario'");
    }
    const auto scenario = parse_scenario(scenario_entry->value);
    if (!scenario) {
        throw ConfigError(scenario_entry->where + ": unknown scenario '" + scenario_entry->value + "'");
    }

    ScenarioConfig config;
    config.scenario = *scenario;
    const ScenarioInfo& info = scenario_info(*scenario);
    for (const Entry& e : entries) {
        assign(config, e);
        if (!contains(info.required, e.key) && !contains(info.optional, e.key)) {
            throw ConfigError(e.where + ": key '" + e.key + "' is not used by scenario '" + std::string(info.name) +
                              "'");
        }
    }
    for (std::string_view key : info.required) {
        if (std::find(config.keys.begin(), config.keys.end(), key) == config.keys.end()) {
            throw ConfigError("scenario '" + std::string(info.name) + "': missing required key '" +
                              std::string(key) + "'");
        }
    }
    if (config.scenario == Scenario::TruncationReport && config.alpha.has_value() == config.r.has_value()) {
        throw ConfigError("scenario 'truncation-report': set exactly one of 'alpha' or 'r'");
    }
    return config;
}

std::vector<ScenarioConfig> golden_configs() {
    const double pi = std::numbers::pi;
    auto make = [](Scenario s, std::vector<std::string> kv) {
        kv.insert(kv.begin(), "scenario=" + std::string(scenario_info(s).name));
        std::string text;
        for (const std::string& line : kv) {
            text += line + "\n";
        }
        return parse_config(text);
    };
    auto num = [](double x) {
        char buf[64];
        const auto res = std::to_chars(buf, buf + sizeof buf, x);
        return std::string(buf, res.ptr);
    };
    return {
        make(Scenario::CoherentDist, {"dim=10", "alpha=0.6"}),
        make(Scenario::CoherentDist, {"dim=15", "alpha=0.8", "m_filter=4"}),
        make(Scenario::ThermalDist, {"dim=10", "n_th=0.5"}),
        make(Scenario::G2Table, {"dim=25"}),
        make(Scenario::TruncationReport, {"dim=15", "alpha=2"}),
        make(Scenario::TruncationReport, {"dim=20", "r=0.3", "theta_sq=" + num(pi / 4)}),
        make(Scenario::JcRabi, {"dim=10", "g=0.1", "dt=0.1", "t_max=30"}),
        make(Scenario::CollapseRevival, {"dim=50", "alpha=3", "g=0.1", "dt=0.1", "t_max=500"}),
        make(Scenario::CoupledCavities, {"dim=10", "J=0.1", "dt=0.1", "t_max=50"}),
        make(Scenario::Beamsplitter, {"dim=10", "theta_bs=" + num(pi / 4)}),
        make(Scenario::MziSweep, {"dim=10"}),
        make(Scenario::Lindblad, {"dim=10", "g=0.1", "kappa=0.05", "gamma=0", "dt=0.1", "t_max=150"}),
        make(Scenario::Mcwf, {"dim=10", "g=0.1", "kappa=0.05", "gamma=0", "dt=0.005", "t_max=150", "n_traj=500",
                              "master_seed=20240607"}),
    };
}

}  // namespace qoptics::cli
