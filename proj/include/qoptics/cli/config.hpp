#pragma once

// Scenario configuration: key=value files plus --key=value overrides.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qoptics/errors.hpp"

namespace qoptics::cli {

class ConfigError : public Error {
public:
    using Error::Error;
};

enum class Scenario {
    CoherentDist,
    ThermalDist,
    G2Table,
    JcRabi,
    CollapseRevival,
    CoupledCavities,
    Beamsplitter,
    MziSweep,
    Lindblad,
    Mcwf,
    TruncationReport,
};

struct ScenarioInfo {
    Scenario scenario;
    std::string_view name;
    std::string_view summary;
    std::vector<std::string_view> required;
    std::vector<std::string_view> optional;
};

/// The closed catalog, in listing order.
const std::vector<ScenarioInfo>& scenario_catalog();
const ScenarioInfo& scenario_info(Scenario s);
std::optional<Scenario> parse_scenario(std::string_view name);

struct ScenarioConfig {
    Scenario scenario = Scenario::CoherentDist;

    std::optional<int> dim;
    std::optional<double> alpha;
    std::optional<double> n_th;
    std::optional<double> r;
    std::optional<double> theta_sq;
    std::optional<int> m_filter;
    std::optional<double> omega;
    std::optional<double> omega0;
    std::optional<double> g;
    std::optional<double> J;
    std::optional<double> kappa;
    std::optional<double> gamma;
    std::optional<double> theta_bs;
    std::optional<double> dt;
    std::optional<double> t_max;
    std::optional<int> n_traj;
    std::optional<std::uint64_t> master_seed;
    std::optional<std::string> out_path;
    std::optional<int> n;        // input photon number (jc-rabi, beamsplitter)
    std::optional<int> m;        // mode-b input photons (beamsplitter)
    std::optional<double> tol;   // truncation tolerance
    std::optional<int> threads;  // mcwf worker threads, 0 = hardware

    /// Keys that were explicitly set, in first-set order.
    std::vector<std::string> keys;
};

/// Parses a config file body and then applies `overrides` ("--key=value" or
/// "key=value"), which take precedence. Rejects unknown keys, keys the
/// scenario does not use, malformed numbers and missing required keys.
ScenarioConfig parse_config(std::string_view text, const std::vector<std::string>& overrides = {});

/// Built-in configurations that reproduce every reference number; what
/// `check` runs. Some scenarios appear more than once (e.g. the filtered
/// coherent state is a coherent-dist variant).
std::vector<ScenarioConfig> golden_configs();

}  // namespace qoptics::cli
