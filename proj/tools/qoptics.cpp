// Command-line front end: list, run, check.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "qoptics/cli/config.hpp"
#include "qoptics/cli/scenarios.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw qoptics::cli::ConfigError("cannot read config file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int run_check(const std::string& out_dir) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    std::map<std::string, int> seen;
    int failed = 0;
    for (qoptics::cli::ScenarioConfig config : qoptics::cli::golden_configs()) {
        std::string name(qoptics::cli::scenario_info(config.scenario).name);
        const int count = ++seen[name];
        if (count > 1) {
            name += "-" + std::to_string(count);
        }
        config.out_path = (fs::path(out_dir) / (name + ".csv")).string();
        failed += qoptics::cli::execute(config, std::cout) != 0 ? 1 : 0;
    }
    std::cout << (failed == 0 ? "all golden scenarios passed" : std::to_string(failed) + " scenario(s) failed")
              << '\n';
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum-optics toolkit: state generation, unitary and open-system dynamics, interferometry"};
    app.require_subcommand(1);

    app.add_subcommand("list", "list scenarios and their keys");

    auto* run = app.add_subcommand("run", "run one scenario; extra --key=value flags override the config file");
    std::string config_path;
    run->add_option("--config", config_path, "key=value config file")->required();
    run->allow_extras();

    auto* check = app.add_subcommand("check", "run every built-in reference scenario");
    std::string out_dir = ".";
    check->add_option("--out-dir", out_dir, "directory for the CSV outputs");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand("list")) {
            qoptics::cli::print_catalog(std::cout);
            return 0;
        }
        if (app.got_subcommand("run")) {
            const auto config = qoptics::cli::parse_config(read_file(config_path), run->remaining());
            return qoptics::cli::execute(config, std::cout);
        }
        return run_check(out_dir);
    } catch (const qoptics::cli::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
