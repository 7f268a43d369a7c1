// Acceptance gate: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "qoptics/cli/config.hpp"
#include "qoptics/cli/scenarios.hpp"
#include "qoptics/dissipative.hpp"
#include "qoptics/interferometry.hpp"
#include "qoptics/numerics.hpp"
#include "qoptics/observables.hpp"
#include "qoptics/stategen.hpp"

using namespace qoptics;

namespace {

constexpr double kPi = std::numbers::pi;

struct Check {
    std::string what;
    double value;
    double limit;
    bool ok;
};

class Criterion {
public:
    // value <= limit
    void at_most(std::string what, double value, double limit) {
        checks_.push_back({std::move(what), value, limit, value <= limit});
    }
    void at_least(std::string what, double value, double limit) {
        checks_.push_back({std::move(what), value, limit, value >= limit});
    }
    bool passed() const {
        for (const Check& c : checks_) {
            if (!c.ok) {
                return false;
            }
        }
        return !checks_.empty();
    }
    const std::vector<Check>& checks() const { return checks_; }

private:
    std::vector<Check> checks_;
};

double max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

StateVector jc_ket(const FockSpace& f, int atom, int n) { return basis_state(tensor(QubitSpace{}, f), {atom, n}); }

ModelParams jc_params(double g, double kappa = 0.0, double gamma = 0.0) {
    ModelParams p;
    p.g = g;
    p.kappa = kappa;
    p.gamma = gamma;
    return p;
}

void states(Criterion& c) {
    const double coh_ref[] = {0.8353, 0.5012, 0.2126, 0.0737, 0.0221, 0.0059, 0.0015, 0.0003, 0.0001, 0.0000};
    const StateVector coh = coherent_state(FockSpace(10), 0.6);
    double dev = 0.0;
    for (int n = 0; n < 10; ++n) {
        dev = std::max(dev, std::abs(coh[n] - coh_ref[n]));
    }
    c.at_most("coherent(d=10, alpha=0.6) amplitudes", dev, 5e-5);

    const double th_ref[] = {0.6667, 0.2222, 0.0741, 0.0247, 0.0082, 0.0027, 0.0009, 0.0003, 0.0001, 0.0000};
    const DensityMatrix th = thermal_state(FockSpace(10), 0.5);
    dev = 0.0;
    for (int n = 0; n < 10; ++n) {
        dev = std::max(dev, std::abs(th(n, n) - th_ref[n]));
    }
    c.at_most("thermal(d=10, n_th=0.5) diagonal", dev, 5e-5);

    const StateVector sq = squeezed_vacuum(FockSpace(20), 0.3, kPi / 4);
    c.at_most("squeezed(d=20, r=0.3, theta=pi/4) leading amplitudes",
              std::max(std::abs(sq[0] - 0.9781), std::abs(sq[2] - Complex(-0.1425, -0.1425))), 1e-4);

    const double ns_ref[] = {0.7275, 0.5820, 0.3292, 0.1521, 0.0};
    const StateVector ns = nsfcs(FockSpace(15), 0.8, 4);
    dev = 0.0;
    for (int n = 0; n < 5; ++n) {
        dev = std::max(dev, std::abs(ns[n] - ns_ref[n]));
    }
    c.at_most("NSFCS(d=15, alpha=0.8, m=4) amplitudes", dev, 1e-4);
}

void truncation(Criterion& c) {
    c.at_most("|norm(coherent(d=10, alpha=2)) - 0.9959|", std::abs(norm(coherent_state(FockSpace(10), 2.0)) - 0.9959),
              5e-4);
    c.at_least("norm(coherent(d=15, alpha=2))", norm(coherent_state(FockSpace(15), 2.0)), 0.99999);
}

void observables(Criterion& c) {
    c.at_most("<a^dag a> of |4>", std::abs(mean_photon_number(number_state(FockSpace(10), 4)) - 4.0), 0.0);
    c.at_most("<a^dag a> of coherent(sqrt 3), d=20",
              std::abs(mean_photon_number(coherent_state(FockSpace(20), std::sqrt(3.0))) - 3.0), 1e-4);
    c.at_most("<a^dag a> of thermal(0.85), d=20",
              std::abs(mean_photon_number(thermal_state(FockSpace(20), 0.85)) - 0.85), 1e-3);
    c.at_most("g2(0) of |4>", std::abs(g2_zero(number_state(FockSpace(10), 4)) - 0.75), 1e-9);
    c.at_most("g2(0) of coherent(sqrt 3), d=20",
              std::abs(g2_zero(coherent_state(FockSpace(20), std::sqrt(3.0))) - 1.0), 1e-3);
    c.at_most("g2(0) of thermal(0.85), d=25", std::abs(g2_zero(thermal_state(FockSpace(25), 0.85)) - 2.0), 5e-3);
}

void jc_rabi(Criterion& c) {
    const FockSpace f(10);
    const TimeGrid grid(0.1, 30.0);
    const TimeSeries ts = evolve(jc_ket(f, 0, 4), jc_hamiltonian(f, jc_params(0.1)), grid,
                                 {{"P_e", jc_ket(f, 0, 4)}, {"P_g", jc_ket(f, 1, 5)}});
    double dev = 0.0;
    for (int k = 0; k < grid.samples(); ++k) {
        dev = std::max(dev, std::abs(ts.at(k, 0) - std::pow(std::cos(0.1 * grid.time(k) * std::sqrt(5.0)), 2)));
    }
    c.at_most("max |P_e - cos^2(0.1 t sqrt5)|", dev, 1e-6);
    c.at_least("P_g at the sample nearest 7.02", ts.at(grid.nearest(kPi / (0.2 * std::sqrt(5.0))), 1), 0.999);
}

void collapse_revival(Criterion& c) {
    const FockSpace f(50);
    const TimeGrid grid(0.1, 500.0);
    const Operator h = jc_hamiltonian(f, jc_params(0.1));
    const StateVector psi0 = tensor_state(excited_state(), normalize(coherent_state(f, 3.0)));
    const TimeSeries ts =
        evolve_expectation(psi0, h, grid, tensor_op(atomic_operators().sigma_z, Operator::identity(f)), "W");
    double dev = 0.0;
    double plateau = 0.0;
    int count = 0;
    for (int k = 0; k < grid.samples(); ++k) {
        const double t = grid.time(k);
        dev = std::max(dev, std::abs(ts.at(k, 0) - atomic_inversion_analytic(3.0, 0.1, t, 49)));
        if (t >= 20.0 - 1e-9 && t <= 40.0 + 1e-9) {
            plateau += std::abs(ts.at(k, 0));
            ++count;
        }
    }
    c.at_most("max |W - series(n_max=49)|", dev, 1e-3);
    c.at_most("mean |W| on [20, 40]", plateau / count, 0.05);
}

void coupled_cavities(Criterion& c) {
    const FockSpace f(10);
    ModelParams p;
    p.J = 0.1;
    const Operator h = coupled_cavity_hamiltonian(f, p);
    const TwoModeSpace modes(f, f);
    const TimeGrid grid(0.1, 50.0);
    const TimeSeries ts = evolve(modes.ket(1, 0), h, grid, {{"P10", modes.ket(1, 0)}, {"P01", modes.ket(0, 1)}});
    double dev = 0.0;
    for (int k = 0; k < grid.samples(); ++k) {
        dev = std::max(dev, std::abs(ts.at(k, 0) - std::pow(std::cos(0.1 * grid.time(k)), 2)));
    }
    c.at_most("max |P10 - cos^2(J t)| on [0, 50]", dev, 1e-6);
    c.at_least("P01 at the sample nearest pi/2J", ts.at(grid.nearest(kPi / 0.2), 1), 0.9999);

    double closed = 0.0;
    for (double jt : {0.3, 0.7, 1.1}) {
        const double t = jt / p.J;
        const Operator u = propagator(h, t);
        for (int big_n = 0; big_n <= 4; ++big_n) {
            for (int n = 0; n <= big_n; ++n) {
                const StateVector exact = u * modes.ket(big_n - n, n);
                closed = std::max(closed, max_abs(exact.amplitudes() -
                                                  coupled_cavity_analytic(f, big_n, n, p.J, p.omega_f, t).amplitudes()));
            }
        }
    }
    c.at_most("closed form vs matrix evolution, N <= 4", closed, 1e-10);
}

void interferometry(Criterion& c) {
    const TwoModeSpace s(10);
    const StateVector out = beam_splitter(s, kPi / 4) * s.ket(2, 0);
    const auto prob = [&](int a, int b) { return std::norm(out[s.space().flat_index({a, b})]); };
    c.at_most("P20, P11, P02 vs 0.25, 0.5, 0.25",
              std::max({std::abs(prob(2, 0) - 0.25), std::abs(prob(1, 1) - 0.5), std::abs(prob(0, 2) - 0.25)}), 1e-9);
    const Operator n = number_operator(s.a());
    const Operator id = Operator::identity(s.a());
    const double ia = expectation(tensor_op(n, id), out).real();
    const double ib = expectation(tensor_op(id, n), out).real();
    c.at_most("output intensities vs 1", std::max(std::abs(ia - 1.0), std::abs(ib - 1.0)), 1e-9);

    double fringe = 0.0;
    for (int k = 0; k <= 40; ++k) {
        const double phi = k * kPi / 20;
        fringe = std::max(fringe, std::abs(mzi(s.ket(1, 0), phi, s).p10 - 0.5 * (1 - std::cos(phi))));
    }
    c.at_most("MZI P10 vs (1 - cos phi)/2 at 41 phases", fringe, 1e-9);

    double box = 0.0;
    for (double theta : {kPi / 6, kPi / 4, kPi / 3}) {
        const Operator u = beam_splitter(s, theta);
        for (int total = 0; total <= 4; ++total) {
            for (int a = 0; a <= total; ++a) {
                const StateVector exact = u * s.ket(a, total - a);
                box = std::max(box, max_abs(exact.amplitudes() -
                                            bs_output_analytic(a, total - a, theta, s).amplitudes()));
            }
        }
    }
    c.at_most("closed-form |n,m> output vs matrix, n + m <= 4", box, 1e-10);
}

void lindblad(Criterion& c) {
    const FockSpace f(10);
    const ModelParams p = jc_params(0.1, 0.05, 0.0);
    const TimeGrid grid(0.1, 150.0);
    const StateVector e0 = jc_ket(f, 0, 0);
    double trace = 0.0;
    double herm = 0.0;
    double agree = 0.0;
    std::vector<double> reduced;
    const TimeSeries ts = integrate_master(
        density_from_pure(e0), jc_hamiltonian(f, p), jc_decay_channels(f, p.kappa, p.gamma), grid, {{"P_e", e0}}, 1.0,
        [&](int, const DensityMatrix& rho) {
            const DensityDiagnostics d = rho.diagnose();
            trace = std::max(trace, std::abs(d.trace - 1.0));
            herm = std::max(herm, d.hermiticity_error);
            reduced.push_back(partial_trace(rho, 0)(0, 0).real());
        });
    for (int k = 0; k < ts.samples(); ++k) {
        agree = std::max(agree, std::abs(ts.at(k, 0) - reduced[static_cast<std::size_t>(k)]));
    }
    c.at_most("trace error", trace, 1e-8);
    c.at_most("Hermiticity error", herm, 1e-8);
    c.at_most("P_e(150)", ts.at(ts.samples() - 1, 0), 0.02);
    c.at_most("composite vs reduced-atom P_e", agree, 1e-8);

    const FockSpace mode(2);
    const StateVector one = number_state(mode, 1);
    const TimeSeries decay =
        integrate_master(density_from_pure(one), Operator::zero(mode), {{annihilation(mode), 0.05}}, grid, {{"P1", one}});
    double dev = 0.0;
    for (int k = 0; k < grid.samples(); ++k) {
        dev = std::max(dev, std::abs(decay.at(k, 0) - std::exp(-0.05 * grid.time(k))));
    }
    c.at_most("single-mode decay vs exp(-kappa t)", dev, 1e-6);
}

void mcwf(Criterion& c) {
    const FockSpace f(10);
    const ModelParams p = jc_params(0.1, 0.05, 0.0);
    const Operator h = jc_hamiltonian(f, p);
    const auto channels = jc_decay_channels(f, p.kappa, p.gamma);
    const StateVector e0 = jc_ket(f, 0, 0);
    const std::uint64_t master_seed = 20240607;

    {
        const TimeGrid grid(0.005, 150.0);
        const EnsembleResult ens = mcwf_ensemble(e0, h, channels, grid, {{"P_e", e0}}, 500, master_seed);
        const TimeSeries me = integrate_master(density_from_pure(e0), h, channels, grid, {{"P_e", e0}});
        double avg = 0.0;
        double worst = 0.0;
        for (int k = 0; k < grid.samples(); ++k) {
            const double d = std::abs(ens.mean.at(k, 0) - me.at(k, 0));
            avg += d;
            worst = std::max(worst, d);
        }
        c.at_most("time-averaged |P_e(MCWF) - P_e(master)|, N=500", avg / grid.samples(), 0.03);
        c.at_most("pointwise |P_e(MCWF) - P_e(master)|, N=500", worst, 0.1);
    }
    {
        const TimeGrid grid(0.001, 30.0);
        const TrajectoryRecord tr = mcwf_trajectory(e0, h, {}, grid, {{"P_e", e0}}, master_seed);
        const TimeSeries un = evolve(e0, h, grid, {{"P_e", e0}});
        c.at_most("zero-dissipation trajectory vs unitary evolution",
                  (tr.series.values() - un.values()).cwiseAbs().maxCoeff(), 1e-3);
    }
    {
        const TimeGrid grid(0.005, 150.0);
        double post_jump = 0.0;
        int jumped = 0;
        for (std::uint64_t i = 0; i < 40; ++i) {
            const TrajectoryRecord tr =
                mcwf_trajectory(e0, h, channels, grid, {{"P_e", e0}}, stream_derive(master_seed, i));
            if (tr.jump_times.empty()) {
                continue;
            }
            ++jumped;
            for (int k = grid.nearest(tr.jump_times.front()); k < grid.samples(); ++k) {
                post_jump = std::max(post_jump, std::abs(tr.series.at(k, 0)));
            }
        }
        c.at_most("max post-jump P_e over 40 trajectories", jumped > 0 ? post_jump : 1.0, 0.0);
    }
    {
        const double kappa = 0.1;
        const FockSpace mode(2);
        const StateVector one = number_state(mode, 1);
        const EnsembleResult ens = mcwf_ensemble(one, Operator::zero(mode), {{annihilation(mode), kappa}},
                                                 TimeGrid(0.01, 2.0 / kappa), {{"P1", one}}, 1000, master_seed + 1);
        for (double t : {1.0 / kappa, 2.0 / kappa}) {
            int count = 0;
            for (double tj : ens.first_jump_times) {
                count += tj <= t + 1e-9 ? 1 : 0;
            }
            const double p_exp = 1.0 - std::exp(-kappa * t);
            const double sigma = std::sqrt(p_exp * (1.0 - p_exp) / 1000.0);
            char label[96];
            std::snprintf(label, sizeof label, "jump CDF at t=%g in units of 4 sigma", t);
            c.at_most(label, std::abs(count / 1000.0 - p_exp) / (4.0 * sigma), 1.0);
        }
    }
}

std::string run_to_string(cli::ScenarioConfig config, const std::string& path) {
    config.out_path = path;
    std::ostringstream log;
    cli::execute(config, log);
    std::ifstream in(path, std::ios::binary);
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

void determinism(Criterion& c) {
    const auto dir = std::filesystem::temp_directory_path() / "qoptics_acceptance";
    std::filesystem::create_directories(dir);
    int differing = 0;
    int runs = 0;
    for (cli::ScenarioConfig config : cli::golden_configs()) {
        const std::string name(cli::scenario_info(config.scenario).name);
        if (config.scenario == cli::Scenario::Mcwf) {
            config.threads = 1;
            const std::string a = run_to_string(config, (dir / (name + "-t1.csv")).string());
            config.threads = 4;
            const std::string b = run_to_string(config, (dir / (name + "-t4.csv")).string());
            differing += (a != b || a.empty()) ? 1 : 0;
        } else {
            const std::string a = run_to_string(config, (dir / (name + "-a.csv")).string());
            const std::string b = run_to_string(config, (dir / (name + "-b.csv")).string());
            differing += (a != b || a.empty()) ? 1 : 0;
        }
        ++runs;
    }
    c.at_most("golden scenarios whose rerun CSV differs (mcwf at 1 vs 4 threads)", differing, 0.0);
    c.at_least("golden scenarios rerun", runs, 13.0);
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria = {
        {"state constructors", states},
        {"truncation diagnostic", truncation},
        {"observables table", observables},
        {"JC Rabi oscillation", jc_rabi},
        {"collapse and revival", collapse_revival},
        {"coupled cavities", coupled_cavities},
        {"beam splitter and MZI", interferometry},
        {"Lindblad master equation", lindblad},
        {"MCWF versus master equation", mcwf},
        {"determinism", determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Criterion c;
        const auto start = std::chrono::steady_clock::now();
        std::string error;
        try {
            criteria[i].second(c);
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool ok = error.empty() && c.passed();
        failed += ok ? 0 : 1;
        std::printf("%s criterion %zu: %s (%.1f s)\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), seconds);
        for (const Check& check : c.checks()) {
            std::printf("    %s %s = %.6g (limit %.3g)\n", check.ok ? "ok " : "BAD", check.what.c_str(), check.value,
                        check.limit);
        }
        if (!error.empty()) {
            std::printf("    error: %s\n", error.c_str());
        }
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
