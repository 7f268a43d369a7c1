#pragma once

// Open-system dynamics: the Lindblad master equation integrated with classic
// RK4, and its Monte-Carlo wavefunction (quantum jump) unravelling.

#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "qoptics/dynamics.hpp"

namespace qoptics {

/// Jump operator L with rate; contributes (rate/2)(2 L rho L^dag - rho L^dag L - L^dag L rho).
struct DecayChannel {
    Operator op;
    double rate;
};

/// Channels for the atom-cavity system: I x a at kappa and sigma_- x I at gamma.
/// Zero-rate channels are dropped.
std::vector<DecayChannel> jc_decay_channels(const FockSpace& field, double kappa, double gamma);

/// Right-hand side of the master equation with the channel products L^dag L
/// precomputed, for repeated evaluation inside an integrator.
class LindbladGenerator {
public:
    LindbladGenerator(const Operator& h, const std::vector<DecayChannel>& channels, double hbar = 1.0);

    CMatrix operator()(const CMatrix& rho) const;
    const Space& space() const noexcept { return space_; }

private:
    struct Term {
        CMatrix jump;
        CMatrix jump_adj;
        CMatrix jump_dag_jump;
        double rate;
    };
    Space space_;
    CMatrix h_;
    double hbar_;
    std::vector<Term> terms_;
};

/// (1/(i hbar)) [H, rho] + sum_c (rate_c/2)(2 L rho L^dag - rho L^dag L - L^dag L rho).
CMatrix lindblad_rhs(const Operator& h, const std::vector<DecayChannel>& channels, const DensityMatrix& rho,
                     double hbar = 1.0);

using MatrixDerivative = std::function<CMatrix(const CMatrix&)>;

/// One classic fourth-order Runge-Kutta step of d rho/dt = f(rho).
CMatrix rk4_step(const CMatrix& rho, double dt, const MatrixDerivative& f);
DensityMatrix rk4_step(const DensityMatrix& rho, double dt, const MatrixDerivative& f);

/// Called with every sampled state; used for diagnostics and derived observables.
using DensityObserver = std::function<void(int sample, const DensityMatrix& rho)>;

/// Records <p|rho(t_k)|p> for each projector. Requires rho0 Hermitian with unit trace.
TimeSeries integrate_master(const DensityMatrix& rho0, const Operator& h, const std::vector<DecayChannel>& channels,
                            const TimeGrid& grid, const std::vector<Projector>& projectors, double hbar = 1.0,
                            const DensityObserver& observer = {});

/// Which state the jump operator acts on: the state at the start of the step,
/// or the state after the non-Hermitian update.
enum class JumpSource { PreStep, NonHermitianStep };

enum class McwfStepper {
    FirstOrder,        // (I - i dt H_NH / hbar) psi
    ExactExponential,  // exp(-i dt H_NH / hbar) psi
};

struct McwfOptions {
    double hbar = 1.0;
    JumpSource jump_source = JumpSource::PreStep;
    McwfStepper stepper = McwfStepper::FirstOrder;
    double max_jump_probability = 0.1;
};

struct TrajectoryRecord {
    TimeSeries series;
    std::vector<double> jump_times;    // strictly increasing, within [0, t_max]
    std::vector<int> jump_channels;    // channel index of each jump
    std::uint64_t seed;
};

/// One quantum trajectory. Observables are sampled at the start of each step.
/// Throws StepTooLargeError when a step's missing norm exceeds
/// options.max_jump_probability.
TrajectoryRecord mcwf_trajectory(const StateVector& psi0, const Operator& h,
                                 const std::vector<DecayChannel>& channels, const TimeGrid& grid,
                                 const std::vector<Projector>& projectors, std::uint64_t seed,
                                 const McwfOptions& options = {});

struct EnsembleResult {
    TimeSeries mean;
    TimeSeries std_error;  // sample standard deviation / sqrt(n_traj); zero for one trajectory
    int n_traj;
    std::uint64_t master_seed;
    /// First jump time of each trajectory in index order; +infinity if it never jumped.
    std::vector<double> first_jump_times;
};

/// Trajectory i uses seed stream_derive(master_seed, i). Results are reduced
/// in ascending trajectory order, so they do not depend on `threads`
/// (0 selects the hardware concurrency).
EnsembleResult mcwf_ensemble(const StateVector& psi0, const Operator& h, const std::vector<DecayChannel>& channels,
                             const TimeGrid& grid, const std::vector<Projector>& projectors, int n_traj,
                             std::uint64_t master_seed, const McwfOptions& options = {}, unsigned threads = 0);

}  // namespace qoptics
