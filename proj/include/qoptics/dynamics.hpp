#pragma once

// Closed-system evolution on a uniform time grid.
//
// The propagator exp(-i H dt / hbar) is built once from the Hermitian
// eigendecomposition of H and applied repeatedly; observables are sampled at
// t_k = k dt before the k-th step.

#include <string>
#include <vector>

#include "qoptics/operators.hpp"

namespace qoptics {

class TimeGrid {
public:
    TimeGrid(double dt, double t_max);

    double dt() const noexcept { return dt_; }
    double t_max() const noexcept { return t_max_; }
    /// floor(t_max / dt) + 1, with a 1e-9 relative allowance for t_max/dt landing just below an integer.
    int samples() const noexcept { return samples_; }
    double time(int k) const noexcept { return k * dt_; }
    /// Index of the sample closest to t (clamped to the grid).
    int nearest(double t) const noexcept;

private:
    double dt_;
    double t_max_;
    int samples_;
};

/// Sampled observables: one row per grid sample, one column per label.
class TimeSeries {
public:
    TimeSeries(TimeGrid grid, std::vector<std::string> labels);

    const TimeGrid& grid() const noexcept { return grid_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const Eigen::MatrixXd& values() const noexcept { return values_; }
    Eigen::MatrixXd& values() noexcept { return values_; }

    int samples() const noexcept { return static_cast<int>(values_.rows()); }
    /// Column index for `label`; throws IndexError if absent.
    int column(const std::string& label) const;
    Eigen::VectorXd series(const std::string& label) const { return values_.col(column(label)); }
    double& at(int sample, int col) { return values_(sample, col); }
    double at(int sample, int col) const { return values_(sample, col); }

private:
    TimeGrid grid_;
    std::vector<std::string> labels_;
    Eigen::MatrixXd values_;
};

/// A state whose overlap probability |<state|psi(t)>|^2 is recorded under `label`.
struct Projector {
    std::string label;
    StateVector state;
};

struct EvolveOptions {
    double hbar = 1.0;
    /// Divide psi by its norm after every step to remove round-off drift.
    bool renormalize = true;
};

/// exp(-i H dt / hbar). Throws PreconditionError if H is not Hermitian within 1e-10.
Operator propagator(const Operator& h, double dt, double hbar = 1.0);

TimeSeries evolve(const StateVector& psi0, const Operator& h, const TimeGrid& grid,
                  const std::vector<Projector>& projectors, const EvolveOptions& options = {});

/// Records Re <psi(t)|obs|psi(t)> under `label`.
TimeSeries evolve_expectation(const StateVector& psi0, const Operator& h, const TimeGrid& grid,
                              const Operator& obs, const std::string& label = "expectation",
                              const EvolveOptions& options = {});

/// Resonant JC inversion for a coherent field and an excited atom:
/// W(t) = exp(-|alpha|^2) sum_{n=0}^{n_max} |alpha|^{2n}/n! cos(2 g t sqrt(n+1)).
double atomic_inversion_analytic(Complex alpha, double g, double t, int n_max);

/// Closed-form exp(-iHt/hbar)|N-n, n> for two resonant coupled cavities,
/// including the exp(-i N omega t) global phase.
StateVector coupled_cavity_analytic(const FockSpace& field, int n_total, int n, double J, double omega,
                                    double t);

/// n choose k as a double.
double binomial(int n, int k);

}  // namespace qoptics
