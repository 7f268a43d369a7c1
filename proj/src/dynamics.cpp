#include "qoptics/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qoptics/numerics.hpp"

namespace qoptics {

TimeGrid::TimeGrid(double dt, double t_max) : dt_(dt), t_max_(t_max), samples_(0) {
    if (!(dt > 0.0)) {
        throw DomainError("time step must be positive");
    }
    if (!(t_max >= dt)) {
        throw DomainError("t_max must be at least one time step");
    }
    samples_ = static_cast<int>(std::floor(t_max / dt * (1.0 + 1e-9))) + 1;
}

int TimeGrid::nearest(double t) const noexcept {
    const auto k = static_cast<int>(std::lround(t / dt_));
    return std::clamp(k, 0, samples_ - 1);
}

TimeSeries::TimeSeries(TimeGrid grid, std::vector<std::string> labels)
    : grid_(grid),
      labels_(std::move(labels)),
      values_(Eigen::MatrixXd::Zero(grid.samples(), static_cast<Eigen::Index>(labels_.size()))) {}

int TimeSeries::column(const std::string& label) const {
    const auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) {
        throw IndexError("time series has no column '" + label + "'");
    }
    return static_cast<int>(it - labels_.begin());
}

Operator propagator(const Operator& h, double dt, double hbar) {
    const double err = hermiticity_error(h.matrix());
    if (err > 1e-10) {
        throw PreconditionError("propagator needs a Hermitian Hamiltonian (deviation " + std::to_string(err) +
                                ")");
    }
    return {h.space(), unitary_exp(h.matrix(), Complex(0.0, -dt / hbar))};
}

namespace {

template <typename Record>
void run_unitary(const StateVector& psi0, const Operator& h, const TimeGrid& grid, const EvolveOptions& options,
                 Record&& record) {
    require_same_space(psi0.space(), h.space(), "evolve");
    if (!psi0.is_normalized()) {
        throw PreconditionError("initial state must be normalized");
    }
    const CMatrix u = propagator(h, grid.dt(), options.hbar).matrix();
    CVector psi = psi0.amplitudes();
    CVector next(psi.size());
    for (int k = 0; k < grid.samples(); ++k) {
        record(k, psi);
        next.noalias() = u * psi;
        psi.swap(next);
        if (options.renormalize) {
            psi /= psi.norm();
        }
    }
}

}  // namespace

TimeSeries evolve(const StateVector& psi0, const Operator& h, const TimeGrid& grid,
                  const std::vector<Projector>& projectors, const EvolveOptions& options) {
    std::vector<std::string> labels;
    for (const Projector& p : projectors) {
        require_same_space(p.state.space(), psi0.space(), "evolve projector");
        labels.push_back(p.label);
    }
    TimeSeries out(grid, std::move(labels));
    run_unitary(psi0, h, grid, options, [&](int k, const CVector& psi) {
        for (std::size_t j = 0; j < projectors.size(); ++j) {
            out.at(k, static_cast<int>(j)) = std::norm(projectors[j].state.amplitudes().dot(psi));
        }
    });
    return out;
}

TimeSeries evolve_expectation(const StateVector& psi0, const Operator& h, const TimeGrid& grid,
                              const Operator& obs, const std::string& label, const EvolveOptions& options) {
    require_same_space(obs.space(), psi0.space(), "evolve_expectation");
    TimeSeries out(grid, {label});
    run_unitary(psi0, h, grid, options,
                [&](int k, const CVector& psi) { out.at(k, 0) = psi.dot(obs.matrix() * psi).real(); });
    return out;
}

double atomic_inversion_analytic(Complex alpha, double g, double t, int n_max) {
    if (n_max < 1) {
        throw DomainError("series cutoff n_max must be >= 1");
    }
    const double mean = std::norm(alpha);
    double weight = std::exp(-mean);
    double w = 0.0;
    for (int n = 0; n <= n_max; ++n) {
        w += weight * std::cos(2.0 * g * t * std::sqrt(n + 1.0));
        weight *= mean / (n + 1.0);
    }
    return w;
}

namespace {

template <typename T>
T ipow(T base, int exponent) {
    T out(1.0);
    for (int i = 0; i < exponent; ++i) {
        out *= base;
    }
    return out;
}

}  // namespace

double binomial(int n, int k) {
    if (k < 0 || k > n) {
        return 0.0;
    }
    k = std::min(k, n - k);
    double c = 1.0;
    for (int i = 1; i <= k; ++i) {
        c = c * (n - k + i) / i;
    }
    return c;
}

StateVector coupled_cavity_analytic(const FockSpace& field, int n_total, int n, double J, double omega,
                                    double t) {
    if (n < 0 || n > n_total) {
        throw DomainError("coupled cavities need 0 <= n <= N");
    }
    if (n_total > field.dim() - 1) {
        throw DomainError("N = " + std::to_string(n_total) + " photons do not fit in dimension " +
                          std::to_string(field.dim()));
    }
    const Space space = tensor(field, field);
    const double c = std::cos(J * t);
    const Complex s(0.0, -std::sin(J * t));
    const Complex phase = std::exp(Complex(0.0, -n_total * omega * t));

    CVector amps = CVector::Zero(space.dim());
    for (int k = 0; k <= n_total - n; ++k) {
        for (int kp = 0; kp <= n; ++kp) {
            const int second = n + k - kp;
            const double weight = binomial(n_total - n, k) * binomial(n, kp) *
                                  std::sqrt(binomial(n_total, n) / binomial(n_total, second));
            const Complex term = weight * ipow(c, n_total - k - kp) * ipow(s, k + kp);
            amps(space.flat_index({n_total - second, second})) += term;
        }
    }
    return {space, phase * amps};
}

}  // namespace qoptics
