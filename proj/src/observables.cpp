#include "qoptics/observables.hpp"

#include <numeric>

namespace qoptics {

namespace {

FockSpace single_mode(const Space& space) {
    if (space.is_composite() || space.factor(0).kind != FactorKind::Fock) {
        throw DimensionError("photon statistics need a single-mode Fock space");
    }
    return FockSpace(space.dim());
}

double g2_from_moments(double n1, double n2) {
    if (!(n1 > 0.0)) {
        throw DomainError("g2(0) is undefined for zero mean photon number");
    }
    return n2 / (n1 * n1);
}

}  // namespace

double Distribution::total() const { return std::accumulate(probabilities.begin(), probabilities.end(), 0.0); }

Complex expectation(const Operator& op, const StateVector& state) {
    require_same_space(op.space(), state.space(), "expectation");
    return state.amplitudes().dot(op.matrix() * state.amplitudes());
}

Complex expectation(const Operator& op, const DensityMatrix& rho) {
    require_same_space(op.space(), rho.space(), "expectation");
    return (op.matrix() * rho.entries()).trace();
}

Distribution photon_distribution(const StateVector& state) {
    single_mode(state.space());
    Distribution out;
    out.probabilities.reserve(static_cast<std::size_t>(state.size()));
    for (int n = 0; n < state.size(); ++n) {
        out.probabilities.push_back(std::norm(state[n]));
    }
    return out;
}

Distribution photon_distribution(const DensityMatrix& rho) {
    single_mode(rho.space());
    Distribution out;
    out.probabilities.reserve(static_cast<std::size_t>(rho.size()));
    for (int n = 0; n < rho.size(); ++n) {
        out.probabilities.push_back(rho(n, n).real());
    }
    return out;
}

// a^dag a and a^dag^2 a^2 are diagonal in the Fock basis, so both moments
// come straight from the populations (exact for number states).
static double moment(const Distribution& p, int order) {
    double sum = 0.0;
    for (std::size_t n = 0; n < p.size(); ++n) {
        const double k = static_cast<double>(n);
        sum += (order == 1 ? k : k * (k - 1.0)) * p[n];
    }
    return sum;
}

double mean_photon_number(const StateVector& state) { return moment(photon_distribution(state), 1); }

double mean_photon_number(const DensityMatrix& rho) { return moment(photon_distribution(rho), 1); }

double g2_zero(const StateVector& state) {
    const Distribution p = photon_distribution(state);
    return g2_from_moments(moment(p, 1), moment(p, 2));
}

double g2_zero(const DensityMatrix& rho) {
    const Distribution p = photon_distribution(rho);
    return g2_from_moments(moment(p, 1), moment(p, 2));
}

}  // namespace qoptics
