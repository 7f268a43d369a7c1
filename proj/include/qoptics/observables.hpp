#pragma once

#include <vector>

#include "qoptics/operators.hpp"

namespace qoptics {

/// P_n for n = 0 ... d-1. Not renormalized, so the sum falls short of one by
/// the truncation deficit.
struct Distribution {
    std::vector<double> probabilities;

    double total() const;
    double operator[](std::size_t n) const { return probabilities[n]; }
    std::size_t size() const noexcept { return probabilities.size(); }
};

/// <psi|O|psi>. Complex so callers can see the imaginary residue of a Hermitian O.
Complex expectation(const Operator& op, const StateVector& state);
/// Tr(O rho).
Complex expectation(const Operator& op, const DensityMatrix& rho);

Distribution photon_distribution(const StateVector& state);
Distribution photon_distribution(const DensityMatrix& rho);

/// <a^dag a> on a single-mode state.
double mean_photon_number(const StateVector& state);
double mean_photon_number(const DensityMatrix& rho);

/// <a^dag^2 a^2> / <a^dag a>^2. Throws DomainError for zero mean photon number.
double g2_zero(const StateVector& state);
double g2_zero(const DensityMatrix& rho);

}  // namespace qoptics
