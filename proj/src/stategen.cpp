#include "qoptics/stategen.hpp"

#include <cmath>
#include <string>

namespace qoptics {

StateVector coherent_state(const FockSpace& space, Complex alpha) {
    const int d = space.dim();
    CVector amps(d);
    amps(0) = std::exp(-0.5 * std::norm(alpha));
    for (int n = 1; n < d; ++n) {
        amps(n) = amps(n - 1) * alpha / std::sqrt(static_cast<double>(n));
    }
    return {space, std::move(amps)};
}

DensityMatrix thermal_state(const FockSpace& space, double n_th) {
    if (!(n_th >= 0.0)) {
        throw DomainError("thermal mean photon number must be >= 0, got " + std::to_string(n_th));
    }
    const int d = space.dim();
    const double ratio = n_th / (1.0 + n_th);
    CMatrix rho = CMatrix::Zero(d, d);
    double p = 1.0 / (1.0 + n_th);
    for (int n = 0; n < d; ++n) {
        rho(n, n) = p;
        p *= ratio;
    }
    return {space, std::move(rho)};
}

StateVector squeezed_vacuum(const FockSpace& space, double r, double theta) {
    if (!(r >= 0.0)) {
        throw DomainError("squeeze magnitude must be >= 0, got " + std::to_string(r));
    }
    const int d = space.dim();
    const double t = std::tanh(r);
    const Complex step = -t * std::exp(Complex(0.0, theta));
    CVector amps = CVector::Zero(d);
    // amplitude(2n) = amplitude(2n-2) * (-tanh r e^{i theta}) * sqrt((2n-1)/(2n))
    Complex c = 1.0 / std::sqrt(std::cosh(r));
    for (int n = 0; 2 * n < d; ++n) {
        if (n > 0) {
            c *= step * std::sqrt((2.0 * n - 1.0) / (2.0 * n));
        }
        amps(2 * n) = c;
    }
    return {space, std::move(amps)};
}

StateVector nsfcs(const FockSpace& space, Complex alpha, int m) {
    if (m < 0 || m >= space.dim()) {
        throw IndexError("filtered number state |" + std::to_string(m) + "> outside dimension " +
                         std::to_string(space.dim()));
    }
    CVector amps = coherent_state(space, alpha).amplitudes();
    amps(m) = 0.0;
    return normalize(StateVector(space, std::move(amps)));
}

StateVector atom_state(Complex alpha_e, Complex beta_g) {
    const double n2 = std::norm(alpha_e) + std::norm(beta_g);
    if (std::abs(n2 - 1.0) > tol::kNormalization) {
        throw PreconditionError("atom state amplitudes must satisfy |a|^2 + |b|^2 = 1, got " +
                                std::to_string(n2));
    }
    CVector amps(2);
    amps(QubitSpace::kExcited) = alpha_e;
    amps(QubitSpace::kGround) = beta_g;
    return {QubitSpace{}, std::move(amps)};
}

TruncationReport truncation_check(const StateVector& state, double tolerance) {
    const double deficit = 1.0 - norm(state);
    return {state.space().dim(), deficit, deficit <= tolerance};
}

TruncationReport truncation_check(const DensityMatrix& rho, double tolerance) {
    const double deficit = 1.0 - rho.trace().real();
    return {rho.space().dim(), deficit, deficit <= tolerance};
}

}  // namespace qoptics
