#include "qoptics/interferometry.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qoptics/dynamics.hpp"
#include "qoptics/numerics.hpp"
#include "qoptics/observables.hpp"

namespace qoptics {

namespace {

void require_equal_modes(const TwoModeSpace& space) {
    if (space.a().dim() != space.b().dim()) {
        throw DimensionError("beam splitter needs equal mode dimensions (" + std::to_string(space.a().dim()) +
                             " vs " + std::to_string(space.b().dim()) + ")");
    }
}

// Largest n_a + n_b carrying amplitude.
int max_total_photons(const StateVector& state, const TwoModeSpace& space) {
    const int db = space.b().dim();
    int total = 0;
    for (int i = 0; i < state.size(); ++i) {
        if (state[i] != Complex(0.0)) {
            total = std::max(total, i / db + i % db);
        }
    }
    return total;
}

}  // namespace

Operator beam_splitter(const TwoModeSpace& space, double theta) {
    require_equal_modes(space);
    const Operator a = annihilation(space.a());
    const Operator b = annihilation(space.b());
    const Operator generator = tensor_op(a.adjoint(), b) + tensor_op(a, b.adjoint());
    return {space.space(), unitary_exp(generator.matrix(), Complex(0.0, theta))};
}

StateVector bs_output_analytic(int n, int m, double theta, const TwoModeSpace& space) {
    if (n < 0 || m < 0) {
        throw DomainError("photon numbers must be non-negative");
    }
    const int limit = std::min(space.a().dim(), space.b().dim()) - 1;
    if (n + m > limit) {
        throw DomainError(std::to_string(n + m) + " photons overflow the truncation (max " + std::to_string(limit) +
                          ")");
    }
    const double c = std::cos(theta);
    const Complex is(0.0, std::sin(theta));
    const double norm_nm = std::tgamma(n + 1.0) * std::tgamma(m + 1.0);
    const Space full = space.space();

    CVector amps = CVector::Zero(full.dim());
    for (int k = 0; k <= n; ++k) {
        for (int kp = 0; kp <= m; ++kp) {
            const int out_a = k + kp;
            const int out_b = n + m - k - kp;
            Complex term = binomial(n, k) * binomial(m, kp) *
                           std::sqrt(std::tgamma(out_a + 1.0) * std::tgamma(out_b + 1.0) / norm_nm);
            for (int i = 0; i < m + k - kp; ++i) {
                term *= c;
            }
            for (int i = 0; i < n - k + kp; ++i) {
                term *= is;
            }
            amps(full.flat_index({out_a, out_b})) += term;
        }
    }
    return {full, std::move(amps)};
}

Operator phase_shifter(const TwoModeSpace& space, double phi, Mode mode) {
    const Space full = space.space();
    const int db = space.b().dim();
    CMatrix u = CMatrix::Zero(full.dim(), full.dim());
    for (int i = 0; i < full.dim(); ++i) {
        const int photons = mode == Mode::A ? i / db : i % db;
        u(i, i) = std::exp(Complex(0.0, phi * photons));
    }
    return {full, std::move(u)};
}

MziResult mzi(const StateVector& input, double phi, const TwoModeSpace& space) {
    const Space full = space.space();
    require_same_space(input.space(), full, "mzi input");
    if (!input.is_normalized()) {
        throw PreconditionError("mzi input must be normalized");
    }
    require_equal_modes(space);
    if (space.a().dim() < 2) {
        throw DimensionError("mzi needs at least dimension 2 per mode");
    }
    const int photons = max_total_photons(input, space);
    if (photons > space.a().dim() - 1) {
        throw DimensionError("input carries " + std::to_string(photons) + " photons but each mode holds at most " +
                             std::to_string(space.a().dim() - 1));
    }

    const Operator bs = beam_splitter(space, std::numbers::pi / 4.0);
    StateVector out = bs * (phase_shifter(space, phi, Mode::A) * (bs * input));

    const Operator id = Operator::identity(space.a());
    const Operator n = number_operator(space.a());
    const double p10 = std::norm(inner(space.ket(1, 0), out));
    const double p01 = std::norm(inner(space.ket(0, 1), out));
    const double ia = expectation(tensor_op(n, id), out).real();
    const double ib = expectation(tensor_op(id, n), out).real();
    return {std::move(out), p10, p01, ia, ib};
}

}  // namespace qoptics
