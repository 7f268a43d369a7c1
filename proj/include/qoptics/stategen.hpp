#pragma once

// Named field states and the truncation diagnostic.
//
// Constructors evaluate the infinite series only up to the truncation
// dimension and do not renormalize, so that a too-small dimension shows up as
// a norm (or trace) deficit. nsfcs is the one exception: its definition
// includes the normalization constant.

#include "qoptics/hilbert.hpp"

namespace qoptics {

/// |alpha> truncated to the space; amplitudes from c_{n+1} = c_n alpha / sqrt(n+1).
StateVector coherent_state(const FockSpace& space, Complex alpha);

/// Diagonal thermal state with mean photon number n_th.
DensityMatrix thermal_state(const FockSpace& space, double n_th);

/// Squeezed vacuum with squeeze magnitude r and phase theta. Odd amplitudes are exactly zero.
StateVector squeezed_vacuum(const FockSpace& space, double r, double theta);

/// Number-state-filtered coherent state: |alpha> with the |m> component removed, renormalized.
StateVector nsfcs(const FockSpace& space, Complex alpha, int m);

/// alpha_e |e> + beta_g |g>; the pair must already be normalized.
StateVector atom_state(Complex alpha_e, Complex beta_g);

struct TruncationReport {
    int requested_dim;
    double deficit;  // 1 - norm (pure) or 1 - Re tr (mixed)
    bool adequate;   // deficit <= tolerance
};

TruncationReport truncation_check(const StateVector& state, double tolerance);
TruncationReport truncation_check(const DensityMatrix& rho, double tolerance);

}  // namespace qoptics
