#pragma once

// Two-mode linear optics: beam splitter, phase shifter and the Mach-Zehnder
// pipeline U_BS U_phi U_BS. Mirror phases are a global phase and are omitted.

#include "qoptics/operators.hpp"

namespace qoptics {

/// Modes a and b, with a as the leftmost tensor factor.
class TwoModeSpace {
public:
    TwoModeSpace(FockSpace a, FockSpace b) : a_(a), b_(b) {}
    explicit TwoModeSpace(int dim) : a_(dim), b_(dim) {}

    const FockSpace& a() const noexcept { return a_; }
    const FockSpace& b() const noexcept { return b_; }
    Space space() const { return tensor(a_, b_); }
    StateVector ket(int n_a, int n_b) const { return basis_state(space(), {n_a, n_b}); }

private:
    FockSpace a_;
    FockSpace b_;
};

enum class Mode { A, B };

/// exp(i theta (a^dag b + a b^dag)). theta = pi/4 is the 50:50 splitter.
Operator beam_splitter(const TwoModeSpace& space, double theta);

/// U_BS |n, m> from the closed-form double binomial sum.
StateVector bs_output_analytic(int n, int m, double theta, const TwoModeSpace& space);

/// exp(i phi N) on the chosen mode.
Operator phase_shifter(const TwoModeSpace& space, double phi, Mode mode = Mode::A);

struct MziResult {
    StateVector output;
    double p10;          // |<1,0|out>|^2
    double p01;          // |<0,1|out>|^2
    double intensity_a;  // <N x I>
    double intensity_b;  // <I x N>
};

/// 50:50 splitter, phase phi on mode a, 50:50 splitter.
MziResult mzi(const StateVector& input, double phi, const TwoModeSpace& space);

}  // namespace qoptics
