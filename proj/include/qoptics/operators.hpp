#pragma once

// Ladder and Pauli operators, Hamiltonian builders, Kronecker embedding.

#include "qoptics/hilbert.hpp"

namespace qoptics {

/// Dense square matrix tagged with the space it acts on. Binary operations
/// require identical spaces; tensor() is the only way to combine factors.
class Operator {
public:
    Operator(Space space, CMatrix entries);

    static Operator identity(const Space& space);
    static Operator zero(const Space& space);

    const Space& space() const noexcept { return space_; }
    const CMatrix& matrix() const noexcept { return entries_; }
    int size() const noexcept { return static_cast<int>(entries_.rows()); }
    Complex operator()(int row, int col) const { return entries_(row, col); }

    Operator adjoint() const { return {space_, entries_.adjoint()}; }

    Operator& operator+=(const Operator& rhs);
    Operator& operator-=(const Operator& rhs);
    Operator& operator*=(Complex scale);

    friend Operator operator+(Operator lhs, const Operator& rhs) { return lhs += rhs; }
    friend Operator operator-(Operator lhs, const Operator& rhs) { return lhs -= rhs; }
    friend Operator operator*(Operator lhs, Complex scale) { return lhs *= scale; }
    friend Operator operator*(Complex scale, Operator rhs) { return rhs *= scale; }
    friend Operator operator*(const Operator& lhs, const Operator& rhs);
    friend StateVector operator*(const Operator& op, const StateVector& state);

private:
    Space space_;
    CMatrix entries_;
};

Operator commutator(const Operator& a, const Operator& b);

/// Kronecker product, `left` acting on the most significant factor.
Operator tensor_op(const Operator& left, const Operator& right);

/// Physical constants of the models. Defaults follow hbar = omega = omega0 = 1.
struct ModelParams {
    double hbar = 1.0;
    double omega_f = 1.0;  // field frequency
    double omega_0 = 1.0;  // atomic transition frequency
    double g = 0.0;        // atom-field coupling
    double J = 0.0;        // cavity-cavity coupling
    double kappa = 0.0;    // cavity decay rate
    double gamma = 0.0;    // atomic decay rate

    /// Throws DomainError if hbar <= 0 or a rate is negative.
    void validate() const;
};

Operator annihilation(const FockSpace& space);
Operator creation(const FockSpace& space);
Operator number_operator(const FockSpace& space);

Operator field_hamiltonian(const FockSpace& space, const ModelParams& params, bool include_zero_point);

struct AtomicOperators {
    Operator sigma_z;
    Operator sigma_plus;
    Operator sigma_minus;
};

AtomicOperators atomic_operators();

/// (hbar omega0 / 2) sz x I + hbar omega I x a^dag a + hbar g (s- x a^dag + s+ x a),
/// atom as the leftmost factor.
Operator jc_hamiltonian(const FockSpace& field, const ModelParams& params);

/// hbar omega (N x I + I x N) + hbar J (a^dag x a + a x a^dag) on two equal cavities.
Operator coupled_cavity_hamiltonian(const FockSpace& field, const ModelParams& params);

}  // namespace qoptics
