#include "qoptics/operators.hpp"

#include <cmath>
#include <string>

namespace qoptics {

Operator::Operator(Space space, CMatrix entries) : space_(std::move(space)), entries_(std::move(entries)) {
    if (entries_.rows() != space_.dim() || entries_.cols() != space_.dim()) {
        throw DimensionError("operator is " + std::to_string(entries_.rows()) + "x" +
                             std::to_string(entries_.cols()) + " but space dimension is " +
                             std::to_string(space_.dim()));
    }
}

Operator Operator::identity(const Space& space) {
    return {space, CMatrix::Identity(space.dim(), space.dim())};
}

Operator Operator::zero(const Space& space) { return {space, CMatrix::Zero(space.dim(), space.dim())}; }

Operator& Operator::operator+=(const Operator& rhs) {
    require_same_space(space_, rhs.space_, "operator sum");
    entries_ += rhs.entries_;
    return *this;
}

Operator& Operator::operator-=(const Operator& rhs) {
    require_same_space(space_, rhs.space_, "operator difference");
    entries_ -= rhs.entries_;
    return *this;
}

Operator& Operator::operator*=(Complex scale) {
    entries_ *= scale;
    return *this;
}

Operator operator*(const Operator& lhs, const Operator& rhs) {
    require_same_space(lhs.space_, rhs.space_, "operator product");
    return {lhs.space_, lhs.entries_ * rhs.entries_};
}

StateVector operator*(const Operator& op, const StateVector& state) {
    require_same_space(op.space_, state.space(), "operator action");
    return {op.space_, op.entries_ * state.amplitudes()};
}

Operator commutator(const Operator& a, const Operator& b) { return a * b - b * a; }

Operator tensor_op(const Operator& left, const Operator& right) {
    const CMatrix& a = left.matrix();
    const CMatrix& b = right.matrix();
    const Eigen::Index rb = b.rows();
    CMatrix out = CMatrix::Zero(a.rows() * rb, a.cols() * rb);
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            if (a(i, j) != Complex(0.0)) {
                out.block(i * rb, j * rb, rb, rb) = a(i, j) * b;
            }
        }
    }
    return {tensor(left.space(), right.space()), std::move(out)};
}

void ModelParams::validate() const {
    if (!(hbar > 0.0)) {
        throw DomainError("hbar must be positive");
    }
    if (kappa < 0.0) {
        throw DomainError("kappa must be non-negative");
    }
    if (gamma < 0.0) {
        throw DomainError("gamma must be non-negative");
    }
}

Operator annihilation(const FockSpace& space) {
    const int d = space.dim();
    CMatrix a = CMatrix::Zero(d, d);
    for (int n = 1; n < d; ++n) {
        a(n - 1, n) = std::sqrt(static_cast<double>(n));
    }
    return {space, std::move(a)};
}

Operator creation(const FockSpace& space) { return annihilation(space).adjoint(); }

Operator number_operator(const FockSpace& space) {
    const int d = space.dim();
    CMatrix n = CMatrix::Zero(d, d);
    for (int k = 0; k < d; ++k) {
        n(k, k) = static_cast<double>(k);
    }
    return {space, std::move(n)};
}

Operator field_hamiltonian(const FockSpace& space, const ModelParams& params, bool include_zero_point) {
    params.validate();
    Operator h = number_operator(space);
    if (include_zero_point) {
        h += 0.5 * Operator::identity(space);
    }
    return h * Complex(params.hbar * params.omega_f);
}

AtomicOperators atomic_operators() {
    const Space qubit = QubitSpace{};
    CMatrix sz = CMatrix::Zero(2, 2);
    sz(0, 0) = 1.0;
    sz(1, 1) = -1.0;
    CMatrix sp = CMatrix::Zero(2, 2);
    sp(QubitSpace::kExcited, QubitSpace::kGround) = 1.0;
    return {Operator(qubit, sz), Operator(qubit, sp), Operator(qubit, sp.adjoint())};
}

Operator jc_hamiltonian(const FockSpace& field, const ModelParams& params) {
    params.validate();
    const auto [sz, sp, sm] = atomic_operators();
    const Operator id_atom = Operator::identity(QubitSpace{});
    const Operator id_field = Operator::identity(field);
    const Operator a = annihilation(field);
    const Operator ad = creation(field);

    const double hbar = params.hbar;
    Operator h = tensor_op(sz, id_field) * Complex(0.5 * hbar * params.omega_0);
    h += tensor_op(id_atom, ad * a) * Complex(hbar * params.omega_f);
    h += (tensor_op(sm, ad) + tensor_op(sp, a)) * Complex(hbar * params.g);
    return h;
}

Operator coupled_cavity_hamiltonian(const FockSpace& field, const ModelParams& params) {
    params.validate();
    const Operator id = Operator::identity(field);
    const Operator a = annihilation(field);
    const Operator ad = creation(field);
    const Operator n = ad * a;

    const double hbar = params.hbar;
    Operator h = (tensor_op(n, id) + tensor_op(id, n)) * Complex(hbar * params.omega_f);
    h += (tensor_op(ad, a) + tensor_op(a, ad)) * Complex(hbar * params.J);
    return h;
}

}  // namespace qoptics
