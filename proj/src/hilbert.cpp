#include "qoptics/hilbert.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

namespace qoptics {

StepTooLargeError::StepTooLargeError(double t, double jump_probability)
    : Error("MCWF step too large at t=" + std::to_string(t) +
            ": jump probability " + std::to_string(jump_probability) + " exceeds 0.1"),
      time_(t),
      jump_probability_(jump_probability) {}

FockSpace::FockSpace(int dim) : dim_(dim) {
    if (dim < 1) {
        throw DimensionError("Fock space dimension must be >= 1, got " + std::to_string(dim));
    }
}

Space::Space(FockSpace fock) : factors_{Factor{FactorKind::Fock, fock.dim()}}, dim_(fock.dim()) {}

Space::Space(QubitSpace) : factors_{Factor{FactorKind::Qubit, 2}}, dim_(2) {}

Space Space::product(std::initializer_list<Space> parts) {
    Space out;
    for (const Space& p : parts) {
        out.factors_.insert(out.factors_.end(), p.factors_.begin(), p.factors_.end());
        out.dim_ *= p.dim_;
    }
    if (out.factors_.empty()) {
        throw DimensionError("a space needs at least one factor");
    }
    return out;
}

const Factor& Space::factor(std::size_t i) const {
    if (i >= factors_.size()) {
        throw IndexError("factor index " + std::to_string(i) + " out of range for a " +
                         std::to_string(factors_.size()) + "-factor space");
    }
    return factors_[i];
}

int Space::flat_index(std::span<const int> digits) const {
    if (digits.size() != factors_.size()) {
        throw DimensionError("expected " + std::to_string(factors_.size()) + " basis digits, got " +
                             std::to_string(digits.size()));
    }
    int index = 0;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (digits[i] < 0 || digits[i] >= factors_[i].dim) {
            throw IndexError("basis digit " + std::to_string(digits[i]) + " out of range for factor " +
                             std::to_string(i) + " of dimension " + std::to_string(factors_[i].dim));
        }
        index = index * factors_[i].dim + digits[i];
    }
    return index;
}

Space tensor(const Space& left, const Space& right) { return Space::product({left, right}); }

void require_same_space(const Space& a, const Space& b, const char* what) {
    if (!(a == b)) {
        throw DimensionError(std::string(what) + ": space mismatch (dim " + std::to_string(a.dim()) +
                             " vs " + std::to_string(b.dim()) + ")");
    }
}

StateVector::StateVector(Space space, CVector amplitudes)
    : space_(std::move(space)), amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() != space_.dim()) {
        throw DimensionError("state has " + std::to_string(amplitudes_.size()) +
                             " amplitudes but space dimension is " + std::to_string(space_.dim()));
    }
}

bool StateVector::is_normalized(double tolerance) const {
    return std::abs(amplitudes_.norm() - 1.0) <= tolerance;
}

DensityMatrix::DensityMatrix(Space space, CMatrix entries)
    : space_(std::move(space)), entries_(std::move(entries)) {
    if (entries_.rows() != space_.dim() || entries_.cols() != space_.dim()) {
        throw DimensionError("density matrix is " + std::to_string(entries_.rows()) + "x" +
                             std::to_string(entries_.cols()) + " but space dimension is " +
                             std::to_string(space_.dim()));
    }
}

DensityDiagnostics DensityMatrix::diagnose() const {
    const CMatrix adj = entries_.adjoint();
    const double herm = (entries_ - adj).cwiseAbs().maxCoeff();
    const CMatrix hermitian_part = 0.5 * (entries_ + adj);
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(hermitian_part, Eigen::EigenvaluesOnly);
    return {herm, entries_.trace(), solver.eigenvalues().minCoeff()};
}

bool DensityMatrix::is_valid() const {
    const DensityDiagnostics d = diagnose();
    return d.hermiticity_error <= tol::kHermiticity && std::abs(d.trace - 1.0) <= tol::kNormalization &&
           d.min_eigenvalue >= tol::kPsdFloor;
}

FockSpace fock_space(int dim) { return FockSpace(dim); }

StateVector number_state(const FockSpace& space, int n) {
    if (n < 0 || n >= space.dim()) {
        throw IndexError("number state |" + std::to_string(n) + "> does not fit in dimension " +
                         std::to_string(space.dim()));
    }
    CVector amps = CVector::Zero(space.dim());
    amps(n) = 1.0;
    return {space, std::move(amps)};
}

StateVector excited_state() {
    CVector amps = CVector::Zero(2);
    amps(QubitSpace::kExcited) = 1.0;
    return {QubitSpace{}, std::move(amps)};
}

StateVector ground_state() {
    CVector amps = CVector::Zero(2);
    amps(QubitSpace::kGround) = 1.0;
    return {QubitSpace{}, std::move(amps)};
}

StateVector basis_state(const Space& space, std::initializer_list<int> digits) {
    CVector amps = CVector::Zero(space.dim());
    amps(space.flat_index(digits)) = 1.0;
    return {space, std::move(amps)};
}

StateVector superpose(const FockSpace& space, std::span<const std::pair<Complex, int>> terms) {
    CVector amps = CVector::Zero(space.dim());
    std::vector<bool> seen(static_cast<std::size_t>(space.dim()), false);
    for (const auto& [coeff, n] : terms) {
        if (n < 0 || n >= space.dim()) {
            throw IndexError("superposition term |" + std::to_string(n) + "> outside dimension " +
                             std::to_string(space.dim()));
        }
        if (seen[static_cast<std::size_t>(n)]) {
            throw DomainError("duplicate superposition term |" + std::to_string(n) + ">");
        }
        seen[static_cast<std::size_t>(n)] = true;
        amps(n) = coeff;
    }
    return {space, std::move(amps)};
}

StateVector superpose(const FockSpace& space, std::initializer_list<std::pair<Complex, int>> terms) {
    return superpose(space, std::span<const std::pair<Complex, int>>(terms.begin(), terms.size()));
}

double norm(const StateVector& state) { return state.amplitudes().norm(); }

StateVector normalize(const StateVector& state) {
    const double n = norm(state);
    if (n == 0.0) {
        throw DomainError("cannot normalize the zero vector");
    }
    return {state.space(), state.amplitudes() / n};
}

Complex inner(const StateVector& bra, const StateVector& ket) {
    require_same_space(bra.space(), ket.space(), "inner product");
    return bra.amplitudes().dot(ket.amplitudes());
}

StateVector tensor_state(const StateVector& left, const StateVector& right) {
    const CVector& a = left.amplitudes();
    const CVector& b = right.amplitudes();
    CVector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        out.segment(i * b.size(), b.size()) = a(i) * b;
    }
    return {tensor(left.space(), right.space()), std::move(out)};
}

DensityMatrix density_from_pure(const StateVector& state) {
    if (!state.is_normalized()) {
        throw PreconditionError("density_from_pure requires a normalized state (norm " +
                                std::to_string(norm(state)) + ")");
    }
    return {state.space(), state.amplitudes() * state.amplitudes().adjoint()};
}

namespace {

Space space_of(const Factor& f) {
    if (f.kind == FactorKind::Qubit) {
        return QubitSpace{};
    }
    return FockSpace(f.dim);
}

}  // namespace

DensityMatrix partial_trace(const DensityMatrix& rho, std::size_t keep) {
    const Space& space = rho.space();
    const int kept = space.factor(keep).dim;
    int outer = 1;
    for (std::size_t i = 0; i < keep; ++i) {
        outer *= space.factor(i).dim;
    }
    const int inner_dim = space.dim() / (outer * kept);

    CMatrix reduced = CMatrix::Zero(kept, kept);
    const CMatrix& m = rho.entries();
    for (int a = 0; a < kept; ++a) {
        for (int b = 0; b < kept; ++b) {
            Complex acc = 0.0;
            for (int l = 0; l < outer; ++l) {
                for (int r = 0; r < inner_dim; ++r) {
                    acc += m((l * kept + a) * inner_dim + r, (l * kept + b) * inner_dim + r);
                }
            }
            reduced(a, b) = acc;
        }
    }
    return {space_of(space.factor(keep)), std::move(reduced)};
}

}  // namespace qoptics
