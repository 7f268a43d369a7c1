#pragma once

// Space descriptors and the dense state containers every other module uses.
//
// A Space is an ordered list of tensor factors. Kronecker order is fixed at
// construction: the first factor is the most significant digit of the flat
// basis index, so |n1, n2> sits at n1 * dim2 + n2.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qoptics/errors.hpp"

namespace qoptics {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

namespace tol {
inline constexpr double kNormalization = 1e-10;
inline constexpr double kHermiticity = 1e-10;
inline constexpr double kPsdFloor = -1e-8;
}  // namespace tol

/// Truncated single-mode Fock space with basis |0> ... |dim-1>.
class FockSpace {
public:
    explicit FockSpace(int dim);

    int dim() const noexcept { return dim_; }
    friend bool operator==(const FockSpace&, const FockSpace&) = default;

private:
    int dim_;
};

/// Two-level atom. |e> is index 0 and |g> is index 1.
struct QubitSpace {
    static constexpr int kExcited = 0;
    static constexpr int kGround = 1;
    static constexpr int dim() noexcept { return 2; }
    friend bool operator==(const QubitSpace&, const QubitSpace&) = default;
};

enum class FactorKind { Fock, Qubit };

struct Factor {
    FactorKind kind;
    int dim;
    friend bool operator==(const Factor&, const Factor&) = default;
};

class Space {
public:
    Space(FockSpace fock);    // NOLINT(google-explicit-constructor)
    Space(QubitSpace qubit);  // NOLINT(google-explicit-constructor)

    /// Ordered product of the given spaces; nested composites are flattened.
    static Space product(std::initializer_list<Space> parts);

    int dim() const noexcept { return dim_; }
    std::size_t factor_count() const noexcept { return factors_.size(); }
    bool is_composite() const noexcept { return factors_.size() > 1; }
    const Factor& factor(std::size_t i) const;
    std::span<const Factor> factors() const noexcept { return factors_; }

    /// Mixed-radix flat index of a product basis ket, first factor most significant.
    int flat_index(std::span<const int> digits) const;
    int flat_index(std::initializer_list<int> digits) const {
        return flat_index(std::span<const int>(digits.begin(), digits.size()));
    }

    friend bool operator==(const Space&, const Space&) = default;

private:
    Space() = default;
    std::vector<Factor> factors_;
    int dim_ = 1;
};

/// Kronecker-ordered composite: `left` becomes the most significant factor.
Space tensor(const Space& left, const Space& right);

/// Throws DimensionError naming `what` unless a == b.
void require_same_space(const Space& a, const Space& b, const char* what);

class StateVector {
public:
    StateVector(Space space, CVector amplitudes);

    const Space& space() const noexcept { return space_; }
    const CVector& amplitudes() const noexcept { return amplitudes_; }
    int size() const noexcept { return static_cast<int>(amplitudes_.size()); }
    Complex operator[](int i) const { return amplitudes_(i); }

    bool is_normalized(double tolerance = tol::kNormalization) const;

private:
    Space space_;
    CVector amplitudes_;
};

/// Summary of how far a matrix is from being a valid density operator.
struct DensityDiagnostics {
    double hermiticity_error;  // max |rho_ij - conj(rho_ji)|
    Complex trace;
    double min_eigenvalue;  // of the Hermitian part
};

class DensityMatrix {
public:
    DensityMatrix(Space space, CMatrix entries);

    const Space& space() const noexcept { return space_; }
    const CMatrix& entries() const noexcept { return entries_; }
    int size() const noexcept { return static_cast<int>(entries_.rows()); }
    Complex operator()(int row, int col) const { return entries_(row, col); }

    Complex trace() const { return entries_.trace(); }
    DensityDiagnostics diagnose() const;

    /// Hermitian, unit trace and PSD under the default tolerances.
    bool is_valid() const;

private:
    Space space_;
    CMatrix entries_;
};

FockSpace fock_space(int dim);

StateVector number_state(const FockSpace& space, int n);
StateVector excited_state();
StateVector ground_state();

/// Product basis ket |d1, d2, ...> of a (possibly composite) space.
StateVector basis_state(const Space& space, std::initializer_list<int> digits);

/// Raw linear combination of number states. Not normalized.
StateVector superpose(const FockSpace& space, std::span<const std::pair<Complex, int>> terms);
StateVector superpose(const FockSpace& space, std::initializer_list<std::pair<Complex, int>> terms);

double norm(const StateVector& state);
StateVector normalize(const StateVector& state);

Complex inner(const StateVector& bra, const StateVector& ket);

StateVector tensor_state(const StateVector& left, const StateVector& right);

DensityMatrix density_from_pure(const StateVector& state);

/// Reduced density matrix on factor `keep` of a composite space.
DensityMatrix partial_trace(const DensityMatrix& rho, std::size_t keep);

}  // namespace qoptics
