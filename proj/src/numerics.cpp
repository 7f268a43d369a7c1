#include "qoptics/numerics.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

namespace qoptics {

double hermiticity_error(const CMatrix& a) {
    if (a.rows() != a.cols()) {
        throw DimensionError("hermiticity check needs a square matrix");
    }
    if (a.size() == 0) {
        return 0.0;
    }
    return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const CMatrix& a, double tolerance) { return hermiticity_error(a) <= tolerance; }

EigenDecomposition hermitian_eig(const CMatrix& a) {
    const double err = hermiticity_error(a);
    if (err > 1e-8) {
        throw PreconditionError("hermitian_eig: matrix is not Hermitian (deviation " + std::to_string(err) +
                                ")");
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(a, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) {
        throw Error("hermitian_eig: eigensolver did not converge");
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

CMatrix unitary_exp(const CMatrix& h, Complex s) {
    const EigenDecomposition eig = hermitian_eig(h);
    CVector phases(eig.values.size());
    for (Eigen::Index k = 0; k < phases.size(); ++k) {
        phases(k) = std::exp(s * eig.values(k));
    }
    return eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();
}

CMatrix expm(const CMatrix& m) {
    if (m.rows() != m.cols()) {
        throw DimensionError("expm needs a square matrix");
    }
    const Eigen::Index n = m.rows();
    const double norm1 = m.cwiseAbs().colwise().sum().maxCoeff();
    int squarings = 0;
    if (norm1 > 0.5) {
        squarings = static_cast<int>(std::ceil(std::log2(norm1 / 0.5)));
    }
    const CMatrix scaled = m / std::ldexp(1.0, squarings);

    // ||scaled|| <= 1/2, so 30 terms are far below double epsilon.
    CMatrix result = CMatrix::Identity(n, n);
    CMatrix term = CMatrix::Identity(n, n);
    for (int k = 1; k <= 30; ++k) {
        term = term * scaled / static_cast<double>(k);
        result += term;
        if (term.cwiseAbs().maxCoeff() <= 1e-18 * result.cwiseAbs().maxCoeff()) {
            break;
        }
    }
    for (int i = 0; i < squarings; ++i) {
        result = result * result;
    }
    return result;
}

namespace {

__extension__ using Uint128 = unsigned __int128;

constexpr std::uint64_t kPhiloxMultiplier = 0xD2B74407B1CE6E93ULL;
constexpr std::uint64_t kPhiloxWeyl = 0x9E3779B97F4A7C15ULL;

}  // namespace

PhiloxCounter philox2x64_10(PhiloxCounter counter, std::uint64_t key) {
    for (int round = 0; round < 10; ++round) {
        const Uint128 product = static_cast<Uint128>(kPhiloxMultiplier) * counter[0];
        const auto hi = static_cast<std::uint64_t>(product >> 64);
        const auto lo = static_cast<std::uint64_t>(product);
        counter = {hi ^ key ^ counter[1], lo};
        key += kPhiloxWeyl;
    }
    return counter;
}

std::uint64_t stream_derive(std::uint64_t master_seed, std::uint64_t index) {
    std::uint64_t z = master_seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t RngStream::next_u64() noexcept {
    if (have_high_) {
        have_high_ = false;
        return buffer_[1];
    }
    buffer_ = philox2x64_10({block_++, 0}, key_);
    have_high_ = true;
    return buffer_[0];
}

double RngStream::uniform() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

}  // namespace qoptics
