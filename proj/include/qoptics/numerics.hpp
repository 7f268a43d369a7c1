#pragma once

// Dense linear-algebra kernels and the seedable random stream.

#include <array>
#include <cstdint>

#include "qoptics/hilbert.hpp"

namespace qoptics {

struct EigenDecomposition {
    Eigen::VectorXd values;  // ascending
    CMatrix vectors;         // orthonormal columns, vectors.col(k) pairs with values(k)
};

/// max |A_ij - conj(A_ji)|
double hermiticity_error(const CMatrix& a);
bool is_hermitian(const CMatrix& a, double tolerance);

/// Full spectrum of a Hermitian matrix. Throws PreconditionError when A is
/// not Hermitian within 1e-8.
EigenDecomposition hermitian_eig(const CMatrix& a);

/// exp(s * H) for Hermitian H, as V diag(exp(s lambda_k)) V^dagger.
/// With s purely imaginary the result is unitary.
CMatrix unitary_exp(const CMatrix& h, Complex s);

/// General matrix exponential by scaling and squaring of a Taylor series.
/// Used where the exponent is not Hermitian (e.g. the exact non-Hermitian
/// MCWF stepper).
CMatrix expm(const CMatrix& m);

// ---------------------------------------------------------------------------
// Counter-based random numbers
//
// Block function: Philox2x64 with 10 rounds (Salmon et al., SC'11), keyed by a
// 64-bit seed. Stream n of a generator keyed by `seed` is the sequence of
// blocks philox(counter = {n, 0}, key = seed) for n = 0, 1, 2, ...; each block
// yields two 64-bit words, consumed low word first.
//
// Independent streams fan out from a master seed with
//     stream_derive(master, i) = splitmix64 output at state master + (i + 1) * 0x9E3779B97F4A7C15
// i.e. z = master + (i+1)*0x9E3779B97F4A7C15;
//      z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9;
//      z = (z ^ (z >> 27)) * 0x94D049BB133111EB;
//      return z ^ (z >> 31);
// ---------------------------------------------------------------------------

using PhiloxCounter = std::array<std::uint64_t, 2>;

PhiloxCounter philox2x64_10(PhiloxCounter counter, std::uint64_t key);

std::uint64_t stream_derive(std::uint64_t master_seed, std::uint64_t index);

/// Single-owner uniform variate stream. Not copyable: derive a new stream
/// with stream_derive instead of duplicating one.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) noexcept : key_(seed) {}

    RngStream(const RngStream&) = delete;
    RngStream& operator=(const RngStream&) = delete;
    RngStream(RngStream&&) noexcept = default;
    RngStream& operator=(RngStream&&) noexcept = default;

    std::uint64_t seed() const noexcept { return key_; }

    std::uint64_t next_u64() noexcept;

    /// Uniform in [0, 1) with 53-bit resolution.
    double uniform() noexcept;

private:
    std::uint64_t key_;
    std::uint64_t block_ = 0;
    PhiloxCounter buffer_{};
    bool have_high_ = false;
};

inline double rng_uniform(RngStream& stream) noexcept { return stream.uniform(); }

}  // namespace qoptics
