#include "qoptics/dissipative.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <thread>

#include "qoptics/numerics.hpp"

namespace qoptics {

std::vector<DecayChannel> jc_decay_channels(const FockSpace& field, double kappa, double gamma) {
    if (kappa < 0.0 || gamma < 0.0) {
        throw DomainError("decay rates must be non-negative");
    }
    std::vector<DecayChannel> channels;
    if (kappa > 0.0) {
        channels.push_back({tensor_op(Operator::identity(QubitSpace{}), annihilation(field)), kappa});
    }
    if (gamma > 0.0) {
        channels.push_back({tensor_op(atomic_operators().sigma_minus, Operator::identity(field)), gamma});
    }
    return channels;
}

LindbladGenerator::LindbladGenerator(const Operator& h, const std::vector<DecayChannel>& channels, double hbar)
    : space_(h.space()), h_(h.matrix()), hbar_(hbar) {
    if (!(hbar > 0.0)) {
        throw DomainError("hbar must be positive");
    }
    for (const DecayChannel& c : channels) {
        require_same_space(c.op.space(), space_, "decay channel");
        if (c.rate < 0.0) {
            throw DomainError("decay rate must be non-negative");
        }
        const CMatrix& l = c.op.matrix();
        terms_.push_back({l, l.adjoint(), l.adjoint() * l, c.rate});
    }
}

CMatrix LindbladGenerator::operator()(const CMatrix& rho) const {
    CMatrix out = Complex(0.0, -1.0 / hbar_) * (h_ * rho - rho * h_);
    for (const Term& t : terms_) {
        out += (0.5 * t.rate) *
               (2.0 * t.jump * rho * t.jump_adj - rho * t.jump_dag_jump - t.jump_dag_jump * rho);
    }
    return out;
}

CMatrix lindblad_rhs(const Operator& h, const std::vector<DecayChannel>& channels, const DensityMatrix& rho,
                     double hbar) {
    require_same_space(h.space(), rho.space(), "lindblad_rhs");
    return LindbladGenerator(h, channels, hbar)(rho.entries());
}

CMatrix rk4_step(const CMatrix& rho, double dt, const MatrixDerivative& f) {
    if (!(dt > 0.0)) {
        throw DomainError("RK4 step must be positive");
    }
    const CMatrix k1 = f(rho);
    const CMatrix k2 = f(rho + 0.5 * dt * k1);
    const CMatrix k3 = f(rho + 0.5 * dt * k2);
    const CMatrix k4 = f(rho + dt * k3);
    return rho + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

DensityMatrix rk4_step(const DensityMatrix& rho, double dt, const MatrixDerivative& f) {
    return {rho.space(), rk4_step(rho.entries(), dt, f)};
}

TimeSeries integrate_master(const DensityMatrix& rho0, const Operator& h, const std::vector<DecayChannel>& channels,
                            const TimeGrid& grid, const std::vector<Projector>& projectors, double hbar,
                            const DensityObserver& observer) {
    require_same_space(rho0.space(), h.space(), "integrate_master");
    const DensityDiagnostics diag = rho0.diagnose();
    if (diag.hermiticity_error > tol::kHermiticity || std::abs(diag.trace - 1.0) > tol::kNormalization) {
        throw PreconditionError("initial density matrix must be Hermitian with unit trace");
    }
    std::vector<std::string> labels;
    for (const Projector& p : projectors) {
        require_same_space(p.state.space(), rho0.space(), "integrate_master projector");
        labels.push_back(p.label);
    }

    const LindbladGenerator generator(h, channels, hbar);
    const MatrixDerivative f = [&generator](const CMatrix& m) { return generator(m); };

    TimeSeries out(grid, std::move(labels));
    DensityMatrix rho = rho0;
    for (int k = 0; k < grid.samples(); ++k) {
        for (std::size_t j = 0; j < projectors.size(); ++j) {
            const CVector& p = projectors[j].state.amplitudes();
            out.at(k, static_cast<int>(j)) = p.dot(rho.entries() * p).real();
        }
        if (observer) {
            observer(k, rho);
        }
        if (k + 1 < grid.samples()) {
            rho = rk4_step(rho, grid.dt(), f);
        }
    }
    return out;
}

namespace {

struct JumpTerm {
    CMatrix jump;
    CMatrix jump_dag_jump;
    double rate;
};

class TrajectoryEngine {
public:
    TrajectoryEngine(const StateVector& psi0, const Operator& h, const std::vector<DecayChannel>& channels,
                     const TimeGrid& grid, const std::vector<Projector>& projectors, const McwfOptions& options)
        : psi0_(psi0), grid_(grid), projectors_(projectors), options_(options) {
        require_same_space(psi0.space(), h.space(), "mcwf");
        if (!psi0.is_normalized()) {
            throw PreconditionError("MCWF initial state must be normalized");
        }
        if (!(options.hbar > 0.0)) {
            throw DomainError("hbar must be positive");
        }
        for (const Projector& p : projectors) {
            require_same_space(p.state.space(), psi0.space(), "mcwf projector");
            labels_.push_back(p.label);
        }
        const int dim = h.space().dim();
        CMatrix h_nh = h.matrix();
        for (const DecayChannel& c : channels) {
            require_same_space(c.op.space(), h.space(), "decay channel");
            if (c.rate < 0.0) {
                throw DomainError("decay rate must be non-negative");
            }
            const CMatrix ldl = c.op.matrix().adjoint() * c.op.matrix();
            h_nh -= Complex(0.0, 0.5 * options.hbar * c.rate) * ldl;
            jumps_.push_back({c.op.matrix(), ldl, c.rate});
        }
        const Complex factor(0.0, -grid.dt() / options.hbar);
        if (options.stepper == McwfStepper::FirstOrder) {
            step_ = CMatrix::Identity(dim, dim) + factor * h_nh;
        } else {
            step_ = expm(factor * h_nh);
        }
    }

    TrajectoryRecord run(std::uint64_t seed) const {
        RngStream rng(seed);
        TrajectoryRecord record{TimeSeries(grid_, labels_), {}, {}, seed};
        CVector psi = psi0_.amplitudes();
        CVector next(psi.size());
        std::vector<double> weights(jumps_.size());

        for (int k = 0; k < grid_.samples(); ++k) {
            for (std::size_t j = 0; j < projectors_.size(); ++j) {
                record.series.at(k, static_cast<int>(j)) = std::norm(projectors_[j].state.amplitudes().dot(psi));
            }
            if (k + 1 == grid_.samples()) {
                break;
            }

            next.noalias() = step_ * psi;
            const double missing = 1.0 - next.squaredNorm();
            if (missing > options_.max_jump_probability) {
                throw StepTooLargeError(grid_.time(k), missing);
            }
            const double r = rng.uniform();

            std::optional<std::size_t> channel;
            if (!(r > missing)) {
                channel = pick_channel(options_.jump_source == JumpSource::PreStep ? psi : next, rng, weights);
            }
            if (!channel) {
                psi = next / next.norm();
                continue;
            }
            const CVector& source = options_.jump_source == JumpSource::PreStep ? psi : next;
            CVector jumped = jumps_[*channel].jump * source;
            psi = jumped / jumped.norm();
            record.jump_times.push_back(grid_.time(k + 1));
            record.jump_channels.push_back(static_cast<int>(*channel));
        }
        return record;
    }

    const std::vector<std::string>& labels() const noexcept { return labels_; }

private:
    // Channel c is chosen with probability rate_c <L_c^dag L_c> / sum. Returns
    // nothing when no channel can act on the state.
    std::optional<std::size_t> pick_channel(const CVector& source, RngStream& rng,
                                            std::vector<double>& weights) const {
        double total = 0.0;
        for (std::size_t c = 0; c < jumps_.size(); ++c) {
            weights[c] = jumps_[c].rate * source.dot(jumps_[c].jump_dag_jump * source).real();
            total += weights[c];
        }
        if (!(total > 0.0)) {
            return std::nullopt;
        }
        if (jumps_.size() == 1) {
            return 0;
        }
        const double target = rng.uniform() * total;
        double acc = 0.0;
        for (std::size_t c = 0; c < jumps_.size(); ++c) {
            acc += weights[c];
            if (target < acc && weights[c] > 0.0) {
                return c;
            }
        }
        // Roundoff left target at the top edge: take the last channel with weight.
        for (std::size_t c = jumps_.size(); c-- > 0;) {
            if (weights[c] > 0.0) {
                return c;
            }
        }
        return std::nullopt;
    }

    const StateVector& psi0_;
    TimeGrid grid_;
    const std::vector<Projector>& projectors_;
    McwfOptions options_;
    std::vector<std::string> labels_;
    std::vector<JumpTerm> jumps_;
    CMatrix step_;
};

}  // namespace

TrajectoryRecord mcwf_trajectory(const StateVector& psi0, const Operator& h,
                                 const std::vector<DecayChannel>& channels, const TimeGrid& grid,
                                 const std::vector<Projector>& projectors, std::uint64_t seed,
                                 const McwfOptions& options) {
    return TrajectoryEngine(psi0, h, channels, grid, projectors, options).run(seed);
}

EnsembleResult mcwf_ensemble(const StateVector& psi0, const Operator& h, const std::vector<DecayChannel>& channels,
                             const TimeGrid& grid, const std::vector<Projector>& projectors, int n_traj,
                             std::uint64_t master_seed, const McwfOptions& options, unsigned threads) {
    if (n_traj < 1) {
        throw DomainError("ensemble needs at least one trajectory");
    }
    const TrajectoryEngine engine(psi0, h, channels, grid, projectors, options);
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }

    EnsembleResult result{TimeSeries(grid, engine.labels()), TimeSeries(grid, engine.labels()), n_traj,
                          master_seed, std::vector<double>(static_cast<std::size_t>(n_traj))};
    // Welford accumulators; M2 lives in std_error until the end.
    Eigen::MatrixXd& mean = result.mean.values();
    Eigen::MatrixXd& m2 = result.std_error.values();

    // Trajectories run in parallel one block at a time and are folded into the
    // accumulators in index order, which keeps the sums schedule-independent.
    const int block = static_cast<int>(std::max(16u, 4 * threads));
    std::vector<std::optional<TrajectoryRecord>> slots(static_cast<std::size_t>(block));

    for (int start = 0; start < n_traj; start += block) {
        const int count = std::min(block, n_traj - start);
        std::atomic<int> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        auto worker = [&] {
            for (int i = next++; i < count; i = next++) {
                try {
                    slots[static_cast<std::size_t>(i)] =
                        engine.run(stream_derive(master_seed, static_cast<std::uint64_t>(start + i)));
                } catch (...) {
                    const std::lock_guard lock(failure_mutex);
                    if (!failure) {
                        failure = std::current_exception();
                    }
                }
            }
        };
        const unsigned pool = std::min<unsigned>(threads, static_cast<unsigned>(count));
        if (pool <= 1) {
            worker();
        } else {
            std::vector<std::thread> workers;
            workers.reserve(pool);
            for (unsigned t = 0; t < pool; ++t) {
                workers.emplace_back(worker);
            }
            for (std::thread& t : workers) {
                t.join();
            }
        }
        if (failure) {
            std::rethrow_exception(failure);
        }

        for (int i = 0; i < count; ++i) {
            TrajectoryRecord& rec = *slots[static_cast<std::size_t>(i)];
            const double n = start + i + 1.0;
            const Eigen::MatrixXd delta = rec.series.values() - mean;
            mean += delta / n;
            m2 += delta.cwiseProduct(rec.series.values() - mean);
            result.first_jump_times[static_cast<std::size_t>(start + i)] =
                rec.jump_times.empty() ? std::numeric_limits<double>::infinity() : rec.jump_times.front();
            slots[static_cast<std::size_t>(i)].reset();
        }
    }

    if (n_traj == 1) {
        m2.setZero();
    } else {
        m2 = (m2.cwiseMax(0.0) / ((n_traj - 1.0) * n_traj)).cwiseSqrt();
    }
    return result;
}

}  // namespace qoptics
