#include "pptball/witness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pptball/errors.hpp"
#include "pptball/random.hpp"

namespace pptball {

namespace {

constexpr std::uint64_t kSeesawStream = 0x5EE5A11ULL;
constexpr double kZeroEigTol = 1e-12;

// |<phi_k | v_i^k>|^2 for every member i at party k.
double local_overlap(const Vector& phi, const Vector& v) { return std::norm(phi.dot(v)); }

struct Run {
    std::vector<Vector> locals;
    double value = std::numeric_limits<double>::infinity();
    std::size_t iterations = 0;
    bool converged = false;
    std::vector<double> trajectory;
};

double objective(const UPBSet& upb, const std::vector<Vector>& locals) {
    double total = 0.0;
    for (const auto& m : upb.members()) {
        double term = 1.0;
        for (std::size_t k = 0; k < locals.size(); ++k) term *= local_overlap(locals[k], m.locals()[k]);
        total += term;
    }
    return total;
}

// Replace the local vector of `party` by the optimal one given the others.
double update_party(const UPBSet& upb, std::vector<Vector>& locals, std::size_t party) {
    const auto d = static_cast<Eigen::Index>(upb.structure().local_dims()[party]);
    Matrix contracted = Matrix::Zero(d, d);
    for (const auto& m : upb.members()) {
        double weight = 1.0;
        for (std::size_t k = 0; k < locals.size(); ++k)
            if (k != party) weight *= local_overlap(locals[k], m.locals()[k]);
        const Vector& v = m.locals()[party];
        contracted += weight * (v * v.adjoint());
    }
    const auto eig = eig_hermitian(HermitianOperator(contracted));
    locals[party] = eig.eigenvectors.col(0).normalized();
    return objective(upb, locals);
}

Run run_seesaw(const UPBSet& upb, std::vector<Vector> locals, const SeesawConfig& cfg) {
    Run run;
    double current = objective(upb, locals);
    run.trajectory.push_back(current);
    for (std::size_t it = 0; it < cfg.max_iters; ++it) {
        const double before = current;
        for (std::size_t k = 0; k < locals.size(); ++k) {
            // The eigenvector step cannot increase the objective; guard against
            // round-off noise by keeping the previous vector on a tie.
            const Vector keep = locals[k];
            const double next = update_party(upb, locals, k);
            if (next > current) {
                locals[k] = keep;
            } else {
                current = next;
            }
            run.trajectory.push_back(current);
        }
        run.iterations = it + 1;
        if (before - current < cfg.tol) {
            run.converged = true;
            break;
        }
    }
    run.value = current;
    run.locals = std::move(locals);
    return run;
}

LambdaResult to_result(const UPBSet& upb, Run run, std::size_t restarts) {
    ProductState minimizer(run.locals);
    return LambdaResult{
        .lambda = product_overlap(upb, minimizer),
        .minimizer = minimizer,
        .restarts_used = restarts,
        .iterations = run.iterations,
        .converged = run.converged,
        .minimizers = {minimizer},
        .trajectory = std::move(run.trajectory),
    };
}

LambdaResult multistart(const UPBSet& upb, const SeesawConfig& cfg) {
    if (cfg.restarts == 0) throw ValidationError("see-saw: restarts must be positive");
    std::vector<Run> runs;
    runs.reserve(cfg.restarts);
    for (std::size_t r = 0; r < cfg.restarts; ++r) {
        auto rng = substream(cfg.seed, kSeesawStream, r);
        std::vector<Vector> start;
        for (auto d : upb.structure().local_dims()) start.push_back(random_unit_vector(static_cast<Eigen::Index>(d), rng));
        runs.push_back(run_seesaw(upb, std::move(start), cfg));
    }

    std::size_t best = 0;
    for (std::size_t r = 1; r < runs.size(); ++r)
        if (runs[r].value < runs[best].value) best = r;

    const double best_value = runs[best].value;
    std::vector<ProductState> minimizers;
    for (const auto& run : runs) {
        if (run.value > best_value + cfg.minimizer_slack) continue;
        ProductState candidate(run.locals);
        const bool seen = std::any_of(minimizers.begin(), minimizers.end(), [&](const ProductState& m) {
            return m.fidelity(candidate) >= cfg.distinct_fidelity;
        });
        if (!seen) minimizers.push_back(std::move(candidate));
    }

    // Keep the winning restart first in the minimizer list.
    ProductState winner(runs[best].locals);
    auto it = std::find_if(minimizers.begin(), minimizers.end(),
                           [&](const ProductState& m) { return m.fidelity(winner) >= cfg.distinct_fidelity; });
    if (it != minimizers.end()) std::rotate(minimizers.begin(), it, it + 1);

    auto result = to_result(upb, std::move(runs[best]), cfg.restarts);
    result.minimizers = std::move(minimizers);
    return result;
}

}  // namespace

double product_overlap(const UPBSet& upb, const ProductState& phi) {
    if (phi.parties() != upb.structure().parties()) throw ValidationError("product_overlap: party count mismatch");
    return objective(upb, phi.locals());
}

LambdaResult compute_lambda(const UPBSet& upb, const SeesawConfig& cfg) {
    if (upb.structure().parties() != 2) throw ValidationError("compute_lambda: UPB must be bipartite");
    return multistart(upb, cfg);
}

LambdaResult compute_lambda_multipartite(const UPBSet& upb, const SeesawConfig& cfg) {
    if (upb.structure().parties() < 3) throw ValidationError("compute_lambda_multipartite: need at least three parties");
    return multistart(upb, cfg);
}

LambdaResult seesaw_from(const UPBSet& upb, const ProductState& start, const SeesawConfig& cfg) {
    if (start.parties() != upb.structure().parties()) throw ValidationError("seesaw_from: party count mismatch");
    for (std::size_t k = 0; k < start.parties(); ++k)
        if (static_cast<std::size_t>(start.locals()[k].size()) != upb.structure().local_dims()[k])
            throw ValidationError("seesaw_from: local dimension mismatch");
    return to_result(upb, run_seesaw(upb, start.locals(), cfg), 1);
}

Witness::Witness(HermitianOperator op, std::optional<double> overlap_lambda)
    : op_(std::move(op)), eig_(eig_hermitian(op_)), lambda_(overlap_lambda) {
    if (std::abs(op_.trace() - 1.0) > 1e-10) throw ValidationError("Witness: trace must be 1");
    for (Eigen::Index i = 0; i < eig_.eigenvalues.size(); ++i) {
        const double e = eig_.eigenvalues(i);
        if (e > kZeroEigTol) {
            pos_trace_ += e;
            ++p_count_;
            max_pos_ = std::max(max_pos_, e);
        } else if (e < -kZeroEigTol) {
            neg_trace_ -= e;
            ++n_count_;
        }
    }
}

Witness build_witness(const UPBSet& upb, double lambda) {
    const auto n = static_cast<double>(upb.size());
    const auto d = static_cast<double>(upb.structure().total_dim());
    const double norm = n - lambda * d;
    if (!(lambda > 0.0) || !(norm > 0.0))
        throw DomainError("build_witness: need 0 < lambda < n/D for a normalizable witness");
    const auto w = (upb.projector() - HermitianOperator::identity(upb.structure().total_dim()) * lambda) * (1.0 / norm);
    return Witness(w, lambda);
}

Witness build_witness(const UPBSet& upb, const LambdaResult& lam) { return build_witness(upb, lam.lambda); }

double witness_value(const Witness& w, const DensityMatrix& rho) {
    if (w.op().dim() != rho.dim()) throw ValidationError("witness_value: dimension mismatch");
    return w.op().trace_product(rho.op());
}

SpectralSplit spectral_split(const Witness& w) {
    const auto& eig = w.eigen();
    const RealVector pos = eig.eigenvalues.cwiseMax(0.0);
    const RealVector neg = (-eig.eigenvalues).cwiseMax(0.0);
    const Matrix& v = eig.eigenvectors;
    return SpectralSplit{
        .positive = HermitianOperator(v * pos.cast<cplx>().asDiagonal() * v.adjoint(), 1e-10),
        .negative = HermitianOperator(v * neg.cast<cplx>().asDiagonal() * v.adjoint(), 1e-10),
        .eigen = eig,
    };
}

}  // namespace pptball
