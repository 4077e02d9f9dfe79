#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pptball/upb.hpp"

namespace pptball {

struct SeesawConfig {
    std::size_t restarts = 200;
    std::size_t max_iters = 500;
    double tol = 1e-12;             // stop once a full cycle improves by less than this
    std::uint64_t seed = 0;
    double minimizer_slack = 1e-9;  // endpoints this close to the best count as minimizers
    double distinct_fidelity = 1.0 - 1e-6;
};

/// Minimum of <phi|P_S|phi> over product states.
struct LambdaResult {
    double lambda = 0.0;
    ProductState minimizer;
    std::size_t restarts_used = 0;
    std::size_t iterations = 0;  // of the winning restart
    bool converged = false;
    /// Pairwise-distinct product states attaining lambda (first found first).
    std::vector<ProductState> minimizers;
    /// Objective after every local update of the winning restart.
    std::vector<double> trajectory;
};

/// <phi|P_S|phi> for a product state, evaluated factor by factor.
double product_overlap(const UPBSet& upb, const ProductState& phi);

/// Alternating minimization for bipartite sets.
///
/// With all but one local vector fixed, the objective is a quadratic form in the
/// free vector, minimized by the lowest eigenvector of the contracted operator.
/// Each restart starts from Haar-random local vectors drawn from its own substream.
LambdaResult compute_lambda(const UPBSet& upb, const SeesawConfig& cfg = {});

/// Same scheme cycling over all n >= 3 parties.
LambdaResult compute_lambda_multipartite(const UPBSet& upb, const SeesawConfig& cfg = {});

/// One see-saw run from a given starting product state.
LambdaResult seesaw_from(const UPBSet& upb, const ProductState& start, const SeesawConfig& cfg = {});

/// Unit-trace Hermitian operator with its spectral split cached.
class Witness {
public:
    /// Requires Tr(op) = 1 within 1e-10.
    explicit Witness(HermitianOperator op, std::optional<double> overlap_lambda = std::nullopt);

    const HermitianOperator& op() const { return op_; }
    const EigenDecomposition& eigen() const { return eig_; }
    double pos_part_trace() const { return pos_trace_; }
    double neg_part_trace() const { return neg_trace_; }
    std::size_t p_count() const { return p_count_; }
    std::size_t n_neg_count() const { return n_count_; }
    double max_pos_eigenvalue() const { return max_pos_; }
    /// Minimum product overlap the operator was built from, for UPB witnesses.
    std::optional<double> overlap_lambda() const { return lambda_; }

private:
    HermitianOperator op_;
    EigenDecomposition eig_;
    double pos_trace_ = 0.0;
    double neg_trace_ = 0.0;
    std::size_t p_count_ = 0;
    std::size_t n_count_ = 0;
    double max_pos_ = 0.0;
    std::optional<double> lambda_;
};

/// (P_S - lambda I) / (n - lambda D).
Witness build_witness(const UPBSet& upb, const LambdaResult& lam);
Witness build_witness(const UPBSet& upb, double lambda);

/// Tr(W rho).
double witness_value(const Witness& w, const DensityMatrix& rho);

struct SpectralSplit {
    HermitianOperator positive;  // W+
    HermitianOperator negative;  // W-, so that W = W+ - W-
    EigenDecomposition eigen;
};

SpectralSplit spectral_split(const Witness& w);

}  // namespace pptball
