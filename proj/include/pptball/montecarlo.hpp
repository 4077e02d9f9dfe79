#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "pptball/robustness.hpp"

namespace pptball {

struct SamplerConfig {
    std::uint64_t master_seed = 0;
    std::size_t trials = 1000;
    std::uint64_t stream_id = 0;
};

/// Engine for trial `index` of a stream.
std::mt19937_64 trial_engine(const SamplerConfig& cfg, std::uint64_t index);

/// G G^dagger / Tr(G G^dagger) with G a square complex Ginibre matrix.
DensityMatrix sample_hs_density(const HilbertStructure& structure, std::mt19937_64& rng);
DensityMatrix sample_hs_density(const HilbertStructure& structure, const SamplerConfig& cfg, std::uint64_t index = 0);

/// Dirichlet(1,...,1)-weighted mixture of Haar-random product projectors.
DensityMatrix sample_random_product_separable(const HilbertStructure& structure, std::size_t mixture_terms,
                                              std::mt19937_64& rng);
DensityMatrix sample_random_product_separable(const HilbertStructure& structure, std::size_t mixture_terms,
                                              const SamplerConfig& cfg, std::uint64_t index = 0);

struct VerificationOutcome {
    std::string check;
    SamplerConfig config;
    std::size_t trials = 0;
    std::size_t ppt_violations = 0;
    std::size_t witness_violations = 0;
    /// min over trials of min(PT min eigenvalue + psd_tol, -witness value); positive means every trial passed.
    double worst_margin = 0.0;
    /// Trial indices that failed; feed back through trial_engine to reproduce.
    std::vector<std::uint64_t> seeds_of_failures;

    bool clean() const { return ppt_violations == 0 && witness_violations == 0; }
};

/// Perturbs each family member Omega_x, x in x_grid, by y = y_fraction * y0(x)
/// towards Hilbert-Schmidt random states and checks PPT on every cut and a
/// negative witness value. cfg.trials draws per grid point.
VerificationOutcome verify_ball(const UpbAnalysis& a, std::span<const double> x_grid, double y_fraction,
                                const SamplerConfig& cfg, BoundMode mode = BoundMode::Tight);

/// Mixes Omega with random separable states at weight z = z_fraction * lambda.
VerificationOutcome verify_separable_mixing(const UpbAnalysis& a, double z_fraction, const SamplerConfig& cfg,
                                            std::size_t mixture_terms = 0);

/// `points` equally spaced interior points of (x*, 1).
std::vector<double> interior_grid(double x_star, std::size_t points);

struct FractionEstimate {
    std::size_t hits = 0;
    std::size_t trials = 0;
    double fraction = 0.0;
    double ci_low = 0.0;  // Wilson score interval, 95%
    double ci_high = 0.0;
};

/// Fraction of Hilbert-Schmidt samples tau with ball_membership(tau, center) < radius.
FractionEstimate ball_fraction_estimate(const DensityMatrix& center, double radius, const SamplerConfig& cfg);

}  // namespace pptball
