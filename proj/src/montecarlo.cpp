#include "pptball/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "pptball/errors.hpp"
#include "pptball/random.hpp"

namespace pptball {

std::mt19937_64 trial_engine(const SamplerConfig& cfg, std::uint64_t index) {
    return substream(cfg.master_seed, cfg.stream_id, index);
}

DensityMatrix sample_hs_density(const HilbertStructure& structure, std::mt19937_64& rng) {
    const auto d = static_cast<Eigen::Index>(structure.total_dim());
    const Matrix g = ginibre(d, d, rng);
    Matrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    return DensityMatrix::trusted(HermitianOperator(rho, 1e-10), structure);
}

DensityMatrix sample_hs_density(const HilbertStructure& structure, const SamplerConfig& cfg, std::uint64_t index) {
    auto rng = trial_engine(cfg, index);
    return sample_hs_density(structure, rng);
}

DensityMatrix sample_random_product_separable(const HilbertStructure& structure, std::size_t mixture_terms,
                                              std::mt19937_64& rng) {
    if (mixture_terms < 1) throw ValidationError("sample_random_product_separable: need at least one term");
    const auto d = static_cast<Eigen::Index>(structure.total_dim());
    std::exponential_distribution<double> exponential(1.0);
    std::vector<double> weights(mixture_terms);
    for (auto& w : weights) w = exponential(rng);
    const double total = std::accumulate(weights.begin(), weights.end(), 0.0);

    Matrix acc = Matrix::Zero(d, d);
    std::vector<Vector> locals(structure.parties());
    for (std::size_t term = 0; term < mixture_terms; ++term) {
        for (std::size_t k = 0; k < structure.parties(); ++k)
            locals[k] = random_unit_vector(static_cast<Eigen::Index>(structure.local_dims()[k]), rng);
        const Vector v = kron(locals);
        acc += (weights[term] / total) * (v * v.adjoint());
    }
    acc /= acc.trace().real();
    return DensityMatrix::trusted(HermitianOperator(acc, 1e-10), structure);
}

DensityMatrix sample_random_product_separable(const HilbertStructure& structure, std::size_t mixture_terms,
                                              const SamplerConfig& cfg, std::uint64_t index) {
    auto rng = trial_engine(cfg, index);
    return sample_random_product_separable(structure, mixture_terms, rng);
}

namespace {

struct Tally {
    VerificationOutcome out;

    void record(std::uint64_t index, const DensityMatrix& state, const Witness& w) {
        const auto ppt = is_ppt_all_cuts(state);
        const double value = witness_value(w, state);
        const bool ppt_fail = !ppt.ppt;
        const bool witness_fail = !(value < 0.0);
        out.ppt_violations += ppt_fail;
        out.witness_violations += witness_fail;
        if (ppt_fail || witness_fail) out.seeds_of_failures.push_back(index);
        out.worst_margin = std::min(out.worst_margin, std::min(ppt.min_eigenvalue + kPsdTol, -value));
        ++out.trials;
    }
};

Tally start(std::string check, const SamplerConfig& cfg) {
    Tally t;
    t.out.check = std::move(check);
    t.out.config = cfg;
    t.out.worst_margin = std::numeric_limits<double>::infinity();
    return t;
}

}  // namespace

std::vector<double> interior_grid(double x_star, std::size_t points) {
    std::vector<double> grid;
    for (std::size_t i = 1; i <= points; ++i)
        grid.push_back(x_star + (1.0 - x_star) * static_cast<double>(i) / static_cast<double>(points + 1));
    return grid;
}

VerificationOutcome verify_ball(const UpbAnalysis& a, std::span<const double> x_grid, double y_fraction,
                                const SamplerConfig& cfg, BoundMode mode) {
    if (!(y_fraction >= 0.0)) throw DomainError("verify_ball: y_fraction must be nonnegative");
    auto tally = start("ball", cfg);
    const auto fam = a.family();
    const auto& structure = a.omega.structure();
    for (std::size_t gi = 0; gi < x_grid.size(); ++gi) {
        const double x = x_grid[gi];
        const double y = y_fraction * radius_y0(a.bounds, x, mode);
        if (!(y < 1.0)) throw DomainError("verify_ball: perturbation weight reaches 1");
        for (std::size_t t = 0; t < cfg.trials; ++t) {
            const std::uint64_t index = gi * cfg.trials + t;
            const auto sigma = sample_hs_density(structure, cfg, index);
            tally.record(index, mixture_tau(fam, sigma, x, y).tau, a.witness);
        }
    }
    return tally.out;
}

VerificationOutcome verify_separable_mixing(const UpbAnalysis& a, double z_fraction, const SamplerConfig& cfg,
                                            std::size_t mixture_terms) {
    if (!(z_fraction >= 0.0)) throw DomainError("verify_separable_mixing: z_fraction must be nonnegative");
    const double z = z_fraction * a.lambda.lambda;
    if (!(z < 1.0)) throw DomainError("verify_separable_mixing: mixing weight reaches 1");
    const auto& structure = a.omega.structure();
    const std::size_t terms = mixture_terms == 0 ? structure.total_dim() : mixture_terms;
    auto tally = start("separable_mixing", cfg);
    for (std::size_t t = 0; t < cfg.trials; ++t) {
        const auto sigma = sample_random_product_separable(structure, terms, cfg, t);
        tally.record(t, mix(z, sigma, a.omega), a.witness);
    }
    return tally.out;
}

FractionEstimate ball_fraction_estimate(const DensityMatrix& center, double radius, const SamplerConfig& cfg) {
    FractionEstimate est;
    est.trials = cfg.trials;
    for (std::size_t t = 0; t < cfg.trials; ++t) {
        const auto tau = sample_hs_density(center.structure(), cfg, t);
        if (ball_membership(tau, center) < radius) ++est.hits;
    }
    if (est.trials == 0) return est;
    const double n = static_cast<double>(est.trials);
    const double p = static_cast<double>(est.hits) / n;
    const double z = 1.959963984540054;
    const double denom = 1.0 + z * z / n;
    const double centre = (p + z * z / (2.0 * n)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / n + z * z / (4.0 * n * n)) / denom;
    est.fraction = p;
    est.ci_low = est.hits == 0 ? 0.0 : std::max(0.0, centre - half);
    est.ci_high = est.hits == est.trials ? 1.0 : std::min(1.0, centre + half);
    return est;
}

}  // namespace pptball
