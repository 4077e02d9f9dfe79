#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "pptball/witness.hpp"

namespace pptball {

/// x * base + (1 - x) * I/D.
class LineFamily {
public:
    explicit LineFamily(DensityMatrix base) : base_(std::move(base)) {}

    const DensityMatrix& base() const { return base_; }
    const HilbertStructure& structure() const { return base_.structure(); }
    std::size_t dim() const { return base_.dim(); }

    DensityMatrix member(double x) const;

private:
    DensityMatrix base_;
};

/// How the witness branch bounds Tr(W sigma) from above.
enum class BoundMode {
    PaperExact,  // Tr(W+) / p, only a valid bound when the positive spectrum is flat
    Tight,       // largest positive eigenvalue
};

const char* to_string(BoundMode mode);

/// Witness data entering the radius formula for a base state rho.
struct WitnessBounds {
    double lambda_rho = 0.0;  // -Tr(W rho)
    std::size_t dim = 0;
    double pos_part_trace = 0.0;
    std::size_t p_count = 0;
    double max_pos_eigenvalue = 0.0;

    static WitnessBounds from(const Witness& w, const DensityMatrix& rho);
    double upper(BoundMode mode) const;
};

/// 1 / (1 + D lambda_rho). Rejects lambda_rho <= 0.
double entanglement_threshold(double lambda_rho, std::size_t dim);

/// 1 - lambda D / n, the same threshold written in UPB parameters.
double upb_entanglement_threshold(std::size_t n, std::size_t dim, double lambda);

/// (1 - x) / (D - 1 - x): largest y keeping the inner mixture in the purity ball.
double purity_branch(double x, std::size_t dim);

/// Largest y keeping the witness value negative for every direction sigma.
double witness_branch(const WitnessBounds& b, double x, BoundMode mode);

/// min(purity branch, witness branch) for x in (x*, 1).
double radius_y0(const WitnessBounds& b, double x, BoundMode mode = BoundMode::Tight);

struct CrossingReport {
    double root = 0.0;
    double residual = 0.0;  // |purity - witness| at root
    double purity_value = 0.0;
    double witness_value = 0.0;
    double printed_formula = 0.0;  // closed form as printed in the source, kept for comparison only
    std::size_t bisection_steps = 0;
};

/// Point in (x*, 1) where both radius branches meet, by bisection.
CrossingReport crossing_x0(std::size_t n, std::size_t dim, double lambda);

/// Closed form for the crossing as printed in the source. Known to disagree with the root.
double printed_crossing_formula(std::size_t n, std::size_t dim, double lambda);

struct MixtureDecomposition {
    double s = 0.0;  // 1 - x(1 - y)
    double t = 0.0;  // y / s
};

struct MixtureResult {
    DensityMatrix tau;  // y sigma + (1 - y) rho_x
    MixtureDecomposition decomposition;
    double reconstruction_residual = 0.0;  // vs (1-s){t sigma + (1-t) I/D} + s rho
};

MixtureResult mixture_tau(const LineFamily& fam, const DensityMatrix& sigma, double x, double y);

/// Purity < 1/(D-1): sufficient for separability.
bool in_gurvits_ball(const DensityMatrix& rho);

/// Smallest mu with tau = mu rho' + (1 - mu) center for some state rho'.
double ball_membership(const DensityMatrix& tau, const DensityMatrix& center);

struct MixingThreshold {
    double threshold = 0.0;  // lambda_Omega p / (Tr W+ + lambda_Omega p)
    double lambda = 0.0;
    double identity_residual = 0.0;
};

/// Mixing weight below which z sigma + (1 - z) Omega stays witness-negative for every separable sigma.
MixingThreshold separable_mixing_threshold(double lambda, double lambda_omega, double pos_part_trace, std::size_t p_count);

/// lambda_Omega / (lambda_Omega + Tr(W sigma)) for a PPT sigma with Tr(W sigma) >= 0.
double ppt_mixing_threshold(const Witness& w, double lambda_omega, const DensityMatrix& sigma);

struct DirectionCheck {
    double z = 0.0;
    double min_pt_eigenvalue = 0.0;
    double witness_value = 0.0;
    bool ppt = false;
    bool witness_negative = false;
};

struct MaximalRobustnessReport {
    double x = 0.0;
    std::vector<DirectionCheck> points;
    bool all_pass = true;
};

/// Checks z sigma_dir + (1 - z) member(x) for every z in the grid. Failures are reported, not thrown.
MaximalRobustnessReport verify_maximal_robustness(const LineFamily& fam, double x, const Witness& w,
                                                  const DensityMatrix& sigma_dir, std::span<const double> z_grid);

/// Equal-weight mixture of the lambda-attaining product states.
DensityMatrix minimizer_mixture(const std::vector<ProductState>& minimizers, const HilbertStructure& structure);

/// Everything derived from one UPB: lambda, witness, Omega and its thresholds.
struct UpbAnalysis {
    UPBSet upb;
    LambdaResult lambda;
    Witness witness;
    DensityMatrix omega;
    double lambda_omega = 0.0;
    WitnessBounds bounds;
    double x_star = 0.0;

    LineFamily family() const { return LineFamily(omega); }
};

UpbAnalysis analyze_upb(const UPBSet& upb, const SeesawConfig& cfg = {});

struct RadiusSample {
    double x = 0.0;
    double y0_tight = 0.0;
    double y0_paper = 0.0;
};

struct RobustnessProfile {
    std::string upb_name;
    double lambda = 0.0;
    double lambda_omega = 0.0;
    double x_star = 0.0;
    CrossingReport x0;
    std::vector<RadiusSample> radius_samples;
    MixingThreshold mixing;
    BoundMode bound_mode = BoundMode::Tight;
};

/// grid_points samples over [x*, 1]; the endpoints carry the zero limits.
RobustnessProfile build_profile(const UpbAnalysis& a, std::size_t grid_points, BoundMode mode = BoundMode::Tight);

}  // namespace pptball
