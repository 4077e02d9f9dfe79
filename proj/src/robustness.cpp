#include "pptball/robustness.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pptball/errors.hpp"

namespace pptball {

DensityMatrix LineFamily::member(double x) const {
    if (!(x >= 0.0 && x <= 1.0)) throw DomainError("LineFamily::member: x must lie in [0,1]");
    if (x == 1.0) return base_;
    return mix(x, base_, DensityMatrix::maximally_mixed(structure()));
}

const char* to_string(BoundMode mode) {
    return mode == BoundMode::PaperExact ? "paper-exact" : "tight";
}

WitnessBounds WitnessBounds::from(const Witness& w, const DensityMatrix& rho) {
    return WitnessBounds{
        .lambda_rho = -witness_value(w, rho),
        .dim = rho.dim(),
        .pos_part_trace = w.pos_part_trace(),
        .p_count = w.p_count(),
        .max_pos_eigenvalue = w.max_pos_eigenvalue(),
    };
}

double WitnessBounds::upper(BoundMode mode) const {
    if (mode == BoundMode::PaperExact) {
        if (p_count == 0) throw DegenerateError("WitnessBounds: witness has no positive eigenvalues");
        return pos_part_trace / static_cast<double>(p_count);
    }
    return max_pos_eigenvalue;
}

double entanglement_threshold(double lambda_rho, std::size_t dim) {
    if (!(lambda_rho > 0.0))
        throw DomainError("entanglement_threshold: lambda_rho must be positive (base state is not witnessed)");
    return 1.0 / (1.0 + static_cast<double>(dim) * lambda_rho);
}

double upb_entanglement_threshold(std::size_t n, std::size_t dim, double lambda) {
    return 1.0 - lambda * static_cast<double>(dim) / static_cast<double>(n);
}

double purity_branch(double x, std::size_t dim) {
    return (1.0 - x) / (static_cast<double>(dim) - 1.0 - x);
}

double witness_branch(const WitnessBounds& b, double x, BoundMode mode) {
    const double d = static_cast<double>(b.dim);
    const double excess = x * (1.0 + d * b.lambda_rho) - 1.0;
    return excess / (d * b.upper(mode) + excess);
}

double radius_y0(const WitnessBounds& b, double x, BoundMode mode) {
    const double x_star = entanglement_threshold(b.lambda_rho, b.dim);
    if (!(x > x_star && x < 1.0))
        throw DomainError("radius_y0: x = " + std::to_string(x) + " outside (" + std::to_string(x_star) + ", 1)");
    return std::min(purity_branch(x, b.dim), witness_branch(b, x, mode));
}

namespace {

WitnessBounds upb_bounds(std::size_t n, std::size_t dim, double lambda) {
    const double nn = static_cast<double>(n);
    const double norm = nn - lambda * static_cast<double>(dim);
    if (!(lambda > 0.0) || !(norm > 0.0)) throw DomainError("UPB parameters need 0 < lambda < n/D");
    return WitnessBounds{
        .lambda_rho = lambda / norm,
        .dim = dim,
        .pos_part_trace = nn * (1.0 - lambda) / norm,
        .p_count = n,
        .max_pos_eigenvalue = (1.0 - lambda) / norm,
    };
}

}  // namespace

double printed_crossing_formula(std::size_t n, std::size_t dim, double lambda) {
    const double nn = static_cast<double>(n);
    const double d2 = static_cast<double>(dim);
    return (nn * (d2 - 2.0) + d2 * (1.0 - lambda * (d2 - 1.0))) / (nn * (d2 - 2.0) * d2 * (1.0 - lambda));
}

CrossingReport crossing_x0(std::size_t n, std::size_t dim, double lambda) {
    const auto b = upb_bounds(n, dim, lambda);
    auto gap = [&](double x) { return purity_branch(x, dim) - witness_branch(b, x, BoundMode::Tight); };

    double lo = upb_entanglement_threshold(n, dim, lambda);
    double hi = 1.0;
    if (!(gap(lo) > 0.0 && gap(hi) < 0.0)) throw DomainError("crossing_x0: branches do not cross inside (x*, 1)");

    CrossingReport r;
    for (; r.bisection_steps < 200; ++r.bisection_steps) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double g = gap(mid);
        if (g == 0.0) {
            lo = hi = mid;
            break;
        }
        (g > 0.0 ? lo : hi) = mid;
    }
    r.root = std::abs(gap(lo)) <= std::abs(gap(hi)) ? lo : hi;
    r.purity_value = purity_branch(r.root, dim);
    r.witness_value = witness_branch(b, r.root, BoundMode::Tight);
    r.residual = std::abs(r.purity_value - r.witness_value);
    r.printed_formula = printed_crossing_formula(n, dim, lambda);
    return r;
}

MixtureResult mixture_tau(const LineFamily& fam, const DensityMatrix& sigma, double x, double y) {
    if (!(x > 0.0 && x < 1.0)) throw DomainError("mixture_tau: x must lie in (0,1)");
    if (!(y >= 0.0 && y < 1.0)) throw DomainError("mixture_tau: y must lie in [0,1)");
    if (!(sigma.structure() == fam.structure())) throw ValidationError("mixture_tau: structure mismatch");

    const double s = 1.0 - x * (1.0 - y);
    const double t = y / s;
    auto tau = mix(y, sigma, fam.member(x));

    // Same state regrouped: weight s on the noisy direction t sigma + (1-t) I/D,
    // weight 1 - s = x(1-y) on the base state.
    const auto mixed = DensityMatrix::maximally_mixed(fam.structure());
    const Matrix regrouped =
        s * (t * sigma.matrix() + (1.0 - t) * mixed.matrix()) + (1.0 - s) * fam.base().matrix();
    const double residual = max_abs(regrouped - tau.matrix());
    return MixtureResult{std::move(tau), {s, t}, residual};
}

bool in_gurvits_ball(const DensityMatrix& rho) {
    return purity(rho) < 1.0 / (static_cast<double>(rho.dim()) - 1.0);
}

double ball_membership(const DensityMatrix& tau, const DensityMatrix& center) {
    if (tau.dim() != center.dim()) throw ValidationError("ball_membership: dimension mismatch");
    if (eig_hermitian(center.op()).min() <= 1e-12)
        throw DegenerateError("ball_membership: center is rank deficient; use a family member with x < 1");
    // Whiten with the Cholesky factor of the center: L^{-1} tau L^{-dagger}.
    const Eigen::LLT<Matrix> llt(center.matrix());
    if (llt.info() != Eigen::Success) throw DegenerateError("ball_membership: center is not positive definite");
    const auto lower = llt.matrixL();
    const Matrix half = lower.solve(tau.matrix());
    const Matrix whitened = lower.solve(half.adjoint()).adjoint();
    const double lo = eig_hermitian(HermitianOperator(0.5 * (whitened + whitened.adjoint()), 1e-8)).min();
    return std::clamp(1.0 - lo, 0.0, 1.0);
}

MixingThreshold separable_mixing_threshold(double lambda, double lambda_omega, double pos_part_trace,
                                           std::size_t p_count) {
    const double weighted = lambda_omega * static_cast<double>(p_count);
    const double threshold = weighted / (pos_part_trace + weighted);
    return {threshold, lambda, std::abs(threshold - lambda)};
}

double ppt_mixing_threshold(const Witness& w, double lambda_omega, const DensityMatrix& sigma) {
    const double value = witness_value(w, sigma);
    if (value < -1e-12) throw DomainError("ppt_mixing_threshold: sigma has a negative witness value");
    if (!is_ppt_all_cuts(sigma).ppt) throw DomainError("ppt_mixing_threshold: sigma is not PPT");
    return lambda_omega / (lambda_omega + std::max(value, 0.0));
}

MaximalRobustnessReport verify_maximal_robustness(const LineFamily& fam, double x, const Witness& w,
                                                  const DensityMatrix& sigma_dir, std::span<const double> z_grid) {
    MaximalRobustnessReport report;
    report.x = x;
    const auto base = fam.member(x);
    for (double z : z_grid) {
        DirectionCheck c;
        c.z = z;
        if (!(z >= 0.0 && z < 1.0)) {
            report.points.push_back(c);
            report.all_pass = false;
            continue;
        }
        const auto state = mix(z, sigma_dir, base);
        const auto ppt = is_ppt_all_cuts(state);
        c.min_pt_eigenvalue = ppt.min_eigenvalue;
        c.ppt = ppt.ppt;
        c.witness_value = witness_value(w, state);
        c.witness_negative = c.witness_value < 0.0;
        report.all_pass = report.all_pass && c.ppt && c.witness_negative;
        report.points.push_back(c);
    }
    return report;
}

DensityMatrix minimizer_mixture(const std::vector<ProductState>& minimizers, const HilbertStructure& structure) {
    if (minimizers.empty()) throw ValidationError("minimizer_mixture: no product states");
    const auto d = static_cast<Eigen::Index>(structure.total_dim());
    Matrix acc = Matrix::Zero(d, d);
    for (const auto& m : minimizers) {
        const Vector v = m.full();
        if (v.size() != d) throw ValidationError("minimizer_mixture: dimension mismatch");
        acc += v * v.adjoint();
    }
    acc /= static_cast<double>(minimizers.size());
    return DensityMatrix::trusted(HermitianOperator(acc), structure);
}

UpbAnalysis analyze_upb(const UPBSet& upb, const SeesawConfig& cfg) {
    auto lam = upb.structure().parties() == 2 ? compute_lambda(upb, cfg) : compute_lambda_multipartite(upb, cfg);
    auto witness = build_witness(upb, lam);
    auto omega = omega_state(upb);
    const auto bounds = WitnessBounds::from(witness, omega);
    const double x_star = entanglement_threshold(bounds.lambda_rho, omega.dim());
    return UpbAnalysis{
        .upb = upb,
        .lambda = std::move(lam),
        .witness = std::move(witness),
        .omega = std::move(omega),
        .lambda_omega = bounds.lambda_rho,
        .bounds = bounds,
        .x_star = x_star,
    };
}

RobustnessProfile build_profile(const UpbAnalysis& a, std::size_t grid_points, BoundMode mode) {
    if (grid_points < 2) throw ValidationError("build_profile: need at least two grid points");
    RobustnessProfile p;
    p.upb_name = a.upb.name();
    p.lambda = a.lambda.lambda;
    p.lambda_omega = a.lambda_omega;
    p.x_star = a.x_star;
    p.x0 = crossing_x0(a.upb.size(), a.upb.structure().total_dim(), a.lambda.lambda);
    p.mixing = separable_mixing_threshold(a.lambda.lambda, a.lambda_omega, a.witness.pos_part_trace(),
                                          a.witness.p_count());
    p.bound_mode = mode;
    for (std::size_t i = 0; i < grid_points; ++i) {
        const double x = i + 1 == grid_points
                             ? 1.0
                             : a.x_star + (1.0 - a.x_star) * static_cast<double>(i) / static_cast<double>(grid_points - 1);
        RadiusSample s{x, 0.0, 0.0};
        if (i != 0 && i + 1 != grid_points) {
            s.y0_tight = radius_y0(a.bounds, x, BoundMode::Tight);
            s.y0_paper = radius_y0(a.bounds, x, BoundMode::PaperExact);
        }
        p.radius_samples.push_back(s);
    }
    return p;
}

}  // namespace pptball
