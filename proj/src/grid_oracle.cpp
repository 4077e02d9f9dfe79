#include "pptball/grid_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <limits>
#include <queue>

#include "pptball/errors.hpp"

namespace pptball {

Vector angles_to_state(std::size_t dim, const double* angles) {
    const auto d = static_cast<Eigen::Index>(dim);
    Vector v(d);
    double tail = 1.0;
    for (Eigen::Index k = 0; k + 1 < d; ++k) {
        v(k) = tail * std::cos(angles[k]);
        tail *= std::sin(angles[k]);
    }
    v(d - 1) = tail;
    for (Eigen::Index k = 1; k < d; ++k) v(k) *= std::polar(1.0, angles[dim - 1 + static_cast<std::size_t>(k) - 1]);
    return v;
}

namespace {

struct Layout {
    std::vector<std::size_t> dims;
    std::vector<std::size_t> offset;  // first angle of each party
    std::size_t total = 0;
};

Layout layout_of(const UPBSet& upb) {
    Layout l;
    l.dims = upb.structure().local_dims();
    for (auto d : l.dims) {
        l.offset.push_back(l.total);
        l.total += 2 * (d - 1);
    }
    return l;
}

double evaluate(const UPBSet& upb, const Layout& l, const std::vector<double>& angles) {
    std::vector<Vector> phi;
    for (std::size_t k = 0; k < l.dims.size(); ++k) phi.push_back(angles_to_state(l.dims[k], angles.data() + l.offset[k]));
    double total = 0.0;
    for (const auto& m : upb.members()) {
        double term = 1.0;
        for (std::size_t k = 0; k < phi.size(); ++k) term *= std::norm(phi[k].dot(m.locals()[k]));
        total += term;
    }
    return total;
}

// Compass search with step halving.
double polish(const UPBSet& upb, const Layout& l, std::vector<double>& x, double step, double min_step) {
    double fx = evaluate(upb, l, x);
    while (step > min_step) {
        bool moved = false;
        for (std::size_t i = 0; i < x.size(); ++i) {
            for (double sign : {1.0, -1.0}) {
                const double saved = x[i];
                x[i] = saved + sign * step;
                const double f = evaluate(upb, l, x);
                if (f < fx) {
                    fx = f;
                    moved = true;
                    break;
                }
                x[i] = saved;
            }
        }
        if (!moved) step *= 0.5;
    }
    return fx;
}

}  // namespace

GridOracleResult grid_oracle_lambda(const UPBSet& upb, const GridOracleConfig& cfg) {
    const Layout l = layout_of(upb);
    if (l.total == 0) throw ValidationError("grid_oracle_lambda: no free parameters");

    std::size_t m = 2;
    while (std::pow(static_cast<double>(m + 1), static_cast<double>(l.total)) <= 1.7 * static_cast<double>(cfg.target_points)) ++m;

    // Axis values: amplitude angles on [0, pi/2] inclusive, phases on [0, 2 pi).
    auto axis_value = [&](std::size_t param, std::size_t idx) {
        std::size_t party = 0;
        while (party + 1 < l.offset.size() && l.offset[party + 1] <= param) ++party;
        const bool amplitude = (param - l.offset[party]) < l.dims[party] - 1;
        return amplitude ? (std::numbers::pi / 2.0) * static_cast<double>(idx) / static_cast<double>(m - 1)
                         : 2.0 * std::numbers::pi * static_cast<double>(idx) / static_cast<double>(m);
    };

    // Per-party table of local overlaps |<phi|v_i>|^2 for every local grid point.
    const std::size_t parties = l.dims.size();
    const std::size_t members = upb.size();
    std::vector<std::size_t> local_count(parties);
    std::vector<std::vector<double>> table(parties);
    for (std::size_t k = 0; k < parties; ++k) {
        const std::size_t params = 2 * (l.dims[k] - 1);
        std::size_t count = 1;
        for (std::size_t p = 0; p < params; ++p) count *= m;
        local_count[k] = count;
        table[k].resize(count * members);
        std::vector<double> angles(params);
        for (std::size_t idx = 0; idx < count; ++idx) {
            std::size_t rest = idx;
            for (std::size_t p = 0; p < params; ++p) {
                angles[p] = axis_value(l.offset[k] + p, rest % m);
                rest /= m;
            }
            const Vector phi = angles_to_state(l.dims[k], angles.data());
            for (std::size_t i = 0; i < members; ++i)
                table[k][idx * members + i] = std::norm(phi.dot(upb.members()[i].locals()[k]));
        }
    }

    std::size_t total_points = 1;
    for (auto c : local_count) total_points *= c;

    using Entry = std::pair<double, std::size_t>;
    std::priority_queue<Entry> best;  // max-heap of the lowest values
    std::vector<std::size_t> local_idx(parties);
    for (std::size_t point = 0; point < total_points; ++point) {
        std::size_t rest = point;
        for (std::size_t k = 0; k < parties; ++k) {
            local_idx[k] = rest % local_count[k];
            rest /= local_count[k];
        }
        double total = 0.0;
        for (std::size_t i = 0; i < members; ++i) {
            double term = 1.0;
            for (std::size_t k = 0; k < parties; ++k) term *= table[k][local_idx[k] * members + i];
            total += term;
        }
        if (best.size() < cfg.refine_seeds) {
            best.emplace(total, point);
        } else if (total < best.top().first) {
            best.pop();
            best.emplace(total, point);
        }
    }

    GridOracleResult out;
    out.points_per_axis = m;
    out.grid_points = total_points;
    out.value = std::numeric_limits<double>::infinity();
    out.coarse_value = std::numeric_limits<double>::infinity();

    const double step = (std::numbers::pi / 2.0) / static_cast<double>(m - 1);
    while (!best.empty()) {
        const auto [coarse, point] = best.top();
        best.pop();
        out.coarse_value = std::min(out.coarse_value, coarse);
        std::vector<double> angles(l.total);
        std::size_t rest = point;
        for (std::size_t k = 0; k < parties; ++k) {
            std::size_t local = rest % local_count[k];
            rest /= local_count[k];
            for (std::size_t p = 0; p < 2 * (l.dims[k] - 1); ++p) {
                angles[l.offset[k] + p] = axis_value(l.offset[k] + p, local % m);
                local /= m;
            }
        }
        const double refined = polish(upb, l, angles, step, cfg.min_step);
        if (refined < out.value) {
            out.value = refined;
            out.angles = angles;
        }
    }
    return out;
}

}  // namespace pptball
