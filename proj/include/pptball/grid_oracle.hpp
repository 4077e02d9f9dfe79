#pragma once

#include <cstddef>
#include <vector>

#include "pptball/upb.hpp"

namespace pptball {

struct GridOracleConfig {
    std::size_t target_points = 1'000'000;  // grid size is the largest m^P not far above this
    std::size_t refine_seeds = 32;
    double min_step = 1e-10;
};

struct GridOracleResult {
    double value = 0.0;
    double coarse_value = 0.0;  // best raw grid point before refinement
    std::vector<double> angles;
    std::size_t points_per_axis = 0;
    std::size_t grid_points = 0;
};

/// Brute-force minimum of <phi|P_S|phi> over product states.
///
/// Each local pure state in C^d is written with d-1 hyperspherical amplitude
/// angles and d-1 relative phases. The full angle box is scanned on a regular
/// grid, then the best grid points are polished by compass search. Shares no
/// code with the see-saw minimizer.
GridOracleResult grid_oracle_lambda(const UPBSet& upb, const GridOracleConfig& cfg = {});

/// Local vector for one party from its 2(d-1) angles.
Vector angles_to_state(std::size_t dim, const double* angles);

}  // namespace pptball
