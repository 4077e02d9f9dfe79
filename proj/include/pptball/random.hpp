#pragma once

#include <cstdint>
#include <random>

#include "pptball/linalg.hpp"

namespace pptball {

/// Independent engine for (master_seed, stream_id, index).
///
/// Every trial or restart owns its engine, so results do not depend on the
/// order in which trials are executed.
inline std::mt19937_64 substream(std::uint64_t master_seed, std::uint64_t stream_id, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(master_seed), static_cast<std::uint32_t>(master_seed >> 32),
                      static_cast<std::uint32_t>(stream_id),   static_cast<std::uint32_t>(stream_id >> 32),
                      static_cast<std::uint32_t>(index),       static_cast<std::uint32_t>(index >> 32)};
    return std::mt19937_64(seq);
}

/// Matrix of i.i.d. standard complex Gaussians.
inline Matrix ginibre(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Matrix g(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j)
        for (Eigen::Index i = 0; i < rows; ++i) {
            const double re = normal(rng);
            const double im = normal(rng);
            g(i, j) = cplx(re, im);
        }
    return g;
}

/// Haar-random unit vector.
inline Vector random_unit_vector(Eigen::Index dim, std::mt19937_64& rng) {
    Vector v = ginibre(dim, 1, rng).col(0);
    return v / v.norm();
}

}  // namespace pptball
