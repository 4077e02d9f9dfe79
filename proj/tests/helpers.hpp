#pragma once

#include <random>

#include <Eigen/Eigenvalues>

#include "pptball/pptball.hpp"

namespace testing {

using namespace pptball;

inline Matrix random_hermitian(Eigen::Index dim, std::mt19937_64& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    Matrix a(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i)
        for (Eigen::Index j = 0; j < dim; ++j) a(i, j) = cplx(n(rng), n(rng));
    return 0.5 * (a + a.adjoint());
}

/// Eigenvalues from Eigen's own Hermitian solver; independent of the Jacobi path.
inline RealVector oracle_eigenvalues(const Matrix& a) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(a, Eigen::EigenvaluesOnly);
    return es.eigenvalues();
}

inline Vector ket(std::initializer_list<cplx> entries) {
    Vector v(static_cast<Eigen::Index>(entries.size()));
    Eigen::Index i = 0;
    for (auto e : entries) v(i++) = e;
    return v.normalized();
}

inline DensityMatrix random_product_pure(const HilbertStructure& s, std::mt19937_64& rng) {
    std::vector<Vector> locals;
    for (auto d : s.local_dims()) locals.push_back(random_unit_vector(static_cast<Eigen::Index>(d), rng));
    return DensityMatrix::pure(kron(locals), s);
}

// Reduced see-saw settings for tests that only need a valid lambda.
inline SeesawConfig quick_seesaw() {
    SeesawConfig cfg;
    cfg.restarts = 40;
    return cfg;
}

}  // namespace testing
