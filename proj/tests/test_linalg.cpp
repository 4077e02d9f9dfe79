#include <doctest.h>

#include "helpers.hpp"

using namespace pptball;
using testing::oracle_eigenvalues;
using testing::random_hermitian;

TEST_SUITE("eig_hermitian") {

TEST_CASE("identity has unit spectrum") {
    const auto eig = eig_hermitian(HermitianOperator::identity(4));
    for (Eigen::Index i = 0; i < 4; ++i) CHECK(eig.eigenvalues(i) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("diagonal input is sorted ascending") {
    Matrix d = Matrix::Zero(3, 3);
    d(0, 0) = 3.0;
    d(1, 1) = -1.0;
    d(2, 2) = 2.0;
    const auto eig = eig_hermitian(d);
    CHECK(eig.eigenvalues(0) == -1.0);
    CHECK(eig.eigenvalues(1) == 2.0);
    CHECK(eig.eigenvalues(2) == 3.0);
}

TEST_CASE("seeded 9x9 reconstructs and matches an independent solver") {
    std::mt19937_64 rng(2024);
    const Matrix a = random_hermitian(9, rng);
    const auto eig = eig_hermitian(a);
    CHECK(max_abs(eig.reconstruct() - a) < 1e-10);
    CHECK((eig.eigenvalues - oracle_eigenvalues(a)).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("complex 2x2 with closed-form spectrum") {
    // [[1, 2i], [-2i, 1]] has eigenvalues -1 and 3.
    Matrix a(2, 2);
    a << cplx(1, 0), cplx(0, 2), cplx(0, -2), cplx(1, 0);
    const auto eig = eig_hermitian(a);
    CHECK(eig.eigenvalues(0) == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(eig.eigenvalues(1) == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("non-Hermitian input is rejected") {
    Matrix a = Matrix::Zero(2, 2);
    a(0, 1) = 1.0;
    CHECK_THROWS_AS(eig_hermitian(a), ValidationError);
    CHECK_THROWS_AS(HermitianOperator(Matrix::Zero(2, 3)), ValidationError);
}

TEST_CASE("deterministic for a fixed input") {
    std::mt19937_64 rng(5);
    const Matrix a = random_hermitian(12, rng);
    const auto e1 = eig_hermitian(a);
    const auto e2 = eig_hermitian(a);
    CHECK(e1.eigenvalues == e2.eigenvalues);
    CHECK(e1.eigenvectors == e2.eigenvectors);
}

TEST_CASE("property: reconstruction and orthonormality on 1000 random inputs up to dim 81") {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> dim_dist(1, 81);
    double worst_rec = 0.0, worst_gram = 0.0, worst_oracle = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        // Every 50th trial at the maximum dimension so the top of the range is always covered.
        const Eigen::Index d = trial % 50 == 0 ? 81 : dim_dist(rng);
        const Matrix a = random_hermitian(d, rng);
        const auto eig = eig_hermitian(a);
        worst_rec = std::max(worst_rec, max_abs(eig.reconstruct() - a));
        worst_gram = std::max(worst_gram, max_abs(eig.eigenvectors.adjoint() * eig.eigenvectors - Matrix::Identity(d, d)));
        worst_oracle = std::max(worst_oracle, (eig.eigenvalues - oracle_eigenvalues(a)).cwiseAbs().maxCoeff());
        for (Eigen::Index i = 1; i < d; ++i) REQUIRE(eig.eigenvalues(i - 1) <= eig.eigenvalues(i));
    }
    CHECK(worst_rec < 1e-10);
    CHECK(worst_gram < 1e-10);
    CHECK(worst_oracle < 1e-10);
}

TEST_CASE("degenerate clusters still give an orthonormal basis") {
    // Projector of rank 3 in dim 9: two highly degenerate eigenvalues.
    const auto tiles = build_tiles();
    const auto eig = eig_hermitian(tiles.projector());
    CHECK(max_abs(eig.eigenvectors.adjoint() * eig.eigenvectors - Matrix::Identity(9, 9)) < 1e-10);
    for (Eigen::Index i = 0; i < 4; ++i) CHECK(std::abs(eig.eigenvalues(i)) < 1e-12);
    for (Eigen::Index i = 4; i < 9; ++i) CHECK(std::abs(eig.eigenvalues(i) - 1.0) < 1e-12);
}

}
