#pragma once

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace pptball {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kPsdTol = 1e-9;

/// Largest |a_ij - conj(a_ji)| over the matrix.
double hermiticity_defect(const Matrix& a);

/// Max-entry norm.
double max_abs(const Matrix& a);

/// Complex square matrix that is Hermitian within kHermitianTol.
///
/// Construction validates the contract and then symmetrizes the payload, so
/// every stored operator is exactly Hermitian.
class HermitianOperator {
public:
    explicit HermitianOperator(Matrix entries, double tol = kHermitianTol);

    static HermitianOperator identity(std::size_t dim);
    static HermitianOperator projector(const Vector& v);

    std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
    const Matrix& matrix() const { return m_; }
    double trace() const { return m_.trace().real(); }

    /// Tr(A B), real for Hermitian arguments.
    double trace_product(const HermitianOperator& other) const;

    HermitianOperator operator+(const HermitianOperator& o) const;
    HermitianOperator operator-(const HermitianOperator& o) const;
    HermitianOperator operator*(double s) const;
    friend HermitianOperator operator*(double s, const HermitianOperator& a) { return a * s; }

private:
    struct Trusted {};
    HermitianOperator(Trusted, Matrix entries) : m_(std::move(entries)) {}

    Matrix m_;
};

struct EigenDecomposition {
    RealVector eigenvalues;  // ascending
    Matrix eigenvectors;     // columns, orthonormal

    double min() const { return eigenvalues(0); }
    double max() const { return eigenvalues(eigenvalues.size() - 1); }
    Matrix reconstruct() const;
};

struct JacobiOptions {
    double off_tol = 1e-12;
    int max_sweeps = 100;
};

/// Cyclic complex Jacobi diagonalization.
///
/// Sweeps over all (p, q) pairs annihilating each off-diagonal entry with a
/// unitary plane rotation until the off-diagonal Frobenius norm drops below
/// `off_tol`. Eigenvalues are returned in ascending order; within degenerate
/// clusters the eigenvector basis is whatever the sweep produced.
EigenDecomposition eig_hermitian(const HermitianOperator& a, const JacobiOptions& opts = {});

/// Validates Hermiticity of a raw matrix before diagonalizing.
EigenDecomposition eig_hermitian(const Matrix& a, const JacobiOptions& opts = {});

}  // namespace pptball
