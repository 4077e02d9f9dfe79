#include "pptball/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "pptball/errors.hpp"

namespace pptball {

double hermiticity_defect(const Matrix& a) {
    double worst = 0.0;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = i; j < a.cols(); ++j)
            worst = std::max(worst, std::abs(a(i, j) - std::conj(a(j, i))));
    return worst;
}

double max_abs(const Matrix& a) {
    return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

HermitianOperator::HermitianOperator(Matrix entries, double tol) {
    if (entries.rows() < 1 || entries.rows() != entries.cols())
        throw ValidationError("HermitianOperator: matrix must be square with dim >= 1");
    const double defect = hermiticity_defect(entries);
    if (!(defect <= tol))
        throw ValidationError("HermitianOperator: not Hermitian (defect " + std::to_string(defect) + ")");
    m_ = 0.5 * (entries + entries.adjoint());
}

HermitianOperator HermitianOperator::identity(std::size_t dim) {
    const auto n = static_cast<Eigen::Index>(dim);
    return HermitianOperator(Trusted{}, Matrix::Identity(n, n));
}

HermitianOperator HermitianOperator::projector(const Vector& v) {
    return HermitianOperator(Trusted{}, v * v.adjoint());
}

double HermitianOperator::trace_product(const HermitianOperator& other) const {
    if (other.dim() != dim()) throw ValidationError("trace_product: dimension mismatch");
    // Tr(AB) = sum_ij A_ij B_ji = sum_ij A_ij conj(B_ij) for Hermitian B.
    return (m_.array() * other.m_.conjugate().array()).sum().real();
}

HermitianOperator HermitianOperator::operator+(const HermitianOperator& o) const {
    if (o.dim() != dim()) throw ValidationError("operator+: dimension mismatch");
    return HermitianOperator(Trusted{}, m_ + o.m_);
}

HermitianOperator HermitianOperator::operator-(const HermitianOperator& o) const {
    if (o.dim() != dim()) throw ValidationError("operator-: dimension mismatch");
    return HermitianOperator(Trusted{}, m_ - o.m_);
}

HermitianOperator HermitianOperator::operator*(double s) const {
    return HermitianOperator(Trusted{}, m_ * s);
}

Matrix EigenDecomposition::reconstruct() const {
    return eigenvectors * eigenvalues.cast<cplx>().asDiagonal() * eigenvectors.adjoint();
}

namespace {

double off_diagonal_norm(const Matrix& a) {
    double s = 0.0;
    for (Eigen::Index j = 0; j < a.cols(); ++j)
        for (Eigen::Index i = 0; i < a.rows(); ++i)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

struct Scratch {
    Vector cp, cq;
};

// Zero a(p,q) with J = diag(1, e^{-i phi}) * [[c, s], [-s, c]] acting on (p,q).
void rotate(Matrix& a, Matrix& v, Eigen::Index p, Eigen::Index q, Scratch& w) {
    const cplx apq = a(p, q);
    const double mag = std::abs(apq);
    if (mag == 0.0) return;
    const cplx phase = apq / mag;  // e^{i phi}
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();

    const double zeta = (aqq - app) / (2.0 * mag);
    const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const cplx jpp = c;
    const cplx jpq = s;
    const cplx jqp = -s * std::conj(phase);
    const cplx jqq = c * std::conj(phase);

    // Columns of A J; rows follow from Hermiticity of the result, and the 2x2
    // block is set from the closed form.
    w.cp = a.col(p);
    w.cq = a.col(q);
    a.col(p) = w.cp * jpp + w.cq * jqp;
    a.col(q) = w.cp * jpq + w.cq * jqq;
    a.row(p) = a.col(p).adjoint();
    a.row(q) = a.col(q).adjoint();
    a(p, p) = app - t * mag;
    a(q, q) = aqq + t * mag;
    a(p, q) = 0.0;
    a(q, p) = 0.0;

    w.cp = v.col(p);
    w.cq = v.col(q);
    v.col(p) = w.cp * jpp + w.cq * jqp;
    v.col(q) = w.cp * jpq + w.cq * jqq;
}

}  // namespace

EigenDecomposition eig_hermitian(const HermitianOperator& op, const JacobiOptions& opts) {
    Matrix a = op.matrix();
    const Eigen::Index n = a.rows();
    Matrix v = Matrix::Identity(n, n);
    Scratch scratch{Vector(n), Vector(n)};

    for (int sweep = 0; sweep < opts.max_sweeps; ++sweep) {
        if (off_diagonal_norm(a) < opts.off_tol) break;
        for (Eigen::Index p = 0; p < n - 1; ++p)
            for (Eigen::Index q = p + 1; q < n; ++q)
                rotate(a, v, p, q, scratch);
    }

    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Eigen::Index i, Eigen::Index j) { return a(i, i).real() < a(j, j).real(); });

    EigenDecomposition out;
    out.eigenvalues.resize(n);
    out.eigenvectors.resize(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        const auto src = order[static_cast<std::size_t>(k)];
        out.eigenvalues(k) = a(src, src).real();
        out.eigenvectors.col(k) = v.col(src);
    }
    return out;
}

EigenDecomposition eig_hermitian(const Matrix& a, const JacobiOptions& opts) {
    return eig_hermitian(HermitianOperator(a), opts);
}

}  // namespace pptball
