#include "pptball/state.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "pptball/errors.hpp"

namespace pptball {

HilbertStructure::HilbertStructure(std::vector<std::size_t> local_dims) : dims_(std::move(local_dims)) {
    if (dims_.empty()) throw ValidationError("HilbertStructure: no subsystems");
    for (auto d : dims_) {
        if (d < 1) throw ValidationError("HilbertStructure: local dimension must be positive");
        total_ *= d;
    }
}

std::vector<std::size_t> HilbertStructure::split(std::size_t index) const {
    std::vector<std::size_t> digits(dims_.size());
    for (std::size_t k = dims_.size(); k-- > 0;) {
        digits[k] = index % dims_[k];
        index /= dims_[k];
    }
    return digits;
}

std::size_t HilbertStructure::join(std::span<const std::size_t> digits) const {
    std::size_t index = 0;
    for (std::size_t k = 0; k < dims_.size(); ++k) index = index * dims_[k] + digits[k];
    return index;
}

Bipartition::Bipartition(std::vector<std::size_t> transposed_side, const HilbertStructure& structure)
    : side_(std::move(transposed_side)) {
    std::sort(side_.begin(), side_.end());
    side_.erase(std::unique(side_.begin(), side_.end()), side_.end());
    if (side_.empty()) throw ValidationError("Bipartition: transposed side is empty");
    if (side_.back() >= structure.parties())
        throw ValidationError("Bipartition: subsystem index " + std::to_string(side_.back()) + " out of range");
    if (side_.size() == structure.parties()) throw ValidationError("Bipartition: transposed side is the full system");
}

Bipartition Bipartition::second_party(const HilbertStructure& structure) {
    return Bipartition({1}, structure);
}

std::vector<Bipartition> all_bipartitions(const HilbertStructure& structure) {
    const std::size_t n = structure.parties();
    if (n < 2) throw ValidationError("all_bipartitions: need at least two parties");
    std::vector<Bipartition> cuts;
    // Subsets of {1..n-1}, nonempty; party 0 always stays on the untransposed side.
    for (std::size_t mask = 1; mask < (std::size_t{1} << (n - 1)); ++mask) {
        std::vector<std::size_t> side;
        for (std::size_t k = 0; k + 1 < n; ++k)
            if (mask & (std::size_t{1} << k)) side.push_back(k + 1);
        cuts.emplace_back(std::move(side), structure);
    }
    return cuts;
}

DensityMatrix::DensityMatrix(Trusted, HermitianOperator op, HilbertStructure structure)
    : op_(std::move(op)), structure_(std::move(structure)) {
    if (op_.dim() != structure_.total_dim())
        throw ValidationError("DensityMatrix: operator dimension does not match structure");
    if (std::abs(op_.trace() - 1.0) > 1e-10)
        throw ValidationError("DensityMatrix: trace " + std::to_string(op_.trace()) + " != 1");
}

DensityMatrix::DensityMatrix(HermitianOperator op, HilbertStructure structure, double psd_tol)
    : DensityMatrix(Trusted{}, std::move(op), std::move(structure)) {
    const double lo = eig_hermitian(op_).min();
    if (lo < -psd_tol)
        throw ValidationError("DensityMatrix: negative eigenvalue " + std::to_string(lo));
}

DensityMatrix DensityMatrix::trusted(HermitianOperator op, HilbertStructure structure) {
    return DensityMatrix(Trusted{}, std::move(op), std::move(structure));
}

DensityMatrix DensityMatrix::maximally_mixed(const HilbertStructure& structure) {
    const auto d = structure.total_dim();
    return trusted(HermitianOperator::identity(d) * (1.0 / static_cast<double>(d)), structure);
}

DensityMatrix DensityMatrix::pure(const Vector& psi, const HilbertStructure& structure) {
    const double norm = psi.norm();
    if (!(norm > 0.0)) throw ValidationError("DensityMatrix::pure: zero vector");
    return trusted(HermitianOperator::projector(psi / norm), structure);
}

DensityMatrix mix(double w, const DensityMatrix& a, const DensityMatrix& b) {
    if (!(w >= 0.0 && w <= 1.0)) throw DomainError("mix: weight outside [0,1]");
    if (!(a.structure() == b.structure())) throw ValidationError("mix: structure mismatch");
    return DensityMatrix::trusted(w * a.op() + (1.0 - w) * b.op(), a.structure());
}

Matrix partial_transpose(const Matrix& m, const HilbertStructure& structure, const Bipartition& cut) {
    const auto dim = structure.total_dim();
    if (static_cast<std::size_t>(m.rows()) != dim || m.rows() != m.cols())
        throw ValidationError("partial_transpose: matrix does not match structure");
    if (cut.transposed_side().back() >= structure.parties())
        throw ValidationError("partial_transpose: cut index out of range");

    std::vector<std::vector<std::size_t>> digits(dim);
    for (std::size_t i = 0; i < dim; ++i) digits[i] = structure.split(i);

    Matrix out(m.rows(), m.cols());
    std::vector<std::size_t> rows, cols;
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            rows = digits[r];
            cols = digits[c];
            for (auto k : cut.transposed_side()) std::swap(rows[k], cols[k]);
            out(static_cast<Eigen::Index>(structure.join(rows)), static_cast<Eigen::Index>(structure.join(cols))) =
                m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
        }
    }
    return out;
}

HermitianOperator partial_transpose(const DensityMatrix& rho, const Bipartition& cut) {
    return HermitianOperator(partial_transpose(rho.matrix(), rho.structure(), cut));
}

PptReport is_ppt(const DensityMatrix& rho, const Bipartition& cut, double tol) {
    const double lo = eig_hermitian(partial_transpose(rho, cut)).min();
    return {lo >= -tol, lo};
}

AllCutsReport is_ppt_all_cuts(const DensityMatrix& rho, double tol) {
    AllCutsReport out;
    out.ppt = true;
    out.min_eigenvalue = std::numeric_limits<double>::infinity();
    for (auto& cut : all_bipartitions(rho.structure())) {
        const auto r = is_ppt(rho, cut, tol);
        out.ppt = out.ppt && r.ppt;
        out.min_eigenvalue = std::min(out.min_eigenvalue, r.min_eigenvalue);
        out.cuts.push_back({std::move(cut), r});
    }
    return out;
}

double purity(const DensityMatrix& rho) {
    return rho.op().trace_product(rho.op());
}

Vector kron(std::span<const Vector> locals) {
    Vector out = Vector::Ones(1);
    for (const auto& v : locals) {
        Vector next(out.size() * v.size());
        for (Eigen::Index i = 0; i < out.size(); ++i) next.segment(i * v.size(), v.size()) = out(i) * v;
        out = std::move(next);
    }
    return out;
}

}  // namespace pptball
