#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pptball/linalg.hpp"

namespace pptball {

/// Ordered local dimensions d_1 x ... x d_n with composite index
/// i_1 * (d_2 ... d_n) + ... + i_n (first subsystem most significant).
class HilbertStructure {
public:
    explicit HilbertStructure(std::vector<std::size_t> local_dims);

    const std::vector<std::size_t>& local_dims() const { return dims_; }
    std::size_t parties() const { return dims_.size(); }
    std::size_t total_dim() const { return total_; }

    std::vector<std::size_t> split(std::size_t index) const;
    std::size_t join(std::span<const std::size_t> digits) const;

    bool operator==(const HilbertStructure&) const = default;

private:
    std::vector<std::size_t> dims_;
    std::size_t total_ = 1;
};

/// The subsystems whose indices are transposed. Nonempty and proper.
class Bipartition {
public:
    Bipartition(std::vector<std::size_t> transposed_side, const HilbertStructure& structure);

    /// Bipartite A|B cut transposing the second party.
    static Bipartition second_party(const HilbertStructure& structure);

    const std::vector<std::size_t>& transposed_side() const { return side_; }

private:
    std::vector<std::size_t> side_;
};

/// The 2^(n-1) - 1 inequivalent cuts; each representative excludes party 0.
std::vector<Bipartition> all_bipartitions(const HilbertStructure& structure);

/// Unit-trace positive semidefinite operator on a known tensor structure.
class DensityMatrix {
public:
    /// Validates trace = 1 within 1e-10 and min eigenvalue >= -psd_tol.
    DensityMatrix(HermitianOperator op, HilbertStructure structure, double psd_tol = kPsdTol);

    /// Skips the spectral check. For operators that are density matrices by
    /// construction (convex mixtures, G G^dagger / Tr, ...). Trace is still checked.
    static DensityMatrix trusted(HermitianOperator op, HilbertStructure structure);

    static DensityMatrix maximally_mixed(const HilbertStructure& structure);
    static DensityMatrix pure(const Vector& psi, const HilbertStructure& structure);

    const HermitianOperator& op() const { return op_; }
    const Matrix& matrix() const { return op_.matrix(); }
    const HilbertStructure& structure() const { return structure_; }
    std::size_t dim() const { return op_.dim(); }

private:
    struct Trusted {};
    DensityMatrix(Trusted, HermitianOperator op, HilbertStructure structure);

    HermitianOperator op_;
    HilbertStructure structure_;
};

/// w * a + (1 - w) * b for w in [0, 1].
DensityMatrix mix(double w, const DensityMatrix& a, const DensityMatrix& b);

/// Entry-level swap of the transposed parties' row and column digits.
HermitianOperator partial_transpose(const DensityMatrix& rho, const Bipartition& cut);
Matrix partial_transpose(const Matrix& m, const HilbertStructure& structure, const Bipartition& cut);

struct PptReport {
    bool ppt = false;
    double min_eigenvalue = 0.0;
};

PptReport is_ppt(const DensityMatrix& rho, const Bipartition& cut, double tol = kPsdTol);

struct CutReport {
    Bipartition cut;
    PptReport report;
};

struct AllCutsReport {
    bool ppt = false;
    double min_eigenvalue = 0.0;  // smallest over all cuts
    std::vector<CutReport> cuts;
};

AllCutsReport is_ppt_all_cuts(const DensityMatrix& rho, double tol = kPsdTol);

/// Tr(rho^2).
double purity(const DensityMatrix& rho);

/// Kronecker product of local vectors in party order.
Vector kron(std::span<const Vector> locals);

}  // namespace pptball
