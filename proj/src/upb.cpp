#include "pptball/upb.hpp"

#include <cmath>
#include <numbers>

#include "pptball/errors.hpp"

namespace pptball {

ProductState::ProductState(std::vector<Vector> locals) : locals_(std::move(locals)) {
    if (locals_.empty()) throw ValidationError("ProductState: no local vectors");
    for (const auto& v : locals_)
        if (std::abs(v.norm() - 1.0) > 1e-12) throw ValidationError("ProductState: local vector is not normalized");
}

double ProductState::fidelity(const ProductState& other) const {
    if (other.parties() != parties()) throw ValidationError("ProductState::fidelity: party count mismatch");
    double f = 1.0;
    for (std::size_t k = 0; k < parties(); ++k) f *= std::norm(locals_[k].dot(other.locals_[k]));
    return f;
}

namespace {

HermitianOperator build_projector(const HilbertStructure& structure, const std::vector<ProductState>& members) {
    const auto d = static_cast<Eigen::Index>(structure.total_dim());
    Matrix p = Matrix::Zero(d, d);
    for (const auto& m : members) {
        if (m.parties() != structure.parties())
            throw ValidationError("UPBSet: member party count does not match structure");
        for (std::size_t k = 0; k < m.parties(); ++k)
            if (static_cast<std::size_t>(m.locals()[k].size()) != structure.local_dims()[k])
                throw ValidationError("UPBSet: local vector dimension mismatch");
        const Vector v = m.full();
        p += v * v.adjoint();
    }
    return HermitianOperator(p);
}

Vector vec(std::initializer_list<cplx> entries) {
    Vector v(static_cast<Eigen::Index>(entries.size()));
    Eigen::Index i = 0;
    for (auto e : entries) v(i++) = e;
    return v.normalized();
}

}  // namespace

UPBSet::UPBSet(std::string name, HilbertStructure structure, std::vector<ProductState> members)
    : name_(std::move(name)),
      structure_(std::move(structure)),
      members_(std::move(members)),
      projector_(build_projector(structure_, members_)) {
    if (members_.empty()) throw ValidationError("UPBSet: no members");
    const auto n = static_cast<Eigen::Index>(members_.size());
    if (max_abs(gram() - Matrix::Identity(n, n)) > 1e-10) throw ValidationError("UPBSet: members are not orthonormal");
    if (std::abs(projector_.trace() - static_cast<double>(n)) > 1e-10)
        throw ValidationError("UPBSet: projector trace differs from member count");
}

Matrix UPBSet::gram() const {
    const auto n = static_cast<Eigen::Index>(members_.size());
    std::vector<Vector> full;
    full.reserve(members_.size());
    for (const auto& m : members_) full.push_back(m.full());
    Matrix g(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) g(i, j) = full[i].dot(full[j]);
    return g;
}

UPBSet build_tiles() {
    const Vector e0 = vec({1, 0, 0}), e1 = vec({0, 1, 0}), e2 = vec({0, 0, 1});
    const Vector e01 = vec({1, -1, 0}), e12 = vec({0, 1, -1});
    const Vector all = vec({1, 1, 1});
    std::vector<ProductState> members{
        ProductState({e0, e01}),
        ProductState({e2, e12}),
        ProductState({e01, e2}),
        ProductState({e12, e0}),
        ProductState({all, all}),
    };
    return UPBSet("tiles", HilbertStructure({3, 3}), std::move(members));
}

UPBSet build_pyramid() {
    // Apex height chosen so that v_j and v_{j+2} are orthogonal: h^2 = -cos(4 pi / 5).
    const double h = std::sqrt(-std::cos(4.0 * std::numbers::pi / 5.0));
    std::vector<Vector> v;
    for (int j = 0; j < 5; ++j) {
        const double a = 2.0 * std::numbers::pi * j / 5.0;
        v.push_back(vec({std::cos(a), std::sin(a), h}));
    }
    std::vector<ProductState> members;
    for (int j = 0; j < 5; ++j) members.emplace_back(std::vector<Vector>{v[j], v[(2 * j) % 5]});
    return UPBSet("pyramid", HilbertStructure({3, 3}), std::move(members));
}

UPBSet build_shifts() {
    const Vector zero = vec({1, 0}), one = vec({0, 1});
    const Vector plus = vec({1, 1}), minus = vec({1, -1});
    std::vector<ProductState> members{
        ProductState({zero, one, plus}),
        ProductState({one, plus, zero}),
        ProductState({plus, zero, one}),
        ProductState({minus, minus, minus}),
    };
    return UPBSet("shifts", HilbertStructure({2, 2, 2}), std::move(members));
}

UPBSet build_complete_basis(const HilbertStructure& structure) {
    std::vector<ProductState> members;
    for (std::size_t i = 0; i < structure.total_dim(); ++i) {
        const auto digits = structure.split(i);
        std::vector<Vector> locals;
        for (std::size_t k = 0; k < structure.parties(); ++k) {
            const auto d = static_cast<Eigen::Index>(structure.local_dims()[k]);
            locals.push_back(Vector::Unit(d, static_cast<Eigen::Index>(digits[k])));
        }
        members.emplace_back(std::move(locals));
    }
    std::string name = "complete";
    for (std::size_t k = 0; k < structure.parties(); ++k)
        name += (k == 0 ? "-" : "x") + std::to_string(structure.local_dims()[k]);
    return UPBSet(std::move(name), structure, std::move(members));
}

std::vector<std::string> catalog_names() {
    return {"tiles", "pyramid", "shifts", "complete-2x2", "complete-2x2x2"};
}

std::optional<UPBSet> find_upb(const std::string& name) {
    if (name == "tiles") return build_tiles();
    if (name == "pyramid") return build_pyramid();
    if (name == "shifts") return build_shifts();
    if (name == "complete-2x2") return build_complete_basis(HilbertStructure({2, 2}));
    if (name == "complete-2x2x2") return build_complete_basis(HilbertStructure({2, 2, 2}));
    return std::nullopt;
}

DensityMatrix omega_state(const UPBSet& upb) {
    const auto d = upb.structure().total_dim();
    const auto n = upb.size();
    if (n >= d) throw DegenerateError("omega_state: UPB spans the whole space (n = D)");
    const auto complement = HermitianOperator::identity(d) - upb.projector();
    return DensityMatrix::trusted(complement * (1.0 / static_cast<double>(d - n)), upb.structure());
}

}  // namespace pptball
