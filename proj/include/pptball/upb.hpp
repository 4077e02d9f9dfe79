#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pptball/state.hpp"

namespace pptball {

/// One unit vector per subsystem.
class ProductState {
public:
    explicit ProductState(std::vector<Vector> locals);

    const std::vector<Vector>& locals() const { return locals_; }
    std::size_t parties() const { return locals_.size(); }
    Vector full() const { return kron(locals_); }

    /// |<a|b>|^2 computed factor by factor.
    double fidelity(const ProductState& other) const;

private:
    std::vector<Vector> locals_;
};

/// Orthonormal set of product vectors together with the projector onto their span.
///
/// The constructor checks unit norms, the Gram identity (1e-10) and Tr(P_S) = n.
/// Unextendibility is certified separately through the minimum product overlap
/// (see witness.hpp), since that needs an optimization.
class UPBSet {
public:
    UPBSet(std::string name, HilbertStructure structure, std::vector<ProductState> members);

    const std::string& name() const { return name_; }
    const HilbertStructure& structure() const { return structure_; }
    const std::vector<ProductState>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    const HermitianOperator& projector() const { return projector_; }

    /// n x n Gram matrix of the full product vectors.
    Matrix gram() const;

private:
    std::string name_;
    HilbertStructure structure_;
    std::vector<ProductState> members_;
    HermitianOperator projector_;
};

/// 3x3, five members.
UPBSet build_tiles();
/// 3x3, five members built from a regular pentagonal pyramid.
UPBSet build_pyramid();
/// 2x2x2, four members.
UPBSet build_shifts();
/// Computational basis of the given structure (P_S = I). Not a UPB in the
/// strict sense; used for the lambda = 1 limit.
UPBSet build_complete_basis(const HilbertStructure& structure);

/// Catalog lookup: tiles, pyramid, shifts, complete-2x2, complete-2x2x2.
std::vector<std::string> catalog_names();
std::optional<UPBSet> find_upb(const std::string& name);

/// (I - P_S) / (D - n).
DensityMatrix omega_state(const UPBSet& upb);

}  // namespace pptball
