#pragma once

#include "qlink/qgroup.hpp"
#include "qlink/sqrt_ext.hpp"

#include <optional>
#include <vector>

namespace qlink {

/// Everything the surgery invariant needs at a fixed root: the label
/// set V_1..V_{l-1}, quantum dimensions, fusion tensor, the matrix of
/// labeled Hopf-link values, twist scalars, and the weighted label sum
/// omega with its square-root normalization.
///
/// K denotes qdim(omega)^(1/2); values built from it live in the
/// quadratic extension by that root (with a trivial root part whenever
/// the square root exists exactly in the cyclotomic field).
struct ModularData {
    RootContext rc;
    std::vector<long> labels; // 1 .. l-1

    std::vector<Cyclotomic> qdims;                          // by label index
    std::vector<std::vector<std::vector<long>>> fusion_mult; // [i][j][k] label indices
    std::vector<std::vector<Cyclotomic>> hopf;              // H matrix
    std::vector<Cyclotomic> twists, twists_inv;

    Cyclotomic total_dim;                 // qdim(omega) = sum of squared qdims
    std::optional<Cyclotomic> exact_root; // exact sqrt of total_dim when it exists

    SqrtExt K, K_inv, u_plus, u_minus, C;

    long level() const { return rc.l; }
    long label_count() const { return static_cast<long>(labels.size()); }

    /// Embeds a base-field value into the working extension.
    SqrtExt lift(const Cyclotomic& a) const;
    SqrtExt lift_rational(long v) const;

    const Cyclotomic& qdim_of(long label) const { return qdims.at(label - 1); }
    const Cyclotomic& twist_of(long label) const { return twists.at(label - 1); }
    Cyclotomic twist_power(long label, long e) const;
};

/// Builds the modular data at the given root (order 4l by default, 2l
/// for odd l if requested).  Construction verifies the defining
/// properties and throws ValidationError naming any failure:
/// [l] = 0 with [n] != 0 below it, the Hopf matrix symmetric,
/// nonsingular, and equal whether computed by the closed form [nm] or
/// by evaluating the labeled Hopf link, and the +-1-framed unknot
/// values mutually inverse.
ModularData modular_data(long l, long exponent = 1, bool use_2l_order = false);

/// Exact determinant by fraction-free elimination in the field.
Cyclotomic determinant(std::vector<std::vector<Cyclotomic>> m);

} // namespace qlink
