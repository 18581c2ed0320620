#include "qlink/modular.hpp"

#include "qlink/errors.hpp"

#include <cmath>

namespace qlink {

SqrtExt ModularData::lift(const Cyclotomic& a) const {
    return SqrtExt::from_base(total_dim, a);
}

SqrtExt ModularData::lift_rational(long v) const {
    return lift(Cyclotomic(rc.field, v));
}

Cyclotomic ModularData::twist_power(long label, long e) const {
    const Cyclotomic& base = e >= 0 ? twists.at(label - 1) : twists_inv.at(label - 1);
    Cyclotomic acc(rc.field, 1);
    for (long t = 0; t < std::abs(e); ++t) acc *= base;
    return acc;
}

Cyclotomic determinant(std::vector<std::vector<Cyclotomic>> m) {
    const size_t n = m.size();
    if (n == 0) throw ValidationError("determinant of empty matrix");
    Cyclotomic det(m[0][0].field(), 1);
    for (size_t k = 0; k < n; ++k) {
        size_t pivot = k;
        while (pivot < n && m[pivot][k].is_zero()) ++pivot;
        if (pivot == n) return Cyclotomic(det.field());
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            det = -det;
        }
        det *= m[k][k];
        Cyclotomic inv = m[k][k].inverse();
        for (size_t i = k + 1; i < n; ++i) {
            if (m[i][k].is_zero()) continue;
            Cyclotomic f = m[i][k] * inv;
            for (size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    return det;
}

namespace {

LinkDiagram hopf_link_diagram() {
    return braid_closure(parse_braid("braid 2 : s1 s1"));
}

} // namespace

ModularData modular_data(long l, long exponent, bool use_2l_order) {
    ModularData md;
    md.rc = root_context(l, exponent, use_2l_order);
    const auto& rc = md.rc;

    // truncation sanity: [n] != 0 below l, [l] = 0
    for (long n = 1; n < l; ++n)
        if (rc.qdim(n).is_zero())
            throw ValidationError("[" + std::to_string(n) + "] vanishes below the level");
    if (!rc.qdim(l).is_zero())
        throw ValidationError("[l] does not vanish; the root order is not primitive");

    for (long n = 1; n < l; ++n) {
        md.labels.push_back(n);
        md.qdims.push_back(rc.qdim(n));
        md.twists.push_back(twist(n, +1, rc));
        md.twists_inv.push_back(twist(n, -1, rc));
    }
    const long k = md.label_count();

    for (long i = 0; i < k; ++i)
        if (!(md.twists[i] * md.twists_inv[i] == Cyclotomic(rc.field, 1)))
            throw ValidationError("twists of label " + std::to_string(i + 1) +
                                  " are not mutually inverse");

    md.fusion_mult.assign(k, std::vector<std::vector<long>>(k, std::vector<long>(k, 0)));
    for (long i = 0; i < k; ++i)
        for (long j = 0; j < k; ++j)
            for (long m = 0; m < k; ++m)
                md.fusion_mult[i][j][m] = fusion_multiplicity(i + 1, j + 1, m + 1, l);

    // Hopf matrix two ways: the closed form [nm] and the labeled link
    // through the tangle functor.
    LinkDiagram hopf = hopf_link_diagram();
    std::vector<long> zero_framings(2, 0);
    md.hopf.assign(k, std::vector<Cyclotomic>(k, Cyclotomic(rc.field)));
    for (long i = 0; i < k; ++i)
        for (long j = i; j < k; ++j) {
            Cyclotomic formula = rc.eval(quantum_integer((i + 1) * (j + 1)));
            Cyclotomic evaluated =
                colored_invariant(hopf, {i + 1, j + 1}, zero_framings, rc);
            if (!(formula == evaluated))
                throw ValidationError("Hopf value mismatch at labels " + std::to_string(i + 1) +
                                      "," + std::to_string(j + 1));
            md.hopf[i][j] = formula;
            md.hopf[j][i] = formula;
        }
    if (determinant(md.hopf).is_zero())
        throw ValidationError("Hopf matrix is singular at this root");

    md.total_dim = Cyclotomic(rc.field);
    for (long i = 0; i < k; ++i) md.total_dim += md.qdims[i] * md.qdims[i];
    md.exact_root = try_sqrt(md.total_dim);
    if (md.exact_root) {
        // pin the sign: the numeric rendering of K is the positive real root
        if (md.exact_root->numeric().real() < 0) md.exact_root = -*md.exact_root;
        md.K = md.lift(*md.exact_root);
    } else {
        md.K = SqrtExt::root(md.total_dim);
    }
    md.K_inv = md.K.inverse();

    Cyclotomic gauss_plus(rc.field), gauss_minus(rc.field);
    for (long i = 0; i < k; ++i) {
        gauss_plus += md.qdims[i] * md.qdims[i] * md.twists[i];
        gauss_minus += md.qdims[i] * md.qdims[i] * md.twists_inv[i];
    }
    md.u_plus = md.K_inv * md.lift(gauss_plus);
    md.u_minus = md.K_inv * md.lift(gauss_minus);
    if (md.u_plus * md.u_minus != md.lift_rational(1))
        throw ValidationError("framed unknot values are not mutually inverse");
    md.C = md.u_plus.inverse();
    return md;
}

} // namespace qlink
