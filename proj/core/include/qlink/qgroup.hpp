#pragma once

#include "qlink/cyclotomic.hpp"
#include "qlink/laurent.hpp"
#include "qlink/link_diagram.hpp"
#include "qlink/matrix.hpp"
#include "qlink/tangle.hpp"
#include "qlink/tangle_eval.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qlink {

/// Matrices of the generators h, x, y on an irreducible module (or its
/// dual), over the generic ring Z[s, s^-1].  h is diagonal with integer
/// eigenvalues, listed per basis vector.
struct RepData {
    long label = 1; // V_n
    bool dual = false;
    std::vector<long> h;
    SparseMatrix<Laurent> x;
    SparseMatrix<Laurent> y;

    long dim() const { return static_cast<long>(h.size()); }
};

/// The n-dimensional module V_n: h v_i = (n-2i+1) v_i,
/// x v_i = [i-1] v_{i-1}, y v_i = [n-i] v_{i+1}.
RepData rep(long n);

/// Dual action a -> transpose of S(a), with S(x) = -s^2 x,
/// S(y) = -s^-2 y, S(h) = -h.
RepData dual_rep(const RepData& r);

/// Represented universal R-matrix on a (x) b: the diagonal s^(h(x)h)
/// times the nilpotent series sum_k s^(k(k+1)) (1-s^-4)^k / [k]! x^k (x) y^k.
/// Division-free: the [k]! is cancelled into the x^k entries by exact
/// division.
SparseMatrix<Laurent> r_matrix(const RepData& a, const RepData& b);

/// Inverse through the antipode: (S (x) 1)R, assembled directly.
SparseMatrix<Laurent> r_matrix_inverse(const RepData& a, const RepData& b);

/// Crossing images: flip composed with R (the positive crossing
/// a (x) b -> b (x) a) and its inverse.
SparseMatrix<Laurent> positive_crossing(const RepData& a, const RepData& b);
SparseMatrix<Laurent> negative_crossing(const RepData& a, const RepData& b);

/// Oriented cap/cup images.  `left_up` names the orientation of the
/// left leg; each cap consumes one upward and one downward strand of
/// the same label, each cup creates such a pair.
SparseMatrix<Laurent> cap_matrix(long n, bool left_up);
SparseMatrix<Laurent> cup_matrix(long n, bool left_up);

/// Represented coproduct of x, y, h on V_n (x) V_m, used to check that
/// crossings intertwine.
SparseMatrix<Laurent> coproduct_x(const RepData& a, const RepData& b);
SparseMatrix<Laurent> coproduct_y(const RepData& a, const RepData& b);
SparseMatrix<Laurent> coproduct_h(const RepData& a, const RepData& b);

/// Quantum trace tr(G f) with G = s^(2h), and the quantum dimension
/// qtr(1) = [n].
Laurent qtr(const SparseMatrix<Laurent>& f, long n);
Laurent qdim(long n);

/// Root-of-unity evaluation: s = zeta^exponent in Q(zeta_N) with
/// N = 4l (or 2l for odd l), so l is the least natural number with
/// s^(4l) = 1.
struct RootContext {
    long l = 0;
    long order = 0;
    long exponent = 1;
    FieldPtr field;

    Cyclotomic s() const { return Cyclotomic::zeta(field, exponent); }
    Cyclotomic eval(const Laurent& p) const { return laurent_eval(p, field, exponent); }
    Cyclotomic qdim(long n) const { return eval(quantum_integer(n)); }
};

RootContext root_context(long l, long exponent = 1, bool use_2l_order = false);

/// Component labels plus coupon matrices for a labeled evaluation.
struct LabelSpec {
    std::vector<long> labels; // per diagram component
    std::map<std::string, SparseMatrix<Laurent>> coupons;
};

/// Providers implementing the ribbon generator chart.  Strand metadata
/// selects representation (label) and orientation (dual on downward
/// strands); crossings go to flip . R, mirror crossings to the inverse.
GeneratorProvider<Laurent> labeled_provider(const LabelSpec& spec);
GeneratorProvider<Cyclotomic> labeled_provider(const LabelSpec& spec, const RootContext& rc);

/// Evaluation of a closed labeled word to a scalar.
Laurent eval_labeled(const TangleWord& w, const LabelSpec& spec);
Cyclotomic eval_labeled(const TangleWord& w, const LabelSpec& spec, const RootContext& rc);

/// Twist scalar: the one-kink unknot labeled V_n divided by [n].
/// sign selects the kink handedness; the two are mutually inverse.
Laurent twist(long n, int sign);
Cyclotomic twist(long n, int sign, const RootContext& rc);

/// Invariant of a framed labeled link: the blackboard-framed word
/// evaluated through the chart, times the twist factor
/// theta_n^(framing - self writhe) per component.
Laurent colored_invariant(const LinkDiagram& d, const std::vector<long>& labels,
                          const std::vector<long>& framings);
Cyclotomic colored_invariant(const LinkDiagram& d, const std::vector<long>& labels,
                             const std::vector<long>& framings, const RootContext& rc);

/// Truncated fusion multiplicity N_{n,m}^k at level l (all 0/1 for
/// these labels); pass l = 0 for the classical (untruncated) rule.
long fusion_multiplicity(long n, long m, long k, long l);
/// Labels appearing in the truncated product V_n (x) V_m.
std::vector<long> fusion(long n, long m, long l);

/// The seven presentation relations with orientation coverage, checked
/// per label pair up to max_label (Yang-Baxter up to yb_max_label), as
/// exact identities over the generic ring.
RelationReport labeled_relation_report(long max_label, long yb_max_label);

} // namespace qlink
