#include "qlink/qgroup.hpp"

#include "qlink/errors.hpp"

#include <cstdlib>
#include <mutex>
#include <numeric>
#include <sstream>
#include <tuple>

namespace qlink {

namespace {

const Laurent kZeroS = Laurent::zero(Var::S);
const Laurent kOneS = Laurent::one(Var::S);

Laurent smono(long e) { return Laurent::monomial(Var::S, e); }

} // namespace

RepData rep(long n) {
    if (n < 1) throw ValidationError("representation label must be >= 1");
    RepData r;
    r.label = n;
    r.h.resize(n);
    for (long i = 0; i < n; ++i) r.h[i] = n - 2 * (i + 1) + 1;
    r.x = SparseMatrix<Laurent>(n, n, kZeroS);
    r.y = SparseMatrix<Laurent>(n, n, kZeroS);
    // x v_i = [i-1] v_{i-1}, y v_i = [n-i] v_{i+1} on the basis v_1..v_n
    for (long i = 2; i <= n; ++i) r.x.set(i - 2, i - 1, quantum_integer(i - 1));
    for (long i = 1; i < n; ++i) r.y.set(i, i - 1, quantum_integer(n - i));
    return r;
}

RepData dual_rep(const RepData& r) {
    RepData d;
    d.label = r.label;
    d.dual = !r.dual;
    d.h.resize(r.h.size());
    for (size_t i = 0; i < r.h.size(); ++i) d.h[i] = -r.h[i];
    d.x = r.x.transposed().scaled(-smono(2));
    d.y = r.y.transposed().scaled(-smono(-2));
    return d;
}

namespace {

SparseMatrix<Laurent> matrix_power_over_factorial(const SparseMatrix<Laurent>& m, long k) {
    // m^k with every entry divided exactly by [k]!
    SparseMatrix<Laurent> acc = SparseMatrix<Laurent>::identity(m.rows(), kZeroS, kOneS);
    for (long t = 1; t <= k; ++t) {
        acc = acc * m;
        SparseMatrix<Laurent> next(acc.rows(), acc.cols(), kZeroS);
        for (const auto& [rc, v] : acc.entries())
            next.set(rc.first, rc.second, v.divide_exact(quantum_integer(t)));
        acc = next;
    }
    return acc;
}

SparseMatrix<Laurent> matrix_power(const SparseMatrix<Laurent>& m, long k) {
    SparseMatrix<Laurent> acc = SparseMatrix<Laurent>::identity(m.rows(), kZeroS, kOneS);
    for (long t = 0; t < k; ++t) acc = acc * m;
    return acc;
}

SparseMatrix<Laurent> flip_matrix(long da, long db) {
    SparseMatrix<Laurent> p(da * db, da * db, kZeroS);
    for (long i = 0; i < da; ++i)
        for (long j = 0; j < db; ++j) p.set(j * da + i, i * db + j, kOneS);
    return p;
}

Laurent series_coefficient(long k) {
    // s^(k(k+1)) (1 - s^-4)^k
    Laurent base = kOneS - smono(-4);
    return base.pow(k) * smono(k * (k + 1));
}

} // namespace

SparseMatrix<Laurent> r_matrix(const RepData& a, const RepData& b) {
    // On weight vectors v (eigenvalue p) and w (eigenvalue q):
    //   R(v (x) w) = sum_k  s^(pq + k(q-p) - k(k+1)) (s^2 - s^-2)^k / [k]!
    //                        x^k v (x) y^k w.
    // This is the unique such series intertwining the coproduct with its
    // opposite and matching the printed two-dimensional crossing matrix.
    const long da = a.dim(), db = b.dim(), d = da * db;
    SparseMatrix<Laurent> out(d, d, kZeroS);
    const Laurent qcomm = smono(2) - smono(-2);
    for (long k = 0;; ++k) {
        SparseMatrix<Laurent> xk = matrix_power_over_factorial(a.x, k);
        SparseMatrix<Laurent> yk = matrix_power(b.y, k);
        if (xk.entries().empty() || yk.entries().empty()) break;
        Laurent c = qcomm.pow(k) * smono(-k * (k + 1));
        SparseMatrix<Laurent> term = xk.kron(yk).scaled(c);
        for (const auto& [rc, v] : term.entries()) {
            const long p = a.h[rc.second / db], q = b.h[rc.second % db];
            out.add(rc.first, rc.second, v * smono(p * q + k * (q - p)));
        }
    }
    return out;
}

SparseMatrix<Laurent> r_matrix_inverse(const RepData& a, const RepData& b) {
    // (S (x) 1)R for the series above:
    //   sum_k (-1)^k s^(-pq - k(q-p) + k(k+1)) (s^2 - s^-2)^k / [k]!
    //          x^k v (x) y^k w
    // on input weights p, q.  For self-type modules this is just the bar
    // involution of R; dual actions carry bar-variant entries, so the
    // series is assembled directly.
    const long da = a.dim(), db = b.dim(), d = da * db;
    SparseMatrix<Laurent> out(d, d, kZeroS);
    const Laurent qcomm = smono(2) - smono(-2);
    for (long k = 0;; ++k) {
        SparseMatrix<Laurent> xk = matrix_power_over_factorial(a.x, k);
        SparseMatrix<Laurent> yk = matrix_power(b.y, k);
        if (xk.entries().empty() || yk.entries().empty()) break;
        Laurent c = qcomm.pow(k) * smono(k * (k + 1));
        if (k % 2 != 0) c = -c;
        SparseMatrix<Laurent> term = xk.kron(yk).scaled(c);
        for (const auto& [rc, v] : term.entries()) {
            const long p = a.h[rc.second / db], q = b.h[rc.second % db];
            out.add(rc.first, rc.second, v * smono(-p * q - k * (q - p)));
        }
    }
    return out;
}

SparseMatrix<Laurent> positive_crossing(const RepData& a, const RepData& b) {
    return flip_matrix(a.dim(), b.dim()) * r_matrix(a, b);
}

SparseMatrix<Laurent> negative_crossing(const RepData& a, const RepData& b) {
    // inverse of the positive crossing b (x) a -> a (x) b
    return r_matrix_inverse(b, a) * flip_matrix(a.dim(), b.dim());
}

SparseMatrix<Laurent> cap_matrix(long n, bool left_up) {
    RepData r = rep(n);
    SparseMatrix<Laurent> m(1, n * n, kZeroS);
    for (long i = 0; i < n; ++i)
        m.set(0, i * n + i, left_up ? smono(2 * r.h[i]) : kOneS);
    return m;
}

SparseMatrix<Laurent> cup_matrix(long n, bool left_up) {
    RepData r = rep(n);
    SparseMatrix<Laurent> m(n * n, 1, kZeroS);
    for (long i = 0; i < n; ++i)
        m.set(i * n + i, 0, left_up ? kOneS : smono(-2 * r.h[i]));
    return m;
}

namespace {

SparseMatrix<Laurent> diag_s_pow(const std::vector<long>& exps) {
    SparseMatrix<Laurent> m(exps.size(), exps.size(), kZeroS);
    for (size_t i = 0; i < exps.size(); ++i) m.set(i, i, smono(exps[i]));
    return m;
}

} // namespace

SparseMatrix<Laurent> coproduct_x(const RepData& a, const RepData& b) {
    // x (x) s^h + s^-h (x) x
    std::vector<long> ha = a.h, hb = b.h, nha = a.h;
    for (auto& e : nha) e = -e;
    return a.x.kron(diag_s_pow(hb)) + diag_s_pow(nha).kron(b.x);
}

SparseMatrix<Laurent> coproduct_y(const RepData& a, const RepData& b) {
    std::vector<long> hb = b.h, nha = a.h;
    for (auto& e : nha) e = -e;
    return a.y.kron(diag_s_pow(hb)) + diag_s_pow(nha).kron(b.y);
}

SparseMatrix<Laurent> coproduct_h(const RepData& a, const RepData& b) {
    SparseMatrix<Laurent> m(a.dim() * b.dim(), a.dim() * b.dim(), kZeroS);
    for (long i = 0; i < a.dim(); ++i)
        for (long j = 0; j < b.dim(); ++j) {
            long w = a.h[i] + b.h[j];
            if (w != 0) m.set(i * b.dim() + j, i * b.dim() + j, Laurent(Var::S, w));
        }
    return m;
}

Laurent qtr(const SparseMatrix<Laurent>& f, long n) {
    if (f.rows() != n || f.cols() != n)
        throw ValidationError("quantum trace: dimension mismatch");
    RepData r = rep(n);
    Laurent t(Var::S);
    for (long i = 0; i < n; ++i) t += f.at(i, i) * smono(2 * r.h[i]);
    return t;
}

Laurent qdim(long n) { return quantum_integer(n); }

RootContext root_context(long l, long exponent, bool use_2l_order) {
    if (l < 2) throw ValidationError("root context requires l >= 2");
    if (use_2l_order && l % 2 == 0)
        throw ValidationError("order 2l requires odd l");
    RootContext rc;
    rc.l = l;
    rc.order = use_2l_order ? 2 * l : 4 * l;
    rc.exponent = ((exponent % rc.order) + rc.order) % rc.order;
    if (std::gcd(rc.exponent, rc.order) != 1)
        throw ValidationError("root exponent " + std::to_string(exponent) +
                              " is not coprime to the order " + std::to_string(rc.order));
    rc.field = CyclotomicField::create(rc.order);
    return rc;
}

namespace {

// Cache of generic chart matrices, keyed by generator kind and the
// strand data around it.  Append-only under a lock; entries immutable.
enum class ChartKind : int { Pos, Neg, Cap, Cup };

using ChartKey = std::tuple<int, long, bool, long, bool>;

const SparseMatrix<Laurent>& chart_matrix(ChartKind kind, long n_left, bool up_left, long n_right,
                                          bool up_right) {
    static std::map<ChartKey, SparseMatrix<Laurent>> cache;
    static std::mutex mu;
    ChartKey key{static_cast<int>(kind), n_left, up_left, n_right, up_right};
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    SparseMatrix<Laurent> m;
    switch (kind) {
    case ChartKind::Pos:
    case ChartKind::Neg: {
        RepData ra = up_left ? rep(n_left) : dual_rep(rep(n_left));
        RepData rb = up_right ? rep(n_right) : dual_rep(rep(n_right));
        m = kind == ChartKind::Pos ? positive_crossing(ra, rb) : negative_crossing(ra, rb);
        break;
    }
    case ChartKind::Cap:
        m = cap_matrix(n_left, up_left);
        break;
    case ChartKind::Cup:
        m = cup_matrix(n_left, up_left);
        break;
    }
    return cache.emplace(key, std::move(m)).first->second;
}

long spec_label(const LabelSpec& spec, const StrandInfo& s) {
    if (s.component < 0 || s.component >= static_cast<int>(spec.labels.size()))
        throw ValidationError("strand component " + std::to_string(s.component) +
                              " has no label");
    long n = spec.labels[s.component];
    if (n < 1) throw ValidationError("invalid label " + std::to_string(n));
    return n;
}

SparseMatrix<Laurent> chart_for(const LabelSpec& spec, const Gen& g,
                                const std::vector<StrandInfo>& in,
                                const std::vector<StrandInfo>& out) {
    switch (g.kind) {
    case GenKind::Over:
    case GenKind::Under: {
        if (in.size() != 2 || out.size() != 2)
            throw ValidationError("crossing expects two strands");
        if (!(out[0] == in[1] && out[1] == in[0]))
            throw ValidationError("crossing must swap its strands");
        return chart_matrix(g.kind == GenKind::Over ? ChartKind::Pos : ChartKind::Neg,
                            spec_label(spec, in[0]), in[0].up, spec_label(spec, in[1]), in[1].up);
    }
    case GenKind::Cap: {
        if (in.size() != 2 || spec_label(spec, in[0]) != spec_label(spec, in[1]) ||
            in[0].up == in[1].up)
            throw ValidationError("cap expects opposite orientations of one label");
        return chart_matrix(ChartKind::Cap, spec_label(spec, in[0]), in[0].up, 0, false);
    }
    case GenKind::Cup: {
        if (out.size() != 2 || spec_label(spec, out[0]) != spec_label(spec, out[1]) ||
            out[0].up == out[1].up)
            throw ValidationError("cup expects opposite orientations of one label");
        return chart_matrix(ChartKind::Cup, spec_label(spec, out[0]), out[0].up, 0, false);
    }
    case GenKind::Id: {
        long n = spec_label(spec, in.at(0));
        return SparseMatrix<Laurent>::identity(n, kZeroS, kOneS);
    }
    case GenKind::Coupon: {
        auto it = spec.coupons.find(g.coupon);
        if (it == spec.coupons.end())
            throw ValidationError("unknown coupon '" + g.coupon + "'");
        return it->second;
    }
    }
    throw ValidationError("unhandled generator");
}

} // namespace

GeneratorProvider<Laurent> labeled_provider(const LabelSpec& spec) {
    auto shared = std::make_shared<LabelSpec>(spec);
    GeneratorProvider<Laurent> p;
    p.zero = kZeroS;
    p.one = kOneS;
    p.dim = [shared](const StrandInfo& s) { return spec_label(*shared, s); };
    p.matrix = [shared](const Gen& g, const std::vector<StrandInfo>& in,
                        const std::vector<StrandInfo>& out) {
        return chart_for(*shared, g, in, out);
    };
    return p;
}

GeneratorProvider<Cyclotomic> labeled_provider(const LabelSpec& spec, const RootContext& rc) {
    auto shared = std::make_shared<LabelSpec>(spec);
    RootContext ctx = rc;
    GeneratorProvider<Cyclotomic> p;
    p.zero = Cyclotomic(rc.field);
    p.one = Cyclotomic(rc.field, 1);
    p.dim = [shared](const StrandInfo& s) { return spec_label(*shared, s); };
    p.matrix = [shared, ctx](const Gen& g, const std::vector<StrandInfo>& in,
                             const std::vector<StrandInfo>& out) {
        SparseMatrix<Laurent> m = chart_for(*shared, g, in, out);
        return m.mapped<Cyclotomic>([&](const Laurent& v) { return ctx.eval(v); },
                                    Cyclotomic(ctx.field));
    };
    return p;
}

Laurent eval_labeled(const TangleWord& w, const LabelSpec& spec) {
    return eval_word(w, labeled_provider(spec)).scalar();
}

Cyclotomic eval_labeled(const TangleWord& w, const LabelSpec& spec, const RootContext& rc) {
    return eval_word(w, labeled_provider(spec, rc), 1024).scalar();
}

namespace {

TangleWord kink_word(int sign) {
    LinkDiagram unknot({}, 1);
    return to_tangle_word(unknot.with_kink(0, sign));
}

} // namespace

Laurent twist(long n, int sign) {
    if (n < 1) throw ValidationError("twist label must be >= 1");
    if (n == 1) return kOneS;
    Laurent value = eval_labeled(kink_word(sign), LabelSpec{{n}, {}});
    return value.divide_exact(qdim(n));
}

Cyclotomic twist(long n, int sign, const RootContext& rc) {
    if (n < 1 || n >= rc.l)
        throw ValidationError("twist label out of range at this root");
    if (n == 1) return Cyclotomic(rc.field, 1);
    Cyclotomic value = eval_labeled(kink_word(sign), LabelSpec{{n}, {}}, rc);
    return value * rc.qdim(n).inverse();
}

namespace {

template <typename S, typename TwistFn>
S colored_invariant_impl(const LinkDiagram& d, const std::vector<long>& labels,
                         const std::vector<long>& framings, S value, TwistFn&& twist_of) {
    for (int comp = 0; comp < d.component_count(); ++comp) {
        long offset = framings[comp] - d.self_writhe(comp);
        if (offset == 0) continue;
        S factor = twist_of(labels[comp], offset > 0 ? 1 : -1);
        for (long t = 0; t < std::abs(offset); ++t) value = value * factor;
    }
    return value;
}

void check_coloring(const LinkDiagram& d, const std::vector<long>& labels,
                    const std::vector<long>& framings) {
    if (static_cast<int>(labels.size()) != d.component_count())
        throw ValidationError("label count does not match component count");
    if (static_cast<int>(framings.size()) != d.component_count())
        throw ValidationError("framing count does not match component count");
    for (long n : labels)
        if (n < 1) throw ValidationError("invalid label " + std::to_string(n));
}

} // namespace

Laurent colored_invariant(const LinkDiagram& d, const std::vector<long>& labels,
                          const std::vector<long>& framings) {
    check_coloring(d, labels, framings);
    TangleWord w = to_tangle_word(d);
    Laurent value = eval_labeled(w, LabelSpec{labels, {}});
    return colored_invariant_impl(d, labels, framings, value,
                                  [](long n, int sign) { return twist(n, sign); });
}

Cyclotomic colored_invariant(const LinkDiagram& d, const std::vector<long>& labels,
                             const std::vector<long>& framings, const RootContext& rc) {
    check_coloring(d, labels, framings);
    for (long n : labels)
        if (n >= rc.l)
            throw ValidationError("label " + std::to_string(n) + " out of range at l = " +
                                  std::to_string(rc.l));
    TangleWord w = to_tangle_word(d);
    Cyclotomic value = eval_labeled(w, LabelSpec{labels, {}}, rc);
    return colored_invariant_impl(d, labels, framings, value,
                                  [&rc](long n, int sign) { return twist(n, sign, rc); });
}

long fusion_multiplicity(long n, long m, long k, long l) {
    if (n < 1 || m < 1)
        throw ValidationError("fusion labels must be >= 1");
    if (l > 0 && (n >= l || m >= l))
        throw ValidationError("fusion label out of range at this level");
    if (k < 1) return 0;
    if ((k - (n + m - 1)) % 2 != 0) return 0;
    long hi = n + m - 1;
    if (l > 0) hi = std::min(hi, 2 * l - 1 - n - m);
    return (std::abs(n - m) + 1 <= k && k <= hi) ? 1 : 0;
}

std::vector<long> fusion(long n, long m, long l) {
    std::vector<long> out;
    for (long k = std::abs(n - m) + 1; k <= n + m - 1; k += 2)
        if (fusion_multiplicity(n, m, k, l)) out.push_back(k);
    return out;
}

namespace {

TangleWord make_word(std::vector<std::vector<StrandInfo>> levels,
                     std::vector<std::vector<Gen>> slices) {
    TangleWord w;
    w.levels = std::move(levels);
    w.slices = std::move(slices);
    w.validate();
    return w;
}

StrandInfo up(int c) { return {c, true}; }
StrandInfo dn(int c) { return {c, false}; }

} // namespace

RelationReport labeled_relation_report(long max_label, long yb_max_label) {
    RelationReport rep;
    auto check = [&rep](const std::string& name, bool ok) { rep.checks.emplace_back(name, ok); };
    const Gen OV{GenKind::Over}, UN{GenKind::Under}, CU{GenKind::Cup}, CA{GenKind::Cap},
        ID{GenKind::Id};

    auto eval = [](const TangleWord& w, std::vector<long> labels) {
        return eval_word(w, labeled_provider(LabelSpec{std::move(labels), {}}));
    };
    auto ident = [](long d) { return SparseMatrix<Laurent>::identity(d, kZeroS, kOneS); };

    for (long n = 1; n <= max_label; ++n) {
        // Move I: a curl on the left of a strand equals one on the right,
        // and opposite curls cancel.
        auto curl = [&](bool left, bool positive) {
            Gen X = positive ? OV : UN;
            if (left)
                return make_word({{up(0)},
                                  {dn(0), up(0), up(0)},
                                  {dn(0), up(0), up(0)},
                                  {up(0)}},
                                 {{CU, ID}, {ID, X}, {CA, ID}});
            return make_word({{up(0)},
                              {up(0), up(0), dn(0)},
                              {up(0), up(0), dn(0)},
                              {up(0)}},
                             {{ID, CU}, {X, ID}, {ID, CA}});
        };
        bool move1 = eval(curl(true, true), {n}) == eval(curl(false, true), {n}) &&
                     eval(curl(true, false), {n}) == eval(curl(false, false), {n}) &&
                     eval(curl(true, true), {n}) * eval(curl(true, false), {n}) == ident(n);
        check("I: curls agree and cancel, label " + std::to_string(n), move1);

        // Move IV: all four zig-zags straighten.
        auto zig = [&](bool cup_left, bool strand_up) {
            StrandInfo main = strand_up ? up(0) : dn(0);
            StrandInfo other = strand_up ? dn(0) : up(0);
            std::vector<StrandInfo> mid = {main, other, main};
            if (cup_left)
                return make_word({{main}, mid, {main}}, {{CU, ID}, {ID, CA}});
            return make_word({{main}, mid, {main}}, {{ID, CU}, {CA, ID}});
        };
        bool move4 = true;
        for (bool cl : {true, false})
            for (bool su : {true, false}) move4 = move4 && eval(zig(cl, su), {n}) == ident(n);
        check("IV: zig-zags straighten, label " + std::to_string(n), move4);
    }

    for (long n = 1; n <= max_label; ++n) {
        for (long m = 1; m <= max_label; ++m) {
            // Move II with every orientation pair.
            bool move2 = true;
            for (bool un : {true, false})
                for (bool um : {true, false}) {
                    StrandInfo a{0, un}, b{1, um};
                    auto w = make_word({{a, b}, {b, a}, {a, b}}, {{OV}, {UN}});
                    auto w2 = make_word({{a, b}, {b, a}, {a, b}}, {{UN}, {OV}});
                    move2 = move2 && eval(w, {n, m}) == ident(n * m) &&
                            eval(w2, {n, m}) == ident(n * m);
                }
            check("II: crossings invert, labels " + std::to_string(n) + "," + std::to_string(m),
                  move2);

            // Move V: crossings slide past maxima and minima.
            StrandInfo a = up(0), b = up(1), bd = dn(1);
            auto v_lhs = make_word({{b, a, bd}, {a, b, bd}, {a}}, {{OV, ID}, {ID, CA}});
            auto v_rhs = make_word({{b, a, bd}, {b, bd, a}, {a}}, {{ID, UN}, {CA, ID}});
            auto v_lhs2 = make_word({{b, a, bd}, {a, b, bd}, {a}}, {{UN, ID}, {ID, CA}});
            auto v_rhs2 = make_word({{b, a, bd}, {b, bd, a}, {a}}, {{ID, OV}, {CA, ID}});
            auto v_lhs3 = make_word({{a}, {a, b, bd}, {b, a, bd}}, {{ID, CU}, {OV, ID}});
            auto v_rhs3 = make_word({{a}, {b, bd, a}, {b, a, bd}}, {{CU, ID}, {ID, UN}});
            auto v_lhs4 = make_word({{a}, {a, b, bd}, {b, a, bd}}, {{ID, CU}, {UN, ID}});
            auto v_rhs4 = make_word({{a}, {b, bd, a}, {b, a, bd}}, {{CU, ID}, {ID, OV}});
            bool move5 = eval(v_lhs, {n, m}) == eval(v_rhs, {n, m}) &&
                         eval(v_lhs2, {n, m}) == eval(v_rhs2, {n, m}) &&
                         eval(v_lhs3, {n, m}) == eval(v_rhs3, {n, m}) &&
                         eval(v_lhs4, {n, m}) == eval(v_rhs4, {n, m});
            check("V: crossings slide past extrema, labels " + std::to_string(n) + "," +
                      std::to_string(m),
                  move5);

            // Moves VI/VII: interchange of distant generators.
            StrandInfo c = up(2), cd = dn(2);
            auto one_slice = make_word({{a, b, c, cd}, {b, a}}, {{OV, CA}});
            auto cross_first =
                make_word({{a, b, c, cd}, {b, a, c, cd}, {b, a}}, {{OV, ID, ID}, {ID, ID, CA}});
            auto cap_first =
                make_word({{a, b, c, cd}, {a, b}, {b, a}}, {{ID, ID, CA}, {OV}});
            bool move67 = eval(one_slice, {n, m, 1}) == eval(cross_first, {n, m, 1}) &&
                          eval(one_slice, {n, m, 1}) == eval(cap_first, {n, m, 1});
            check("VI/VII: interchange, labels " + std::to_string(n) + "," + std::to_string(m),
                  move67);
        }
    }

    // Move III: the braid relation on triples.
    for (long n = 1; n <= yb_max_label; ++n)
        for (long m = 1; m <= yb_max_label; ++m)
            for (long k = 1; k <= yb_max_label; ++k) {
                StrandInfo a = up(0), b = up(1), c = up(2);
                auto lhs = make_word({{a, b, c}, {b, a, c}, {b, c, a}, {c, b, a}},
                                     {{OV, ID}, {ID, OV}, {OV, ID}});
                auto rhs = make_word({{a, b, c}, {a, c, b}, {c, a, b}, {c, b, a}},
                                     {{ID, OV}, {OV, ID}, {ID, OV}});
                check("III: braid relation, labels " + std::to_string(n) + "," +
                          std::to_string(m) + "," + std::to_string(k),
                      eval(lhs, {n, m, k}) == eval(rhs, {n, m, k}));
            }
    return rep;
}

} // namespace qlink
