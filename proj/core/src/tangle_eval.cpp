#include "qlink/tangle_eval.hpp"

#include <sstream>

namespace qlink {

namespace {

const Laurent kZero = Laurent::zero(Var::A);
const Laurent kOne = Laurent::one(Var::A);

Laurent mono(long e) { return Laurent::monomial(Var::A, e); }

} // namespace

BracketTable bracket_table() {
    BracketTable t;
    // Basis order on V tensor V: (1,1), (1,2), (2,1), (2,2) with the
    // leftmost strand as the most significant index.
    t.over = SparseMatrix<Laurent>(4, 4, kZero);
    t.over.set(0, 0, mono(1));
    t.over.set(1, 2, mono(-1));
    t.over.set(2, 1, mono(-1));
    t.over.set(2, 2, mono(1) - mono(-3));
    t.over.set(3, 3, mono(1));

    t.under = SparseMatrix<Laurent>(4, 4, kZero);
    t.under.set(0, 0, mono(-1));
    t.under.set(1, 1, mono(-1) - mono(3));
    t.under.set(1, 2, mono(1));
    t.under.set(2, 1, mono(1));
    t.under.set(3, 3, mono(-1));

    t.cap = SparseMatrix<Laurent>(1, 4, kZero);
    t.cap.set(0, 1, mono(1));
    t.cap.set(0, 2, -mono(-1));

    t.cup = SparseMatrix<Laurent>(4, 1, kZero);
    t.cup.set(1, 0, -mono(1));
    t.cup.set(2, 0, mono(-1));
    return t;
}

SparseMatrix<Laurent> bracket_generator_matrix(GenKind g) {
    static const BracketTable t = bracket_table();
    switch (g) {
    case GenKind::Over: return t.over;
    case GenKind::Under: return t.under;
    case GenKind::Cup: return t.cup;
    case GenKind::Cap: return t.cap;
    case GenKind::Id: return SparseMatrix<Laurent>::identity(2, kZero, kOne);
    case GenKind::Coupon: break;
    }
    throw ValidationError("no standard matrix for this generator");
}

GeneratorProvider<Laurent> bracket_provider(const BracketTable& t) {
    GeneratorProvider<Laurent> p;
    p.zero = kZero;
    p.one = kOne;
    p.dim = [](const StrandInfo&) { return 2L; };
    p.matrix = [&t](const Gen& g, const std::vector<StrandInfo>&, const std::vector<StrandInfo>&) {
        switch (g.kind) {
        case GenKind::Over: return t.over;
        case GenKind::Under: return t.under;
        case GenKind::Cup: return t.cup;
        case GenKind::Cap: return t.cap;
        case GenKind::Id: return SparseMatrix<Laurent>::identity(2, kZero, kOne);
        case GenKind::Coupon: {
            auto it = t.coupons.find(g.coupon);
            if (it == t.coupons.end())
                throw ValidationError("unknown coupon '" + g.coupon + "'");
            return it->second;
        }
        }
        throw ValidationError("unhandled generator");
    };
    return p;
}

bool RelationReport::all_passed() const {
    for (const auto& [name, ok] : checks)
        if (!ok) return false;
    return true;
}

std::string RelationReport::summary() const {
    std::ostringstream out;
    for (const auto& [name, ok] : checks)
        out << (ok ? "pass" : "FAIL") << "  " << name << "\n";
    return out.str();
}

RelationReport check_relations(const BracketTable& t) {
    RelationReport rep;
    const auto id1 = SparseMatrix<Laurent>::identity(2, kZero, kOne);
    const auto id2 = SparseMatrix<Laurent>::identity(4, kZero, kOne);
    auto check = [&rep](const std::string& name, bool ok) { rep.checks.emplace_back(name, ok); };

    // curls on either side of a strand
    auto left_curl = [&](const SparseMatrix<Laurent>& x) {
        return t.cap.kron(id1) * (id1.kron(x)) * t.cup.kron(id1);
    };
    auto right_curl = [&](const SparseMatrix<Laurent>& x) {
        return id1.kron(t.cap) * (x.kron(id1)) * id1.kron(t.cup);
    };
    check("I: left curl equals right curl",
          left_curl(t.over) == right_curl(t.over) && left_curl(t.under) == right_curl(t.under));
    check("I: opposite curls cancel", left_curl(t.over) * left_curl(t.under) == id1 &&
                                          left_curl(t.under) * left_curl(t.over) == id1);

    check("II: crossings are mutually inverse",
          t.over * t.under == id2 && t.under * t.over == id2);

    check("III: braid relation (Yang-Baxter)",
          t.over.kron(id1) * id1.kron(t.over) * t.over.kron(id1) ==
              id1.kron(t.over) * t.over.kron(id1) * id1.kron(t.over));

    check("IV: zig-zags straighten",
          t.cap.kron(id1) * id1.kron(t.cup) == id1 && id1.kron(t.cap) * t.cup.kron(id1) == id1);

    check("V: crossings slide past maxima",
          id1.kron(t.cap) * t.over.kron(id1) == t.cap.kron(id1) * id1.kron(t.under) &&
              t.cap.kron(id1) * id1.kron(t.over) == id1.kron(t.cap) * t.under.kron(id1));
    check("V: crossings slide past minima",
          t.over.kron(id1) * id1.kron(t.cup) == id1.kron(t.under) * t.cup.kron(id1) &&
              id1.kron(t.over) * t.cup.kron(id1) == t.under.kron(id1) * id1.kron(t.cup));

    // monoidal interchange on sample generator pairs
    auto interchange = [&](const SparseMatrix<Laurent>& s, const SparseMatrix<Laurent>& u) {
        auto in = SparseMatrix<Laurent>::identity(s.cols(), kZero, kOne);
        auto im = SparseMatrix<Laurent>::identity(s.rows(), kZero, kOne);
        auto ip = SparseMatrix<Laurent>::identity(u.rows(), kZero, kOne);
        auto iq = SparseMatrix<Laurent>::identity(u.cols(), kZero, kOne);
        auto st = s.kron(u);
        return s.kron(ip) * in.kron(u) == st && im.kron(u) * s.kron(iq) == st;
    };
    check("VI: interchange of distant generators", interchange(t.over, t.cap));
    check("VII: interchange of distant generators", interchange(t.cup, t.under));
    return rep;
}

} // namespace qlink
