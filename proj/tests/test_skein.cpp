#include "qlink/skein.hpp"

#include "qlink/errors.hpp"

#include <doctest.h>

#include <random>

using namespace qlink;

namespace {

Laurent mono(long e, long c = 1) { return Laurent::monomial(Var::A, e, c); }

Laurent loop_value() { return -mono(2) - mono(-2); }

BraidWord random_braid(std::mt19937& rng, int max_strands = 5, int max_letters = 8) {
    std::uniform_int_distribution<int> strands(2, max_strands);
    BraidWord b;
    b.strands = strands(rng);
    std::uniform_int_distribution<int> len(1, max_letters);
    std::uniform_int_distribution<int> gen(1, b.strands - 1);
    std::uniform_int_distribution<int> sign(0, 1);
    int n = len(rng);
    for (int i = 0; i < n; ++i) b.letters.emplace_back(gen(rng), sign(rng) ? 1 : -1);
    return b;
}

const LinkDiagram kRightTrefoil = braid_closure(parse_braid("braid 2 : s1 s1 s1"));

} // namespace

TEST_CASE("bracket regression values") {
    CHECK(bracket_statesum(LinkDiagram({}, 0)) == Laurent::one(Var::A));
    CHECK(bracket_statesum(LinkDiagram({}, 1)) == loop_value());
    CHECK(bracket_statesum(kRightTrefoil) == mono(7) + mono(3) + mono(-1) - mono(-9));
    // one positive kink: -A^3 times the unknot loop
    CHECK(bracket_statesum(LinkDiagram({}, 1).with_kink(0, +1)) ==
          -mono(3) * loop_value());
    CHECK(bracket_statesum(LinkDiagram({}, 1).with_kink(0, -1)) ==
          -mono(-3) * loop_value());
}

TEST_CASE("hopf link bracket against the hand-computed resolution sum") {
    // four resolutions: A^2 d^2 + 2 d + A^-2 d^2 = (A^2+A^-2)(A^4+A^-4)
    LinkDiagram hopf = parse_pd("X(1,4,2,3) X(3,2,4,1)");
    Laurent expect = (mono(2) + mono(-2)) * (mono(4) + mono(-4));
    CHECK(bracket_statesum(hopf) == expect);
    // dividing out one unknot loop leaves -A^4 - A^-4
    CHECK(bracket_statesum(hopf).divide_exact(loop_value()) == -mono(4) - mono(-4));
    // the same link as a braid closure
    CHECK(bracket_statesum(braid_closure(parse_braid("braid 2 : s1 s1"))) == expect);
}

TEST_CASE("state sum equals functor evaluation") {
    CHECK(bracket_functor(LinkDiagram({}, 0)) == Laurent::one(Var::A));
    CHECK(bracket_functor(LinkDiagram({}, 1)) == loop_value());
    CHECK(bracket_functor(kRightTrefoil) == bracket_statesum(kRightTrefoil));

    std::mt19937 rng(53);
    for (int trial = 0; trial < 40; ++trial) {
        LinkDiagram d = braid_closure(random_braid(rng));
        CHECK(bracket_functor(d) == bracket_statesum(d));
    }
}

TEST_CASE("kinks scale the bracket by -A^(+-3)") {
    std::mt19937 rng(59);
    for (int trial = 0; trial < 20; ++trial) {
        LinkDiagram d = braid_closure(random_braid(rng));
        std::uniform_int_distribution<int> comp(0, d.component_count() - 1);
        int c = comp(rng);
        CHECK(bracket_statesum(d.with_kink(c, +1)) == -mono(3) * bracket_statesum(d));
        CHECK(bracket_statesum(d.with_kink(c, -1)) == -mono(-3) * bracket_statesum(d));
    }
}

TEST_CASE("bracket exponents stay within the coarse resolution bound") {
    std::mt19937 rng(61);
    for (int trial = 0; trial < 30; ++trial) {
        LinkDiagram d = braid_closure(random_braid(rng));
        Laurent b = bracket_statesum(d);
        long c = static_cast<long>(d.crossings().size());
        if (b.is_zero() || c == 0) continue;
        CHECK(b.max_exp() <= 5 * c);
        CHECK(b.min_exp() >= -5 * c);
    }
}

TEST_CASE("disjoint unions multiply") {
    std::mt19937 rng(67);
    for (int trial = 0; trial < 15; ++trial) {
        LinkDiagram a = braid_closure(random_braid(rng, 4, 6));
        LinkDiagram b = braid_closure(random_braid(rng, 4, 6));
        CHECK(bracket_statesum(disjoint_union(a, b)) ==
              bracket_statesum(a) * bracket_statesum(b));
    }
}

TEST_CASE("state sum is thread-count invariant") {
    LinkDiagram d = braid_closure(parse_braid("braid 3 : s1 s2 s1 s2' s1 s2"));
    Laurent one_thread = bracket_statesum(d, 1);
    CHECK(bracket_statesum(d, 2) == one_thread);
    CHECK(bracket_statesum(d, 5) == one_thread);
}

TEST_CASE("jones regression values") {
    CHECK(jones(LinkDiagram({}, 0)) == Laurent::one(Var::TQ));

    // right trefoil: t^(1/2)(t^4 - t^2 - t - 1) in quarter powers
    Laurent right = jones(kRightTrefoil);
    Laurent expect(Var::TQ);
    expect += Laurent::monomial(Var::TQ, 18);
    expect -= Laurent::monomial(Var::TQ, 10);
    expect -= Laurent::monomial(Var::TQ, 6);
    expect -= Laurent::monomial(Var::TQ, 2);
    CHECK(right == expect);
    CHECK(jones_string(right) == "t^(1/2)*(t^4 - t^2 - t - 1)");

    // left trefoil: the mirror, t -> t^-1
    CHECK(jones(kRightTrefoil.mirrored()) == right.bar());
    CHECK(jones_string(jones(kRightTrefoil.mirrored())) ==
          "t^(-1/2)*(-1 - t^-1 - t^-2 + t^-4)");

    CHECK(jones_string(jones(LinkDiagram({}, 1))) == "t^(1/2)*(-1 - t^-1)");
}

TEST_CASE("jones is invariant under kinks and mirrors as t -> 1/t") {
    std::mt19937 rng(71);
    for (int trial = 0; trial < 20; ++trial) {
        LinkDiagram d = braid_closure(random_braid(rng));
        CHECK(jones(d.mirrored()) == jones(d).bar());
        std::uniform_int_distribution<int> comp(0, d.component_count() - 1);
        int c = comp(rng);
        CHECK(jones(d.with_kink(c, +1)) == jones(d));
        CHECK(jones(d.with_kink(c, -1)) == jones(d));
    }
}

TEST_CASE("jones exponents vs component parity") {
    // exponents are 0 mod 4 for even component count, 2 mod 4 for odd
    std::mt19937 rng(73);
    for (int trial = 0; trial < 30; ++trial) {
        LinkDiagram d = braid_closure(random_braid(rng));
        long want = d.component_count() % 2 == 0 ? 0 : 2;
        for (const auto& [e, c] : jones(d).coeffs())
            CHECK(((e % 4) + 4) % 4 == want);
    }
}

TEST_CASE("jones skein relation on random triples") {
    // t^-1 V(L+) - t V(L-) = (t^(1/2) - t^(-1/2)) V(L0)
    std::mt19937 rng(79);
    Laurent tq = Laurent::monomial(Var::TQ, 4);
    Laurent half = Laurent::monomial(Var::TQ, 2);
    int done = 0;
    while (done < 25) {
        LinkDiagram d = braid_closure(random_braid(rng));
        if (d.crossings().empty()) continue;
        std::uniform_int_distribution<int> pick(0, static_cast<int>(d.crossings().size()) - 1);
        int i = pick(rng);
        LinkDiagram plus = d.crossing_sign(i) > 0 ? d : d.with_crossing_switched(i);
        LinkDiagram minus = plus.with_crossing_switched(i);
        LinkDiagram zero = plus.with_crossing_smoothed(i);
        Laurent lhs = tq.unit_inverse() * jones(plus) - tq * jones(minus);
        Laurent rhs = (half - half.unit_inverse()) * jones(zero);
        CHECK(lhs == rhs);
        ++done;
    }
}

TEST_CASE("reduced normalization") {
    CHECK(jones_reduced(LinkDiagram({}, 1)) == Laurent::one(Var::TQ));
    CHECK(jones_string(jones_reduced(kRightTrefoil)) == "-t^4 + t^3 + t");
    CHECK_THROWS_AS(jones_reduced(LinkDiagram({}, 0)), ValidationError);
}
