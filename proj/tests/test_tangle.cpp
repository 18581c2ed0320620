#include "qlink/errors.hpp"
#include "qlink/tangle.hpp"

#include <doctest.h>

#include <random>

using namespace qlink;

TEST_CASE("minimal words") {
    // crossingless unknot: one minimum, one maximum
    TangleWord u = to_tangle_word(LinkDiagram({}, 1));
    REQUIRE(u.slices.size() == 2);
    CHECK(u.slices[0] == std::vector<Gen>{{GenKind::Cup}});
    CHECK(u.slices[1] == std::vector<Gen>{{GenKind::Cap}});
    CHECK(u.closed());

    TangleWord empty = to_tangle_word(LinkDiagram({}, 0));
    CHECK(empty.slices.empty());
    CHECK(empty.closed());
}

TEST_CASE("hopf word structure") {
    TangleWord w = to_tangle_word(parse_pd("X(1,4,2,3) X(3,2,4,1)"));
    CHECK(w.closed());
    int cups = 0, caps = 0, crossings = 0;
    for (const auto& slice : w.slices)
        for (const auto& g : slice) {
            if (g.kind == GenKind::Cup) ++cups;
            if (g.kind == GenKind::Cap) ++caps;
            if (g.kind == GenKind::Over || g.kind == GenKind::Under) ++crossings;
        }
    CHECK(cups == 2);
    CHECK(caps == 2);
    CHECK(crossings == 2);
    CHECK(w.max_width() == 4);
}

TEST_CASE("slicing is deterministic and strand metadata is consistent") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> strands(2, 5), len(1, 10), sign(0, 1);
    for (int trial = 0; trial < 60; ++trial) {
        BraidWord b;
        b.strands = strands(rng);
        int n = len(rng);
        std::uniform_int_distribution<int> gen(1, b.strands - 1);
        for (int i = 0; i < n; ++i) b.letters.emplace_back(gen(rng), sign(rng) ? 1 : -1);
        LinkDiagram d = braid_closure(b);
        TangleWord w1 = to_tangle_word(d);
        TangleWord w2 = to_tangle_word(d);
        CHECK(w1.slices == w2.slices);
        CHECK(w1.closed());
        w1.validate();
        // every strand knows its component
        for (const auto& lvl : w1.levels)
            for (const auto& s : lvl) {
                CHECK(s.component >= 0);
                CHECK(s.component < d.component_count());
            }
    }
}

TEST_CASE("tangle dsl round-trip and arity validation") {
    std::string text = "cup\nid, cup, id\nover, id, id\ncap, id, id\ncap\n";
    TangleWord w = parse_tangle_dsl(text);
    CHECK(w.slices.size() == 5);
    CHECK(w.closed());
    CHECK(tangle_dsl_string(w) == text);

    CHECK_THROWS_AS(parse_tangle_dsl("cup\ncap, id\n"), ValidationError);
    CHECK_THROWS_AS(parse_tangle_dsl("twist\n"), ParseError);

    TangleWord c = parse_tangle_dsl("coupon(f;2;2)\n");
    CHECK(c.slices[0][0].kind == GenKind::Coupon);
    CHECK(c.slices[0][0].coupon == "f");

    // validate() names the offending slice
    TangleWord bad = w;
    bad.slices[1] = {{GenKind::Id}};
    try {
        bad.validate();
        CHECK(false);
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("slice 1") != std::string::npos);
    }
}
