#include "qlink/errors.hpp"
#include "qlink/json_io.hpp"
#include "qlink/link_diagram.hpp"

#include <doctest.h>

#include <random>

using namespace qlink;

namespace {

BraidWord random_braid(std::mt19937& rng, int max_strands = 5, int max_letters = 10) {
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

} // namespace

TEST_CASE("braid words parse and round-trip") {
    BraidWord b = parse_braid("braid 2 : s1 s1 s1");
    CHECK(b.strands == 2);
    CHECK(b.letters == std::vector<std::pair<int, int>>{{1, 1}, {1, 1}, {1, 1}});
    CHECK(braid_string(b) == "braid 2 : s1 s1 s1");

    BraidWord id3 = parse_braid("braid 3 :");
    CHECK(id3.strands == 3);
    CHECK(id3.letters.empty());

    BraidWord inv = parse_braid("braid 4 : s2' s3 s1'");
    CHECK(inv.letters == std::vector<std::pair<int, int>>{{2, -1}, {3, 1}, {1, -1}});
    CHECK(parse_braid(braid_string(inv)).letters == inv.letters);

    CHECK_THROWS_AS(parse_braid("braid 2 : s5"), ParseError);
    CHECK_THROWS_AS(parse_braid("braid 2 : s0"), ParseError);
    CHECK_THROWS_AS(parse_braid("braid 2 : x1"), ParseError);
    CHECK_THROWS_AS(parse_braid("link 2 : s1"), ParseError);
}

TEST_CASE("braid closure component counts equal permutation cycles") {
    CHECK(braid_closure(parse_braid("braid 1 :")).component_count() == 1);
    CHECK(braid_closure(parse_braid("braid 1 :")).crossings().empty());
    CHECK(braid_closure(parse_braid("braid 2 : s1 s1 s1")).component_count() == 1);
    CHECK(braid_closure(parse_braid("braid 2 : s1 s1")).component_count() == 2);

    std::mt19937 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        BraidWord b = random_braid(rng);
        CHECK(braid_closure(b).component_count() == b.closure_components());
    }
}

TEST_CASE("pd parsing and validation") {
    LinkDiagram hopf = parse_pd("X(1,4,2,3) X(3,2,4,1)");
    CHECK(hopf.crossings().size() == 2);
    CHECK(hopf.component_count() == 2);

    CHECK(parse_pd("").empty());
    CHECK(parse_pd("U U").component_count() == 2);

    // arc 3 lacks its partner
    CHECK_THROWS_AS(parse_pd("X(1,1,2,3)"), ValidationError);
    CHECK_THROWS_AS(parse_pd("Y(1,2,3,4)"), ParseError);
    CHECK_THROWS_AS(parse_pd("X(1,2,3)"), ParseError);

    LinkDiagram rt = parse_pd(pd_string(hopf));
    CHECK(rt.crossings().size() == 2);
    CHECK(pd_string(rt) == pd_string(hopf));
}

TEST_CASE("writhe of the oriented trefoils") {
    LinkDiagram right = braid_closure(parse_braid("braid 2 : s1 s1 s1"));
    CHECK(right.writhe() == 3);
    CHECK(right.mirrored().writhe() == -3);
    CHECK(LinkDiagram({}, 0).writhe() == 0);

    std::mt19937 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        LinkDiagram d = braid_closure(random_braid(rng));
        CHECK(d.mirrored().writhe() == -d.writhe());
        // mirroring twice restores the diagram
        LinkDiagram dd = d.mirrored().mirrored();
        CHECK(pd_string(dd) == pd_string(d));
    }
}

TEST_CASE("linking matrices") {
    SurgeryPresentation u0{LinkDiagram({}, 1), {0}, ""};
    CHECK(linking_matrix(u0) == std::vector<std::vector<long>>{{0}});
    SurgeryPresentation u1{LinkDiagram({}, 1), {1}, ""};
    CHECK(linking_matrix(u1) == std::vector<std::vector<long>>{{1}});

    SurgeryPresentation hopf{braid_closure(parse_braid("braid 2 : s1 s1")), {0, 0}, ""};
    auto m = linking_matrix(hopf);
    CHECK(m[0][0] == 0);
    CHECK(m[1][1] == 0);
    CHECK(m[0][1] == m[1][0]);
    CHECK((m[0][1] == 1 || m[0][1] == -1));
    CHECK(signature(m) == 0);

    SurgeryPresentation neg{braid_closure(parse_braid("braid 2 : s1' s1'")), {0, 0}, ""};
    CHECK(linking_matrix(neg)[0][1] == -linking_matrix(hopf)[0][1]);
}

TEST_CASE("signature by exact elimination") {
    CHECK(signature({{1}}) == 1);
    CHECK(signature({{0, 1}, {1, 0}}) == 0);
    // eigenvalues 1 and 3
    CHECK(signature({{2, 1}, {1, 2}}) == 2);
    CHECK(signature({{0}}) == 0);
    CHECK(signature({{-2, 1}, {1, -2}}) == -2);

    // Sylvester: congruence by random unimodular matrices preserves it
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> entry(-3, 3), dim(1, 5), pick(0, 4);
    for (int trial = 0; trial < 50; ++trial) {
        int n = dim(rng);
        std::vector<std::vector<long>> m(n, std::vector<long>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) m[i][j] = m[j][i] = entry(rng);
        // random unimodular P from integer row operations on identity
        std::vector<std::vector<long>> p(n, std::vector<long>(n, 0));
        for (int i = 0; i < n; ++i) p[i][i] = 1;
        for (int k = 0; k < 6; ++k) {
            int i = pick(rng) % n, j = pick(rng) % n;
            if (i == j) continue;
            long c = entry(rng);
            for (int t = 0; t < n; ++t) p[i][t] += c * p[j][t];
        }
        // m' = P^T m P
        std::vector<std::vector<long>> pm(n, std::vector<long>(n, 0)), res(n, std::vector<long>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) pm[i][j] += p[k][i] * m[k][j];
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) res[i][j] += pm[i][k] * p[k][j];
        CHECK(signature(res) == signature(m));
    }
}

TEST_CASE("kinks") {
    LinkDiagram unknot({}, 1);
    LinkDiagram plus = unknot.with_kink(0, +1);
    CHECK(plus.crossings().size() == 1);
    CHECK(plus.writhe() == 1);
    CHECK(plus.component_count() == 1);
    LinkDiagram minus = unknot.with_kink(0, -1);
    CHECK(minus.writhe() == -1);

    // insert then remove restores the diagram
    LinkDiagram tref = braid_closure(parse_braid("braid 2 : s1 s1 s1"));
    for (int sign : {+1, -1}) {
        LinkDiagram kinked = tref.with_kink(0, sign);
        CHECK(kinked.writhe() == tref.writhe() + sign);
        int kink_crossing = static_cast<int>(kinked.crossings().size()) - 1;
        CHECK(pd_string(kinked.without_kink(kink_crossing)) == pd_string(tref));
    }
    CHECK_THROWS_AS(unknot.with_kink(3, +1), ValidationError);
    CHECK_THROWS_AS(tref.without_kink(0), ValidationError);
}

TEST_CASE("surgery presentations") {
    SurgeryPresentation p = parse_surgery("name: hopf\nbraid 2 : s1 s1\nframings: [0, -2]\n");
    CHECK(p.name == "hopf");
    CHECK(p.framings == std::vector<long>{0, -2});
    CHECK(p.diagram.component_count() == 2);

    SurgeryPresentation stab = p.stabilized(+1);
    CHECK(stab.framings == std::vector<long>{0, -2, 1});
    CHECK(stab.diagram.component_count() == 3);
    auto m = linking_matrix(stab);
    CHECK(m[2][2] == 1);
    CHECK(m[2][0] == 0);
    CHECK(signature(m) == signature(linking_matrix(p)) + 1);

    CHECK_THROWS_AS(parse_surgery("braid 2 : s1 s1\n"), ParseError);
    CHECK_THROWS_AS(parse_surgery("braid 2 : s1 s1\nframings: [1]\n"), ValidationError);

    SurgeryPresentation rt = parse_surgery(surgery_string(p));
    CHECK(rt.framings == p.framings);
    CHECK(rt.name == p.name);

    SurgeryPresentation js = surgery_from_json(surgery_json(p));
    CHECK(js.framings == p.framings);
}

TEST_CASE("diagram json round-trips") {
    LinkDiagram d = braid_closure(parse_braid("braid 3 : s1 s2' s1"));
    LinkDiagram rt = diagram_from_json(diagram_json(d));
    CHECK(pd_string(rt) == pd_string(d));

    BraidWord b = parse_braid("braid 3 : s1 s2'");
    BraidWord brt = braid_from_json(braid_json(b));
    CHECK(brt.strands == b.strands);
    CHECK(brt.letters == b.letters);
}
