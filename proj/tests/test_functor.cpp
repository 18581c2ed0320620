#include "qlink/tangle_eval.hpp"

#include "qlink/errors.hpp"
#include "qlink/json_io.hpp"

#include <doctest.h>

using namespace qlink;

namespace {

Laurent mono(long e, long c = 1) { return Laurent::monomial(Var::A, e, c); }
const Laurent kZero = Laurent::zero(Var::A);
const Laurent kOne = Laurent::one(Var::A);

} // namespace

TEST_CASE("generator matrices match the defining table") {
    SparseMatrix<Laurent> cap = bracket_generator_matrix(GenKind::Cap);
    CHECK(cap.rows() == 1);
    CHECK(cap.cols() == 4);
    CHECK(cap.at(0, 1) == mono(1));
    CHECK(cap.at(0, 2) == -mono(-1));
    CHECK(cap.at(0, 0) == kZero);
    CHECK(cap.at(0, 3) == kZero);

    SparseMatrix<Laurent> cup = bracket_generator_matrix(GenKind::Cup);
    CHECK(cup.rows() == 4);
    CHECK(cup.cols() == 1);
    CHECK(cup.at(1, 0) == -mono(1));
    CHECK(cup.at(2, 0) == mono(-1));

    SparseMatrix<Laurent> over = bracket_generator_matrix(GenKind::Over);
    CHECK(over.at(0, 0) == mono(1));
    CHECK(over.at(1, 2) == mono(-1));
    CHECK(over.at(2, 1) == mono(-1));
    CHECK(over.at(2, 2) == mono(1) - mono(-3));
    CHECK(over.at(3, 3) == mono(1));
    CHECK(over.entries().size() == 5);

    // crossings resolve into the two smoothings
    auto id4 = SparseMatrix<Laurent>::identity(4, kZero, kOne);
    CHECK(over == id4.scaled(mono(1)) +
                      (cup * cap).scaled(mono(-1)));
    CHECK(bracket_generator_matrix(GenKind::Under) ==
          id4.scaled(mono(-1)) + (cup * cap).scaled(mono(1)));
}

TEST_CASE("word evaluation") {
    BracketTable t = bracket_table();
    auto provider = bracket_provider(t);

    // a minimum then a maximum: the loop value
    TangleWord loop = parse_tangle_dsl("cup\ncap\n");
    CHECK(eval_word(loop, provider).scalar() == -mono(2) - mono(-2));

    // the empty word is the unit
    TangleWord empty;
    empty.levels.push_back({});
    CHECK(eval_word(empty, provider).scalar() == kOne);

    // identity slice on two strands
    TangleWord id2 = parse_tangle_dsl("id, id\n");
    CHECK(eval_word(id2, provider) == SparseMatrix<Laurent>::identity(4, kZero, kOne));

    // arity mismatch reports the slice
    TangleWord bad = parse_tangle_dsl("cup\ncap\n");
    bad.slices[1] = {{GenKind::Cap}, {GenKind::Id}};
    try {
        eval_word(bad, provider);
        CHECK(false);
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("slice 1") != std::string::npos);
    }
}

TEST_CASE("coupons evaluate to their matrices and slide along strands") {
    BracketTable t = bracket_table();
    // quantum-trace-like closure of a coupon: cap (f (x) 1) cup
    auto trace_of = [&t](const SparseMatrix<Laurent>& f) {
        BracketTable tc = t;
        tc.coupons.emplace("f", f);
        TangleWord w = parse_tangle_dsl("cup\ncoupon(f;1;1), id\ncap\n");
        return eval_word(w, bracket_provider(tc)).scalar();
    };
    // diagonal f: the closure weights the entries by -A^2 and -A^-2
    SparseMatrix<Laurent> f(2, 2, kZero);
    f.set(0, 0, mono(0, 5));
    f.set(1, 1, mono(1));
    CHECK(trace_of(f) == mono(2, -5) - mono(-1));
    // off-diagonal f closes to zero
    SparseMatrix<Laurent> off(2, 2, kZero);
    off.set(0, 1, kOne);
    CHECK(trace_of(off) == kZero);
    // identity coupon: the unknot
    CHECK(trace_of(SparseMatrix<Laurent>::identity(2, kZero, kOne)) == -mono(2) - mono(-2));

    // sliding the coupon around the loop does not change the value
    BracketTable tc = t;
    tc.coupons.emplace("f", f);
    TangleWord left = parse_tangle_dsl("cup\ncoupon(f;1;1), id\ncap\n");
    TangleWord right = parse_tangle_dsl("cup\nid, coupon(f;1;1)\ncap\n");
    CHECK(eval_word(left, bracket_provider(tc)).scalar() ==
          eval_word(right, bracket_provider(tc)).scalar());
}

TEST_CASE("relation suite for the standard table") {
    RelationReport rep = check_relations(bracket_table());
    for (const auto& [name, ok] : rep.checks) {
        INFO(name);
        CHECK(ok);
    }
    CHECK(rep.all_passed());
}

TEST_CASE("negative control: identity crossing breaks the framed move") {
    BracketTable t = bracket_table();
    t.over = SparseMatrix<Laurent>::identity(4, kZero, kOne);
    RelationReport rep = check_relations(t);
    CHECK(!rep.all_passed());
    bool move1_failed = false;
    for (const auto& [name, ok] : rep.checks)
        if (name.rfind("I:", 0) == 0 && !ok) move1_failed = true;
    CHECK(move1_failed);
}

TEST_CASE("matrix json export") {
    std::string j = matrix_json(bracket_generator_matrix(GenKind::Cap));
    CHECK(j.find("\"rows\":1") != std::string::npos);
    CHECK(j.find("\"cols\":4") != std::string::npos);
    CHECK(j.find("A") != std::string::npos);
}
