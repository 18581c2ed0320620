#include "qlink/cyclotomic.hpp"
#include "qlink/errors.hpp"
#include "qlink/laurent.hpp"
#include "qlink/sqrt_ext.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace qlink;

namespace {

Laurent random_laurent(std::mt19937& rng, Var v) {
    std::uniform_int_distribution<int> terms(0, 5), exp(-6, 6), coeff(-9, 9);
    Laurent p(v);
    int n = terms(rng);
    for (int i = 0; i < n; ++i) p += Laurent::monomial(v, exp(rng), coeff(rng));
    return p;
}

} // namespace

TEST_CASE("laurent basics and canonical strings") {
    Laurent zero = Laurent::zero(Var::A);
    CHECK(canonical_string(zero) == "0");
    CHECK(canonical_string(Laurent::one(Var::A)) == "1");

    // the right-trefoil bracket, by hand
    Laurent trefoil = Laurent::monomial(Var::A, 7) + Laurent::monomial(Var::A, 3) +
                      Laurent::monomial(Var::A, -1) - Laurent::monomial(Var::A, -9);
    CHECK(canonical_string(trefoil) == "A^7 + A^3 + A^-1 - A^-9");
    CHECK(parse_laurent(canonical_string(trefoil), Var::A) == trefoil);

    Laurent mixed = Laurent::monomial(Var::A, 2, 5) - Laurent::monomial(Var::A, 0, 3);
    CHECK(canonical_string(mixed) == "5*A^2 - 3");
    CHECK(parse_laurent("5*A^2 - 3", Var::A) == mixed);
    CHECK(parse_laurent("5 A^2 - 3", Var::A) == mixed);
}

TEST_CASE("laurent ring axioms on random triples") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        Laurent a = random_laurent(rng, Var::A);
        Laurent b = random_laurent(rng, Var::A);
        Laurent c = random_laurent(rng, Var::A);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * Laurent::one(Var::A) == a);
        CHECK(a - a == Laurent::zero(Var::A));
        CHECK(parse_laurent(canonical_string(a), Var::A) == a);
    }
}

TEST_CASE("laurent exact division") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        Laurent a = random_laurent(rng, Var::A);
        Laurent b = random_laurent(rng, Var::A) + Laurent::monomial(Var::A, 7); // nonzero
        CHECK((a * b).divide_exact(b) == a);
    }
    Laurent p = Laurent::monomial(Var::A, 2) + Laurent::one(Var::A);
    CHECK_THROWS_AS(p.divide_exact(Laurent::monomial(Var::A, 0, 2) + Laurent::monomial(Var::A, 1)),
                    ValidationError);
}

TEST_CASE("quantum integers") {
    CHECK(quantum_integer(0) == Laurent::zero(Var::S));
    CHECK(quantum_integer(1) == Laurent::one(Var::S));
    CHECK(quantum_integer(2) == Laurent::monomial(Var::S, 2) + Laurent::monomial(Var::S, -2));
    for (long n = 1; n <= 9; ++n) CHECK(quantum_integer(-n) == -quantum_integer(n));

    // [n][m] telescopes into a sum of quantum integers (classical rule)
    for (long n = 1; n <= 5; ++n)
        for (long m = 1; m <= 5; ++m) {
            Laurent sum(Var::S);
            for (long k = std::labs(n - m) + 1; k <= n + m - 1; k += 2)
                sum += quantum_integer(k);
            CHECK(quantum_integer(n) * quantum_integer(m) == sum);
        }
}

TEST_CASE("quantum integers at a primitive root vanish exactly at the level") {
    // N = 20, l = 5: numerically sin(5 pi/5)/sin(pi/5) = 0
    auto f = CyclotomicField::create(20);
    for (long n = 1; n < 5; ++n)
        CHECK(!laurent_eval(quantum_integer(n), f, 1).is_zero());
    Cyclotomic q5 = laurent_eval(quantum_integer(5), f, 1);
    CHECK(q5.is_zero());
    CHECK(std::abs(std::sin(5 * M_PI / 5) / std::sin(M_PI / 5)) < 1e-12);

    for (long l = 2; l <= 12; ++l) {
        auto field = CyclotomicField::create(4 * l);
        for (long n = 1; n < l; ++n)
            CHECK(!laurent_eval(quantum_integer(n), field, 1).is_zero());
        CHECK(laurent_eval(quantum_integer(l), field, 1).is_zero());
    }
    // the 2l-order variant for odd l
    for (long l : {3L, 5L, 7L}) {
        auto field = CyclotomicField::create(2 * l);
        CHECK(laurent_eval(quantum_integer(l), field, 1).is_zero());
        for (long n = 1; n < l; ++n)
            CHECK(!laurent_eval(quantum_integer(n), field, 1).is_zero());
    }
}

TEST_CASE("cyclotomic field arithmetic") {
    auto f = CyclotomicField::create(12);
    Cyclotomic z = Cyclotomic::zeta(f);
    CHECK(z.pow(12) == Cyclotomic(f, 1));
    CHECK(z.pow(6) == Cyclotomic(f, -1));
    CHECK(z * z.inverse() == Cyclotomic(f, 1));

    std::mt19937 rng(3);
    std::uniform_int_distribution<int> coeff(-5, 5), power(0, 11);
    auto random_elt = [&](const FieldPtr& field) {
        Cyclotomic x(field);
        for (int i = 0; i < 4; ++i)
            x += Cyclotomic::zeta(field, power(rng)) * Cyclotomic(field, coeff(rng));
        return x;
    };
    for (int trial = 0; trial < 60; ++trial) {
        Cyclotomic a = random_elt(f), b = random_elt(f), c = random_elt(f);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
        if (!a.is_zero()) CHECK(a * a.inverse() == Cyclotomic(f, 1));
    }
}

TEST_CASE("specialization is a ring homomorphism") {
    std::mt19937 rng(5);
    auto f = CyclotomicField::create(20);
    for (int trial = 0; trial < 80; ++trial) {
        Laurent p = random_laurent(rng, Var::S);
        Laurent q = random_laurent(rng, Var::S);
        CHECK(laurent_eval(p * q, f, 3) == laurent_eval(p, f, 3) * laurent_eval(q, f, 3));
        CHECK(laurent_eval(p + q, f, 3) == laurent_eval(p, f, 3) + laurent_eval(q, f, 3));
    }
}

TEST_CASE("evaluation examples") {
    auto f = CyclotomicField::create(20);
    // the monomial A specializes to the root itself
    CHECK(laurent_eval(Laurent::monomial(Var::A, 1), f, 1) == Cyclotomic::zeta(f));
    CHECK(laurent_eval(Laurent::zero(Var::A), f, 1).is_zero());

    // -A^2 - A^-2 at zeta_20 is -2 cos(pi/5) numerically
    Laurent p = -Laurent::monomial(Var::A, 2) - Laurent::monomial(Var::A, -2);
    auto num = laurent_eval(p, f, 1).numeric();
    CHECK(std::abs(num.real() - (-2 * std::cos(M_PI / 5))) < 1e-9);
    CHECK(std::abs(num.imag()) < 1e-12);

    // evaluation at an arbitrary element agrees with the power table
    Cyclotomic x = Cyclotomic::zeta(f, 3);
    CHECK(laurent_eval(p, x) == laurent_eval(p, f, 3));
}

TEST_CASE("exact square roots in cyclotomic fields") {
    // rational square
    auto f12 = CyclotomicField::create(12);
    auto r = try_sqrt(Cyclotomic(f12, mpq_class(9, 4)));
    REQUIRE(r.has_value());
    CHECK(*r * *r == Cyclotomic(f12, mpq_class(9, 4)));

    // -3 has a root in Q(zeta_12) (through the Gauss sum for 3)
    auto r3 = try_sqrt(Cyclotomic(f12, -3));
    REQUIRE(r3.has_value());
    CHECK(*r3 * *r3 == Cyclotomic(f12, -3));

    // 2 has no root in Q(zeta_12)
    CHECK(!try_sqrt(Cyclotomic(f12, 2)).has_value());

    // 2 does have one in Q(zeta_8)
    auto f8 = CyclotomicField::create(8);
    auto r2 = try_sqrt(Cyclotomic(f8, 2));
    REQUIRE(r2.has_value());
    CHECK(*r2 * *r2 == Cyclotomic(f8, 2));

    // a non-rational radicand with a unit square factored in
    auto f32 = CyclotomicField::create(32);
    Cyclotomic w = Cyclotomic::zeta(f32, 2) - Cyclotomic::zeta(f32, -2);
    Cyclotomic x = Cyclotomic(f32, -16) * (w * w).inverse();
    auto rx = try_sqrt(x);
    REQUIRE(rx.has_value());
    CHECK(*rx * *rx == x);
}

TEST_CASE("quadratic extension arithmetic") {
    auto f = CyclotomicField::create(12);
    Cyclotomic two(f, 2);
    SqrtExt d = SqrtExt::root(two);
    CHECK(d * d == SqrtExt::from_base(two, two));
    SqrtExt x = d + SqrtExt::from_base(two, Cyclotomic(f, 3));
    CHECK(x * x.inverse() == SqrtExt::from_base(two, Cyclotomic(f, 1)));
    CHECK(std::abs(d.numeric().real() - std::sqrt(2.0)) < 1e-12);

    std::mt19937 rng(9);
    std::uniform_int_distribution<int> coeff(-4, 4);
    auto rand_ext = [&]() {
        return SqrtExt(two, Cyclotomic(f, coeff(rng)) + Cyclotomic::zeta(f) * Cyclotomic(f, coeff(rng)),
                       Cyclotomic(f, coeff(rng)));
    };
    for (int trial = 0; trial < 50; ++trial) {
        SqrtExt a = rand_ext(), b = rand_ext(), c = rand_ext();
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
    }
}
