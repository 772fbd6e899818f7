#include <doctest.h>

#include "fdrc/field.hpp"

using namespace fdrc;

TEST_CASE("canonical moduli match the standard tables") {
    CHECK(Field::gf(2, 2)->modulus() == std::vector<felt>{1, 1, 1});     // x^2+x+1
    CHECK(Field::gf(2, 3)->modulus() == std::vector<felt>{1, 1, 0, 1});  // x^3+x+1
    CHECK(Field::gf(2, 4)->modulus() == std::vector<felt>{1, 1, 0, 0, 1});
    CHECK(Field::gf(3, 2)->modulus() == std::vector<felt>{1, 0, 1});     // x^2+1
    CHECK(Field::gf(5, 1)->modulus() == std::vector<felt>{0, 1});        // x
}

TEST_CASE("GF(4) arithmetic") {
    auto f = Field::gf(2, 2);
    CHECK(f->size() == 4);
    CHECK(f->alpha() == 2);
    CHECK(f->mul(2, 2) == 3);  // alpha^2 = alpha + 1
    CHECK(f->add(2, 3) == 1);
    CHECK(f->mul(3, 3) == 2);
    CHECK(f->inv(2) == 3);
}

TEST_CASE("GF(9) arithmetic") {
    auto f = Field::gf(3, 2);
    CHECK(f->characteristic() == 3);
    CHECK(f->add(1, 2) == 0);
    CHECK(f->neg(1) == 2);
    CHECK(f->alpha() == 3);
    CHECK(f->mul(3, 3) == 2);  // alpha^2 = -1
}

static void check_axioms(const FieldPtr& f) {
    const felt n = felt(f->size());
    for (felt a = 0; a < n; ++a) {
        CHECK(f->add(a, 0) == a);
        CHECK(f->mul(a, 1) == a);
        CHECK(f->add(a, f->neg(a)) == 0);
        if (a != 0) CHECK(f->mul(a, f->inv(a)) == 1);
        for (felt b = 0; b < n; ++b) {
            CHECK(f->add(a, b) == f->add(b, a));
            CHECK(f->mul(a, b) == f->mul(b, a));
        }
    }
    for (felt a = 0; a < n; ++a)
        for (felt b = 0; b < n; ++b)
            for (felt c = 0; c < n; ++c) {
                CHECK(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
                CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
                CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
            }
}

TEST_CASE("field axioms hold exhaustively on small fields") {
    check_axioms(Field::gf(2, 3));
    check_axioms(Field::gf(3, 2));
    check_axioms(Field::gf(2, 4));
    check_axioms(Field::gf(7, 1));
    check_axioms(Field::tower(2, 2, 2));  // GF((2^2)^2), size 16
}

TEST_CASE("large fields bypass the tables and stay consistent") {
    auto f = Field::gf(2, 11);  // size 2048, above the table cutoff
    const felt a = f->element(1234), b = f->element(567), c = f->element(1999);
    CHECK(f->add(a, b) == (a ^ b));
    CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
    CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
    // char 2: squaring is additive
    CHECK(f->pow(f->add(a, b), 2) == f->add(f->pow(a, 2), f->pow(b, 2)));
    CHECK(f->mul(a, f->inv(a)) == 1);
    CHECK(f->pow(a, f->size() - 1) == 1);
}

TEST_CASE("pow conventions") {
    auto f = Field::gf(2, 3);
    CHECK(f->pow(0, 0) == 1);
    CHECK(f->pow(0, 5) == 0);
    CHECK(f->pow(3, 0) == 1);
    for (felt a = 1; a < 8; ++a) CHECK(f->pow(a, 7) == 1);
}

TEST_CASE("frobenius powers") {
    auto f = Field::tower(2, 1, 3);  // GF(2^3) as an extension of GF(2)
    const felt a = f->alpha();
    CHECK(f->frobenius(a, 1) == f->mul(a, a));
    CHECK(f->frobenius(a, 3) == a);   // order divides the degree
    CHECK(f->frobenius(a, 4) == f->frobenius(a, 1));
    for (felt x = 0; x < 8; ++x) {
        CHECK(f->frobenius(x, 0) == x);
        // additive and multiplicative
        for (felt y = 0; y < 8; ++y) {
            CHECK(f->frobenius(f->add(x, y), 1) == f->add(f->frobenius(x, 1), f->frobenius(y, 1)));
            CHECK(f->frobenius(f->mul(x, y), 1) == f->mul(f->frobenius(x, 1), f->frobenius(y, 1)));
        }
    }
    CHECK_THROWS_AS((void)Field::gf(7, 1)->frobenius(3, 1), PreconditionError);
    CHECK_THROWS_AS((void)Field::gf(2, 3)->frobenius(3, 1), PreconditionError);
}

TEST_CASE("degree one extensions behave like their base") {
    auto f = Field::extend(Field::gf(2, 2), 1);
    REQUIRE(f->is_extension());
    CHECK(f->size() == 4);
    for (felt a = 0; a < 4; ++a) {
        CHECK(f->frobenius(a, 1) == a);
        for (felt b = 0; b < 4; ++b) CHECK(f->mul(a, b) == Field::gf(2, 2)->mul(a, b));
    }
    auto basis = Basis::polynomial(f);
    CHECK(basis.elements() == std::vector<felt>{1});
    CHECK(basis.coordinates(3) == std::vector<felt>{3});
}

TEST_CASE("towers keep their structure") {
    auto t = Field::tower(2, 2, 3);  // GF((2^2)^3)
    CHECK(t->size() == 64);
    CHECK(t->coeff_size() == 4);
    CHECK(t->degree() == 3);
    CHECK(t->characteristic() == 2);
    REQUIRE(t->is_extension());
    CHECK(t->base()->size() == 4);
    CHECK_FALSE(t->base()->is_extension());
    // frobenius on the tower is x -> x^4
    const felt a = t->element(37);
    CHECK(t->frobenius(a, 1) == t->pow(a, 4));
    check_axioms(t);

    auto flat = Field::gf(2, 6);
    CHECK_FALSE(t->same(*flat));
    CHECK(t->same(*Field::tower(2, 2, 3)));
}

TEST_CASE("tower with m=1 is the base field") {
    auto t = Field::tower(2, 3, 1);
    CHECK(t->size() == 8);
    CHECK_FALSE(t->is_extension());
}

TEST_CASE("explicit moduli are validated") {
    auto f = Field::gf(2, 3, {1, 0, 1, 1});  // x^3 + x^2 + 1, also irreducible
    CHECK(f->size() == 8);
    CHECK(f->mul(f->alpha(), f->mul(f->alpha(), f->alpha())) == 5);  // alpha^3 = alpha^2 + 1
    CHECK_THROWS_AS(Field::gf(2, 3, {1, 1, 1, 1}), PreconditionError);  // reducible
    CHECK_THROWS_AS(Field::gf(2, 3, {1, 1, 1}), PreconditionError);     // wrong degree
    CHECK_THROWS_AS(Field::gf(2, 3, {1, 1, 0, 2}), PreconditionError);  // coeff out of range
    CHECK_THROWS_AS(Field::gf(2, 3, {1, 1, 1, 0}), PreconditionError);  // not monic
    CHECK_THROWS_AS(Field::gf(4, 1), PreconditionError);                // 4 is not prime
    CHECK_THROWS_AS(Field::gf(3, 0), PreconditionError);
}

TEST_CASE("coefficient round trip") {
    auto f = Field::gf(3, 3);
    for (felt a : {felt{0}, felt{1}, felt{13}, felt{26}}) {
        auto c = f->coeffs(a);
        REQUIRE(c.size() == 3);
        CHECK(f->from_coeffs(c) == a);
    }
    CHECK(f->coeffs(5) == std::vector<felt>{2, 1, 0});
    CHECK_THROWS_AS((void)f->from_coeffs(std::vector<felt>{1, 1, 1, 1}), PreconditionError);
    CHECK_THROWS_AS((void)f->from_coeffs(std::vector<felt>{3}), PreconditionError);
}

TEST_CASE("descriptors round trip") {
    for (auto make : {Field::tower(2, 3, 1), Field::tower(2, 2, 3), Field::tower(3, 1, 4),
                      Field::gf(2, 3, {1, 0, 1, 1}), Field::tower(5, 1, 2)}) {
        auto back = Field::from_descriptor(make->descriptor());
        CHECK(back->same(*make));
        CHECK(back->descriptor() == make->descriptor());
    }
    CHECK(Field::gf(2, 3)->descriptor() == "GF(2^3)/mod=11");
    CHECK(Field::gf(2, 2)->descriptor() == "GF(2^2)/mod=7");
    CHECK(Field::gf(3, 2)->descriptor() == "GF(3^2)/mod=10");
    CHECK(Field::from_descriptor(" GF(2^3)/mod=11 ")->size() == 8);

    CHECK_THROWS_AS(Field::from_descriptor("garbage"), ParseError);
    CHECK_THROWS_AS(Field::from_descriptor("GF(2^3)"), ParseError);
    CHECK_THROWS_AS(Field::from_descriptor("GF(2^3)/mod=12"), ParseError);  // reducible
    CHECK_THROWS_AS(Field::from_descriptor("GF(2^3)/mod=5"), ParseError);   // degree 2 only
    CHECK_THROWS_AS(Field::from_descriptor("GF(4^2)/mod=21"), ParseError);  // 4 not prime
    CHECK_THROWS_AS(Field::from_descriptor("GF(2^3)/mod=11junk"), ParseError);
}

TEST_CASE("element access is bounds checked") {
    auto f = Field::gf(2, 2);
    CHECK(f->element(3) == 3);
    CHECK_THROWS_AS((void)f->element(4), PreconditionError);
    CHECK_THROWS_AS((void)f->inv(0), PreconditionError);
}

TEST_CASE("scalars carry their field") {
    auto f = Field::gf(2, 3);
    Scalar a(f, 3), b(f, 5);
    CHECK((a + b).value() == 6);
    CHECK((a * a.inverse()).value() == 1);
    CHECK((-a).value() == 3);
    CHECK(a != b);
    CHECK((a - a).value() == 0);
    CHECK((a / a).value() == 1);
    Scalar c(Field::gf(2, 2), 1);
    CHECK_THROWS_AS((void)(a + c), PreconditionError);
    CHECK_THROWS_AS(Scalar(f, 8), PreconditionError);
}

TEST_CASE("polynomial basis") {
    auto f = Field::tower(2, 1, 3);
    auto b = Basis::polynomial(f);
    CHECK(b.elements() == std::vector<felt>{1, 2, 4});
    CHECK(b.coordinates(6) == std::vector<felt>{0, 1, 1});
    for (felt a = 0; a < 8; ++a) CHECK(b.combine(b.coordinates(a)) == a);
    CHECK_THROWS_AS(Basis::polynomial(Field::gf(7, 1)), PreconditionError);
}

TEST_CASE("custom basis") {
    auto f = Field::tower(2, 1, 3);
    auto b = Basis::from_elements(f, {1, 2, 5});  // 1, alpha, alpha^2+1
    CHECK(b.coordinates(4) == std::vector<felt>{1, 0, 1});
    for (felt a = 0; a < 8; ++a) CHECK(b.combine(b.coordinates(a)) == a);
    CHECK_THROWS_AS(Basis::from_elements(f, {1, 2, 3}), PreconditionError);  // dependent
    CHECK_THROWS_AS(Basis::from_elements(f, {1, 2}), PreconditionError);     // wrong count
}

TEST_CASE("basis over a tower base field") {
    auto t = Field::tower(2, 2, 2);
    auto b = Basis::polynomial(t);
    REQUIRE(b.elements().size() == 2);
    for (felt a = 0; a < 16; ++a) {
        auto coords = b.coordinates(a);
        for (felt c : coords) CHECK(c < 4);
        CHECK(b.combine(coords) == a);
    }
}
