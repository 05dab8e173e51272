#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "homeo/errors.hpp"
#include "homeo/parse.hpp"
#include "support/generators.hpp"

using namespace homeo;

TEST_CASE("atoms parse to the expected trees") {
    CHECK(structural_equal(parse_expr("id"), Homeo::identity()));
    CHECK(structural_equal(parse_expr("conj"), Homeo::conjugation()));
    CHECK(structural_equal(parse_expr("translate(1+2i)"),
                           Homeo::translation(Complex{1.0, 2.0})));
    CHECK(structural_equal(parse_expr("translate(-0.5-0.25i)"),
                           Homeo::translation(Complex{-0.5, -0.25})));
    CHECK(structural_equal(parse_expr("rotate(1.5)"), Homeo::rotation(1.5)));
    CHECK(structural_equal(parse_expr("scale(2)"), Homeo::scaling(2.0)));
    CHECK(structural_equal(parse_expr("scale(2)^-1 . (id)"),
                           compose(inverse(Homeo::scaling(2.0)), Homeo::identity())));
}

TEST_CASE("composition applies the right operand first") {
    const Homeo h = parse_expr("translate(1) . conj");
    CHECK(structural_equal(h, compose(Homeo::translation(Complex{1.0, 0.0}),
                                      Homeo::conjugation())));
    CHECK(h.eval(Complex{0.0, 1.0}) == Complex{1.0, -1.0});

    // Chains fold left: a . b . c == (a . b) . c.
    const Homeo chain = parse_expr("scale(2) . rotate(1) . conj");
    CHECK(structural_equal(chain, compose(compose(Homeo::scaling(2.0), Homeo::rotation(1.0)),
                                          Homeo::conjugation())));
}

TEST_CASE("bump atoms carry their parameters") {
    const Homeo direct = parse_expr("bump(center=0.1+0.05i,rho=0.2,delta=0.04,eta=0.08)");
    const Homeo expected = cell_bump(
        make_cell(Homeo::identity(), Complex{0.1, 0.05}, 0.2, 0.08), 0.04);
    CHECK(structural_equal(direct, expected));

    const Homeo lifted = parse_expr("planebump(center=0.1+0.05i,rho=0.2,delta=0.04,eta=0.08)");
    CHECK(structural_equal(lifted, plane_from_disk(DiskMap::radial_bump(Complex{0.1, 0.05}, 0.2,
                                                                        0.04, 0.08))));
}

TEST_CASE("whitespace is insignificant between tokens") {
    const Homeo a = parse_expr("translate(1+2i).conj");
    const Homeo b = parse_expr("  translate( 1 + 2i )  .  conj ");
    CHECK(structural_equal(a, b));
    const Homeo c = parse_expr("bump( center = 0.1+0.05i , rho = 0.2 , delta = 0 , eta = 0.08 )");
    CHECK(structural_equal(c, parse_expr("bump(center=0.1+0.05i,rho=0.2,delta=0,eta=0.08)")));
}

TEST_CASE("print and reparse reproduce the tree") {
    gen::Rng rng(20240607);
    for (int trial = 0; trial < 300; ++trial) {
        const Homeo h = gen::parseable(rng, 3);
        const std::string text = print_expr(h);
        CAPTURE(text);
        const Homeo back = parse_expr(text);
        CHECK(structural_equal(h, back));
        CHECK(print_expr(back) == text);
    }
}

TEST_CASE("printed forms read like the grammar") {
    CHECK(print_expr(Homeo::identity()) == "id");
    CHECK(print_expr(Homeo::translation(Complex{1.0, 2.0})) == "translate(1+2i)");
    CHECK(print_expr(Homeo::translation(Complex{0.0, -1.0})) == "translate(0-1i)");
    CHECK(print_expr(inverse(Homeo::scaling(2.0))) == "scale(2)^-1");
    CHECK(print_expr(compose(Homeo::scaling(2.0), Homeo::conjugation())) == "scale(2) . conj");
    CHECK(print_expr(inverse(compose(Homeo::scaling(2.0), Homeo::conjugation()))) ==
          "(scale(2) . conj)^-1");
    CHECK(print_expr(inverse(inverse(Homeo::conjugation()))) == "(conj^-1)^-1");
}

TEST_CASE("syntax errors carry byte offsets") {
    try {
        parse_expr("translate(");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 10);
        CHECK(e.expected() == "number");
    }

    try {
        parse_expr("id id");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 3);
    }

    try {
        parse_expr("scale(2)^-2");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.expected() == "'-1'");
    }

    CHECK_THROWS_AS(parse_expr(""), ParseError);
    CHECK_THROWS_AS(parse_expr("spin(1)"), ParseError);
    CHECK_THROWS_AS(parse_expr("translate(1+2j)"), ParseError);
    CHECK_THROWS_AS(parse_expr("(id"), ParseError);
}

TEST_CASE("domain errors surface from construction") {
    CHECK_THROWS_AS(parse_expr("scale(0)"), DomainError);
    CHECK_THROWS_AS(parse_expr("scale(-1)"), DomainError);
    // 0.9 + 0.2 + 2 * 0.05 >= 1: the bump would leave the unit disk.
    CHECK_THROWS_AS(parse_expr("bump(center=0.9,rho=0.2,delta=0.01,eta=0.05)"), DomainError);
    CHECK_THROWS_AS(parse_expr("bump(center=0,rho=0.2,delta=0.2,eta=0.1)"), DomainError);
}

TEST_CASE("numbers print in shortest round-trip form") {
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(2.0) == "2");
    CHECK(format_complex(Complex{1.0, 2.0}) == "1+2i");
    CHECK(format_complex(Complex{1.0, -2.0}) == "1-2i");
    CHECK(format_complex(Complex{1.5, 0.0}) == "1.5");
    CHECK(format_complex(Complex{0.0, 1.0}) == "0+1i");
}
