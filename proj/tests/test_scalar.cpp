#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hopfyb/scalar.hpp"

using namespace hopfyb;

TEST_CASE("parse constants and the parameter") {
    CHECK(parse_scalar("-3/2").str() == "-3/2");
    CHECK(parse_scalar("a").str() == "a");
    CHECK(parse_scalar("0").is_zero());
    CHECK(parse_scalar("  1 ").is_one());
    CHECK(parse_scalar("7").str() == "7");
    CHECK(parse_scalar("2/4").str() == "1/2");
}

TEST_CASE("parse reduces by polynomial gcd") {
    // oracle: (2a+2)/(a+1) agrees with the constant 2 at three rational points
    Scalar s = parse_scalar("(2*a+2)/(a+1)");
    Scalar two(2);
    for (long v : {0L, 2L, 5L}) {
        CHECK(s.eval(mpq_class(v)) == two.eval(mpq_class(v)));
    }
    CHECK(s == two);
    CHECK(s.str() == "2");
}

TEST_CASE("print then parse is the identity") {
    const char* inputs[] = {"-3/2",
                            "a",
                            "(2*a+2)/(a+1)",
                            "a^2-1",
                            "(a^2-1)/(a^3+2*a+7)",
                            "-a",
                            "1/2*a^2 - 3",
                            "(1-a)/(a+1)",
                            "0",
                            "5/(a-1)"};
    for (const char* in : inputs) {
        Scalar s = parse_scalar(in);
        CHECK(parse_scalar(s.str()) == s);
        CHECK(parse_scalar(s.str()).str() == s.str());
    }
}

TEST_CASE("whitespace is ignored everywhere") {
    CHECK(parse_scalar(" 3 / 4 ") == parse_scalar("3/4"));
    CHECK(parse_scalar("2 * a ^ 2 - 1") == parse_scalar("2*a^2-1"));
    CHECK(parse_scalar("( a + 1 ) / ( a - 1 )") == parse_scalar("(a+1)/(a-1)"));
    // a '/' with a non-integer numerator must introduce a parenthesized
    // denominator, never a bare integer
    CHECK_THROWS_AS(parse_scalar("a/4"), parse_error);
}

TEST_CASE("syntax errors carry byte offsets") {
    CHECK_THROWS_AS(parse_scalar("a +"), parse_error);
    CHECK_THROWS_AS(parse_scalar("(a"), parse_error);
    CHECK_THROWS_AS(parse_scalar("b"), parse_error);
    CHECK_THROWS_AS(parse_scalar("2**3"), parse_error);
    try {
        parse_scalar("a + b");
    } catch (const parse_error& e) {
        CHECK(e.offset == 4);
    }
    CHECK_THROWS_AS(parse_scalar("1/0"), zero_division_error);
    CHECK_THROWS_AS(parse_scalar("1/(a-a)"), zero_division_error);
}

TEST_CASE("field operations") {
    Scalar half = parse_scalar("1/2");
    CHECK((half + half).is_one());
    Scalar a = Scalar::parameter();
    CHECK((a * a).str() == "a^2");
    Scalar am1 = parse_scalar("a-1");
    CHECK(am1.inverse().str() == "1/(a-1)");
    CHECK((am1 * am1.inverse()).is_one());
    CHECK_THROWS_AS(Scalar().inverse(), zero_division_error);
    CHECK_THROWS_AS(a / Scalar(), zero_division_error);
}

TEST_CASE("evaluation") {
    CHECK(parse_scalar("a+1").eval(2) == 3);
    CHECK(parse_scalar("(a^2-1)/(a-1)").eval(5) == 6);  // reduces first
    CHECK_THROWS_AS(parse_scalar("1/(a-1)").eval(1), pole_error);
    CHECK(parse_scalar("(a+1)/(a-1)").eval(mpq_class(1, 2)) == mpq_class(-3));
}

namespace {

Scalar random_scalar(std::mt19937& rng) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> deg(0, 2);
    auto poly = [&](bool nonzero) {
        for (;;) {
            std::vector<mpz_class> c;
            int d = deg(rng);
            for (int i = 0; i <= d; ++i) c.emplace_back(coeff(rng));
            Poly p{std::vector<mpz_class>(c)};
            if (!nonzero || !p.is_zero()) return p;
        }
    };
    return Scalar::make(poly(false), poly(true));
}

}  // namespace

TEST_CASE("field axioms on random values") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 200; ++trial) {
        Scalar x = random_scalar(rng), y = random_scalar(rng), z = random_scalar(rng);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x + y == y + x);
        CHECK(x * y == y * x);
        CHECK(x * (y + z) == x * y + x * z);
        CHECK((x - x).is_zero());
        if (!x.is_zero()) {
            CHECK((x * x.inverse()).is_one());
            CHECK(x.inverse().inverse() == x);
        }
        // symbolic identity implies identity at any non-pole point
        Scalar lhs = x * (y + z), rhs = x * y + x * z;
        for (long v : {0L, 1L, 3L}) {
            try {
                mpq_class le = lhs.eval(v), re = rhs.eval(v);
                CHECK(le == re);
            } catch (const pole_error&) {
            }
        }
    }
}

TEST_CASE("canonical form invariants") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        Scalar x = random_scalar(rng);
        if (x.is_zero()) {
            CHECK(x.den().is_one());
            continue;
        }
        CHECK(!x.den().is_zero());
        CHECK(x.den().lc() > 0);
        CHECK(poly_gcd(x.num(), x.den()).degree() == 0);
        mpz_class cg;
        mpz_class cn = x.num().content(), cd = x.den().content();
        mpz_gcd(cg.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
        CHECK(cg == 1);
    }
}

TEST_CASE("substitution instantiates the parameter") {
    Scalar f = parse_scalar("(a^2-1)/(a+2)");
    CHECK(f.substitute(Scalar(3)) == parse_scalar("8/5"));
    CHECK(Scalar::parameter().substitute(parse_scalar("1/2")) == parse_scalar("1/2"));
}
