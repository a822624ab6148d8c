#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mbg/expr.hpp"
#include "mbg/magnus.hpp"

using namespace mbg;

TEST_CASE("parse elements") {
    int n = 4;
    Elt x1 = elt_gen(n, 0);
    Elt x2 = elt_gen(n, 1);
    Elt x3 = elt_gen(n, 2);
    CHECK(parse_element("1", n) == elt_one(n));
    CHECK(parse_element("x1", n) == x1);
    CHECK(parse_element("x1 * x2", n) == mul(x1, x2));
    CHECK(parse_element("x1^-2", n) == pow(x1, -2));
    CHECK(parse_element("(x1*x2)^2", n) == pow(mul(x1, x2), 2));
    CHECK(parse_element("[x1,x2]", n) == comm(x1, x2));
    CHECK(parse_element("[x1,x2,x3]", n) == left_normed({x1, x2, x3}));
    CHECK(parse_element("[x2, 3 x1]", n) == left_normed({x2, x1, x1, x1}));
    CHECK(parse_element("[x1, x2, 2 x3, x1]", n) ==
          left_normed({x1, x2, x3, x3, x1}));
    CHECK(parse_element("x1*[x1,x2]", n) ==
          mul(x1, comm(x1, x2)));
    CHECK(parse_element("[x1,x2]^((a3-1))", n) ==
          module_pow(comm(x1, x2), Poly::gen1(n, 2)));
    CHECK(parse_element("[x1,x2]^(((a1-1)*(a4-1)))", n) ==
          module_pow(comm(x1, x2), Poly::gen1(n, 0) * Poly::gen1(n, 3)));
    CHECK(parse_element("[x1,x2]^((2))", n) == pow(comm(x1, x2), 2));
    CHECK(parse_element("[x1,x2]^((a3))", n) ==
          conj(comm(x1, x2), x3));
    CHECK(parse_element("[[x1,x2],[x3,x4]]", n) ==
          comm(comm(x1, x2), comm(x3, elt_gen(n, 3))));
}

TEST_CASE("parse scalars") {
    int n = 4;
    CHECK(parse_scalar("1", n) == Poly::constant(n, 1));
    CHECK(parse_scalar("0", n) == Poly::constant(n, 0));
    CHECK(parse_scalar("a1 - 1", n) == Poly::gen1(n, 0));
    CHECK(parse_scalar("a2^-1", n) == Poly::gen(n, 1, -1));
    CHECK(parse_scalar("-a1", n) == Poly::constant(n, -1) * Poly::gen(n, 0));
    CHECK(parse_scalar("2*a1*a3^2 - a4 + 1", n) ==
          Poly::monomial({1, 0, 2, 0}, 2) - Poly::gen(n, 3) +
              Poly::constant(n, 1));
    CHECK(parse_scalar("(a1-1)^3", n) == omega(n, {3, 0, 0, 0}));
    CHECK(parse_scalar("(a1*a2^-1)^-2", n) == Poly::monomial({-2, 2, 0, 0}, 1));
}

TEST_CASE("parse errors carry positions") {
    int n = 4;
    CHECK_THROWS_AS(parse_element("x5", n), parse_error);
    CHECK_THROWS_AS(parse_element("x0", n), parse_error);
    CHECK_THROWS_AS(parse_element("x1^(a1-1)", n), parse_error);
    CHECK_THROWS_AS(parse_element("x1^((a1-1))", n), parse_error);  // not derived
    CHECK_THROWS_AS(parse_element("[x1,x2", n), parse_error);
    CHECK_THROWS_AS(parse_element("x1 x2", n), parse_error);
    CHECK_THROWS_AS(parse_element("", n), parse_error);
    CHECK_THROWS_AS(parse_element("[x1,x2]^((a1^-1 + 1))^-1 )", n), parse_error);
    CHECK_THROWS_AS(parse_scalar("a1 +", n), parse_error);
    CHECK_THROWS_AS(parse_scalar("x1", n), parse_error);
    try {
        parse_element("x1 * [x2, y]", 4);
        FAIL("expected a parse error");
    } catch (const parse_error& e) {
        CHECK(e.line == 1);
        CHECK(e.col == 11);
    }
}

TEST_CASE("negative scalar powers need monomials") {
    int n = 3;
    CHECK(parse_scalar("(a1*a2)^-1", n) == Poly::monomial({-1, -1, 0}, 1));
    CHECK(parse_scalar("(-a2)^-2", n) == Poly::monomial({0, -2, 0}, 1));
    CHECK_THROWS_AS(parse_scalar("(a1+1)^-1", n), parse_error);
}

TEST_CASE("print canonical forms") {
    int n = 4;
    CHECK(print_elt(elt_one(n)) == "1");
    CHECK(print_elt(elt_gen(n, 0)) == "x1");
    CHECK(print_elt(pow(elt_gen(n, 2), -3)) == "x3^-3");
    CHECK(print_elt(comm(elt_gen(n, 0), elt_gen(n, 1))) == "[x1,x2]");
    CHECK(print_elt(mul(elt_gen(n, 0), comm(elt_gen(n, 0), elt_gen(n, 1)))) ==
          "x1*[x1,x2]");
    CHECK(print_elt(mul(elt_gen(n, 1), elt_gen(n, 0))) != "x1*x2");
}

TEST_CASE("round trip") {
    std::mt19937_64 g(31);
    for (int n : {2, 3, 4}) {
        for (int trial = 0; trial < 120; trial++) {
            Elt w = elt_one(n);
            int len = 1 + int(g() % 7);
            for (int t = 0; t < len; t++)
                w = mul(w, elt_gen(n, int(g() % (unsigned long long)(n)), (g() & 1) ? 1 : -1));
            if (g() % 3 == 0 && n >= 2) {
                ExpVec r = ev_zero(n);
                r[g() % n] = int(g() % 2);
                w = mul(w, module_pow(comm(elt_gen(n, 0), elt_gen(n, 1)), omega(n, r)));
            }
            std::string s = print_elt(w);
            CHECK(parse_element(s, n) == w);
        }
        for (int trial = 0; trial < 120; trial++) {
            std::vector<Term> ts;
            int k = int(g() % 4);
            for (int t = 0; t < k; t++) {
                ExpVec e = ev_zero(n);
                for (int i = 0; i < n; i++) e[size_t(i)] = int(g() % 5) - 2;
                ts.push_back({e, Int(static_cast<long>(g() % 9)) - 4});
            }
            Poly p = Poly::from_terms(std::move(ts));
            std::string s = print_scalar(p);
            CHECK(parse_scalar(s, n) == p);
        }
    }
}
