#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mbg/ring.hpp"

using namespace mbg;

TEST_CASE("poly arithmetic") {
    int n = 3;
    Poly a1 = Poly::gen(n, 0);
    Poly one = Poly::constant(n, 1);
    CHECK((a1 - one) * (a1 + one) == Poly::gen(n, 0, 2) - one);
    CHECK((a1 * a1) == Poly::gen(n, 0, 2));
    Poly z = a1 - a1;
    CHECK(z.is_zero());
    CHECK(z.str() == "0");
    CHECK(one.str() == "1");
    CHECK((a1 - one).str() == "-1 + a1");

    // monomial product adds exponents, including negative ones
    Poly m = Poly::monomial({1, -2, 0}, 1);
    CHECK(m * m == Poly::monomial({2, -4, 0}, 1));
    Poly mm = m.mul_monomial({0, 2, 1}, Int(-3));
    CHECK(mm == Poly::monomial({1, 0, 1}, -3));
}

TEST_CASE("aug and star") {
    int n = 3;
    Poly p = Poly::gen(n, 0) * Poly::constant(n, 2) - Poly::gen(n, 1, -1);
    CHECK(p.aug() == Int(1));
    CHECK(p.star() == Poly::gen(n, 0, -1) * Poly::constant(n, 2) - Poly::gen(n, 1));
    CHECK(p.star().star() == p);
    CHECK(Poly::gen1(n, 2).aug() == Int(0));
}

TEST_CASE("unit_monomial") {
    int n = 2;
    auto u = Poly::monomial({3, -1}, 1).unit_monomial();
    REQUIRE(u.has_value());
    CHECK(*u == ExpVec{3, -1});
    CHECK(!(Poly::monomial({1, 0}, -1)).unit_monomial().has_value());
    CHECK(!(Poly::gen(n, 0) + Poly::gen(n, 1)).unit_monomial().has_value());
    CHECK(!Poly::constant(n, 0).unit_monomial().has_value());
    CHECK(Poly::constant(n, 1).unit_monomial().has_value());
}

TEST_CASE("valuation and leading form") {
    int n = 2;
    // 1 - a1^-1 = t1 - t1^2 + ... in t-coordinates, so valuation 1 with
    // leading form t1
    Poly p = Poly::constant(n, 1) - Poly::gen(n, 0, -1);
    CHECK(valuation(p) == 1);
    Form lead = leading_form(p);
    CHECK(lead.deg == 1);
    REQUIRE(lead.c.size() == 1);
    CHECK(lead.c.begin()->first == ExpVec{1, 0});
    CHECK(lead.c.begin()->second == Int(1));

    CHECK(valuation(Poly::constant(n, 0)) == kInf);
    CHECK(valuation(Poly::constant(n, 5)) == 0);
    CHECK(valuation(Poly::gen1(n, 0) * Poly::gen1(n, 1)) == 2);

    // a1*a2^-1 - 1 = (1+t1)(1+t2)^-1 - 1 has valuation 1, leading t1 - t2
    Poly q = Poly::monomial({1, -1}, 1) - Poly::constant(n, 1);
    Form lq = leading_form(q);
    CHECK(lq.deg == 1);
    CHECK(lq.c.at(ExpVec{1, 0}) == Int(1));
    CHECK(lq.c.at(ExpVec{0, 1}) == Int(-1));

    // homogeneous parts of a product of two degree-1 factors
    Poly r = Poly::gen1(n, 0) * (Poly::constant(n, 1) - Poly::gen(n, 1, -1));
    CHECK(homogeneous_part(r, 0).c.empty());
    CHECK(homogeneous_part(r, 1).c.empty());
    CHECK(homogeneous_part(r, 2).c.at(ExpVec{1, 1}) == Int(1));
}

TEST_CASE("omega") {
    int n = 3;
    CHECK(omega(n, {0, 0, 0}) == Poly::constant(n, 1));
    CHECK(omega(n, {2, 0, 1}) == Poly::gen1(n, 0) * Poly::gen1(n, 0) * Poly::gen1(n, 2));
    CHECK(omega(n, {1, 1, 0}).aug() == Int(0));
    CHECK(valuation(omega(n, {1, 2, 3})) == 6);
}

TEST_CASE("binom") {
    CHECK(binom(6, 2) == Int(15));
    CHECK(binom(6, 3) == Int(20));
    CHECK(binom(5, 0) == Int(1));
    CHECK(binom(3, 5) == Int(0));
    CHECK(binom(10, 5) == Int(252));
}

namespace {

// cofactor expansion, independent of the library's elimination-based det
long long det3(const IntMat& m) {
    auto a = [&](int i, int j) { return m.at(i, j); };
    return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
           a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
           a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

}  // namespace

TEST_CASE("integer matrix det") {
    std::mt19937_64 g(17);
    for (int trial = 0; trial < 50; trial++) {
        IntMat m(3);
        for (int i = 0; i < 3; i++)
            for (int j = 0; j < 3; j++) m.at(i, j) = long(g() % 7) - 3;
        CHECK(det(m) == Int(static_cast<long>(det3(m))));
    }
    CHECK(det(IntMat::identity(5)) == Int(1));
}

TEST_CASE("rational inverse") {
    std::mt19937_64 g(23);
    for (int trial = 0; trial < 20; trial++) {
        IntMat m(3);
        for (int i = 0; i < 3; i++)
            for (int j = 0; j < 3; j++) m.at(i, j) = long(g() % 5) - 2;
        if (det(m) == 0) {
            CHECK(!inverse_over_q(m).has_value());
            continue;
        }
        auto inv = inverse_over_q(m);
        REQUIRE(inv.has_value());
        for (int i = 0; i < 3; i++)
            for (int j = 0; j < 3; j++) {
                Rat s(0);
                for (int k = 0; k < 3; k++)
                    s += Rat(static_cast<long>(m.at(i, k))) * inv->at(k, j);
                CHECK(s == Rat(i == j ? 1 : 0));
            }
    }
}

TEST_CASE("substitute") {
    int n = 2;
    IntMat swap(2);
    swap.at(0, 1) = 1;
    swap.at(1, 0) = 1;
    CHECK(substitute(Poly::gen(n, 0), swap) == Poly::gen(n, 1));
    CHECK(substitute(Poly::monomial({2, -1}, 1), swap) == Poly::monomial({-1, 2}, 1));

    IntMat sq(2);
    sq.at(0, 0) = 2;
    sq.at(1, 1) = 1;
    CHECK(substitute(Poly::gen(n, 0), sq) == Poly::gen(n, 0, 2));

    // ring homomorphism on a sum
    IntMat e(2);
    e.at(0, 0) = 1;
    e.at(0, 1) = 1;
    e.at(1, 1) = 1;
    // under e the image of a2 is a1*a2 while a1 is fixed
    Poly p = Poly::gen1(n, 0) * Poly::gen1(n, 1) + Poly::gen(n, 1, -2);
    CHECK(substitute(p, e) ==
          Poly::gen1(n, 0) * (Poly::monomial({1, 1}, 1) - Poly::constant(n, 1)) +
              Poly::monomial({-2, -2}, 1));
}

TEST_CASE("poly matrix det and adjugate") {
    int n = 3;
    PolyMat m(3);
    m.at(0, 0) = Poly::gen(n, 0);
    m.at(0, 1) = Poly::gen1(n, 1);
    m.at(1, 1) = Poly::gen(n, 1, -1);
    m.at(1, 2) = Poly::constant(n, 2);
    m.at(2, 0) = Poly::gen1(n, 2);
    m.at(2, 2) = Poly::constant(n, 1);
    Poly d = det(m);
    PolyMat adj = adjugate(m);
    PolyMat prod = mat_mul(adj, m);
    for (int i = 0; i < 3; i++)
        for (int j = 0; j < 3; j++) {
            if (i == j)
                CHECK(prod.at(i, j) == d);
            else
                CHECK(prod.at(i, j).is_zero());
        }
    PolyMat prod2 = mat_mul(m, adj);
    for (int i = 0; i < 3; i++)
        for (int j = 0; j < 3; j++) {
            if (i == j)
                CHECK(prod2.at(i, j) == d);
            else
                CHECK(prod2.at(i, j).is_zero());
        }

    // triangular determinant is the product of the diagonal
    PolyMat t(3);
    t.at(0, 0) = Poly::gen(n, 0);
    t.at(1, 1) = Poly::gen(n, 1, -2);
    t.at(2, 2) = Poly::constant(n, 1) + Poly::gen1(n, 0);
    t.at(0, 2) = omega(n, {1, 1, 0});
    CHECK(det(t) == Poly::gen(n, 0) * Poly::gen(n, 1, -2) * (Poly::constant(n, 1) + Poly::gen1(n, 0)));
}

TEST_CASE("str format") {
    int n = 4;
    Poly p = Poly::monomial({1, 0, -2, 0}, 3) - Poly::gen(n, 3) +
             Poly::constant(n, 1);
    // terms ordered by exponent vector, coefficient sign folded into the join
    CHECK(p.str() == "1 - a4 + 3*a1*a3^-2");
    CHECK((Poly::constant(n, -2) * Poly::gen(n, 0)).str() == "-2*a1");
}
