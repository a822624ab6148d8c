#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mbg/basis.hpp"
#include "mbg/graded.hpp"

using namespace mbg;

TEST_CASE("basic commutator predicate") {
    CHECK(is_basic({1, 0}));
    CHECK(!is_basic({0, 1}));
    CHECK(!is_basic({1, 1}));
    CHECK(is_basic({2, 0, 1}));
    CHECK(!is_basic({2, 1, 0}));
    CHECK(is_basic({1, 0, 1, 2}));
    CHECK(!is_basic({1, 0, 2, 1}));
    CHECK(is_basic({3, 2}));
    CHECK(!is_basic({3, 3}));
    CHECK(!is_basic({3, 4}));
}

TEST_CASE("basis counts match the rank formula") {
    for (int n = 2; n <= 5; n++)
        for (int c = 2; c <= 6; c++) {
            auto bas = basis(n, c);
            CHECK(Int(static_cast<long>(bas.size())) == rank_gr(n, c));
            for (const auto& b : bas) CHECK(is_basic(b.idx));
            CHECK(std::is_sorted(bas.begin(), bas.end()));
        }
    CHECK(basis(4, 3).size() == 20);
    CHECK(basis(2, 2).size() == 1);
    CHECK(basis(3, 4).size() == 15);
}

TEST_CASE("layer rank formulas") {
    CHECK(rank_gr(4, 3) == Int(20));
    CHECK(rank_layer_total(4, 3) == Int(80));
    CHECK(rank_layer_complement(4, 3) == Int(10));
    CHECK(rank_layer_aut(4, 3) == Int(70));
    CHECK(rank_layer_aut(4, 2) == Int(24));
    CHECK(rank_layer_total(4, 4) == Int(180));
    CHECK(rank_layer_complement(4, 4) == Int(20));
    CHECK(rank_layer_aut(4, 4) == Int(160));
    for (int n = 2; n <= 6; n++)
        for (int c = 3; c <= 7; c++)
            CHECK(rank_layer_aut(n, c) + rank_layer_complement(n, c) == rank_layer_total(n, c));
    CHECK_THROWS_AS(rank_layer_complement(4, 2), domain_error);
}

TEST_CASE("lie normal form oracles") {
    int n = 3;
    GradedVector v = lie_nf(n, 2, {1, 0});
    CHECK(v.coef == std::map<std::vector<int>, Rat>{{{1, 0}, Rat(1)}});
    CHECK(lie_nf(n, 2, {0, 1}).coef == std::map<std::vector<int>, Rat>{{{1, 0}, Rat(-1)}});
    CHECK(lie_nf(n, 2, {1, 1}).is_zero());
    CHECK(lie_nf(n, 3, {1, 1, 0}).is_zero());

    // already basic stays put
    CHECK(lie_nf(n, 3, {2, 0, 1}).coef == std::map<std::vector<int>, Rat>{{{2, 0, 1}, Rat(1)}});

    // [x3,x2,x1] = [x3,x1,x2] - [x2,x1,x3]
    auto j = lie_nf(n, 3, {2, 1, 0}).coef;
    REQUIRE(j.size() == 2);
    CHECK(j.at({2, 0, 1}) == Rat(1));
    CHECK(j.at({1, 0, 2}) == Rat(-1));

    // appended entries commute: [v, a, b] = [v, b, a] for derived v
    CHECK(lie_nf(n, 4, {2, 1, 0, 2}) == lie_nf(n, 4, {2, 1, 2, 0}));

    // head swap is antisymmetric
    CHECK(gv_add(lie_nf(n, 3, {0, 2, 1}), lie_nf(n, 3, {2, 0, 1})).is_zero());
}

TEST_CASE("coordinates of basis elements") {
    for (int n : {3, 4})
        for (int c : {2, 3, 4}) {
            for (const auto& b : basis(n, c)) {
                GradedVector v = coordinates(to_elt(n, b), c);
                CHECK(v.coef == std::map<std::vector<int>, Rat>{{b.idx, Rat(1)}});
            }
        }
}

TEST_CASE("coordinates agree with lie_nf on group words") {
    int n = 3;
    Elt w = left_normed({elt_gen(n, 2), elt_gen(n, 1), elt_gen(n, 0)});
    CHECK(coordinates(w, 3) == lie_nf(n, 3, {2, 1, 0}));
    // module action by a_k - 1 appends an entry
    Elt v = comm(elt_gen(n, 2), elt_gen(n, 0));
    CHECK(coordinates(module_pow(v, Poly::gen1(n, 1)), 3) == lie_nf(n, 3, {2, 0, 1}));
    // coordinates are additive on products of deep elements
    Elt u1 = left_normed({elt_gen(n, 1), elt_gen(n, 0), elt_gen(n, 2)});
    Elt u2 = left_normed({elt_gen(n, 2), elt_gen(n, 1), elt_gen(n, 1)});
    CHECK(coordinates(mul(u1, u2), 3) == gv_add(coordinates(u1, 3), coordinates(u2, 3)));
    CHECK(coordinates(inv(u1), 3) == gv_scale(Rat(-1), coordinates(u1, 3)));
    // anything of depth > c has zero class
    CHECK(coordinates(left_normed({elt_gen(n, 1), elt_gen(n, 0), elt_gen(n, 2), elt_gen(n, 0)}), 3)
              .is_zero());
}

TEST_CASE("integrality") {
    int n = 3;
    CHECK(gv_integral(lie_nf(n, 3, {2, 1, 0})));
    GradedVector h = gv_scale(Rat(1, 2), lie_nf(n, 2, {1, 0}));
    CHECK(!gv_integral(h));
}

TEST_CASE("gl action on graded layers") {
    int n = 3;
    RatMat swap01(n);
    swap01.at(0, 1) = Rat(1);
    swap01.at(1, 0) = Rat(1);
    swap01.at(2, 2) = Rat(1);
    // swapping x1,x2 sends [x2,x1] to [x1,x2] = -[x2,x1]
    CHECK(gl_act(swap01, lie_nf(n, 2, {1, 0})) ==
          gv_scale(Rat(-1), lie_nf(n, 2, {1, 0})));

    RatMat neg(n);
    neg.at(0, 0) = Rat(-1);
    neg.at(1, 1) = Rat(1);
    neg.at(2, 2) = Rat(1);
    // x1 -> x1^-1 negates each occurrence of index 1
    CHECK(gl_act(neg, lie_nf(n, 3, {2, 0, 1})) ==
          gv_scale(Rat(-1), lie_nf(n, 3, {2, 0, 1})));
    CHECK(gl_act(neg, lie_nf(n, 3, {1, 0, 0})) == lie_nf(n, 3, {1, 0, 0}));

    // action is functorial: (gh) acts as g after h
    IntMat sw(n), e01 = IntMat::identity(n);
    sw.at(0, 1) = 1;
    sw.at(1, 0) = 1;
    sw.at(2, 2) = 1;
    e01.at(0, 1) = 1;
    GradedVector u = lie_nf(n, 3, {2, 1, 0});
    CHECK(gl_act(RatMat::from_int(mat_mul(sw, e01)), u) ==
          gl_act(RatMat::from_int(sw), gl_act(RatMat::from_int(e01), u)));
}

TEST_CASE("tuple bullet action") {
    int n = 3;
    GrTuple t = tuple_zero(n, 2);
    t[0] = lie_nf(n, 2, {1, 0});
    t[2] = lie_nf(n, 2, {2, 1});
    IntMat id = IntMat::identity(n);
    CHECK(tuple_eq(bullet(id, t), t));
    // bullet is a left action
    IntMat g(n), h(n);
    for (int i = 0; i < n; i++) g.at(i, i) = h.at(i, i) = 1;
    g.at(0, 1) = 1;
    h.at(1, 2) = -1;
    CHECK(tuple_eq(bullet(mat_mul(g, h), t), bullet(g, bullet(h, t))));
}
