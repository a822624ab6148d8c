#pragma once

// The graded Lie layers gr_c(M_n) tensored with Q, written in the basic
// commutator basis: rewriting of arbitrary left-normed brackets, the GL_n
// actions on layers and on tuples, and exact coordinates of a group element
// of depth >= c in gr_c via its leading forms.

#include "mbg/basis.hpp"

#include <map>

namespace mbg {

struct GradedVector {
    int n = 0, c = 0;
    std::map<std::vector<int>, Rat> coef;  // keys are basic index words
    bool operator==(const GradedVector&) const = default;
    bool is_zero() const { return coef.empty(); }
};

GradedVector gv_zero(int n, int c);
GradedVector gv_add(const GradedVector& a, const GradedVector& b);
GradedVector gv_sub(const GradedVector& a, const GradedVector& b);
GradedVector gv_scale(const Rat& s, const GradedVector& a);
bool gv_integral(const GradedVector& a);
std::string gv_str(const GradedVector& a);

// left-normed bracket on an arbitrary index word, rewritten in the basis
GradedVector lie_nf(int n, int c, const std::vector<int>& seq);

// action of g on gr_c induced by z_j -> sum_k g(k,j) z_k on weight one
GradedVector gl_act(const RatMat& g, const GradedVector& v);

// one vector per generator slot; the layer of IA deviations at depth c
using GrTuple = std::vector<GradedVector>;

GrTuple tuple_zero(int n, int c);
GrTuple tuple_add(const GrTuple& a, const GrTuple& b);
bool tuple_eq(const GrTuple& a, const GrTuple& b);

// twisted action on tuples: (g . u)_j = sum_i gl_act(g, u_i) * (g^{-1})(i,j)
GrTuple bullet(const IntMat& g, const GrTuple& u);

// coordinates of w in gr_c, for gamma depth(w) >= c; exact and integral
GradedVector coordinates(const Elt& w, int c);

}  // namespace mbg
