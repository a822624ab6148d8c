#pragma once

// Endomorphisms of M_n given by generator images, with the chain rule for
// derivative rows, the determinant test for invertibility, exact inverses,
// the depth filtration on IA automorphisms, and the Johnson-type symbol chi
// into the depth-c tuple layer.

#include "mbg/graded.hpp"

namespace mbg {

struct Endo {
    int n = 0;
    std::vector<Elt> im;  // images of the generators
    IntMat ab;            // abelianization, column i = im[i].e

    bool operator==(const Endo& o) const { return n == o.n && im == o.im; }
};

Endo endo_identity(int n);
Endo endo_from_images(std::vector<Elt> im);

PolyMat jacobian(const Endo& f);  // (i, j) entry: row j of the image of x_i
Elt apply(const Endo& f, const Elt& w);
Endo compose(const Endo& f, const Endo& g);  // w -> f(g(w))

bool is_ia(const Endo& f);
bool is_automorphism(const Endo& f);
Endo inverse(const Endo& f);
Endo endo_pow(const Endo& f, long k);  // negative k inverts
Endo endo_conj(const Endo& a, const Endo& g);           // g^{-1} a g
Endo endo_comm(const Endo& a, const Endo& b);           // a^{-1} b^{-1} a b
Endo iter_comm(const Endo& a, const Endo& b, int m);    // [a, b, b, ...] m times

// min over i of the gamma depth of x_i^{-1} f(x_i); infinite iff identity
int ia_depth(const Endo& f);

// depth-c symbol: slot i holds the coordinates of x_i^{-1} f(x_i) in gr_c;
// requires ia_depth(f) >= c
GrTuple chi(const Endo& f, int c);

Endo inner(const Elt& u);  // w -> u^{-1} w u
Endo tame_lift(const IntMat& g);
std::pair<Endo, Endo> tame_lift_pair(const IntMat& g);  // (t, t^{-1}), exact
Endo star_rep(const IntMat& g, const Endo& f);          // t_g f t_g^{-1}

}  // namespace mbg
