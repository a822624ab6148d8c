#pragma once

// Elements of the free metabelian group M_n, represented through the Magnus
// embedding as (abelianization exponent vector, Fox derivative row).  The
// representation is faithful and the pair is the normal form; every produced
// element satisfies the row identity  sum_j d_j (a_j - 1) = a^e - 1.

#include <atomic>
#include <map>
#include <utility>

#include "mbg/ring.hpp"

namespace mbg {

struct Elt {
    ExpVec e;             // exponents in the abelianization
    std::vector<Poly> d;  // d[j] = Fox derivative with respect to x_{j+1}

    int rank() const { return int(e.size()); }
    bool operator==(const Elt&) const = default;
};

namespace stats {
// elements whose row identity has been verified (internal checks build)
extern std::atomic<unsigned long long> elements_checked;
}  // namespace stats

// throws internal_error when the row identity fails
void check_elt(const Elt& w);

Elt elt_one(int n);
Elt elt_gen(int n, int i, int k = 1);  // x_{i+1}^k

bool is_one(const Elt& w);
Elt mul(const Elt& a, const Elt& b);
Elt inv(const Elt& a);
Elt conj(const Elt& a, const Elt& g);  // g^{-1} a g
Elt comm(const Elt& a, const Elt& b);  // a^{-1} b^{-1} a b
Elt pow(const Elt& a, long k);
Elt left_normed(const std::vector<Elt>& ws);  // [w_1, w_2, ..., w_k]

// w^s for s in the group ring, acting on the derived subgroup; pre: e(w) = 0
Elt module_pow(const Elt& w, const Poly& s);

// least c with w in gamma_c setminus gamma_{c+1}; kInf exactly for the identity
int gamma_depth(const Elt& w);

Poly abel_monomial(const Elt& w);  // a^{e(w)}

// w = x_1^{e_1} ... x_n^{e_n} * prod_{i<j} [x_{i+1}, x_{j+1}]^{p[{i,j}]}
struct Factored {
    ExpVec e;
    std::map<std::pair<int, int>, Poly> p;
};

Factored fox_integrate(const Elt& w);
Elt build(int n, const Factored& f);

}  // namespace mbg
