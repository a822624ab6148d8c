#pragma once

// The named endomorphism families used throughout the verification suite.
// All indices are 0-based here; the CLI layer converts from the 1-based
// names it prints and parses.

#include "mbg/endo.hpp"

namespace mbg::zoo {

// x_i -> x_i [x_{seq_1}, x_{seq_2}, ...]; needs i not in seq, seq_1 != seq_2
Endo tau(int n, int i, const std::vector<int>& seq);

// x_i -> x_i [x_j, x_k]^{omega(r)}; i, j, k pairwise distinct, r >= 0
Endo tau_p(int n, int i, int j, int k, const ExpVec& r);

// the two-row family: moves x_i and x_k, with column index j
Endo b_p(int n, int i, int k, int j, const Poly& p);
// the symmetric family on x_i and x_j
Endo b_q(int n, int i, int j, const Poly& q);

Endo xi(const Elt& u);              // inner automorphism w -> u^{-1} w u
Endo pi(int n, int i, int j);       // x_i -> x_i [x_i, x_j]
Endo sigma(int n, int i, int j);    // swaps x_i and x_j
Endo beta(int n);                   // x_2 -> x_2 x_1
Endo mu(int n);                     // x_1 -> x_1 [x_1^{-1}, [x_1, [x_2, x_3]]]
Endo eta(int n, int c);             // x_j -> x_j [x_j, (c-1) x_1], an endomorphism only
// the b_p tau_p product carrying x_1 to x_1 [x_1, x_3]^{omega(r)} and x_2 to
// x_2 [x_3, x_2]^{omega(r)} up to the next filtration layer
Endo delta(int n, const ExpVec& r);

// [tau(0, {1,2})^{-1}, s (pi_{1,n-1} pi_{2,n-1})^{-1}]; needs n >= 4
Endo psi1(int n, int s);

// delta admits two candidate product decompositions in terms of b_p and
// tau_p, differing in which tau factor is inverted; report which of them
// reproduces the stated images modulo the next filtration step
struct DeltaFormReport {
    bool second_inverted = false;  // b_p(r) tau_p(213)^{-1} tau_p(123)
    bool third_inverted = false;   // b_p(r) tau_p(213) tau_p(123)^{-1}
};
DeltaFormReport delta_product_form(int n, const ExpVec& r);

}  // namespace mbg::zoo
