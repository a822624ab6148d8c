#pragma once

// Basic commutators of weight c >= 2 and the closed rank formulas for the
// graded layers attached to M_n and its IA filtration.

#include "mbg/magnus.hpp"

namespace mbg {

// indices (i_1,...,i_c), 0-based, with i_1 > i_2 <= i_3 <= ... <= i_c;
// the left-normed brackets on these index words form a Z-basis of gr_c(M_n)
struct BasicComm {
    std::vector<int> idx;
    auto operator<=>(const BasicComm&) const = default;
    int weight() const { return int(idx.size()); }
};

bool is_basic(const std::vector<int>& idx);
std::vector<BasicComm> basis(int n, int c);  // lexicographic order, c >= 2
Elt to_elt(int n, const BasicComm& b);

// rank of gr_c(M_n): (c-1) * C(n+c-2, n-2), c >= 2
Int rank_gr(int n, int c);
// rank of the full depth-c layer of IA endomorphism deviations: n * rank_gr
Int rank_layer_total(int n, int c);
// rank of the depth-c automorphism layer; c = 2 is special
Int rank_layer_aut(int n, int c);
// rank of its complement inside the full layer, c >= 3
Int rank_layer_complement(int n, int c);

}  // namespace mbg
