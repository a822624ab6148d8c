#include "mbg/basis.hpp"

#include <algorithm>

namespace mbg {

bool is_basic(const std::vector<int>& idx) {
    if (idx.size() < 2) return false;
    if (idx[0] <= idx[1]) return false;
    for (size_t t = 2; t < idx.size(); ++t)
        if (idx[t - 1] > idx[t]) return false;
    return true;
}

std::vector<BasicComm> basis(int n, int c) {
    if (n < 2 || c < 2) throw domain_error("basis: need n >= 2 and c >= 2");
    std::vector<BasicComm> out;
    std::vector<int> idx(c);
    // enumerate i_1 > i_2 <= i_3 <= ... <= i_c in lexicographic order
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == c) {
            out.push_back({idx});
            return;
        }
        int lo = pos == 0 ? 1 : (pos == 1 ? 0 : idx[pos - 1]);
        int hi = pos == 1 ? idx[0] - 1 : n - 1;
        for (int v = lo; v <= hi; ++v) {
            idx[pos] = v;
            self(self, pos + 1);
        }
    };
    rec(rec, 0);
    return out;
}

Elt to_elt(int n, const BasicComm& b) {
    if (!is_basic(b.idx)) throw domain_error("to_elt: index word is not basic");
    std::vector<Elt> gens;
    gens.reserve(b.idx.size());
    for (int i : b.idx) gens.push_back(elt_gen(n, i));
    return left_normed(gens);
}

Int rank_gr(int n, int c) {
    if (n < 2) throw domain_error("rank_gr: need n >= 2");
    if (c == 1) return n;
    if (c < 1) throw domain_error("rank_gr: need c >= 1");
    return Int(c - 1) * binom(n + c - 2, n - 2);
}

Int rank_layer_total(int n, int c) { return Int(n) * rank_gr(n, c); }

Int rank_layer_aut(int n, int c) {
    if (c < 2) throw domain_error("rank_layer_aut: need c >= 2");
    if (c == 2) return Int(n) * binom(n, 2);
    return rank_layer_total(n, c) - rank_layer_complement(n, c);
}

Int rank_layer_complement(int n, int c) {
    if (c < 3) throw domain_error("rank_layer_complement: need c >= 3");
    return binom(n + c - 2, n - 1);
}

}  // namespace mbg
