// Compares the serial and the parallel span-closure kernels on the layer
// decompositions that dominate the suite runtime.

#include "mbg/basis.hpp"
#include "mbg/graded.hpp"
#include "mbg/span.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <vector>

using namespace mbg;

static std::vector<GrTuple> seeds_pq(int n, int c) {
    std::vector<GrTuple> out;
    for (int i = 0; i < n; ++i) {
        for (const auto& b : basis(n, c)) {
            if (std::find(b.idx.begin(), b.idx.end(), i) != b.idx.end()) continue;
            GrTuple t = tuple_zero(n, c);
            t[static_cast<size_t>(i)].coef[b.idx] = 1;
            out.push_back(std::move(t));
        }
    }
    for (const auto& u : basis(n, c - 1)) {
        GrTuple t = tuple_zero(n, c);
        for (int i = 0; i < n; ++i) {
            std::vector<int> seq = u.idx;
            seq.push_back(i);
            t[static_cast<size_t>(i)] = gv_scale(-1, lie_nf(n, c, seq));
        }
        out.push_back(std::move(t));
    }
    return out;
}

int main() {
    for (int c : {3, 4}) {
        const int n = 4;
        auto seeds = seeds_pq(n, c);
        auto t0 = std::chrono::steady_clock::now();
        int ds = span_dim_serial(n, c, seeds);
        auto t1 = std::chrono::steady_clock::now();
        int dp = span_dim(n, c, seeds);
        auto t2 = std::chrono::steady_clock::now();
        auto ms = [](auto a, auto b) {
            return std::chrono::duration_cast<std::chrono::milliseconds>(b - a).count();
        };
        std::printf("n=%d c=%d  serial: dim=%d %lldms   parallel: dim=%d %lldms\n", n, c, ds,
                    static_cast<long long>(ms(t0, t1)), dp, static_cast<long long>(ms(t1, t2)));
        if (ds != dp) {
            std::printf("MISMATCH\n");
            return 1;
        }
    }
    return 0;
}
