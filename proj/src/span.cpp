#include "mbg/span.hpp"

#include <algorithm>
#include <set>

namespace mbg {

std::vector<IntMat> gl_generators(int n) {
    if (n < 2) throw domain_error("gl_generators: need n >= 2");
    std::vector<IntMat> out;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            for (int s : {1, -1}) {
                IntMat e = IntMat::identity(n);
                e.at(i, j) = s;
                out.push_back(e);
            }
        }
    IntMat sw = IntMat::identity(n);
    sw.at(0, 0) = sw.at(1, 1) = 0;
    sw.at(0, 1) = sw.at(1, 0) = 1;
    out.push_back(sw);
    IntMat ng = IntMat::identity(n);
    ng.at(0, 0) = -1;
    out.push_back(ng);
    return out;
}

namespace {

// action of one generator g: per-slot matrix on the bracket basis (sparse
// columns) followed by mixing the slots with g^{-1}
struct GenAction {
    std::vector<std::vector<std::pair<int, Int>>> col;
    IntMat hinv;
};

struct FlatSpace {
    int n = 0, c = 0, r = 0;
    std::vector<BasicComm> bas;
    std::map<std::vector<int>, int> index;
    std::vector<GenAction> acts;
};

FlatSpace make_space(int n, int c) {
    FlatSpace sp;
    sp.n = n;
    sp.c = c;
    sp.bas = basis(n, c);
    sp.r = int(sp.bas.size());
    for (int b = 0; b < sp.r; ++b) sp.index.emplace(sp.bas[b].idx, b);
    for (const IntMat& g : gl_generators(n)) {
        GenAction ga;
        ga.col.resize(sp.r);
        RatMat gq = RatMat::from_int(g);
        for (int b = 0; b < sp.r; ++b) {
            GradedVector unit = gv_zero(n, c);
            unit.coef.emplace(sp.bas[b].idx, Rat(1));
            GradedVector img = gl_act(gq, unit);
            for (const auto& [idx, v] : img.coef) {
                if (v.get_den() != 1) throw internal_error("span: non-integral generator action");
                ga.col[b].emplace_back(sp.index.at(idx), Int(v.get_num()));
            }
        }
        auto hq = inverse_over_q(g);
        if (!hq) throw internal_error("span: generator is singular");
        auto hi = to_int_mat(*hq);
        if (!hi) throw internal_error("span: generator inverse is not integral");
        ga.hinv = *hi;
        sp.acts.push_back(std::move(ga));
    }
    return sp;
}

std::vector<Int> flatten(const FlatSpace& sp, const GrTuple& t) {
    if (int(t.size()) != sp.n) throw domain_error("span: tuple length mismatch");
    std::vector<Int> v(size_t(sp.n) * sp.r, Int(0));
    Int den = 1;
    for (const auto& gv : t) {
        if (gv.n != sp.n || gv.c != sp.c) throw domain_error("span: mixed layers");
        for (const auto& [idx, co] : gv.coef) den = lcm(den, Int(co.get_den()));
    }
    for (int i = 0; i < sp.n; ++i)
        for (const auto& [idx, co] : t[i].coef) {
            Rat s = Rat(den) * co;
            v[size_t(i) * sp.r + sp.index.at(idx)] = Int(s.get_num());
        }
    return v;
}

std::vector<Int> act_flat(const FlatSpace& sp, const GenAction& ga, const std::vector<Int>& v) {
    std::vector<Int> comp(v.size(), Int(0));
    for (int i = 0; i < sp.n; ++i) {
        const size_t base = size_t(i) * sp.r;
        for (int b = 0; b < sp.r; ++b) {
            const Int& x = v[base + b];
            if (x == 0) continue;
            for (const auto& [b2, a] : ga.col[b]) comp[base + b2] += x * a;
        }
    }
    std::vector<Int> out(v.size(), Int(0));
    for (int j = 0; j < sp.n; ++j)
        for (int i = 0; i < sp.n; ++i) {
            long long h = ga.hinv.at(i, j);
            if (h == 0) continue;
            const size_t bi = size_t(i) * sp.r, bj = size_t(j) * sp.r;
            for (int b = 0; b < sp.r; ++b)
                if (comp[bi + b] != 0) out[bj + b] += Int(static_cast<long>(h)) * comp[bi + b];
        }
    return out;
}

// divide by the gcd of the entries and make the leading entry positive;
// returns the pivot position, or -1 for the zero vector
int normalize(std::vector<Int>& v) {
    int piv = -1;
    Int g = 0;
    for (size_t t = 0; t < v.size(); ++t)
        if (v[t] != 0) {
            if (piv < 0) piv = int(t);
            g = gcd(g, v[t]);
        }
    if (piv < 0) return -1;
    if (v[piv] < 0) g = -g;
    if (g != 1)
        for (auto& x : v)
            if (x != 0) x /= g;
    return piv;
}

struct Echelon {
    std::vector<std::vector<Int>> rows;  // sorted by pivot, normalized
    std::vector<int> lead;

    void reduce(std::vector<Int>& v) const {
        for (size_t k = 0; k < rows.size(); ++k) {
            const Int& c = v[lead[k]];
            if (c == 0) continue;
            const Int p = rows[k][lead[k]];
            Int cc = c;  // v[lead[k]] mutates below
            for (size_t t = 0; t < v.size(); ++t) {
                if (rows[k][t] != 0)
                    v[t] = v[t] * p - rows[k][t] * cc;
                else if (v[t] != 0)
                    v[t] *= p;
            }
            normalize(v);
        }
    }

    bool add(std::vector<Int> v) {
        reduce(v);
        int piv = normalize(v);
        if (piv < 0) return false;
        size_t at = 0;
        while (at < rows.size() && lead[at] < piv) ++at;
        rows.insert(rows.begin() + at, std::move(v));
        lead.insert(lead.begin() + at, piv);
        return true;
    }
};

int closure(int n, int c, const std::vector<GrTuple>& seeds, bool parallel) {
    FlatSpace sp = make_space(n, c);
    Echelon ech;
    std::set<std::vector<Int>> seen;
    std::vector<std::vector<Int>> frontier;
    auto feed = [&](std::vector<Int> v) {
        if (normalize(v) < 0) return;
        if (!seen.insert(v).second) return;
        if (ech.add(v)) frontier.push_back(std::move(v));
    };
    for (const auto& s : seeds) feed(flatten(sp, s));
    const int ng = int(sp.acts.size());
    while (!frontier.empty()) {
        std::vector<std::vector<Int>> images(frontier.size() * ng);
        const int tasks = int(images.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
        for (int t = 0; t < tasks; ++t)
            images[t] = act_flat(sp, sp.acts[t % ng], frontier[t / ng]);
        frontier.clear();
        for (auto& img : images) feed(std::move(img));
    }
    return int(ech.rows.size());
}

}  // namespace

int span_dim(int n, int c, const std::vector<GrTuple>& seeds) {
#ifdef MBG_HAVE_OPENMP
    return closure(n, c, seeds, true);
#else
    return closure(n, c, seeds, false);
#endif
}

int span_dim_serial(int n, int c, const std::vector<GrTuple>& seeds) {
    return closure(n, c, seeds, false);
}

}  // namespace mbg
