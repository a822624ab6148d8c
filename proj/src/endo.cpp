#include "mbg/endo.hpp"

#include <cstdlib>

namespace mbg {

namespace {

Elt raw_elt(ExpVec e, std::vector<Poly> d) {
    Elt w{std::move(e), std::move(d)};
#ifdef MBG_INTERNAL_CHECKS
    check_elt(w);
#endif
    return w;
}

}  // namespace

Endo endo_identity(int n) {
    Endo f;
    f.n = n;
    for (int i = 0; i < n; ++i) f.im.push_back(elt_gen(n, i));
    f.ab = IntMat::identity(n);
    return f;
}

Endo endo_from_images(std::vector<Elt> im) {
    if (im.empty()) throw domain_error("endo: no images");
    int n = im[0].rank();
    if (int(im.size()) != n) throw domain_error("endo: image count must match rank");
    Endo f;
    f.n = n;
    f.ab = IntMat(n);
    for (int i = 0; i < n; ++i) {
        if (im[i].rank() != n) throw domain_error("endo: mixed ranks");
        for (int k = 0; k < n; ++k) f.ab.at(k, i) = im[i].e[k];
    }
    f.im = std::move(im);
    return f;
}

PolyMat jacobian(const Endo& f) {
    PolyMat j(f.n);
    for (int i = 0; i < f.n; ++i)
        for (int jj = 0; jj < f.n; ++jj) j.at(i, jj) = f.im[i].d[jj];
    return j;
}

Elt apply(const Endo& f, const Elt& w) {
    int n = f.n;
    if (w.rank() != n) throw domain_error("apply: rank mismatch");
    ExpVec e2(n, 0);
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) e2[i] += f.ab.at(i, k) * w.e[k];
    std::vector<Poly> d2(n, Poly{});
    for (int k = 0; k < n; ++k) {
        if (w.d[k].is_zero()) continue;
        Poly s = substitute(w.d[k], f.ab);
        for (int j = 0; j < n; ++j)
            if (!f.im[k].d[j].is_zero()) d2[j] += s * f.im[k].d[j];
    }
    return raw_elt(std::move(e2), std::move(d2));
}

Endo compose(const Endo& f, const Endo& g) {
    if (f.n != g.n) throw domain_error("compose: rank mismatch");
    std::vector<Elt> im;
    im.reserve(g.im.size());
    for (const Elt& w : g.im) im.push_back(apply(f, w));
    return endo_from_images(std::move(im));
}

bool is_ia(const Endo& f) { return f.ab == IntMat::identity(f.n); }

namespace {

Endo inverse_ia(const Endo& f) {
    PolyMat j = jacobian(f);
    auto u = det(j).unit_monomial();
    if (!u) throw domain_error("inverse: not an automorphism");
    PolyMat adj = adjugate(j);
    ExpVec shift = ev_neg(*u);
    std::vector<Elt> im;
    for (int i = 0; i < f.n; ++i) {
        std::vector<Poly> d(f.n);
        for (int jj = 0; jj < f.n; ++jj) d[jj] = adj.at(i, jj).mul_monomial(shift, 1);
        im.push_back(raw_elt(ev_unit(f.n, i), std::move(d)));
    }
    return endo_from_images(std::move(im));
}

}  // namespace

bool is_automorphism(const Endo& f) {
    if (is_ia(f)) return bool(det(jacobian(f)).unit_monomial());
    Int dt = det(f.ab);
    if (dt != 1 && dt != -1) return false;
    auto [t, tin] = tame_lift_pair(f.ab);
    (void)t;
    return bool(det(jacobian(compose(tin, f))).unit_monomial());
}

Endo inverse(const Endo& f) {
    if (is_ia(f)) return inverse_ia(f);
    Int dt = det(f.ab);
    if (dt != 1 && dt != -1) throw domain_error("inverse: not an automorphism");
    auto [t, tin] = tame_lift_pair(f.ab);
    (void)t;
    Endo iota = compose(tin, f);
    if (!is_ia(iota)) throw internal_error("inverse: tame factor mismatch");
    return compose(inverse_ia(iota), tin);
}

Endo endo_pow(const Endo& f, long k) {
    Endo base = k < 0 ? inverse(f) : f;
    long m = k < 0 ? -k : k;
    Endo r = endo_identity(f.n);
    for (long t = 0; t < m; ++t) r = compose(r, base);
    return r;
}

Endo endo_conj(const Endo& a, const Endo& g) { return compose(compose(inverse(g), a), g); }

Endo endo_comm(const Endo& a, const Endo& b) {
    return compose(compose(inverse(a), inverse(b)), compose(a, b));
}

Endo iter_comm(const Endo& a, const Endo& b, int m) {
    if (m < 0) throw domain_error("iter_comm: negative count");
    Endo r = a;
    for (int t = 0; t < m; ++t) r = endo_comm(r, b);
    return r;
}

int ia_depth(const Endo& f) {
    int d = kInf;
    for (int i = 0; i < f.n; ++i) {
        Elt u = mul(inv(elt_gen(f.n, i)), f.im[i]);
        d = std::min(d, gamma_depth(u));
    }
    return d;
}

GrTuple chi(const Endo& f, int c) {
    GrTuple out;
    for (int i = 0; i < f.n; ++i) {
        Elt u = mul(inv(elt_gen(f.n, i)), f.im[i]);
        if (gamma_depth(u) < c) throw domain_error("chi: depth below requested weight");
        out.push_back(coordinates(u, c));
    }
    return out;
}

Endo inner(const Elt& u) {
    int n = u.rank();
    std::vector<Elt> im;
    for (int i = 0; i < n; ++i) im.push_back(conj(elt_gen(n, i), u));
    return endo_from_images(std::move(im));
}

namespace {

struct Move {
    enum Kind { AddRow, Swap, Negate } kind;
    int i = 0, j = 0;
    long long c = 0;
};

Move move_inverse(const Move& m) {
    Move r = m;
    if (m.kind == Move::AddRow) r.c = -m.c;
    return r;
}

Endo lift_move(int n, const Move& m) {
    Endo f = endo_identity(n);
    switch (m.kind) {
        case Move::AddRow:
            f.im[m.j] = mul(elt_gen(n, m.j), pow(elt_gen(n, m.i), m.c));
            break;
        case Move::Swap:
            std::swap(f.im[m.i], f.im[m.j]);
            break;
        case Move::Negate:
            f.im[m.i] = inv(elt_gen(n, m.i));
            break;
    }
    return endo_from_images(std::move(f.im));
}

// row-reduce g to the identity by elementary moves; the recorded inverses,
// read left to right, multiply to g
std::vector<Move> factor_gl(const IntMat& g) {
    Int dt = det(g);
    if (dt != 1 && dt != -1) throw domain_error("tame_lift: matrix is not in GL_n(Z)");
    int n = g.n;
    std::vector<std::vector<long long>> a(n, std::vector<long long>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = g.at(i, j);
    std::vector<Move> ops;
    auto addrow = [&](int i, int j, long long c) {
        for (int t = 0; t < n; ++t) a[i][t] += c * a[j][t];
        ops.push_back({Move::AddRow, i, j, c});
    };
    for (int col = 0; col < n; ++col) {
        for (;;) {
            int rmin = -1;
            for (int r = col; r < n; ++r)
                if (a[r][col] != 0 &&
                    (rmin < 0 || std::llabs(a[r][col]) < std::llabs(a[rmin][col])))
                    rmin = r;
            if (rmin < 0) throw internal_error("tame_lift: lost rank during reduction");
            bool others = false;
            for (int r = col; r < n; ++r) {
                if (r == rmin || a[r][col] == 0) continue;
                others = true;
                addrow(r, rmin, -(a[r][col] / a[rmin][col]));
            }
            if (!others) {
                if (rmin != col) {
                    std::swap(a[rmin], a[col]);
                    ops.push_back({Move::Swap, col, rmin, 0});
                }
                if (a[col][col] < 0) {
                    for (int t = 0; t < n; ++t) a[col][t] = -a[col][t];
                    ops.push_back({Move::Negate, col, 0, 0});
                }
                break;
            }
        }
        if (a[col][col] != 1) throw internal_error("tame_lift: non-unit pivot");
    }
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row)
            if (a[row][col] != 0) addrow(row, col, -a[row][col]);
    std::vector<Move> word;
    word.reserve(ops.size());
    for (const Move& m : ops) word.push_back(move_inverse(m));
    return word;
}

}  // namespace

Endo tame_lift(const IntMat& g) { return tame_lift_pair(g).first; }

std::pair<Endo, Endo> tame_lift_pair(const IntMat& g) {
    int n = g.n;
    std::vector<Move> word = factor_gl(g);
    Endo t = endo_identity(n), tin = endo_identity(n);
    for (const Move& m : word) t = compose(t, lift_move(n, m));
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        tin = compose(tin, lift_move(n, move_inverse(*it)));
    if (!(t.ab == g)) throw internal_error("tame_lift: abelianization mismatch");
    return {std::move(t), std::move(tin)};
}

Endo star_rep(const IntMat& g, const Endo& f) {
    auto [t, tin] = tame_lift_pair(g);
    return compose(t, compose(f, tin));
}

}  // namespace mbg
