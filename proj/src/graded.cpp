#include "mbg/graded.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <sstream>

namespace mbg {

GradedVector gv_zero(int n, int c) { return {n, c, {}}; }

static void gv_check_shape(const GradedVector& a, const GradedVector& b) {
    if (a.n != b.n || a.c != b.c) throw domain_error("graded: mixed layers");
}

static void gv_accum(GradedVector& a, const std::vector<int>& key, const Rat& s) {
    if (s == 0) return;
    auto it = a.coef.find(key);
    if (it == a.coef.end()) {
        a.coef.emplace(key, s);
        return;
    }
    it->second += s;
    if (it->second == 0) a.coef.erase(it);
}

GradedVector gv_add(const GradedVector& a, const GradedVector& b) {
    gv_check_shape(a, b);
    GradedVector out = a;
    for (const auto& [k, v] : b.coef) gv_accum(out, k, v);
    return out;
}

GradedVector gv_sub(const GradedVector& a, const GradedVector& b) {
    gv_check_shape(a, b);
    GradedVector out = a;
    for (const auto& [k, v] : b.coef) gv_accum(out, k, -v);
    return out;
}

GradedVector gv_scale(const Rat& s, const GradedVector& a) {
    GradedVector out = gv_zero(a.n, a.c);
    if (s == 0) return out;
    for (const auto& [k, v] : a.coef) out.coef.emplace(k, s * v);
    return out;
}

bool gv_integral(const GradedVector& a) {
    for (const auto& [k, v] : a.coef)
        if (v.get_den() != 1) return false;
    return true;
}

std::string gv_str(const GradedVector& a) {
    if (a.coef.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : a.coef) {
        Rat av = v < 0 ? Rat(-v) : v;
        if (first) {
            if (v < 0) os << "-";
            first = false;
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        if (av != 1) os << av.get_str() << "*";
        os << "[";
        for (size_t t = 0; t < k.size(); ++t) os << (t ? "," : "") << "x" << k[t] + 1;
        os << "]";
    }
    return os.str();
}

// Rewrite a left-normed bracket on seq into the basis.  After sorting the
// tail (entries from position 3 on commute in a metabelian Lie ring) a word
// fails to be basic only when the tail minimum m sits below seq[1]; one
// Jacobi step [a,b,m,...] = [a,m,b,...] - [b,m,a,...] then lands in words
// whose sorted tails already dominate their second entry, so the recursion
// stops at depth two.
static GradedVector lie_nf_impl(int n, std::vector<int> s) {
    int c = int(s.size());
    GradedVector out = gv_zero(n, c);
    if (s[0] == s[1]) return out;
    Rat sign = 1;
    if (s[0] < s[1]) {
        std::swap(s[0], s[1]);
        sign = -1;
    }
    std::sort(s.begin() + 2, s.end());
    if (c == 2 || s[1] <= s[2]) {
        if (!is_basic(s)) throw internal_error("lie_nf: expected a basic word");
        out.coef.emplace(std::move(s), sign);
        return out;
    }
    int a = s[0], b = s[1], m = s[2];
    std::vector<int> u1{a, m, b}, u2{b, m, a};
    u1.insert(u1.end(), s.begin() + 3, s.end());
    u2.insert(u2.end(), s.begin() + 3, s.end());
    GradedVector v = gv_sub(lie_nf_impl(n, std::move(u1)), lie_nf_impl(n, std::move(u2)));
    return gv_scale(sign, v);
}

GradedVector lie_nf(int n, int c, const std::vector<int>& seq) {
    if (c < 2 || int(seq.size()) != c) throw domain_error("lie_nf: bad weight");
    for (int v : seq)
        if (v < 0 || v >= n) throw domain_error("lie_nf: index out of range");
    return lie_nf_impl(n, seq);
}

GradedVector gl_act(const RatMat& g, const GradedVector& v) {
    if (g.n != v.n) throw domain_error("gl_act: rank mismatch");
    int n = v.n, c = v.c;
    GradedVector out = gv_zero(n, c);
    std::vector<int> word(c);
    for (const auto& [idx, co] : v.coef) {
        auto rec = [&](auto&& self, int pos, const Rat& acc) -> void {
            if (pos == c) {
                GradedVector t = lie_nf_impl(n, word);
                for (const auto& [k, w] : t.coef) gv_accum(out, k, co * acc * w);
                return;
            }
            for (int k = 0; k < n; ++k) {
                const Rat& gk = g.at(k, idx[pos]);
                if (gk == 0) continue;
                word[pos] = k;
                self(self, pos + 1, acc * gk);
            }
        };
        rec(rec, 0, Rat(1));
    }
    return out;
}

GrTuple tuple_zero(int n, int c) { return GrTuple(n, gv_zero(n, c)); }

GrTuple tuple_add(const GrTuple& a, const GrTuple& b) {
    if (a.size() != b.size()) throw domain_error("tuple_add: size mismatch");
    GrTuple out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = gv_add(a[i], b[i]);
    return out;
}

bool tuple_eq(const GrTuple& a, const GrTuple& b) { return a == b; }

GrTuple bullet(const IntMat& g, const GrTuple& u) {
    int n = g.n;
    if (int(u.size()) != n) throw domain_error("bullet: tuple length mismatch");
    auto hq = inverse_over_q(g);
    if (!hq) throw domain_error("bullet: matrix is singular");
    RatMat gq = RatMat::from_int(g);
    int c = u.empty() ? 2 : u[0].c;
    std::vector<GradedVector> act(n);
    for (int i = 0; i < n; ++i) act[i] = gl_act(gq, u[i]);
    GrTuple out = tuple_zero(n, c);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            const Rat& h = hq->at(i, j);
            if (h == 0) continue;
            out[j] = gv_add(out[j], gv_scale(h, act[i]));
        }
    return out;
}

namespace {

// Cached per-(n, c) solver: F has one column per basic commutator, one row
// per (generator slot, degree c-1 monomial); its columns are the flattened
// leading forms of the basis brackets.  We keep the reduced rows of [F | I],
// so solving against a flattened target is a single matrix-vector product.
struct Ctx {
    int n = 0, c = 0;
    std::vector<BasicComm> bas;
    std::vector<ExpVec> tdegs;
    std::map<ExpVec, int> tindex;
    int m = 0, r = 0;
    std::vector<std::vector<Rat>> red;  // m rows of length r + m
};

std::vector<ExpVec> degree_monomials(int n, int d) {
    std::vector<ExpVec> out;
    ExpVec e(n, 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == n - 1) {
            e[pos] = left;
            out.push_back(e);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            e[pos] = v;
            self(self, pos + 1, left - v);
        }
    };
    rec(rec, 0, d);
    return out;
}

std::unique_ptr<Ctx> build_ctx(int n, int c) {
    auto cx = std::make_unique<Ctx>();
    cx->n = n;
    cx->c = c;
    cx->bas = basis(n, c);
    cx->tdegs = degree_monomials(n, c - 1);
    for (size_t t = 0; t < cx->tdegs.size(); ++t) cx->tindex.emplace(cx->tdegs[t], int(t));
    int td = int(cx->tdegs.size());
    cx->m = n * td;
    cx->r = int(cx->bas.size());
    cx->red.assign(cx->m, std::vector<Rat>(cx->r + cx->m, Rat(0)));
    for (int col = 0; col < cx->r; ++col) {
        Elt w = to_elt(n, cx->bas[col]);
        for (int j = 0; j < n; ++j) {
            Form f = homogeneous_part(w.d[j], c - 1);
            for (const auto& [e, co] : f.c) cx->red[j * td + cx->tindex.at(e)][col] = Rat(co);
        }
    }
    for (int k = 0; k < cx->m; ++k) cx->red[k][cx->r + k] = 1;
    // reduced row echelon form over Q; the basis columns must all be pivots
    int lead = 0;
    for (int col = 0; col < cx->r && lead < cx->m; ++col) {
        int piv = -1;
        for (int row = lead; row < cx->m; ++row)
            if (cx->red[row][col] != 0) {
                piv = row;
                break;
            }
        if (piv < 0) continue;
        std::swap(cx->red[lead], cx->red[piv]);
        Rat inv = 1 / cx->red[lead][col];
        for (auto& x : cx->red[lead])
            if (x != 0) x *= inv;
        for (int row = 0; row < cx->m; ++row) {
            if (row == lead) continue;
            Rat f = cx->red[row][col];
            if (f == 0) continue;
            for (int t = 0; t < cx->r + cx->m; ++t)
                if (cx->red[lead][t] != 0) cx->red[row][t] -= f * cx->red[lead][t];
        }
        ++lead;
    }
    if (lead != cx->r) throw internal_error("coordinates: basis leading forms are dependent");
    return cx;
}

const Ctx& ctx_for(int n, int c) {
    static std::map<std::pair<int, int>, std::unique_ptr<Ctx>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lk(mtx);
    auto key = std::make_pair(n, c);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, build_ctx(n, c)).first;
    return *it->second;
}

}  // namespace

GradedVector coordinates(const Elt& w, int c) {
    int n = w.rank();
    if (c < 2) throw domain_error("coordinates: need c >= 2");
    if (gamma_depth(w) < c) throw domain_error("coordinates: depth below requested weight");
    const Ctx& cx = ctx_for(n, c);
    int td = int(cx.tdegs.size());
    std::vector<std::pair<int, Int>> tgt;
    for (int j = 0; j < n; ++j) {
        Form f = homogeneous_part(w.d[j], c - 1);
        for (const auto& [e, co] : f.c) tgt.emplace_back(j * td + cx.tindex.at(e), co);
    }
    GradedVector out = gv_zero(n, c);
    for (int k = 0; k < cx.m; ++k) {
        Rat y = 0;
        for (const auto& [t, co] : tgt) {
            const Rat& e = cx.red[k][cx.r + t];
            if (e != 0) y += e * Rat(co);
        }
        if (k < cx.r) {
            if (y != 0) {
                if (y.get_den() != 1) throw internal_error("coordinates: non-integral solution");
                out.coef.emplace(cx.bas[k].idx, y);
            }
        } else if (y != 0) {
            throw internal_error("coordinates: leading form outside the layer");
        }
    }
    return out;
}

}  // namespace mbg
