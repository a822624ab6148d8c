#include "mbg/magnus.hpp"

#include <algorithm>
#include <functional>

namespace mbg {

namespace stats {
std::atomic<unsigned long long> elements_checked{0};
}

void check_elt(const Elt& w) {
    int n = w.rank();
    Poly lhs;
    for (int j = 0; j < n; j++) lhs += w.d[size_t(j)] * Poly::gen1(n, j);
    Poly rhs = Poly::monomial(w.e, 1) - Poly::constant(n, 1);
    if (lhs != rhs) throw internal_error("row identity violated");
    stats::elements_checked.fetch_add(1, std::memory_order_relaxed);
}

static Elt make_elt(ExpVec e, std::vector<Poly> d) {
    Elt w{std::move(e), std::move(d)};
#ifdef MBG_INTERNAL_CHECKS
    check_elt(w);
#endif
    return w;
}

Elt elt_one(int n) { return make_elt(ev_zero(n), std::vector<Poly>(size_t(n))); }

Elt elt_gen(int n, int i, int k) {
    // x_i^k: derivative 1 + a_i + ... + a_i^{k-1}, or the inverse-side sum
    ExpVec e = ev_zero(n);
    e[size_t(i)] = k;
    std::vector<Poly> d(static_cast<size_t>(n));
    Poly s;
    if (k >= 0)
        for (int t = 0; t < k; t++) s += Poly::gen(n, i, t);
    else
        for (int t = -1; t >= k; t--) s -= Poly::gen(n, i, t);
    d[size_t(i)] = std::move(s);
    return make_elt(std::move(e), std::move(d));
}

bool is_one(const Elt& w) {
    if (!ev_is_zero(w.e)) return false;
    return std::all_of(w.d.begin(), w.d.end(),
                       [](const Poly& p) { return p.is_zero(); });
}

Elt mul(const Elt& a, const Elt& b) {
    int n = a.rank();
    std::vector<Poly> d(static_cast<size_t>(n));
    for (int j = 0; j < n; j++)
        d[size_t(j)] = a.d[size_t(j)] + b.d[size_t(j)].mul_monomial(a.e, 1);
    return make_elt(ev_add(a.e, b.e), std::move(d));
}

Elt inv(const Elt& a) {
    int n = a.rank();
    ExpVec e = ev_neg(a.e);
    std::vector<Poly> d(static_cast<size_t>(n));
    for (int j = 0; j < n; j++)
        d[size_t(j)] = -a.d[size_t(j)].mul_monomial(e, 1);
    return make_elt(std::move(e), std::move(d));
}

Elt conj(const Elt& a, const Elt& g) { return mul(mul(inv(g), a), g); }

Elt comm(const Elt& a, const Elt& b) {
    return mul(mul(inv(a), inv(b)), mul(a, b));
}

Elt pow(const Elt& a, long k) {
    Elt r = elt_one(a.rank());
    Elt base = k < 0 ? inv(a) : a;
    for (long t = 0, m = k < 0 ? -k : k; t < m; t++) r = mul(r, base);
    return r;
}

Elt left_normed(const std::vector<Elt>& ws) {
    if (ws.empty()) throw domain_error("left_normed: empty list");
    Elt r = ws[0];
    for (size_t i = 1; i < ws.size(); i++) r = comm(r, ws[i]);
    return r;
}

Elt module_pow(const Elt& w, const Poly& s) {
    if (!ev_is_zero(w.e))
        throw domain_error("module_pow: element is not in the derived subgroup");
    int n = w.rank();
    Poly ss = s.star();
    std::vector<Poly> d(static_cast<size_t>(n));
    for (int j = 0; j < n; j++) d[size_t(j)] = ss * w.d[size_t(j)];
    return make_elt(ev_zero(n), std::move(d));
}

int gamma_depth(const Elt& w) {
    if (is_one(w)) return kInf;
    if (!ev_is_zero(w.e)) return 1;
    int v = kInf;
    for (const auto& p : w.d) v = std::min(v, valuation(p));
    return 1 + v;
}

Poly abel_monomial(const Elt& w) { return Poly::monomial(w.e, 1); }

// --- Fox integration: recover module exponents of the bracket generators ---

// full t-expansion of a polynomial with nonnegative exponents
static std::map<ExpVec, Int> t_expand(const Poly& p) {
    std::map<ExpVec, Int> out;
    for (const auto& t : p.terms()) {
        size_t n = t.e.size();
        ExpVec k(n, 0);
        std::function<void(size_t, Int)> rec = [&](size_t pos, Int coef) {
            if (pos == n) {
                auto it = out.find(k);
                if (it == out.end())
                    out.emplace(k, coef);
                else {
                    it->second += coef;
                    if (it->second == 0) out.erase(it);
                }
                return;
            }
            for (int x = 0; x <= t.e[pos]; x++) {
                k[pos] = x;
                rec(pos + 1, coef * binom(static_cast<unsigned long>(t.e[pos]),
                                          static_cast<unsigned long>(x)));
            }
        };
        rec(0, t.c);
    }
    return out;
}

// back from t-monomials: sum gamma * prod (a_i - 1)^{beta_i}
static Poly from_t(int n, const std::map<ExpVec, Int>& m) {
    Poly r;
    for (const auto& [beta, gamma] : m) r += gamma * omega(n, beta);
    return r;
}

Factored fox_integrate(const Elt& w) {
    int n = w.rank();
    Factored out;
    out.e = w.e;

    Elt prefix = elt_one(n);
    for (int i = 0; i < n; i++)
        prefix = mul(prefix, elt_gen(n, i, w.e[size_t(i)]));
    Elt wp = mul(inv(prefix), w);  // derived part, e = 0

    std::vector<Poly> d = wp.d;
    for (int m = n - 1; m >= 1; m--) {
        if (d[size_t(m)].is_zero()) continue;
        // common normalizing shift over the still-active rows
        ExpVec sh = ev_zero(n);
        for (int j = 0; j <= m; j++)
            for (const auto& t : d[size_t(j)].terms())
                for (int i = 0; i < n; i++)
                    sh[size_t(i)] = std::max(sh[size_t(i)], -t.e[size_t(i)]);
        std::map<ExpVec, Int> q = t_expand(d[size_t(m)].mul_monomial(sh, 1));
        // split q = sum_{k<m} c'_k t_k, peeling the smallest usable index
        std::vector<std::map<ExpVec, Int>> cp(static_cast<size_t>(m));
        for (const auto& [beta, gamma] : q) {
            int k = -1;
            for (int i = 0; i < m; i++)
                if (beta[size_t(i)] > 0) {
                    k = i;
                    break;
                }
            if (k < 0)
                throw internal_error("fox_integrate: row outside the expected ideal");
            ExpVec red = beta;
            red[size_t(k)] -= 1;
            cp[size_t(k)][red] += gamma;
        }
        ExpVec unshift = ev_neg(sh);
        for (int k = 0; k < m; k++) {
            if (cp[size_t(k)].empty()) continue;
            Poly ck = from_t(n, cp[size_t(k)]).mul_monomial(unshift, 1);
            // [x_{k+1}, x_{m+1}]^{P} with P* = c_k a_k a_m contributes
            // c_k (1 - a_m) at slot k and c_k (a_k - 1) at slot m
            ExpVec km = ev_zero(n);
            km[size_t(k)] = 1;
            km[size_t(m)] = 1;
            Poly pstar = ck.mul_monomial(km, 1);
            out.p[{k, m}] = pstar.star();
            d[size_t(k)] -= ck * (Poly::constant(n, 1) - Poly::gen(n, m));
            d[size_t(m)] -= ck * Poly::gen1(n, k);
        }
        if (!d[size_t(m)].is_zero())
            throw internal_error("fox_integrate: residue after splitting");
    }
    if (!d[0].is_zero())
        throw internal_error("fox_integrate: nonzero final residue");
    return out;
}

Elt build(int n, const Factored& f) {
    Elt r = elt_one(n);
    for (int i = 0; i < n; i++) r = mul(r, elt_gen(n, i, f.e[size_t(i)]));
    for (const auto& [ij, p] : f.p) {
        Elt b = comm(elt_gen(n, ij.first), elt_gen(n, ij.second));
        r = mul(r, module_pow(b, p));
    }
    return r;
}

}  // namespace mbg
