#include "mbg/ring.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace mbg {

ExpVec ev_zero(int n) { return ExpVec(size_t(n), 0); }

ExpVec ev_unit(int n, int i) {
    ExpVec e(size_t(n), 0);
    e[size_t(i)] = 1;
    return e;
}

ExpVec ev_add(const ExpVec& a, const ExpVec& b) {
    ExpVec r(a);
    for (size_t i = 0; i < r.size(); i++) r[i] += b[i];
    return r;
}

ExpVec ev_sub(const ExpVec& a, const ExpVec& b) {
    ExpVec r(a);
    for (size_t i = 0; i < r.size(); i++) r[i] -= b[i];
    return r;
}

ExpVec ev_neg(const ExpVec& a) {
    ExpVec r(a);
    for (auto& x : r) x = -x;
    return r;
}

bool ev_is_zero(const ExpVec& a) {
    return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
}

int ev_total(const ExpVec& a) {
    int s = 0;
    for (int x : a) s += x;
    return s;
}

Int binom(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Poly Poly::monomial(ExpVec e, Int c) {
    Poly p;
    if (c != 0) p.t_.push_back({std::move(e), std::move(c)});
    return p;
}

Poly Poly::constant(int n, Int c) { return monomial(ev_zero(n), std::move(c)); }

Poly Poly::gen(int n, int i, int k) {
    ExpVec e = ev_zero(n);
    e[size_t(i)] = k;
    return monomial(std::move(e), 1);
}

Poly Poly::gen1(int n, int i) { return gen(n, i) - constant(n, 1); }

Poly Poly::from_terms(std::vector<Term> ts) {
    std::sort(ts.begin(), ts.end(),
              [](const Term& x, const Term& y) { return x.e < y.e; });
    Poly p;
    for (auto& t : ts) {
        if (!p.t_.empty() && p.t_.back().e == t.e)
            p.t_.back().c += t.c;
        else
            p.t_.push_back(std::move(t));
        if (!p.t_.empty() && p.t_.back().c == 0) p.t_.pop_back();
    }
    return p;
}

// by value so callers can move either side; elements are moved out again
static std::vector<Term> merge_terms(std::vector<Term> a, std::vector<Term> b, int bsign) {
    std::vector<Term> r;
    r.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].e < b[j].e)) {
            r.push_back(std::move(a[i++]));
        } else if (i == a.size() || b[j].e < a[i].e) {
            r.push_back(std::move(b[j++]));
            if (bsign < 0) r.back().c = -r.back().c;
        } else {
            Int c = bsign < 0 ? Int(a[i].c - b[j].c) : Int(a[i].c + b[j].c);
            if (c != 0) r.push_back({std::move(a[i].e), std::move(c)});
            i++;
            j++;
        }
    }
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r;
    r.t_ = merge_terms(t_, o.t_, +1);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r;
    r.t_ = merge_terms(t_, o.t_, -1);
    return r;
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& t : r.t_) t.c = -t.c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    t_ = merge_terms(std::move(t_), o.t_, +1);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    t_ = merge_terms(std::move(t_), o.t_, -1);
    return *this;
}

Poly Poly::mul_monomial(const ExpVec& e, const Int& c) const {
    Poly r;
    if (c == 0) return r;
    r.t_.reserve(t_.size());
    for (const auto& t : t_) r.t_.push_back({ev_add(t.e, e), t.c * c});
    return r;
}

Poly Poly::mul_int(const Int& k) const {
    Poly r;
    if (k == 0) return r;
    r.t_.reserve(t_.size());
    for (const auto& t : t_) r.t_.push_back({t.e, t.c * k});
    return r;
}

Poly operator*(const Int& k, const Poly& p) { return p.mul_int(k); }

Poly Poly::operator*(const Poly& o) const {
    const Poly& outer = size() <= o.size() ? *this : o;
    const Poly& inner = size() <= o.size() ? o : *this;
    if (outer.is_zero()) return {};
    // binary-counter merging keeps every term in O(log) merges instead of
    // rebuilding one long accumulator per outer term
    std::vector<std::vector<Term>> stack;
    for (const auto& t : outer.terms()) {
        std::vector<Term> part;
        part.reserve(inner.size());
        for (const auto& u : inner.terms()) part.push_back({ev_add(u.e, t.e), u.c * t.c});
        stack.push_back(std::move(part));
        while (stack.size() > 1 && stack[stack.size() - 2].size() <= 2 * stack.back().size()) {
            std::vector<Term> top = std::move(stack.back());
            stack.pop_back();
            stack.back() = merge_terms(std::move(stack.back()), std::move(top), +1);
        }
    }
    Poly acc;
    while (!stack.empty()) {
        acc.t_ = merge_terms(std::move(stack.back()), std::move(acc.t_), +1);
        stack.pop_back();
    }
    return acc;
}

Int Poly::aug() const {
    Int s = 0;
    for (const auto& t : t_) s += t.c;
    return s;
}

Poly Poly::star() const {
    std::vector<Term> ts;
    ts.reserve(t_.size());
    for (const auto& t : t_) ts.push_back({ev_neg(t.e), t.c});
    return from_terms(std::move(ts));
}

std::optional<ExpVec> Poly::unit_monomial() const {
    if (t_.size() == 1 && t_[0].c == 1) return t_[0].e;
    return std::nullopt;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : t_) {
        Int c = t.c;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        bool had = false;
        if (c != 1) {
            os << c.get_str();
            had = true;
        }
        for (size_t i = 0; i < t.e.size(); i++) {
            if (t.e[i] == 0) continue;
            if (had) os << "*";
            os << "a" << (i + 1);
            if (t.e[i] != 1) os << "^" << t.e[i];
            had = true;
        }
        if (!had) os << "1";
    }
    return os.str();
}

Poly omega(int n, const ExpVec& r) {
    Poly p = Poly::constant(n, 1);
    for (int i = 0; i < n; i++) {
        if (r[size_t(i)] < 0) throw domain_error("omega: negative multiplicity");
        for (int k = 0; k < r[size_t(i)]; k++) p = p * Poly::gen1(n, i);
    }
    return p;
}

// enumerate nonnegative k <= f with |k| = d, accumulating c*prod binom(f_i,k_i)
static void accumulate_part(const ExpVec& f, const Int& c, int d,
                            std::map<ExpVec, Int>& out) {
    size_t n = f.size();
    ExpVec k(n, 0);
    std::function<void(size_t, int, Int)> rec = [&](size_t pos, int rem, Int coef) {
        if (pos + 1 == n) {
            if (rem > f[pos]) return;
            k[pos] = rem;
            Int v = coef * binom(static_cast<unsigned long>(f[pos]),
                                 static_cast<unsigned long>(rem));
            auto it = out.find(k);
            if (it == out.end())
                out.emplace(k, std::move(v));
            else {
                it->second += v;
                if (it->second == 0) out.erase(it);
            }
            return;
        }
        int top = std::min(rem, f[pos]);
        for (int x = 0; x <= top; x++) {
            k[pos] = x;
            rec(pos + 1, rem - x,
                coef * binom(static_cast<unsigned long>(f[pos]),
                             static_cast<unsigned long>(x)));
        }
    };
    if (n == 0) {
        if (d == 0) out[ExpVec{}] += c;
        return;
    }
    rec(0, d, c);
}

// shift so every exponent is nonnegative; the low-degree parts of the
// t-expansion (t_i = a_i - 1) are unchanged by the extra unit factor
static ExpVec normalizing_shift(const Poly& p) {
    ExpVec sh;
    for (const auto& t : p.terms()) {
        if (sh.empty()) sh = ev_zero(int(t.e.size()));
        for (size_t i = 0; i < t.e.size(); i++)
            sh[i] = std::max(sh[i], -t.e[i]);
    }
    return sh;
}

static Form part_at(const Poly& p, const ExpVec& sh, int d) {
    Form f;
    f.deg = d;
    for (const auto& t : p.terms())
        accumulate_part(ev_add(t.e, sh), t.c, d, f.c);
    return f;
}

int valuation(const Poly& p) {
    if (p.is_zero()) return kInf;
    ExpVec sh = normalizing_shift(p);
    int dmax = 0;
    for (const auto& t : p.terms())
        dmax = std::max(dmax, ev_total(ev_add(t.e, sh)));
    for (int d = 0; d <= dmax; d++)
        if (!part_at(p, sh, d).is_zero()) return d;
    throw internal_error("valuation: nonzero polynomial with no leading part");
}

Form homogeneous_part(const Poly& p, int d) {
    if (p.is_zero()) {
        Form f;
        f.deg = d;
        return f;
    }
#ifdef MBG_INTERNAL_CHECKS
    if (valuation(p) < d)
        throw domain_error("homogeneous_part: valuation below requested degree");
#endif
    return part_at(p, normalizing_shift(p), d);
}

Form leading_form(const Poly& p) {
    if (p.is_zero()) throw domain_error("leading_form: zero polynomial");
    ExpVec sh = normalizing_shift(p);
    int dmax = 0;
    for (const auto& t : p.terms())
        dmax = std::max(dmax, ev_total(ev_add(t.e, sh)));
    for (int d = 0; d <= dmax; d++) {
        Form f = part_at(p, sh, d);
        if (!f.is_zero()) return f;
    }
    throw internal_error("leading_form: no nonzero part");
}

Form form_add(const Form& a, const Form& b) {
    if (a.deg != b.deg && !a.is_zero() && !b.is_zero())
        throw domain_error("form_add: degree mismatch");
    Form r;
    r.deg = a.is_zero() ? b.deg : a.deg;
    r.c = a.c;
    for (const auto& [e, c] : b.c) {
        auto it = r.c.find(e);
        if (it == r.c.end())
            r.c.emplace(e, c);
        else {
            it->second += c;
            if (it->second == 0) r.c.erase(it);
        }
    }
    return r;
}

Form form_mul(const Form& a, const Form& b) {
    Form r;
    r.deg = a.deg + b.deg;
    for (const auto& [ea, ca] : a.c)
        for (const auto& [eb, cb] : b.c) {
            ExpVec e = ev_add(ea, eb);
            auto it = r.c.find(e);
            if (it == r.c.end())
                r.c.emplace(std::move(e), ca * cb);
            else {
                it->second += ca * cb;
                if (it->second == 0) r.c.erase(it);
            }
        }
    return r;
}

IntMat IntMat::identity(int n) {
    IntMat g(n);
    for (int i = 0; i < n; i++) g.at(i, i) = 1;
    return g;
}

IntMat mat_mul(const IntMat& x, const IntMat& y) {
    IntMat r(x.n);
    for (int i = 0; i < x.n; i++)
        for (int k = 0; k < x.n; k++) {
            long long v = x.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < x.n; j++) r.at(i, j) += v * y.at(k, j);
        }
    return r;
}

Int det(const IntMat& g) {
    int n = g.n;
    std::vector<Int> w(size_t(n) * n);
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) w[size_t(i) * n + j] = static_cast<long>(g.at(i, j));
    // Bareiss fraction-free elimination
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; k++) {
        if (w[size_t(k) * n + k] == 0) {
            int p = -1;
            for (int i = k + 1; i < n; i++)
                if (w[size_t(i) * n + k] != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            for (int j = 0; j < n; j++)
                std::swap(w[size_t(k) * n + j], w[size_t(p) * n + j]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; i++)
            for (int j = k + 1; j < n; j++) {
                Int v = w[size_t(i) * n + j] * w[size_t(k) * n + k] -
                        w[size_t(i) * n + k] * w[size_t(k) * n + j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                w[size_t(i) * n + j] = std::move(v);
            }
        prev = w[size_t(k) * n + k];
    }
    Int d = n == 0 ? Int(1) : w[size_t(n - 1) * n + (n - 1)];
    return sign < 0 ? Int(-d) : d;
}

RatMat RatMat::identity(int n) {
    RatMat g(n);
    for (int i = 0; i < n; i++) g.at(i, i) = 1;
    return g;
}

RatMat RatMat::from_int(const IntMat& g) {
    RatMat r(g.n);
    for (int i = 0; i < g.n; i++)
        for (int j = 0; j < g.n; j++) r.at(i, j) = Rat(static_cast<long>(g.at(i, j)));
    return r;
}

std::optional<RatMat> inverse_over_q(const IntMat& g) {
    int n = g.n;
    RatMat w = RatMat::from_int(g);
    RatMat inv = RatMat::identity(n);
    for (int k = 0; k < n; k++) {
        int p = -1;
        for (int i = k; i < n; i++)
            if (w.at(i, k) != 0) {
                p = i;
                break;
            }
        if (p < 0) return std::nullopt;
        if (p != k)
            for (int j = 0; j < n; j++) {
                std::swap(w.at(k, j), w.at(p, j));
                std::swap(inv.at(k, j), inv.at(p, j));
            }
        Rat piv = w.at(k, k);
        for (int j = 0; j < n; j++) {
            w.at(k, j) /= piv;
            w.at(k, j).canonicalize();
            inv.at(k, j) /= piv;
            inv.at(k, j).canonicalize();
        }
        for (int i = 0; i < n; i++) {
            if (i == k || w.at(i, k) == 0) continue;
            Rat f = w.at(i, k);
            for (int j = 0; j < n; j++) {
                w.at(i, j) -= f * w.at(k, j);
                w.at(i, j).canonicalize();
                inv.at(i, j) -= f * inv.at(k, j);
                inv.at(i, j).canonicalize();
            }
        }
    }
    return inv;
}

std::optional<IntMat> to_int_mat(const RatMat& m) {
    IntMat r(m.n);
    for (int i = 0; i < m.n; i++)
        for (int j = 0; j < m.n; j++) {
            const Rat& q = m.at(i, j);
            if (q.get_den() != 1) return std::nullopt;
            if (!q.get_num().fits_slong_p())
                throw internal_error("to_int_mat: entry out of range");
            r.at(i, j) = q.get_num().get_si();
        }
    return r;
}

Poly substitute(const Poly& p, const IntMat& g) {
    std::vector<Term> ts;
    ts.reserve(p.size());
    for (const auto& t : p.terms()) {
        ExpVec f = ev_zero(g.n);
        for (int i = 0; i < g.n; i++) {
            long long s = 0;
            for (int j = 0; j < g.n; j++) s += g.at(i, j) * t.e[size_t(j)];
            f[size_t(i)] = int(s);
        }
        ts.push_back({std::move(f), t.c});
    }
    return Poly::from_terms(std::move(ts));
}

PolyMat PolyMat::identity(int n) {
    PolyMat x(n);
    for (int i = 0; i < n; i++) x.at(i, i) = Poly::constant(n, 1);
    return x;
}

PolyMat mat_mul(const PolyMat& x, const PolyMat& y) {
    PolyMat r(x.n);
    for (int i = 0; i < x.n; i++)
        for (int k = 0; k < x.n; k++) {
            if (x.at(i, k).is_zero()) continue;
            for (int j = 0; j < x.n; j++) {
                if (y.at(k, j).is_zero()) continue;
                r.at(i, j) += x.at(i, k) * y.at(k, j);
            }
        }
    return r;
}

PolyMat substitute(const PolyMat& x, const IntMat& g) {
    PolyMat r(x.n);
    for (size_t i = 0; i < x.m.size(); i++) r.m[i] = substitute(x.m[i], g);
    return r;
}

// number of ring variables carried by the entries (not the matrix size:
// minors are smaller matrices over the same ring)
static int poly_mat_nvars(const PolyMat& x) {
    for (const auto& p : x.m)
        if (!p.is_zero()) return int(p.terms()[0].e.size());
    return x.n;
}

Poly det(const PolyMat& x) {
    int n = x.n;
    int nv = poly_mat_nvars(x);
    if (n == 0) return Poly();
    std::vector<std::optional<Poly>> memo(size_t(1) << n);
    // rows are consumed top-down; the column set determines the row index
    std::function<const Poly&(unsigned)> rec = [&](unsigned mask) -> const Poly& {
        auto& slot = memo[mask];
        if (slot) return *slot;
        int row = n - __builtin_popcount(mask);
        if (mask == 0) {
            slot = Poly::constant(nv, 1);
            return *slot;
        }
        Poly d;
        int sign = 1;
        for (int j = 0; j < n; j++) {
            if (!(mask & (1u << j))) continue;
            if (!x.at(row, j).is_zero()) {
                Poly sub = rec(mask & ~(1u << j));
                Poly piece = x.at(row, j) * sub;
                if (sign < 0)
                    d -= piece;
                else
                    d += piece;
            }
            sign = -sign;
        }
        slot = std::move(d);
        return *slot;
    };
    return rec((1u << n) - 1);
}

PolyMat adjugate(const PolyMat& x) {
    int n = x.n;
    PolyMat adj(n);
    if (n == 1) {
        adj.at(0, 0) = Poly::constant(poly_mat_nvars(x), 1);
        return adj;
    }
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) {
            PolyMat minor(n - 1);
            for (int r = 0, rr = 0; r < n; r++) {
                if (r == j) continue;
                for (int c = 0, cc = 0; c < n; c++) {
                    if (c == i) continue;
                    minor.at(rr, cc) = x.at(r, c);
                    cc++;
                }
                rr++;
            }
            Poly d = det(minor);
            adj.at(i, j) = ((i + j) % 2 == 0) ? std::move(d) : -d;
        }
    return adj;
}

}  // namespace mbg
