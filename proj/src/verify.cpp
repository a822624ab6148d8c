#include "mbg/verify.hpp"

#include "mbg/basis.hpp"
#include "mbg/graded.hpp"
#include "mbg/magnus.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#ifdef MBG_HAVE_OPENMP
#include <omp.h>
#endif

namespace mbg {

namespace {

unsigned long long fnv(const std::string& s) {
    unsigned long long h = 1469598103934665603ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

// Tuples print as-is (they are exponent vectors); index sequences print
// 1-based, matching the surface syntax of the CLI.
std::string rstr(const ExpVec& r) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
    os << ")";
    return os.str();
}

std::string seqstr(const std::vector<int>& s) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i] + 1;
    os << ")";
    return os.str();
}

// All length-n tuples of nonnegative integers summing to total, in
// lexicographic order.  Failing tuples are reported as the first one in
// this order, so the enumeration order is part of the report contract.
std::vector<ExpVec> compositions(int n, int total) {
    std::vector<ExpVec> out;
    if (total < 0) return out;
    ExpVec cur(static_cast<size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int pos, int rem) {
        if (pos == n - 1) {
            cur[static_cast<size_t>(pos)] = rem;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= rem; ++v) {
            cur[static_cast<size_t>(pos)] = v;
            rec(pos + 1, rem - v);
        }
    };
    if (n == 0) return out;
    rec(0, total);
    return out;
}

std::string chi_str(const GrTuple& t) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < t.size(); ++i) {
        if (t[i].is_zero()) continue;
        if (!first) os << "; ";
        first = false;
        os << "x" << i + 1 << ": " << gv_str(t[i]);
    }
    if (first) os << "0";
    return os.str();
}

Verdict make(const std::string& check, const std::string& params) {
    Verdict v;
    v.check = check;
    v.params = params;
    return v;
}

Verdict fail(Verdict v, const std::string& witness) {
    v.status = Status::Fail;
    v.witness = witness;
    return v;
}

Verdict skip(Verdict v, const std::string& why) {
    v.status = Status::Skip;
    v.witness = why;
    return v;
}

Endo rho_inv(int n, int j) {
    // inverse of pi_{2,j+1} pi_{3,j+1} in 1-based naming; j is 0-based here
    return inverse(compose(zoo::pi(n, 1, j), zoo::pi(n, 2, j)));
}

}  // namespace

int Rng::uniform(int lo, int hi) {
    // plain modulo draw; the slight bias is irrelevant for sampling and the
    // sequence is identical on every platform
    unsigned long long x = g();
    return lo + static_cast<int>(x % static_cast<unsigned long long>(hi - lo + 1));
}

Elt random_word(int n, int len, Rng& rng) {
    Elt w = elt_one(n);
    for (int t = 0; t < len; ++t)
        w = mul(w, elt_gen(n, rng.uniform(0, n - 1), rng.flip() ? 1 : -1));
    return w;
}

Elt random_depth_elt(int n, int d, Rng& rng) {
    if (d <= 1) {
        Elt w = random_word(n, 1 + rng.uniform(0, 3), rng);
        if (ev_is_zero(w.e)) w = mul(w, elt_gen(n, rng.uniform(0, n - 1), 1));
        return w;
    }
    // conjugation preserves the leading form, and distinct basic commutators
    // have independent leading forms, so these products sit at depth exactly d
    auto bas = basis(n, d);
    const BasicComm& b1 = bas[static_cast<size_t>(rng.uniform(0, int(bas.size()) - 1))];
    Elt w = conj(to_elt(n, b1), random_word(n, rng.uniform(0, 3), rng));
    if (rng.flip()) {
        const BasicComm& b2 = bas[static_cast<size_t>(rng.uniform(0, int(bas.size()) - 1))];
        w = mul(w, conj(to_elt(n, b2), random_word(n, rng.uniform(0, 3), rng)));
    }
    return w;
}

Endo random_ia(int n, int d, Rng& rng) {
    if (d < 2) d = 2;
    auto factor = [&]() -> Endo {
        switch (rng.uniform(0, 3)) {
            case 0: {
                int i = rng.uniform(0, n - 1);
                std::vector<int> seq;
                while (int(seq.size()) < d) {
                    int k = rng.uniform(0, n - 1);
                    if (k == i) continue;
                    if (seq.size() == 1 && k == seq[0]) continue;
                    seq.push_back(k);
                }
                return zoo::tau(n, i, seq);
            }
            case 1: {
                int i = rng.uniform(0, n - 1);
                int j = rng.uniform(0, n - 1);
                while (j == i) j = rng.uniform(0, n - 1);
                int k = rng.uniform(0, n - 1);
                while (k == i || k == j) k = rng.uniform(0, n - 1);
                ExpVec r(static_cast<size_t>(n), 0);
                for (int t = 0; t < d - 2; ++t) r[static_cast<size_t>(rng.uniform(0, n - 1))]++;
                return zoo::tau_p(n, i, j, k, r);
            }
            case 2:
                if (d >= 3) {
                    int i = rng.uniform(0, n - 1);
                    int j = rng.uniform(0, n - 1);
                    while (j == i) j = rng.uniform(0, n - 1);
                    ExpVec r(static_cast<size_t>(n), 0);
                    for (int t = 0; t < d - 3; ++t) r[static_cast<size_t>(rng.uniform(0, n - 1))]++;
                    return zoo::b_q(n, i, j, omega(n, r));
                }
                [[fallthrough]];
            default:
                return inner(random_depth_elt(n, d - 1, rng));
        }
    };
    Endo f = factor();
    if (rng.flip()) f = compose(f, factor());
    if (rng.uniform(0, 3) == 0) {
        int i = rng.uniform(0, n - 1);
        int j = rng.uniform(0, n - 1);
        while (j == i) j = rng.uniform(0, n - 1);
        f = endo_conj(f, zoo::pi(n, i, j));
    }
    if (rng.flip()) f = inverse(f);
    return f;
}

int SuiteResult::count(Status s) const {
    int k = 0;
    for (const auto& v : verdicts)
        if (v.status == s) ++k;
    return k;
}

bool SuiteResult::ok() const { return count(Status::Fail) == 0; }

Verdict check_basis_ranks(int n_lo, int n_hi, int c_lo, int c_hi) {
    std::ostringstream ps;
    ps << "n=" << n_lo << ".." << n_hi << " c=" << c_lo << ".." << c_hi;
    Verdict v = make("basis-rank", ps.str());
    for (int n = n_lo; n <= n_hi; ++n) {
        for (int c = c_lo; c <= c_hi; ++c) {
            auto bas = basis(n, c);
            if (Int(static_cast<long>(bas.size())) != rank_gr(n, c)) {
                std::ostringstream w;
                w << "n=" << n << " c=" << c << ": enumerated " << bas.size()
                  << " basic commutators, formula gives " << rank_gr(n, c).get_str();
                return fail(v, w.str());
            }
            for (const auto& b : bas)
                if (!is_basic(b.idx)) return fail(v, "non-basic tuple enumerated at n=" + std::to_string(n));
            if (!std::is_sorted(bas.begin(), bas.end()) ||
                std::adjacent_find(bas.begin(), bas.end()) != bas.end())
                return fail(v, "basis enumeration not strictly increasing at n=" + std::to_string(n));
            if (c >= 3 && rank_layer_aut(n, c) + rank_layer_complement(n, c) != rank_layer_total(n, c))
                return fail(v, "layer rank formulas inconsistent at n=" + std::to_string(n) + " c=" + std::to_string(c));
        }
    }
    return v;
}

Verdict check_fox_goldens(int n) {
    Verdict v = make("fox-golden", "n=" + std::to_string(n));
    const Poly one = Poly::constant(n, 1);
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
            if (j == k) continue;
            Elt w = comm(elt_gen(n, j), elt_gen(n, k));
            ExpVec sh = ev_zero(n);
            sh[static_cast<size_t>(j)] = -1;
            sh[static_cast<size_t>(k)] = -1;
            Poly mono = Poly::monomial(sh, 1);
            Poly want_j = mono * (one - Poly::gen(n, k));
            Poly want_k = mono * (Poly::gen(n, j) - one);
            for (int t = 0; t < n; ++t) {
                const Poly& got = w.d[static_cast<size_t>(t)];
                const Poly& want = t == j ? want_j : t == k ? want_k : Poly();
                if (!(got == want)) {
                    std::ostringstream os;
                    os << "row " << t + 1 << " of [x" << j + 1 << ",x" << k + 1
                       << "]: got " << got.str();
                    return fail(v, os.str());
                }
            }
        }
    }
    for (int k = -3; k <= 3; ++k) {
        if (k == 0) continue;
        for (int i = 0; i < n; ++i) {
            Elt w = elt_gen(n, i, k);
            Poly want;
            if (k > 0)
                for (int t = 0; t < k; ++t) want += Poly::gen(n, i, t);
            else
                for (int t = -1; t >= k; --t) want -= Poly::gen(n, i, t);
            if (!(w.d[static_cast<size_t>(i)] == want))
                return fail(v, "geometric sum row of x" + std::to_string(i + 1) + "^" + std::to_string(k));
        }
    }
    Rng rng(fnv("fox-golden"));
    for (int s = 0; s < 10; ++s) {
        Elt w = random_word(n, 8, rng);
        Poly lhs;
        for (int j = 0; j < n; ++j) lhs += w.d[static_cast<size_t>(j)] * Poly::gen1(n, j);
        Poly rhs = Poly::monomial(w.e, 1) - one;
        if (!(lhs == rhs)) return fail(v, "row identity violated on a random word");
    }
    return v;
}

Verdict check_determinants(int n, int c) {
    Verdict v = make("jacobian-determinant", "n=" + std::to_string(n) + " c=" + std::to_string(c));
    if (n < 3) return skip(v, "families below need three generators");
    {
        Poly d = det(jacobian(zoo::pi(n, 0, 1)));
        auto um = d.unit_monomial();
        ExpVec want = ev_zero(n);
        want[1] = -1;
        if (!um || *um != want) return fail(v, "det J(pi_12) is " + d.str() + ", expected a2^-1");
    }
    std::vector<std::pair<std::string, Endo>> ia;
    ia.emplace_back("tau_1,(2,3)", zoo::tau(n, 0, {1, 2}));
    ia.emplace_back("tau_3,(1,2,1)", zoo::tau(n, 2, {0, 1, 0}));
    {
        ExpVec r = ev_zero(n);
        r[0] = 1;
        ia.emplace_back("tauP_123,(e1)", zoo::tau_p(n, 0, 1, 2, r));
        ia.emplace_back("B_132(omega)", zoo::b_p(n, 0, 2, 1, omega(n, r)));
        ia.emplace_back("B_12(omega)", zoo::b_q(n, 0, 1, omega(n, r)));
        ia.emplace_back("delta_123,(e1)", zoo::delta(n, r));
    }
    ia.emplace_back("xi", zoo::xi(to_elt(n, basis(n, 2)[0])));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) ia.emplace_back("pi_" + std::to_string(i + 1) + std::to_string(j + 1), zoo::pi(n, i, j));
    ia.emplace_back("mu", zoo::mu(n));
    if (n >= 4) ia.emplace_back("psi_1,1", zoo::psi1(n, 1));
    for (const auto& [name, f] : ia) {
        if (!det(jacobian(f)).unit_monomial())
            return fail(v, name + ": Jacobian determinant is not a coefficient-one monomial");
        if (!is_automorphism(f)) return fail(v, name + ": invertibility test rejected");
    }
    if (!is_automorphism(zoo::sigma(n, 0, 1)) || !is_automorphism(zoo::beta(n)))
        return fail(v, "tame family rejected by the invertibility test");
    {
        Endo h = zoo::eta(n, std::max(3, c));
        if (det(jacobian(h)).unit_monomial()) return fail(v, "det J(eta) unexpectedly a unit monomial");
        if (is_automorphism(h)) return fail(v, "eta accepted as an automorphism");
    }
    return v;
}

namespace {

Endo random_zoo_factor(int n, Rng& rng) {
    auto idx2 = [&](int& i, int& j) {
        i = rng.uniform(0, n - 1);
        j = rng.uniform(0, n - 1);
        while (j == i) j = rng.uniform(0, n - 1);
    };
    int i, j;
    switch (rng.uniform(0, 9)) {
        case 0: {
            i = rng.uniform(0, n - 1);
            std::vector<int> seq;
            int len = rng.uniform(2, 4);
            while (int(seq.size()) < len) {
                int k = rng.uniform(0, n - 1);
                if (k == i || (seq.size() == 1 && k == seq[0])) continue;
                seq.push_back(k);
            }
            return zoo::tau(n, i, seq);
        }
        case 1: {
            idx2(i, j);
            int k = rng.uniform(0, n - 1);
            while (k == i || k == j) k = rng.uniform(0, n - 1);
            ExpVec r(static_cast<size_t>(n), 0);
            for (int t = rng.uniform(0, 2); t > 0; --t) r[static_cast<size_t>(rng.uniform(0, n - 1))]++;
            return zoo::tau_p(n, i, j, k, r);
        }
        case 2: {
            idx2(i, j);
            int k = rng.uniform(0, n - 1);
            while (k == i || k == j) k = rng.uniform(0, n - 1);
            ExpVec r(static_cast<size_t>(n), 0);
            if (rng.flip()) r[static_cast<size_t>(rng.uniform(0, n - 1))]++;
            return zoo::b_p(n, i, k, j, omega(n, r));
        }
        case 3: {
            idx2(i, j);
            ExpVec r(static_cast<size_t>(n), 0);
            if (rng.flip()) r[static_cast<size_t>(rng.uniform(0, n - 1))]++;
            return zoo::b_q(n, i, j, omega(n, r));
        }
        case 4: {
            Rng sub(rng.g());
            return zoo::xi(random_depth_elt(n, rng.uniform(1, 3), sub));
        }
        case 5:
            idx2(i, j);
            return zoo::pi(n, i, j);
        case 6:
            idx2(i, j);
            return zoo::sigma(n, i, j);
        case 7:
            return zoo::beta(n);
        case 8:
            if (n >= 3) return zoo::mu(n);
            [[fallthrough]];
        default: {
            if (n >= 4 && rng.flip()) return zoo::psi1(n, rng.uniform(0, 2));
            ExpVec r(static_cast<size_t>(n), 0);
            if (rng.flip()) r[static_cast<size_t>(rng.uniform(0, n - 1))]++;
            return n >= 3 ? zoo::delta(n, r) : zoo::pi(n, 0, 1);
        }
    }
}

}  // namespace

Verdict check_inverse_roundtrip(int n, int samples, int max_len, unsigned long long seed) {
    std::ostringstream ps;
    ps << "n=" << n << " samples=" << samples << " max-len=" << max_len;
    Verdict v = make("inverse-roundtrip", ps.str());
    Rng rng(seed ^ fnv("inverse-roundtrip"));
    const Endo id = endo_identity(n);
    for (int s = 0; s < samples; ++s) {
        Endo f = random_zoo_factor(n, rng);
        int len = rng.uniform(1, max_len);
        for (int t = 1; t < len; ++t) {
            Endo g = random_zoo_factor(n, rng);
            if (rng.flip()) g = inverse(g);
            f = compose(f, g);
        }
        Endo fi = inverse(f);
        if (!(compose(f, fi) == id) || !(compose(fi, f) == id))
            return fail(v, "sample " + std::to_string(s) + ": f composed with its inverse is not the identity");
    }
    return v;
}

Verdict check_tau_depth(int n, int c_max) {
    Verdict v = make("tau-depth", "n=" + std::to_string(n) + " c=2.." + std::to_string(c_max));
    Rng rng(fnv("tau-depth"));
    for (int w = 2; w <= c_max; ++w) {
        for (int rep = 0; rep < 3; ++rep) {
            int i = rng.uniform(0, n - 1);
            std::vector<int> seq;
            while (int(seq.size()) < w) {
                int k = rng.uniform(0, n - 1);
                if (k == i || (seq.size() == 1 && k == seq[0])) continue;
                seq.push_back(k);
            }
            if (ia_depth(zoo::tau(n, i, seq)) != w)
                return fail(v, "tau weight " + std::to_string(w) + " has wrong depth");
        }
        ExpVec r(static_cast<size_t>(n), 0);
        for (int t = 0; t < w - 2; ++t) r[static_cast<size_t>(rng.uniform(0, n - 1))]++;
        if (n >= 3 && ia_depth(zoo::tau_p(n, 0, 1, 2, r)) != w)
            return fail(v, "tauP at " + rstr(r) + " has wrong depth");
        if (n >= 3 && ia_depth(zoo::b_p(n, 0, 2, 1, omega(n, r))) != w)
            return fail(v, "B_P at " + rstr(r) + " has wrong depth");
        if (n >= 3 && ia_depth(zoo::delta(n, r)) != w)
            return fail(v, "delta at " + rstr(r) + " has wrong depth");
        if (w >= 3) {
            ExpVec q(static_cast<size_t>(n), 0);
            for (int t = 0; t < w - 3; ++t) q[static_cast<size_t>(rng.uniform(0, n - 1))]++;
            if (ia_depth(zoo::b_q(n, 0, 1, omega(n, q))) != w)
                return fail(v, "B_Q at " + rstr(q) + " has wrong depth");
        }
        if (n >= 4 && ia_depth(zoo::psi1(n, w - 2)) != w)
            return fail(v, "psi_1," + std::to_string(w - 2) + " has wrong depth");
    }
    return v;
}

Verdict check_inner_depth(int n, int samples, unsigned long long seed) {
    Verdict v = make("inner-depth", "n=" + std::to_string(n) + " samples=" + std::to_string(samples));
    Rng rng(seed ^ fnv("inner-depth"));
    if (ia_depth(inner(elt_one(n))) != kInf) return fail(v, "inner of the identity is not the identity");
    for (int s = 0; s < samples; ++s) {
        int d = rng.uniform(1, 5);
        Elt w = random_depth_elt(n, d, rng);
        if (gamma_depth(w) != d) return fail(v, "sampler produced wrong depth " + std::to_string(d));
        int got = ia_depth(inner(w));
        if (got != d + 1) {
            std::ostringstream os;
            os << "conjugation by a depth-" << d << " element has depth " << got;
            return fail(v, os.str());
        }
    }
    return v;
}

Verdict check_mu_depth(int n) {
    Verdict v = make("mu-depth", "n=" + std::to_string(n));
    if (n < 3) return skip(v, "mu needs three generators");
    Endo m = zoo::mu(n);
    if (!is_automorphism(m)) return fail(v, "mu rejected by the invertibility test");
    int d = ia_depth(m);
    if (d != 4) return fail(v, "depth " + std::to_string(d) + ", expected 4");
    return v;
}

Verdict check_group_laws(const std::string& which, int n, int samples, unsigned long long seed) {
    Verdict v = make(which, "n=" + std::to_string(n) + " samples=" + std::to_string(samples));
    Rng rng(seed ^ fnv(which));
    auto rw = [&]() { return random_word(n, rng.uniform(1, 5), rng); };
    if (which == "metabelian-law") {
        for (int s = 0; s < samples; ++s)
            if (!is_one(comm(comm(rw(), rw()), comm(rw(), rw()))))
                return fail(v, "[[u,v],[w,z]] != 1 at sample " + std::to_string(s));
        return v;
    }
    if (which == "jacobi-relation") {
        int done = 0;
        for (int i = 0; i < n && done < samples; ++i)
            for (int j = 0; j < n && done < samples; ++j)
                for (int k = 0; k < n && done < samples; ++k) {
                    if (i == j || j == k || i == k) continue;
                    ++done;
                    Elt t1 = module_pow(comm(elt_gen(n, i), elt_gen(n, j)), Poly::gen1(n, k));
                    Elt t2 = module_pow(comm(elt_gen(n, j), elt_gen(n, k)), Poly::gen1(n, i));
                    Elt t3 = module_pow(comm(elt_gen(n, k), elt_gen(n, i)), Poly::gen1(n, j));
                    if (!is_one(mul(mul(t1, t2), t3)))
                        return fail(v, "triple (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
                                           std::to_string(k + 1) + ")");
                }
        return v;
    }
    if (which == "product-expansion") {
        for (int s = 0; s < samples; ++s) {
            Elt a = rw(), b = rw(), c = rw(), d = rw();
            Elt lhs = comm(mul(a, b), mul(c, d));
            Elt r = comm(a, d);
            r = mul(r, comm(comm(a, d), b));
            r = mul(r, comm(b, d));
            r = mul(r, comm(a, c));
            r = mul(r, comm(comm(a, c), mul(b, d)));
            r = mul(r, comm(b, c));
            r = mul(r, comm(comm(b, c), d));
            if (!(lhs == r)) return fail(v, "expansion of [ab,cd] fails at sample " + std::to_string(s));
        }
        return v;
    }
    if (which == "stabilized-pair") {
        for (int s = 0; s < samples; ++s) {
            Elt x = rw(), y = rw(), z = rw();
            Elt lhs = comm(mul(x, comm(x, z)), mul(y, comm(y, z)));
            Elt rhs = mul(comm(x, y), comm(comm(x, y), z));
            if (!(lhs == rhs)) return fail(v, "[x[x,z],y[y,z]] != [x,y][x,y,z] at sample " + std::to_string(s));
        }
        return v;
    }
    return fail(v, "unknown law id");
}

Verdict check_filtration_bracket(int n, int pairs, unsigned long long seed) {
    Verdict v = make("filtration-bracket", "n=" + std::to_string(n) + " pairs=" + std::to_string(pairs));
    Rng rng(seed ^ fnv("filtration-bracket"));
    for (int s = 0; s < pairs; ++s) {
        int t = rng.uniform(2, 4), u = rng.uniform(2, 4);
        Endo f = random_ia(n, t, rng), g = random_ia(n, u, rng);
        int df = ia_depth(f), dg = ia_depth(g);
        if (df < t || dg < u) return fail(v, "sampler produced a shallow automorphism");
        int got = ia_depth(endo_comm(f, g));
        if (got < t + u - 1) {
            std::ostringstream os;
            os << "depths (" << df << "," << dg << ") bracket to depth " << got << " < " << t + u - 1;
            return fail(v, os.str());
        }
    }
    return v;
}

Verdict check_gamma_in_ia(int n, int depth, int samples, unsigned long long seed) {
    Verdict v = make("gamma-in-ia", "n=" + std::to_string(n) + " weight=" + std::to_string(depth) +
                                        " samples=" + std::to_string(samples));
    Rng rng(seed ^ fnv("gamma-in-ia"));
    for (int s = 0; s < samples; ++s) {
        Endo w = random_ia(n, 2, rng);
        for (int t = 2; t <= depth; ++t) w = endo_comm(w, random_ia(n, 2, rng));
        int got = ia_depth(w);
        if (got < depth + 1)
            return fail(v, "weight-" + std::to_string(depth) + " commutator has depth " + std::to_string(got));
    }
    return v;
}

Verdict check_star_lift(int n, int c, int samples, unsigned long long seed) {
    Verdict v = make("star-lift", "n=" + std::to_string(n) + " c=" + std::to_string(c) +
                                      " samples=" + std::to_string(samples));
    Rng rng(seed ^ fnv("star-lift"));
    auto gens = gl_generators(n);
    for (int s = 0; s < samples; ++s) {
        IntMat g = gens[static_cast<size_t>(rng.uniform(0, int(gens.size()) - 1))];
        if (rng.flip()) g = mat_mul(g, gens[static_cast<size_t>(rng.uniform(0, int(gens.size()) - 1))]);
        Endo t1 = tame_lift(g);
        Endo t2 = compose(t1, random_ia(n, 2, rng));
        Endo f = random_ia(n, c, rng);
        Endo r1 = compose(t1, compose(f, inverse(t1)));
        Endo r2 = compose(t2, compose(f, inverse(t2)));
        int d = ia_depth(compose(r1, inverse(r2)));
        if (d < c + 1)
            return fail(v, "two lifts of the same matrix act differently at depth " + std::to_string(d));
    }
    return v;
}

Verdict check_chi_kernel(int n, int c, int samples, unsigned long long seed) {
    Verdict v = make("chi-kernel", "n=" + std::to_string(n) + " c=" + std::to_string(c) +
                                       " samples=" + std::to_string(samples));
    Rng rng(seed ^ fnv("chi-kernel"));
    auto all_zero = [](const GrTuple& t) {
        for (const auto& g : t)
            if (!g.is_zero()) return false;
        return true;
    };
    for (int s = 0; s < samples; ++s) {
        Endo f;
        switch (rng.uniform(0, 3)) {
            case 0: f = random_ia(n, c, rng); break;
            case 1: f = random_ia(n, c + 1, rng); break;
            case 2: f = endo_comm(random_ia(n, c, rng), random_ia(n, 2, rng)); break;
            default: f = compose(random_ia(n, c, rng), random_ia(n, c, rng)); break;
        }
        int d = ia_depth(f);
        if (d < c) return fail(v, "sampler produced a shallow automorphism");
        bool zero = all_zero(chi(f, c));
        if (zero != (d >= c + 1)) {
            std::ostringstream os;
            os << "sample " << s << ": chi " << (zero ? "vanishes" : "is nonzero")
               << " but the depth is " << d;
            return fail(v, os.str());
        }
    }
    for (int s = 0; s < 5; ++s) {
        Endo f = random_ia(n, c, rng), g = random_ia(n, c, rng);
        if (!tuple_eq(chi(compose(f, g), c), tuple_add(chi(f, c), chi(g, c))))
            return fail(v, "chi is not additive on a level-" + std::to_string(c) + " pair");
    }
    return v;
}

Verdict check_chi_equivariance(int n, int c, int samples, unsigned long long seed) {
    Verdict v = make("chi-equivariance", "n=" + std::to_string(n) + " c=" + std::to_string(c) +
                                             " samples=" + std::to_string(samples));
    Rng rng(seed ^ fnv("chi-equivariance"));
    auto gens = gl_generators(n);
    for (int s = 0; s < samples; ++s) {
        IntMat g = IntMat::identity(n);
        int len = rng.uniform(1, 3);
        for (int t = 0; t < len; ++t)
            g = mat_mul(g, gens[static_cast<size_t>(rng.uniform(0, int(gens.size()) - 1))]);
        Endo f = random_ia(n, c, rng);
        GrTuple lhs = chi(star_rep(g, f), c);
        GrTuple rhs = bullet(g, chi(f, c));
        if (!tuple_eq(lhs, rhs)) {
            std::ostringstream os;
            os << "sample " << s << ": chi(g*f) = " << chi_str(lhs) << " but g.chi(f) = " << chi_str(rhs);
            return fail(v, os.str());
        }
    }
    return v;
}

Verdict check_delta_form(int n, int c) {
    auto cases = compositions(n, c - 2);
    std::ostringstream ps;
    ps << "n=" << n << " c=" << c << " cases=" << cases.size();
    Verdict v = make("delta-form", ps.str());
    if (n < 3) return skip(v, "delta needs three generators");
    if (c < 2) return skip(v, "no admissible tuples");
    bool all_second = true, all_third = true;
    std::string first_second_fail, first_third_fail;
    for (const auto& r : cases) {
        if (!is_automorphism(zoo::delta(n, r))) return fail(v, "delta at " + rstr(r) + " is not invertible");
        auto rep = zoo::delta_product_form(n, r);
        if (!rep.second_inverted && all_second) {
            all_second = false;
            first_second_fail = rstr(r);
        }
        if (!rep.third_inverted && all_third) {
            all_third = false;
            first_third_fail = rstr(r);
        }
    }
    if (all_second) return v;
    if (all_third) {
        v.variant = "tau123-inverted";
        v.witness = "product with the middle factor inverted fails first at r=" + first_second_fail +
                    "; inverting the last factor instead matches the printed images";
        return v;
    }
    return fail(v, "neither product form matches the printed images; middle-inverted fails at r=" +
                       first_second_fail + ", last-inverted fails at r=" + first_third_fail);
}

Verdict check_rank_closure(int n, int c, bool with_total, bool parallel) {
    Verdict v = make("rank-closure", "n=" + std::to_string(n) + " c=" + std::to_string(c));
    if (n > 4 || c < 3 || c > 4) return skip(v, "outside the span envelope");
    std::vector<GrTuple> pq;
    for (int i = 0; i < n; ++i) {
        for (const auto& b : basis(n, c)) {
            if (std::find(b.idx.begin(), b.idx.end(), i) != b.idx.end()) continue;
            GrTuple t = tuple_zero(n, c);
            t[static_cast<size_t>(i)].coef[b.idx] = 1;
            pq.push_back(std::move(t));
        }
    }
    for (const auto& u : basis(n, c - 1)) {
        GrTuple t = tuple_zero(n, c);
        for (int i = 0; i < n; ++i) {
            std::vector<int> seq = u.idx;
            seq.push_back(i);
            t[static_cast<size_t>(i)] = gv_scale(-1, lie_nf(n, c, seq));
        }
        pq.push_back(std::move(t));
    }
    GrTuple rseed = tuple_zero(n, c);
    for (int j = 1; j < n; ++j) {
        std::vector<int> seq(static_cast<size_t>(c), 0);
        seq[0] = j;
        rseed[static_cast<size_t>(j)] = lie_nf(n, c, seq);
    }
    auto dim = [&](const std::vector<GrTuple>& seeds) {
        return parallel ? span_dim(n, c, seeds) : span_dim_serial(n, c, seeds);
    };
    int got_pq = dim(pq);
    if (rank_layer_aut(n, c) != got_pq)
        return fail(v, "closure of the tame orbit spans " + std::to_string(got_pq) + " dimensions, formula gives " +
                           rank_layer_aut(n, c).get_str());
    int got_r = dim({rseed});
    if (rank_layer_complement(n, c) != got_r)
        return fail(v, "closure of the complement seed spans " + std::to_string(got_r) +
                           " dimensions, formula gives " + rank_layer_complement(n, c).get_str());
    std::string dims = "aut layer " + std::to_string(got_pq) + ", complement " + std::to_string(got_r);
    if (with_total) {
        std::vector<GrTuple> all = pq;
        all.push_back(rseed);
        int got_all = dim(all);
        if (rank_layer_total(n, c) != got_all)
            return fail(v, "combined closure spans " + std::to_string(got_all) + " dimensions, formula gives " +
                               rank_layer_total(n, c).get_str());
        dims += ", total " + std::to_string(got_all);
    }
    v.witness = dims;
    return v;
}

// ---------------------------------------------------------------------------
// explicit lower-central witnesses

namespace {

Endo tau1_witness(int n, const std::vector<int>& seq) {
    if (seq.size() == 2) return zoo::tau(n, 0, seq);
    if (seq[0] != seq[2]) {
        std::vector<int> rest;
        rest.push_back(seq[0]);
        rest.insert(rest.end(), seq.begin() + 2, seq.end());
        return endo_comm(inverse(zoo::pi(n, seq[0], seq[1])), inverse(tau1_witness(n, rest)));
    }
    std::vector<int> rest;
    rest.push_back(seq[1]);
    rest.push_back(seq[0]);
    rest.insert(rest.end(), seq.begin() + 3, seq.end());
    return endo_comm(inverse(tau1_witness(n, rest)), inverse(zoo::pi(n, seq[1], seq[0])));
}

Endo tau_witness(int n, const ExpVec& r) {
    if (r[0] == 0) {
        // the bracket word avoids x_1, so the two-index recursion applies
        std::vector<int> seq = {1, 2};
        for (int t = 1; t < n; ++t)
            for (int k = 0; k < r[static_cast<size_t>(t)]; ++k) seq.push_back(t);
        return tau1_witness(n, seq);
    }
    Endo w0 = endo_comm(zoo::pi(n, 0, n - 1),
                        endo_conj(inverse(zoo::psi1(n, r[0] - 1)), zoo::sigma(n, 0, n - 1)));
    Endo w = inverse(w0);
    for (int j = n - 1; j >= 3; --j) w = iter_comm(w, rho_inv(n, j), r[static_cast<size_t>(j)]);
    w = iter_comm(w, inverse(zoo::pi(n, 1, 2)), r[2]);
    w = iter_comm(w, inverse(zoo::pi(n, 2, 1)), r[1]);
    return inverse(w);
}

Endo xi_witness(int n, const std::vector<int>& idx) {
    Endo w = endo_comm(inner(elt_gen(n, idx[1], -1)), inner(elt_gen(n, idx[0], -1)));
    for (size_t t = 2; t < idx.size(); ++t)
        w = endo_comm(inner(elt_gen(n, idx[t], -1)), inverse(w));
    return w;
}

}  // namespace

Verdict check_witnesses(int n, int c) {
    Verdict v = make("depth-witness", "n=" + std::to_string(n) + " c=" + std::to_string(c));
    if (n < 4) return skip(v, "witness constructions need four generators");
    if (c < 3) return skip(v, "no witness families below weight 3");
    int tau_total = 0, tau_exact = 0, xi_total = 0, xi_exact = 0;
    for (const auto& r : compositions(n, c - 2)) {
        Endo target = zoo::tau_p(n, 0, 1, 2, r);
        Endo w = tau_witness(n, r);
        ++tau_total;
        if (w == target) {
            ++tau_exact;
            continue;
        }
        int d = ia_depth(compose(w, inverse(target)));
        if (d < c + 1)
            return fail(v, "tau witness at r=" + rstr(r) + " deviates at depth " + std::to_string(d));
    }
    for (const auto& b : basis(n, c - 1)) {
        Endo target = inner(to_elt(n, b));
        Endo w = xi_witness(n, b.idx);
        ++xi_total;
        if (w == target) {
            ++xi_exact;
            continue;
        }
        int d = ia_depth(compose(w, inverse(target)));
        if (d < c + 1)
            return fail(v, "conjugation witness at " + seqstr(b.idx) + " deviates at depth " + std::to_string(d));
    }
    std::ostringstream os;
    os << "exact for " << tau_exact << "/" << tau_total << " tau and " << xi_exact << "/" << xi_total
       << " conjugation targets";
    v.witness = os.str();
    return v;
}

// ---------------------------------------------------------------------------
// printed product identities

namespace {

struct EqCase {
    std::string label;
    std::function<std::pair<Endo, Endo>(int)> build;  // variant index -> (lhs, rhs)
    int level;                                        // identity lives at weight `level`
};

struct Family {
    std::string id;
    std::string params;
    bool exact_primary = false;  // variant 0 demands literal equality
    std::vector<std::string> variants;
    std::vector<EqCase> cases;
};

std::string discrepancy(const Endo& l, const Endo& r, int& depth_out) {
    Endo g = compose(l, inverse(r));
    int d = ia_depth(g);
    depth_out = d;
    if (d == kInf) return "none";
    std::ostringstream os;
    os << "depth " << d << ", class " << chi_str(chi(g, d));
    return os.str();
}

Verdict run_family(const Family& fam) {
    Verdict v = make(fam.id, fam.params + " cases=" + std::to_string(fam.cases.size()));
    if (fam.cases.empty()) return v;
    std::string primary_note;
    for (size_t vi = 0; vi < fam.variants.size(); ++vi) {
        bool all = true;
        for (const auto& cs : fam.cases) {
            auto [l, r] = cs.build(static_cast<int>(vi));
            bool ok;
            int d = kInf;
            std::string note;
            if (fam.exact_primary && vi == 0) {
                ok = l == r;
                if (!ok) note = discrepancy(l, r, d);
            } else {
                note = discrepancy(l, r, d);
                ok = d >= cs.level + 1;
            }
            if (!ok) {
                if (vi == 0) primary_note = cs.label + ": " + note;
                all = false;
                break;
            }
        }
        if (all) {
            if (vi > 0) {
                v.variant = fam.variants[vi];
                v.witness = "printed reading fails first at " + primary_note;
            }
            return v;
        }
    }
    return fail(v, primary_note.empty() ? "no declared reading holds" : primary_note);
}

Endo star_beta(int n, const Endo& f, bool swapped) {
    Endo b = zoo::beta(n);
    Endo bi = inverse(b);
    return swapped ? compose(b, compose(f, bi)) : compose(bi, compose(f, b));
}

const std::vector<std::string> kDeltaVariants = {"as-printed", "beta-conj-swapped", "delta-inverted",
                                                 "delta-inverted+beta-conj-swapped"};
const std::vector<std::string> kExactVariants = {"exact", "congruence"};

Family fam_xi_tau_product(int n, int c) {
    Family F{"eq-xi-tau-product", "n=" + std::to_string(n) + " c=" + std::to_string(c), false,
             {"as-printed", "rhs-inverted", "tau-direct"}, {}};
    if (n < 3 || c < 3) return F;
    for (const auto& s : compositions(n, c - 3)) {
        F.cases.push_back({"s=" + rstr(s),
                           [n, s](int vi) {
                               Elt u = module_pow(comm(elt_gen(n, 0), elt_gen(n, 1)), omega(n, s));
                               Endo lhs = zoo::xi(u);
                               for (int lam = 2; lam < n; ++lam) {
                                   ExpVec s2 = s;
                                   s2[static_cast<size_t>(lam)]++;
                                   Endo t = zoo::tau_p(n, lam, 0, 1, s2);
                                   lhs = compose(lhs, vi == 2 ? t : inverse(t));
                               }
                               Endo rhs = zoo::b_q(n, 0, 1, omega(n, s));
                               if (vi == 1) rhs = inverse(rhs);
                               return std::make_pair(lhs, rhs);
                           },
                           c});
    }
    return F;
}

Family fam_delta_base(int n, int c) {
    Family F{"eq-delta-base", "n=" + std::to_string(n) + " c=" + std::to_string(c), false, kDeltaVariants, {}};
    if (n < 3 || c < 2) return F;
    for (const auto& r : compositions(n, c - 2)) {
        if (r[1] != 0) continue;
        F.cases.push_back({"r=" + rstr(r),
                           [n, r, c](int vi) {
                               bool bswap = vi & 1, dinv = vi & 2;
                               Endo t123 = zoo::tau_p(n, 0, 1, 2, r);
                               Endo t213 = zoo::tau_p(n, 1, 0, 2, r);
                               Endo lhs = compose(compose(t213, inverse(t123)), star_beta(n, t123, bswap));
                               Endo rhs = zoo::delta(n, r);
                               if (dinv) rhs = inverse(rhs);
                               return std::make_pair(lhs, rhs);
                           },
                           c});
    }
    return F;
}

Family fam_delta_step_one(int n, int c) {
    Family F{"eq-delta-step-one", "n=" + std::to_string(n) + " c=" + std::to_string(c), false, kDeltaVariants, {}};
    if (n < 3 || c < 3) return F;
    for (const auto& r : compositions(n, c - 2)) {
        if (r[1] != 1) continue;
        F.cases.push_back({"r=" + rstr(r),
                           [n, r, c](int vi) {
                               bool bswap = vi & 1, dinv = vi & 2;
                               ExpVec r2 = r;
                               r2[0]++;
                               r2[1] = 0;
                               Endo phi11 = compose(inverse(zoo::tau_p(n, 0, 1, 2, r)),
                                                    inverse(zoo::tau_p(n, 0, 1, 2, r2)));
                               Endo phi21 = compose(zoo::tau_p(n, 1, 0, 2, r), zoo::tau_p(n, 1, 0, 2, r2));
                               Endo d2 = zoo::delta(n, r2);
                               Endo dr = zoo::delta(n, r);
                               if (dinv) {
                                   d2 = inverse(d2);
                                   dr = inverse(dr);
                               }
                               Endo lhs = compose(compose(compose(inverse(d2), phi21), phi11),
                                                  star_beta(n, zoo::tau_p(n, 0, 1, 2, r), bswap));
                               return std::make_pair(lhs, dr);
                           },
                           c});
    }
    return F;
}

Family fam_delta_step(int n, int c) {
    Family F{"eq-delta-step", "n=" + std::to_string(n) + " c=" + std::to_string(c), false, kDeltaVariants, {}};
    if (n < 3 || c < 4) return F;
    for (const auto& r : compositions(n, c - 2)) {
        if (r[1] < 2) continue;
        F.cases.push_back({"r=" + rstr(r),
                           [n, r, c](int vi) {
                               bool bswap = vi & 1, dinv = vi & 2;
                               const int r1 = r[0], r2 = r[1];
                               Endo bq = endo_identity(n);
                               for (int k = 1; k <= r2 - 1; ++k) {
                                   ExpVec q = r;
                                   q[0] = r1 + k - 1;
                                   q[1] = r2 - k - 1;
                                   q[2]++;
                                   bq = compose(bq, zoo::b_q(n, 0, 1, omega(n, q)));
                               }
                               Endo p11 = endo_identity(n), p22 = endo_identity(n);
                               for (int k = 1; k <= r2 - 1; ++k) {
                                   ExpVec t = r;
                                   t[0] = r1 + k + 1;
                                   t[1] = r2 - k - 1;
                                   p11 = compose(p11, inverse(zoo::tau_p(n, 0, 1, 2, t)));
                                   t[0] = r1 + k - 1;
                                   t[1] = r2 - k + 1;
                                   p22 = compose(p22, zoo::tau_p(n, 1, 0, 2, t));
                               }
                               Endo p13 = endo_identity(n), p24 = endo_identity(n);
                               for (int k = 0; k <= r2; ++k) {
                                   ExpVec t = r;
                                   t[0] = r1 + k;
                                   t[1] = r2 - k;
                                   p13 = compose(p13, inverse(zoo::tau_p(n, 0, 1, 2, t)));
                                   p24 = compose(p24, zoo::tau_p(n, 1, 0, 2, t));
                               }
                               ExpVec rm = r;
                               rm[0] = r1 + r2;
                               rm[1] = 0;
                               Endo dm = zoo::delta(n, rm);
                               Endo dr = zoo::delta(n, r);
                               if (dinv) {
                                   dm = inverse(dm);
                                   dr = inverse(dr);
                               }
                               Endo lhs = compose(bq, p22);
                               lhs = compose(lhs, p11);
                               lhs = compose(lhs, inverse(dm));
                               lhs = compose(lhs, p24);
                               lhs = compose(lhs, p13);
                               lhs = compose(lhs, star_beta(n, zoo::tau_p(n, 0, 1, 2, r), bswap));
                               return std::make_pair(lhs, dr);
                           },
                           c});
    }
    return F;
}

Family fam_taup_base(int n, int c) {
    Family F{"eq-taup-base", "n=" + std::to_string(n) + " c=" + std::to_string(c), true, kExactVariants, {}};
    if (n < 4 || c < 3) return F;
    ExpVec r(static_cast<size_t>(n), 0);
    r[0] = c - 2;
    F.cases.push_back({"r=" + rstr(r),
                       [n, r, c](int) {
                           Endo lhs = zoo::tau_p(n, 0, 1, 2, r);
                           Endo rhs = endo_comm(zoo::pi(n, 0, n - 1),
                                                endo_conj(inverse(zoo::psi1(n, r[0] - 1)),
                                                          zoo::sigma(n, 0, n - 1)));
                           return std::make_pair(lhs, rhs);
                       },
                       c});
    return F;
}

Family fam_taup_append_last(int n, int c) {
    Family F{"eq-taup-append-last", "n=" + std::to_string(n) + " c=" + std::to_string(c), true, kExactVariants, {}};
    if (n < 4 || c < 3) return F;
    for (int s1 = 0; s1 + 1 <= c - 2; ++s1) {
        int sn = c - 2 - (s1 + 1);
        ExpVec full(static_cast<size_t>(n), 0);
        full[0] = s1 + 1;
        full[static_cast<size_t>(n - 1)] = sn;
        ExpVec base(static_cast<size_t>(n), 0);
        base[0] = s1 + 1;
        F.cases.push_back({"r=" + rstr(full),
                           [n, full, base, sn](int) {
                               Endo lhs = inverse(zoo::tau_p(n, 0, 1, 2, full));
                               Endo rhs = iter_comm(inverse(zoo::tau_p(n, 0, 1, 2, base)), rho_inv(n, n - 1), sn);
                               return std::make_pair(lhs, rhs);
                           },
                           c});
    }
    return F;
}

Family fam_taup_append_mid(int n, int c) {
    Family F{"eq-taup-append-mid", "n=" + std::to_string(n) + " c=" + std::to_string(c), true, kExactVariants, {}};
    if (n < 4 || c < 3) return F;
    for (int j = 3; j <= n - 2; ++j) {
        for (const auto& t : compositions(n, c - 2)) {
            if (t[0] < 1) continue;
            bool zeros = true;
            for (int k = 1; k < j; ++k)
                if (t[static_cast<size_t>(k)] != 0) zeros = false;
            if (!zeros) continue;
            ExpVec innr = t;
            innr[static_cast<size_t>(j)] = 0;
            int sj = t[static_cast<size_t>(j)];
            F.cases.push_back({"j=" + std::to_string(j + 1) + " r=" + rstr(t),
                               [n, t, innr, sj, j](int) {
                                   Endo lhs = inverse(zoo::tau_p(n, 0, 1, 2, t));
                                   Endo rhs = iter_comm(inverse(zoo::tau_p(n, 0, 1, 2, innr)), rho_inv(n, j), sj);
                                   return std::make_pair(lhs, rhs);
                               },
                               c});
        }
    }
    return F;
}

Family fam_taup_append_third(int n, int c) {
    Family F{"eq-taup-append-third", "n=" + std::to_string(n) + " c=" + std::to_string(c), true, kExactVariants, {}};
    if (n < 4 || c < 3) return F;
    for (const auto& t : compositions(n, c - 2)) {
        if (t[0] < 1 || t[1] != 0) continue;
        ExpVec innr = t;
        innr[2] = 0;
        int s3 = t[2];
        F.cases.push_back({"r=" + rstr(t),
                           [n, t, innr, s3](int) {
                               Endo lhs = inverse(zoo::tau_p(n, 0, 1, 2, t));
                               Endo rhs = iter_comm(inverse(zoo::tau_p(n, 0, 1, 2, innr)),
                                                    inverse(zoo::pi(n, 1, 2)), s3);
                               return std::make_pair(lhs, rhs);
                           },
                           c});
    }
    return F;
}

Family fam_taup_append_second(int n, int c) {
    Family F{"eq-taup-append-second", "n=" + std::to_string(n) + " c=" + std::to_string(c), true, kExactVariants, {}};
    if (n < 4 || c < 3) return F;
    for (const auto& t : compositions(n, c - 2)) {
        if (t[0] < 1) continue;
        ExpVec innr = t;
        innr[1] = 0;
        int s2 = t[1];
        F.cases.push_back({"r=" + rstr(t),
                           [n, t, innr, s2](int) {
                               Endo lhs = inverse(zoo::tau_p(n, 0, 1, 2, t));
                               Endo rhs = iter_comm(inverse(zoo::tau_p(n, 0, 1, 2, innr)),
                                                    inverse(zoo::pi(n, 2, 1)), s2);
                               return std::make_pair(lhs, rhs);
                           },
                           c});
    }
    return F;
}

Family fam_taup_chain(int n, int c) {
    Family F{"eq-taup-chain", "n=" + std::to_string(n) + " c=" + std::to_string(c), true, kExactVariants, {}};
    if (n < 4 || c < 3) return F;
    for (const auto& t : compositions(n, c - 2)) {
        if (t[0] < 1) continue;
        F.cases.push_back({"r=" + rstr(t),
                           [n, t](int) {
                               ExpVec base(static_cast<size_t>(n), 0);
                               base[0] = t[0];
                               Endo w = inverse(zoo::tau_p(n, 0, 1, 2, base));
                               for (int j = n - 1; j >= 3; --j)
                                   w = iter_comm(w, rho_inv(n, j), t[static_cast<size_t>(j)]);
                               w = iter_comm(w, inverse(zoo::pi(n, 1, 2)), t[2]);
                               w = iter_comm(w, inverse(zoo::pi(n, 2, 1)), t[1]);
                               return std::make_pair(inverse(zoo::tau_p(n, 0, 1, 2, t)), w);
                           },
                           c});
    }
    return F;
}

void enum_seqs(int n, int len, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (int(cur.size()) == len) {
        out.push_back(cur);
        return;
    }
    for (int k = 1; k < n; ++k) {
        if (cur.size() == 1 && k == cur[0]) continue;
        cur.push_back(k);
        enum_seqs(n, len, cur, out);
        cur.pop_back();
    }
}

Family fam_tau_recursion(int n, int c, bool case_b) {
    Family F{case_b ? "eq-tau-recursion-b" : "eq-tau-recursion-a",
             "n=" + std::to_string(n) + " c=" + std::to_string(c), true, kExactVariants, {}};
    if (n < 3 || c < 3) return F;
    std::vector<std::vector<int>> seqs;
    std::vector<int> cur;
    enum_seqs(n, c, cur, seqs);
    for (const auto& seq : seqs) {
        if ((seq[0] == seq[2]) != case_b) continue;
        F.cases.push_back({"k=" + seqstr(seq),
                           [n, seq, case_b](int) {
                               Endo lhs = zoo::tau(n, 0, seq);
                               Endo rhs;
                               if (!case_b) {
                                   std::vector<int> rest;
                                   rest.push_back(seq[0]);
                                   rest.insert(rest.end(), seq.begin() + 2, seq.end());
                                   rhs = endo_comm(inverse(zoo::pi(n, seq[0], seq[1])),
                                                   inverse(zoo::tau(n, 0, rest)));
                               } else {
                                   std::vector<int> rest;
                                   rest.push_back(seq[1]);
                                   rest.push_back(seq[0]);
                                   rest.insert(rest.end(), seq.begin() + 3, seq.end());
                                   rhs = endo_comm(inverse(zoo::tau(n, 0, rest)),
                                                   inverse(zoo::pi(n, seq[1], seq[0])));
                               }
                               return std::make_pair(lhs, rhs);
                           },
                           c});
    }
    return F;
}

}  // namespace

std::vector<Verdict> check_equations(int n, int c) {
    std::vector<Family> fams;
    fams.push_back(fam_xi_tau_product(n, c));
    fams.push_back(fam_delta_base(n, c));
    fams.push_back(fam_delta_step_one(n, c));
    fams.push_back(fam_delta_step(n, c));
    fams.push_back(fam_taup_base(n, c));
    fams.push_back(fam_taup_append_last(n, c));
    fams.push_back(fam_taup_append_mid(n, c));
    fams.push_back(fam_taup_append_third(n, c));
    fams.push_back(fam_taup_append_second(n, c));
    fams.push_back(fam_taup_chain(n, c));
    fams.push_back(fam_tau_recursion(n, c, false));
    fams.push_back(fam_tau_recursion(n, c, true));
    std::vector<Verdict> out;
    out.reserve(fams.size());
    for (const auto& f : fams) out.push_back(run_family(f));
    return out;
}

SuiteResult run_suite(const SuiteConfig& cfg) {
    const int n = cfg.n, c = cfg.c;
    const unsigned long long seed = cfg.seed;
    using Task = std::function<std::vector<Verdict>()>;
    std::vector<Task> tasks;
    auto one = [&tasks](std::function<Verdict()> f) {
        tasks.push_back([f]() { return std::vector<Verdict>{f()}; });
    };
    one([=] { return check_basis_ranks(2, 6, 2, 7); });
    one([=] { return check_fox_goldens(n); });
    one([=] { return check_determinants(n, c); });
    one([=] { return check_inverse_roundtrip(n, 25, 4, seed); });
    one([=] { return check_tau_depth(n, std::min(c + 2, 6)); });
    one([=] { return check_inner_depth(n, 50, seed); });
    one([=] { return check_mu_depth(n); });
    for (const char* law : {"metabelian-law", "jacobi-relation", "product-expansion", "stabilized-pair"}) {
        std::string id = law;
        one([=] { return check_group_laws(id, n, 50, seed); });
    }
    one([=] { return check_filtration_bracket(n, 25, seed); });
    one([=] { return check_gamma_in_ia(n, c, 10, seed); });
    one([=] { return check_star_lift(n, c, 10, seed); });
    one([=] { return check_chi_kernel(n, c, 20, seed); });
    one([=] { return check_chi_equivariance(n, c, 20, seed); });
    one([=] { return check_delta_form(n, c); });
    one([=] { return check_rank_closure(n, c, c == 3, cfg.parallel); });
    one([=] { return check_witnesses(n, c); });
    tasks.push_back([=]() { return check_equations(n, c); });

    std::vector<std::vector<Verdict>> out(tasks.size());
    auto run_one = [&](size_t i) {
        auto t0 = std::chrono::steady_clock::now();
        std::vector<Verdict> got;
        try {
            got = tasks[i]();
        } catch (const std::exception& e) {
            Verdict v = make("internal", "task=" + std::to_string(i));
            got = {fail(v, std::string("exception: ") + e.what())};
        }
        if (cfg.timings) {
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
            for (auto& v : got) v.millis = static_cast<long long>(ms);
        }
        out[i] = std::move(got);
    };
#ifdef MBG_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic) if (cfg.parallel)
    for (long long i = 0; i < static_cast<long long>(tasks.size()); ++i)
        run_one(static_cast<size_t>(i));
#else
    for (size_t i = 0; i < tasks.size(); ++i) run_one(i);
#endif

    SuiteResult res;
    res.cfg = cfg;
    for (auto& vs : out)
        for (auto& v : vs) res.verdicts.push_back(std::move(v));
    std::stable_sort(res.verdicts.begin(), res.verdicts.end(),
                     [](const Verdict& a, const Verdict& b) { return a.check < b.check; });
    return res;
}

namespace {

const char* status_str(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        default: return "skipped";
    }
}

}  // namespace

std::string suite_json(const SuiteResult& r) {
    nlohmann::ordered_json j;
    j["suite"] = {{"n", r.cfg.n}, {"c", r.cfg.c}, {"seed", r.cfg.seed}};
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& v : r.verdicts) {
        nlohmann::ordered_json e;
        e["check"] = v.check;
        e["params"] = v.params;
        e["status"] = status_str(v.status);
        e["witness"] = v.witness;
        e["variant"] = v.variant;
        if (v.millis >= 0)
            e["millis"] = v.millis;
        else
            e["millis"] = nullptr;
        checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    int variants = 0;
    for (const auto& v : r.verdicts)
        if (!v.variant.empty()) ++variants;
    j["summary"] = {{"pass", r.count(Status::Pass)},
                    {"fail", r.count(Status::Fail)},
                    {"skipped", r.count(Status::Skip)},
                    {"variant_passes", variants},
                    {"ok", r.ok()}};
    return j.dump(2) + "\n";
}

std::string suite_text(const SuiteResult& r) {
    std::ostringstream os;
    for (const auto& v : r.verdicts) {
        std::string head = std::string("[") + status_str(v.status) + "]";
        os << head;
        for (size_t t = head.size(); t < 10; ++t) os << ' ';
        os << v.check;
        for (size_t t = v.check.size(); t < 26; ++t) os << ' ';
        os << v.params;
        if (!v.variant.empty()) os << "  variant=" << v.variant;
        if (!v.witness.empty()) os << "  :: " << v.witness;
        if (v.millis >= 0) os << "  (" << v.millis << " ms)";
        os << "\n";
    }
    os << "summary: pass=" << r.count(Status::Pass) << " fail=" << r.count(Status::Fail)
       << " skipped=" << r.count(Status::Skip) << (r.ok() ? " ok" : " FAILING") << "\n";
    return os.str();
}

}  // namespace mbg
