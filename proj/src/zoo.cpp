#include "mbg/zoo.hpp"

#include <algorithm>

namespace mbg::zoo {

namespace {

void need(bool ok, const char* what) {
    if (!ok) throw domain_error(what);
}

ExpVec shift3(int n, int i, int vi, int j, int vj, int k, int vk) {
    ExpVec e(n, 0);
    e[i] += vi;
    e[j] += vj;
    if (k >= 0) e[k] += vk;
    return e;
}

}  // namespace

Endo tau(int n, int i, const std::vector<int>& seq) {
    need(n >= 2 && i >= 0 && i < n, "tau: bad rank or index");
    need(seq.size() >= 2, "tau: bracket needs weight >= 2");
    need(seq[0] != seq[1], "tau: leading entries must differ");
    for (int v : seq) {
        need(v >= 0 && v < n, "tau: index out of range");
        need(v != i, "tau: moved generator may not appear in the bracket");
    }
    std::vector<Elt> ws;
    ws.reserve(seq.size());
    for (int v : seq) ws.push_back(elt_gen(n, v));
    Endo f = endo_identity(n);
    f.im[i] = mul(elt_gen(n, i), left_normed(ws));
    return endo_from_images(std::move(f.im));
}

Endo tau_p(int n, int i, int j, int k, const ExpVec& r) {
    need(n >= 2 && i >= 0 && i < n && j >= 0 && j < n && k >= 0 && k < n,
         "tau_p: index out of range");
    need(i != j && i != k && j != k, "tau_p: indices must be pairwise distinct");
    need(int(r.size()) == n, "tau_p: tuple length must equal the rank");
    for (int v : r) need(v >= 0, "tau_p: tuple entries must be non-negative");
    Endo f = endo_identity(n);
    Elt w = module_pow(comm(elt_gen(n, j), elt_gen(n, k)), omega(n, r));
    f.im[i] = mul(elt_gen(n, i), w);
    return endo_from_images(std::move(f.im));
}

Endo b_p(int n, int i, int k, int j, const Poly& p) {
    need(n >= 3, "b_p: need n >= 3");
    need(i != j && i != k && j != k, "b_p: indices must be pairwise distinct");
    need(i >= 0 && i < n && j >= 0 && j < n && k >= 0 && k < n, "b_p: index out of range");
    Elt cij = comm(elt_gen(n, i), elt_gen(n, j));
    Elt ckj = comm(elt_gen(n, k), elt_gen(n, j));
    Endo f = endo_identity(n);
    f.im[i] = mul(elt_gen(n, i), mul(module_pow(cij, p.mul_monomial(shift3(n, i, -1, j, -1, k, -1), 1)),
                                     module_pow(ckj, p.mul_monomial(shift3(n, k, -2, j, -1, -1, 0), 1))));
    f.im[k] = mul(elt_gen(n, k), mul(module_pow(cij, p.mul_monomial(shift3(n, i, -2, j, -1, -1, 0), -1)),
                                     module_pow(ckj, p.mul_monomial(shift3(n, i, -1, j, -1, k, -1), -1))));
    return endo_from_images(std::move(f.im));
}

Endo b_q(int n, int i, int j, const Poly& q) {
    need(n >= 2, "b_q: need n >= 2");
    need(i != j, "b_q: indices must differ");
    need(i >= 0 && i < n && j >= 0 && j < n, "b_q: index out of range");
    Elt cij = comm(elt_gen(n, i), elt_gen(n, j));
    ExpVec sh = shift3(n, i, -2, j, -2, -1, 0);
    Endo f = endo_identity(n);
    f.im[i] = mul(elt_gen(n, i), module_pow(cij, (q * Poly::gen1(n, i)).mul_monomial(sh, -1)));
    f.im[j] = mul(elt_gen(n, j), module_pow(cij, (q * Poly::gen1(n, j)).mul_monomial(sh, -1)));
    return endo_from_images(std::move(f.im));
}

Endo xi(const Elt& u) { return inner(u); }

Endo pi(int n, int i, int j) {
    need(i != j, "pi: indices must differ");
    need(i >= 0 && i < n && j >= 0 && j < n, "pi: index out of range");
    Endo f = endo_identity(n);
    f.im[i] = mul(elt_gen(n, i), comm(elt_gen(n, i), elt_gen(n, j)));
    return endo_from_images(std::move(f.im));
}

Endo sigma(int n, int i, int j) {
    need(i != j, "sigma: indices must differ");
    need(i >= 0 && i < n && j >= 0 && j < n, "sigma: index out of range");
    Endo f = endo_identity(n);
    std::swap(f.im[i], f.im[j]);
    return endo_from_images(std::move(f.im));
}

Endo beta(int n) {
    need(n >= 2, "beta: need n >= 2");
    Endo f = endo_identity(n);
    f.im[1] = mul(elt_gen(n, 1), elt_gen(n, 0));
    return endo_from_images(std::move(f.im));
}

Endo mu(int n) {
    need(n >= 3, "mu: need n >= 3");
    Endo f = endo_identity(n);
    Elt inner3 = comm(elt_gen(n, 0), comm(elt_gen(n, 1), elt_gen(n, 2)));
    f.im[0] = mul(elt_gen(n, 0), comm(inv(elt_gen(n, 0)), inner3));
    return endo_from_images(std::move(f.im));
}

Endo eta(int n, int c) {
    need(n >= 2 && c >= 2, "eta: need n >= 2 and c >= 2");
    Endo f = endo_identity(n);
    for (int j = 0; j < n; ++j) {
        std::vector<Elt> ws{elt_gen(n, j)};
        for (int t = 0; t < c - 1; ++t) ws.push_back(elt_gen(n, 0));
        f.im[j] = mul(elt_gen(n, j), left_normed(ws));
    }
    return endo_from_images(std::move(f.im));
}

Endo delta(int n, const ExpVec& r) {
    need(n >= 3, "delta: need n >= 3");
    need(int(r.size()) == n, "delta: tuple length must equal the rank");
    for (int v : r) need(v >= 0, "delta: tuple entries must be non-negative");
    // the product whose images land on x_1 [x_1,x_3]^{omega(r)} and
    // x_2 [x_3,x_2]^{omega(r)} one layer up; see delta_product_form
    Endo b = b_p(n, 0, 1, 2, omega(n, r));
    Endo t213 = tau_p(n, 1, 0, 2, r);
    Endo t123 = tau_p(n, 0, 1, 2, r);
    return compose(compose(b, t213), inverse(t123));
}

Endo psi1(int n, int s) {
    need(n >= 4, "psi1: need n >= 4");
    need(s >= 0, "psi1: need s >= 0");
    Endo rho = inverse(compose(pi(n, 1, n - 1), pi(n, 2, n - 1)));
    return iter_comm(inverse(tau(n, 0, {1, 2})), rho, s);
}

DeltaFormReport delta_product_form(int n, const ExpVec& r) {
    int c = 2;
    for (int v : r) c += v;
    // stated images, which only an endomorphism realizes exactly
    Poly w = omega(n, r);
    std::vector<Elt> stated;
    for (int i = 0; i < n; ++i) stated.push_back(elt_gen(n, i));
    stated[0] = mul(elt_gen(n, 0), module_pow(comm(elt_gen(n, 0), elt_gen(n, 2)), w));
    stated[1] = mul(elt_gen(n, 1), module_pow(comm(elt_gen(n, 2), elt_gen(n, 1)), w));
    Endo b = b_p(n, 0, 1, 2, omega(n, r));
    Endo t213 = tau_p(n, 1, 0, 2, r);
    Endo t123 = tau_p(n, 0, 1, 2, r);
    Endo cand1 = compose(compose(b, inverse(t213)), t123);
    Endo cand2 = compose(compose(b, t213), inverse(t123));
    auto matches = [&](const Endo& cand) {
        for (int i = 0; i < n; ++i)
            if (gamma_depth(mul(inv(stated[size_t(i)]), cand.im[size_t(i)])) < c + 1) return false;
        return true;
    };
    DeltaFormReport rep;
    rep.second_inverted = matches(cand1);
    rep.third_inverted = matches(cand2);
    return rep;
}

}  // namespace mbg::zoo
