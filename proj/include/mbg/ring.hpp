#pragma once

// Exact arithmetic in the integral group ring of a free abelian group of
// rank n, written as Laurent polynomials in a_1..a_n with mpz coefficients.
// Also: augmentation-ideal valuations, homogeneous leading forms, and small
// exact matrix algebra (integer, rational, polynomial) over this ring.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mbg {

using Int = mpz_class;
using Rat = mpq_class;

// exponent vector of a Laurent monomial a_1^{e_1}...a_n^{e_n}
using ExpVec = std::vector<int>;

// sentinel for "infinite" depth/valuation; safe under a few additions
inline constexpr int kInf = 1 << 28;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// violated operation precondition (caller's fault)
struct domain_error : error {
    using error::error;
};
// violated internal invariant (a bug if ever thrown)
struct internal_error : error {
    using error::error;
};

ExpVec ev_zero(int n);
ExpVec ev_unit(int n, int i);
ExpVec ev_add(const ExpVec& a, const ExpVec& b);
ExpVec ev_sub(const ExpVec& a, const ExpVec& b);
ExpVec ev_neg(const ExpVec& a);
bool ev_is_zero(const ExpVec& a);
int ev_total(const ExpVec& a);

Int binom(unsigned long n, unsigned long k);

struct Term {
    ExpVec e;
    Int c;
    bool operator==(const Term&) const = default;
};

// sparse Laurent polynomial; terms strictly increasing in lex order on e,
// never a zero coefficient
class Poly {
  public:
    Poly() = default;

    static Poly monomial(ExpVec e, Int c);
    static Poly constant(int n, Int c);
    static Poly gen(int n, int i, int k = 1);  // a_i^k, i in 0..n-1
    static Poly gen1(int n, int i);            // a_i - 1
    static Poly from_terms(std::vector<Term> ts);

    const std::vector<Term>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    size_t size() const { return t_.size(); }
    bool operator==(const Poly&) const = default;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);

    Poly mul_int(const Int& k) const;
    Poly mul_monomial(const ExpVec& e, const Int& c) const;

    Int aug() const;    // coefficient sum
    Poly star() const;  // a^e -> a^{-e} on every term

    // the exponent v when the polynomial is exactly +1 * a^v
    std::optional<ExpVec> unit_monomial() const;

    std::string str() const;  // debug form, canonical

  private:
    std::vector<Term> t_;
};

Poly operator*(const Int& k, const Poly& p);

// prod_i (a_i - 1)^{r_i}, r componentwise nonnegative
Poly omega(int n, const ExpVec& r);

// homogeneous degree-d component of the expansion at a_i = 1 + t_i,
// as a map from nonnegative t-exponent vectors to coefficients
struct Form {
    int deg = 0;
    std::map<ExpVec, Int> c;
    bool is_zero() const { return c.empty(); }
    bool operator==(const Form&) const = default;
};

// order of vanishing along the augmentation ideal; kInf on the zero polynomial
int valuation(const Poly& p);

// degree-d part of the t-expansion; well defined only when valuation(p) >= d
Form homogeneous_part(const Poly& p, int d);
Form leading_form(const Poly& p);  // pre: p != 0

Form form_add(const Form& a, const Form& b);
Form form_mul(const Form& a, const Form& b);

struct IntMat {
    int n = 0;
    std::vector<long long> a;

    IntMat() = default;
    explicit IntMat(int n_) : n(n_), a(size_t(n_) * n_, 0) {}
    static IntMat identity(int n);

    long long& at(int i, int j) { return a[size_t(i) * n + j]; }
    long long at(int i, int j) const { return a[size_t(i) * n + j]; }
    bool operator==(const IntMat&) const = default;
};

IntMat mat_mul(const IntMat& x, const IntMat& y);
Int det(const IntMat& g);

struct RatMat {
    int n = 0;
    std::vector<Rat> a;

    RatMat() = default;
    explicit RatMat(int n_) : n(n_), a(size_t(n_) * n_, Rat(0)) {}
    static RatMat identity(int n);
    static RatMat from_int(const IntMat& g);

    Rat& at(int i, int j) { return a[size_t(i) * n + j]; }
    const Rat& at(int i, int j) const { return a[size_t(i) * n + j]; }
    bool operator==(const RatMat&) const = default;
};

// nullopt when singular
std::optional<RatMat> inverse_over_q(const IntMat& g);
std::optional<IntMat> to_int_mat(const RatMat& m);

// ring endomorphism a_j -> prod_i a_i^{g_ij} applied coefficientwise
Poly substitute(const Poly& p, const IntMat& g);

struct PolyMat {
    int n = 0;
    std::vector<Poly> m;

    PolyMat() = default;
    explicit PolyMat(int n_) : n(n_), m(size_t(n_) * n_) {}
    static PolyMat identity(int n);

    Poly& at(int i, int j) { return m[size_t(i) * n + j]; }
    const Poly& at(int i, int j) const { return m[size_t(i) * n + j]; }
    bool operator==(const PolyMat&) const = default;
};

PolyMat mat_mul(const PolyMat& x, const PolyMat& y);
PolyMat substitute(const PolyMat& x, const IntMat& g);
Poly det(const PolyMat& x);      // cofactor expansion with subset memo
PolyMat adjugate(const PolyMat& x);

}  // namespace mbg
