#ifndef ARAKOUNT_GF_HPP
#define ARAKOUNT_GF_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "arakount/numeric.hpp"

// Finite-field machinery behind the geometric-integrality test: prime fields,
// dynamic extension fields, dense univariate arithmetic with DDF/EDF
// factorization, and bivariate irreducibility via m(x)-adic Hensel lifting.
// Everything is exact; randomness is seeded per call so results are
// deterministic.

namespace arakount::gf {

// ---------------------------------------------------------------- prime field

struct Fp {
    using Elem = std::uint64_t;
    std::uint64_t p;

    explicit Fp(std::uint64_t p_) : p(p_) {
        if (p < 2) fail(ErrorKind::InvalidParams, "field characteristic must be prime");
    }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p; }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    Elem add(const Elem& a, const Elem& b) const {
        Elem s = a + b;
        return s >= p ? s - p : s;
    }
    Elem sub(const Elem& a, const Elem& b) const { return a >= b ? a - b : a + p - b; }
    Elem neg(const Elem& a) const { return a == 0 ? 0 : p - a; }
    Elem mul(const Elem& a, const Elem& b) const { return (a * b) % p; }
    Elem inv(const Elem& a) const {
        if (a == 0) fail(ErrorKind::InvalidParams, "division by zero in F_p");
        long long t = 0, newt = 1;
        long long r = static_cast<long long>(p), newr = static_cast<long long>(a);
        while (newr != 0) {
            long long q = r / newr;
            std::swap(t -= q * newt, newt);
            std::swap(r -= q * newr, newr);
        }
        return t < 0 ? static_cast<Elem>(t + static_cast<long long>(p)) : static_cast<Elem>(t);
    }
    Elem from_int(long long v) const {
        long long r = v % static_cast<long long>(p);
        return r < 0 ? static_cast<Elem>(r + static_cast<long long>(p)) : static_cast<Elem>(r);
    }
    std::uint64_t char_p() const { return p; }
    Int order() const { return Int(static_cast<unsigned long>(p)); }
    Elem element(std::uint64_t idx) const { return idx % p; }
    Elem random(std::mt19937_64& rng) const { return rng() % p; }
    bool less(const Elem& a, const Elem& b) const { return a < b; }
};

// ------------------------------------------------------------- univariate

template <class F>
struct UPoly {
    std::vector<typename F::Elem> c; // c[i] multiplies x^i; trailing zeros trimmed

    bool operator==(const UPoly& o) const { return c == o.c; }
};

template <class F>
void up_trim(const F& K, UPoly<F>& f) {
    while (!f.c.empty() && K.is_zero(f.c.back())) f.c.pop_back();
}

template <class F>
int up_deg(const UPoly<F>& f) {
    return static_cast<int>(f.c.size()) - 1;
}

template <class F>
bool up_is_zero(const UPoly<F>& f) {
    return f.c.empty();
}

template <class F>
UPoly<F> up_const(const F& K, const typename F::Elem& e) {
    UPoly<F> f;
    if (!K.is_zero(e)) f.c.push_back(e);
    return f;
}

template <class F>
UPoly<F> up_x(const F& K) {
    return UPoly<F>{{K.zero(), K.one()}};
}

template <class F>
UPoly<F> up_add(const F& K, const UPoly<F>& a, const UPoly<F>& b) {
    UPoly<F> r;
    r.c.resize(std::max(a.c.size(), b.c.size()), K.zero());
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = K.add(r.c[i], b.c[i]);
    up_trim(K, r);
    return r;
}

template <class F>
UPoly<F> up_sub(const F& K, const UPoly<F>& a, const UPoly<F>& b) {
    UPoly<F> r;
    r.c.resize(std::max(a.c.size(), b.c.size()), K.zero());
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = K.sub(r.c[i], b.c[i]);
    up_trim(K, r);
    return r;
}

template <class F>
UPoly<F> up_neg(const F& K, const UPoly<F>& a) {
    UPoly<F> r = a;
    for (auto& e : r.c) e = K.neg(e);
    return r;
}

template <class F>
UPoly<F> up_mul(const F& K, const UPoly<F>& a, const UPoly<F>& b) {
    if (up_is_zero(a) || up_is_zero(b)) return {};
    UPoly<F> r;
    r.c.assign(a.c.size() + b.c.size() - 1, K.zero());
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (K.is_zero(a.c[i])) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = K.add(r.c[i + j], K.mul(a.c[i], b.c[j]));
    }
    up_trim(K, r);
    return r;
}

template <class F>
UPoly<F> up_scale(const F& K, const UPoly<F>& a, const typename F::Elem& s) {
    if (K.is_zero(s)) return {};
    UPoly<F> r = a;
    for (auto& e : r.c) e = K.mul(e, s);
    up_trim(K, r);
    return r;
}

/// Quotient and remainder; divisor must be nonzero (leading coefficient is
/// inverted, valid over a field).
template <class F>
std::pair<UPoly<F>, UPoly<F>> up_divrem(const F& K, const UPoly<F>& a, const UPoly<F>& b) {
    if (up_is_zero(b)) fail(ErrorKind::InvalidParams, "polynomial division by zero");
    UPoly<F> r = a, q;
    int db = up_deg(b);
    auto lcinv = K.inv(b.c.back());
    if (up_deg(r) >= db) q.c.assign(up_deg(r) - db + 1, K.zero());
    while (up_deg(r) >= db) {
        int k = up_deg(r) - db;
        auto f = K.mul(r.c.back(), lcinv);
        q.c[k] = f;
        for (int i = 0; i <= db; ++i) r.c[k + i] = K.sub(r.c[k + i], K.mul(f, b.c[i]));
        up_trim(K, r);
    }
    up_trim(K, q);
    return {q, r};
}

template <class F>
UPoly<F> up_rem(const F& K, const UPoly<F>& a, const UPoly<F>& b) {
    return up_divrem(K, a, b).second;
}

template <class F>
UPoly<F> up_monic(const F& K, const UPoly<F>& a) {
    if (up_is_zero(a)) return a;
    return up_scale(K, a, K.inv(a.c.back()));
}

template <class F>
UPoly<F> up_gcd(const F& K, UPoly<F> a, UPoly<F> b) {
    while (!up_is_zero(b)) {
        auto r = up_rem(K, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return up_monic(K, a);
}

/// Extended gcd returning (g, u) with u*a = g (mod m), g monic.
template <class F>
std::pair<UPoly<F>, UPoly<F>> up_ext_gcd_mod(const F& K, const UPoly<F>& a, const UPoly<F>& m) {
    UPoly<F> r0 = m, r1 = up_rem(K, a, m);
    UPoly<F> u0, u1 = up_const(K, K.one());
    while (!up_is_zero(r1)) {
        auto [q, r2] = up_divrem(K, r0, r1);
        UPoly<F> u2 = up_sub(K, u0, up_mul(K, q, u1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        u0 = std::move(u1);
        u1 = up_rem(K, u2, m);
    }
    if (up_is_zero(r0)) return {r0, u0};
    auto lcinv = K.inv(r0.c.back());
    return {up_scale(K, r0, lcinv), up_scale(K, u0, lcinv)};
}

template <class F>
UPoly<F> up_mulmod(const F& K, const UPoly<F>& a, const UPoly<F>& b, const UPoly<F>& m) {
    return up_rem(K, up_mul(K, a, b), m);
}

template <class F>
UPoly<F> up_powmod(const F& K, UPoly<F> base, const Int& e, const UPoly<F>& m) {
    UPoly<F> r = up_const(K, K.one());
    r = up_rem(K, r, m);
    base = up_rem(K, base, m);
    mp_bitcnt_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return r;
    for (mp_bitcnt_t i = bits; i-- > 0;) {
        r = up_mulmod(K, r, r, m);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = up_mulmod(K, r, base, m);
    }
    return r;
}

template <class F>
UPoly<F> up_derivative(const F& K, const UPoly<F>& a) {
    UPoly<F> r;
    if (a.c.size() <= 1) return r;
    r.c.resize(a.c.size() - 1, K.zero());
    for (std::size_t i = 1; i < a.c.size(); ++i) {
        auto k = K.from_int(static_cast<long long>(i));
        r.c[i - 1] = K.mul(a.c[i], k);
    }
    up_trim(K, r);
    return r;
}

template <class F>
typename F::Elem up_eval(const F& K, const UPoly<F>& a, const typename F::Elem& x) {
    auto acc = K.zero();
    for (std::size_t i = a.c.size(); i-- > 0;) acc = K.add(K.mul(acc, x), a.c[i]);
    return acc;
}

/// Resultant of two univariate polynomials over a field (Euclidean scheme).
template <class F>
typename F::Elem up_resultant(const F& K, UPoly<F> a, UPoly<F> b) {
    auto res = K.one();
    for (;;) {
        if (up_is_zero(b)) return up_deg(a) > 0 ? K.zero() : res;
        if (up_deg(b) == 0) {
            // res *= lc(b)^deg(a)
            auto l = b.c.back();
            for (int i = 0; i < up_deg(a); ++i) res = K.mul(res, l);
            return res;
        }
        auto r = up_rem(K, a, b);
        int da = up_deg(a), db = up_deg(b), dr = up_deg(r);
        // res *= (-1)^(da*db) * lc(b)^(da - dr)
        if ((static_cast<long long>(da) * db) % 2 == 1) res = K.neg(res);
        auto l = b.c.back();
        for (int i = 0; i < da - dr; ++i) res = K.mul(res, l);
        a = std::move(b);
        b = std::move(r);
    }
}

template <class F>
bool up_less(const F& K, const UPoly<F>& a, const UPoly<F>& b) {
    if (a.c.size() != b.c.size()) return a.c.size() < b.c.size();
    for (std::size_t i = a.c.size(); i-- > 0;) {
        if (!K.eq(a.c[i], b.c[i])) return K.less(a.c[i], b.c[i]);
    }
    return false;
}

// ---------------------------------------------------------- extension field

/// F[x]/(m) with m monic irreducible; elements are reduced UPoly<F>.
template <class F>
struct Ext {
    using Elem = UPoly<F>;
    F base;
    UPoly<F> modulus;

    Ext(const F& b, UPoly<F> m) : base(b), modulus(std::move(m)) {
        if (up_deg(modulus) < 1) fail(ErrorKind::InvalidParams, "extension modulus must be nonconstant");
    }

    int ext_degree() const { return up_deg(modulus); }
    Elem zero() const { return {}; }
    Elem one() const { return up_const(base, base.one()); }
    bool is_zero(const Elem& a) const { return up_is_zero(a); }
    bool eq(const Elem& a, const Elem& b) const { return a.c == b.c; }
    Elem add(const Elem& a, const Elem& b) const { return up_add(base, a, b); }
    Elem sub(const Elem& a, const Elem& b) const { return up_sub(base, a, b); }
    Elem neg(const Elem& a) const { return up_neg(base, a); }
    Elem mul(const Elem& a, const Elem& b) const { return up_mulmod(base, a, b, modulus); }
    Elem inv(const Elem& a) const {
        if (up_is_zero(a)) fail(ErrorKind::InvalidParams, "division by zero in extension field");
        auto [g, u] = up_ext_gcd_mod(base, a, modulus);
        if (up_deg(g) != 0) fail(ErrorKind::InvalidParams, "non-invertible element (modulus not irreducible?)");
        return u;
    }
    Elem from_int(long long v) const { return up_const(base, base.from_int(v)); }
    std::uint64_t char_p() const { return base.char_p(); }
    Int order() const {
        Int q = base.order();
        Int r = 1;
        for (int i = 0; i < ext_degree(); ++i) r *= q;
        return r;
    }
    /// Element with base-field "digits" of idx (enumeration for searches).
    Elem element(std::uint64_t idx) const {
        Elem e;
        Int q = base.order();
        std::uint64_t qu = q.fits_ulong_p() ? q.get_ui() : 0;
        for (int i = 0; i < ext_degree(); ++i) {
            std::uint64_t digit = qu ? idx % qu : idx;
            e.c.push_back(base.element(digit));
            if (qu)
                idx /= qu;
            else
                idx = 0;
        }
        up_trim(base, e);
        return e;
    }
    Elem random(std::mt19937_64& rng) const {
        Elem e;
        for (int i = 0; i < ext_degree(); ++i) e.c.push_back(base.random(rng));
        up_trim(base, e);
        return e;
    }
    bool less(const Elem& a, const Elem& b) const { return up_less(base, a, b); }
};

// ------------------------------------------------- univariate factorization

/// Distinct-degree factorization of a monic squarefree polynomial:
/// list of (product of irreducible factors of degree d, d).
template <class F>
std::vector<std::pair<UPoly<F>, int>> ddf(const F& K, UPoly<F> f) {
    std::vector<std::pair<UPoly<F>, int>> out;
    Int q = K.order();
    UPoly<F> h = up_rem(K, up_x(K), f);
    int d = 0;
    while (up_deg(f) >= 1) {
        ++d;
        if (2 * d > up_deg(f)) {
            out.emplace_back(f, up_deg(f));
            break;
        }
        h = up_powmod(K, h, q, f);
        auto g = up_gcd(K, up_sub(K, h, up_x(K)), f);
        if (up_deg(g) > 0) {
            out.emplace_back(g, d);
            f = up_divrem(K, f, g).first;
            h = up_rem(K, h, f);
        }
    }
    return out;
}

/// Equal-degree splitting (Cantor-Zassenhaus; trace construction in char 2).
template <class F>
void edf(const F& K, const UPoly<F>& f, int d, std::mt19937_64& rng, std::vector<UPoly<F>>& out) {
    if (up_deg(f) == d) {
        out.push_back(up_monic(K, f));
        return;
    }
    Int q = K.order();
    UPoly<F> g;
    for (;;) {
        UPoly<F> a;
        int da = up_deg(f) - 1;
        a.c.resize(da + 1);
        for (int i = 0; i <= da; ++i) a.c[i] = K.random(rng);
        up_trim(K, a);
        if (up_is_zero(a) || up_deg(a) < 1) continue;
        UPoly<F> b;
        if (K.char_p() == 2) {
            // trace map sum a^(2^i), i < k*d where |F| = 2^k
            Int qe = q;
            long k = 0;
            while (qe > 1) {
                qe /= 2;
                ++k;
            }
            UPoly<F> t = up_rem(K, a, f), acc = t;
            for (long i = 1; i < k * d; ++i) {
                t = up_mulmod(K, t, t, f);
                acc = up_add(K, acc, t);
            }
            b = acc;
        } else {
            Int e = 1;
            for (int i = 0; i < d; ++i) e *= q;
            e = (e - 1) / 2;
            b = up_sub(K, up_powmod(K, a, e, f), up_const(K, K.one()));
        }
        g = up_gcd(K, b, f);
        if (up_deg(g) > 0 && up_deg(g) < up_deg(f)) break;
    }
    edf(K, g, d, rng, out);
    edf(K, up_divrem(K, f, g).first, d, rng, out);
}

/// All monic irreducible factors of a monic squarefree polynomial, sorted.
template <class F>
std::vector<UPoly<F>> factor_monic_squarefree(const F& K, const UPoly<F>& f, std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::vector<UPoly<F>> out;
    for (auto& [g, d] : ddf(K, f)) edf(K, g, d, rng, out);
    std::sort(out.begin(), out.end(),
              [&](const UPoly<F>& a, const UPoly<F>& b) { return up_less(K, a, b); });
    return out;
}

/// Rabin irreducibility test for a monic polynomial of degree >= 1.
template <class F>
bool upoly_irreducible(const F& K, const UPoly<F>& f) {
    int d = up_deg(f);
    if (d < 1) return false;
    if (d == 1) return true;
    Int q = K.order();
    Int qd = 1;
    for (int i = 0; i < d; ++i) qd *= q;
    // x^(q^d) == x mod f
    if (!(up_powmod(K, up_x(K), qd, f) == up_rem(K, up_x(K), f))) return false;
    std::vector<int> primes;
    int dd = d;
    for (int l = 2; l * l <= dd; ++l)
        while (dd % l == 0) {
            if (primes.empty() || primes.back() != l) primes.push_back(l);
            dd /= l;
        }
    if (dd > 1) primes.push_back(dd);
    for (int l : primes) {
        Int e = 1;
        for (int i = 0; i < d / l; ++i) e *= q;
        auto h = up_sub(K, up_powmod(K, up_x(K), e, f), up_x(K));
        if (up_deg(up_gcd(K, h, f)) != 0) return false;
    }
    return true;
}

/// Monic irreducible of degree e, found by seeded random search.
template <class F>
UPoly<F> find_irreducible(const F& K, int e, std::uint64_t seed) {
    if (e == 1) {
        UPoly<F> m;
        m.c = {K.zero(), K.one()};
        return m;
    }
    std::mt19937_64 rng(seed ^ 0xabcdef1234567ULL);
    for (int tries = 0; tries < 20000; ++tries) {
        UPoly<F> m;
        m.c.resize(e + 1);
        for (int i = 0; i < e; ++i) m.c[i] = K.random(rng);
        m.c[e] = K.one();
        if (upoly_irreducible(K, m)) return m;
    }
    fail(ErrorKind::Unsupported, "could not find an irreducible modulus");
}

// ------------------------------------------------------------- bivariate

/// f = sum_j cy[j](x) y^j.
template <class F>
struct BPoly {
    std::vector<UPoly<F>> cy;
};

template <class F>
void bp_trim(const F& K, BPoly<F>& f) {
    for (auto& c : f.cy) up_trim(K, c);
    while (!f.cy.empty() && up_is_zero(f.cy.back())) f.cy.pop_back();
}

template <class F>
int bp_degy(const BPoly<F>& f) {
    return static_cast<int>(f.cy.size()) - 1;
}

template <class F>
int bp_degx(const BPoly<F>& f) {
    int d = -1;
    for (const auto& c : f.cy) d = std::max(d, up_deg(c));
    return d;
}

template <class F>
bool bp_is_zero(const BPoly<F>& f) {
    return f.cy.empty();
}

template <class F>
int bp_total_degree(const BPoly<F>& f) {
    int d = -1;
    for (std::size_t j = 0; j < f.cy.size(); ++j)
        if (!up_is_zero(f.cy[j])) d = std::max(d, up_deg(f.cy[j]) + static_cast<int>(j));
    return d;
}

template <class F>
BPoly<F> bp_sub(const F& K, const BPoly<F>& a, const BPoly<F>& b) {
    BPoly<F> r;
    r.cy.resize(std::max(a.cy.size(), b.cy.size()));
    for (std::size_t j = 0; j < r.cy.size(); ++j) {
        UPoly<F> x = j < a.cy.size() ? a.cy[j] : UPoly<F>{};
        UPoly<F> y = j < b.cy.size() ? b.cy[j] : UPoly<F>{};
        r.cy[j] = up_sub(K, x, y);
    }
    bp_trim(K, r);
    return r;
}

template <class F>
BPoly<F> bp_mul(const F& K, const BPoly<F>& a, const BPoly<F>& b) {
    BPoly<F> r;
    if (bp_is_zero(a) || bp_is_zero(b)) return r;
    r.cy.resize(a.cy.size() + b.cy.size() - 1);
    for (std::size_t i = 0; i < a.cy.size(); ++i)
        for (std::size_t j = 0; j < b.cy.size(); ++j)
            r.cy[i + j] = up_add(K, r.cy[i + j], up_mul(K, a.cy[i], b.cy[j]));
    bp_trim(K, r);
    return r;
}

template <class F>
BPoly<F> bp_deriv_y(const F& K, const BPoly<F>& f) {
    BPoly<F> r;
    for (std::size_t j = 1; j < f.cy.size(); ++j) {
        auto k = K.from_int(static_cast<long long>(j));
        UPoly<F> c = f.cy[j];
        for (auto& e : c.c) e = K.mul(e, k);
        up_trim(K, c);
        r.cy.push_back(std::move(c));
    }
    bp_trim(K, r);
    return r;
}

template <class F>
BPoly<F> bp_deriv_x(const F& K, const BPoly<F>& f) {
    BPoly<F> r;
    r.cy.reserve(f.cy.size());
    for (const auto& c : f.cy) r.cy.push_back(up_derivative(K, c));
    bp_trim(K, r);
    return r;
}

template <class F>
BPoly<F> bp_swap_xy(const F& K, const BPoly<F>& f) {
    BPoly<F> r;
    int dx = bp_degx(f);
    r.cy.resize(dx + 1);
    for (int i = 0; i <= dx; ++i) r.cy[i].c.assign(f.cy.size(), K.zero());
    for (std::size_t j = 0; j < f.cy.size(); ++j)
        for (std::size_t i = 0; i < f.cy[j].c.size(); ++i) r.cy[i].c[j] = f.cy[j].c[i];
    bp_trim(K, r);
    return r;
}

/// Content of f in F[x] (gcd of the y-coefficients, monic).
template <class F>
UPoly<F> bp_content(const F& K, const BPoly<F>& f) {
    UPoly<F> g;
    for (const auto& c : f.cy) g = up_gcd(K, g, c);
    return g;
}

/// Exact division by a divisor monic in y; returns quotient iff remainder
/// vanishes.
template <class F>
bool bp_divide_monic(const F& K, const BPoly<F>& f, const BPoly<F>& d, BPoly<F>* quotient) {
    int dd = bp_degy(d);
    BPoly<F> r = f, q;
    if (bp_degy(r) < dd) return false;
    q.cy.resize(bp_degy(r) - dd + 1);
    while (!bp_is_zero(r) && bp_degy(r) >= dd) {
        int k = bp_degy(r) - dd;
        UPoly<F> t = r.cy.back(); // divisor monic in y: top coefficient passes through
        q.cy[k] = t;
        BPoly<F> shifted;
        shifted.cy.resize(k + dd + 1);
        for (int j = 0; j <= dd; ++j) shifted.cy[k + j] = up_mul(K, t, d.cy[j]);
        r = bp_sub(K, r, shifted);
        if (bp_degy(r) >= k + dd) return false; // top failed to cancel (never for monic d)
    }
    if (!bp_is_zero(r)) return false;
    bp_trim(K, q);
    if (quotient) *quotient = q;
    return true;
}

/// Base change along F -> Ext<F> (or any map via functor).
template <class F, class G, class Map>
BPoly<G> bp_map(const F& K, const G& L, const BPoly<F>& f, Map&& map_elem) {
    (void)K;
    (void)L;
    BPoly<G> r;
    r.cy.reserve(f.cy.size());
    for (const auto& c : f.cy) {
        UPoly<G> d;
        d.c.reserve(c.c.size());
        for (const auto& e : c.c) d.c.push_back(map_elem(e));
        up_trim(L, d);
        r.cy.push_back(std::move(d));
    }
    bp_trim(L, r);
    return r;
}

/// Reduce y-coefficients mod m(x): a univariate polynomial over F[x]/(m).
template <class F>
UPoly<Ext<F>> bp_mod(const F& K, const BPoly<F>& f, const Ext<F>& E) {
    UPoly<Ext<F>> r;
    r.c.reserve(f.cy.size());
    for (const auto& c : f.cy) r.c.push_back(up_rem(K, c, E.modulus));
    up_trim(E, r);
    return r;
}

bool is_absolutely_irreducible_fp(const Fp& K, const BPoly<Fp>& f);
bool is_irreducible_bivariate_fp(const Fp& K, const BPoly<Fp>& f);

/// Gao-Ruppert count of absolutely irreducible factors via the PDE
/// f (g_y - h_x) = g f_y - h f_x. Only meaningful for squarefree f with
/// large enough characteristic; used as a cross-check.
int gao_absolute_factor_count(const Fp& K, const BPoly<Fp>& f);

} // namespace arakount::gf

#endif
