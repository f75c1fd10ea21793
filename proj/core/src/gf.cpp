#include "arakount/gf.hpp"

#include <bit>

namespace arakount::gf {
namespace {

constexpr std::uint64_t kSeedBase = 0x41524b50ULL; // deterministic engine seed

/// l(x)^(t-1) f(x, y/l(x)): monic in y, factor structure preserved over F(x).
template <class F>
BPoly<F> monicize_y(const F& K, const BPoly<F>& f) {
    int t = bp_degy(f);
    const UPoly<F>& l = f.cy.back();
    if (up_deg(l) == 0) {
        BPoly<F> g;
        auto s = K.inv(l.c.back());
        g.cy.reserve(f.cy.size());
        for (const auto& c : f.cy) g.cy.push_back(up_scale(K, c, s));
        return g;
    }
    BPoly<F> g;
    g.cy.resize(t + 1);
    UPoly<F> pw = up_const(K, K.one());
    for (int j = t; j >= 0; --j) {
        g.cy[j] = up_mul(K, f.cy[j], pw);
        if (j > 0) pw = up_mul(K, pw, l);
    }
    g.cy[t] = up_const(K, K.one());
    bp_trim(K, g);
    return g;
}

template <class F>
typename Ext<F>::Elem eval_in_ext(const F& K, const Ext<F>& E, const UPoly<F>& a,
                                  const typename Ext<F>::Elem& x0) {
    auto acc = E.zero();
    for (std::size_t i = a.c.size(); i-- > 0;) {
        acc = E.mul(acc, x0);
        acc = E.add(acc, up_const(K, a.c[i]));
    }
    return acc;
}

/// Whether Res_y(g, g_y) != 0 for g monic in y with g_y != 0, decided by
/// sampling the discriminant at more points than its x-degree bound.
template <class F>
bool monic_separable(const F& K, const BPoly<F>& g) {
    int t = bp_degy(g), mx = bp_degx(g);
    long bound = static_cast<long>(2 * t - 1) * std::max(mx, 1) + 1;
    int d = 1;
    Int sz = K.order();
    while (sz <= bound) {
        sz *= K.order();
        ++d;
    }
    Ext<F> E(K, find_irreducible(K, d, kSeedBase + 17));
    BPoly<F> gy = bp_deriv_y(K, g);
    for (long i = 0; i <= bound; ++i) {
        auto x0 = E.element(static_cast<std::uint64_t>(i));
        UPoly<Ext<F>> a, b;
        a.c.reserve(g.cy.size());
        for (const auto& c : g.cy) a.c.push_back(eval_in_ext(K, E, c, x0));
        up_trim(E, a);
        b.c.reserve(gy.cy.size());
        for (const auto& c : gy.cy) b.c.push_back(eval_in_ext(K, E, c, x0));
        up_trim(E, b);
        if (up_is_zero(b)) continue;
        if (up_deg(up_gcd(E, a, b)) == 0) return true;
    }
    return false;
}

template <class F>
struct Specialization {
    UPoly<F> m;
    std::vector<UPoly<F>> mpow; // m^0 .. m^sigma
    std::vector<UPoly<Ext<F>>> factors;
    int e = 1;
};

/// Reduce a poly's x-coefficients mod mk.
template <class F>
BPoly<F> bp_reduce(const F& K, const BPoly<F>& f, const UPoly<F>& mk) {
    BPoly<F> r;
    r.cy.reserve(f.cy.size());
    for (const auto& c : f.cy) r.cy.push_back(up_rem(K, c, mk));
    bp_trim(K, r);
    return r;
}

/// (q, r) of a by monic-in-y b with coefficients reduced mod mk as we go.
template <class F>
std::pair<BPoly<F>, BPoly<F>> bp_divrem_monic_mod(const F& K, const BPoly<F>& a, const BPoly<F>& b,
                                                  const UPoly<F>& mk) {
    int db = bp_degy(b);
    BPoly<F> r = bp_reduce(K, a, mk), q;
    if (bp_degy(r) >= db) q.cy.resize(bp_degy(r) - db + 1);
    while (!bp_is_zero(r) && bp_degy(r) >= db) {
        int k = bp_degy(r) - db;
        UPoly<F> t = r.cy.back();
        q.cy[k] = t;
        BPoly<F> shifted;
        shifted.cy.resize(k + db + 1);
        for (int j = 0; j <= db; ++j) shifted.cy[k + j] = up_rem(K, up_mul(K, t, b.cy[j]), mk);
        r = bp_sub(K, r, shifted);
        r = bp_reduce(K, r, mk);
    }
    bp_trim(K, q);
    return {q, r};
}

template <class F>
BPoly<F> bp_mul_mod(const F& K, const BPoly<F>& a, const BPoly<F>& b, const UPoly<F>& mk) {
    return bp_reduce(K, bp_mul(K, a, b), mk);
}

template <class F>
BPoly<F> bp_add(const F& K, const BPoly<F>& a, const BPoly<F>& b) {
    BPoly<F> r;
    r.cy.resize(std::max(a.cy.size(), b.cy.size()));
    for (std::size_t j = 0; j < r.cy.size(); ++j) {
        UPoly<F> x = j < a.cy.size() ? a.cy[j] : UPoly<F>{};
        UPoly<F> y = j < b.cy.size() ? b.cy[j] : UPoly<F>{};
        r.cy[j] = up_add(K, x, y);
    }
    bp_trim(K, r);
    return r;
}

/// E[y] polynomial -> F[x][y] with extension elements read as x-polynomials.
template <class F>
BPoly<F> from_ext_poly(const F& K, const UPoly<Ext<F>>& a) {
    (void)K;
    BPoly<F> r;
    r.cy.reserve(a.c.size());
    for (const auto& e : a.c) r.cy.push_back(e);
    return r;
}

/// Quadratic two-factor Hensel: from g = A*B (mod m) with Bezout sA + tB = 1
/// (mod m) to the same congruences mod m^sigma.
template <class F>
void hensel_pair(const F& K, const BPoly<F>& g, BPoly<F>& A, BPoly<F>& B, BPoly<F>& s, BPoly<F>& t,
                 const std::vector<UPoly<F>>& mpow, int sigma) {
    int cur = 1;
    auto one = BPoly<F>{{up_const(K, K.one())}};
    while (cur < sigma) {
        int next = std::min(2 * cur, sigma);
        const UPoly<F>& mk = mpow[next];
        BPoly<F> e = bp_reduce(K, bp_sub(K, g, bp_mul(K, A, B)), mk);
        auto [q, beta] = bp_divrem_monic_mod(K, bp_mul_mod(K, s, e, mk), B, mk);
        BPoly<F> alpha = bp_add(K, bp_mul_mod(K, t, e, mk), bp_mul_mod(K, q, A, mk));
        alpha = bp_reduce(K, alpha, mk);
        A = bp_reduce(K, bp_add(K, A, alpha), mk);
        B = bp_reduce(K, bp_add(K, B, beta), mk);
        BPoly<F> d = bp_sub(K, bp_add(K, bp_mul_mod(K, s, A, mk), bp_mul_mod(K, t, B, mk)), one);
        d = bp_reduce(K, d, mk);
        auto [q2, r2] = bp_divrem_monic_mod(K, bp_mul_mod(K, s, d, mk), B, mk);
        s = bp_reduce(K, bp_sub(K, s, r2), mk);
        BPoly<F> tution = bp_add(K, bp_mul_mod(K, t, d, mk), bp_mul_mod(K, q2, A, mk));
        t = bp_reduce(K, bp_sub(K, t, tution), mk);
        cur = next;
    }
}

/// Lift the modular factorization of g (monic in y) along the subproduct
/// tree; appends factors congruent to fbars[lo..hi) mod m at precision sigma.
template <class F>
void hensel_tree(const F& K, const Ext<F>& E, const BPoly<F>& g,
                 const std::vector<UPoly<Ext<F>>>& fbars, int lo, int hi,
                 const std::vector<UPoly<F>>& mpow, int sigma, std::vector<BPoly<F>>& out) {
    if (hi - lo == 1) {
        out.push_back(bp_reduce(K, g, mpow[sigma]));
        return;
    }
    int mid = lo + (hi - lo) / 2;
    UPoly<Ext<F>> Abar = up_const(E, E.one()), Bbar = up_const(E, E.one());
    for (int i = lo; i < mid; ++i) Abar = up_mul(E, Abar, fbars[i]);
    for (int i = mid; i < hi; ++i) Bbar = up_mul(E, Bbar, fbars[i]);
    auto [gg, u] = up_ext_gcd_mod(E, Abar, Bbar);
    if (up_deg(gg) != 0) fail(ErrorKind::Unsupported, "hensel factors not coprime");
    UPoly<Ext<F>> sbar = up_scale(E, u, E.inv(gg.c.back()));
    // tbar = (1 - sbar*Abar)/Bbar
    UPoly<Ext<F>> num = up_sub(E, up_const(E, E.one()), up_mul(E, sbar, Abar));
    auto [tbar, rr] = up_divrem(E, num, Bbar);
    if (!up_is_zero(rr)) fail(ErrorKind::Unsupported, "bezout failure in hensel lift");
    BPoly<F> A = from_ext_poly(K, Abar), B = from_ext_poly(K, Bbar);
    BPoly<F> s = from_ext_poly(K, sbar), t = from_ext_poly(K, tbar);
    hensel_pair(K, bp_reduce(K, g, mpow[sigma]), A, B, s, t, mpow, sigma);
    hensel_tree(K, E, A, fbars, lo, mid, mpow, sigma, out);
    hensel_tree(K, E, B, fbars, mid, hi, mpow, sigma, out);
}

template <class F>
bool bivariate_irreducible(const F& K, BPoly<F> f);

/// Irreducibility of a monic-in-y, y-separable g via specialization,
/// univariate factorization, Hensel lifting and subset recombination.
template <class F>
bool monic_separable_irreducible(const F& K, const BPoly<F>& g) {
    int t = bp_degy(g), mx = bp_degx(g);
    long disc_deg = static_cast<long>(2 * t - 1) * std::max(mx, 1);
    for (int e = 1; e <= 14; ++e) {
        long tries;
        if (e == 1) {
            Int cap = K.order();
            tries = cap > disc_deg + 1 ? disc_deg + 1 : cap.get_si();
        } else {
            tries = 64 + 2 * disc_deg / e;
        }
        for (long i = 0; i < tries; ++i) {
            UPoly<F> m;
            if (e == 1) {
                auto a = K.element(static_cast<std::uint64_t>(i));
                m.c = {K.neg(a), K.one()};
            } else {
                m = find_irreducible(K, e, kSeedBase + 31 * e + i);
            }
            Ext<F> E(K, m);
            UPoly<Ext<F>> gbar = bp_mod(K, g, E);
            if (up_deg(gbar) != t) continue;
            auto gbar_d = up_derivative(E, gbar);
            if (up_is_zero(gbar_d) || up_deg(up_gcd(E, gbar, gbar_d)) != 0) continue;
            auto fbars = factor_monic_squarefree(E, up_monic(E, gbar), kSeedBase + 7);
            int r = static_cast<int>(fbars.size());
            if (r == 1) return true;
            int sigma = (t * std::max(mx, 1)) / e + 1;
            std::vector<UPoly<F>> mpow(sigma + 1);
            mpow[0] = up_const(K, K.one());
            for (int k = 1; k <= sigma; ++k) mpow[k] = up_mul(K, mpow[k - 1], m);
            std::vector<BPoly<F>> lifted;
            hensel_tree(K, E, bp_reduce(K, g, mpow[sigma]), fbars, 0, r, mpow, sigma, lifted);
            std::vector<int> degs(r);
            for (int k = 0; k < r; ++k) degs[k] = up_deg(fbars[k]);
            for (std::uint32_t mask = 1; mask + 1 < (1u << r); ++mask) {
                int degsum = 0;
                for (int k = 0; k < r; ++k)
                    if (mask & (1u << k)) degsum += degs[k];
                if (2 * degsum > t) continue;
                if (2 * degsum == t && !(mask & 1u)) continue;
                BPoly<F> H{{up_const(K, K.one())}};
                for (int k = 0; k < r; ++k)
                    if (mask & (1u << k)) H = bp_mul_mod(K, H, lifted[k], mpow[sigma]);
                if (bp_degx(H) > degsum * std::max(mx, 1)) continue;
                if (bp_divide_monic(K, g, H, nullptr)) return false;
            }
            return true;
        }
    }
    fail(ErrorKind::Unsupported, "no usable specialization found");
}

template <class F>
bool bivariate_irreducible(const F& K, BPoly<F> f) {
    bp_trim(K, f);
    if (bp_is_zero(f)) fail(ErrorKind::InvalidParams, "zero polynomial");
    if (bp_degy(f) == 0) {
        const UPoly<F>& u = f.cy[0];
        if (up_deg(u) < 1) return false; // unit
        return upoly_irreducible(K, up_monic(K, u));
    }
    UPoly<F> cont = bp_content(K, f);
    if (up_deg(cont) > 0) return false;
    if (bp_degy(f) == 1) return true; // primitive, linear in y
    BPoly<F> fy = bp_deriv_y(K, f);
    if (bp_is_zero(fy)) {
        BPoly<F> fx = bp_deriv_x(K, f);
        if (bp_is_zero(fx)) return false; // p-th power
        return bivariate_irreducible(K, bp_swap_xy(K, f));
    }
    BPoly<F> g = monicize_y(K, f);
    if (!monic_separable(K, g)) return false;
    return monic_separable_irreducible(K, g);
}

std::vector<int> prime_divisors(int n) {
    std::vector<int> ps;
    for (int l = 2; l * l <= n; ++l)
        while (n % l == 0) {
            if (ps.empty() || ps.back() != l) ps.push_back(l);
            n /= l;
        }
    if (n > 1) ps.push_back(n);
    return ps;
}

} // namespace

bool is_irreducible_bivariate_fp(const Fp& K, const BPoly<Fp>& f) {
    return bivariate_irreducible(K, f);
}

bool is_absolutely_irreducible_fp(const Fp& K, const BPoly<Fp>& f) {
    BPoly<Fp> g = f;
    bp_trim(K, g);
    int dtot = bp_total_degree(g);
    if (dtot < 0) fail(ErrorKind::InvalidParams, "zero polynomial");
    if (dtot == 0) return false;
    if (dtot == 1) return true;
    if (!bivariate_irreducible(K, g)) return false;
    for (int l : prime_divisors(dtot)) {
        Ext<Fp> E(K, find_irreducible(K, l, kSeedBase + 101 * l));
        auto fl = bp_map(K, E, g, [&](const Fp::Elem& e) { return up_const(K, e); });
        if (!bivariate_irreducible(E, fl)) return false;
    }
    return true;
}

int gao_absolute_factor_count(const Fp& K, const BPoly<Fp>& f) {
    int m = bp_degx(f), n1 = bp_degy(f);
    if (m < 1 || n1 < 1) fail(ErrorKind::InvalidParams, "gao count needs positive bidegree");
    BPoly<Fp> fx = bp_deriv_x(K, f), fy = bp_deriv_y(K, f);
    // unknowns: g (a <= m-1, b <= n1), then h (a <= m, b <= n1-1)
    int gcols = m * (n1 + 1), hcols = (m + 1) * n1;
    int cols = gcols + hcols;
    int rowsx = 2 * m + 1, rowsy = 2 * n1 + 1;
    std::vector<std::vector<std::uint64_t>> M(static_cast<std::size_t>(rowsx) * rowsy,
                                              std::vector<std::uint64_t>(cols, 0));
    auto row_of = [&](int a, int b) { return static_cast<std::size_t>(a) * rowsy + b; };
    auto coeff_at = [&](const BPoly<Fp>& p, int a, int b) -> std::uint64_t {
        if (b < 0 || b > bp_degy(p)) return 0;
        if (a < 0 || a > up_deg(p.cy[b])) return 0;
        return p.cy[b].c[a];
    };
    // contribution of unknown g_{a,b}: f * (g_y) - g * f_y, i.e.
    //   + b * x^a y^(b-1) * f   - x^a y^b * f_y
    int col = 0;
    for (int a = 0; a <= m - 1; ++a)
        for (int b = 0; b <= n1; ++b, ++col) {
            auto bb = K.from_int(b);
            for (int i = 0; i <= bp_degx(f); ++i)
                for (int j = 0; j <= bp_degy(f); ++j) {
                    auto c = coeff_at(f, i, j);
                    if (c == 0) continue;
                    if (b >= 1) {
                        auto& cell = M[row_of(a + i, b - 1 + j)][col];
                        cell = K.add(cell, K.mul(bb, c));
                    }
                }
            for (int i = 0; i <= bp_degx(fy); ++i)
                for (int j = 0; j <= bp_degy(fy); ++j) {
                    auto c = coeff_at(fy, i, j);
                    if (c == 0) continue;
                    auto& cell = M[row_of(a + i, b + j)][col];
                    cell = K.sub(cell, c);
                }
        }
    // contribution of unknown h_{a,b}: -f * h_x + h * f_x, i.e.
    //   - a * x^(a-1) y^b * f   + x^a y^b * f_x
    for (int a = 0; a <= m; ++a)
        for (int b = 0; b <= n1 - 1; ++b, ++col) {
            auto aa = K.from_int(a);
            for (int i = 0; i <= bp_degx(f); ++i)
                for (int j = 0; j <= bp_degy(f); ++j) {
                    auto c = coeff_at(f, i, j);
                    if (c == 0) continue;
                    if (a >= 1) {
                        auto& cell = M[row_of(a - 1 + i, b + j)][col];
                        cell = K.sub(cell, K.mul(aa, c));
                    }
                }
            for (int i = 0; i <= bp_degx(fx); ++i)
                for (int j = 0; j <= bp_degy(fx); ++j) {
                    auto c = coeff_at(fx, i, j);
                    if (c == 0) continue;
                    auto& cell = M[row_of(a + i, b + j)][col];
                    cell = K.add(cell, c);
                }
        }
    // nullity over F_p
    std::size_t rows = M.size();
    int rank = 0;
    std::size_t rpos = 0;
    for (int c = 0; c < cols && rpos < rows; ++c) {
        std::size_t piv = rpos;
        while (piv < rows && M[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(M[piv], M[rpos]);
        auto inv = K.inv(M[rpos][c]);
        for (int j = c; j < cols; ++j) M[rpos][j] = K.mul(M[rpos][j], inv);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rpos || M[i][c] == 0) continue;
            auto fct = M[i][c];
            for (int j = c; j < cols; ++j) M[i][j] = K.sub(M[i][j], K.mul(fct, M[rpos][j]));
        }
        ++rank;
        ++rpos;
    }
    return cols - rank;
}

} // namespace arakount::gf
