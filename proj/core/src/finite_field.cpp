#include "arakount/finite_field.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <thread>

namespace arakount {

namespace {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

void validate_fq(const FqHypersurface& X) {
    if (!is_prime_u64(X.p)) fail(ErrorKind::InvalidParams, "q must be a prime at desk scale");
    if (X.p > kMaxFqPrime) fail(ErrorKind::InvalidParams, "prime exceeds the 2^14 desk-scale cap");
    if (X.n < 1) fail(ErrorKind::InvalidParams, "ambient dimension must be >= 1");
    if (X.terms.empty()) fail(ErrorKind::InvalidPolynomial, "zero polynomial mod p");
}

std::uint64_t powmod_u64(std::uint64_t b, int e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    b %= p;
    while (e > 0) {
        if (e & 1) r = (r * b) % p;
        b = (b * b) % p;
        e >>= 1;
    }
    return r;
}

} // namespace

std::uint64_t FqHypersurface::evaluate(const FqPoint& pt) const {
    std::uint64_t acc = 0;
    for (const auto& [m, c] : terms) {
        std::uint64_t t = c;
        for (int v = 0; v <= n; ++v)
            if (m[v]) t = (t * powmod_u64(pt[v], m[v], p)) % p;
        acc = (acc + t) % p;
    }
    return acc;
}

FqHypersurface reduce_hypersurface(const HomogeneousPolynomial& f, std::uint64_t p) {
    FqHypersurface X;
    X.p = p;
    X.n = f.nvars() - 1;
    X.generic_degree = f.degree();
    Int pp(static_cast<unsigned long>(p));
    for (const auto& [m, c] : f.primitive_integer_terms()) {
        Int r = c % pp;
        if (r < 0) r += pp;
        if (r != 0) X.terms.emplace_back(m, r.get_ui());
    }
    if (X.terms.empty())
        fail(ErrorKind::InvalidPolynomial, "model vanishes mod p (content not primitive?)");
    X.degree = monomial_degree(X.terms.front().first);
    validate_fq(X);
    return X;
}

FqHypersurface make_fq_hypersurface(std::uint64_t p, int n,
                                    const std::vector<std::pair<Monomial, long>>& terms) {
    FqHypersurface X;
    X.p = p;
    X.n = n;
    int deg = -1;
    std::map<Monomial, std::uint64_t> acc;
    for (const auto& [m, c] : terms) {
        if (static_cast<int>(m.size()) != n + 1)
            fail(ErrorKind::InvalidPolynomial, "exponent vector length mismatch");
        long r = c % static_cast<long>(p);
        if (r < 0) r += static_cast<long>(p);
        acc[m] = (acc[m] + static_cast<std::uint64_t>(r)) % p;
    }
    for (const auto& [m, c] : acc) {
        if (c == 0) continue;
        int d = monomial_degree(m);
        if (deg < 0) deg = d;
        if (d != deg) throw Error(ErrorKind::NonHomogeneous, "mixed degrees mod p");
        X.terms.emplace_back(m, c);
    }
    X.degree = X.generic_degree = deg;
    validate_fq(X);
    return X;
}

std::vector<FqPoint> enumerate_points_fq(const FqHypersurface& X, std::uint64_t budget) {
    validate_fq(X);
    const std::uint64_t q = X.p;
    double total = 1;
    for (int i = 0; i < X.n; ++i) total *= static_cast<double>(q);
    if (total > static_cast<double>(budget))
        fail(ErrorKind::BudgetExceeded, "q^n exceeds the enumeration budget");

    std::vector<FqPoint> out;
    if (X.n == 2) {
        // chart [1:y:z]
        int delta = X.degree;
        std::vector<std::vector<std::uint64_t>> zcoef(delta + 1); // zcoef[k][j]: y^j z^k
        for (auto& v : zcoef) v.assign(delta + 1, 0);
        for (const auto& [m, c] : X.terms) zcoef[m[2]][m[1]] = (zcoef[m[2]][m[1]] + c) % q;

        unsigned slabs = std::max(1u, std::min(std::thread::hardware_concurrency(), 8u));
        if (q < 64) slabs = 1;
        std::vector<std::future<std::vector<FqPoint>>> futs;
        for (unsigned s = 0; s < slabs; ++s) {
            std::uint64_t y0 = q * s / slabs, y1 = q * (s + 1) / slabs;
            futs.push_back(std::async(std::launch::async, [&, y0, y1] {
                std::vector<FqPoint> pts;
                std::vector<std::uint64_t> cz(delta + 1);
                for (std::uint64_t y = y0; y < y1; ++y) {
                    for (int k = 0; k <= delta; ++k) {
                        std::uint64_t acc = 0;
                        for (int j = delta; j >= 0; --j) acc = (acc * y + zcoef[k][j]) % q;
                        cz[k] = acc;
                    }
                    for (std::uint64_t z = 0; z < q; ++z) {
                        std::uint64_t acc = 0;
                        for (int k = delta; k >= 0; --k) acc = (acc * z + cz[k]) % q;
                        if (acc == 0) pts.push_back({1, y, z});
                    }
                }
                return pts;
            }));
        }
        for (auto& f : futs) {
            auto pts = f.get();
            out.insert(out.end(), pts.begin(), pts.end());
        }
        // chart [0:1:z]
        for (std::uint64_t z = 0; z < q; ++z) {
            FqPoint pt{0, 1, z};
            if (X.evaluate(pt) == 0) out.push_back(pt);
        }
        // [0:0:1]
        FqPoint last{0, 0, 1};
        if (X.evaluate(last) == 0) out.push_back(last);
        return out;
    }

    // generic chart walk for other ambient dimensions
    for (int lead = 0; lead <= X.n; ++lead) {
        int free = X.n - lead;
        FqPoint pt(X.n + 1, 0);
        pt[lead] = 1;
        std::vector<std::uint64_t> idx(free, 0);
        for (;;) {
            for (int i = 0; i < free; ++i) pt[lead + 1 + i] = idx[i];
            if (X.evaluate(pt) == 0) out.push_back(pt);
            int k = free - 1;
            while (k >= 0 && ++idx[k] == q) idx[k--] = 0;
            if (k < 0) break;
            if (free == 0) break;
        }
        if (free == 0) break; // single point chart handled once
    }
    return out;
}

long multiplicity_at(const FqHypersurface& X, const FqPoint& pt) {
    validate_fq(X);
    if (static_cast<int>(pt.size()) != X.n + 1)
        fail(ErrorKind::InvalidParams, "point dimension mismatch");
    if (X.evaluate(pt) != 0) fail(ErrorKind::NotOnVariety, "point is not on the hypersurface");
    const std::uint64_t q = X.p;
    int lead = -1;
    for (int i = 0; i <= X.n; ++i)
        if (pt[i] != 0) {
            lead = i;
            break;
        }
    if (lead < 0) fail(ErrorKind::InvalidPoint, "zero point");
    if (pt[lead] != 1) fail(ErrorKind::InvalidPoint, "point not in canonical form");

    // dehomogenize at `lead`, shift the remaining coordinates to the origin,
    // record the minimum total degree of a surviving term
    int nfree = X.n;
    std::vector<int> freevars;
    for (int i = 0; i <= X.n; ++i)
        if (i != lead) freevars.push_back(i);

    std::map<Monomial, std::uint64_t> shifted;
    std::vector<std::vector<std::uint64_t>> binom(X.degree + 1,
                                                  std::vector<std::uint64_t>(X.degree + 1, 0));
    for (int i = 0; i <= X.degree; ++i) {
        binom[i][0] = 1 % q;
        for (int j = 1; j <= i; ++j)
            binom[i][j] = (binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : 0)) % q;
    }
    for (const auto& [m, c] : X.terms) {
        // expand prod_v (x_v + a_v)^{e_v} over the free variables
        std::vector<std::pair<Monomial, std::uint64_t>> acc{{Monomial(nfree, 0), c}};
        for (int vi = 0; vi < nfree; ++vi) {
            int e = m[freevars[vi]];
            std::uint64_t a = pt[freevars[vi]] % q;
            std::vector<std::pair<Monomial, std::uint64_t>> next;
            for (auto& [mm, cc] : acc) {
                for (int k = e; k >= 0; --k) {
                    // term x^k a^(e-k) C(e,k)
                    std::uint64_t coeff = (cc * binom[e][k]) % q;
                    coeff = (coeff * powmod_u64(a, e - k, q)) % q;
                    if (coeff) {
                        Monomial m2 = mm;
                        m2[vi] += k;
                        next.emplace_back(std::move(m2), coeff);
                    }
                }
            }
            acc = std::move(next);
        }
        for (auto& [mm, cc] : acc) {
            auto& cell = shifted[mm];
            cell = (cell + cc) % q;
        }
    }
    long mu = -1;
    for (const auto& [mm, cc] : shifted) {
        if (cc == 0) continue;
        long d = monomial_degree(mm);
        if (mu < 0 || d < mu) mu = d;
    }
    if (mu < 1) fail(ErrorKind::NotOnVariety, "expansion has a constant term");
    return mu;
}

PointCount weighted_count(const FqHypersurface& X, std::uint64_t budget) {
    auto pts = enumerate_points_fq(X, budget);
    const std::uint64_t q = X.p;
    const int n = X.n;
    const int delta = X.degree;
    PointCount pc;
    pc.count = static_cast<long>(pts.size());
    Int mumu2 = 0; // sum mu(mu-1)/2
    for (auto& pt : pts) {
        bool smooth = false;
        for (int v = 0; v <= n && !smooth; ++v) {
            // d f / d x_v at pt
            std::uint64_t acc = 0;
            for (const auto& [m, c] : X.terms) {
                if (m[v] == 0) continue;
                std::uint64_t t = (c * (m[v] % q)) % q;
                for (int w = 0; w <= n; ++w) {
                    int e = (w == v) ? m[w] - 1 : m[w];
                    if (e) t = (t * powmod_u64(pt[w], e, q)) % q;
                }
                acc = (acc + t) % q;
            }
            smooth = acc != 0;
        }
        long mu = smooth ? 1 : multiplicity_at(X, pt);
        pc.weighted += mu;
        pc.per_point.emplace_back(pt, mu);
        mumu2 += Int(mu) * (mu - 1) / 2;
    }

    if (n == 2 && delta <= 12) {
        pc.geometrically_integral = is_geometrically_integral_fq(X);
        pc.integrality_known = true;
    }

    const double qd = static_cast<double>(q);
    const bool q_range_ok = (qd <= double(delta) * delta) || (qd >= 27.0 * std::pow(double(delta), 4));

    pc.count_range.lhs = std::abs(static_cast<double>(pc.count) - std::pow(qd, n - 1));
    pc.count_range.rhs = n * double(delta) * delta * std::pow(qd, n - 1.5);
    pc.count_range.applicable = q_range_ok && pc.integrality_known && pc.geometrically_integral;
    pc.count_range.holds = pc.count_range.lhs <= pc.count_range.rhs + kEvalSlack;
    if (!q_range_ok) pc.count_range.note = "delta^2 < q < 27 delta^4: no claim";

    pc.multiplicity.lhs = mumu2.get_d();
    pc.multiplicity.rhs = 0.5 * (n - 1.0) * (n - 1.0) * delta * (delta - 1.0) *
                          std::pow(std::max(qd, delta - 1.0), n - 2.0);
    pc.multiplicity.applicable = pc.integrality_known && pc.geometrically_integral;
    pc.multiplicity.holds = pc.multiplicity.lhs <= pc.multiplicity.rhs + kEvalSlack;

    if (pc.weighted > 0) {
        pc.reciprocal.lhs = std::pow(static_cast<double>(pc.weighted), -1.0 / (n - 1));
        pc.reciprocal.rhs =
            1.0 / qd - n * double(n) * delta * double(delta) / std::pow(std::max(qd, delta - 1.0), 1.5);
        pc.reciprocal.applicable = pc.count_range.applicable;
        pc.reciprocal.holds = pc.reciprocal.lhs >= pc.reciprocal.rhs - kEvalSlack;
    } else {
        pc.reciprocal.applicable = false;
        pc.reciprocal.note = "no rational points: n(X) = 0";
    }
    return pc;
}

bool is_geometrically_integral_fq(const FqHypersurface& X) {
    validate_fq(X);
    if (X.n != 2) fail(ErrorKind::Unsupported, "integrality test is for plane curves");
    if (X.degree > 12) fail(ErrorKind::Unsupported, "degree cap is 12 for the integrality test");
    if (X.degree == 1) return true;
    // a coordinate variable dividing f of degree >= 2 forces a split or a
    // non-reduced fiber
    for (int v = 0; v <= 2; ++v) {
        bool divides = true;
        for (const auto& [m, c] : X.terms) divides = divides && m[v] >= 1;
        if (divides) return false;
    }
    gf::Fp K(X.p);
    gf::BPoly<gf::Fp> f; // dehomogenize z = 1
    f.cy.resize(X.degree + 1);
    for (auto& c : f.cy) c.c.assign(X.degree + 1, 0);
    for (const auto& [m, c] : X.terms) f.cy[m[1]].c[m[0]] = c;
    bp_trim(K, f);
    return gf::is_absolutely_irreducible_fp(K, f);
}

} // namespace arakount
