#include "arakount/rational_points.hpp"

#include <algorithm>
#include <future>
#include <thread>

#include "arakount/gf.hpp"

namespace arakount {

namespace {

// primes > 2*10^4 for the z-root lifting; any one not killing the whole
// univariate works, several are kept in case the leading candidates divide
// every coefficient
constexpr std::uint64_t kLiftPrimes[] = {1000003, 1000033, 1000037, 1000039, 1000081, 1000099};

struct ZSolver {
    const HomogeneousPolynomial& f;
    int dz; // degree of f in z
    // coefficient polynomials c_k(x, y) for z^k as integer terms
    std::vector<std::vector<std::pair<Monomial, Int>>> ck;

    explicit ZSolver(const HomogeneousPolynomial& poly) : f(poly) {
        dz = 0;
        for (const auto& [m, c] : f.terms()) dz = std::max(dz, m[2]);
        ck.resize(dz + 1);
        for (const auto& [m, c] : f.primitive_integer_terms()) ck[m[2]].emplace_back(m, c);
    }

    /// Exact coefficients of z -> f(x, y, z).
    std::vector<Int> coefficients(const Int& x, const Int& y) const {
        std::vector<Int> cs(dz + 1);
        for (int k = 0; k <= dz; ++k) {
            Int acc = 0;
            for (const auto& [m, c] : ck[k]) {
                Int t = c;
                for (int e = 0; e < m[0]; ++e) t *= x;
                for (int e = 0; e < m[1]; ++e) t *= y;
                acc += t;
            }
            cs[k] = acc;
        }
        return cs;
    }

    /// All integer roots z with |z| <= B, exactly.
    void integer_roots(const std::vector<Int>& cs, const Int& B, std::vector<Int>& out) const {
        out.clear();
        for (std::uint64_t P : kLiftPrimes) {
            gf::Fp K(P);
            gf::UPoly<gf::Fp> g;
            g.c.resize(cs.size());
            bool all_zero = true;
            for (std::size_t k = 0; k < cs.size(); ++k) {
                Int r = cs[k] % Int(static_cast<unsigned long>(P));
                if (r < 0) r += static_cast<unsigned long>(P);
                g.c[k] = r.get_ui();
                all_zero = all_zero && g.c[k] == 0;
            }
            if (all_zero) continue; // P divides every coefficient; try the next prime
            up_trim(K, g);
            if (up_deg(g) == 0) return; // nonzero constant: no roots at all
            // roots of g over F_P: gcd with x^P - x, then split to linears
            auto xq = up_powmod(K, up_x(K), Int(static_cast<unsigned long>(P)), g);
            auto lin = up_gcd(K, up_sub(K, xq, up_rem(K, up_x(K), g)), g);
            std::vector<gf::UPoly<gf::Fp>> roots;
            if (up_deg(lin) >= 1) {
                std::mt19937_64 rng(0x5eedf00dULL);
                gf::edf(K, lin, 1, rng, roots);
            }
            for (const auto& r : roots) {
                // r = z + c  =>  residue P - c
                std::uint64_t c = r.c.size() > 1 ? r.c[0] : 0;
                std::uint64_t res = c == 0 ? 0 : P - c;
                // lift to [-B, B]; P > 2B ensures at most one candidate each side
                for (Int cand : {Int(static_cast<unsigned long>(res)),
                                 Int(static_cast<unsigned long>(res)) - Int(static_cast<unsigned long>(P))}) {
                    if (cand > B || cand < -B) continue;
                    // exact verification
                    Int val = 0;
                    for (std::size_t k = cs.size(); k-- > 0;) val = val * cand + cs[k];
                    if (val == 0) out.push_back(cand);
                }
            }
            std::sort(out.begin(), out.end());
            out.erase(std::unique(out.begin(), out.end()), out.end());
            return;
        }
        fail(ErrorKind::Unsupported, "no usable lifting prime (coefficients too divisible)");
    }
};

} // namespace

PointSet enumerate_S(const HomogeneousPolynomial& f, const Rat& B, const EnumerationBudget& budget) {
    if (f.nvars() != 3) fail(ErrorKind::Unsupported, "enumeration is for plane curves (n = 2)");
    if (B < 1) fail(ErrorKind::InvalidParams, "height bound must be >= 1");
    if (B > budget.max_B) fail(ErrorKind::BudgetExceeded, "B exceeds the enumeration budget");
    Int Bi = Int(B.get_num() / B.get_den()); // heights are integers: compare against floor(B)
    long Bl = Bi.get_si();
    double pairs = (2.0 * Bl + 1.0) * (2.0 * Bl + 1.0);
    if (pairs > budget.max_pairs) fail(ErrorKind::BudgetExceeded, "raw pair budget exceeded");
    if (2 * static_cast<std::uint64_t>(Bl) >= kLiftPrimes[0])
        fail(ErrorKind::BudgetExceeded, "B too large for the fixed lifting primes");

    PointSet ps;
    ps.curve = f;
    ps.bound = B;
    ZSolver solver(f);

    auto scan_x_range = [&](long x_lo, long x_hi) {
        std::vector<ProjectivePoint> found;
        std::vector<Int> roots;
        for (long x = x_lo; x < x_hi; ++x) {
            for (long y = -Bl; y <= Bl; ++y) {
                auto cs = solver.coefficients(Int(x), Int(y));
                bool all_zero = true;
                for (const auto& c : cs) all_zero = all_zero && c == 0;
                if (all_zero) {
                    // the whole line [x:y:*] lies on the curve
                    for (long z = -Bl; z <= Bl; ++z) {
                        ProjectivePoint p({Int(x), Int(y), Int(z)});
                        if (x == 0 && y == 0 && z == 0) continue;
                        auto c = p.canonical();
                        if (c == p) found.push_back(std::move(c));
                    }
                    continue;
                }
                solver.integer_roots(cs, Bi, roots);
                for (const Int& z : roots) {
                    ProjectivePoint p({Int(x), Int(y), z});
                    auto c = p.canonical();
                    if (c == p) found.push_back(std::move(c));
                }
            }
        }
        return found;
    };

    // canonical points have x > 0, or x = 0 and the scan below
    unsigned slabs = std::max(1u, std::min(std::thread::hardware_concurrency(), 8u));
    if (Bl < 32) slabs = 1;
    std::vector<std::future<std::vector<ProjectivePoint>>> futs;
    for (unsigned s = 0; s < slabs; ++s) {
        long x0 = 1 + (Bl * s) / slabs, x1 = 1 + (Bl * (s + 1)) / slabs;
        futs.push_back(std::async(std::launch::async, scan_x_range, x0, x1));
    }
    // x = 0, y > 0 slab: test f(0, y, z) = 0 directly
    {
        std::vector<Int> roots;
        for (long y = 1; y <= Bl; ++y) {
            auto cs = solver.coefficients(Int(0), Int(y));
            bool all_zero = true;
            for (const auto& c : cs) all_zero = all_zero && c == 0;
            if (all_zero) {
                for (long z = -Bl; z <= Bl; ++z) {
                    ProjectivePoint p({Int(0), Int(y), Int(z)});
                    auto c = p.canonical();
                    if (c == p) ps.points.push_back(std::move(c));
                }
                continue;
            }
            solver.integer_roots(cs, Bi, roots);
            for (const Int& z : roots) {
                ProjectivePoint p({Int(0), Int(y), z});
                auto c = p.canonical();
                if (c == p) ps.points.push_back(std::move(c));
            }
        }
        // [0:0:1]
        if (f.evaluate_cleared({Int(0), Int(0), Int(1)}) == 0) ps.points.push_back(ProjectivePoint{{0, 0, 1}});
    }
    for (auto& fut : futs) {
        auto part = fut.get();
        ps.points.insert(ps.points.end(), part.begin(), part.end());
    }
    std::sort(ps.points.begin(), ps.points.end());
    ps.points.erase(std::unique(ps.points.begin(), ps.points.end()), ps.points.end());
    return ps;
}

std::map<FqPoint, std::vector<ProjectivePoint>> reduction_classes(const PointSet& points,
                                                                  std::uint64_t p) {
    std::map<FqPoint, std::vector<ProjectivePoint>> classes;
    Int pp(static_cast<unsigned long>(p));
    for (const auto& pt : points.points) {
        FqPoint red(pt.coords.size());
        for (std::size_t i = 0; i < pt.coords.size(); ++i) {
            Int r = pt.coords[i] % pp;
            if (r < 0) r += pp;
            red[i] = r.get_ui();
        }
        // canonicalize in P^2(F_p): scale so the first nonzero coordinate is 1
        std::size_t lead = red.size();
        for (std::size_t i = 0; i < red.size(); ++i)
            if (red[i] != 0) {
                lead = i;
                break;
            }
        if (lead == red.size())
            fail(ErrorKind::InvalidParams, "p divides all coordinates of a primitive point");
        gf::Fp K(p);
        std::uint64_t inv = K.inv(red[lead]);
        for (auto& c : red) c = (c * inv) % p;
        classes[red].push_back(pt);
    }
    return classes;
}

std::vector<PrimeVerdict> good_prime_scan(const HomogeneousPolynomial& f, std::uint64_t p_max) {
    if (f.nvars() != 3) fail(ErrorKind::Unsupported, "prime scan is for plane curves");
    if (f.degree() > 12) fail(ErrorKind::Unsupported, "degree cap is 12");
    if (p_max > kMaxFqPrime) fail(ErrorKind::Unsupported, "p_max exceeds the 2^14 cap");
    std::vector<PrimeVerdict> out;
    for (std::uint64_t p = 2; p <= p_max; ++p) {
        bool prime = true;
        for (std::uint64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) {
                prime = false;
                break;
            }
        if (!prime) continue;
        auto X = reduce_hypersurface(f, p);
        out.push_back({p, is_geometrically_integral_fq(X)});
    }
    return out;
}

} // namespace arakount
