#include "arakount/prime_distribution.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace arakount {

namespace {

constexpr char kCacheMagic[8] = {'A', 'R', 'A', 'K', 'P', 'R', 'I', 'M'};

std::vector<std::uint64_t> sieve_raw(std::uint64_t limit) {
    std::vector<std::uint64_t> primes;
    if (limit < 2) return primes;
    std::vector<bool> comp((limit + 1) / 2, false); // odd numbers only
    primes.push_back(2);
    for (std::uint64_t i = 3; i <= limit; i += 2) {
        if (comp[i / 2 - 1]) continue;
        primes.push_back(i);
        if (i * i <= limit)
            for (std::uint64_t j = i * i; j <= limit; j += 2 * i) comp[j / 2 - 1] = true;
    }
    return primes;
}

std::optional<std::vector<std::uint64_t>> load_cache(const std::string& path, std::uint64_t limit) {
    std::FILE* f = std::fopen(path.c_str(), "rb");
    if (!f) return std::nullopt;
    char magic[8];
    if (std::fread(magic, 1, 8, f) != 8 || std::memcmp(magic, kCacheMagic, 8) != 0) {
        std::fclose(f);
        return std::nullopt;
    }
    std::vector<std::uint64_t> primes;
    unsigned char buf[8];
    while (std::fread(buf, 1, 8, f) == 8) {
        std::uint64_t v = 0;
        for (int i = 7; i >= 0; --i) v = (v << 8) | buf[i];
        primes.push_back(v);
    }
    std::fclose(f);
    if (primes.empty() || primes.back() < limit) return std::nullopt;
    while (!primes.empty() && primes.back() > limit) primes.pop_back();
    return primes;
}

void store_cache(const std::string& path, const std::vector<std::uint64_t>& primes) {
    std::FILE* f = std::fopen(path.c_str(), "wb");
    if (!f) return;
    std::fwrite(kCacheMagic, 1, 8, f);
    for (std::uint64_t v : primes) {
        unsigned char buf[8];
        for (int i = 0; i < 8; ++i) buf[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xff);
        std::fwrite(buf, 1, 8, f);
    }
    std::fclose(f);
}

} // namespace

std::vector<std::uint64_t> sieve_primes(std::uint64_t limit, std::optional<std::string> cache_path) {
    if (!cache_path) {
        if (const char* env = std::getenv("ARAKOUNT_CACHE")) cache_path = std::string(env);
    }
    if (cache_path) {
        if (auto cached = load_cache(*cache_path, limit)) return *cached;
        auto primes = sieve_raw(limit);
        store_cache(*cache_path, primes);
        return primes;
    }
    return sieve_raw(limit);
}

std::vector<PrimeIdealRecord> prime_ideals_up_to(const NumberFieldData& K, double x) {
    if (x < 0) fail(ErrorKind::InvalidParams, "negative cutoff");
    double cap = (K.degree == 1) ? kMaxSieveQ : kMaxSieveQuadratic;
    if (x > cap) fail(ErrorKind::BudgetExceeded, "cutoff exceeds the sieve budget");
    std::uint64_t lim = static_cast<std::uint64_t>(std::floor(x));
    std::vector<PrimeIdealRecord> out;
    auto primes = sieve_primes(lim);
    if (K.degree == 1) {
        out.reserve(primes.size());
        for (auto p : primes) out.push_back({p, 1, p});
        return out;
    }
    for (auto p : primes) {
        int s = kronecker_symbol(K.quad_disc, p);
        if (s == 1) {
            out.push_back({p, 1, p});
            out.push_back({p, 1, p});
        } else if (s == 0) {
            out.push_back({p, 1, p});
        } else if (double(p) * double(p) <= x) {
            out.push_back({p, 2, p * p});
        }
    }
    std::sort(out.begin(), out.end(), [](const PrimeIdealRecord& a, const PrimeIdealRecord& b) {
        return a.norm != b.norm ? a.norm < b.norm : a.p < b.p;
    });
    return out;
}

ChebyshevSums chebyshev_sums(const NumberFieldData& K, double x) {
    ChebyshevSums s;
    s.x = x;
    if (x < 2) return s;
    for (const auto& rec : prime_ideals_up_to(K, x)) {
        double logN = std::log(static_cast<double>(rec.norm));
        double N = static_cast<double>(rec.norm);
        s.theta += logN;
        s.psi += logN / N;
        s.phi += logN / (N * std::sqrt(N));
    }
    return s;
}

MertensBound divisor_mertens_bound(const NumberFieldData& K, const Int& ideal_norm,
                                   const std::vector<PrimeIdealRecord>& prime_divisors) {
    if (ideal_norm < 2) fail(ErrorKind::InvalidParams, "ideal norm must be >= 2");
    MertensBound b;
    for (const auto& rec : prime_divisors) {
        double N = static_cast<double>(rec.norm);
        b.lhs += std::log(N) / N;
    }
    b.lhs /= K.degree;
    b.rhs = std::log(log_int(ideal_norm)) + 2.0;
    b.holds = b.lhs <= b.rhs + kEvalSlack;
    return b;
}

GrhEnvelopes grh_envelopes(const NumberFieldData& K, double x, bool grh_mode) {
    if (!grh_mode)
        fail(ErrorKind::Unsupported, "explicit envelopes are only available under GRH");
    if (x <= 0) fail(ErrorKind::InvalidParams, "cutoff must be positive");
    const double fac = K.log_disc_plus_degree();
    const double lx = std::log(x);
    GrhEnvelopes env;
    env.eps2 = 9550.0 * fac;
    env.eps3 = 2516.0 * (lx * lx / x) * fac;
    auto sums = chebyshev_sums(K, x);
    if (x >= 3) {
        env.eps1 = 528.0 * std::sqrt(x) * lx * lx * fac;
        env.theta_check = {std::abs(sums.theta - x), env.eps1, false, true};
        env.theta_check.holds = env.theta_check.remainder <= env.theta_check.envelope + kEvalSlack;
        env.psi_check = {std::abs(sums.psi - lx), env.eps2, false, true};
        env.psi_check.holds = env.psi_check.remainder <= env.psi_check.envelope + kEvalSlack;
    } else {
        // theta/psi envelopes are stated for x >= 3 only
        env.theta_check.applicable = false;
        env.psi_check.applicable = false;
    }
    double phi_main = 1.5 * std::sqrt(2.0) - 2.0 / std::sqrt(x);
    env.phi_check = {std::abs(sums.phi - phi_main), env.eps3, false, true};
    env.phi_check.holds = env.phi_check.remainder <= env.phi_check.envelope + kEvalSlack;
    return env;
}

KappaBounds kappa_bounds(const NumberFieldData& K, int n, bool grh_mode) {
    if (!grh_mode)
        fail(ErrorKind::Unsupported, "kappa constants are only explicit under GRH");
    if (n < 2) fail(ErrorKind::InvalidParams, "need n >= 2");
    const double fac = K.log_disc_plus_degree();
    KappaBounds kb;
    // log^2 x / sqrt x is maximized at log x = 4 (x = e^4 >= 3): value 16 e^-2
    kb.kappa1 = 528.0 * fac * 16.0 * std::exp(-2.0);
    double best = -1e300;
    long best_delta = 1;
    for (long delta = 1; delta <= 10000; ++delta) {
        double x = 27.0 * std::pow(static_cast<double>(delta), 4);
        double eps3 = 2516.0 * (std::log(x) * std::log(x) / x) * fac;
        double v = -3.0 * std::log(3.0) + 2.0 * n * n / (3.0 * std::sqrt(3.0)) +
                   2.0 * n * n * double(delta) * double(delta) * eps3 + 2.0 * 9550.0 * fac;
        if (v > best) {
            best = v;
            best_delta = delta;
        }
    }
    kb.kappa2 = best;
    kb.kappa2_argmax_delta = best_delta;
    return kb;
}

} // namespace arakount
