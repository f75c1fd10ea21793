#include "arakount/hilbert_samuel.hpp"

#include <cmath>

namespace arakount {

Int rank_r(int n, int D) {
    if (n < 1 || D < 1) fail(ErrorKind::InvalidParams, "need n >= 1 and D >= 1");
    return binomial(n + D, D);
}

Int rank_r1(int n, int D) { return rank_r(n, D); }

Int rank_r1(int n, int D, int delta) {
    if (n < 1 || D < 1) fail(ErrorKind::InvalidParams, "need n >= 1 and D >= 1");
    if (delta < 1) fail(ErrorKind::InvalidParams, "need delta >= 1");
    return binomial(n + D, n) - binomial(n + D - delta, n);
}

Int hs_value(const HilbertProfile& profile, long s) {
    if (s < 0) fail(ErrorKind::InvalidParams, "Hilbert-Samuel argument must be >= 0");
    return binomial(profile.n + s - 1, s) - binomial(profile.n + s - profile.mu - 1, s - profile.mu);
}

std::vector<long> q_series(const HilbertProfile& profile, std::size_t count) {
    std::vector<long> q;
    q.reserve(count);
    long s = 0;
    while (q.size() < count) {
        Int h = hs_value(profile, s);
        for (Int i = 0; i < h && q.size() < count; ++i) q.push_back(s);
        ++s;
    }
    return q;
}

std::pair<long, Int> q_and_Q(const HilbertProfile& profile, long m, QConvention convention) {
    if (m < 0) fail(ErrorKind::InvalidParams, "q-series index must be >= 0");
    auto q = q_series(profile, static_cast<std::size_t>(m) + 1);
    Int Q = 0;
    std::size_t upto = (convention == QConvention::Inclusive) ? q.size() : q.size() - 1;
    for (std::size_t i = 0; i < upto; ++i) Q += q[i];
    return {q.back(), Q};
}

Int prefix_sum_closed(const HilbertProfile& profile, long k) {
    return binomial(profile.n + k, profile.n) - binomial(profile.n + k - profile.mu, profile.n);
}

Int checkpoint_closed(const HilbertProfile& profile, long k) {
    long n = profile.n, mu = profile.mu;
    return n * binomial(k + n, n + 1) - n * binomial(k - mu + n, n + 1) -
           mu * binomial(n + k - mu, n);
}

AppendixBound appendix_lower_bound(int n, int mu, long r) {
    if (n < 2 || mu < 1) fail(ErrorKind::InvalidParams, "need n >= 2 and mu >= 1");
    if (r < 1) fail(ErrorKind::InvalidParams, "bound degenerate at r = 0, rejected");
    double fac = log_int(factorial(n - 1)) - std::log(static_cast<double>(mu));
    double lead = std::exp(fac / (n - 1)) * (static_cast<double>(n - 1) / n) *
                  std::pow(static_cast<double>(r), static_cast<double>(n) / (n - 1));
    double lin = (std::pow(static_cast<double>(n), 3) + 2.0 * n * n + n - 4.0) /
                 (2.0 * n * (n + 1.0)) * static_cast<double>(r);
    AppendixBound out;
    out.bound = lead - lin;
    HilbertProfile profile(n, mu, mu); // delta enters nowhere; mu suffices
    out.q_value = q_and_Q(profile, r, QConvention::Inclusive).second;
    out.holds = (out.q_value.get_d() > out.bound);
    return out;
}

RootBounds r1_root_bounds(int n, int delta, int D) {
    if (n < 2 || delta < 1) fail(ErrorKind::InvalidParams, "need n >= 2 and delta >= 1");
    if (D <= delta)
        fail(ErrorKind::HypothesisViolated, "lemma requires D >= delta + 1");
    double c = std::exp((std::log(static_cast<double>(delta)) - log_int(factorial(n - 1))) /
                        (n - 1));
    return {c * (D - (delta - 2)), c * (D + 0.5 * n)};
}

} // namespace arakount
