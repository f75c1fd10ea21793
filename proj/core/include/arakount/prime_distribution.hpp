#ifndef ARAKOUNT_PRIME_DISTRIBUTION_HPP
#define ARAKOUNT_PRIME_DISTRIBUTION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arakount/number_field.hpp"
#include "arakount/numeric.hpp"

namespace arakount {

struct PrimeIdealRecord {
    std::uint64_t p;      ///< rational prime below
    int residue_degree;   ///< f in {1, 2}
    std::uint64_t norm;   ///< p^f
};

struct ChebyshevSums {
    double theta = 0.0; ///< sum log N
    double psi = 0.0;   ///< sum log N / N
    double phi = 0.0;   ///< sum log N / N^(3/2)
    double x = 0.0;
};

inline constexpr double kMaxSieveQ = 1e8;
inline constexpr double kMaxSieveQuadratic = 1e7;

/// Rational primes up to `limit`. If cache_path (or $ARAKOUNT_CACHE) names a
/// file it is used when it covers the limit and regenerated otherwise; the
/// format is the 8-byte magic "ARAKPRIM" followed by little-endian u64 primes.
std::vector<std::uint64_t> sieve_primes(std::uint64_t limit,
                                        std::optional<std::string> cache_path = std::nullopt);

/// All prime ideals of O_K of norm <= x, sorted by (norm, p).
std::vector<PrimeIdealRecord> prime_ideals_up_to(const NumberFieldData& K, double x);

ChebyshevSums chebyshev_sums(const NumberFieldData& K, double x);

struct MertensBound {
    double lhs = 0.0; ///< (1/[K:Q]) sum over prime divisors of log N / N
    double rhs = 0.0; ///< log log N(a) + 2
    bool holds = false;
};

/// Lemma bound for a proper ideal of norm >= 2 with the given distinct prime
/// ideal divisors.
MertensBound divisor_mertens_bound(const NumberFieldData& K, const Int& ideal_norm,
                                   const std::vector<PrimeIdealRecord>& prime_divisors);

struct EnvelopeCheck {
    double remainder = 0.0; ///< |observed - main term|
    double envelope = 0.0;
    bool holds = false;
    bool applicable = true;
};

struct GrhEnvelopes {
    double eps1 = 0.0; ///< 528 sqrt(x) log^2 x (log Delta + deg)
    double eps2 = 0.0; ///< 9550 (log Delta + deg)
    double eps3 = 0.0; ///< 2516 (log^2 x / x) (log Delta + deg)
    EnvelopeCheck theta_check; ///< |theta(x) - x| <= eps1, x >= 3
    EnvelopeCheck psi_check;   ///< |psi(x) - log x| <= eps2, x >= 3
    EnvelopeCheck phi_check;   ///< |phi(x) - 3 sqrt 2 / 2 + 2/sqrt x| <= eps3
};

/// Explicit GRH remainder envelopes evaluated against the computed sums.
/// Requires x >= 3 (the theta/psi envelopes carry that hypothesis).
GrhEnvelopes grh_envelopes(const NumberFieldData& K, double x, bool grh_mode = true);

struct KappaBounds {
    double kappa1 = 0.0; ///< sup_{x>=3} eps1(x)/x, attained at x = e^4
    double kappa2 = 0.0; ///< sup over integer delta >= 1 of the §-level combination
    long kappa2_argmax_delta = 1;
};

/// kappa1 = 528 (log Delta + deg) 16 e^-2;
/// kappa2 = sup_{delta >= 1} (-3 log 3 + 2n^2/(3 sqrt 3)
///          + 2 n^2 delta^2 eps3(27 delta^4) + 2 eps2).
KappaBounds kappa_bounds(const NumberFieldData& K, int n, bool grh_mode = true);

} // namespace arakount

#endif
