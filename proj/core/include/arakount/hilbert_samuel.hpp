#ifndef ARAKOUNT_HILBERT_SAMUEL_HPP
#define ARAKOUNT_HILBERT_SAMUEL_HPP

#include <vector>

#include "arakount/numeric.hpp"

namespace arakount {

/// The local combinatorics of a closed point of multiplicity mu on a
/// degree-delta hypersurface of P^n.
struct HilbertProfile {
    int n;
    int mu;
    int delta;

    HilbertProfile(int n_, int mu_, int delta_) : n(n_), mu(mu_), delta(delta_) {
        if (n < 2) fail(ErrorKind::InvalidParams, "ambient dimension must be >= 2");
        if (mu < 1 || delta < 1 || mu > delta)
            fail(ErrorKind::InvalidParams, "need 1 <= mu <= delta");
    }
};

enum class QConvention {
    Inclusive, ///< Q(m) = q(0) + ... + q(m), m+1 terms
    Strict,    ///< Q(m) = q(0) + ... + q(m-1), m terms
};

/// r(n, D) = C(n+D, D).
Int rank_r(int n, int D);

/// r1(n, D) = C(n+D, n) - C(n+D-delta, n); without delta this is r(n, D).
Int rank_r1(int n, int D);
Int rank_r1(int n, int D, int delta);

/// Local Hilbert-Samuel value of a hypersurface point:
/// H(s) = C(n+s-1, s) - C(n+s-mu-1, s-mu).
Int hs_value(const HilbertProfile& profile, long s);

/// First `count` entries of the q-series (s repeated H(s) times, ascending).
std::vector<long> q_series(const HilbertProfile& profile, std::size_t count);

/// q(m) together with Q(m) in the requested convention.
std::pair<long, Int> q_and_Q(const HilbertProfile& profile, long m, QConvention convention);

/// Closed form U(k) = C(n+k, n) - C(n+k-mu, n) = sum of H(0..k).
Int prefix_sum_closed(const HilbertProfile& profile, long k);

/// Closed form n C(k+n, n+1) - n C(k-mu+n, n+1) - mu C(n+k-mu, n)
/// = sum over j <= k of j*H(j) = strict-convention Q at U(k).
Int checkpoint_closed(const HilbertProfile& profile, long k);

struct AppendixBound {
    double bound;
    Int q_value; ///< inclusive Q(r), the side compared against
    bool holds;  ///< Q(r) > bound strictly
};

/// The explicit lower bound
/// ((n-1)!/mu)^(1/(n-1)) ((n-1)/n) r^(n/(n-1)) - (n^3+2n^2+n-4)/(2n(n+1)) r,
/// checked against inclusive Q(r).
AppendixBound appendix_lower_bound(int n, int mu, long r);

struct RootBounds {
    double lower;
    double upper;
};

/// Bounds (delta/(n-1)!)^(1/(n-1)) (D - (delta-2)) <= r1(n,D)^(1/(n-1))
///     <= (delta/(n-1)!)^(1/(n-1)) (D + n/2), valid for D >= delta + 1.
RootBounds r1_root_bounds(int n, int delta, int D);

} // namespace arakount

#endif
