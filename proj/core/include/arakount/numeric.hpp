#ifndef ARAKOUNT_NUMERIC_HPP
#define ARAKOUNT_NUMERIC_HPP

#include <cmath>
#include <cstdint>
#include <gmpxx.h>

#include "arakount/errors.hpp"

namespace arakount {

using Int = mpz_class;
using Rat = mpq_class;

/// Natural log of a positive big integer, accurate to double precision
/// regardless of magnitude.
inline double log_int(const Int& z) {
    if (z <= 0) fail(ErrorKind::InvalidParams, "log_int requires a positive argument");
    long exp2 = 0;
    double mant = mpz_get_d_2exp(&exp2, z.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

inline double log_rat(const Rat& q) {
    if (q <= 0) fail(ErrorKind::InvalidParams, "log_rat requires a positive argument");
    return log_int(q.get_num()) - log_int(q.get_den());
}

/// C(a, b) with the convention C(a, b) = 0 whenever b < 0 or a < b.
inline Int binomial(long a, long b) {
    if (b < 0 || a < 0 || a < b) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return r;
}

inline Int factorial(long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

/// Harmonic number 1 + 1/2 + ... + 1/n.
inline double harmonic(int n) {
    double h = 0.0;
    for (int k = 1; k <= n; ++k) h += 1.0 / k;
    return h;
}

inline Int abs_int(const Int& z) {
    Int r;
    mpz_abs(r.get_mpz_t(), z.get_mpz_t());
    return r;
}

/// p-adic valuation of a nonzero integer.
inline long padic_valuation(Int z, const Int& p) {
    if (z == 0) fail(ErrorKind::InvalidParams, "valuation of zero is infinite");
    long v = 0;
    Int q, r;
    for (;;) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), z.get_mpz_t(), p.get_mpz_t());
        if (r != 0) break;
        z = q;
        ++v;
    }
    return v;
}

/// Comparison slack used when checking the paper's strict inequalities in
/// floating point; the margins are wide so a one-sided 1e-9 is ample.
inline constexpr double kEvalSlack = 1e-9;

} // namespace arakount

#endif
