#ifndef ARAKOUNT_BOUNDS_HPP
#define ARAKOUNT_BOUNDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "arakount/number_field.hpp"
#include "arakount/numeric.hpp"

namespace arakount {

/// Everything in this module lives in natural-log scale: e^(C2) is
/// astronomically large, so the exponentiated constants are never formed.
struct BoundConstants {
    int n = 0;
    int delta = 0;
    double c1 = 0.0;
    double log_c2 = 0.0;      ///< C2(n, K) itself (the theorem uses e^(C2))
    double log_c3 = 0.0;      ///< log C3(n, K)
    double log_c3prime = 0.0; ///< log C3'(n, K)
    double a_n = 0.0;         ///< n / ((n-1) delta^(1/(n-1)))
    double c_ndelta = 0.0;    ///< C(n, delta) of the bad-reduction mass bound
    double kappa1 = 0.0;
    double kappa2 = 0.0;
    double muhat_lower = 0.0; ///< lower bound used for muhat(F_D)/D (0 until a height is supplied)
    bool symbolic = false;    ///< non-GRH mode: unknown constants are named, not valued
    std::vector<std::string> unknowns;
};

enum class BoundKind { Siegel, DeterminantRhs, AuxDegree, CurveCount, NongeomMass };

struct BoundReport {
    BoundKind kind = BoundKind::Siegel;
    double log_value = 0.0;
    bool applicable = false;
    bool symbolic = false;
    std::vector<std::pair<std::string, double>> subterms; ///< signed, sums to log_value
    std::vector<std::string> unknowns;
    std::string note;
};

/// C1(n) = -((2n)^n/(n-1)!)(log 2 + 5 log(n+1) - H_n/2) - (3/2) log(n+1) - 2^(n-1).
double constant_c1(int n);

/// Assemble C2, log C3 and log C3' from the kappa constants; in non-GRH mode
/// the result is symbolic (named unknowns, no numbers).
BoundConstants constants_c2_c3(int n, int delta, const NumberFieldData& K, bool grh_mode);

struct SiegelThreshold {
    double threshold = 0.0; ///< on log B / [K:Q]
    int degree_cap = 0;     ///< 2 delta + n - 1
};

/// If log B/[K:Q] < ((n-1)!/(delta (2n)^n)) h(X) + C1(n), a hypersurface of
/// degree < 2 delta + n - 1 covers S(X;B).
SiegelThreshold siegel_threshold(int n, int delta, double h_X);

/// One reduction datum feeding the determinant threshold.
struct PrimeDatum {
    std::uint64_t norm = 0; ///< N(p)
    long n_points = 0;      ///< n(X_p) > 0
};

/// Right-hand side of the determinant-method inequality at degree D, with
/// muhat(F_D)/D replaced by its uniform lower bound evaluated at the low end
/// of the height interval. Result: the threshold on sup h(P_i).
BoundReport determinant_rhs(int n, int delta, int D, std::pair<double, double> h_interval,
                            const std::vector<PrimeDatum>& primes, const NumberFieldData& K);

enum class AuxVariant { Theorem, Cor1, Cor2 };

/// Log-scale upper bound for the degree of the auxiliary hypersurface.
/// bprime_log_exact, when supplied, replaces the Prop-4.6 upper bound of
/// log b'(X) by an exactly computed value.
BoundReport aux_degree_bound(int n, int delta, const Rat& B, const Rat& H_X,
                             const NumberFieldData& K, AuxVariant variant, bool grh_mode,
                             std::optional<double> bprime_log_exact = std::nullopt);

enum class CurveCountVariant { T61, T62 };

/// Log-scale upper bound on #S(X;B) for plane curves.
BoundReport curve_count_bound(int delta, const Rat& B, const NumberFieldData& K,
                              CurveCountVariant variant, bool grh_mode);

struct NongeomMass {
    double mass_bound = 0.0;       ///< (delta^2-1) h_X + C(n,delta)
    double c_ndelta = 0.0;         ///< C(n,delta)
    double bprime_log_bound = 0.0; ///< Prop 4.6 upper bound of log b'(X); -inf at delta=1
};

NongeomMass nongeom_mass(int n, int delta, double h_X, const NumberFieldData& K, bool grh_mode);

/// Exactly one of the Siegel regime and the determinant-theorem regime
/// applies to a given (n, delta, h_X, B); reports which.
struct RegimeSelection {
    bool siegel = false;
    SiegelThreshold threshold;
};
RegimeSelection select_regime(int n, int delta, double h_X, const Rat& B, const NumberFieldData& K);

} // namespace arakount

#endif
