#ifndef ARAKOUNT_FINITE_FIELD_HPP
#define ARAKOUNT_FINITE_FIELD_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "arakount/gf.hpp"
#include "arakount/polynomial.hpp"

namespace arakount {

/// Point of P^n(F_q) in canonical form: first nonzero coordinate equals 1.
using FqPoint = std::vector<std::uint64_t>;

/// Hypersurface over a prime field, coefficients already reduced mod p.
struct FqHypersurface {
    std::uint64_t p = 0;
    int n = 0; ///< ambient projective dimension
    std::vector<std::pair<Monomial, std::uint64_t>> terms;
    int degree = 0;         ///< degree of the reduced polynomial
    int generic_degree = 0; ///< degree of the characteristic-zero model

    std::uint64_t evaluate(const FqPoint& pt) const;
};

inline constexpr std::uint64_t kMaxFqPrime = 1 << 14;
inline constexpr std::uint64_t kDefaultFqBudget = 100'000'000;

/// Reduce the content-normalized integer model of f modulo p.
FqHypersurface reduce_hypersurface(const HomogeneousPolynomial& f, std::uint64_t p);

/// Build directly from integer coefficient terms (reduced mod p).
FqHypersurface make_fq_hypersurface(std::uint64_t p, int n,
                                    const std::vector<std::pair<Monomial, long>>& terms);

/// Complete list of canonical F_q-points of X, chart by chart; within a chart
/// the free coordinates increase lexicographically.
std::vector<FqPoint> enumerate_points_fq(const FqHypersurface& X,
                                         std::uint64_t budget = kDefaultFqBudget);

/// Multiplicity of a point of X: lowest total degree in the local expansion
/// of the dehomogenized equation at the point.
long multiplicity_at(const FqHypersurface& X, const FqPoint& pt);

struct FqInequality {
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds = false;
    bool applicable = false;
    std::string note;
};

struct PointCount {
    long count = 0;
    long weighted = 0; ///< n(X_{F_q}) = sum of multiplicities
    std::vector<std::pair<FqPoint, long>> per_point;
    FqInequality count_range;     ///< |#X - q^{n-1}| <= n d^2 q^{n-3/2}
    FqInequality multiplicity;    ///< sum mu(mu-1)/2 <= ((n-1)^2/2) d(d-1) max(d-1,q)^{n-2}
    FqInequality reciprocal;      ///< n(X)^{-1/(n-1)} >= 1/q - n^2 d^2 / max(q,d-1)^{3/2}
    bool geometrically_integral = false;
    bool integrality_known = false;
};

/// Point count with multiplicities and the finite-field inequality report.
PointCount weighted_count(const FqHypersurface& X, std::uint64_t budget = kDefaultFqBudget);

/// Absolute irreducibility of a reduced plane curve (n = 2, degree <= 12).
bool is_geometrically_integral_fq(const FqHypersurface& X);

} // namespace arakount

#endif
