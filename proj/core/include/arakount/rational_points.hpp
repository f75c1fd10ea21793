#ifndef ARAKOUNT_RATIONAL_POINTS_HPP
#define ARAKOUNT_RATIONAL_POINTS_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "arakount/finite_field.hpp"
#include "arakount/polynomial.hpp"
#include "arakount/projective.hpp"

namespace arakount {

struct PointSet {
    HomogeneousPolynomial curve;
    Rat bound;
    std::vector<ProjectivePoint> points; ///< canonical, sorted, duplicate-free
};

struct EnumerationBudget {
    // raw (x, y) pairs scanned; (2B+1)^2 must stay under this
    double max_pairs = 4.2e8;
    Rat max_B = Rat(10000);
};

/// Complete S(X;B) for a plane curve over Q: all canonical primitive [x:y:z]
/// with max|coord| <= B and f = 0, in ascending canonical order. Exact
/// arithmetic throughout; the z-coordinate is recovered per (x, y) by modular
/// root-finding plus exact verification.
PointSet enumerate_S(const HomogeneousPolynomial& f, const Rat& B,
                     const EnumerationBudget& budget = {});

/// Partition a point set by componentwise reduction mod p, keys canonical in
/// P^2(F_p). Every key satisfies the reduced equation.
std::map<FqPoint, std::vector<ProjectivePoint>> reduction_classes(const PointSet& points,
                                                                  std::uint64_t p);

struct PrimeVerdict {
    std::uint64_t p;
    bool good; ///< reduction is geometrically integral
};

/// Scan all primes p <= p_max and classify the reduction of V(f).
std::vector<PrimeVerdict> good_prime_scan(const HomogeneousPolynomial& f, std::uint64_t p_max);

} // namespace arakount

#endif
