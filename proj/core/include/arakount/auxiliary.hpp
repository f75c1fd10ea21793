#ifndef ARAKOUNT_AUXILIARY_HPP
#define ARAKOUNT_AUXILIARY_HPP

#include <cstdint>
#include <vector>

#include "arakount/polynomial.hpp"
#include "arakount/projective.hpp"
#include "arakount/rational_points.hpp"

namespace arakount {

/// Rows = points (primitive coordinates), columns = all monomials of degree D
/// in graded-lex order, entries exact.
struct EvaluationMatrix {
    int nvars = 0;
    int D = 0;
    std::vector<Monomial> cols;
    std::vector<ProjectivePoint> rows;
    std::vector<std::vector<Int>> entries;
};

inline constexpr double kDefaultMatrixBudget = 1e7; ///< max entries
inline constexpr int kDefaultDegreeCap = 50;

EvaluationMatrix monomial_matrix(const std::vector<ProjectivePoint>& points, int nvars, int D,
                                 double budget = kDefaultMatrixBudget);

/// Basis of the right nullspace: fraction-free forward elimination with the
/// max-abs-entry pivot rule (ties by row order), reduced echelon
/// normalization, vectors scaled to primitive integers with positive entry at
/// their free column. Vectors are indexed like `cols`.
std::vector<std::vector<Int>> exact_nullspace(const EvaluationMatrix& matrix);

/// Exact rank (computed alongside the nullspace).
int exact_rank(const EvaluationMatrix& matrix);

/// p-adic valuation of the determinant of the square minor picked by
/// `monomial_subset`; SingularMinor if it vanishes.
long padic_det_valuation(const std::vector<ProjectivePoint>& points,
                         const std::vector<Monomial>& monomial_subset, std::uint64_t p);

/// g = q f + r with no term of r divisible by the leading term of f
/// (graded-lex); the single-divisor reduction that witnesses f | g or not.
HomogeneousPolynomial poly_mod(const HomogeneousPolynomial& g, const HomogeneousPolynomial& f,
                               bool* divisible);

struct AuxiliaryCurve {
    HomogeneousPolynomial g;
    int D = 0;
    std::vector<Int> point_values;     ///< exact evaluations at every target point (all zero)
    HomogeneousPolynomial remainder;   ///< nonzero remainder of g mod f (non-divisibility witness)
    bool remainder_zero = false;       ///< always false for a valid certificate
};

/// Smallest D >= 1 with a degree-D form vanishing on all points and not
/// divisible by f, with certificate. Nullspace candidate selection:
/// smallest leading monomial, then smallest max |coefficient|.
AuxiliaryCurve minimal_auxiliary(const HomogeneousPolynomial& f, const PointSet& points,
                                 int degree_cap = kDefaultDegreeCap,
                                 double matrix_budget = kDefaultMatrixBudget);

} // namespace arakount

#endif
