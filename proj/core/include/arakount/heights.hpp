#ifndef ARAKOUNT_HEIGHTS_HPP
#define ARAKOUNT_HEIGHTS_HPP

#include "arakount/polynomial.hpp"
#include "arakount/projective.hpp"

namespace arakount {

/// Height data of a point or form: H is the multiplicative height H_K over
/// the tagged field, h the logarithmic height, h_arakelov the l2-place
/// variant (points only, differs from h by at most log(n+1)/2).
struct HeightValue {
    Rat H;
    double h = 0.0;
    double h_arakelov = 0.0;
};

/// H = max |coord| on the canonical representative; h = log H (degree-[K:Q]
/// fields with rational-integer tuples inherit the same h by extension
/// invariance, H_K = H^[K:Q]).
HeightValue weil_height(const ProjectivePoint& point);

/// (1/2) log(sum coord_i^2) on primitive integer coordinates; the finite
/// places contribute 0 by primitivity.
double arakelov_height(const ProjectivePoint& point);

/// Naive height of a nonzero form: content-normalize to coprime integers,
/// take the max absolute coefficient.
HeightValue naive_poly_height(const HomogeneousPolynomial& f);

/// Interval certain to contain the Arakelov height of the model of V(f):
/// [h - delta(log2 + 5log(n+1) - H_n/2),
///  h + log((n+1)(delta+1))/2 + (delta/2) H_n].
std::pair<double, double> hypersurface_height_interval(const HomogeneousPolynomial& f);

/// Field degree for a point/polynomial field tag ("Q" -> 1, quadratic -> 2).
int field_tag_degree(const std::string& tag);

} // namespace arakount

#endif
