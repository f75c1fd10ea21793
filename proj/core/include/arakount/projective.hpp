#ifndef ARAKOUNT_PROJECTIVE_HPP
#define ARAKOUNT_PROJECTIVE_HPP

#include <string>
#include <vector>

#include "arakount/numeric.hpp"

namespace arakount {

/// A rational point of projective space in primitive integer coordinates.
/// Canonical form: gcd of the coordinates is 1 and the first nonzero
/// coordinate is positive, which makes equality plain list equality.
struct ProjectivePoint {
    std::vector<Int> coords;
    std::string field_tag = "Q";

    ProjectivePoint() = default;
    ProjectivePoint(std::vector<Int> cs, std::string tag = "Q");
    ProjectivePoint(std::initializer_list<long> cs, std::string tag = "Q");

    int nvars() const { return static_cast<int>(coords.size()); }

    /// gcd-normalize and fix the sign of the first nonzero coordinate.
    ProjectivePoint canonical() const;
    bool is_canonical() const;

    bool operator==(const ProjectivePoint& o) const { return coords == o.coords; }
    bool operator<(const ProjectivePoint& o) const { return coords < o.coords; }
};

} // namespace arakount

#endif
