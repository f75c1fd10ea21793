#ifndef ARAKOUNT_NUMBER_FIELD_HPP
#define ARAKOUNT_NUMBER_FIELD_HPP

#include <cstdint>
#include <string>

#include "arakount/errors.hpp"

namespace arakount {

/// Q or a quadratic field, described by its fundamental discriminant.
struct NumberFieldData {
    std::string label;
    int degree = 1;       ///< [K:Q], 1 or 2
    long abs_disc = 1;    ///< |Delta_K|
    long quad_disc = 0;   ///< fundamental discriminant (quadratic case)

    static NumberFieldData rationals();
    /// Quadratic field Q(sqrt(d)) for a squarefree generator d != 0, 1.
    static NumberFieldData quadratic(long generator);
    /// Parse "Q", "Qi" or "Qsqrt:D" (D a squarefree generator).
    static NumberFieldData parse(const std::string& text);

    double log_disc_plus_degree() const; ///< log|Delta_K| + [K:Q], the GRH envelope factor
};

/// Kronecker symbol (D | p) for a fundamental discriminant D and a prime p.
int kronecker_symbol(long D, std::uint64_t p);

} // namespace arakount

#endif
