#ifndef ARAKOUNT_POLYNOMIAL_HPP
#define ARAKOUNT_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <vector>

#include "arakount/numeric.hpp"

namespace arakount {

/// Exponent vector; length = number of variables.
using Monomial = std::vector<int>;

inline int monomial_degree(const Monomial& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}

/// Graded-lex, descending: higher total degree first, then lexicographically
/// larger exponent vector (variable 0 strongest).
struct GradedLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = monomial_degree(a), db = monomial_degree(b);
        if (da != db) return da > db;
        return a > b;
    }
};

/// All monomials of total degree D in nvars variables, graded-lex descending.
std::vector<Monomial> monomials_of_degree(int nvars, int D);

/// Sparse homogeneous polynomial with exact rational coefficients.
class HomogeneousPolynomial {
public:
    using TermMap = std::map<Monomial, Rat, GradedLexGreater>;

    HomogeneousPolynomial() : nvars_(0), degree_(0) {}

    /// Builds from (monomial, coefficient) pairs; zero coefficients dropped.
    /// Throws NonHomogeneous when two surviving terms have different degrees,
    /// InvalidPolynomial when no term survives.
    HomogeneousPolynomial(int nvars, const std::vector<std::pair<Monomial, Rat>>& terms);

    int nvars() const { return nvars_; }
    int degree() const { return degree_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    /// den * f(coords) where den is the lcm of the coefficient denominators,
    /// so the result is an exact integer that vanishes iff f(coords) does.
    /// For integer coefficients this is f(coords) itself.
    Int evaluate_cleared(const std::vector<Int>& coords) const;

    /// Primitive integer representative: clear denominators, divide by content,
    /// leading (graded-lex first) coefficient positive.
    std::vector<std::pair<Monomial, Int>> primitive_integer_terms() const;

    /// Same polynomial with all coordinates scaled... returns c * this.
    HomogeneousPolynomial scaled(const Rat& c) const;

    /// Widen to at least `nvars` variables (appends zero exponents).
    HomogeneousPolynomial widened(int nvars) const;

    bool operator==(const HomogeneousPolynomial& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }

private:
    int nvars_;
    int degree_;
    TermMap terms_;
};

/// Convenience: build from integer coefficient terms.
HomogeneousPolynomial make_poly(int nvars, const std::vector<std::pair<Monomial, long>>& terms);

} // namespace arakount

#endif
