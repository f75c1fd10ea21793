#include "arakount/polynomial.hpp"

namespace arakount {

std::vector<Monomial> monomials_of_degree(int nvars, int D) {
    std::vector<Monomial> out;
    Monomial cur(nvars, 0);
    // lex-descending enumeration of compositions of D into nvars parts
    auto rec = [&](auto&& self, int var, int rem) -> void {
        if (var == nvars - 1) {
            cur[var] = rem;
            out.push_back(cur);
            return;
        }
        for (int e = rem; e >= 0; --e) {
            cur[var] = e;
            self(self, var + 1, rem - e);
        }
    };
    if (nvars >= 1 && D >= 0) rec(rec, 0, D);
    return out;
}

HomogeneousPolynomial::HomogeneousPolynomial(int nvars,
                                             const std::vector<std::pair<Monomial, Rat>>& terms)
    : nvars_(nvars), degree_(0) {
    if (nvars <= 0) fail(ErrorKind::InvalidPolynomial, "polynomial needs at least one variable");
    for (const auto& [m, c] : terms) {
        if (static_cast<int>(m.size()) != nvars)
            fail(ErrorKind::InvalidPolynomial, "exponent vector length mismatch");
        for (int e : m)
            if (e < 0) fail(ErrorKind::InvalidPolynomial, "negative exponent");
        if (c == 0) continue;
        terms_[m] += c;
        if (terms_[m] == 0) terms_.erase(m);
    }
    if (terms_.empty()) fail(ErrorKind::InvalidPolynomial, "zero polynomial");
    degree_ = monomial_degree(terms_.begin()->first);
    for (const auto& [m, c] : terms_) {
        int d = monomial_degree(m);
        if (d != degree_)
            throw Error(ErrorKind::NonHomogeneous,
                        "degrees " + std::to_string(degree_) + " and " + std::to_string(d));
    }
}

Int HomogeneousPolynomial::evaluate_cleared(const std::vector<Int>& coords) const {
    if (static_cast<int>(coords.size()) != nvars_)
        fail(ErrorKind::InvalidParams, "coordinate count mismatch");
    Int den = 1;
    for (const auto& [m, c] : terms_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    Int acc = 0;
    for (const auto& [m, c] : terms_) {
        Int t = c.get_num() * (den / c.get_den());
        for (int v = 0; v < nvars_; ++v)
            for (int e = 0; e < m[v]; ++e) t *= coords[v];
        acc += t;
    }
    return acc;
}

std::vector<std::pair<Monomial, Int>> HomogeneousPolynomial::primitive_integer_terms() const {
    Int den = 1;
    for (const auto& [m, c] : terms_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<std::pair<Monomial, Int>> out;
    Int content = 0;
    for (const auto& [m, c] : terms_) {
        Int t = c.get_num() * (den / c.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), t.get_mpz_t());
        out.emplace_back(m, t);
    }
    for (auto& [m, t] : out) t /= content;
    if (out.front().second < 0)
        for (auto& [m, t] : out) t = -t;
    return out;
}

HomogeneousPolynomial HomogeneousPolynomial::scaled(const Rat& c) const {
    if (c == 0) fail(ErrorKind::InvalidPolynomial, "scaling by zero");
    std::vector<std::pair<Monomial, Rat>> ts;
    for (const auto& [m, a] : terms_) ts.emplace_back(m, a * c);
    return HomogeneousPolynomial(nvars_, ts);
}

HomogeneousPolynomial HomogeneousPolynomial::widened(int nvars) const {
    if (nvars <= nvars_) return *this;
    std::vector<std::pair<Monomial, Rat>> ts;
    for (const auto& [m, a] : terms_) {
        Monomial w = m;
        w.resize(nvars, 0);
        ts.emplace_back(w, a);
    }
    return HomogeneousPolynomial(nvars, ts);
}

HomogeneousPolynomial make_poly(int nvars, const std::vector<std::pair<Monomial, long>>& terms) {
    std::vector<std::pair<Monomial, Rat>> ts;
    for (const auto& [m, c] : terms) ts.emplace_back(m, Rat(c));
    return HomogeneousPolynomial(nvars, ts);
}

} // namespace arakount
